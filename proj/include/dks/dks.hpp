#pragma once

#include "dks/approx.hpp"
#include "dks/block_dp.hpp"
#include "dks/block_structure.hpp"
#include "dks/cw_dp.hpp"
#include "dks/cw_expression.hpp"
#include "dks/deletion.hpp"
#include "dks/errors.hpp"
#include "dks/generate.hpp"
#include "dks/graph.hpp"
#include "dks/nd_iqp.hpp"
#include "dks/oracle.hpp"
#include "dks/param_toolkit.hpp"
#include "dks/solvers.hpp"
#include "dks/strategy.hpp"
