#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "dks/block_structure.hpp"
#include "dks/graph.hpp"
#include "dks/nd_iqp.hpp"

namespace dks {

namespace detail {

inline bool vc_branch(const Graph &g, std::vector<char> &in_cover, int budget) {
    int eu = -1, ev = -1;
    for (int u = 0; u < g.n() && eu < 0; ++u) {
        if (in_cover[static_cast<std::size_t>(u)]) continue;
        for (int v : g.neighbors(u))
            if (!in_cover[static_cast<std::size_t>(v)]) {
                eu = u;
                ev = v;
                break;
            }
    }
    if (eu < 0) return true;
    if (budget == 0) return false;
    for (int pick : {eu, ev}) {
        in_cover[static_cast<std::size_t>(pick)] = 1;
        if (vc_branch(g, in_cover, budget - 1)) return true;
        in_cover[static_cast<std::size_t>(pick)] = 0;
    }
    return false;
}

inline std::optional<std::array<int, 3>> find_induced_p3(const Graph &g, const std::vector<char> &deleted) {
    for (int b = 0; b < g.n(); ++b) {
        if (deleted[static_cast<std::size_t>(b)]) continue;
        const auto &nb = g.neighbors(b);
        for (std::size_t i = 0; i < nb.size(); ++i) {
            if (deleted[static_cast<std::size_t>(nb[i])]) continue;
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                if (deleted[static_cast<std::size_t>(nb[j])]) continue;
                if (!g.has_edge(nb[i], nb[j])) return std::array<int, 3>{nb[i], b, nb[j]};
            }
        }
    }
    return std::nullopt;
}

inline std::optional<std::array<int, 4>> find_induced_p4(const Graph &g, const std::vector<char> &deleted) {
    auto alive = [&](int v) { return !deleted[static_cast<std::size_t>(v)]; };
    for (int a = 0; a < g.n(); ++a) {
        if (!alive(a)) continue;
        for (int b : g.neighbors(a)) {
            if (!alive(b)) continue;
            for (int c : g.neighbors(b)) {
                if (!alive(c) || c == a || g.has_edge(a, c)) continue;
                for (int d : g.neighbors(c)) {
                    if (!alive(d) || d == a || d == b) continue;
                    if (a > d) continue; // path reversal symmetry
                    if (!g.has_edge(a, d) && !g.has_edge(b, d)) return std::array<int, 4>{a, b, c, d};
                }
            }
        }
    }
    return std::nullopt;
}

template <typename Finder>
bool obstruction_branch(const Graph &g, std::vector<char> &deleted, int budget, Finder &&find) {
    auto hit = find(g, deleted);
    if (!hit) return true;
    if (budget == 0) return false;
    for (int v : *hit) {
        deleted[static_cast<std::size_t>(v)] = 1;
        if (obstruction_branch(g, deleted, budget - 1, find)) return true;
        deleted[static_cast<std::size_t>(v)] = 0;
    }
    return false;
}

inline std::vector<int> collect_marked(const std::vector<char> &mark) {
    std::vector<int> out;
    for (std::size_t v = 0; v < mark.size(); ++v)
        if (mark[v]) out.push_back(static_cast<int>(v));
    return out;
}

} // namespace detail

inline bool is_cluster_graph(const Graph &g) {
    std::vector<char> none(static_cast<std::size_t>(g.n()), 0);
    return !detail::find_induced_p3(g, none).has_value();
}

inline bool is_p4_free(const Graph &g) {
    std::vector<char> none(static_cast<std::size_t>(g.n()), 0);
    return !detail::find_induced_p4(g, none).has_value();
}

// 2-way branching on an uncovered edge, iterative deepening; first cover
// found at the succeeding depth is returned (deterministic). budget < 0
// means unbounded (a cover of size n always exists).
inline std::vector<int> min_vertex_cover(const Graph &g, int budget = -1) {
    int limit = budget < 0 ? g.n() : std::min(budget, g.n());
    for (int size = 0; size <= limit; ++size) {
        std::vector<char> in_cover(static_cast<std::size_t>(g.n()), 0);
        if (detail::vc_branch(g, in_cover, size)) return detail::collect_marked(in_cover);
    }
    fail(ErrorKind::BudgetExceeded, "no vertex cover within budget " + std::to_string(budget));
}

// Edges whose endpoints are not closed-neighborhood twins; only these need
// covering in a twin cover.
inline std::vector<std::pair<int, int>> non_twin_edges(const Graph &g) {
    std::vector<std::pair<int, int>> out;
    for (auto [u, v] : g.edges()) {
        std::vector<int> cu = g.neighbors(u), cv = g.neighbors(v);
        cu.insert(std::lower_bound(cu.begin(), cu.end(), u), u);
        cv.insert(std::lower_bound(cv.begin(), cv.end(), v), v);
        if (cu != cv) out.emplace_back(u, v);
    }
    return out;
}

// X is a twin cover of g iff X is a vertex cover of (V, non-twin edges).
inline std::vector<int> min_twin_cover(const Graph &g, int budget = -1) {
    Graph h(g.n());
    for (auto [u, v] : non_twin_edges(g)) h.add_edge_unchecked(u, v);
    h.finalize();
    return min_vertex_cover(h, budget);
}

// 3-way branching on an induced P3 (cluster graphs are the P3-free graphs).
inline std::vector<int> min_cluster_deletion_set(const Graph &g, int budget = -1) {
    int limit = budget < 0 ? g.n() : std::min(budget, g.n());
    for (int size = 0; size <= limit; ++size) {
        std::vector<char> deleted(static_cast<std::size_t>(g.n()), 0);
        if (detail::obstruction_branch(g, deleted, size,
                                       [](const Graph &gr, const std::vector<char> &del) {
                                           return detail::find_induced_p3(gr, del);
                                       }))
            return detail::collect_marked(deleted);
    }
    fail(ErrorKind::BudgetExceeded, "no cluster deletion set within budget " + std::to_string(budget));
}

// 4-way branching on an induced P4 (cographs are the P4-free graphs).
inline std::vector<int> min_cograph_deletion_set(const Graph &g, int budget = -1) {
    int limit = budget < 0 ? g.n() : std::min(budget, g.n());
    for (int size = 0; size <= limit; ++size) {
        std::vector<char> deleted(static_cast<std::size_t>(g.n()), 0);
        if (detail::obstruction_branch(g, deleted, size,
                                       [](const Graph &gr, const std::vector<char> &del) {
                                           return detail::find_induced_p4(gr, del);
                                       }))
            return detail::collect_marked(deleted);
    }
    fail(ErrorKind::BudgetExceeded, "no cograph deletion set within budget " + std::to_string(budget));
}

struct ParamReport {
    int nd = 0, vc = 0, tc = 0, cd = 0, bd = 0, cod = 0;
    NdPartition nd_partition;
    std::vector<int> vc_set, tc_set, cd_set, bd_set, cod_set;
    bool pass = true;
    std::vector<std::string> violations;
};

// Computes all six parameters and checks bd <= cd <= tc <= vc plus
// nd <= 2^tc + tc. Desk scale: every finder here is exhaustive.
inline ParamReport check_parameter_inequalities(const Graph &g) {
    ParamReport r;
    r.nd_partition = compute_nd_partition(g);
    r.nd = r.nd_partition.count();
    r.vc_set = min_vertex_cover(g);
    r.tc_set = min_twin_cover(g);
    r.cd_set = min_cluster_deletion_set(g);
    r.bd_set = find_min_block_deletion_set(g, g.n());
    r.cod_set = min_cograph_deletion_set(g);
    r.vc = static_cast<int>(r.vc_set.size());
    r.tc = static_cast<int>(r.tc_set.size());
    r.cd = static_cast<int>(r.cd_set.size());
    r.bd = static_cast<int>(r.bd_set.size());
    r.cod = static_cast<int>(r.cod_set.size());

    auto expect = [&](bool ok, const std::string &what) {
        if (!ok) {
            r.pass = false;
            r.violations.push_back(what);
        }
    };
    expect(r.bd <= r.cd, "bd <= cd");
    expect(r.cd <= r.tc, "cd <= tc");
    expect(r.tc <= r.vc, "tc <= vc");
    if (r.tc < 62) expect(static_cast<std::int64_t>(r.nd) <= (std::int64_t{1} << r.tc) + r.tc, "nd <= 2^tc + tc");
    return r;
}

inline nlohmann::json param_report_to_json(const ParamReport &r) {
    nlohmann::json j;
    j["nd"] = r.nd;
    j["vc"] = r.vc;
    j["tc"] = r.tc;
    j["cd"] = r.cd;
    j["bd"] = r.bd;
    j["cod"] = r.cod;
    j["witnesses"] = {
        {"nd_modules", r.nd_partition.modules}, {"vc", r.vc_set}, {"tc", r.tc_set},
        {"cd", r.cd_set},                       {"bd", r.bd_set}, {"cod", r.cod_set},
    };
    j["pass"] = r.pass;
    if (!r.violations.empty()) j["violations"] = r.violations;
    return j;
}

} // namespace dks
