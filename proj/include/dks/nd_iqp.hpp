#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "dks/graph.hpp"

namespace dks {

// Twin-class partition: each module is a maximal set of vertices sharing the
// same neighborhood apart from themselves; every module induces a clique or
// an independent set, and module pairs are either fully joined or not at all.
struct NdPartition {
    std::vector<std::vector<int>> modules; // sorted vertex lists, ordered by smallest member
    std::vector<bool> is_clique;           // singletons count as cliques

    int count() const { return static_cast<int>(modules.size()); }
    int module_size(int i) const { return static_cast<int>(modules[static_cast<std::size_t>(i)].size()); }
};

struct TypeGraph {
    Graph quotient; // vertex per module, edge iff completely joined
};

struct IqpInstance {
    int variables = 0;
    Objective sense = Objective::Densest;
    int k = 0;
    std::vector<int> bounds;                 // 0 <= x_i <= m_i
    std::vector<std::vector<int>> quadratic; // symmetric, entries in {0, 1}
    std::vector<int> linear;                 // entries in {0, -1}
};

// Modules via canonical neighborhood keys: u,v are twins iff N(u) = N(v)
// (false twins) or N[u] = N[v] (true twins). No vertex can have both kinds
// of twin, so the union of the two groupings is already an equivalence; the
// union-find pass just collects its classes.
inline NdPartition compute_nd_partition(const Graph &g) {
    const int n = g.n();
    std::vector<int> parent(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) parent[static_cast<std::size_t>(v)] = v;
    std::function<int(int)> find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    auto unite = [&](int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    };

    std::map<std::vector<int>, int> open_key, closed_key;
    for (int v = 0; v < n; ++v) {
        std::vector<int> open = g.neighbors(v);
        auto [it, fresh] = open_key.try_emplace(open, v);
        if (!fresh) unite(it->second, v);
        std::vector<int> closed = open;
        closed.insert(std::lower_bound(closed.begin(), closed.end(), v), v);
        auto [jt, fresh2] = closed_key.try_emplace(closed, v);
        if (!fresh2) unite(jt->second, v);
    }

    std::map<int, std::vector<int>> classes;
    for (int v = 0; v < n; ++v) classes[find(v)].push_back(v);

    NdPartition p;
    for (auto &[root, verts] : classes) {
        bool clique = verts.size() < 2 || g.has_edge(verts[0], verts[1]);
        p.modules.push_back(std::move(verts));
        p.is_clique.push_back(clique);
    }
    return p;
}

// Quotient over the modules; verifies the all-or-nothing cross-edge
// invariant while building.
inline TypeGraph build_type_graph(const Graph &g, const NdPartition &p) {
    const int t = p.count();
    {
        std::vector<char> seen(static_cast<std::size_t>(g.n()), 0);
        std::size_t covered = 0;
        for (const auto &mod : p.modules)
            for (int v : mod) {
                g.check_vertex(v);
                if (seen[static_cast<std::size_t>(v)])
                    fail(ErrorKind::InvalidPartition, "vertex " + std::to_string(v) + " in two modules");
                seen[static_cast<std::size_t>(v)] = 1;
                ++covered;
            }
        if (covered != static_cast<std::size_t>(g.n()))
            fail(ErrorKind::InvalidPartition, "modules do not cover every vertex");
    }

    std::vector<int> module_of(static_cast<std::size_t>(g.n()), -1);
    for (int i = 0; i < t; ++i)
        for (int v : p.modules[static_cast<std::size_t>(i)]) module_of[static_cast<std::size_t>(v)] = i;

    std::vector<std::vector<std::int64_t>> cross(static_cast<std::size_t>(t),
                                                 std::vector<std::int64_t>(static_cast<std::size_t>(t), 0));
    for (auto [u, v] : g.edges()) {
        int a = module_of[static_cast<std::size_t>(u)], b = module_of[static_cast<std::size_t>(v)];
        if (a != b) {
            ++cross[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
            ++cross[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)];
        }
    }

    Graph q(t);
    for (int i = 0; i < t; ++i)
        for (int j = i + 1; j < t; ++j) {
            std::int64_t have = cross[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            std::int64_t full = static_cast<std::int64_t>(p.module_size(i)) * p.module_size(j);
            if (have == full)
                q.add_edge_unchecked(i, j);
            else if (have != 0)
                fail(ErrorKind::InvalidPartition, "modules " + std::to_string(i) + " and " + std::to_string(j) +
                                                      " are partially joined (" + std::to_string(have) + "/" +
                                                      std::to_string(full) + " edges)");
        }
    q.finalize();
    return {std::move(q)};
}

// Doubled objective sum 2 x_i x_j over type edges plus sum x_i(x_i - 1) over
// clique modules, encoded as x^T Q x + q x with every entry in {-1, 0, 1}.
inline IqpInstance emit_iqp(const NdPartition &p, const TypeGraph &tg, int k, Objective obj) {
    const int t = p.count();
    std::int64_t n = 0;
    for (int i = 0; i < t; ++i) n += p.module_size(i);
    if (k < 0 || k > n) fail(ErrorKind::KTooLarge, "k=" + std::to_string(k) + " with n=" + std::to_string(n));

    IqpInstance q;
    q.variables = t;
    q.sense = obj;
    q.k = k;
    q.bounds.resize(static_cast<std::size_t>(t));
    q.quadratic.assign(static_cast<std::size_t>(t), std::vector<int>(static_cast<std::size_t>(t), 0));
    q.linear.assign(static_cast<std::size_t>(t), 0);
    for (int i = 0; i < t; ++i) {
        q.bounds[static_cast<std::size_t>(i)] = p.module_size(i);
        if (p.is_clique[static_cast<std::size_t>(i)]) {
            q.quadratic[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
            q.linear[static_cast<std::size_t>(i)] = -1;
        }
    }
    for (auto [i, j] : tg.quotient.edges()) {
        q.quadratic[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 1;
        q.quadratic[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = 1;
    }
    return q;
}

// (x^T Q x + q x) / 2: the induced edge count of any set realizing x.
inline Value iqp_objective(const IqpInstance &inst, const std::vector<int> &x) {
    Value doubled = 0;
    for (int i = 0; i < inst.variables; ++i) {
        for (int j = 0; j < inst.variables; ++j)
            doubled += static_cast<Value>(inst.quadratic[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) *
                       x[static_cast<std::size_t>(i)] * x[static_cast<std::size_t>(j)];
        doubled += static_cast<Value>(inst.linear[static_cast<std::size_t>(i)]) * x[static_cast<std::size_t>(i)];
    }
    return doubled / 2;
}

// Plain-text serialization, one instance per stream.
inline std::string format_iqp(const IqpInstance &inst) {
    std::string out = "iqp " + std::to_string(inst.variables) + " " +
                      std::string(inst.sense == Objective::Densest ? "max" : "min") + "\n";
    out += "k " + std::to_string(inst.k) + "\n";
    out += "bounds";
    for (int b : inst.bounds) out += " " + std::to_string(b);
    out += "\nQ\n";
    for (const auto &row : inst.quadratic) {
        for (std::size_t j = 0; j < row.size(); ++j) out += (j ? " " : "") + std::to_string(row[j]);
        out += "\n";
    }
    out += "q\n";
    for (std::size_t j = 0; j < inst.linear.size(); ++j)
        out += (j ? " " : "") + std::to_string(inst.linear[static_cast<std::size_t>(j)]);
    out += "\n";
    return out;
}

// Takes the x_i lowest-id vertices of each module; twins are exchangeable,
// so the choice within a module never matters.
inline std::vector<int> materialize_composition(const NdPartition &p, const std::vector<int> &x) {
    std::vector<int> witness;
    for (int i = 0; i < p.count(); ++i)
        for (int j = 0; j < x[static_cast<std::size_t>(i)]; ++j)
            witness.push_back(p.modules[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    std::sort(witness.begin(), witness.end());
    return witness;
}

// Exact solver by enumerating the bounded compositions of k over the
// modules. Lexicographic enumeration, strict improvement: deterministic.
inline SolveResult solve_nd(const Graph &g, int k, Objective obj,
                            std::int64_t composition_cap = 100'000'000) {
    if (k < 0 || k > g.n())
        fail(ErrorKind::KTooLarge, "k=" + std::to_string(k) + " with n=" + std::to_string(g.n()));

    NdPartition p = compute_nd_partition(g);
    TypeGraph tg = build_type_graph(g, p);
    IqpInstance inst = emit_iqp(p, tg, k, obj);
    const int t = p.count();

    // Count compositions first (saturating) so oversized spaces fail fast.
    {
        std::vector<std::int64_t> ways(static_cast<std::size_t>(k) + 1, 0);
        ways[0] = 1;
        for (int i = 0; i < t; ++i) {
            std::vector<std::int64_t> next(static_cast<std::size_t>(k) + 1, 0);
            for (int r = 0; r <= k; ++r) {
                if (ways[static_cast<std::size_t>(r)] == 0) continue;
                for (int x = 0; x <= inst.bounds[static_cast<std::size_t>(i)] && r + x <= k; ++x) {
                    next[static_cast<std::size_t>(r + x)] += ways[static_cast<std::size_t>(r)];
                    if (next[static_cast<std::size_t>(r + x)] > composition_cap)
                        fail(ErrorKind::CompositionSpaceTooLarge,
                             "more than " + std::to_string(composition_cap) + " compositions");
                }
            }
            ways = std::move(next);
        }
    }

    std::vector<std::int64_t> suffix(static_cast<std::size_t>(t) + 1, 0);
    for (int i = t - 1; i >= 0; --i)
        suffix[static_cast<std::size_t>(i)] = suffix[static_cast<std::size_t>(i) + 1] + inst.bounds[static_cast<std::size_t>(i)];

    std::vector<int> x(static_cast<std::size_t>(t), 0), best_x;
    Value best = 0;
    bool have = false;
    // Depth-first over positions with a running objective value; every branch
    // taken extends to at least one full composition.
    std::function<void(int, int, Value)> recurse = [&](int i, int remaining, Value acc) {
        if (i == t) {
            if (!have || (obj == Objective::Densest ? acc > best : acc < best)) {
                best = acc;
                best_x = x;
                have = true;
            }
            return;
        }
        int lo = static_cast<int>(std::max<std::int64_t>(0, remaining - suffix[static_cast<std::size_t>(i) + 1]));
        int hi = std::min(inst.bounds[static_cast<std::size_t>(i)], remaining);
        for (int xi = lo; xi <= hi; ++xi) {
            Value gain = 0;
            for (int j : tg.quotient.neighbors(i))
                if (j < i) gain += static_cast<Value>(x[static_cast<std::size_t>(j)]) * xi;
            if (p.is_clique[static_cast<std::size_t>(i)]) gain += static_cast<Value>(xi) * (xi - 1) / 2;
            x[static_cast<std::size_t>(i)] = xi;
            recurse(i + 1, remaining - xi, acc + gain);
        }
        x[static_cast<std::size_t>(i)] = 0;
    };
    recurse(0, k, 0);
    if (!have) fail(ErrorKind::KTooLarge, "no composition found (internal)");

    SolveResult res;
    res.value = best;
    res.witness = materialize_composition(p, best_x);
    res.strategy = "nd-enum";
    return res;
}

} // namespace dks
