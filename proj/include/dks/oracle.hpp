#pragma once

#include <vector>

#include "dks/graph.hpp"

namespace dks {

// Enumerates k-subsets of 0..n-1 in lexicographic order. Callback gets the
// current subset; returning false stops early.
template <typename F>
void for_each_k_subset(int n, int k, F &&visit) {
    if (k < 0 || k > n) return;
    std::vector<int> s(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) s[static_cast<std::size_t>(i)] = i;
    while (true) {
        if (!visit(static_cast<const std::vector<int> &>(s))) return;
        int i = k - 1;
        while (i >= 0 && s[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) return;
        ++s[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) s[static_cast<std::size_t>(j)] = s[static_cast<std::size_t>(j - 1)] + 1;
    }
}

// Exhaustive reference solver. Deliberately free of shortcuts: every other
// solver in the suite is tested against it. Ties go to the lexicographically
// smallest witness, which lexicographic enumeration yields for free.
inline SolveResult brute_force_solve(const Graph &g, const VertexWeights &w, int k, Objective obj) {
    if (k < 0 || k > g.n())
        fail(ErrorKind::KTooLarge, "k=" + std::to_string(k) + " with n=" + std::to_string(g.n()));
    if (w.size() != static_cast<std::size_t>(g.n()))
        fail(ErrorKind::WeightLengthMismatch, "weights length " + std::to_string(w.size()) +
                                                  " for n=" + std::to_string(g.n()));

    SolveResult best;
    best.strategy = "oracle";
    bool have = false;
    for_each_k_subset(g.n(), k, [&](const std::vector<int> &s) {
        Value val = evaluate_set(g, w, s);
        bool better = !have || (obj == Objective::Densest ? val > best.value : val < best.value);
        if (better) {
            best.value = val;
            best.witness = s;
            have = true;
        }
        return true;
    });
    if (!have) { // k == 0: the empty set is the unique candidate
        best.value = 0;
        best.witness.clear();
    }
    return best;
}

inline SolveResult brute_force_solve(const Graph &g, int k, Objective obj) {
    return brute_force_solve(g, VertexWeights(static_cast<std::size_t>(g.n()), 0), k, obj);
}

} // namespace dks
