#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "dks/graph.hpp"

namespace dks {

// Deterministic draws on top of mt19937_64. std::uniform_int_distribution is
// implementation-defined, so identical spec + seed would not be portable
// through it.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}
    int range(int lo, int hi) { // inclusive
        return lo + static_cast<int>(eng_() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    double real() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }
    bool coin(double p) { return real() < p; }
    std::uint64_t raw() { return eng_(); }

private:
    std::mt19937_64 eng_;
};

enum class InstanceKind { BlockGraph, PlantedDeletion, Cograph, ErdosRenyi };

inline const char *instance_kind_name(InstanceKind k) {
    switch (k) {
    case InstanceKind::BlockGraph: return "block";
    case InstanceKind::PlantedDeletion: return "planted";
    case InstanceKind::Cograph: return "cograph";
    case InstanceKind::ErdosRenyi: return "er";
    }
    return "?";
}

struct InstanceSpec {
    InstanceKind kind = InstanceKind::ErdosRenyi;
    int n = 10;
    int d = 0;         // extra deletion vertices for PlantedDeletion
    int max_block = 4; // block size bound for block-graph construction
    double p = 0.5;    // edge probability for random attachments / ER
    std::uint64_t seed = 0;
};

struct GeneratedInstance {
    Graph graph;
    std::vector<int> planted; // valid deletion set for PlantedDeletion, else empty
};

namespace detail {

// Connected block graph built by gluing random cliques at existing vertices;
// every glued clique becomes one block.
inline void grow_block_graph(Graph &g, Rng &rng, int n, int max_block) {
    if (n <= 0) return;
    int built = 1;
    while (built < n) {
        int glue = rng.range(0, built - 1);
        int want = rng.range(2, std::max(2, max_block));
        int fresh = std::min(want - 1, n - built);
        std::vector<int> verts = {glue};
        for (int i = 0; i < fresh; ++i) verts.push_back(built + i);
        for (std::size_t a = 0; a < verts.size(); ++a)
            for (std::size_t b = a + 1; b < verts.size(); ++b) g.add_edge_unchecked(verts[a], verts[b]);
        built += fresh;
    }
}

inline void grow_cograph(Graph &g, Rng &rng, int lo, int hi) {
    if (hi - lo <= 1) return;
    int split = rng.range(lo + 1, hi - 1);
    grow_cograph(g, rng, lo, split);
    grow_cograph(g, rng, split, hi);
    if (rng.coin(0.5))
        for (int u = lo; u < split; ++u)
            for (int v = split; v < hi; ++v) g.add_edge_unchecked(u, v);
}

} // namespace detail

inline GeneratedInstance generate(const InstanceSpec &spec) {
    if (spec.n < 0) fail(ErrorKind::InvalidSpec, "negative n");
    if (spec.p < 0.0 || spec.p > 1.0) fail(ErrorKind::InvalidSpec, "p outside [0,1]");
    Rng rng(spec.seed);
    GeneratedInstance out{Graph(spec.n), {}};

    switch (spec.kind) {
    case InstanceKind::BlockGraph:
        if (spec.max_block < 2) fail(ErrorKind::InvalidSpec, "max_block must be >= 2");
        detail::grow_block_graph(out.graph, rng, spec.n, spec.max_block);
        break;
    case InstanceKind::PlantedDeletion: {
        if (spec.d < 0 || spec.d > spec.n) fail(ErrorKind::InvalidSpec, "d outside 0..n");
        if (spec.max_block < 2) fail(ErrorKind::InvalidSpec, "max_block must be >= 2");
        int base = spec.n - spec.d;
        detail::grow_block_graph(out.graph, rng, base, spec.max_block);
        for (int v = base; v < spec.n; ++v) {
            for (int u = 0; u < v; ++u)
                if (rng.coin(spec.p)) out.graph.add_edge_unchecked(u, v);
            out.planted.push_back(v);
        }
        break;
    }
    case InstanceKind::Cograph:
        detail::grow_cograph(out.graph, rng, 0, spec.n);
        break;
    case InstanceKind::ErdosRenyi:
        for (int u = 0; u < spec.n; ++u)
            for (int v = u + 1; v < spec.n; ++v)
                if (rng.coin(spec.p)) out.graph.add_edge_unchecked(u, v);
        break;
    }
    out.graph.finalize();
    return out;
}

} // namespace dks
