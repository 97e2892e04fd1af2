#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "dks/errors.hpp"

namespace dks {

using Value = std::int64_t;
using VertexWeights = std::vector<Value>;

enum class Objective { Densest, Sparsest };

inline const char *objective_name(Objective o) {
    return o == Objective::Densest ? "densest" : "sparsest";
}

// Simple undirected graph on dense vertex ids 0..n-1. Neighbor lists are kept
// sorted; immutable once built, so instances can be shared across threads.
class Graph {
public:
    Graph() = default;

    explicit Graph(int n) : adj_(static_cast<std::size_t>(check_n(n))) {}

    Graph(int n, const std::vector<std::pair<int, int>> &edges) : Graph(n) {
        for (auto [u, v] : edges) add_edge(u, v);
        finalize();
    }

    int n() const { return static_cast<int>(adj_.size()); }
    std::int64_t m() const { return m_; }

    const std::vector<int> &neighbors(int v) const {
        check_vertex(v);
        return adj_[static_cast<std::size_t>(v)];
    }

    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        if (u == v) return false;
        const auto &nu = adj_[static_cast<std::size_t>(u)];
        return std::binary_search(nu.begin(), nu.end(), v);
    }

    // Edges as (u, v) with u < v, in lexicographic order.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(static_cast<std::size_t>(m_));
        for (int u = 0; u < n(); ++u)
            for (int v : adj_[static_cast<std::size_t>(u)])
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    bool operator==(const Graph &other) const { return adj_ == other.adj_; }
    bool operator!=(const Graph &other) const { return !(*this == other); }

    // Mutating interface used by builders/generators; duplicate edges and
    // self-loops are errors, not silently ignored.
    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) fail(ErrorKind::SelfLoop, "self-loop at vertex " + std::to_string(u));
        auto &nu = adj_[static_cast<std::size_t>(u)];
        if (std::find(nu.begin(), nu.end(), v) != nu.end())
            fail(ErrorKind::DuplicateEdge,
                 "duplicate edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
        nu.push_back(v);
        adj_[static_cast<std::size_t>(v)].push_back(u);
        ++m_;
        finalized_ = false;
    }

    // Skips the duplicate scan; caller guarantees the edge is new.
    void add_edge_unchecked(int u, int v) {
        adj_[static_cast<std::size_t>(u)].push_back(v);
        adj_[static_cast<std::size_t>(v)].push_back(u);
        ++m_;
        finalized_ = false;
    }

    void finalize() {
        if (finalized_) return;
        for (auto &nb : adj_) std::sort(nb.begin(), nb.end());
        finalized_ = true;
    }

    void check_vertex(int v) const {
        if (v < 0 || v >= n())
            fail(ErrorKind::VertexOutOfRange,
                 "vertex " + std::to_string(v) + " outside 0.." + std::to_string(n() - 1));
    }

private:
    static int check_n(int n) {
        if (n < 0) fail(ErrorKind::MalformedHeader, "negative vertex count");
        return n;
    }

    std::vector<std::vector<int>> adj_;
    std::int64_t m_ = 0;
    bool finalized_ = true;
};

struct SolveResult {
    Value value = 0;
    std::vector<int> witness; // sorted vertex ids, |witness| = k
    std::string strategy;
};

// |E(g[s])|; s must list valid vertex ids (duplicates would double count and
// are rejected).
inline Value edge_count_within(const Graph &g, const std::vector<int> &s) {
    std::vector<char> in(static_cast<std::size_t>(g.n()), 0);
    for (int v : s) {
        g.check_vertex(v);
        if (in[static_cast<std::size_t>(v)])
            fail(ErrorKind::DuplicateEdge, "repeated vertex " + std::to_string(v) + " in set");
        in[static_cast<std::size_t>(v)] = 1;
    }
    Value cnt = 0;
    for (int v : s)
        for (int u : g.neighbors(v))
            if (u > v && in[static_cast<std::size_t>(u)]) ++cnt;
    return cnt;
}

inline Value weight_sum(const VertexWeights &w, const std::vector<int> &s) {
    Value total = 0;
    for (int v : s) total += w[static_cast<std::size_t>(v)];
    return total;
}

// Objective value realized by a witness: induced edges plus chosen weights.
inline Value evaluate_set(const Graph &g, const VertexWeights &w, const std::vector<int> &s) {
    return edge_count_within(g, s) + weight_sum(w, s);
}

inline Graph complement(const Graph &g) {
    Graph out(g.n());
    for (int u = 0; u < g.n(); ++u) {
        const auto &nb = g.neighbors(u);
        std::size_t idx = 0;
        for (int v = u + 1; v < g.n(); ++v) {
            while (idx < nb.size() && nb[idx] < v) ++idx;
            if (idx < nb.size() && nb[idx] == v) continue;
            out.add_edge_unchecked(u, v);
        }
    }
    out.finalize();
    return out;
}

struct InducedSubgraph {
    Graph graph;
    std::vector<int> original_ids; // local id -> original id, ascending
};

inline InducedSubgraph induced_subgraph(const Graph &g, const std::vector<int> &s) {
    std::vector<int> ids(s);
    for (int v : ids) g.check_vertex(v);
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());

    std::vector<int> local(static_cast<std::size_t>(g.n()), -1);
    for (std::size_t i = 0; i < ids.size(); ++i) local[static_cast<std::size_t>(ids[i])] = static_cast<int>(i);

    Graph out(static_cast<int>(ids.size()));
    for (std::size_t i = 0; i < ids.size(); ++i)
        for (int u : g.neighbors(ids[i]))
            if (u > ids[i] && local[static_cast<std::size_t>(u)] >= 0)
                out.add_edge_unchecked(static_cast<int>(i), local[static_cast<std::size_t>(u)]);
    out.finalize();
    return {std::move(out), std::move(ids)};
}

inline std::vector<int> complement_set(int n, const std::vector<int> &s) {
    std::vector<char> in(static_cast<std::size_t>(n), 0);
    for (int v : s) in[static_cast<std::size_t>(v)] = 1;
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(n) - s.size());
    for (int v = 0; v < n; ++v)
        if (!in[static_cast<std::size_t>(v)]) out.push_back(v);
    return out;
}

// ---------------------------------------------------------------------------
// Edge-list file format:
//   '#' comment lines anywhere; first data line "n m"; then m lines "u v"
//   (either endpoint order); optional trailing section: a line "weights"
//   followed by n lines "v w_v". Missing section means all-zero weights.

struct EdgeListFile {
    Graph graph;
    VertexWeights weights; // always length n
};

namespace detail {

inline bool parse_int(const std::string &tok, long long &out) {
    if (tok.empty()) return false;
    std::size_t i = tok[0] == '-' ? 1 : 0;
    if (i == tok.size()) return false;
    for (; i < tok.size(); ++i)
        if (tok[i] < '0' || tok[i] > '9') return false;
    try {
        out = std::stoll(tok);
    } catch (...) {
        return false;
    }
    return true;
}

inline std::vector<std::string> split_ws(const std::string &line) {
    std::vector<std::string> toks;
    std::istringstream iss(line);
    std::string t;
    while (iss >> t) toks.push_back(t);
    return toks;
}

} // namespace detail

inline EdgeListFile read_edge_list(std::istream &in) {
    std::string line;
    int lineno = 0;
    auto next_data_line = [&](std::vector<std::string> &toks) -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            std::size_t first = line.find_first_not_of(" \t\r");
            if (first == std::string::npos) continue;
            if (line[first] == '#') continue;
            toks = detail::split_ws(line);
            return true;
        }
        return false;
    };
    auto where = [&]() { return " (line " + std::to_string(lineno) + ")"; };

    std::vector<std::string> toks;
    if (!next_data_line(toks)) fail(ErrorKind::MalformedHeader, "empty input, expected \"n m\" header");
    long long n = 0, m = 0;
    if (toks.size() != 2 || !detail::parse_int(toks[0], n) || !detail::parse_int(toks[1], m) || n < 0 || m < 0)
        fail(ErrorKind::MalformedHeader, "expected \"n m\" header" + where());

    Graph g(static_cast<int>(n));
    std::set<std::pair<long long, long long>> seen_edges;
    for (long long e = 0; e < m; ++e) {
        if (!next_data_line(toks))
            fail(ErrorKind::MalformedHeader,
                 "expected " + std::to_string(m) + " edges, got " + std::to_string(e) + where());
        long long u = 0, v = 0;
        if (toks.size() != 2 || !detail::parse_int(toks[0], u) || !detail::parse_int(toks[1], v))
            fail(ErrorKind::MalformedHeader, "expected edge \"u v\"" + where());
        if (u < 0 || u >= n || v < 0 || v >= n)
            fail(ErrorKind::VertexOutOfRange, "edge endpoint outside 0.." + std::to_string(n - 1) + where());
        if (u == v) fail(ErrorKind::SelfLoop, "self-loop at vertex " + std::to_string(u) + where());
        if (!seen_edges.emplace(std::min(u, v), std::max(u, v)).second)
            fail(ErrorKind::DuplicateEdge,
                 "duplicate edge {" + std::to_string(u) + "," + std::to_string(v) + "}" + where());
        g.add_edge_unchecked(static_cast<int>(u), static_cast<int>(v));
    }

    VertexWeights w(static_cast<std::size_t>(n), 0);
    if (next_data_line(toks)) {
        if (toks.size() != 1 || toks[0] != "weights")
            fail(ErrorKind::MalformedHeader, "unexpected content after edge list" + where());
        std::vector<char> seen(static_cast<std::size_t>(n), 0);
        for (long long i = 0; i < n; ++i) {
            if (!next_data_line(toks))
                fail(ErrorKind::MalformedHeader, "weights section needs " + std::to_string(n) + " lines" + where());
            long long v = 0, wv = 0;
            if (toks.size() != 2 || !detail::parse_int(toks[0], v) || !detail::parse_int(toks[1], wv))
                fail(ErrorKind::MalformedHeader, "expected weight line \"v w\"" + where());
            if (v < 0 || v >= n)
                fail(ErrorKind::VertexOutOfRange, "weight for vertex outside 0.." + std::to_string(n - 1) + where());
            if (wv < 0) fail(ErrorKind::MalformedHeader, "negative weight" + where());
            if (seen[static_cast<std::size_t>(v)])
                fail(ErrorKind::MalformedHeader, "repeated weight for vertex " + std::to_string(v) + where());
            seen[static_cast<std::size_t>(v)] = 1;
            w[static_cast<std::size_t>(v)] = wv;
        }
        if (next_data_line(toks)) fail(ErrorKind::MalformedHeader, "trailing content" + where());
    }

    g.finalize();
    return {std::move(g), std::move(w)};
}

inline Graph parse_edge_list(std::istream &in) { return read_edge_list(in).graph; }

inline Graph parse_edge_list(const std::string &text) {
    std::istringstream iss(text);
    return parse_edge_list(iss);
}

inline void write_edge_list(std::ostream &out, const Graph &g, const VertexWeights *w = nullptr) {
    out << g.n() << ' ' << g.m() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    if (w != nullptr && std::any_of(w->begin(), w->end(), [](Value x) { return x != 0; })) {
        out << "weights\n";
        for (int v = 0; v < g.n(); ++v) out << v << ' ' << (*w)[static_cast<std::size_t>(v)] << '\n';
    }
}

} // namespace dks
