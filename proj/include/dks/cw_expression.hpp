#pragma once

#include <algorithm>
#include <iterator>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dks/graph.hpp"

namespace dks {

// Clique-width expression AST, arena-allocated. Vertex ids 0,1,2,.. are
// assigned to Introduce nodes in left-to-right parse/construction order, so
// any subtree owns a contiguous id range.
struct CwNode {
    enum class Kind { Introduce, Union, Join, Relabel };
    Kind kind;
    int label_a = 0; // Introduce label; Join/Relabel first label
    int label_b = 0; // Join/Relabel second label
    int child = -1;  // single child, or left child of Union
    int child2 = -1; // right child of Union
    int vertex = -1; // Introduce only
};

struct CwExpression {
    std::vector<CwNode> nodes;
    int root = -1;
    int vertex_count = 0;

    const CwNode &at(int i) const { return nodes[static_cast<std::size_t>(i)]; }

    int label_count() const {
        int c = 1;
        for (const CwNode &n : nodes) c = std::max({c, n.label_a, n.label_b});
        return c;
    }

    int add(CwNode n) {
        nodes.push_back(n);
        return static_cast<int>(nodes.size()) - 1;
    }
    int introduce(int label) {
        CwNode n{CwNode::Kind::Introduce};
        n.label_a = label;
        n.vertex = vertex_count++;
        return add(n);
    }
    int unite(int left, int right) {
        CwNode n{CwNode::Kind::Union};
        n.child = left;
        n.child2 = right;
        return add(n);
    }
    int join(int i, int j, int child) {
        if (i == j) fail(ErrorKind::JoinSameLabel, "join labels must differ, got " + std::to_string(i));
        CwNode n{CwNode::Kind::Join};
        n.label_a = i;
        n.label_b = j;
        n.child = child;
        return add(n);
    }
    int relabel(int i, int j, int child) {
        if (i == j) fail(ErrorKind::RelabelSameLabel, "relabel labels must differ, got " + std::to_string(i));
        CwNode n{CwNode::Kind::Relabel};
        n.label_a = i;
        n.label_b = j;
        n.child = child;
        return add(n);
    }
};

inline bool structurally_equal(const CwExpression &a, const CwExpression &b) {
    if (a.vertex_count != b.vertex_count) return false;
    std::vector<std::pair<int, int>> stack = {{a.root, b.root}};
    while (!stack.empty()) {
        auto [x, y] = stack.back();
        stack.pop_back();
        if ((x < 0) != (y < 0)) return false;
        if (x < 0) continue;
        const CwNode &nx = a.at(x), &ny = b.at(y);
        if (nx.kind != ny.kind || nx.label_a != ny.label_a || nx.label_b != ny.label_b) return false;
        stack.emplace_back(nx.child, ny.child);
        stack.emplace_back(nx.child2, ny.child2);
    }
    return true;
}

// ---------------------------------------------------------------------------
// Concrete syntax (LL(1)):
//   expr := "i(" INT ")" | "u(" expr "," expr ")"
//         | "e(" INT "," INT "," expr ")" | "r(" INT "," INT "," expr ")"
//   INT  := [1-9][0-9]*
// Whitespace is ignored anywhere; '#' starts a comment to end of line.

namespace detail {

class CwParser {
public:
    explicit CwParser(const std::string &text) : text_(text) {}

    CwExpression parse() {
        CwExpression e;
        e.root = parse_expr(e);
        skip_ws();
        if (pos_ < text_.size())
            fail(ErrorKind::SyntaxError, "trailing input at position " + std::to_string(pos_));
        return e;
    }

private:
    void skip_ws() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
            } else if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
                ++pos_;
            } else {
                break;
            }
        }
    }

    char peek() {
        skip_ws();
        if (pos_ >= text_.size()) fail(ErrorKind::SyntaxError, "unexpected end of input");
        return text_[pos_];
    }

    void expect(char c) {
        if (peek() != c)
            fail(ErrorKind::SyntaxError, std::string("expected '") + c + "' at position " + std::to_string(pos_));
        ++pos_;
    }

    int parse_label() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') ++pos_;
        if (pos_ == start) fail(ErrorKind::SyntaxError, "expected label at position " + std::to_string(pos_));
        std::string digits = text_.substr(start, pos_ - start);
        if (digits.size() > 1 && digits[0] == '0')
            fail(ErrorKind::SyntaxError, "leading zero at position " + std::to_string(start));
        long long v = std::stoll(digits);
        if (v < 1) fail(ErrorKind::BadLabel, "label must be >= 1 at position " + std::to_string(start));
        if (v > 1'000'000) fail(ErrorKind::BadLabel, "label too large at position " + std::to_string(start));
        return static_cast<int>(v);
    }

    int parse_expr(CwExpression &e) {
        if (++depth_ > 100000) fail(ErrorKind::SyntaxError, "expression nested too deeply");
        char op = peek();
        ++pos_;
        expect('(');
        int node;
        switch (op) {
        case 'i': {
            node = e.introduce(parse_label());
            break;
        }
        case 'u': {
            int left = parse_expr(e);
            expect(',');
            int right = parse_expr(e);
            node = e.unite(left, right);
            break;
        }
        case 'e': {
            int i = parse_label();
            expect(',');
            int j = parse_label();
            expect(',');
            node = e.join(i, j, parse_expr(e));
            break;
        }
        case 'r': {
            int i = parse_label();
            expect(',');
            int j = parse_label();
            expect(',');
            node = e.relabel(i, j, parse_expr(e));
            break;
        }
        default:
            fail(ErrorKind::SyntaxError,
                 std::string("expected one of i/u/e/r, got '") + op + "' at position " + std::to_string(pos_ - 1));
        }
        expect(')');
        --depth_;
        return node;
    }

    const std::string &text_;
    std::size_t pos_ = 0;
    int depth_ = 0;
};

} // namespace detail

inline CwExpression parse_expression(const std::string &text) { return detail::CwParser(text).parse(); }

inline CwExpression parse_expression(std::istream &in) {
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_expression(text);
}

inline std::string emit_expression(const CwExpression &e) {
    std::string out;
    // Explicit stack with emit-after markers; frames are (node, phase).
    struct Frame {
        int node;
        int phase;
    };
    std::vector<Frame> stack = {{e.root, 0}};
    while (!stack.empty()) {
        auto [node, phase] = stack.back();
        stack.pop_back();
        if (node < 0) continue;
        const CwNode &n = e.at(node);
        switch (n.kind) {
        case CwNode::Kind::Introduce:
            out += "i(" + std::to_string(n.label_a) + ")";
            break;
        case CwNode::Kind::Union:
            if (phase == 0) {
                out += "u(";
                stack.push_back({node, 1});
                stack.push_back({n.child, 0});
            } else if (phase == 1) {
                out += ",";
                stack.push_back({node, 2});
                stack.push_back({n.child2, 0});
            } else {
                out += ")";
            }
            break;
        case CwNode::Kind::Join:
        case CwNode::Kind::Relabel:
            if (phase == 0) {
                out += (n.kind == CwNode::Kind::Join ? "e(" : "r(");
                out += std::to_string(n.label_a) + "," + std::to_string(n.label_b) + ",";
                stack.push_back({node, 1});
                stack.push_back({n.child, 0});
            } else {
                out += ")";
            }
            break;
        }
    }
    return out;
}

struct LabeledGraph {
    Graph graph;
    std::vector<int> labels; // per-vertex label, 1..c
};

// How a join node relates to the edges already present below it. Clean joins
// add every i-j pair, Saturated joins add nothing (all pairs existed), and
// Partial joins add some pairs but not others.
enum class JoinKind { Clean, Saturated, Partial };

namespace detail {

inline LabeledGraph realize_impl(const CwExpression &e, std::vector<JoinKind> *audit) {
    int n = e.vertex_count;
    std::vector<int> labels(static_cast<std::size_t>(n), 0);
    std::vector<std::set<int>> adj(static_cast<std::size_t>(n));
    // (lo, hi) vertex range per node, filled in post-order; subtree ids are
    // contiguous by the introduce-order convention.
    std::vector<std::pair<int, int>> range(e.nodes.size());
    if (audit) audit->assign(e.nodes.size(), JoinKind::Clean);

    std::vector<std::pair<int, bool>> stack = {{e.root, false}};
    while (!stack.empty()) {
        auto [node, expanded] = stack.back();
        stack.pop_back();
        const CwNode &nd = e.at(node);
        if (!expanded) {
            stack.emplace_back(node, true);
            if (nd.child >= 0) stack.emplace_back(nd.child, false);
            if (nd.child2 >= 0) stack.emplace_back(nd.child2, false);
            continue;
        }
        switch (nd.kind) {
        case CwNode::Kind::Introduce:
            labels[static_cast<std::size_t>(nd.vertex)] = nd.label_a;
            range[static_cast<std::size_t>(node)] = {nd.vertex, nd.vertex + 1};
            break;
        case CwNode::Kind::Union: {
            auto [l1, h1] = range[static_cast<std::size_t>(nd.child)];
            auto [l2, h2] = range[static_cast<std::size_t>(nd.child2)];
            range[static_cast<std::size_t>(node)] = {std::min(l1, l2), std::max(h1, h2)};
            break;
        }
        case CwNode::Kind::Join: {
            auto [lo, hi] = range[static_cast<std::size_t>(nd.child)];
            range[static_cast<std::size_t>(node)] = {lo, hi};
            std::vector<int> is, js;
            for (int v = lo; v < hi; ++v) {
                if (labels[static_cast<std::size_t>(v)] == nd.label_a) is.push_back(v);
                if (labels[static_cast<std::size_t>(v)] == nd.label_b) js.push_back(v);
            }
            std::size_t already = 0;
            for (int u : is)
                for (int v : js) {
                    if (adj[static_cast<std::size_t>(u)].count(v)) ++already;
                    adj[static_cast<std::size_t>(u)].insert(v);
                    adj[static_cast<std::size_t>(v)].insert(u);
                }
            if (audit) {
                std::size_t pairs = is.size() * js.size();
                (*audit)[static_cast<std::size_t>(node)] =
                    already == 0 ? JoinKind::Clean
                                 : (already == pairs ? JoinKind::Saturated : JoinKind::Partial);
            }
            break;
        }
        case CwNode::Kind::Relabel: {
            auto [lo, hi] = range[static_cast<std::size_t>(nd.child)];
            range[static_cast<std::size_t>(node)] = {lo, hi};
            for (int v = lo; v < hi; ++v)
                if (labels[static_cast<std::size_t>(v)] == nd.label_a) labels[static_cast<std::size_t>(v)] = nd.label_b;
            break;
        }
        }
    }

    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v : adj[static_cast<std::size_t>(u)])
            if (u < v) g.add_edge_unchecked(u, v);
    g.finalize();
    return {std::move(g), std::move(labels)};
}

} // namespace detail

inline LabeledGraph realize(const CwExpression &e) { return detail::realize_impl(e, nullptr); }

// Per-node join classification (non-join nodes read Clean).
inline std::vector<JoinKind> audit_joins(const CwExpression &e) {
    std::vector<JoinKind> audit;
    detail::realize_impl(e, &audit);
    return audit;
}

// ---------------------------------------------------------------------------
// Cograph decomposition: cographs are exactly the graphs buildable with two
// labels, by alternating disjoint unions (components) and complete joins
// (complement components).

struct CographExpression {
    CwExpression expr;
    std::vector<int> vertex_map; // expression vertex id -> original vertex id
};

namespace detail {

inline std::vector<std::vector<int>> split_components(const Graph &g, const std::vector<int> &verts,
                                                      bool in_complement) {
    std::vector<char> member(static_cast<std::size_t>(g.n()), 0);
    for (int v : verts) member[static_cast<std::size_t>(v)] = 1;
    std::vector<char> seen(static_cast<std::size_t>(g.n()), 0);
    std::vector<std::vector<int>> comps;
    for (int start : verts) {
        if (seen[static_cast<std::size_t>(start)]) continue;
        std::vector<int> comp, stack = {start};
        seen[static_cast<std::size_t>(start)] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            if (!in_complement) {
                for (int u : g.neighbors(v))
                    if (member[static_cast<std::size_t>(u)] && !seen[static_cast<std::size_t>(u)]) {
                        seen[static_cast<std::size_t>(u)] = 1;
                        stack.push_back(u);
                    }
            } else {
                for (int u : verts)
                    if (u != v && !seen[static_cast<std::size_t>(u)] && !g.has_edge(u, v)) {
                        seen[static_cast<std::size_t>(u)] = 1;
                        stack.push_back(u);
                    }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    std::sort(comps.begin(), comps.end());
    return comps;
}

inline int build_cograph_expr(const Graph &g, const std::vector<int> &verts, CwExpression &e,
                              std::vector<int> &vmap) {
    if (verts.size() == 1) {
        int node = e.introduce(1);
        vmap.push_back(verts[0]);
        return node;
    }
    auto comps = split_components(g, verts, false);
    if (comps.size() >= 2) {
        int acc = build_cograph_expr(g, comps[0], e, vmap);
        for (std::size_t i = 1; i < comps.size(); ++i)
            acc = e.unite(acc, build_cograph_expr(g, comps[i], e, vmap));
        return acc;
    }
    auto cocomps = split_components(g, verts, true);
    if (cocomps.size() >= 2) {
        // Fold complete joins: keep the accumulated part labeled 1, bring
        // each next part in labeled 2, join, then relabel back to 1.
        int acc = build_cograph_expr(g, cocomps[0], e, vmap);
        for (std::size_t i = 1; i < cocomps.size(); ++i) {
            int part = e.relabel(1, 2, build_cograph_expr(g, cocomps[i], e, vmap));
            acc = e.relabel(2, 1, e.join(1, 2, e.unite(acc, part)));
        }
        return acc;
    }
    fail(ErrorKind::NotCograph, "induced P4 found: graph and complement both connected on " +
                                    std::to_string(verts.size()) + " vertices");
}

} // namespace detail

// Builds a 2-label expression realizing g (cographs only). The returned map
// sends expression vertex ids to g's vertex ids.
inline CographExpression cograph_to_expression(const Graph &g) {
    if (g.n() == 0) fail(ErrorKind::NotCograph, "empty graph has no expression");
    CographExpression out;
    std::vector<int> all(static_cast<std::size_t>(g.n()));
    for (int v = 0; v < g.n(); ++v) all[static_cast<std::size_t>(v)] = v;
    out.expr.root = detail::build_cograph_expr(g, all, out.expr, out.vertex_map);
    return out;
}

inline bool is_cograph(const Graph &g) {
    if (g.n() == 0) return true;
    try {
        cograph_to_expression(g);
        return true;
    } catch (const Error &e) {
        if (e.kind() == ErrorKind::NotCograph) return false;
        throw;
    }
}

} // namespace dks
