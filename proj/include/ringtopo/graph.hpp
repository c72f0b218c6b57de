#pragma once

// Finite simple graphs over vertex indices, with optional loops (needed by
// the loop-carrying ring graphs that feed tensor products).

#include <algorithm>
#include <cstdint>
#include <optional>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ringtopo {

class Graph {
public:
    Graph() = default;
    explicit Graph(int p, bool loops_allowed = false) : p_(p), loops_allowed_(loops_allowed) {
        if (p < 0) throw std::invalid_argument("negative vertex count");
        words_ = (static_cast<std::size_t>(p) + 63) / 64;
        adj_.assign(static_cast<std::size_t>(p) * words_, 0);
    }

    int vertex_count() const { return p_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    bool loops_allowed() const { return loops_allowed_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v && !loops_allowed_) throw std::invalid_argument("loop in a simple graph");
        if (u > v) std::swap(u, v);
        if (test(u, v)) return;
        set(u, v);
        set(v, u);
        edges_.emplace_back(u, v);
    }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return test(u, v);
    }

    // Neighbors in increasing order; v itself appears when it has a loop.
    std::vector<int> neighbors(int v) const {
        check_vertex(v);
        std::vector<int> out;
        for (int u = 0; u < p_; ++u)
            if (test(v, u)) out.push_back(u);
        return out;
    }

    // Degree with each loop counting twice.
    int degree(int v) const {
        int d = 0;
        for (int u = 0; u < p_; ++u)
            if (test(v, u)) d += (u == v) ? 2 : 1;
        return d;
    }

    // Number of distinct adjacent vertices (a loop contributes v itself once).
    int neighbor_count(int v) const {
        int d = 0;
        for (int u = 0; u < p_; ++u)
            if (test(v, u)) ++d;
        return d;
    }

    bool has_loop(int v) const { return test(v, v); }

    void set_label(int v, std::string label) {
        check_vertex(v);
        if (labels_.empty()) labels_.resize(static_cast<std::size_t>(p_));
        labels_[static_cast<std::size_t>(v)] = std::move(label);
    }
    std::string label(int v) const {
        check_vertex(v);
        if (labels_.empty()) return {};
        return labels_[static_cast<std::size_t>(v)];
    }
    bool has_labels() const { return !labels_.empty(); }

    // Component id per vertex, ids in first-seen order.
    std::vector<int> components() const {
        std::vector<int> comp(static_cast<std::size_t>(p_), -1);
        int c = 0;
        for (int s = 0; s < p_; ++s) {
            if (comp[static_cast<std::size_t>(s)] >= 0) continue;
            comp[static_cast<std::size_t>(s)] = c;
            std::vector<int> stack{s};
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                for (int u = 0; u < p_; ++u)
                    if (test(v, u) && comp[static_cast<std::size_t>(u)] < 0) {
                        comp[static_cast<std::size_t>(u)] = c;
                        stack.push_back(u);
                    }
            }
            ++c;
        }
        return comp;
    }

    int component_count() const {
        auto c = components();
        return c.empty() ? 0 : 1 + *std::max_element(c.begin(), c.end());
    }

    bool is_bipartite(std::vector<int>* coloring = nullptr) const {
        std::vector<int> color(static_cast<std::size_t>(p_), -1);
        for (int s = 0; s < p_; ++s) {
            if (color[static_cast<std::size_t>(s)] >= 0) continue;
            color[static_cast<std::size_t>(s)] = 0;
            std::queue<int> q;
            q.push(s);
            while (!q.empty()) {
                int v = q.front();
                q.pop();
                for (int u = 0; u < p_; ++u) {
                    if (!test(v, u)) continue;
                    if (u == v) return false;  // loop
                    int& cu = color[static_cast<std::size_t>(u)];
                    if (cu < 0) {
                        cu = 1 - color[static_cast<std::size_t>(v)];
                        q.push(u);
                    } else if (cu == color[static_cast<std::size_t>(v)]) {
                        return false;
                    }
                }
            }
        }
        if (coloring) *coloring = std::move(color);
        return true;
    }

    bool is_triangle_free() const {
        for (const auto& [u, v] : edges_) {
            if (u == v) continue;
            for (std::size_t w = 0; w < words_; ++w) {
                uint64_t common = adj_[static_cast<std::size_t>(u) * words_ + w] &
                                  adj_[static_cast<std::size_t>(v) * words_ + w];
                // mask out the endpoints themselves (loops)
                if (common != 0) {
                    for (int b = 0; b < 64; ++b) {
                        if (!(common >> b & 1)) continue;
                        int x = static_cast<int>(w) * 64 + b;
                        if (x != u && x != v) return false;
                    }
                }
            }
        }
        return true;
    }

    std::vector<int> degree_sequence() const {  // descending
        std::vector<int> d(static_cast<std::size_t>(p_));
        for (int v = 0; v < p_; ++v) d[static_cast<std::size_t>(v)] = degree(v);
        std::sort(d.rbegin(), d.rend());
        return d;
    }

    int min_degree() const {
        int m = p_ == 0 ? 0 : degree(0);
        for (int v = 1; v < p_; ++v) m = std::min(m, degree(v));
        return m;
    }

    bool is_complete() const {
        if (loops_allowed_) return false;
        return edge_count() == p_ * (p_ - 1) / 2;
    }

    // Returns the two part sizes (m <= n) when the graph is a complete
    // bipartite graph on all its vertices.
    std::optional<std::pair<int, int>> complete_bipartite_parts() const {
        std::vector<int> color;
        if (p_ < 2 || !is_bipartite(&color)) return std::nullopt;
        int a = static_cast<int>(std::count(color.begin(), color.end(), 0));
        int b = p_ - a;
        if (edge_count() != a * b) return std::nullopt;
        // edge count matches only if every cross pair is present and the
        // bipartition is unique per component; verify directly
        for (int u = 0; u < p_; ++u)
            for (int v = u + 1; v < p_; ++v) {
                bool cross = color[static_cast<std::size_t>(u)] != color[static_cast<std::size_t>(v)];
                if (cross != test(u, v)) return std::nullopt;
            }
        return std::make_pair(std::min(a, b), std::max(a, b));
    }

    Graph induced_subgraph(const std::vector<int>& vertices) const {
        Graph g(static_cast<int>(vertices.size()), loops_allowed_);
        for (std::size_t i = 0; i < vertices.size(); ++i) {
            check_vertex(vertices[i]);
            if (has_labels()) g.set_label(static_cast<int>(i), label(vertices[i]));
            for (std::size_t j = loops_allowed_ ? i : i + 1; j < vertices.size(); ++j)
                if (test(vertices[i], vertices[j])) g.add_edge(static_cast<int>(i), static_cast<int>(j));
        }
        return g;
    }

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= p_) throw std::out_of_range("vertex index out of range");
    }
    bool test(int u, int v) const {
        return adj_[static_cast<std::size_t>(u) * words_ + static_cast<std::size_t>(v) / 64] >>
                   (static_cast<std::size_t>(v) % 64) &
               1;
    }
    void set(int u, int v) {
        adj_[static_cast<std::size_t>(u) * words_ + static_cast<std::size_t>(v) / 64] |=
            uint64_t{1} << (static_cast<std::size_t>(v) % 64);
    }

    int p_ = 0;
    bool loops_allowed_ = false;
    std::size_t words_ = 0;
    std::vector<uint64_t> adj_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::string> labels_;
};

// ---------------------------------------------------------------------------
// constructions

inline Graph complete_graph(int n) {
    if (n < 1) throw std::invalid_argument("complete graph needs n >= 1");
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

inline Graph complete_bipartite(int m, int n) {
    if (m < 1 || n < 1) throw std::invalid_argument("complete bipartite graph needs m,n >= 1");
    Graph g(m + n);
    for (int u = 0; u < m; ++u)
        for (int v = 0; v < n; ++v) g.add_edge(u, m + v);
    return g;
}

// Tensor (categorical) product. Factors may carry loops; the result is
// always simple: distinct vertex pairs only. Vertex (u1,u2) is coded
// u1 * p2 + u2, matching the mixed-radix element coding of ring products.
inline Graph tensor(const Graph& g1, const Graph& g2) {
    const int p1 = g1.vertex_count(), p2 = g2.vertex_count();
    Graph g(p1 * p2);
    for (int u1 = 0; u1 < p1; ++u1)
        for (int u2 = 0; u2 < p2; ++u2)
            for (int v1 = u1; v1 < p1; ++v1)
                for (int v2 = 0; v2 < p2; ++v2) {
                    int a = u1 * p2 + u2, b = v1 * p2 + v2;
                    if (a >= b) continue;
                    if (g1.has_edge(u1, v1) && g2.has_edge(u2, v2)) g.add_edge(a, b);
                }
    if (g1.has_labels() || g2.has_labels()) {
        for (int u1 = 0; u1 < p1; ++u1)
            for (int u2 = 0; u2 < p2; ++u2)
                g.set_label(u1 * p2 + u2, "(" + g1.label(u1) + "," + g2.label(u2) + ")");
    }
    return g;
}

inline Graph disjoint_copies(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("need k >= 1 copies");
    const int p = g.vertex_count();
    Graph out(p * k, g.loops_allowed());
    for (int i = 0; i < k; ++i)
        for (const auto& [u, v] : g.edges()) out.add_edge(i * p + u, i * p + v);
    return out;
}

// ---------------------------------------------------------------------------
// structure report

struct StructureReport {
    int p = 0;
    int q = 0;
    std::vector<int> degree_sequence;  // descending
    int min_degree = 0;
    int components = 0;
    bool bipartite = false;
    bool triangle_free = false;
};

inline StructureReport structure_report(const Graph& g) {
    StructureReport r;
    r.p = g.vertex_count();
    r.q = g.edge_count();
    r.degree_sequence = g.degree_sequence();
    r.min_degree = g.min_degree();
    r.components = g.component_count();
    r.bipartite = g.is_bipartite();
    r.triangle_free = g.is_triangle_free();
    return r;
}

// ---------------------------------------------------------------------------
// text formats

inline std::string graph_to_text(const Graph& g) {
    std::ostringstream os;
    auto edges = g.edges();
    std::sort(edges.begin(), edges.end());
    os << "graph " << g.vertex_count() << " " << g.edge_count() << "\n";
    for (const auto& [u, v] : edges) os << "e " << u << " " << v << "\n";
    if (g.has_labels())
        for (int v = 0; v < g.vertex_count(); ++v)
            if (!g.label(v).empty()) os << "l " << v << " " << g.label(v) << "\n";
    return os.str();
}

inline Graph graph_from_text(const std::string& text) {
    std::istringstream is(text);
    std::string tok;
    if (!(is >> tok) || tok != "graph") throw std::runtime_error("edge list must start with 'graph p q'");
    int p = 0, q = 0;
    if (!(is >> p >> q)) throw std::runtime_error("bad graph header");
    Graph g(p, true);
    bool any_loop = false;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::pair<int, std::string>> labels;
    for (int i = 0; i < q; ++i) {
        int u = 0, v = 0;
        if (!(is >> tok >> u >> v) || tok != "e") throw std::runtime_error("bad edge line");
        if (u == v) any_loop = true;
        edges.emplace_back(u, v);
    }
    while (is >> tok) {
        if (tok != "l") throw std::runtime_error("unexpected line in edge list");
        int v = 0;
        std::string label;
        if (!(is >> v)) throw std::runtime_error("bad label line");
        std::getline(is, label);
        while (!label.empty() && label.front() == ' ') label.erase(label.begin());
        labels.emplace_back(v, label);
    }
    Graph out(p, any_loop);
    for (const auto& [u, v] : edges) out.add_edge(u, v);
    for (auto& [v, l] : labels) out.set_label(v, l);
    return out;
}

inline std::string graph_to_dot(const Graph& g, const std::string& name = "G") {
    std::ostringstream os;
    os << "graph " << name << " {\n";
    for (int v = 0; v < g.vertex_count(); ++v) {
        os << "  v" << v;
        if (!g.label(v).empty()) os << " [label=\"" << g.label(v) << "\"]";
        os << ";\n";
    }
    for (const auto& [u, v] : g.edges()) os << "  v" << u << " -- v" << v << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace ringtopo
