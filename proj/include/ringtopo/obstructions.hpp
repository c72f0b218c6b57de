#pragma once

// Named evidence graphs: Kuratowski graphs, the bipartite obstructions K44
// and K36, and the projective-plane obstructions A2, B3, E18. A2 and E18
// are generated live from their ring constructions; B3 is a transcribed
// edge list validated against the ring graph it came from.

#include <map>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "graph.hpp"
#include "ring.hpp"
#include "ring_graphs.hpp"
#include "subdivision.hpp"

namespace ringtopo {

class UnknownObstruction : public std::invalid_argument {
public:
    explicit UnknownObstruction(const std::string& name)
        : std::invalid_argument("unknown obstruction name: " + name) {}
};

struct NamedGraph {
    std::string name;
    Graph graph;
    std::string provenance;
};

inline const std::vector<std::string>& obstruction_names() {
    static const std::vector<std::string> names = {"K5", "K33", "K44", "K36", "A2", "B3", "E18"};
    return names;
}

namespace obstruction_detail {

inline Graph build_a2() {
    auto z7 = compile_ring(parse_ring_spec("Z7"));
    return build_gamma(z7, {1});
}

inline Graph build_e18() {
    auto r = compile_ring(parse_ring_spec("Z2 x GF(4)"));
    // S = {1} x {alpha, alpha^2}, the inverse-closed pair of proper units
    Elem s1 = r.encode_tuple({1, 2});
    Elem s2 = r.encode_tuple({1, 3});
    auto g = build_gamma(r, {s1, s2});
    // every cross pair adjacent except (0,0)-(1,0)
    int zero_left = r.encode_tuple({0, 0});
    int zero_right = r.encode_tuple({1, 0});
    if (g.edge_count() != 15 || g.has_edge(zero_left, zero_right))
        throw std::logic_error("E18 construction produced an unexpected graph");
    return g;
}

// Figure transcription: the 8 nonzero-labelled vertices of
// Gamma(Z3 x Z3, {(1,1),(1,-1)}) with the drawn segments. The rectangle
// sides run through the midpoint vertices, so each long side is two edges.
inline Graph build_b3() {
    auto r = compile_ring(parse_ring_spec("Z3 x Z3"));
    auto code = [&](int a, int b) { return r.encode_tuple({a, b}); };
    const std::vector<int> labels = {code(1, 0), code(2, 0), code(2, 1), code(1, 1),
                                     code(0, 2), code(0, 1), code(1, 2), code(2, 2)};
    // indices: 0=(1,0) 1=(2,0) 2=(2,1) 3=(1,1) 4=(0,2) 5=(0,1) 6=(1,2) 7=(2,2)
    const std::vector<std::pair<int, int>> edges = {
        // rectangle, long sides split by the midpoints
        {0, 4}, {4, 1},  // top: (1,0)-(0,2)-(2,0)
        {3, 5}, {5, 2},  // bottom: (1,1)-(0,1)-(2,1)
        {1, 2},          // right
        {0, 3},          // left
        // outer curve segments
        {4, 2}, {4, 3}, {1, 5}, {0, 5},
        // interior spokes
        {3, 6}, {0, 6}, {6, 4}, {6, 5}, {5, 7}, {7, 4}, {7, 1}, {7, 2},
    };
    Graph g(8);
    for (std::size_t v = 0; v < labels.size(); ++v)
        g.set_label(static_cast<int>(v), format_element(r, labels[v]));
    for (auto [u, v] : edges) g.add_edge(u, v);

    // validate the transcription against the graph it is a subgraph of
    Elem s1 = code(1, 1), s2 = code(1, 2);
    auto host = build_gamma(r, {s1, s2});
    for (auto [u, v] : edges)
        if (!host.has_edge(labels[static_cast<std::size_t>(u)], labels[static_cast<std::size_t>(v)]))
            throw std::logic_error("B3 transcription is not a subgraph of its ring graph");
    return g;
}

inline const std::map<std::string, NamedGraph>& catalog() {
    static const std::map<std::string, NamedGraph> entries = [] {
        std::map<std::string, NamedGraph> m;
        m.emplace("K5", NamedGraph{"K5", complete_graph(5), "complete graph on 5 vertices"});
        m.emplace("K33", NamedGraph{"K33", complete_bipartite(3, 3), "complete bipartite 3+3"});
        m.emplace("K44", NamedGraph{"K44", complete_bipartite(4, 4), "complete bipartite 4+4"});
        m.emplace("K36", NamedGraph{"K36", complete_bipartite(3, 6), "complete bipartite 3+6"});
        m.emplace("A2", NamedGraph{"A2", build_a2(), "Gamma(Z7,{1})"});
        m.emplace("B3", NamedGraph{"B3", build_b3(), "figure transcription inside Gamma(Z3xZ3,{(1,1),(1,2)})"});
        m.emplace("E18", NamedGraph{"E18", build_e18(), "Gamma(Z2xGF(4),{1}x{a,a^2})"});
        return m;
    }();
    return entries;
}

}  // namespace obstruction_detail

inline const NamedGraph& obstruction(const std::string& name) {
    const auto& cat = obstruction_detail::catalog();
    auto it = cat.find(name);
    if (it == cat.end()) throw UnknownObstruction(name);
    return it->second;
}

// ---------------------------------------------------------------------------
// detection

struct DetectedObstruction {
    std::string name;
    SubdivisionModel model;
};
struct NoObstruction {};
struct DetectBudgetExceeded {};
using DetectOutcome = std::variant<DetectedObstruction, NoObstruction, DetectBudgetExceeded>;

// First homeomorph found among the requested names, scanned in the fixed
// catalog order. Absence means every requested pattern was exhaustively
// refuted; running out of budget on any pattern without a find is reported
// as such.
inline DetectOutcome detect_obstruction(const Graph& g, const std::vector<std::string>& names,
                                        long long budget = 10'000'000) {
    bool exhausted = false;
    for (const auto& name : obstruction_names()) {
        if (std::find(names.begin(), names.end(), name) == names.end()) continue;
        auto outcome = find_subdivision(g, obstruction(name).graph, budget);
        if (std::holds_alternative<SubdivisionModel>(outcome))
            return DetectedObstruction{name, std::get<SubdivisionModel>(std::move(outcome))};
        if (std::holds_alternative<SubdivisionBudgetExceeded>(outcome)) exhausted = true;
    }
    if (exhausted) return DetectBudgetExceeded{};
    return NoObstruction{};
}

}  // namespace ringtopo
