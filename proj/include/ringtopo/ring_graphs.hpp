#pragma once

// Graphs attached to a finite commutative ring: the generalized unit graph
// family Gamma(R,G,S), its loop-carrying variant, the classic unit and
// unitary Cayley graphs, and the co-maximal graph.

#include "graph.hpp"
#include "ring.hpp"

namespace ringtopo {

// x ~ y iff x + s*y lies in G for some s in S. Symmetry of the relation is
// forced by S being inverse-closed inside the group G. With include_loops,
// x gets a loop iff x + s*x lies in G for some s.
inline Graph build_gamma(const FiniteRing& r, const MultiplicativeData& data, bool include_loops = false) {
    const int n = r.order();
    std::vector<char> in_g(static_cast<std::size_t>(n), 0);
    for (Elem g : data.group) in_g[static_cast<std::size_t>(g)] = 1;

    Graph graph(n, include_loops);
    for (Elem x = 0; x < n; ++x) {
        graph.set_label(x, format_element(r, x));
        for (Elem y = include_loops ? x : x + 1; y < n; ++y) {
            for (Elem s : data.connection) {
                if (in_g[static_cast<std::size_t>(r.add(x, r.mul(s, y)))]) {
                    graph.add_edge(x, y);
                    break;
                }
            }
        }
    }
    return graph;
}

inline Graph build_gamma(const FiniteRing& r, const std::vector<Elem>& s, bool include_loops = false) {
    return build_gamma(r, validate_S(r, r.units(), s), include_loops);
}

// Unit graph: x ~ y iff x + y is a unit.
inline Graph build_unit_graph(const FiniteRing& r) { return build_gamma(r, {r.one()}); }

// Unitary Cayley graph: x ~ y iff x - y is a unit.
inline Graph build_unitary_cayley(const FiniteRing& r) { return build_gamma(r, {r.neg(r.one())}); }

// Co-maximal graph: x ~ y iff Rx + Ry = R.
inline Graph build_comaximal(const FiniteRing& r) {
    const int n = r.order();
    Graph graph(n);
    std::vector<std::vector<char>> ideal(static_cast<std::size_t>(n));
    for (Elem x = 0; x < n; ++x) {
        graph.set_label(x, format_element(r, x));
        ideal[static_cast<std::size_t>(x)].assign(static_cast<std::size_t>(n), 0);
        for (Elem a = 0; a < n; ++a) ideal[static_cast<std::size_t>(x)][static_cast<std::size_t>(r.mul(a, x))] = 1;
    }
    for (Elem x = 0; x < n; ++x)
        for (Elem y = x + 1; y < n; ++y) {
            const auto& ix = ideal[static_cast<std::size_t>(x)];
            const auto& iy = ideal[static_cast<std::size_t>(y)];
            for (Elem a = 0; a < n; ++a)
                if (ix[static_cast<std::size_t>(a)] && iy[static_cast<std::size_t>(r.sub(r.one(), a))]) {
                    graph.add_edge(x, y);
                    break;
                }
        }
    return graph;
}

// All non-empty inverse-closed subsets of U(R), enumerated through the
// orbits {u, u^-1}. Sorted for determinism.
inline std::vector<std::vector<Elem>> inverse_closed_subsets(const FiniteRing& r) {
    std::vector<std::vector<Elem>> orbits;
    std::vector<char> seen(static_cast<std::size_t>(r.order()), 0);
    for (Elem u : r.units()) {
        if (seen[static_cast<std::size_t>(u)]) continue;
        Elem v = r.inverse(u);
        seen[static_cast<std::size_t>(u)] = 1;
        seen[static_cast<std::size_t>(v)] = 1;
        if (u == v)
            orbits.push_back({u});
        else
            orbits.push_back({u, v});
    }
    std::vector<std::vector<Elem>> out;
    const std::size_t m = orbits.size();
    for (std::size_t mask = 1; mask < (std::size_t{1} << m); ++mask) {
        std::vector<Elem> s;
        for (std::size_t i = 0; i < m; ++i)
            if (mask >> i & 1) s.insert(s.end(), orbits[i].begin(), orbits[i].end());
        std::sort(s.begin(), s.end());
        out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return out;
}

}  // namespace ringtopo
