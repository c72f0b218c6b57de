#pragma once

// Graph isomorphism by iterated degree refinement plus backtracking.
// No canonical-form guarantee; adequate for the small graphs this project
// works with.

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "graph.hpp"

namespace ringtopo {

namespace iso_detail {

// One refinement round: new color = (old color, sorted neighbor colors).
// Colors of both graphs share one id space so classes stay comparable.
inline bool refine(const Graph& g, const Graph& h, std::vector<int>& cg, std::vector<int>& ch) {
    const int p = g.vertex_count();
    for (int round = 0; round < p; ++round) {
        std::map<std::pair<int, std::vector<int>>, int> ids;
        auto key_of = [&](const Graph& gr, const std::vector<int>& c, int v) {
            std::vector<int> nb;
            for (int u : gr.neighbors(v)) nb.push_back(c[static_cast<std::size_t>(u)]);
            std::sort(nb.begin(), nb.end());
            return std::make_pair(c[static_cast<std::size_t>(v)], std::move(nb));
        };
        std::vector<int> ng(static_cast<std::size_t>(p)), nh(static_cast<std::size_t>(p));
        for (int v = 0; v < p; ++v) {
            auto key = key_of(g, cg, v);
            auto it = ids.find(key);
            if (it == ids.end()) it = ids.emplace(std::move(key), static_cast<int>(ids.size())).first;
            ng[static_cast<std::size_t>(v)] = it->second;
        }
        for (int v = 0; v < p; ++v) {
            auto key = key_of(h, ch, v);
            auto it = ids.find(key);
            if (it == ids.end()) return false;  // class present in h only / g only
            nh[static_cast<std::size_t>(v)] = it->second;
        }
        {
            auto sg = ng, sh = nh;
            std::sort(sg.begin(), sg.end());
            std::sort(sh.begin(), sh.end());
            if (sg != sh) return false;
        }
        bool changed = ng != cg || nh != ch;
        cg = std::move(ng);
        ch = std::move(nh);
        if (!changed) return true;
    }
    return true;
}

struct Backtracker {
    const Graph& g;
    const Graph& h;
    const std::vector<int>& cg;
    const std::vector<int>& ch;
    std::vector<int> order;    // g vertices, most constrained first
    std::vector<int> mapping;  // g -> h, -1 unset
    std::vector<char> used;    // h vertices taken

    bool extend(std::size_t idx) {
        if (idx == order.size()) return true;
        int v = order[idx];
        for (int w = 0; w < h.vertex_count(); ++w) {
            if (used[static_cast<std::size_t>(w)]) continue;
            if (ch[static_cast<std::size_t>(w)] != cg[static_cast<std::size_t>(v)]) continue;
            if (g.has_edge(v, v) != h.has_edge(w, w)) continue;
            bool ok = true;
            for (std::size_t j = 0; j < idx && ok; ++j) {
                int u = order[j];
                ok = g.has_edge(v, u) == h.has_edge(w, mapping[static_cast<std::size_t>(u)]);
            }
            if (!ok) continue;
            mapping[static_cast<std::size_t>(v)] = w;
            used[static_cast<std::size_t>(w)] = 1;
            if (extend(idx + 1)) return true;
            mapping[static_cast<std::size_t>(v)] = -1;
            used[static_cast<std::size_t>(w)] = 0;
        }
        return false;
    }
};

}  // namespace iso_detail

inline std::optional<std::vector<int>> isomorphic(const Graph& g, const Graph& h);

namespace iso_detail {

struct ComponentPieces {
    std::vector<std::vector<int>> vertex_lists;
    std::vector<Graph> graphs;
};

inline ComponentPieces split(const Graph& g) {
    ComponentPieces out;
    auto comp = g.components();
    int c = comp.empty() ? 0 : 1 + *std::max_element(comp.begin(), comp.end());
    out.vertex_lists.resize(static_cast<std::size_t>(c));
    for (int v = 0; v < g.vertex_count(); ++v)
        out.vertex_lists[static_cast<std::size_t>(comp[static_cast<std::size_t>(v)])].push_back(v);
    for (const auto& vs : out.vertex_lists) out.graphs.push_back(g.induced_subgraph(vs));
    return out;
}

// match components one-to-one, backtracking over candidates with equal
// invariants; fills `mapping` on the original vertex ids
inline bool match_components(const ComponentPieces& a, const ComponentPieces& b, std::size_t i,
                             std::vector<char>& taken, std::vector<int>& mapping) {
    if (i == a.graphs.size()) return true;
    for (std::size_t j = 0; j < b.graphs.size(); ++j) {
        if (taken[j]) continue;
        auto sub = isomorphic(a.graphs[i], b.graphs[j]);
        if (!sub) continue;
        taken[j] = 1;
        for (std::size_t v = 0; v < a.vertex_lists[i].size(); ++v)
            mapping[static_cast<std::size_t>(a.vertex_lists[i][v])] =
                b.vertex_lists[j][static_cast<std::size_t>((*sub)[v])];
        if (match_components(a, b, i + 1, taken, mapping)) return true;
        taken[j] = 0;
    }
    return false;
}

}  // namespace iso_detail

// A vertex bijection g -> h preserving adjacency both ways, or nullopt.
inline std::optional<std::vector<int>> isomorphic(const Graph& g, const Graph& h) {
    const int p = g.vertex_count();
    if (p != h.vertex_count() || g.edge_count() != h.edge_count()) return std::nullopt;
    if (p == 0) return std::vector<int>{};
    if (g.degree_sequence() != h.degree_sequence()) return std::nullopt;

    // disconnected graphs are matched component by component
    auto pieces_g = iso_detail::split(g);
    if (pieces_g.graphs.size() > 1) {
        auto pieces_h = iso_detail::split(h);
        if (pieces_g.graphs.size() != pieces_h.graphs.size()) return std::nullopt;
        std::sort(pieces_g.vertex_lists.begin(), pieces_g.vertex_lists.end(),
                  [](const auto& x, const auto& y) { return x.size() < y.size(); });
        pieces_g.graphs.clear();
        for (const auto& vs : pieces_g.vertex_lists) pieces_g.graphs.push_back(g.induced_subgraph(vs));
        std::vector<char> taken(pieces_h.graphs.size(), 0);
        std::vector<int> mapping(static_cast<std::size_t>(p), -1);
        if (!iso_detail::match_components(pieces_g, pieces_h, 0, taken, mapping)) return std::nullopt;
        return mapping;
    }

    std::vector<int> cg(static_cast<std::size_t>(p), 0), ch(static_cast<std::size_t>(p), 0);
    for (int v = 0; v < p; ++v) {
        cg[static_cast<std::size_t>(v)] = g.degree(v);
        ch[static_cast<std::size_t>(v)] = h.degree(v);
    }
    if (!iso_detail::refine(g, h, cg, ch)) return std::nullopt;

    // class sizes, small classes first
    std::map<int, int> class_size;
    for (int v = 0; v < p; ++v) ++class_size[cg[static_cast<std::size_t>(v)]];
    iso_detail::Backtracker bt{g, h, cg, ch, {}, {}, {}};
    bt.order.resize(static_cast<std::size_t>(p));
    for (int v = 0; v < p; ++v) bt.order[static_cast<std::size_t>(v)] = v;
    std::stable_sort(bt.order.begin(), bt.order.end(), [&](int a, int b) {
        int sa = class_size[cg[static_cast<std::size_t>(a)]];
        int sb = class_size[cg[static_cast<std::size_t>(b)]];
        if (sa != sb) return sa < sb;
        return cg[static_cast<std::size_t>(a)] < cg[static_cast<std::size_t>(b)];
    });
    bt.mapping.assign(static_cast<std::size_t>(p), -1);
    bt.used.assign(static_cast<std::size_t>(p), 0);
    if (!bt.extend(0)) return std::nullopt;
    return bt.mapping;
}

}  // namespace ringtopo
