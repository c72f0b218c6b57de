#pragma once

// Search for a subdivision (homeomorph) of a pattern graph inside a host.
// Branch vertices are mapped in decreasing pattern-degree order; each
// pattern edge is realized as a host path, shortest candidates first, with
// internal vertices disjoint from everything placed so far. Absence is
// reported only when the whole search space is exhausted; running out of
// budget is a distinct outcome.

#include <algorithm>
#include <cstdint>
#include <variant>
#include <vector>

#include "graph.hpp"

namespace ringtopo {

struct SubdivisionModel {
    std::vector<int> branch_vertices;               // image of pattern vertex i
    std::vector<std::pair<int, int>> pattern_edges; // pattern edges, fixed order
    std::vector<std::vector<int>> paths;            // host path per pattern edge
};

struct SubdivisionAbsent {};
struct SubdivisionBudgetExceeded {};
using SubdivisionOutcome = std::variant<SubdivisionModel, SubdivisionAbsent, SubdivisionBudgetExceeded>;

namespace subdiv_detail {

struct Search {
    const Graph& host;
    const Graph& pattern;
    long long budget;
    long long nodes = 0;
    bool out_of_budget = false;

    std::vector<int> vorder;                             // pattern vertices, decreasing degree
    std::vector<int> host_order;                         // host vertices, decreasing degree
    std::vector<std::vector<int>> edges_to_earlier;      // per vorder index: earlier vorder indices
    std::vector<int> image;                              // pattern vertex -> host vertex
    std::vector<char> used;                              // host vertices occupied
    std::vector<char> is_image;                          // host vertex is a branch image
    std::vector<std::pair<int, int>> placed_edges;       // pattern edges in placement order
    std::vector<std::vector<int>> placed_paths;

    bool tick() {
        if (++nodes > budget) {
            out_of_budget = true;
            return false;
        }
        return true;
    }

    // BFS distance from target to every vertex, walking only free internal
    // vertices (the source endpoint may be used: distances are measured to
    // its neighbors)
    std::vector<int> distances_to(int target) {
        std::vector<int> dist(static_cast<std::size_t>(host.vertex_count()), -1);
        std::vector<int> queue{target};
        dist[static_cast<std::size_t>(target)] = 0;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int v = queue[head];
            if (v != target && used[static_cast<std::size_t>(v)]) continue;  // no passage
            for (int u : host.neighbors(v))
                if (dist[static_cast<std::size_t>(u)] < 0) {
                    dist[static_cast<std::size_t>(u)] = dist[static_cast<std::size_t>(v)] + 1;
                    queue.push_back(u);
                }
        }
        return dist;
    }

    // paths of exactly `len` edges from cur to target through free vertices,
    // pruned by the distance table
    bool grow_path(int cur, int target, int len, std::vector<int>& path, const std::vector<int>& dist,
                   const std::vector<int>& remaining_edges, std::size_t vidx) {
        if (!tick()) return false;
        for (int nxt = 0; nxt < host.vertex_count(); ++nxt) {
            if (!host.has_edge(cur, nxt)) continue;
            if (nxt == target) {
                if (len != 1) continue;
                path.push_back(nxt);
                placed_paths.push_back(path);
                if (realize_edges(remaining_edges, vidx)) return true;
                placed_paths.pop_back();
                path.pop_back();
                if (out_of_budget) return false;
                continue;
            }
            if (len == 1 || used[static_cast<std::size_t>(nxt)]) continue;
            if (dist[static_cast<std::size_t>(nxt)] < 0 || dist[static_cast<std::size_t>(nxt)] > len - 1)
                continue;
            used[static_cast<std::size_t>(nxt)] = 1;
            path.push_back(nxt);
            if (grow_path(nxt, target, len - 1, path, dist, remaining_edges, vidx)) return true;
            path.pop_back();
            used[static_cast<std::size_t>(nxt)] = 0;
            if (out_of_budget) return false;
        }
        return false;
    }

    // realize remaining pattern edges into the current branch prefix, then
    // continue assigning branch vertices
    bool realize_edges(std::vector<int> remaining, std::size_t vidx) {
        if (remaining.empty()) return assign(vidx + 1);
        int j = remaining.back();
        remaining.pop_back();
        int pu = vorder[static_cast<std::size_t>(j)];
        int pv = vorder[vidx];
        int a = image[static_cast<std::size_t>(pu)];
        int b = image[static_cast<std::size_t>(pv)];
        placed_edges.emplace_back(pu, pv);
        auto dist = distances_to(b);
        int shortest = dist[static_cast<std::size_t>(a)];
        if (shortest < 0) {
            placed_edges.pop_back();
            return false;  // endpoints separated by the used set
        }
        int free_count = 0;
        for (int v = 0; v < host.vertex_count(); ++v)
            if (!used[static_cast<std::size_t>(v)]) ++free_count;
        for (int len = std::max(1, shortest); len <= free_count + 1; ++len) {
            std::vector<int> path{a};
            if (grow_path(a, b, len, path, dist, remaining, vidx)) return true;
            if (out_of_budget) {
                placed_edges.pop_back();
                return false;
            }
        }
        placed_edges.pop_back();
        return false;
    }

    bool assign(std::size_t vidx) {
        if (!tick()) return false;
        if (vidx == vorder.size()) return true;
        int pv = vorder[vidx];
        const int need = pattern.degree(pv);
        for (int w : host_order) {
            if (used[static_cast<std::size_t>(w)]) continue;
            if (host.degree(w) < need) continue;
            // enough usable neighbors: free ones or earlier branch images
            int usable = 0;
            for (int u : host.neighbors(w))
                if (!used[static_cast<std::size_t>(u)] || is_image[static_cast<std::size_t>(u)]) ++usable;
            if (usable < need) continue;
            image[static_cast<std::size_t>(pv)] = w;
            used[static_cast<std::size_t>(w)] = 1;
            is_image[static_cast<std::size_t>(w)] = 1;
            if (realize_edges(edges_to_earlier[vidx], vidx)) return true;
            used[static_cast<std::size_t>(w)] = 0;
            is_image[static_cast<std::size_t>(w)] = 0;
            image[static_cast<std::size_t>(pv)] = -1;
            if (out_of_budget) return false;
        }
        return false;
    }
};

}  // namespace subdiv_detail

inline SubdivisionOutcome find_subdivision(const Graph& host, const Graph& pattern,
                                           long long budget = 10'000'000) {
    const int hp = host.vertex_count();
    const int pp = pattern.vertex_count();
    if (hp < pp || host.edge_count() < pattern.edge_count()) return SubdivisionAbsent{};

    // degree tallies: pattern vertices of degree >= d need that many hosts
    {
        std::vector<int> hd, pd;
        for (int v = 0; v < hp; ++v) hd.push_back(host.degree(v));
        for (int v = 0; v < pp; ++v) pd.push_back(pattern.degree(v));
        std::sort(hd.rbegin(), hd.rend());
        std::sort(pd.rbegin(), pd.rend());
        for (std::size_t i = 0; i < pd.size(); ++i)
            if (hd[i] < pd[i]) return SubdivisionAbsent{};
    }

    subdiv_detail::Search s{host, pattern, budget};
    s.vorder.resize(static_cast<std::size_t>(pp));
    for (int v = 0; v < pp; ++v) s.vorder[static_cast<std::size_t>(v)] = v;
    std::stable_sort(s.vorder.begin(), s.vorder.end(),
                     [&](int a, int b) { return pattern.degree(a) > pattern.degree(b); });
    s.host_order.resize(static_cast<std::size_t>(hp));
    for (int v = 0; v < hp; ++v) s.host_order[static_cast<std::size_t>(v)] = v;
    std::stable_sort(s.host_order.begin(), s.host_order.end(),
                     [&](int a, int b) { return host.degree(a) > host.degree(b); });
    s.edges_to_earlier.resize(static_cast<std::size_t>(pp));
    for (std::size_t i = 0; i < s.vorder.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (pattern.has_edge(s.vorder[i], s.vorder[j]))
                s.edges_to_earlier[i].push_back(static_cast<int>(j));
    // realize_edges pops from the back; keep earlier-first processing
    for (auto& lst : s.edges_to_earlier) std::sort(lst.rbegin(), lst.rend());
    s.image.assign(static_cast<std::size_t>(pp), -1);
    s.used.assign(static_cast<std::size_t>(hp), 0);
    s.is_image.assign(static_cast<std::size_t>(hp), 0);

    if (s.assign(0)) {
        SubdivisionModel model;
        model.branch_vertices = s.image;
        model.pattern_edges = s.placed_edges;
        model.paths = s.placed_paths;
        return model;
    }
    if (s.out_of_budget) return SubdivisionBudgetExceeded{};
    return SubdivisionAbsent{};
}

inline bool verify_subdivision_model(const Graph& host, const Graph& pattern,
                                     const SubdivisionModel& model) {
    const int pp = pattern.vertex_count();
    if (static_cast<int>(model.branch_vertices.size()) != pp) return false;
    std::vector<char> seen(static_cast<std::size_t>(host.vertex_count()), 0);
    for (int w : model.branch_vertices) {
        if (w < 0 || w >= host.vertex_count() || seen[static_cast<std::size_t>(w)]) return false;
        seen[static_cast<std::size_t>(w)] = 1;
    }
    // every pattern edge appears exactly once
    auto pe = model.pattern_edges;
    for (auto& [u, v] : pe)
        if (u > v) std::swap(u, v);
    std::sort(pe.begin(), pe.end());
    auto expected = pattern.edges();
    for (auto& [u, v] : expected)
        if (u > v) std::swap(u, v);
    std::sort(expected.begin(), expected.end());
    if (pe != expected) return false;
    if (model.paths.size() != model.pattern_edges.size()) return false;

    for (std::size_t i = 0; i < model.paths.size(); ++i) {
        const auto& path = model.paths[i];
        auto [u, v] = model.pattern_edges[i];
        if (path.size() < 2) return false;
        if (path.front() != model.branch_vertices[static_cast<std::size_t>(u)]) return false;
        if (path.back() != model.branch_vertices[static_cast<std::size_t>(v)]) return false;
        for (std::size_t j = 0; j + 1 < path.size(); ++j)
            if (!host.has_edge(path[j], path[j + 1])) return false;
        for (std::size_t j = 1; j + 1 < path.size(); ++j) {
            int w = path[j];
            if (seen[static_cast<std::size_t>(w)]) return false;  // hits a branch vertex or another path
            seen[static_cast<std::size_t>(w)] = 1;
        }
    }
    return true;
}

}  // namespace ringtopo
