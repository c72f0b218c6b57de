#pragma once

// Exact Euler-genus decision by branch and bound over embedding schemes.
//
// Edges are inserted one at a time (BFS spanning tree first, each co-tree
// edge as soon as both ends are placed), branching over the insertion gaps
// in the partial rotations and over co-tree signatures. The partial scheme
// is retraced after every insertion; its Euler genus never decreases when
// edges are added, so any partial value above the target kills the branch.
//
// Normalization: spanning-tree signatures are fixed +1 (vertex switching
// reaches every embedding in this form), rotations are built as cyclic
// orders (quotienting cyclic shifts), and the third edge end placed at the
// root may use only one of its two gaps (quotienting global reflection).
// The enumeration therefore meets every embedding class at least once, and
// exhaustion proves non-embeddability.

#include <algorithm>
#include <map>
#include <stdexcept>
#include <variant>
#include <vector>

#include "embedding.hpp"
#include "graph.hpp"
#include "subdivision.hpp"

namespace ringtopo {

enum class Orientability { orientable, nonorientable, either };

struct EmbeddingFound {
    EmbeddingCertificate certificate;
};
struct ProvedNone {};
struct SearchBudgetExceeded {};
using SearchOutcome = std::variant<EmbeddingFound, ProvedNone, SearchBudgetExceeded>;

namespace genus_detail {

struct Engine {
    const Graph& g;
    int target;
    Orientability mode;
    long long budget;
    long long nodes = 0;
    bool out_of_budget = false;

    int p, q;
    std::vector<std::pair<int, int>> edges;  // sorted; end 2e sits at .first, 2e+1 at .second
    std::vector<int> order;                  // edge ids in insertion order
    std::vector<char> is_tree;
    int root = 0;
    int cotree_total = 0;

    // circular rotation lists over end ids
    std::vector<int> nxt, prv, end_vertex;
    std::vector<int> anchor, degc;
    std::vector<int> sig;
    std::vector<char> edge_placed;
    int placed_count = 0;
    int neg_count = 0;
    int cotree_placed = 0;

    // components of the placed subgraph
    std::vector<int> dsu_parent, dsu_size;
    int comp_count = 0;
    int touched = 0;

    // trace scratch: visited stamp per signed end state
    std::vector<long long> seen;
    long long stamp = 0;

    Engine(const Graph& graph, int k, Orientability m, long long b)
        : g(graph), target(k), mode(m), budget(b) {
        p = g.vertex_count();
        q = g.edge_count();
        edges = g.edges();
        std::sort(edges.begin(), edges.end());

        // root: lowest-index vertex of maximum degree
        root = 0;
        for (int v = 1; v < p; ++v)
            if (g.degree(v) > g.degree(root)) root = v;

        // insertion order: grow a spanning tree greedily, always attaching
        // the unplaced vertex with the most placed neighbors, and schedule
        // every cycle-closing edge the moment both of its ends are placed.
        // Early cycles make the partial-genus prune bite from the start.
        std::map<std::pair<int, int>, int> edge_id;
        for (int e = 0; e < q; ++e) edge_id[edges[static_cast<std::size_t>(e)]] = e;
        std::vector<char> placed_v(static_cast<std::size_t>(p), 0);
        std::vector<int> placed_neighbors(static_cast<std::size_t>(p), 0);
        is_tree.assign(static_cast<std::size_t>(q), 0);
        order.reserve(static_cast<std::size_t>(q));
        auto place_vertex = [&](int w) {
            placed_v[static_cast<std::size_t>(w)] = 1;
            for (int u : g.neighbors(w)) ++placed_neighbors[static_cast<std::size_t>(u)];
        };
        place_vertex(root);
        for (int step = 1; step < p; ++step) {
            int best = -1;
            for (int w = 0; w < p; ++w) {
                if (placed_v[static_cast<std::size_t>(w)] || placed_neighbors[static_cast<std::size_t>(w)] == 0)
                    continue;
                if (best < 0 ||
                    placed_neighbors[static_cast<std::size_t>(w)] > placed_neighbors[static_cast<std::size_t>(best)] ||
                    (placed_neighbors[static_cast<std::size_t>(w)] == placed_neighbors[static_cast<std::size_t>(best)] &&
                     g.degree(w) > g.degree(best)))
                    best = w;
            }
            if (best < 0) throw std::invalid_argument("embedding search requires a connected graph");
            int parent = -1;
            for (int u : g.neighbors(best))
                if (placed_v[static_cast<std::size_t>(u)]) {
                    parent = u;
                    break;
                }
            int te = edge_id.at({std::min(best, parent), std::max(best, parent)});
            is_tree[static_cast<std::size_t>(te)] = 1;
            order.push_back(te);
            place_vertex(best);
            for (int u : g.neighbors(best)) {
                if (u == parent || !placed_v[static_cast<std::size_t>(u)]) continue;
                order.push_back(edge_id.at({std::min(best, u), std::max(best, u)}));
            }
        }
        if (static_cast<int>(order.size()) != q)
            throw std::invalid_argument("embedding search requires a connected graph");
        cotree_total = q - (p - 1);

        nxt.assign(static_cast<std::size_t>(2 * q), -1);
        prv.assign(static_cast<std::size_t>(2 * q), -1);
        end_vertex.resize(static_cast<std::size_t>(2 * q));
        for (int e = 0; e < q; ++e) {
            end_vertex[static_cast<std::size_t>(2 * e)] = edges[static_cast<std::size_t>(e)].first;
            end_vertex[static_cast<std::size_t>(2 * e + 1)] = edges[static_cast<std::size_t>(e)].second;
        }
        anchor.assign(static_cast<std::size_t>(p), -1);
        degc.assign(static_cast<std::size_t>(p), 0);
        sig.assign(static_cast<std::size_t>(q), +1);
        edge_placed.assign(static_cast<std::size_t>(q), 0);
        dsu_parent.resize(static_cast<std::size_t>(p));
        dsu_size.assign(static_cast<std::size_t>(p), 1);
        for (int v = 0; v < p; ++v) dsu_parent[static_cast<std::size_t>(v)] = v;
        seen.assign(static_cast<std::size_t>(4 * q), 0);
    }

    int find(int v) {
        while (dsu_parent[static_cast<std::size_t>(v)] != v) v = dsu_parent[static_cast<std::size_t>(v)];
        return v;
    }

    // --- rotation surgery -------------------------------------------------

    void attach_first(int v, int end) {
        anchor[static_cast<std::size_t>(v)] = end;
        nxt[static_cast<std::size_t>(end)] = end;
        prv[static_cast<std::size_t>(end)] = end;
        degc[static_cast<std::size_t>(v)] = 1;
    }
    void attach_after(int v, int after, int end) {
        int follow = nxt[static_cast<std::size_t>(after)];
        nxt[static_cast<std::size_t>(after)] = end;
        prv[static_cast<std::size_t>(end)] = after;
        nxt[static_cast<std::size_t>(end)] = follow;
        prv[static_cast<std::size_t>(follow)] = end;
        ++degc[static_cast<std::size_t>(v)];
    }
    void detach(int v, int end) {
        if (degc[static_cast<std::size_t>(v)] == 1) {
            anchor[static_cast<std::size_t>(v)] = -1;
            degc[static_cast<std::size_t>(v)] = 0;
            return;
        }
        int a = prv[static_cast<std::size_t>(end)], b = nxt[static_cast<std::size_t>(end)];
        nxt[static_cast<std::size_t>(a)] = b;
        prv[static_cast<std::size_t>(b)] = a;
        --degc[static_cast<std::size_t>(v)];
    }
    // end currently at position i (walking nxt from the anchor)
    int end_at_gap(int v, int i) {
        int e = anchor[static_cast<std::size_t>(v)];
        for (int s = 0; s < i; ++s) e = nxt[static_cast<std::size_t>(e)];
        return e;
    }

    // --- partial trace -----------------------------------------------------

    // Euler genus of the partial scheme: 2*components - touched + placed - F
    int partial_euler_genus() {
        ++stamp;
        int orbits = 0;
        for (int e = 0; e < q; ++e) {
            if (!edge_placed[static_cast<std::size_t>(e)]) continue;
            for (int half = 0; half < 4; ++half) {
                int start = 4 * e + half;  // (end, sign) packed: end = start>>1, neg = start&1
                if (seen[static_cast<std::size_t>(start)] == stamp) continue;
                ++orbits;
                int sd = start;
                do {
                    seen[static_cast<std::size_t>(sd)] = stamp;
                    int y = sd >> 1;
                    int s = (sd & 1) ? -1 : +1;
                    int s2 = s * sig[static_cast<std::size_t>(y >> 1)];
                    int z = s2 > 0 ? nxt[static_cast<std::size_t>(y)] : prv[static_cast<std::size_t>(y)];
                    sd = ((z ^ 1) << 1) | (s2 < 0 ? 1 : 0);
                } while (sd != start);
            }
        }
        int faces = orbits / 2;
        return 2 * comp_count - touched + placed_count - faces;
    }

    // --- search -------------------------------------------------------------

    EmbeddingCertificate certificate;
    bool found = false;

    bool tick() {
        if (++nodes > budget) {
            out_of_budget = true;
            return false;
        }
        return true;
    }

    bool dfs(int idx) {
        if (idx == q) return complete();
        const int e = order[static_cast<std::size_t>(idx)];
        const auto [u, v] = edges[static_cast<std::size_t>(e)];
        const int end_u = 2 * e, end_v = 2 * e + 1;

        std::vector<int> signs;
        if (is_tree[static_cast<std::size_t>(e)] || mode == Orientability::orientable) {
            signs = {+1};
        } else if (mode == Orientability::nonorientable && neg_count == 0 &&
                   cotree_placed == cotree_total - 1) {
            signs = {-1};  // last co-tree edge must make the scheme nonorientable
        } else {
            signs = {+1, -1};
        }

        const int du = degc[static_cast<std::size_t>(u)];
        const int dv = degc[static_cast<std::size_t>(v)];
        const int gaps_u = du == 0 ? 1 : (u == root && du == 2 ? 1 : du);
        const int gaps_v = dv == 0 ? 1 : (v == root && dv == 2 ? 1 : dv);

        for (int gu = 0; gu < gaps_u; ++gu) {
            for (int gv = 0; gv < gaps_v; ++gv) {
                for (int sgn : signs) {
                    if (!tick()) return false;

                    // place
                    if (du == 0)
                        attach_first(u, end_u);
                    else
                        attach_after(u, end_at_gap(u, gu), end_u);
                    if (dv == 0)
                        attach_first(v, end_v);
                    else
                        attach_after(v, end_at_gap(v, gv), end_v);
                    sig[static_cast<std::size_t>(e)] = sgn;
                    edge_placed[static_cast<std::size_t>(e)] = 1;
                    ++placed_count;
                    if (sgn < 0) ++neg_count;
                    if (!is_tree[static_cast<std::size_t>(e)]) ++cotree_placed;

                    int merged_child = -1;
                    int comp_delta = 0, touched_delta = 0;
                    {
                        if (du == 0 && dv == 0) {
                            comp_delta = 1;
                            touched_delta = 2;
                        } else if (du == 0 || dv == 0) {
                            touched_delta = 1;
                        }
                        comp_count += comp_delta;
                        touched += touched_delta;
                        int ru = find(u), rv = find(v);
                        if (ru != rv) {
                            if (dsu_size[static_cast<std::size_t>(ru)] < dsu_size[static_cast<std::size_t>(rv)])
                                std::swap(ru, rv);
                            dsu_parent[static_cast<std::size_t>(rv)] = ru;
                            dsu_size[static_cast<std::size_t>(ru)] += dsu_size[static_cast<std::size_t>(rv)];
                            merged_child = rv;
                            if (!(du == 0 || dv == 0) || (du == 0 && dv == 0)) {
                                // joining two existing components
                                if (du != 0 && dv != 0) {
                                    comp_count -= 1;
                                    comp_delta -= 1;
                                }
                            }
                        }
                    }

                    bool ok = partial_euler_genus() <= target && dfs(idx + 1);
                    if (ok) return true;

                    // undo
                    if (merged_child >= 0) {
                        int parent_root = dsu_parent[static_cast<std::size_t>(merged_child)];
                        dsu_size[static_cast<std::size_t>(parent_root)] -=
                            dsu_size[static_cast<std::size_t>(merged_child)];
                        dsu_parent[static_cast<std::size_t>(merged_child)] = merged_child;
                    }
                    comp_count -= comp_delta;
                    touched -= touched_delta;
                    if (!is_tree[static_cast<std::size_t>(e)]) --cotree_placed;
                    if (sgn < 0) --neg_count;
                    --placed_count;
                    edge_placed[static_cast<std::size_t>(e)] = 0;
                    sig[static_cast<std::size_t>(e)] = +1;
                    detach(v, end_v);
                    detach(u, end_u);

                    if (out_of_budget) return false;
                }
            }
        }
        return false;
    }

    bool complete() {
        if (mode == Orientability::nonorientable && neg_count == 0) return false;
        int k = partial_euler_genus();
        if (k > target) return false;

        SignedScheme scheme;
        scheme.rotation.resize(static_cast<std::size_t>(p));
        for (int v = 0; v < p; ++v) {
            int a = anchor[static_cast<std::size_t>(v)];
            if (a < 0) continue;
            int cur = a;
            do {
                scheme.rotation[static_cast<std::size_t>(v)].push_back(
                    end_vertex[static_cast<std::size_t>(cur ^ 1)]);
                cur = nxt[static_cast<std::size_t>(cur)];
            } while (cur != a);
        }
        for (int e = 0; e < q; ++e)
            if (!is_tree[static_cast<std::size_t>(e)])
                scheme.signatures.push_back({edges[static_cast<std::size_t>(e)], sig[static_cast<std::size_t>(e)]});

        certificate = make_certificate(g, scheme);
        if (certificate.euler_genus != k || certificate.orientable != (neg_count == 0))
            throw std::logic_error("incremental trace disagrees with the certificate re-trace");
        found = true;
        return true;
    }
};

}  // namespace genus_detail

// Decide whether g has a cellular embedding of Euler genus <= max_euler_genus
// of the requested orientability kind. ProvedNone is exhaustive refutation;
// the budget counts insertion attempts and makes runs reproducible.
inline SearchOutcome search_embedding(const Graph& g, int max_euler_genus, Orientability mode,
                                      long long budget = 10'000'000, long long* nodes_used = nullptr) {
    if (g.vertex_count() < 1) throw std::invalid_argument("embedding search needs at least one vertex");
    if (max_euler_genus < 0) return ProvedNone{};
    for (const auto& [u, v] : g.edges())
        if (u == v) throw std::invalid_argument("embedding search is defined for loop-free graphs");

    if (g.edge_count() == 0) {
        if (g.vertex_count() != 1) throw std::invalid_argument("embedding search requires a connected graph");
        if (mode == Orientability::nonorientable) return ProvedNone{};
        SignedScheme scheme;
        scheme.rotation.assign(1, {});
        return EmbeddingFound{make_certificate(g, scheme)};
    }

    // face-count refutation: every face of a cellular embedding of a
    // connected simple graph with p >= 3 has length >= 3 (>= 4 without
    // triangles), so F <= 2q/L and the Euler genus is at least
    // 2 - p + q - 2q/L regardless of the scheme
    if (g.vertex_count() >= 3) {
        int len = g.is_triangle_free() ? 4 : 3;
        int k_min = 2 - g.vertex_count() + g.edge_count() - 2 * g.edge_count() / len;
        if (max_euler_genus < k_min) return ProvedNone{};
    }

    genus_detail::Engine engine(g, max_euler_genus, mode, budget);
    bool found = engine.dfs(0);
    if (nodes_used) *nodes_used = engine.nodes;
    if (found) return EmbeddingFound{std::move(engine.certificate)};
    if (engine.out_of_budget) return SearchBudgetExceeded{};
    return ProvedNone{};
}

// ---------------------------------------------------------------------------
// planarity: two independent deciders, cross-validated

class InternalDisagreement : public std::logic_error {
public:
    explicit InternalDisagreement(const std::string& msg) : std::logic_error(msg) {}
};

struct Planar {
    EmbeddingCertificate certificate;
};
struct NonPlanar {
    std::string obstruction_name;  // "K5" or "K33"
    SubdivisionModel model;
};
using PlanarityResult = std::variant<Planar, NonPlanar>;

namespace genus_detail {

struct ComponentSplit {
    std::vector<std::vector<int>> vertex_lists;  // original ids per component
    std::vector<Graph> graphs;
};

inline ComponentSplit split_components(const Graph& g) {
    ComponentSplit out;
    auto comp = g.components();
    int c = g.component_count();
    out.vertex_lists.resize(static_cast<std::size_t>(c));
    for (int v = 0; v < g.vertex_count(); ++v)
        out.vertex_lists[static_cast<std::size_t>(comp[static_cast<std::size_t>(v)])].push_back(v);
    for (const auto& vs : out.vertex_lists) out.graphs.push_back(g.induced_subgraph(vs));
    return out;
}

}  // namespace genus_detail

// Planarity decided twice: embedding search at Euler genus 0 per component,
// and Kuratowski subdivision search. The verdicts must agree.
inline PlanarityResult planarity(const Graph& g, long long budget = 50'000'000) {
    bool embeddable = true;
    auto split = genus_detail::split_components(g);
    std::vector<EmbeddingCertificate> certs;
    for (const auto& comp : split.graphs) {
        auto outcome = search_embedding(comp, 0, Orientability::orientable, budget);
        if (std::holds_alternative<SearchBudgetExceeded>(outcome))
            throw std::runtime_error("planarity: embedding search budget exhausted");
        if (std::holds_alternative<ProvedNone>(outcome)) {
            embeddable = false;
            break;
        }
        certs.push_back(std::get<EmbeddingFound>(outcome).certificate);
    }

    std::string found_name;
    SubdivisionModel found_model;
    bool has_model = false;
    // cheap find pass over both patterns first, exhaustive absence only when
    // neither shows up quickly
    const Graph k5 = complete_graph(5);
    const Graph k33 = complete_bipartite(3, 3);
    for (int pass = 0; pass < 2 && !has_model; ++pass) {
        long long pass_budget = pass == 0 ? std::min<long long>(budget, 100'000) : budget;
        bool exhaustive_ok = true;
        for (const char* name : {"K5", "K33"}) {
            auto outcome = find_subdivision(g, std::string(name) == "K5" ? k5 : k33, pass_budget);
            if (std::holds_alternative<SubdivisionModel>(outcome)) {
                found_name = name;
                found_model = std::get<SubdivisionModel>(outcome);
                has_model = true;
                break;
            }
            if (std::holds_alternative<SubdivisionBudgetExceeded>(outcome)) exhaustive_ok = false;
        }
        if (pass == 1 && !has_model && !exhaustive_ok)
            throw std::runtime_error("planarity: subdivision search budget exhausted");
        if (pass == 0 && !has_model && exhaustive_ok) break;  // already exhaustive within the small budget
    }

    if (embeddable && !has_model) {
        // stitch the per-component schemes back onto the original labels
        SignedScheme scheme;
        scheme.rotation.assign(static_cast<std::size_t>(g.vertex_count()), {});
        for (std::size_t c = 0; c < split.graphs.size(); ++c) {
            const auto& vs = split.vertex_lists[c];
            const auto& cert = certs[c];
            for (std::size_t local = 0; local < vs.size(); ++local)
                for (int u : cert.scheme.rotation[local])
                    scheme.rotation[static_cast<std::size_t>(vs[local])].push_back(vs[static_cast<std::size_t>(u)]);
            for (auto [e, s] : cert.scheme.signatures)
                scheme.signatures.push_back(
                    {{std::min(vs[static_cast<std::size_t>(e.first)], vs[static_cast<std::size_t>(e.second)]),
                      std::max(vs[static_cast<std::size_t>(e.first)], vs[static_cast<std::size_t>(e.second)])},
                     s});
        }
        auto cert = make_certificate(g, scheme);
        if (cert.euler_genus != 0 || !cert.orientable)
            throw std::logic_error("stitched planar certificate is not planar");
        return Planar{std::move(cert)};
    }
    if (!embeddable && has_model) return NonPlanar{found_name, std::move(found_model)};
    throw InternalDisagreement(embeddable ? "embeddable at genus 0 but a Kuratowski subdivision exists"
                                          : "no genus-0 embedding yet no Kuratowski subdivision found");
}

}  // namespace ringtopo
