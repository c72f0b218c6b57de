#pragma once

// Crosscap (nonorientable genus) machinery: closed-form values for complete
// and complete bipartite graphs, the edge-count lower bounds, the minimum
// degree consistency inequality, composition over components, and the
// orchestrated exact computation with witnesses on both sides of the bound.
//
// Convention: planar graphs have crosscap 0.

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "genus_search.hpp"
#include "graph.hpp"
#include "obstructions.hpp"

namespace ringtopo {

class TooFewVertices : public std::domain_error {
public:
    explicit TooFewVertices(const std::string& msg) : std::domain_error(msg) {}
};

class OutOfRange : public std::domain_error {
public:
    explicit OutOfRange(const std::string& msg) : std::domain_error(msg) {}
};

// crosscap of K_n: ceil((n-3)(n-4)/6), except 3 at n = 7
inline int kn_crosscap(int n) {
    if (n < 3) throw OutOfRange("kn_crosscap needs n >= 3");
    if (n == 7) return 3;
    return ((n - 3) * (n - 4) + 5) / 6;
}

// crosscap of K_{m,n}: ceil((m-2)(n-2)/2)
inline int kmn_crosscap(int m, int n) {
    if (m < 2 || n < 2) throw OutOfRange("kmn_crosscap needs m,n >= 2");
    return ((m - 2) * (n - 2) + 1) / 2;
}

// crosscap >= ceil(q/3) - p + n + 1, or with q/2 for triangle-free graphs;
// never negative
inline int crosscap_lower_bound_edges(int p, int q, int n_components, bool triangle_free) {
    if (p < 3) throw TooFewVertices("edge bound needs p >= 3");
    int value = (triangle_free ? (q + 1) / 2 : (q + 2) / 3) - p + n_components + 1;
    return std::max(0, value);
}

// delta(G) <= 6 + (6k - 6(n+1))/p, checked in integers
inline bool min_degree_consistency(const Graph& g, int k) {
    const int p = g.vertex_count();
    if (p < 3) throw TooFewVertices("degree consistency needs p >= 3");
    const int n = g.component_count();
    return static_cast<long long>(g.min_degree()) * p <= 6LL * p + 6LL * k - 6LL * (n + 1);
}

// crosscap of a disjoint union from per-component exact (crosscap, genus)
// pairs: 1 - n + sum crosscaps when every component has crosscap > 2*genus,
// otherwise 2n - sum max(2-2*genus, 2-crosscap)
inline int stahl_compose(const std::vector<std::pair<int, int>>& components) {
    if (components.empty()) throw std::invalid_argument("stahl_compose needs at least one component");
    const int n = static_cast<int>(components.size());
    bool all_exceed = true;
    for (auto [cc, gen] : components) all_exceed = all_exceed && cc > 2 * gen;
    if (all_exceed) {
        int sum = 0;
        for (auto [cc, gen] : components) sum += cc;
        return 1 - n + sum;
    }
    int mu_sum = 0;
    for (auto [cc, gen] : components) mu_sum += std::max(2 - 2 * gen, 2 - cc);
    return 2 * n - mu_sum;
}

// ---------------------------------------------------------------------------
// exact crosscap with witnesses

using ObstructionWitness = DetectedObstruction;

struct CrosscapResult {
    int lower = 0;
    std::optional<int> upper;
    bool exact = false;
    bool unknown = false;  // some search ran out of budget
    std::string lower_reason;
    std::string upper_reason;
    std::vector<EmbeddingCertificate> certificates;  // witnesses for the upper bound
    std::vector<ObstructionWitness> obstructions;    // witnesses for the lower bound
};

namespace crosscap_detail {

struct ComponentOutcome {
    int lower = 1;
    std::optional<int> upper;
    std::optional<int> orientable_euler;  // 2 * genus when known
    std::optional<EmbeddingCertificate> cert;
    std::optional<ObstructionWitness> obstruction;
    std::string lower_reason;
    std::string upper_reason;
    bool unknown = false;
};

// known crosscap lower bounds implied by a detected homeomorph
inline int obstruction_crosscap(const std::string& name) {
    if (name == "K5" || name == "K33") return 1;
    return 2;  // K44, K36 by formula; A2, B3, E18 are projective-plane obstructions
}

inline ComponentOutcome component_crosscap(const Graph& comp, long long budget, int early_exit_lower) {
    ComponentOutcome out;

    auto planar = planarity(comp, budget);
    if (std::holds_alternative<Planar>(planar)) {
        out.lower = 0;
        out.upper = 0;
        out.orientable_euler = 0;
        out.cert = std::get<Planar>(planar).certificate;
        out.lower_reason = out.upper_reason = "planar certificate";
        return out;
    }
    auto& np = std::get<NonPlanar>(planar);
    out.lower = 1;
    out.lower_reason = np.obstruction_name + " subdivision";
    out.obstruction = ObstructionWitness{np.obstruction_name, np.model};

    const int p = comp.vertex_count();
    if (comp.is_complete() && p >= 3) {
        out.lower = kn_crosscap(p);
        out.upper = out.lower;
        out.lower_reason = out.upper_reason = "complete graph formula";
        return out;
    }
    if (auto parts = comp.complete_bipartite_parts(); parts && parts->first >= 2) {
        out.lower = kmn_crosscap(parts->first, parts->second);
        out.upper = out.lower;
        out.lower_reason = out.upper_reason = "complete bipartite formula";
        return out;
    }

    if (p >= 3) {
        int bound = crosscap_lower_bound_edges(p, comp.edge_count(), 1, comp.is_triangle_free());
        if (bound > out.lower) {
            out.lower = bound;
            out.lower_reason = "edge-count bound";
        }
    }
    if (out.lower < 2 && early_exit_lower != 0) {
        // a known non-projective homeomorph pushes the bound to 2 cheaply
        auto hit = detect_obstruction(comp, {"K44", "K36", "A2", "B3", "E18"},
                                      std::min<long long>(budget, 200'000));
        if (auto* d = std::get_if<DetectedObstruction>(&hit)) {
            out.lower = std::max(out.lower, obstruction_crosscap(d->name));
            out.lower_reason = d->name + " homeomorph";
            out.obstruction = std::move(*d);
        }
    }

    if (early_exit_lower >= 0 && out.lower > early_exit_lower) return out;

    for (int k = std::max(out.lower, 1);; ++k) {
        auto found = search_embedding(comp, k, Orientability::nonorientable, budget);
        if (std::holds_alternative<SearchBudgetExceeded>(found)) {
            out.unknown = true;
            return out;
        }
        if (std::holds_alternative<EmbeddingFound>(found)) {
            out.upper = k;
            out.lower = k;
            out.upper_reason = "embedding certificate";
            if (out.lower_reason.empty()) out.lower_reason = "exhausted smaller genera";
            out.cert = std::get<EmbeddingFound>(found).certificate;
            return out;
        }
        out.lower = k + 1;
        out.lower_reason = "exhaustive refutation at Euler genus " + std::to_string(k);
        if (early_exit_lower >= 0 && out.lower > early_exit_lower) return out;
    }
}

// smallest orientable Euler genus (2 * genus), searched at even targets up to
// `cap`; nullopt when not found within cap/budget
inline std::optional<int> orientable_euler_upto(const Graph& comp, int cap, long long budget, bool& unknown) {
    for (int k = 0; k <= cap; k += 2) {
        auto found = search_embedding(comp, k, Orientability::orientable, budget);
        if (std::holds_alternative<SearchBudgetExceeded>(found)) {
            unknown = true;
            return std::nullopt;
        }
        if (std::holds_alternative<EmbeddingFound>(found)) return k;
    }
    return std::nullopt;
}

}  // namespace crosscap_detail

// Exact crosscap via per-component search composed with stahl_compose.
// With early_exit_lower >= 0, the computation stops as soon as the lower
// bound exceeds that value (the upper bound is then left open).
inline CrosscapResult crosscap_exact(const Graph& g, long long budget = 10'000'000,
                                     int early_exit_lower = -1) {
    CrosscapResult result;
    if (g.vertex_count() == 0) {
        result.upper = 0;
        result.exact = true;
        result.lower_reason = result.upper_reason = "empty graph";
        return result;
    }

    auto split = genus_detail::split_components(g);
    const int n = static_cast<int>(split.graphs.size());
    std::vector<crosscap_detail::ComponentOutcome> comps;
    comps.reserve(split.graphs.size());
    for (const auto& comp : split.graphs) {
        comps.push_back(crosscap_detail::component_crosscap(comp, budget, early_exit_lower));
        const auto& c = comps.back();
        result.unknown = result.unknown || c.unknown;
        if (c.cert) result.certificates.push_back(*c.cert);
        if (c.obstruction) result.obstructions.push_back(*c.obstruction);
    }

    if (n == 1) {
        const auto& c = comps.front();
        result.lower = c.lower;
        result.upper = c.upper;
        result.lower_reason = c.lower_reason;
        result.upper_reason = c.upper_reason;
        result.exact = c.upper.has_value() && *c.upper == c.lower;
    } else {
        bool all_exact = true;
        for (const auto& c : comps) all_exact = all_exact && c.upper.has_value() && *c.upper == c.lower;
        if (all_exact) {
            // orientable genus per component, needed to pick the Stahl case;
            // components whose minimum is already nonorientable only need to
            // know that no orientable embedding beats it
            std::vector<std::pair<int, int>> pairs;
            bool genus_unknown = false;
            for (std::size_t i = 0; i < comps.size(); ++i) {
                int cc = *comps[i].upper;
                std::optional<int> oe = comps[i].orientable_euler;
                if (!oe && cc > 0)
                    oe = crosscap_detail::orientable_euler_upto(split.graphs[i], cc - 1, budget, genus_unknown);
                if (genus_unknown) break;
                int genus_for_stahl = oe ? *oe / 2 : (cc + 1) / 2;  // any value with 2*genus >= crosscap works
                pairs.emplace_back(cc, genus_for_stahl);
            }
            if (!genus_unknown) {
                int total = stahl_compose(pairs);
                result.lower = result.upper.emplace(total);
                result.exact = true;
                result.lower_reason = result.upper_reason = "Stahl composition";
            } else {
                result.unknown = true;
            }
        }
        if (!result.exact) {
            // bracket: 1 - n + sum of lower bounds <= crosscap <= sum of uppers
            int sum_lower = 0, max_lower = 0;
            bool all_upper = true;
            int sum_upper = 0;
            for (const auto& c : comps) {
                sum_lower += c.lower;
                max_lower = std::max(max_lower, c.lower);
                if (c.upper)
                    sum_upper += *c.upper;
                else
                    all_upper = false;
            }
            result.lower = std::max(1 - n + sum_lower, max_lower);
            if (all_upper) result.upper = sum_upper;
            result.lower_reason = "component bracket";
            result.upper_reason = all_upper ? "sum of component values" : "";
            result.exact = result.upper && *result.upper == result.lower && !result.unknown;
        }
    }

    // sanity: every exact value must satisfy the minimum-degree inequality
    if (result.exact && g.vertex_count() >= 3 && !min_degree_consistency(g, *result.upper))
        throw std::logic_error("exact crosscap violates the minimum-degree inequality");
    return result;
}

}  // namespace ringtopo
