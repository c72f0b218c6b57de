#pragma once

// The reproduction suite: every headline classification result restated as
// a machine-checkable item, plus the randomized property suites. Items are
// consumed both by the standalone acceptance binary and by the verify-paper
// command.

#include <chrono>
#include <filesystem>
#include <mutex>
#include <fstream>
#include <functional>
#include <future>
#include <random>
#include <sstream>

#include "classifier.hpp"
#include "crosscap.hpp"
#include "isomorphism.hpp"
#include "obstructions.hpp"
#include "ring_graphs.hpp"

namespace ringtopo {

struct RunConfig {
    long long budget = 10'000'000;
    RingUniverse universe;
    std::string out_dir;     // witness certificates land here when non-empty
    std::string certs_dir;   // bundled golden certificates
    int workers = 1;
    bool include_slow = false;
    int section = 0;  // 0 = all
};

enum class CheckStatus { pass, fail, skipped, unknown };

inline std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "PASS";
        case CheckStatus::fail: return "FAIL";
        case CheckStatus::skipped: return "SKIPPED";
        default: return "UNKNOWN";
    }
}

struct CheckResult {
    std::string id;
    int section = 0;
    CheckStatus status = CheckStatus::fail;
    std::string detail;
    double seconds = 0.0;
};

// ---------------------------------------------------------------------------
// randomized property suites

struct PropertySuiteResult {
    std::string name;
    int cases = 0;
    std::vector<std::string> failures;
};

namespace verify_detail {

constexpr int kPropertyCases = 200;

inline const std::vector<FiniteRing>& universe_rings(const RingUniverse& u) {
    static std::map<std::string, std::vector<FiniteRing>> cache;
    std::string key = std::to_string(u.max_order) + "/" + std::to_string(u.max_factors);
    auto it = cache.find(key);
    if (it == cache.end()) {
        std::vector<FiniteRing> rings;
        for (const auto& m : generate_universe(u)) rings.push_back(compile_ring(parse_ring_spec(m.spec)));
        it = cache.emplace(key, std::move(rings)).first;
    }
    return it->second;
}

inline std::vector<Elem> random_subgroup(const FiniteRing& r, std::mt19937& rng) {
    const auto& units = r.units();
    std::vector<Elem> seed;
    int picks = std::uniform_int_distribution<int>(0, 2)(rng);
    for (int i = 0; i < picks; ++i)
        seed.push_back(units[std::uniform_int_distribution<std::size_t>(0, units.size() - 1)(rng)]);
    return r.subgroup_closure(seed);
}

inline std::vector<Elem> random_inverse_closed(const FiniteRing& r, const std::vector<Elem>& group,
                                               std::mt19937& rng) {
    std::vector<Elem> s;
    for (Elem g : group)
        if (std::uniform_int_distribution<int>(0, 2)(rng) == 0) {
            s.push_back(g);
            s.push_back(r.inverse(g));
        }
    if (s.empty()) {
        Elem g = group[std::uniform_int_distribution<std::size_t>(0, group.size() - 1)(rng)];
        s.push_back(g);
        s.push_back(r.inverse(g));
    }
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

inline Graph random_connected_graph(std::mt19937& rng, int max_p = 9) {
    int p = std::uniform_int_distribution<int>(2, max_p)(rng);
    Graph g(p);
    for (int v = 1; v < p; ++v) g.add_edge(v, std::uniform_int_distribution<int>(0, v - 1)(rng));
    int extra = std::uniform_int_distribution<int>(0, p)(rng);
    for (int i = 0; i < extra; ++i) {
        int u = std::uniform_int_distribution<int>(0, p - 1)(rng);
        int v = std::uniform_int_distribution<int>(0, p - 1)(rng);
        if (u != v) g.add_edge(u, v);
    }
    return g;
}

inline SignedScheme random_scheme(const Graph& g, std::mt19937& rng) {
    SignedScheme s;
    s.rotation.resize(static_cast<std::size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) {
        auto nb = g.neighbors(v);
        std::shuffle(nb.begin(), nb.end(), rng);
        s.rotation[static_cast<std::size_t>(v)] = nb;
    }
    for (const auto& e : g.edges())
        if (std::uniform_int_distribution<int>(0, 1)(rng)) s.signatures.push_back({e, -1});
    return s;
}

}  // namespace verify_detail

inline std::vector<PropertySuiteResult> run_property_suites(const RingUniverse& universe = {}) {
    using namespace verify_detail;
    std::vector<PropertySuiteResult> out;
    const auto& rings = universe_rings(universe);
    auto pick_ring = [&](std::mt19937& rng) -> const FiniteRing& {
        return rings[std::uniform_int_distribution<std::size_t>(0, rings.size() - 1)(rng)];
    };
    auto suite = [&](const std::string& name, int seed, auto&& body) {
        PropertySuiteResult r;
        r.name = name;
        std::mt19937 rng(static_cast<unsigned>(seed));
        for (int c = 0; c < kPropertyCases; ++c) {
            std::string err = body(rng);
            ++r.cases;
            if (!err.empty()) {
                r.failures.push_back("case " + std::to_string(c) + ": " + err);
                if (r.failures.size() > 4) break;
            }
        }
        out.push_back(std::move(r));
    };

    suite("gamma adjacency symmetry", 101, [&](std::mt19937& rng) -> std::string {
        const auto& r = pick_ring(rng);
        auto group = random_subgroup(r, rng);
        auto s = random_inverse_closed(r, group, rng);
        std::vector<char> in_g(static_cast<std::size_t>(r.order()), 0);
        for (Elem g : group) in_g[static_cast<std::size_t>(g)] = 1;
        auto adjacent = [&](Elem x, Elem y) {
            for (Elem sv : s)
                if (in_g[static_cast<std::size_t>(r.add(x, r.mul(sv, y)))]) return true;
            return false;
        };
        Elem x = std::uniform_int_distribution<Elem>(0, r.order() - 1)(rng);
        Elem y = std::uniform_int_distribution<Elem>(0, r.order() - 1)(rng);
        if (adjacent(x, y) != adjacent(y, x)) return "asymmetric pair in " + r.spec_string();
        return {};
    });

    suite("degree bounds", 102, [&](std::mt19937& rng) -> std::string {
        const auto& r = pick_ring(rng);
        auto group = random_subgroup(r, rng);
        auto s = random_inverse_closed(r, group, rng);
        auto data = validate_S(r, group, s);
        auto g = build_gamma(r, data);
        auto gbar = build_gamma(r, data, true);
        const int gsize = static_cast<int>(group.size());
        Elem x = std::uniform_int_distribution<Elem>(0, r.order() - 1)(rng);
        if (g.degree(x) < gsize - 1 || g.degree(x) > gsize * static_cast<int>(s.size()))
            return "gamma degree bound fails in " + r.spec_string();
        if (gbar.neighbor_count(x) < gsize) return "gamma-bar degree bound fails in " + r.spec_string();
        return {};
    });

    suite("radical coset lifting", 103, [&](std::mt19937& rng) -> std::string {
        const auto& r = pick_ring(rng);
        const auto& jac = r.jacobson_radical();
        auto s = random_inverse_closed(r, r.units(), rng);
        auto g = build_gamma(r, s);
        Elem x = std::uniform_int_distribution<Elem>(0, r.order() - 1)(rng);
        Elem y = std::uniform_int_distribution<Elem>(0, r.order() - 1)(rng);
        if (std::binary_search(jac.begin(), jac.end(), r.sub(x, y))) return {};
        if (!g.has_edge(x, y)) return {};
        for (Elem j1 : jac)
            for (Elem j2 : jac)
                if (!g.has_edge(r.add(x, j1), r.add(y, j2)))
                    return "coset lifting fails in " + r.spec_string();
        return {};
    });

    suite("index-2 ideal bipartiteness", 104, [&](std::mt19937& rng) -> std::string {
        const auto& r = pick_ring(rng);
        if (r.index2_maximal_ideals().empty()) return {};
        auto s = random_inverse_closed(r, r.units(), rng);
        auto g = build_gamma(r, s);
        if (!g.is_bipartite()) return "not bipartite: " + r.spec_string();
        std::vector<Elem> m;
        if (r.is_local(&m)) {
            auto parts = g.complete_bipartite_parts();
            if (!parts || parts->first != static_cast<int>(m.size()) ||
                parts->second != static_cast<int>(m.size()))
                return "local ring graph is not K_{m,m}: " + r.spec_string();
        }
        return {};
    });

    suite("tensor product identity", 106, [&](std::mt19937& rng) -> std::string {
        static const std::vector<std::string> small = {"Z2", "Z3", "Z4", "Z2[x]/(x^2)", "GF(4)", "Z5"};
        static std::vector<FiniteRing> small_rings = [] {
            std::vector<FiniteRing> v;
            for (const auto& spec : small) v.push_back(compile_ring(parse_ring_spec(spec)));
            return v;
        }();
        const auto& r1 = small_rings[std::uniform_int_distribution<std::size_t>(0, small_rings.size() - 1)(rng)];
        const auto& r2 = small_rings[std::uniform_int_distribution<std::size_t>(0, small_rings.size() - 1)(rng)];
        auto g1 = random_subgroup(r1, rng);
        auto g2 = random_subgroup(r2, rng);
        auto s1 = random_inverse_closed(r1, g1, rng);
        auto s2 = random_inverse_closed(r2, g2, rng);
        auto prod = compile_ring(product({parse_ring_spec(r1.spec_string()), parse_ring_spec(r2.spec_string())}));
        std::vector<Elem> gp, sp;
        for (Elem a : g1)
            for (Elem b : g2) gp.push_back(prod.encode_tuple({a, b}));
        for (Elem a : s1)
            for (Elem b : s2) sp.push_back(prod.encode_tuple({a, b}));
        auto direct = build_gamma(prod, validate_S(prod, gp, sp));
        auto lifted = tensor(build_gamma(r1, validate_S(r1, g1, s1), true),
                             build_gamma(r2, validate_S(r2, g2, s2), true));
        auto e1 = lifted.edges();
        auto e2 = direct.edges();
        std::sort(e1.begin(), e1.end());
        std::sort(e2.begin(), e2.end());
        if (e1 != e2) return "tensor mismatch over " + prod.spec_string();
        return {};
    });

    suite("Z2-factor disjoint copies", 107, [&](std::mt19937& rng) -> std::string {
        static const std::vector<std::string> base = {"Z3", "Z4",    "Z2[x]/(x^2)", "GF(4)",
                                                      "Z5", "Z7",    "Z8",          "Z9"};
        const auto& tspec = base[std::uniform_int_distribution<std::size_t>(0, base.size() - 1)(rng)];
        auto t = compile_ring(parse_ring_spec(tspec));
        auto sp = random_inverse_closed(t, t.units(), rng);
        int ell = std::uniform_int_distribution<int>(1, 2)(rng);
        std::string spec = tspec;
        for (int i = 0; i < ell; ++i) spec = "Z2 x " + spec;
        auto r = compile_ring(parse_ring_spec(spec));
        std::vector<Elem> s;
        for (Elem v : sp) {
            std::vector<int> tup(static_cast<std::size_t>(ell), 1);
            tup.push_back(v);
            s.push_back(r.encode_tuple(tup));
        }
        auto big = build_gamma(r, s);
        if (build_gamma(r, s, true).edge_count() != big.edge_count())
            return "loop-freeness precondition fails over " + spec;
        auto z2t = compile_ring(parse_ring_spec("Z2 x " + tspec));
        std::vector<Elem> s2;
        for (Elem v : sp) s2.push_back(z2t.encode_tuple({1, v}));
        auto copies = disjoint_copies(build_gamma(z2t, s2), 1 << (ell - 1));
        if (!isomorphic(big, copies)) return "disjoint-copy isomorphism fails over " + spec;
        return {};
    });

    suite("composition formula vs assignment oracle", 108, [&](std::mt19937& rng) -> std::string {
        int n = std::uniform_int_distribution<int>(1, 4)(rng);
        std::vector<std::pair<int, int>> comps;
        for (int i = 0; i < n; ++i) {
            int genus = std::uniform_int_distribution<int>(0, 3)(rng);
            int crosscap = genus == 0 ? 0 : std::uniform_int_distribution<int>(1, 2 * genus + 1)(rng);
            comps.emplace_back(crosscap, genus);
        }
        int best = -1;
        for (int mask = 0; mask < (1 << n); ++mask) {
            int total = 0;
            bool all_orient = true;
            for (int i = 0; i < n; ++i) {
                if (mask >> i & 1)
                    total += 2 * comps[static_cast<std::size_t>(i)].second;
                else {
                    total += comps[static_cast<std::size_t>(i)].first;
                    all_orient = false;
                }
            }
            if (all_orient && total > 0) total += 1;
            if (best < 0 || total < best) best = total;
        }
        if (stahl_compose(comps) != best) return "composition formula disagrees with the oracle";
        return {};
    });

    suite("union crosscap vs component search", 109, [&](std::mt19937& rng) -> std::string {
        struct PoolEntry {
            Graph graph;
            int crosscap;
            int genus;
        };
        static const std::vector<PoolEntry> pool = [] {
            std::vector<PoolEntry> entries;
            auto add = [&](Graph g) {
                int cc = 0, genus = 0;
                if (std::holds_alternative<NonPlanar>(planarity(g))) {
                    for (int k = 1;; ++k)
                        if (std::holds_alternative<EmbeddingFound>(
                                search_embedding(g, k, Orientability::nonorientable))) {
                            cc = k;
                            break;
                        }
                    for (int k = 2;; k += 2)
                        if (std::holds_alternative<EmbeddingFound>(
                                search_embedding(g, k, Orientability::orientable))) {
                            genus = k / 2;
                            break;
                        }
                }
                entries.push_back({std::move(g), cc, genus});
            };
            add(complete_graph(3));
            add(complete_graph(4));
            add(complete_graph(5));
            add(complete_graph(6));
            add(complete_graph(7));
            add(complete_bipartite(3, 3));
            add(complete_bipartite(3, 4));
            add(complete_bipartite(2, 5));
            return entries;
        }();
        static std::map<std::pair<std::size_t, std::size_t>, int> memo;

        std::size_t i = std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng);
        std::size_t j = std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng);
        if (i > j) std::swap(i, j);
        int expected = -1;
        for (int mask = 0; mask < 4; ++mask) {
            int total = 0;
            bool all_orient = true;
            for (int t = 0; t < 2; ++t) {
                const auto& e = t == 0 ? pool[i] : pool[j];
                if (mask >> t & 1)
                    total += 2 * e.genus;
                else {
                    total += e.crosscap;
                    all_orient = false;
                }
            }
            if (all_orient && total > 0) total += 1;
            if (expected < 0 || total < expected) expected = total;
        }
        auto it = memo.find({i, j});
        if (it == memo.end()) {
            const auto& a = pool[i].graph;
            const auto& b = pool[j].graph;
            Graph u(a.vertex_count() + b.vertex_count());
            for (auto [x, y] : a.edges()) u.add_edge(x, y);
            for (auto [x, y] : b.edges()) u.add_edge(a.vertex_count() + x, a.vertex_count() + y);
            auto result = crosscap_exact(u);
            if (!result.exact) return "union crosscap did not resolve";
            it = memo.emplace(std::make_pair(i, j), *result.upper).first;
        }
        if (it->second != expected) return "union crosscap disagrees with the assignment oracle";
        return {};
    });

    suite("dart conservation and certificate round-trip", 110, [&](std::mt19937& rng) -> std::string {
        auto g = random_connected_graph(rng);
        auto scheme = random_scheme(g, rng);
        auto trace = trace_faces(g, scheme);
        std::size_t total = 0;
        for (const auto& f : trace.faces) total += f.size();
        if (total != 2 * static_cast<std::size_t>(g.edge_count())) return "dart conservation fails";
        if (trace.euler_genus != 2 * trace.components - g.vertex_count() + g.edge_count() - trace.face_count)
            return "Euler identity fails";
        auto cert = make_certificate(g, scheme);
        auto text = certificate_to_text(cert);
        auto back = certificate_from_text(text);
        if (certificate_to_text(back) != text) return "certificate text round-trip not bit-exact";
        if (!verify_certificate(g, back).ok) return "re-parsed certificate fails verification";
        return {};
    });

    return out;
}

// ---------------------------------------------------------------------------
// acceptance items

namespace verify_detail {

struct Context {
    const RunConfig& config;
    std::vector<ExactCrosscapRecord> records;
    std::optional<std::vector<ClassificationVerdict>> universe_rows;
    std::mutex mutex;

    const std::vector<ClassificationVerdict>& rows() {
        if (!universe_rows) universe_rows = cross_validate(config.universe, config.budget, config.workers);
        return *universe_rows;
    }

    void record(const FiniteRing& ring, const std::string& family, const std::vector<Elem>& s, int k) {
        std::lock_guard<std::mutex> lock(mutex);
        records.push_back(make_exact_record(ring, family, s, k));
    }
};

struct Item {
    std::string id;
    int section;
    std::function<void(Context&, CheckResult&)> run;
};

struct Failure {
    std::string what;
};

struct OutOfBudget {
    std::string what;
};

inline void require(bool ok, const std::string& what) {
    if (!ok) throw Failure{what};
}

inline std::string k_str(int k) { return std::to_string(k); }

// exact crosscap of a connected nonplanar graph by pure search
inline std::optional<int> searched_crosscap(const Graph& g, long long budget) {
    if (std::holds_alternative<Planar>(planarity(g, budget))) return 0;
    for (int k = 1;; ++k) {
        auto outcome = search_embedding(g, k, Orientability::nonorientable, budget);
        if (std::holds_alternative<SearchBudgetExceeded>(outcome)) return std::nullopt;
        if (std::holds_alternative<EmbeddingFound>(outcome)) return k;
    }
}

inline void write_witness(const RunConfig& config, const std::string& name,
                          const EmbeddingCertificate& cert) {
    if (config.out_dir.empty()) return;
    std::filesystem::create_directories(config.out_dir);
    std::ofstream out(std::filesystem::path(config.out_dir) / (name + ".cert"));
    out << certificate_to_text(cert);
}

inline EmbeddingCertificate load_certificate(const std::string& dir, const std::string& name) {
    auto path = std::filesystem::path(dir) / (name + ".cert");
    std::ifstream in(path);
    require(in.good(), "missing bundled certificate: " + path.string());
    std::stringstream buffer;
    buffer << in.rdbuf();
    return certificate_from_text(buffer.str());
}

inline std::vector<Item> build_items() {
    std::vector<Item> items;

    items.push_back({"crosscap-formula-vs-search", 2, [](Context& ctx, CheckResult& res) {
        std::ostringstream detail;
        struct Case {
            const char* name;
            Graph graph;
            int expected;
        };
        std::vector<Case> cases;
        cases.push_back({"K5", complete_graph(5), kn_crosscap(5)});
        cases.push_back({"K6", complete_graph(6), kn_crosscap(6)});
        cases.push_back({"K33", complete_bipartite(3, 3), kmn_crosscap(3, 3)});
        cases.push_back({"K34", complete_bipartite(3, 4), kmn_crosscap(3, 4)});
        for (auto& c : cases) {
            auto t0 = std::chrono::steady_clock::now();
            auto k = searched_crosscap(c.graph, ctx.config.budget);
            double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            if (!k) throw OutOfBudget{std::string(c.name) + ": search ran out of budget"};
            require(*k == c.expected, std::string(c.name) + ": search says " + k_str(*k) +
                                          ", formula says " + k_str(c.expected));
            require(dt <= 60.0, std::string(c.name) + ": exceeded 60 s");
            detail << c.name << "=" << *k << " (" << static_cast<int>(dt * 1000) << "ms) ";
        }
        res.detail = detail.str();
    }});

    items.push_back({"k44-crosscap-two", 2, [](Context& ctx, CheckResult& res) {
        auto t0 = std::chrono::steady_clock::now();
        auto k44 = complete_bipartite(4, 4);
        int lower = crosscap_lower_bound_edges(8, 16, 1, true);
        require(lower == 2, "triangle-free edge bound should give 2, got " + k_str(lower));
        auto outcome = search_embedding(k44, 2, Orientability::nonorientable, ctx.config.budget);
        require(std::holds_alternative<EmbeddingFound>(outcome), "no Euler-genus-2 embedding found");
        const auto& cert = std::get<EmbeddingFound>(outcome).certificate;
        require(cert.euler_genus == 2 && !cert.orientable, "certificate is not a nonorientable genus-2 one");
        require(verify_certificate(k44, cert).ok, "certificate fails re-verification");
        double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        require(dt <= 600.0, "exceeded 10 minutes");
        write_witness(ctx.config, "k44_genus2", cert);
        res.detail = "lower=2 (edge bound), upper=2 (certificate, " +
                     std::to_string(static_cast<int>(dt * 1000)) + "ms)";
    }});

    items.push_back({"k7-crosscap-three", 2, [](Context& ctx, CheckResult& res) {
        if (!ctx.config.include_slow) {
            res.status = CheckStatus::skipped;
            res.detail = "enable with --include-slow";
            return;
        }
        auto k7 = complete_graph(7);
        for (int k : {1, 2}) {
            auto outcome = search_embedding(k7, k, Orientability::nonorientable, ctx.config.budget);
            if (std::holds_alternative<SearchBudgetExceeded>(outcome)) {
                res.status = CheckStatus::skipped;
                res.detail = "budget exhausted refuting Euler genus " + k_str(k);
                return;
            }
            require(std::holds_alternative<ProvedNone>(outcome),
                    "unexpected embedding at Euler genus " + k_str(k));
        }
        auto found = search_embedding(k7, 3, Orientability::nonorientable, ctx.config.budget);
        if (std::holds_alternative<SearchBudgetExceeded>(found)) {
            res.status = CheckStatus::skipped;
            res.detail = "budget exhausted searching Euler genus 3";
            return;
        }
        require(std::holds_alternative<EmbeddingFound>(found), "no Euler-genus-3 embedding found");
        write_witness(ctx.config, "k7_genus3", std::get<EmbeddingFound>(found).certificate);
        res.detail = "refuted 1 and 2 exhaustively, certificate at 3";
    }});

    items.push_back({"z5-z7-local-projectivity", 4, [](Context& ctx, CheckResult& res) {
        auto z5 = compile_ring(parse_ring_spec("Z5"));
        int projective_count = 0;
        for (const auto& s : inverse_closed_subsets(z5)) {
            auto g = build_gamma(z5, s);
            if (s == std::vector<Elem>{1}) {
                require(std::holds_alternative<Planar>(planarity(g, ctx.config.budget)),
                        "unit-style graph over Z5 should be planar");
                continue;
            }
            require(std::holds_alternative<NonPlanar>(planarity(g, ctx.config.budget)),
                    "expected nonplanar over Z5");
            auto outcome = search_embedding(g, 1, Orientability::nonorientable, ctx.config.budget);
            if (std::holds_alternative<SearchBudgetExceeded>(outcome))
                throw OutOfBudget{"projective search over Z5 ran out of budget"};
            require(std::holds_alternative<EmbeddingFound>(outcome),
                    "no projective certificate over Z5");
            ctx.record(z5, "gamma", s, 1);
            ++projective_count;
        }
        require(projective_count == 6, "expected 6 projective connection sets over Z5");

        auto z7 = compile_ring(parse_ring_spec("Z7"));
        auto k7 = complete_graph(7);
        int k7_count = 0;
        for (const auto& s : inverse_closed_subsets(z7)) {
            auto g = build_gamma(z7, s);
            if (s == std::vector<Elem>{1}) {
                require(isomorphic(g, obstruction("A2").graph).has_value(),
                        "Gamma(Z7,{1}) is not the catalog A2");
                auto outcome = search_embedding(g, 1, Orientability::nonorientable, ctx.config.budget);
                require(std::holds_alternative<ProvedNone>(outcome),
                        "Gamma(Z7,{1}) unexpectedly embeds at Euler genus 1");
            } else {
                require(isomorphic(g, k7).has_value(), "expected the complete graph over Z7");
                require(!min_degree_consistency(g, 1),
                        "minimum-degree inequality unexpectedly holds at k=1");
                ++k7_count;
            }
        }
        require(k7_count == 14, "expected 14 complete cases over Z7");
        res.detail = "Z5: 6 projective + 1 planar; Z7: A2 refuted at genus 1, 14 K7 cases below bound";
    }});

    items.push_back({"z3z3-exhaustive", 4, [](Context& ctx, CheckResult& res) {
        auto r = compile_ring(parse_ring_spec("Z3 x Z3"));
        auto e = [&](int a, int b) { return r.encode_tuple({a, b}); };
        auto key = [&](std::vector<Elem> s) {
            std::sort(s.begin(), s.end());
            return s;
        };
        const std::set<std::vector<Elem>> projective = {key({e(2, 2)}), key({e(1, 2), e(2, 2)}),
                                                        key({e(2, 1), e(2, 2)})};
        const std::set<std::vector<Elem>> k44_pairs = {key({e(1, 1), e(2, 2)}), key({e(1, 2), e(2, 1)})};

        int checked = 0, projective_seen = 0, k44_seen = 0;
        for (const auto& s : inverse_closed_subsets(r)) {
            ++checked;
            auto g = build_gamma(r, s);
            auto computed = compute_topo_class(g, ctx.config.budget);
            auto expected = theory_gamma_class(r, s);
            require(computed.cls == expected,
                    "class mismatch at S=" + classify_detail::describe_s(r, s) + ": computed " +
                        to_string(computed.cls) + ", table " + to_string(expected));
            if (computed.cls == TopoClass::projective) {
                require(projective.count(key(s)) == 1,
                        "unexpected projective S=" + classify_detail::describe_s(r, s));
                ctx.record(r, "gamma", s, 1);
                ++projective_seen;
            }
            if (k44_pairs.count(key(s)) == 1 || s.size() >= 3) {
                auto hit = detect_obstruction(g, {"K44"}, ctx.config.budget);
                require(std::holds_alternative<DetectedObstruction>(hit),
                        "no K44 homeomorph at S=" + classify_detail::describe_s(r, s));
                ++k44_seen;
            }
        }
        require(checked == 15, "expected 15 inverse-closed connection sets");
        require(projective_seen == 3, "expected exactly 3 projective sets");

        auto host = build_gamma(r, {e(1, 1), e(1, 2)});
        auto b3 = detect_obstruction(host, {"B3"}, ctx.config.budget);
        require(std::holds_alternative<DetectedObstruction>(b3), "no B3 homeomorph in the mixed-pair graph");
        require(verify_subdivision_model(host, obstruction("B3").graph,
                                         std::get<DetectedObstruction>(b3).model),
                "B3 model fails verification");

        require(isomorphic(build_gamma(r, {e(1, 1), e(2, 1)}), build_gamma(r, {e(1, 1), e(1, 2)}))
                    .has_value(),
                "swap reduction 1 fails");
        require(isomorphic(build_gamma(r, {e(2, 1), e(2, 2)}), build_gamma(r, {e(1, 2), e(2, 2)}))
                    .has_value(),
                "swap reduction 2 fails");

        if (!ctx.config.certs_dir.empty()) {
            auto cert1 = load_certificate(ctx.config.certs_dir, "gamma_z3xz3_diag");
            require(verify_certificate(build_gamma(r, {e(2, 2)}), cert1).ok &&
                        cert1.euler_genus == 1,
                    "bundled diagonal certificate fails");
            auto cert2 = load_certificate(ctx.config.certs_dir, "gamma_z3xz3_pair");
            require(verify_certificate(build_gamma(r, {e(1, 2), e(2, 2)}), cert2).ok &&
                        cert2.euler_genus == 1,
                    "bundled pair certificate fails");
        }
        res.detail = "15 sets checked: 3 projective, " + k_str(k44_seen) +
                     " K44 homeomorphs, B3 found, both swap reductions verified";
    }});

    items.push_back({"planar-classification-universe", 4, [](Context& ctx, CheckResult& res) {
        auto t0 = std::chrono::steady_clock::now();
        const auto& rows = ctx.rows();
        int disagreements = 0, unknowns = 0;
        for (const auto& row : rows) {
            if (row.computed == TopoClass::unknown) ++unknowns;
            else if (!row.agreement) ++disagreements;
        }
        if (disagreements == 0 && unknowns > 0)
            throw OutOfBudget{k_str(unknowns) + " rows budget-limited"};
        require(disagreements == 0, k_str(disagreements) + " rows disagree with the tables");
        double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        require(dt <= 1800.0, "exceeded 30 minutes");
        for (const auto& row : rows) {
            if (row.computed != TopoClass::projective) continue;
            auto ring = compile_ring(parse_ring_spec(row.ring_spec));
            std::vector<Elem> s;
            if (!row.s_desc.empty())
                s = parse_element_set(ring, row.s_desc.substr(1, row.s_desc.size() - 2));
            ctx.record(ring, row.family, s, 1);
        }
        res.detail = std::to_string(rows.size()) + " rows, 100% agreement (" +
                     std::to_string(static_cast<int>(dt)) + "s)";
    }});

    items.push_back({"order-8-9-local-rings", 4, [](Context& ctx, CheckResult& res) {
        auto k44 = complete_bipartite(4, 4);
        for (const char* spec : {"Z8", "Z2[x]/(x^3)"}) {
            auto r = compile_ring(parse_ring_spec(spec));
            bool witnessed = false;
            for (const auto& s : inverse_closed_subsets(r)) {
                auto g = build_gamma(r, s);
                require(isomorphic(g, k44).has_value(),
                        std::string(spec) + ": graph is not K44 at S=" +
                            classify_detail::describe_s(r, s));
                auto result = crosscap_exact(g, ctx.config.budget);
                require(result.exact && *result.upper == 2,
                        std::string(spec) + ": crosscap is not exactly 2");
                ctx.record(r, "gamma", s, 2);
                if (!witnessed) {
                    auto found = search_embedding(g, 2, Orientability::nonorientable, ctx.config.budget);
                    require(std::holds_alternative<EmbeddingFound>(found),
                            std::string(spec) + ": no genus-2 certificate");
                    witnessed = true;
                }
            }
        }
        for (const char* spec : {"Z9", "Z3[x]/(x^2)"}) {
            auto r = compile_ring(parse_ring_spec(spec));
            for (const auto& s : inverse_closed_subsets(r)) {
                auto g = build_gamma(r, s);
                auto hit = detect_obstruction(g, {"K36"}, ctx.config.budget);
                require(std::holds_alternative<DetectedObstruction>(hit),
                        std::string(spec) + ": no K36 homeomorph at S=" +
                            classify_detail::describe_s(r, s));
            }
        }
        res.detail = "order 8: K44 with crosscap 2 for all 15 sets each; order 9: K36 homeomorph for all sets";
    }});

    items.push_back({"bipartite-edge-counts", 4, [](Context& ctx, CheckResult& res) {
        struct Row {
            const char* spec;
            int p;
            int q;
            bool at_least;  // q is a floor, not an exact value
        };
        const std::vector<Row> table = {
            {"Z2 x Z5", 10, 20, false},  {"Z2 x Z7", 14, 42, false},       {"Z2 x Z9", 18, 54, false},
            {"Z3 x Z4", 12, 24, false},  {"Z4 x Z4", 16, 32, false},       {"GF(4) x Z4", 16, 48, false},
            {"Z2 x Z3 x Z3", 18, 36, false}, {"Z2 x Z3 x Z4", 24, 48, true}, {"Z2 x Z4 x Z4", 32, 64, true},
        };
        std::ostringstream detail;
        for (const auto& row : table) {
            auto r = compile_ring(parse_ring_spec(row.spec));
            auto g = build_gamma(r, {r.one()});
            auto rep = structure_report(g);
            require(rep.p == row.p, std::string(row.spec) + ": p=" + k_str(rep.p));
            if (row.at_least)
                require(rep.q >= row.q, std::string(row.spec) + ": q=" + k_str(rep.q));
            else
                require(rep.q == row.q, std::string(row.spec) + ": q=" + k_str(rep.q));
            require(rep.bipartite && rep.triangle_free, std::string(row.spec) + ": not triangle-free bipartite");
            int bound = crosscap_lower_bound_edges(rep.p, rep.q, rep.components, rep.triangle_free);
            require(bound >= 2, std::string(row.spec) + ": edge bound " + k_str(bound) + " < 2");
            detail << "(" << rep.p << "," << rep.q << ")>=" << bound << " ";
        }
        // the 6-regular tensor graph on 12 vertices
        auto z3 = compile_ring(parse_ring_spec("Z3"));
        auto t = tensor(build_gamma(z3, {1}, true), complete_graph(4));
        require(t.vertex_count() == 12, "tensor graph vertex count");
        for (int v = 0; v < 12; ++v) require(t.degree(v) == 6, "tensor graph is not 6-regular");
        res.detail = detail.str() + "| tensor with K4 is 6-regular";
    }});

    items.push_back({"comaximal-classification", 5, [](Context& ctx, CheckResult& res) {
        const std::set<std::string> planar_list = {"Z2",    "Z3",      "Z4",       "Z2[x]/(x^2)",
                                                   "GF(4)", "Z2 x Z2", "Z2 x Z3",  "Z2 x Z2 x Z2"};
        const std::set<std::string> projective_list = {"Z2 x Z4", "Z2 x Z2[x]/(x^2)", "Z5"};
        int planar_seen = 0, projective_seen = 0;
        for (const auto& row : ctx.rows()) {
            if (row.family != "comaximal") continue;
            auto ring = compile_ring(parse_ring_spec(row.ring_spec));
            auto canon = canonical_decomposition(ring).display;
            bool in_planar = planar_list.count(canon) == 1;
            bool in_projective = projective_list.count(canon) == 1;
            require((row.computed == TopoClass::planar) == in_planar,
                    row.ring_spec + ": co-maximal planar verdict mismatch");
            require((row.computed == TopoClass::projective) == in_projective,
                    row.ring_spec + ": co-maximal projective verdict mismatch");
            planar_seen += in_planar;
            projective_seen += in_projective;
        }
        require(planar_seen >= 8, "planar co-maximal list not fully covered");
        require(projective_seen >= 3, "projective co-maximal list not fully covered");

        auto z2_4 = compile_ring(parse_ring_spec("Z2 x Z2 x Z2 x Z2"));
        auto g16 = build_comaximal(z2_4);
        auto hit = detect_obstruction(g16, {"K44"}, ctx.config.budget);
        require(std::holds_alternative<DetectedObstruction>(hit), "no K44 subdivision in the 16-element case");
        require(verify_subdivision_model(g16, obstruction("K44").graph,
                                         std::get<DetectedObstruction>(hit).model),
                "K44 model fails verification");

        auto z224 = compile_ring(parse_ring_spec("Z2 x Z2 x Z4"));
        auto hit2 = detect_obstruction(build_comaximal(z224), {"K44"}, ctx.config.budget);
        require(std::holds_alternative<DetectedObstruction>(hit2), "no K44 in Z2 x Z2 x Z4");

        auto z223 = compile_ring(parse_ring_spec("Z2 x Z2 x Z3"));
        require(build_comaximal(z223).edge_count() == 35, "expected 35 edges over Z2 x Z2 x Z3");

        for (const auto& spec : projective_list) {
            auto ring = compile_ring(parse_ring_spec(spec));
            ctx.record(ring, "comaximal", {}, 1);
        }
        if (!ctx.config.certs_dir.empty()) {
            auto z2z4 = compile_ring(parse_ring_spec("Z2 x Z4"));
            auto cert = load_certificate(ctx.config.certs_dir, "comaximal_z2xz4");
            require(verify_certificate(build_comaximal(z2z4), cert).ok && cert.euler_genus == 1,
                    "bundled co-maximal certificate fails");
        }
        res.detail = "planar x" + k_str(planar_seen) + ", projective x" + k_str(projective_seen) +
                     ", K44 witnesses found, 35 edges confirmed";
    }});

    items.push_back({"size-bound-audit", 3, [](Context& ctx, CheckResult& res) {
        auto report = size_bound_audit(ctx.records);
        require(report.checked > 0, "no exact positive crosscaps were recorded");
        std::string all;
        for (const auto& v : report.violations) all += v + "; ";
        require(report.violations.empty(), "violations: " + all);
        res.detail = std::to_string(report.checked) + " exact records, zero violations";
    }});

    items.push_back({"property-suites", 2, [](Context& ctx, CheckResult& res) {
        auto suites = run_property_suites(ctx.config.universe);
        std::ostringstream detail;
        for (const auto& s : suites) {
            if (!s.failures.empty())
                throw Failure{s.name + ": " + s.failures.front()};
            detail << s.name << "(" << s.cases << ") ";
        }
        res.detail = detail.str();
    }});

    return items;
}

}  // namespace verify_detail

inline std::vector<CheckResult> run_verification(const RunConfig& config) {
    verify_detail::Context ctx{config, {}, {}, {}};
    std::vector<CheckResult> results;
    for (auto& item : verify_detail::build_items()) {
        if (config.section != 0 && item.section != config.section) continue;
        CheckResult res;
        res.id = item.id;
        res.section = item.section;
        res.status = CheckStatus::pass;
        auto t0 = std::chrono::steady_clock::now();
        try {
            item.run(ctx, res);
        } catch (const verify_detail::Failure& f) {
            res.status = CheckStatus::fail;
            res.detail = f.what;
        } catch (const verify_detail::OutOfBudget& b) {
            res.status = CheckStatus::unknown;
            res.detail = b.what;
        } catch (const std::exception& e) {
            res.status = CheckStatus::fail;
            res.detail = std::string("exception: ") + e.what();
        }
        res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        results.push_back(std::move(res));
    }
    return results;
}

// 0 all pass (skips allowed), 1 any failure, 2 unknown without failure
inline int verification_exit_code(const std::vector<CheckResult>& results) {
    bool any_fail = false, any_unknown = false;
    for (const auto& r : results) {
        any_fail = any_fail || r.status == CheckStatus::fail;
        any_unknown = any_unknown || r.status == CheckStatus::unknown;
    }
    if (any_fail) return 1;
    if (any_unknown) return 2;
    return 0;
}

}  // namespace ringtopo
