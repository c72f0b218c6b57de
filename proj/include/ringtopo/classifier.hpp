#pragma once

// The classification tables as decision procedures, plus the machinery to
// cross-validate them against the computational engine over a finite ring
// universe. Rings are recognized up to isomorphism by decomposing into local
// factors (primitive idempotents) and matching each factor against the
// catalog by table-level backtracking. All the S-set conditions in the
// tables are intrinsic (membership of 1, -1, and square roots of 1), so no
// coordinate transport is needed.

#include <functional>
#include <future>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "crosscap.hpp"
#include "ring.hpp"
#include "ring_graphs.hpp"

namespace ringtopo {

class NonCanonicalSpec : public std::runtime_error {
public:
    explicit NonCanonicalSpec(const std::string& msg) : std::runtime_error(msg) {}
};

// ---------------------------------------------------------------------------
// ring isomorphism by backtracking over element images

namespace ring_iso_detail {

struct ElemSignature {
    int additive_order;
    bool unit;
    int mult_or_nil;  // multiplicative order for units, nilpotency index otherwise (0 if neither)
    bool operator==(const ElemSignature&) const = default;
};

inline std::vector<ElemSignature> signatures(const FiniteRing& r) {
    std::vector<ElemSignature> sigs(static_cast<std::size_t>(r.order()));
    for (Elem x = 0; x < r.order(); ++x) {
        int ao = 1;
        Elem acc = x;
        while (acc != 0) {
            acc = r.add(acc, x);
            ++ao;
        }
        int mn = 0;
        if (r.is_unit(x)) {
            mn = 1;
            Elem m = x;
            while (m != r.one()) {
                m = r.mul(m, x);
                ++mn;
            }
        } else {
            Elem m = x;
            mn = 1;
            while (m != 0 && mn <= r.order()) {
                m = r.mul(m, x);
                ++mn;
            }
            mn = (m == 0) ? -mn : 0;  // negative = nilpotency index, 0 = not nilpotent
        }
        sigs[static_cast<std::size_t>(x)] = {ao, r.is_unit(x), mn};
    }
    return sigs;
}

struct IsoSearch {
    const FiniteRing& a;
    const FiniteRing& b;
    std::vector<ElemSignature> sig_a, sig_b;
    std::vector<int> map;      // a -> b
    std::vector<int> preimage; // b -> a

    bool consistent(Elem x) {
        for (Elem u = 0; u < a.order(); ++u) {
            if (map[static_cast<std::size_t>(u)] < 0) continue;
            for (int op = 0; op < 2; ++op) {
                Elem s = op == 0 ? a.add(x, u) : a.mul(x, u);
                Elem t = op == 0 ? b.add(map[static_cast<std::size_t>(x)], map[static_cast<std::size_t>(u)])
                                 : b.mul(map[static_cast<std::size_t>(x)], map[static_cast<std::size_t>(u)]);
                if (map[static_cast<std::size_t>(s)] >= 0) {
                    if (map[static_cast<std::size_t>(s)] != t) return false;
                } else if (preimage[static_cast<std::size_t>(t)] >= 0) {
                    return false;
                }
            }
        }
        return true;
    }

    bool extend(Elem x) {
        while (x < a.order() && map[static_cast<std::size_t>(x)] >= 0) ++x;
        if (x == a.order()) return true;
        for (Elem y = 0; y < b.order(); ++y) {
            if (preimage[static_cast<std::size_t>(y)] >= 0) continue;
            if (!(sig_a[static_cast<std::size_t>(x)] == sig_b[static_cast<std::size_t>(y)])) continue;
            map[static_cast<std::size_t>(x)] = y;
            preimage[static_cast<std::size_t>(y)] = x;
            if (consistent(x) && extend(x + 1)) return true;
            map[static_cast<std::size_t>(x)] = -1;
            preimage[static_cast<std::size_t>(y)] = -1;
        }
        return false;
    }
};

}  // namespace ring_iso_detail

inline std::optional<std::vector<Elem>> ring_isomorphic(const FiniteRing& a, const FiniteRing& b) {
    if (a.order() != b.order()) return std::nullopt;
    ring_iso_detail::IsoSearch s{a, b, ring_iso_detail::signatures(a), ring_iso_detail::signatures(b), {}, {}};
    {
        auto sa = s.sig_a;
        auto sb = s.sig_b;
        auto cmp = [](const ring_iso_detail::ElemSignature& l, const ring_iso_detail::ElemSignature& r) {
            return std::tie(l.additive_order, l.unit, l.mult_or_nil) <
                   std::tie(r.additive_order, r.unit, r.mult_or_nil);
        };
        std::sort(sa.begin(), sa.end(), cmp);
        std::sort(sb.begin(), sb.end(), cmp);
        if (!(sa == sb)) return std::nullopt;
    }
    s.map.assign(static_cast<std::size_t>(a.order()), -1);
    s.preimage.assign(static_cast<std::size_t>(b.order()), -1);
    s.map[0] = 0;
    s.preimage[0] = 0;
    s.map[static_cast<std::size_t>(a.one())] = b.one();
    s.preimage[static_cast<std::size_t>(b.one())] = a.one();
    if (!s.extend(0)) return std::nullopt;
    return s.map;
}

// ---------------------------------------------------------------------------
// local decomposition and catalog matching

inline std::vector<FiniteRing> local_decomposition(const FiniteRing& r) {
    const int n = r.order();
    std::vector<Elem> idem;
    for (Elem e = 0; e < n; ++e)
        if (r.mul(e, e) == e) idem.push_back(e);
    std::vector<Elem> primitive;
    for (Elem e : idem) {
        if (e == 0) continue;
        bool prim = true;
        for (Elem f : idem) {
            Elem fe = r.mul(f, e);
            if (fe != 0 && fe != e) {
                prim = false;
                break;
            }
        }
        if (prim) primitive.push_back(e);
    }

    std::vector<FiniteRing> factors;
    for (Elem e : primitive) {
        std::vector<Elem> members;
        std::vector<int> index(static_cast<std::size_t>(n), -1);
        for (Elem x = 0; x < n; ++x) {
            Elem xe = r.mul(x, e);
            if (index[static_cast<std::size_t>(xe)] < 0) {
                index[static_cast<std::size_t>(xe)] = static_cast<int>(members.size());
                members.push_back(xe);
            }
        }
        const int m = static_cast<int>(members.size());
        std::vector<Elem> add(static_cast<std::size_t>(m) * m), mul(static_cast<std::size_t>(m) * m);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                add[static_cast<std::size_t>(i) * m + j] =
                    index[static_cast<std::size_t>(r.add(members[static_cast<std::size_t>(i)],
                                                         members[static_cast<std::size_t>(j)]))];
                mul[static_cast<std::size_t>(i) * m + j] =
                    index[static_cast<std::size_t>(r.mul(members[static_cast<std::size_t>(i)],
                                                         members[static_cast<std::size_t>(j)]))];
            }
        factors.push_back(FiniteRing::from_tables(m, std::move(add), std::move(mul),
                                                  index[static_cast<std::size_t>(e)],
                                                  "factor of " + r.spec_string()));
    }
    std::sort(factors.begin(), factors.end(),
              [](const FiniteRing& x, const FiniteRing& y) { return x.order() < y.order(); });
    return factors;
}

struct CanonicalDecomposition {
    std::vector<int> catalog_indices;  // sorted ascending
    std::string display;

    int count_of(int idx) const {
        return static_cast<int>(std::count(catalog_indices.begin(), catalog_indices.end(), idx));
    }
    bool is(std::vector<int> idxs) const {
        std::sort(idxs.begin(), idxs.end());
        return catalog_indices == idxs;
    }
};

namespace classify_detail {

inline int catalog_index(const std::string& name) {
    const auto& cat = local_ring_catalog();
    for (std::size_t i = 0; i < cat.size(); ++i)
        if (cat[i].name == name) return static_cast<int>(i);
    throw std::logic_error("catalog name lookup failed: " + name);
}

inline const FiniteRing& catalog_ring(int idx) {
    static std::map<int, FiniteRing> cache;
    auto it = cache.find(idx);
    if (it == cache.end())
        it = cache.emplace(idx, compile_ring(parse_ring_spec(
                                    local_ring_catalog()[static_cast<std::size_t>(idx)].spec)))
                 .first;
    return it->second;
}

}  // namespace classify_detail

// Decompose into local factors and identify each against the catalog.
inline CanonicalDecomposition canonical_decomposition(const FiniteRing& r) {
    CanonicalDecomposition out;
    for (const auto& factor : local_decomposition(r)) {
        int matched = -1;
        for (std::size_t i = 0; i < local_ring_catalog().size(); ++i) {
            const auto& cand = classify_detail::catalog_ring(static_cast<int>(i));
            if (cand.order() != factor.order()) continue;
            if (ring_isomorphic(factor, cand)) {
                matched = static_cast<int>(i);
                break;
            }
        }
        if (matched < 0)
            throw NonCanonicalSpec("local factor of order " + std::to_string(factor.order()) +
                                   " matches no catalog ring");
        out.catalog_indices.push_back(matched);
    }
    std::sort(out.catalog_indices.begin(), out.catalog_indices.end());
    for (std::size_t i = 0; i < out.catalog_indices.size(); ++i) {
        if (i) out.display += " x ";
        out.display += local_ring_catalog()[static_cast<std::size_t>(out.catalog_indices[i])].name;
    }
    return out;
}

// ---------------------------------------------------------------------------
// theory tables

namespace classify_detail {

// S as a set equals {member}?
inline bool s_is(const std::vector<Elem>& s, std::vector<Elem> members) {
    std::sort(members.begin(), members.end());
    return s == members;
}

inline bool is_involution(const FiniteRing& r, Elem x) { return r.is_unit(x) && r.mul(x, x) == r.one(); }

}  // namespace classify_detail

// Planarity table for Gamma(R, S): products of Z2 with one small local ring,
// GF(4) alone or with Z2-factors and trivial S, Z5 with trivial S, and the
// three singleton square roots of 1 other than -1 over Z3 x Z3.
inline bool theory_planar_gamma(const FiniteRing& r, const std::vector<Elem>& s) {
    using classify_detail::catalog_index;
    auto d = canonical_decomposition(r);
    const int z2 = catalog_index("Z2"), z3 = catalog_index("Z3"), z4 = catalog_index("Z4"),
              z2x2 = catalog_index("Z2[x]/(x^2)"), f4 = catalog_index("GF(4)"), z5 = catalog_index("Z5");

    int non_z2 = 0;
    bool small_only = true;
    for (int idx : d.catalog_indices) {
        if (idx == z2) continue;
        ++non_z2;
        small_only = small_only && (idx == z3 || idx == z4 || idx == z2x2);
    }
    if (non_z2 <= 1 && small_only) return true;                       // (a)
    if (d.is({f4})) return true;                                      // (b)
    if (non_z2 == 1 && d.count_of(f4) == 1 && d.count_of(z2) >= 1 &&  // (c)
        classify_detail::s_is(s, {r.one()}))
        return true;
    if (d.is({z5}) && classify_detail::s_is(s, {r.one()})) return true;  // (d)
    if (d.is({z3, z3}) && s.size() == 1 && classify_detail::is_involution(r, s[0]) &&
        s[0] != r.neg(r.one()))
        return true;  // (e)
    return false;
}

// Projectivity table for Gamma(R, S): Z5 with S != {1}, and Z3 x Z3 with
// S = {-1} or S = {t, -1} for a square root t of 1 other than +-1.
inline bool theory_projective_gamma(const FiniteRing& r, const std::vector<Elem>& s) {
    using classify_detail::catalog_index;
    auto d = canonical_decomposition(r);
    if (d.is({catalog_index("Z5")})) return !classify_detail::s_is(s, {r.one()});
    if (d.is({catalog_index("Z3"), catalog_index("Z3")})) {
        Elem minus_one = r.neg(r.one());
        if (classify_detail::s_is(s, {minus_one})) return true;
        if (s.size() == 2 && std::find(s.begin(), s.end(), minus_one) != s.end()) {
            Elem other = s[0] == minus_one ? s[1] : s[0];
            return classify_detail::is_involution(r, other) && other != r.one() && other != minus_one;
        }
    }
    return false;
}

struct UnitUnitaryVerdict {
    bool unit_projective = false;
    bool cayley_projective = false;
    bool gamma_units_projective = false;
};

// unit graphs are never projective; unitary Cayley graphs only over Z5 and
// Z3 x Z3; Gamma(R, U(R)) only over Z5
inline UnitUnitaryVerdict theory_unit_unitary(const FiniteRing& r) {
    using classify_detail::catalog_index;
    auto d = canonical_decomposition(r);
    UnitUnitaryVerdict v;
    bool is_z5 = d.is({catalog_index("Z5")});
    bool is_z3z3 = d.is({catalog_index("Z3"), catalog_index("Z3")});
    v.cayley_projective = is_z5 || is_z3z3;
    v.gamma_units_projective = is_z5;
    return v;
}

enum class ComaximalClass { planar, projective, neither };

inline ComaximalClass theory_comaximal(const FiniteRing& r) {
    using classify_detail::catalog_index;
    auto d = canonical_decomposition(r);
    const int z2 = catalog_index("Z2"), z3 = catalog_index("Z3"), z4 = catalog_index("Z4"),
              z2x2 = catalog_index("Z2[x]/(x^2)"), f4 = catalog_index("GF(4)"), z5 = catalog_index("Z5");
    const std::vector<std::vector<int>> planar_list = {
        {z2}, {z3}, {z4}, {z2x2}, {f4}, {z2, z2}, {z2, z3}, {z2, z2, z2}};
    for (const auto& entry : planar_list)
        if (d.is(entry)) return ComaximalClass::planar;
    const std::vector<std::vector<int>> projective_list = {{z2, z4}, {z2, z2x2}, {z5}};
    for (const auto& entry : projective_list)
        if (d.is(entry)) return ComaximalClass::projective;
    return ComaximalClass::neither;
}

// ---------------------------------------------------------------------------
// computed classification

enum class TopoClass { planar, projective, neither, unknown };

inline std::string to_string(TopoClass c) {
    switch (c) {
        case TopoClass::planar: return "planar";
        case TopoClass::projective: return "projective";
        case TopoClass::neither: return "neither";
        default: return "unknown";
    }
}

struct ComputedClass {
    TopoClass cls = TopoClass::unknown;
    std::string witness;
    std::optional<EmbeddingCertificate> certificate;
    std::optional<DetectedObstruction> obstruction;
};

// planar / projective / neither with a witness, via crosscap_exact stopped
// as soon as the lower bound passes 1
inline ComputedClass compute_topo_class(const Graph& g, long long budget = 10'000'000) {
    ComputedClass out;
    auto result = crosscap_exact(g, budget, 1);
    if (result.exact && *result.upper == 0) {
        out.cls = TopoClass::planar;
        out.witness = "planar certificate";
        if (!result.certificates.empty()) out.certificate = result.certificates.front();
    } else if (result.exact && *result.upper == 1) {
        out.cls = TopoClass::projective;
        out.witness = "projective-plane certificate";
        for (const auto& c : result.certificates)
            if (c.euler_genus == 1) out.certificate = c;
    } else if (result.lower >= 2) {
        out.cls = TopoClass::neither;
        out.witness = "crosscap >= 2: " + result.lower_reason;
        if (!result.obstructions.empty()) out.obstruction = result.obstructions.front();
    } else {
        out.cls = TopoClass::unknown;
        out.witness = "budget exhausted: bounds [" + std::to_string(result.lower) + ", " +
                      (result.upper ? std::to_string(*result.upper) : "?") + "]";
    }
    return out;
}

// ---------------------------------------------------------------------------
// ring universe and cross-validation

struct RingUniverse {
    int max_order = 18;
    int max_factors = 4;
    int exhaustive_s_max_order = 9;
};

struct UniverseMember {
    std::string spec;
    std::vector<int> catalog_indices;
};

inline std::vector<UniverseMember> generate_universe(const RingUniverse& u) {
    const auto& cat = local_ring_catalog();
    std::vector<int> orders;
    for (const auto& entry : cat)
        orders.push_back(compile_ring(parse_ring_spec(entry.spec)).order());

    std::vector<UniverseMember> out;
    std::vector<int> current;
    auto emit = [&]() {
        UniverseMember m;
        m.catalog_indices = current;
        for (std::size_t i = 0; i < current.size(); ++i) {
            if (i) m.spec += " x ";
            m.spec += cat[static_cast<std::size_t>(current[i])].spec;
        }
        out.push_back(std::move(m));
    };
    std::function<void(int, long long)> rec = [&](int min_idx, long long order) {
        if (!current.empty()) emit();
        if (static_cast<int>(current.size()) == u.max_factors) return;
        for (int i = min_idx; i < static_cast<int>(cat.size()); ++i) {
            long long next = order * orders[static_cast<std::size_t>(i)];
            if (next > u.max_order) continue;
            current.push_back(i);
            rec(i, next);
            current.pop_back();
        }
    };
    rec(0, 1);
    std::sort(out.begin(), out.end(),
              [](const UniverseMember& a, const UniverseMember& b) { return a.spec < b.spec; });
    return out;
}

struct ClassificationVerdict {
    std::string ring_spec;
    std::string family;  // gamma | unit | cayley | comaximal
    std::string s_desc;
    TopoClass theory = TopoClass::unknown;
    std::string theory_source;
    TopoClass computed = TopoClass::unknown;
    std::string witness;
    bool agreement = false;
};

namespace classify_detail {

inline std::string describe_s(const FiniteRing& r, const std::vector<Elem>& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += format_element(r, s[i]);
    }
    return out + "}";
}

}  // namespace classify_detail

// theory verdict for the gamma family
inline TopoClass theory_gamma_class(const FiniteRing& r, const std::vector<Elem>& s) {
    if (theory_planar_gamma(r, s)) return TopoClass::planar;
    if (theory_projective_gamma(r, s)) return TopoClass::projective;
    return TopoClass::neither;
}

inline TopoClass theory_comaximal_class(const FiniteRing& r) {
    switch (theory_comaximal(r)) {
        case ComaximalClass::planar: return TopoClass::planar;
        case ComaximalClass::projective: return TopoClass::projective;
        default: return TopoClass::neither;
    }
}

inline std::vector<ClassificationVerdict> cross_validate(const RingUniverse& universe,
                                                         long long budget = 10'000'000, int workers = 1);

namespace classify_detail {

inline ClassificationVerdict make_verdict(const FiniteRing& ring, const std::string& spec,
                                          const std::string& family, const std::vector<Elem>& s,
                                          long long budget) {
    ClassificationVerdict v;
    v.ring_spec = spec;
    v.family = family;
    Graph g;
    if (family == "comaximal") {
        v.theory = theory_comaximal_class(ring);
        v.theory_source = "co-maximal table";
        g = build_comaximal(ring);
    } else {
        std::vector<Elem> effective = s;
        if (family == "unit") effective = {ring.one()};
        if (family == "cayley") effective = {ring.neg(ring.one())};
        v.s_desc = describe_s(ring, effective);
        v.theory = theory_gamma_class(ring, effective);
        v.theory_source = "gamma tables";
        g = build_gamma(ring, effective);
    }
    auto computed = compute_topo_class(g, budget);
    v.computed = computed.cls;
    v.witness = computed.witness;
    v.agreement = (v.computed != TopoClass::unknown) && (v.computed == v.theory);
    return v;
}

}  // namespace classify_detail

// Work items are independent with per-item budgets, so the verdict list is
// the same for every worker count; rows are reported in canonical order.
inline std::vector<ClassificationVerdict> cross_validate(const RingUniverse& universe, long long budget,
                                                         int workers) {
    struct WorkItem {
        std::size_t ring;
        std::string family;
        std::vector<Elem> s;
    };
    std::vector<FiniteRing> rings;
    std::vector<std::string> specs;
    std::vector<WorkItem> work;
    for (const auto& member : generate_universe(universe)) {
        std::size_t idx = rings.size();
        rings.push_back(compile_ring(parse_ring_spec(member.spec)));
        specs.push_back(member.spec);
        const auto& ring = rings.back();

        std::set<std::vector<Elem>> s_sets;
        s_sets.insert({ring.one()});
        s_sets.insert({ring.neg(ring.one())});
        {
            auto u = ring.units();
            std::sort(u.begin(), u.end());
            s_sets.insert(u);
        }
        if (ring.order() <= universe.exhaustive_s_max_order)
            for (auto& s : inverse_closed_subsets(ring)) s_sets.insert(s);

        for (const auto& s : s_sets) work.push_back({idx, "gamma", s});
        work.push_back({idx, "unit", {}});
        work.push_back({idx, "cayley", {}});
        work.push_back({idx, "comaximal", {}});
    }

    std::vector<ClassificationVerdict> rows(work.size());
    auto run_stride = [&](std::size_t offset, std::size_t stride) {
        for (std::size_t i = offset; i < work.size(); i += stride)
            rows[i] = classify_detail::make_verdict(rings[work[i].ring], specs[work[i].ring],
                                                    work[i].family, work[i].s, budget);
    };
    const int n_workers = std::max(1, workers);
    if (n_workers == 1) {
        run_stride(0, 1);
    } else {
        std::vector<std::future<void>> futures;
        for (int w = 0; w < n_workers; ++w)
            futures.push_back(std::async(std::launch::async, run_stride, static_cast<std::size_t>(w),
                                         static_cast<std::size_t>(n_workers)));
        for (auto& f : futures) f.get();
    }

    std::sort(rows.begin(), rows.end(), [](const ClassificationVerdict& a, const ClassificationVerdict& b) {
        return std::tie(a.ring_spec, a.family, a.s_desc) < std::tie(b.ring_spec, b.family, b.s_desc);
    });
    return rows;
}

// ---------------------------------------------------------------------------
// size-bound audit

struct ExactCrosscapRecord {
    std::string ring_spec;
    std::string family;
    std::string s_desc;
    int ring_order = 0;
    int unit_count = 0;
    int jacobson_count = 0;
    int z2_factor_count = 0;
    long long other_factor_product = 1;
    int crosscap = 0;
};

inline ExactCrosscapRecord make_exact_record(const FiniteRing& ring, const std::string& family,
                                             const std::vector<Elem>& s, int crosscap) {
    ExactCrosscapRecord rec;
    rec.ring_spec = ring.spec_string();
    rec.family = family;
    rec.s_desc = s.empty() ? "" : classify_detail::describe_s(ring, s);
    rec.ring_order = ring.order();
    rec.unit_count = static_cast<int>(ring.units().size());
    rec.jacobson_count = static_cast<int>(ring.jacobson_radical().size());
    rec.crosscap = crosscap;
    for (const auto& factor : local_decomposition(ring)) {
        if (factor.order() == 2)
            ++rec.z2_factor_count;
        else
            rec.other_factor_product *= factor.order();
    }
    return rec;
}

struct AuditReport {
    int checked = 0;
    std::vector<std::string> violations;
};

// every exact positive crosscap must satisfy |R| <= 32k, the size dichotomy
// (|R| <= 6k-12 or R = Z2^l x T with 2^(l-1) <= k and |T| <= 16), and for
// k=1 the bounds |U| <= 6, |J| <= 3
inline AuditReport size_bound_audit(const std::vector<ExactCrosscapRecord>& records) {
    AuditReport report;
    for (const auto& rec : records) {
        if (rec.crosscap <= 0) continue;
        ++report.checked;
        auto fail = [&](const std::string& what) {
            report.violations.push_back(rec.ring_spec + " " + rec.family + " " + rec.s_desc + ": " + what);
        };
        const long long k = rec.crosscap;
        if (rec.ring_order > 32 * k) fail("|R| > 32k");
        bool dichotomy = rec.ring_order <= 6 * k - 12;
        const int m = rec.z2_factor_count;
        for (int a = 0; a <= m && !dichotomy; ++a) {
            int ell = m - a;
            bool ell_ok = ell == 0 || (1LL << (ell - 1)) <= k;
            bool t_ok = (1LL << a) * rec.other_factor_product <= 16;
            dichotomy = ell_ok && t_ok;
        }
        if (!dichotomy) fail("size dichotomy fails");
        if (k == 1) {
            if (rec.unit_count > 6) fail("|U(R)| > 6 at crosscap 1");
            if (rec.jacobson_count > 3) fail("|J(R)| > 3 at crosscap 1");
        }
    }
    return report;
}

}  // namespace ringtopo
