#pragma once

// Finite commutative rings with identity, compiled to operation tables.
// Rings are described symbolically (Z_n, GF(q), Z_m[x]/(f), products) and
// compiled to dense add/mul tables with derived unit/radical data.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace ringtopo {

using Elem = int;

// ---------------------------------------------------------------------------
// errors

enum class RingErrc {
    NonIrreduciblePoly,
    NonMonicPoly,
    OrderTooLarge,
    NotPrimePower,
    ElementNotUnit,
    EmptyS,
    SNotInG,
    SNotInverseClosed,
    GNotSubgroup,
    BadSpec,
};

class RingError : public std::runtime_error {
public:
    RingError(RingErrc c, const std::string& msg) : std::runtime_error(msg), code_(c) {}
    RingErrc code() const { return code_; }

private:
    RingErrc code_;
};

class RingParseError : public std::runtime_error {
public:
    RingParseError(std::size_t pos, const std::string& msg)
        : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"), pos_(pos) {}
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

// ---------------------------------------------------------------------------
// symbolic specs

// Coefficients are constant-first: coeffs[i] multiplies x^i.
struct Poly {
    std::vector<long long> coeffs;

    int degree() const {
        int d = static_cast<int>(coeffs.size()) - 1;
        while (d >= 0 && coeffs[static_cast<std::size_t>(d)] == 0) --d;
        return d;
    }
};

struct RingSpec;

struct ModularIntSpec {
    int n = 0;
};

struct GaloisFieldSpec {
    int p = 0;
    int k = 1;
    std::optional<Poly> poly;  // monic irreducible of degree k, auto-selected if absent
};

struct QuotientPolySpec {
    int m = 0;
    Poly f;  // monic, degree >= 1
};

struct ProductSpec {
    std::vector<RingSpec> factors;  // >= 2 after flattening
};

struct RingSpec {
    std::variant<ModularIntSpec, GaloisFieldSpec, QuotientPolySpec, ProductSpec> node;
};

inline RingSpec modular_int(int n) { return RingSpec{ModularIntSpec{n}}; }
inline RingSpec galois_field(int p, int k, std::optional<Poly> poly = std::nullopt) {
    return RingSpec{GaloisFieldSpec{p, k, std::move(poly)}};
}
inline RingSpec quotient_poly(int m, Poly f) { return RingSpec{QuotientPolySpec{m, std::move(f)}}; }
inline RingSpec product(std::vector<RingSpec> factors) { return RingSpec{ProductSpec{std::move(factors)}}; }

// ---------------------------------------------------------------------------
// compiled ring

struct CompileOptions {
    int max_order = 4096;
};

class FiniteRing;

namespace compile_detail {
FiniteRing quotient_ring(int m, const std::vector<int>& f, const CompileOptions& opts,
                         const std::string& display);
}

class FiniteRing {
public:
    int order() const { return n_; }
    Elem zero() const { return 0; }
    Elem one() const { return one_; }

    Elem add(Elem a, Elem b) const { return add_[static_cast<std::size_t>(a) * n_ + b]; }
    Elem mul(Elem a, Elem b) const { return mul_[static_cast<std::size_t>(a) * n_ + b]; }
    Elem neg(Elem a) const { return neg_[static_cast<std::size_t>(a)]; }
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

    bool is_unit(Elem a) const { return inv_[static_cast<std::size_t>(a)] >= 0; }
    // Multiplicative inverse; -1 when a is not a unit.
    Elem inverse(Elem a) const { return inv_[static_cast<std::size_t>(a)]; }

    const std::vector<Elem>& units() const { return units_; }
    const std::vector<Elem>& jacobson_radical() const { return jacobson_; }
    const std::vector<Elem>& zero_divisors() const { return zero_divisors_; }

    // True iff the non-units are closed under addition; they then form the
    // unique maximal ideal, returned through `maximal_ideal` when non-null.
    bool is_local(std::vector<Elem>* maximal_ideal = nullptr) const;

    // All ideals m with |R/m| = 2, i.e. index-2 additive subgroups absorbing
    // multiplication. Each ideal is a sorted element list.
    std::vector<std::vector<Elem>> index2_maximal_ideals() const;

    // True iff Rx + Ry = R.
    bool comaximal(Elem x, Elem y) const;

    // Principal ideal Rx as a sorted element list.
    std::vector<Elem> principal_ideal(Elem x) const;

    // Smallest multiplicative subgroup of U(R) containing `seed`.
    std::vector<Elem> subgroup_closure(const std::vector<Elem>& seed) const;

    // Orders of the top-level product factors; size 1 for non-product rings.
    const std::vector<int>& factor_orders() const { return factor_orders_; }

    const std::string& spec_string() const { return spec_string_; }

    Elem power(Elem a, long long e) const {
        Elem r = one_;
        for (long long i = 0; i < e; ++i) r = mul(r, a);
        return r;
    }

    bool is_nilpotent(Elem a) const {
        Elem x = a;
        for (int i = 0; i < n_; ++i) {
            if (x == 0) return true;
            x = mul(x, a);
        }
        return x == 0;
    }

    // Encode a per-factor code tuple, rightmost factor fastest.
    Elem encode_tuple(const std::vector<int>& t) const;
    std::vector<int> decode_tuple(Elem x) const;

    // Build a ring directly from operation tables (used when slicing factor
    // rings out of an idempotent decomposition).
    static FiniteRing from_tables(int n, std::vector<Elem> add, std::vector<Elem> mul, Elem one,
                                  std::string display) {
        FiniteRing r;
        r.n_ = n;
        r.add_ = std::move(add);
        r.mul_ = std::move(mul);
        r.one_ = one;
        r.factor_orders_ = {n};
        r.spec_string_ = std::move(display);
        r.finalize();
        return r;
    }

private:
    friend FiniteRing compile_ring(const RingSpec&, const CompileOptions&);
    friend FiniteRing compile_detail::quotient_ring(int, const std::vector<int>&, const CompileOptions&,
                                                    const std::string&);

    int n_ = 0;
    Elem one_ = 0;
    std::vector<Elem> add_, mul_;  // n*n row-major
    std::vector<Elem> neg_, inv_;
    std::vector<Elem> units_, jacobson_, zero_divisors_;
    std::vector<int> factor_orders_;
    std::string spec_string_;

    void finalize();
};

// ---------------------------------------------------------------------------
// polynomial helpers over Z_m (monic moduli only, so division never needs
// coefficient inverses)

namespace poly_detail {

inline std::vector<int> reduce_coeffs(const Poly& f, int m) {
    std::vector<int> c;
    c.reserve(f.coeffs.size());
    for (long long raw : f.coeffs) {
        long long v = raw % m;
        if (v < 0) v += m;
        c.push_back(static_cast<int>(v));
    }
    while (!c.empty() && c.back() == 0) c.pop_back();
    return c;
}

inline std::vector<int> poly_mul(const std::vector<int>& a, const std::vector<int>& b, int m) {
    if (a.empty() || b.empty()) return {};
    std::vector<int> r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<int>((r[i + j] + static_cast<long long>(a[i]) * b[j]) % m);
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

// Remainder of a modulo monic f.
inline std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& f, int m) {
    const int df = static_cast<int>(f.size()) - 1;
    while (static_cast<int>(a.size()) - 1 >= df) {
        int da = static_cast<int>(a.size()) - 1;
        int lead = a.back();
        if (lead != 0) {
            for (int i = 0; i <= df; ++i) {
                std::size_t ai = static_cast<std::size_t>(da - df + i);
                long long v = a[ai] - static_cast<long long>(lead) * f[static_cast<std::size_t>(i)];
                v %= m;
                if (v < 0) v += m;
                a[ai] = static_cast<int>(v);
            }
        }
        a.pop_back();
    }
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

// Irreducibility over Z_p (p prime) by trial division with monic divisors of
// degree 1..deg/2.
inline bool is_irreducible_mod_p(const std::vector<int>& f, int p) {
    const int d = static_cast<int>(f.size()) - 1;
    if (d <= 0) return false;
    if (d == 1) return true;
    for (int dd = 1; dd <= d / 2; ++dd) {
        long long count = 1;
        for (int i = 0; i < dd; ++i) count *= p;
        for (long long t = 0; t < count; ++t) {
            std::vector<int> g(static_cast<std::size_t>(dd) + 1, 0);
            g[static_cast<std::size_t>(dd)] = 1;
            long long rem = t;
            for (int i = dd - 1; i >= 0; --i) {
                long long digit = rem % p;
                rem /= p;
                g[static_cast<std::size_t>(i)] = static_cast<int>(digit);
            }
            if (poly_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

inline bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; static_cast<long long>(d) * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Lexicographically least (constant coefficient most significant) monic
// irreducible of degree k over Z_p.
inline std::vector<int> least_irreducible(int p, int k) {
    long long count = 1;
    for (int i = 0; i < k; ++i) count *= p;
    for (long long t = 0; t < count; ++t) {
        // t = c0 * p^(k-1) + c1 * p^(k-2) + ... + c_{k-1}
        std::vector<int> f(static_cast<std::size_t>(k) + 1, 0);
        f[static_cast<std::size_t>(k)] = 1;
        long long rem = t;
        for (int i = k - 1; i >= 0; --i) {
            f[static_cast<std::size_t>(i)] = static_cast<int>(rem % p);
            rem /= p;
        }
        if (is_irreducible_mod_p(f, p)) return f;
    }
    throw RingError(RingErrc::NonIrreduciblePoly, "no irreducible polynomial found");
}

}  // namespace poly_detail

// ---------------------------------------------------------------------------
// compilation

inline void FiniteRing::finalize() {
    neg_.assign(static_cast<std::size_t>(n_), -1);
    inv_.assign(static_cast<std::size_t>(n_), -1);
    for (Elem a = 0; a < n_; ++a) {
        for (Elem b = 0; b < n_; ++b) {
            if (add(a, b) == 0) neg_[static_cast<std::size_t>(a)] = b;
            if (mul(a, b) == one_) inv_[static_cast<std::size_t>(a)] = b;
        }
        if (neg_[static_cast<std::size_t>(a)] < 0)
            throw RingError(RingErrc::BadSpec, "element without additive inverse");
    }
    units_.clear();
    jacobson_.clear();
    zero_divisors_.clear();
    for (Elem a = 0; a < n_; ++a) {
        if (is_unit(a)) units_.push_back(a);
        if (is_nilpotent(a)) jacobson_.push_back(a);
    }
    for (Elem a = 0; a < n_; ++a) {
        bool zd = false;
        for (Elem b = 0; b < n_ && !zd; ++b)
            if (b != 0 && mul(a, b) == 0) zd = true;
        if (zd) zero_divisors_.push_back(a);
    }
    if (units_.size() + zero_divisors_.size() != static_cast<std::size_t>(n_))
        throw RingError(RingErrc::BadSpec, "units and zero-divisors do not partition the ring");
}

namespace spec_detail {

inline std::string poly_to_string(const std::vector<int>& c) {
    // highest power first, matching the usual way the moduli are written
    std::string s;
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) {
        int v = c[static_cast<std::size_t>(i)];
        if (v == 0) continue;
        if (!s.empty()) s += "+";
        if (i == 0) {
            s += std::to_string(v);
        } else {
            if (v != 1) s += std::to_string(v);
            s += "x";
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    if (s.empty()) s = "0";
    return s;
}

}  // namespace spec_detail

inline std::string spec_to_string(const RingSpec& spec) {
    if (const auto* m = std::get_if<ModularIntSpec>(&spec.node)) return "Z" + std::to_string(m->n);
    if (const auto* g = std::get_if<GaloisFieldSpec>(&spec.node)) {
        long long q = 1;
        for (int i = 0; i < g->k; ++i) q *= g->p;
        return "GF(" + std::to_string(q) + ")";
    }
    if (const auto* qp = std::get_if<QuotientPolySpec>(&spec.node)) {
        auto c = poly_detail::reduce_coeffs(qp->f, qp->m);
        return "Z" + std::to_string(qp->m) + "[x]/(" + spec_detail::poly_to_string(c) + ")";
    }
    const auto& pr = std::get<ProductSpec>(spec.node);
    std::string s;
    for (std::size_t i = 0; i < pr.factors.size(); ++i) {
        if (i) s += " x ";
        s += spec_to_string(pr.factors[i]);
    }
    return s;
}

inline FiniteRing compile_ring(const RingSpec& spec, const CompileOptions& opts = {});

namespace compile_detail {

inline FiniteRing quotient_ring(int m, const std::vector<int>& f, const CompileOptions& opts,
                                const std::string& display) {
    using namespace poly_detail;
    const int d = static_cast<int>(f.size()) - 1;
    if (d < 1) throw RingError(RingErrc::BadSpec, "modulus polynomial must have degree >= 1");
    if (f.back() != 1) throw RingError(RingErrc::NonMonicPoly, "modulus polynomial must be monic: " + display);
    long long order = 1;
    for (int i = 0; i < d; ++i) {
        order *= m;
        if (order > opts.max_order)
            throw RingError(RingErrc::OrderTooLarge, "ring order exceeds cap: " + display);
    }
    const int n = static_cast<int>(order);

    auto decode = [&](int code) {
        std::vector<int> c(static_cast<std::size_t>(d));
        for (int i = 0; i < d; ++i) {
            c[static_cast<std::size_t>(i)] = code % m;
            code /= m;
        }
        while (!c.empty() && c.back() == 0) c.pop_back();
        return c;
    };
    auto encode = [&](const std::vector<int>& c) {
        int code = 0;
        for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) code = code * m + c[static_cast<std::size_t>(i)];
        return code;
    };

    FiniteRing r;
    r.n_ = n;
    r.add_.resize(static_cast<std::size_t>(n) * n);
    r.mul_.resize(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a) {
        auto ca = decode(a);
        for (int b = 0; b < n; ++b) {
            auto cb = decode(b);
            std::vector<int> s(std::max(ca.size(), cb.size()), 0);
            for (std::size_t i = 0; i < s.size(); ++i) {
                int v = 0;
                if (i < ca.size()) v += ca[i];
                if (i < cb.size()) v += cb[i];
                s[i] = v % m;
            }
            while (!s.empty() && s.back() == 0) s.pop_back();
            r.add_[static_cast<std::size_t>(a) * n + b] = encode(s);
            auto p = poly_mod(poly_mul(ca, cb, m), f, m);
            r.mul_[static_cast<std::size_t>(a) * n + b] = encode(p);
        }
    }
    r.one_ = encode({1});
    r.factor_orders_ = {n};
    r.spec_string_ = display;
    r.finalize();
    return r;
}

}  // namespace compile_detail

inline FiniteRing compile_ring(const RingSpec& spec, const CompileOptions& opts) {
    using namespace poly_detail;

    if (const auto* mi = std::get_if<ModularIntSpec>(&spec.node)) {
        if (mi->n < 2) throw RingError(RingErrc::BadSpec, "modulus must be >= 2");
        if (mi->n > opts.max_order) throw RingError(RingErrc::OrderTooLarge, "ring order exceeds cap");
        const int n = mi->n;
        FiniteRing r;
        r.n_ = n;
        r.add_.resize(static_cast<std::size_t>(n) * n);
        r.mul_.resize(static_cast<std::size_t>(n) * n);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                r.add_[static_cast<std::size_t>(a) * n + b] = (a + b) % n;
                r.mul_[static_cast<std::size_t>(a) * n + b] = static_cast<int>((static_cast<long long>(a) * b) % n);
            }
        r.one_ = 1;
        r.factor_orders_ = {n};
        r.spec_string_ = spec_to_string(spec);
        r.finalize();
        return r;
    }

    if (const auto* gf = std::get_if<GaloisFieldSpec>(&spec.node)) {
        if (!is_prime(gf->p)) throw RingError(RingErrc::NotPrimePower, "GF base must be prime");
        if (gf->k < 1) throw RingError(RingErrc::BadSpec, "GF exponent must be >= 1");
        std::vector<int> f;
        if (gf->poly) {
            f = reduce_coeffs(*gf->poly, gf->p);
            if (static_cast<int>(f.size()) - 1 != gf->k || f.back() != 1)
                throw RingError(RingErrc::NonMonicPoly, "GF modulus must be monic of the stated degree");
            if (!is_irreducible_mod_p(f, gf->p))
                throw RingError(RingErrc::NonIrreduciblePoly, "GF modulus is reducible");
        } else {
            f = least_irreducible(gf->p, gf->k);
        }
        return compile_detail::quotient_ring(gf->p, f, opts, spec_to_string(spec));
    }

    if (const auto* qp = std::get_if<QuotientPolySpec>(&spec.node)) {
        if (qp->m < 2) throw RingError(RingErrc::BadSpec, "coefficient modulus must be >= 2");
        auto f = reduce_coeffs(qp->f, qp->m);
        if (f.empty() || static_cast<int>(f.size()) - 1 < 1)
            throw RingError(RingErrc::BadSpec, "modulus polynomial must have degree >= 1");
        if (f.back() != 1) throw RingError(RingErrc::NonMonicPoly, "modulus polynomial must be monic");
        return compile_detail::quotient_ring(qp->m, f, opts, spec_to_string(spec));
    }

    // product: flatten one level, compile factors, combine by mixed radix
    const auto& pr = std::get<ProductSpec>(spec.node);
    std::vector<const RingSpec*> flat;
    for (const auto& fspec : pr.factors) {
        if (const auto* sub = std::get_if<ProductSpec>(&fspec.node)) {
            for (const auto& g : sub->factors) flat.push_back(&g);
        } else {
            flat.push_back(&fspec);
        }
    }
    if (flat.size() < 2) throw RingError(RingErrc::BadSpec, "product needs at least two factors");

    std::vector<FiniteRing> factors;
    factors.reserve(flat.size());
    long long order = 1;
    for (const auto* fs : flat) {
        factors.push_back(compile_ring(*fs, opts));
        order *= factors.back().order();
        if (order > opts.max_order) throw RingError(RingErrc::OrderTooLarge, "ring order exceeds cap");
    }
    const int n = static_cast<int>(order);

    FiniteRing r;
    r.n_ = n;
    for (const auto& f : factors) r.factor_orders_.push_back(f.order());

    auto decode = [&](int code) {
        std::vector<int> t(factors.size());
        for (int i = static_cast<int>(factors.size()) - 1; i >= 0; --i) {
            int m = factors[static_cast<std::size_t>(i)].order();
            t[static_cast<std::size_t>(i)] = code % m;
            code /= m;
        }
        return t;
    };
    auto encode = [&](const std::vector<int>& t) {
        int code = 0;
        for (std::size_t i = 0; i < factors.size(); ++i) code = code * factors[i].order() + t[i];
        return code;
    };

    r.add_.resize(static_cast<std::size_t>(n) * n);
    r.mul_.resize(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a) {
        auto ta = decode(a);
        for (int b = 0; b < n; ++b) {
            auto tb = decode(b);
            std::vector<int> ts(factors.size()), tm(factors.size());
            for (std::size_t i = 0; i < factors.size(); ++i) {
                ts[i] = factors[i].add(ta[i], tb[i]);
                tm[i] = factors[i].mul(ta[i], tb[i]);
            }
            r.add_[static_cast<std::size_t>(a) * n + b] = encode(ts);
            r.mul_[static_cast<std::size_t>(a) * n + b] = encode(tm);
        }
    }
    std::vector<int> ones;
    ones.reserve(factors.size());
    for (const auto& f : factors) ones.push_back(f.one());
    r.one_ = encode(ones);
    r.spec_string_ = spec_to_string(spec);
    r.finalize();
    return r;
}

// ---------------------------------------------------------------------------
// queries

inline bool FiniteRing::is_local(std::vector<Elem>* maximal_ideal) const {
    std::vector<Elem> nonunits;
    std::vector<char> in(static_cast<std::size_t>(n_), 0);
    for (Elem a = 0; a < n_; ++a)
        if (!is_unit(a)) {
            nonunits.push_back(a);
            in[static_cast<std::size_t>(a)] = 1;
        }
    for (Elem a : nonunits)
        for (Elem b : nonunits)
            if (!in[static_cast<std::size_t>(add(a, b))]) return false;
    if (maximal_ideal) *maximal_ideal = nonunits;
    return true;
}

inline std::vector<Elem> FiniteRing::principal_ideal(Elem x) const {
    std::vector<char> in(static_cast<std::size_t>(n_), 0);
    for (Elem r = 0; r < n_; ++r) in[static_cast<std::size_t>(mul(r, x))] = 1;
    std::vector<Elem> out;
    for (Elem a = 0; a < n_; ++a)
        if (in[static_cast<std::size_t>(a)]) out.push_back(a);
    return out;
}

inline bool FiniteRing::comaximal(Elem x, Elem y) const {
    std::vector<char> in_ry(static_cast<std::size_t>(n_), 0);
    for (Elem r = 0; r < n_; ++r) in_ry[static_cast<std::size_t>(mul(r, y))] = 1;
    for (Elem r = 0; r < n_; ++r) {
        Elem need = sub(one_, mul(r, x));
        if (in_ry[static_cast<std::size_t>(need)]) return true;
    }
    return false;
}

inline std::vector<std::vector<Elem>> FiniteRing::index2_maximal_ideals() const {
    // Index-2 additive subgroups all contain D = {x+x : x in R}; they are the
    // preimages of hyperplanes of the F2-space R/D. Keep those absorbing
    // multiplication.
    std::vector<char> in_d(static_cast<std::size_t>(n_), 0);
    for (Elem x = 0; x < n_; ++x) in_d[static_cast<std::size_t>(add(x, x))] = 1;
    std::vector<Elem> dlist;
    for (Elem x = 0; x < n_; ++x)
        if (in_d[static_cast<std::size_t>(x)]) dlist.push_back(x);
    if (static_cast<int>(dlist.size()) == n_) return {};  // 2 is a unit, odd-order style

    // coset id per element (coset of the subgroup generated by D; D is
    // already a subgroup)
    std::vector<int> coset(static_cast<std::size_t>(n_), -1);
    std::vector<Elem> reps;
    for (Elem x = 0; x < n_; ++x) {
        if (coset[static_cast<std::size_t>(x)] >= 0) continue;
        int id = static_cast<int>(reps.size());
        reps.push_back(x);
        for (Elem d : dlist) coset[static_cast<std::size_t>(add(x, d))] = id;
    }

    // coordinates of each coset over an F2 basis of R/D
    const int q = static_cast<int>(reps.size());
    std::vector<uint32_t> coords(static_cast<std::size_t>(q), 0);
    std::vector<char> reached(static_cast<std::size_t>(q), 0);
    reached[static_cast<std::size_t>(coset[0])] = 1;
    std::vector<int> basis;  // coset ids of basis vectors
    for (int c = 0; c < q; ++c) {
        if (reached[static_cast<std::size_t>(c)]) continue;
        int bit = static_cast<int>(basis.size());
        basis.push_back(c);
        std::vector<int> old;
        for (int d = 0; d < q; ++d)
            if (reached[static_cast<std::size_t>(d)]) old.push_back(d);
        for (int d : old) {
            Elem sum = add(reps[static_cast<std::size_t>(c)], reps[static_cast<std::size_t>(d)]);
            int e = coset[static_cast<std::size_t>(sum)];
            reached[static_cast<std::size_t>(e)] = 1;
            coords[static_cast<std::size_t>(e)] = coords[static_cast<std::size_t>(d)] | (1u << bit);
        }
    }

    std::vector<std::vector<Elem>> out;
    const uint32_t functionals = (1u << basis.size());
    for (uint32_t phi = 1; phi < functionals; ++phi) {
        std::vector<Elem> h;
        std::vector<char> in_h(static_cast<std::size_t>(n_), 0);
        for (Elem x = 0; x < n_; ++x) {
            uint32_t v = coords[static_cast<std::size_t>(coset[static_cast<std::size_t>(x)])];
            if (__builtin_parity(v & phi) == 0) {
                h.push_back(x);
                in_h[static_cast<std::size_t>(x)] = 1;
            }
        }
        bool ideal = true;
        for (Elem r = 0; r < n_ && ideal; ++r)
            for (Elem x : h)
                if (!in_h[static_cast<std::size_t>(mul(r, x))]) {
                    ideal = false;
                    break;
                }
        if (ideal) out.push_back(std::move(h));
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<Elem> FiniteRing::subgroup_closure(const std::vector<Elem>& seed) const {
    for (Elem s : seed)
        if (!is_unit(s)) throw RingError(RingErrc::ElementNotUnit, "seed element is not a unit");
    std::vector<char> in(static_cast<std::size_t>(n_), 0);
    std::vector<Elem> stack{one_};
    in[static_cast<std::size_t>(one_)] = 1;
    for (Elem s : seed)
        if (!in[static_cast<std::size_t>(s)]) {
            in[static_cast<std::size_t>(s)] = 1;
            stack.push_back(s);
        }
    std::vector<Elem> members(stack);
    while (!stack.empty()) {
        Elem a = stack.back();
        stack.pop_back();
        for (std::size_t i = 0; i < members.size(); ++i) {
            Elem c = mul(a, members[i]);
            if (!in[static_cast<std::size_t>(c)]) {
                in[static_cast<std::size_t>(c)] = 1;
                members.push_back(c);
                stack.push_back(c);
            }
        }
    }
    std::sort(members.begin(), members.end());
    return members;
}

inline Elem FiniteRing::encode_tuple(const std::vector<int>& t) const {
    if (t.size() != factor_orders_.size())
        throw RingError(RingErrc::BadSpec, "tuple arity does not match ring factors");
    int code = 0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i] < 0 || t[i] >= factor_orders_[i])
            throw RingError(RingErrc::BadSpec, "tuple coordinate out of range");
        code = code * factor_orders_[i] + t[i];
    }
    return code;
}

inline std::vector<int> FiniteRing::decode_tuple(Elem x) const {
    std::vector<int> t(factor_orders_.size());
    for (int i = static_cast<int>(factor_orders_.size()) - 1; i >= 0; --i) {
        t[static_cast<std::size_t>(i)] = x % factor_orders_[static_cast<std::size_t>(i)];
        x /= factor_orders_[static_cast<std::size_t>(i)];
    }
    return t;
}

// ---------------------------------------------------------------------------
// multiplicative data (G, S)

struct MultiplicativeData {
    std::vector<Elem> group;       // sorted
    std::vector<Elem> connection;  // sorted, non-empty, inverse-closed subset of group
};

inline MultiplicativeData validate_S(const FiniteRing& r, std::vector<Elem> g, std::vector<Elem> s) {
    std::sort(g.begin(), g.end());
    g.erase(std::unique(g.begin(), g.end()), g.end());
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());

    auto in_g = [&](Elem x) { return std::binary_search(g.begin(), g.end(), x); };
    for (Elem x : g)
        if (!r.is_unit(x)) throw RingError(RingErrc::GNotSubgroup, "G contains a non-unit");
    if (!in_g(r.one())) throw RingError(RingErrc::GNotSubgroup, "G does not contain 1");
    for (Elem a : g) {
        if (!in_g(r.inverse(a))) throw RingError(RingErrc::GNotSubgroup, "G is not inverse-closed");
        for (Elem b : g)
            if (!in_g(r.mul(a, b))) throw RingError(RingErrc::GNotSubgroup, "G is not closed under product");
    }
    if (s.empty()) throw RingError(RingErrc::EmptyS, "S must be non-empty");
    for (Elem x : s) {
        if (!in_g(x)) throw RingError(RingErrc::SNotInG, "S is not contained in G");
        if (!std::binary_search(s.begin(), s.end(), r.inverse(x)))
            throw RingError(RingErrc::SNotInverseClosed, "S is not inverse-closed");
    }
    return MultiplicativeData{std::move(g), std::move(s)};
}

// ---------------------------------------------------------------------------
// element and spec text I/O

inline std::string format_element(const FiniteRing& r, Elem x) {
    if (r.factor_orders().size() <= 1) return std::to_string(x);
    auto t = r.decode_tuple(x);
    std::string s = "(";
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(t[i]);
    }
    s += ")";
    return s;
}

namespace parse_detail {

class Cursor {
public:
    explicit Cursor(const std::string& s) : s_(s) {}
    void skip_ws() {
        while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t')) ++pos_;
    }
    bool eof() {
        skip_ws();
        return pos_ >= s_.size();
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    char peek_raw() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    char get() {
        skip_ws();
        if (pos_ >= s_.size()) throw RingParseError(pos_, "unexpected end of input");
        return s_[pos_++];
    }
    void expect(char c) {
        char g = get();
        if (g != c) throw RingParseError(pos_ - 1, std::string("expected '") + c + "'");
    }
    bool try_consume(const std::string& lit) {
        skip_ws();
        if (s_.compare(pos_, lit.size(), lit) == 0) {
            pos_ += lit.size();
            return true;
        }
        return false;
    }
    long long integer() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) throw RingParseError(pos_, "expected an integer");
        return std::stoll(s_.substr(start, pos_ - start));
    }
    std::size_t pos() const { return pos_; }

private:
    const std::string& s_;
    std::size_t pos_ = 0;
};

inline Poly parse_poly(Cursor& c) {
    // sum of terms: [coef][x[^exp]], separated by + or -
    std::vector<long long> coeffs;
    auto bump = [&](int deg, long long v) {
        if (static_cast<int>(coeffs.size()) <= deg) coeffs.resize(static_cast<std::size_t>(deg) + 1, 0);
        coeffs[static_cast<std::size_t>(deg)] += v;
    };
    long long sign = 1;
    while (true) {
        long long coef = 1;
        bool have_coef = false;
        if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
            coef = c.integer();
            have_coef = true;
        }
        int deg = 0;
        if (c.peek() == '*') c.get();
        if (c.peek() == 'x') {
            c.get();
            deg = 1;
            if (c.peek() == '^') {
                c.get();
                deg = static_cast<int>(c.integer());
            }
        } else if (!have_coef) {
            throw RingParseError(c.pos(), "expected a polynomial term");
        }
        bump(deg, sign * coef);
        char nxt = c.peek();
        if (nxt == '+') {
            c.get();
            sign = 1;
        } else if (nxt == '-') {
            c.get();
            sign = -1;
        } else {
            break;
        }
    }
    return Poly{std::move(coeffs)};
}

inline RingSpec parse_atom(Cursor& c) {
    if (c.try_consume("GF(")) {
        long long q = c.integer();
        c.expect(')');
        if (q < 2) throw RingParseError(c.pos(), "GF order must be >= 2");
        int p = 2;
        while (q % p != 0) {
            ++p;
            if (p > q) throw RingParseError(c.pos(), "GF order must be a prime power");
        }
        int k = 0;
        long long t = q;
        while (t % p == 0) {
            t /= p;
            ++k;
        }
        if (t != 1) throw RingError(RingErrc::NotPrimePower, "GF order must be a prime power: " + std::to_string(q));
        return galois_field(p, k);
    }
    if (c.peek() == 'Z') {
        c.get();
        long long n = c.integer();
        if (c.try_consume("[x]/(")) {
            Poly f = parse_poly(c);
            c.expect(')');
            return quotient_poly(static_cast<int>(n), std::move(f));
        }
        return modular_int(static_cast<int>(n));
    }
    throw RingParseError(c.pos(), "expected a ring atom (Zn, GF(q) or Zm[x]/(f))");
}

}  // namespace parse_detail

inline RingSpec parse_ring_spec(const std::string& text) {
    parse_detail::Cursor c(text);
    std::vector<RingSpec> factors;
    factors.push_back(parse_detail::parse_atom(c));
    while (!c.eof()) {
        if (c.peek() != 'x') throw RingParseError(c.pos(), "expected 'x' between ring factors");
        c.get();
        factors.push_back(parse_detail::parse_atom(c));
    }
    if (factors.size() == 1) return std::move(factors[0]);
    return product(std::move(factors));
}

inline Elem parse_element(const FiniteRing& r, const std::string& text) {
    parse_detail::Cursor c(text);
    if (c.peek() == '(') {
        c.get();
        std::vector<int> t;
        t.push_back(static_cast<int>(c.integer()));
        while (c.peek() == ',') {
            c.get();
            t.push_back(static_cast<int>(c.integer()));
        }
        c.expect(')');
        return r.encode_tuple(t);
    }
    long long v = c.integer();
    if (v < 0 || v >= r.order()) throw RingParseError(0, "element code out of range");
    return static_cast<Elem>(v);
}

// Parse a set of elements: codes or tuples separated by spaces, commas or
// semicolons (commas inside parentheses belong to the tuple).
inline std::vector<Elem> parse_element_set(const FiniteRing& r, const std::string& text) {
    std::vector<Elem> out;
    std::size_t i = 0;
    while (i < text.size()) {
        char ch = text[i];
        if (ch == ' ' || ch == ',' || ch == ';' || ch == '\t') {
            ++i;
            continue;
        }
        std::size_t j = i;
        if (ch == '(') {
            while (j < text.size() && text[j] != ')') ++j;
            if (j == text.size()) throw RingParseError(i, "unterminated tuple");
            ++j;
        } else {
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            if (j == i) throw RingParseError(i, "expected an element");
        }
        out.push_back(parse_element(r, text.substr(i, j - i)));
        i = j;
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// local-ring catalog (generators for the classifier's ring universe)

struct CatalogEntry {
    std::string name;
    std::string spec;
};

// Local rings of order <= 16 used by the classifier. The order-16 stratum is
// a set of representatives, not a complete classification; the last entry is
// the single-generator presentation of GF(4)[x]/(x^2).
inline const std::vector<CatalogEntry>& local_ring_catalog() {
    static const std::vector<CatalogEntry> catalog = {
        {"Z2", "Z2"},
        {"Z3", "Z3"},
        {"Z4", "Z4"},
        {"Z2[x]/(x^2)", "Z2[x]/(x^2)"},
        {"GF(4)", "GF(4)"},
        {"Z5", "Z5"},
        {"Z7", "Z7"},
        {"Z8", "Z8"},
        {"Z2[x]/(x^3)", "Z2[x]/(x^3)"},
        {"Z9", "Z9"},
        {"Z3[x]/(x^2)", "Z3[x]/(x^2)"},
        {"GF(8)", "GF(8)"},
        {"GF(9)", "GF(9)"},
        {"Z16", "Z16"},
        {"GF(16)", "GF(16)"},
        {"Z4[x]/(x^2)", "Z4[x]/(x^2)"},
        {"Z2[x]/(x^4)", "Z2[x]/(x^4)"},
        {"GF4[x]/(x^2)", "Z2[x]/(x^4+x^2+1)"},
    };
    return catalog;
}

}  // namespace ringtopo
