#ifndef ARR_MODULE_HPP
#define ARR_MODULE_HPP

#include <algorithm>
#include <optional>
#include <vector>

#include "polynomial.hpp"

namespace arr {

/// One term of a free-module element: coefficient * monomial * basis vector.
template <class K>
struct MTerm {
    int32_t comp;
    Mono m;
    K c;
};

/// Element of a graded free module F = (+)_i S[-shift_i].  Terms are kept
/// sorted decreasing under the owning context's order.
template <class K>
struct MVec {
    std::vector<MTerm<K>> t;

    bool is_zero() const { return t.empty(); }
    const MTerm<K>& lead() const {
        if (t.empty()) throw error("MVec: lead of zero");
        return t.front();
    }
};

/// Ambient data for free-module computations: ring variables, per-component
/// degree shifts, and the term order.  Terms compare by shifted degree, then
/// component position, then the monomial order.
struct ModuleCtx {
    int nvars = 0;
    std::vector<int> shifts;
    MonomialOrder ord;

    int rank() const { return (int)shifts.size(); }

    int sdeg(int comp, const Mono& m) const { return (int)m.deg + shifts[comp]; }

    /// -1 if a < b, 0 if equal, +1 if a > b.
    int cmp(int ca, const Mono& ma, int cb, const Mono& mb) const {
        int da = sdeg(ca, ma), db = sdeg(cb, mb);
        if (da != db) return da < db ? -1 : 1;
        if (ca != cb) return ca < cb ? 1 : -1; // lower position has priority
        return ord.cmp(ma, mb);
    }
};

namespace modops {

template <class K>
void sort_terms(const ModuleCtx& ctx, std::vector<MTerm<K>>& ts) {
    std::sort(ts.begin(), ts.end(), [&](const MTerm<K>& a, const MTerm<K>& b) {
        return ctx.cmp(a.comp, a.m, b.comp, b.m) > 0;
    });
}

/// Sort, combine duplicates, drop zeros.
template <class K>
MVec<K> normalized(const ModuleCtx& ctx, std::vector<MTerm<K>> ts) {
    sort_terms(ctx, ts);
    MVec<K> r;
    r.t.reserve(ts.size());
    for (auto& tm : ts) {
        if (tm.c.is_zero()) continue;
        if (!r.t.empty() && r.t.back().comp == tm.comp && r.t.back().m == tm.m) {
            r.t.back().c += tm.c;
            if (r.t.back().c.is_zero()) r.t.pop_back();
        } else {
            r.t.push_back(std::move(tm));
        }
    }
    return r;
}

/// a + s * x^m * b  (s may be zero to just copy a).
template <class K>
MVec<K> axpy(const ModuleCtx& ctx, const MVec<K>& a, const K& s, const Mono& m, const MVec<K>& b) {
    MVec<K> r;
    r.t.reserve(a.t.size() + b.t.size());
    size_t i = 0, j = 0;
    auto bterm = [&](size_t jj) {
        MTerm<K> t = b.t[jj];
        t.m = t.m.mul(m);
        t.c = t.c * s;
        return t;
    };
    while (i < a.t.size() || j < b.t.size()) {
        if (j >= b.t.size()) { r.t.push_back(a.t[i++]); continue; }
        MTerm<K> bt = bterm(j);
        if (i >= a.t.size()) {
            if (!bt.c.is_zero()) r.t.push_back(std::move(bt));
            ++j;
            continue;
        }
        int c = ctx.cmp(a.t[i].comp, a.t[i].m, bt.comp, bt.m);
        if (c > 0) {
            r.t.push_back(a.t[i++]);
        } else if (c < 0) {
            if (!bt.c.is_zero()) r.t.push_back(std::move(bt));
            ++j;
        } else {
            K v = a.t[i].c + bt.c;
            if (!v.is_zero()) r.t.push_back(MTerm<K>{a.t[i].comp, a.t[i].m, v});
            ++i;
            ++j;
        }
    }
    return r;
}

/// sa * a + sb * x^m * b, consuming a.  The workhorse of reduction.
template <class K>
MVec<K> combine(const ModuleCtx& ctx, MVec<K>&& a, const K& sa, const K& sb, const Mono& m,
                const MVec<K>& b) {
    MVec<K> r;
    r.t.reserve(a.t.size() + b.t.size());
    const bool sa1 = sa.is_one();
    size_t i = 0, j = 0;
    while (i < a.t.size() || j < b.t.size()) {
        int c;
        Mono bm;
        if (i >= a.t.size()) c = -1;
        else if (j >= b.t.size()) c = 1;
        else {
            bm = b.t[j].m.mul(m);
            c = ctx.cmp(a.t[i].comp, a.t[i].m, b.t[j].comp, bm);
        }
        if (c > 0) {
            MTerm<K>& t = a.t[i++];
            if (!sa1) t.c = t.c * sa;
            r.t.push_back(std::move(t));
        } else if (c < 0) {
            K v = b.t[j].c * sb;
            if (!v.is_zero()) r.t.push_back(MTerm<K>{b.t[j].comp, b.t[j].m.mul(m), std::move(v)});
            ++j;
        } else {
            K v = (sa1 ? std::move(a.t[i].c) : a.t[i].c * sa) + b.t[j].c * sb;
            if (!v.is_zero()) r.t.push_back(MTerm<K>{a.t[i].comp, a.t[i].m, std::move(v)});
            ++i;
            ++j;
        }
    }
    return r;
}

template <class K>
MVec<K> scaled(const MVec<K>& a, const K& s) {
    MVec<K> r;
    if (s.is_zero()) return r;
    r.t = a.t;
    for (auto& tm : r.t) tm.c = tm.c * s;
    return r;
}

template <class K>
MVec<K> mono_mul(const MVec<K>& a, const Mono& m) {
    MVec<K> r;
    r.t = a.t;
    for (auto& tm : r.t) tm.m = tm.m.mul(m);
    return r;
}

/// Shifted degree of a homogeneous element (checked).
template <class K>
int degree(const ModuleCtx& ctx, const MVec<K>& v) {
    if (v.is_zero()) throw error("MVec: degree of zero");
    int d = ctx.sdeg(v.t[0].comp, v.t[0].m);
    for (const auto& tm : v.t)
        if (ctx.sdeg(tm.comp, tm.m) != d) throw error("MVec: inhomogeneous element");
    return d;
}

template <class K>
bool is_homogeneous(const ModuleCtx& ctx, const MVec<K>& v) {
    if (v.is_zero()) return true;
    int d = ctx.sdeg(v.t[0].comp, v.t[0].m);
    for (const auto& tm : v.t)
        if (ctx.sdeg(tm.comp, tm.m) != d) return false;
    return true;
}

template <class K>
bool equal(const MVec<K>& a, const MVec<K>& b) {
    if (a.t.size() != b.t.size()) return false;
    for (size_t i = 0; i < a.t.size(); ++i)
        if (a.t[i].comp != b.t[i].comp || !(a.t[i].m == b.t[i].m) || !(a.t[i].c == b.t[i].c))
            return false;
    return true;
}

/// Scalar normalization: monic over a general field.
template <class K>
void scal_normalize(MVec<K>& v) {
    if (v.is_zero()) return;
    K lc = v.t.front().c;
    if (lc.is_one()) return;
    K inv = K(1) / lc;
    for (auto& tm : v.t) tm.c = tm.c * inv;
}

/// Rational specialization: integral, primitive, positive leading
/// coefficient.  Keeps Buchberger arithmetic in Z.
inline void scal_normalize(MVec<QQ>& v) {
    if (v.is_zero()) return;
    mpz_class den_lcm = 1, num_gcd = 0;
    for (const auto& tm : v.t) {
        mpz_class d = tm.c.den();
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
        den_lcm = den_lcm / g * d;
    }
    for (const auto& tm : v.t) {
        mpz_class n = tm.c.num() * (den_lcm / tm.c.den());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
    }
    if (num_gcd == 0) num_gcd = 1;
    QQ f{mpq_class(den_lcm) / mpq_class(num_gcd)};
    if ((v.t.front().c * f).sign() < 0) f = -f;
    if (f.is_one()) return;
    for (auto& tm : v.t) tm.c = tm.c * f;
}

/// Convert a rank-1 element to a polynomial.
template <class K>
Poly<K> to_poly(int nvars, const MVec<K>& v) {
    std::vector<typename Poly<K>::Term> ts;
    ts.reserve(v.t.size());
    for (const auto& tm : v.t) {
        if (tm.comp != 0) throw error("MVec: to_poly on rank>1 element");
        ts.emplace_back(tm.m, tm.c);
    }
    return Poly<K>::from_terms(nvars, std::move(ts));
}

template <class K>
MVec<K> from_poly(const ModuleCtx& ctx, const Poly<K>& p, int comp = 0) {
    std::vector<MTerm<K>> ts;
    ts.reserve(p.size());
    for (const auto& [m, c] : p.terms()) ts.push_back(MTerm<K>{comp, m, c});
    return normalized(ctx, std::move(ts));
}

/// Extract one coordinate as a polynomial.
template <class K>
Poly<K> coordinate(int nvars, const MVec<K>& v, int comp) {
    std::vector<typename Poly<K>::Term> ts;
    for (const auto& tm : v.t)
        if (tm.comp == comp) ts.emplace_back(tm.m, tm.c);
    return Poly<K>::from_terms(nvars, std::move(ts));
}

/// Assemble an element from coordinate polynomials.
template <class K>
MVec<K> from_coordinates(const ModuleCtx& ctx, const std::vector<Poly<K>>& coords) {
    std::vector<MTerm<K>> ts;
    for (int i = 0; i < (int)coords.size(); ++i)
        for (const auto& [m, c] : coords[i].terms()) ts.push_back(MTerm<K>{i, m, c});
    return normalized(ctx, std::move(ts));
}

} // namespace modops

} // namespace arr

#endif
