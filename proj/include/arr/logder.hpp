#ifndef ARR_LOGDER_HPP
#define ARR_LOGDER_HPP

#include <memory>
#include <mutex>
#include <unordered_map>
#include <variant>

#include "arrangement.hpp"
#include "groebner.hpp"
#include "hilbert.hpp"
#include "lattice.hpp"
#include "resolution.hpp"

namespace arr {

/// How D(A) is computed.  All routes produce the same submodule of S^n;
/// MultiplierKernel is the reference formulation, Incremental adds one
/// hyperplane at a time (fast on large instances), JacobianSyzygy reads D(A)
/// off the syzygies of (dQ/dx_1, ..., dQ/dx_n, Q) and serves as an oracle.
enum class DerStrategy { Auto, MultiplierKernel, Incremental, JacobianSyzygy };

template <class K>
struct DerivationData {
    Arrangement A;
    ModuleCtx ctx;                      // S^n, zero shifts
    std::vector<MVec<K>> min_gens;      // minimal generators of D(A)
    std::vector<MVec<K>> d0_gens;       // minimal generators of D_0(A); empty A -> none
    std::shared_ptr<Resolution<K>> d0_res; // filled lazily
};

namespace detail {

template <class K>
ModuleCtx derivation_ctx(int nvars) {
    return ModuleCtx{nvars, std::vector<int>(nvars, 0), MonomialOrder::grevlex()};
}

/// Chart substitution images for "reduce modulo alpha": solve the pivot
/// variable of h and renumber the remaining variables to 0..n-2.
template <class K>
std::vector<Poly<K>> chart_images(const Hyperplane& h, uint64_t prime) {
    const int n = h.dim();
    const int p = h.pivot();
    std::vector<Poly<K>> images(n, Poly<K>(n - 1));
    int k = 0;
    for (int i = 0; i < n; ++i) {
        if (i == p) continue;
        images[i] = Poly<K>::variable(n - 1, k);
        ++k;
    }
    Poly<K> sub(n - 1);
    k = 0;
    for (int i = 0; i < n; ++i) {
        if (i == p) continue;
        if (!h.a[i].is_zero())
            sub -= Poly<K>::monomial(n - 1, Mono::var(n - 1, k), scalar_from_qq<K>(h.a[i], prime));
        ++k;
    }
    images[p] = sub;
    return images;
}

/// D of the multiplier-kernel formulation: syzygies of the |A| x (n + |A|)
/// constraint system theta(alpha_H) - h_H alpha_H = 0, projected to theta.
template <class K>
std::vector<MVec<K>> derivation_gens_kernel(const Arrangement& A, uint64_t prime, uint64_t max_steps) {
    const int n = A.dim();
    const int na = A.size();
    ModuleCtx dst{n > 0 ? n : 1, std::vector<int>(na, 0), MonomialOrder::grevlex()};
    dst.nvars = n;
    std::vector<MVec<K>> cols;
    std::vector<int> src_shifts;
    for (int i = 0; i < n; ++i) {
        std::vector<MTerm<K>> ts;
        for (int hidx = 0; hidx < na; ++hidx) {
            const QQ& coef = A[hidx].a[i];
            if (!coef.is_zero())
                ts.push_back(MTerm<K>{hidx, Mono::one(n), scalar_from_qq<K>(coef, prime)});
        }
        cols.push_back(modops::normalized(dst, std::move(ts)));
        src_shifts.push_back(0);
    }
    for (int hidx = 0; hidx < na; ++hidx) {
        Poly<K> alpha = A[hidx].template form<K>(prime);
        std::vector<MTerm<K>> ts;
        for (const auto& [m, c] : alpha.terms()) ts.push_back(MTerm<K>{hidx, m, -c});
        cols.push_back(modops::normalized(dst, std::move(ts)));
        src_shifts.push_back(1);
    }
    auto [sctx, ker] = kernel_of_map<K>(dst, cols, src_shifts, max_steps);
    ModuleCtx tctx = derivation_ctx<K>(n);
    std::vector<MVec<K>> gens;
    for (const auto& v : ker) {
        std::vector<MTerm<K>> ts;
        for (const auto& tm : v.t)
            if (tm.comp < n) ts.push_back(tm);
        MVec<K> g = modops::normalized(tctx, std::move(ts));
        if (!g.is_zero()) gens.push_back(std::move(g));
    }
    return min_generators(tctx, gens, max_steps);
}

/// D by adding hyperplanes one at a time: if D(A_i) = <theta_j> then
/// D(A_i + {alpha}) is generated by lifted syzygies of (theta_j(alpha) mod
/// alpha) together with alpha * theta_j.
template <class K>
std::vector<MVec<K>> derivation_gens_incremental(const Arrangement& A, uint64_t prime,
                                                 uint64_t max_steps) {
    const int n = A.dim();
    ModuleCtx ctx = derivation_ctx<K>(n);
    std::vector<MVec<K>> gens;
    for (int i = 0; i < n; ++i) {
        MVec<K> e;
        e.t.push_back(MTerm<K>{i, Mono::one(n), K(1)});
        gens.push_back(std::move(e));
    }
    for (const auto& h : A.hyperplanes()) {
        Poly<K> alpha = h.template form<K>(prime);
        std::vector<Poly<K>> chart = chart_images<K>(h, prime);
        ModuleCtx bar{n - 1, {0}, MonomialOrder::grevlex()};
        std::vector<MVec<K>> cols;
        std::vector<int> shifts;
        std::vector<Poly<K>> betas;
        for (const auto& g : gens) {
            // beta = theta(alpha) = sum_i theta_i * a_i
            Poly<K> beta(n);
            for (const auto& tm : g.t) {
                const QQ& ai = h.a[tm.comp];
                if (ai.is_zero()) continue;
                beta += Poly<K>::monomial(n, tm.m, tm.c * scalar_from_qq<K>(ai, prime));
            }
            betas.push_back(beta.substitute(chart));
            cols.push_back(modops::from_poly(bar, betas.back()));
            shifts.push_back(modops::degree(ctx, g));
        }
        auto [sctx, syz] = kernel_of_map<K>(bar, cols, shifts, max_steps);
        std::vector<MVec<K>> next;
        for (const auto& s : syz) {
            // lift chart coefficients back to S (pivot variable absent)
            MVec<K> comb;
            for (const auto& tm : s.t) {
                std::vector<int> exps(n, 0);
                int k = 0;
                for (int v = 0; v < n; ++v) {
                    if (v == h.pivot()) continue;
                    exps[v] = tm.m.exp(k);
                    ++k;
                }
                comb = modops::axpy(ctx, comb, tm.c, Mono::from_exponents(exps), gens[tm.comp]);
            }
            if (!comb.is_zero()) next.push_back(std::move(comb));
        }
        for (const auto& g : gens) {
            MVec<K> ag;
            for (const auto& [m, c] : alpha.terms()) ag = modops::axpy(ctx, ag, c, m, g);
            next.push_back(std::move(ag));
        }
        gens = min_generators(ctx, next, max_steps);
    }
    return gens;
}

/// D from the Jacobian syzygies of Q: theta(Q) = hQ.
template <class K>
std::vector<MVec<K>> derivation_gens_jacobian(const Arrangement& A, uint64_t prime,
                                              uint64_t max_steps) {
    const int n = A.dim();
    Poly<K> Q = A.template defining_polynomial<K>(prime);
    const int q = Q.degree();
    ModuleCtx dst{n, {0}, MonomialOrder::grevlex()};
    std::vector<MVec<K>> cols;
    std::vector<int> shifts;
    for (int i = 0; i < n; ++i) {
        cols.push_back(modops::from_poly(dst, Q.derivative(i)));
        shifts.push_back(q - 1);
    }
    cols.push_back(modops::from_poly(dst, Q));
    shifts.push_back(q);
    auto [sctx, ker] = kernel_of_map<K>(dst, cols, shifts, max_steps);
    ModuleCtx tctx = derivation_ctx<K>(n);
    std::vector<MVec<K>> gens;
    for (const auto& v : ker) {
        std::vector<MTerm<K>> ts;
        for (const auto& tm : v.t)
            if (tm.comp < n) ts.push_back(tm);
        MVec<K> g = modops::normalized(tctx, std::move(ts));
        if (!g.is_zero()) gens.push_back(std::move(g));
    }
    return min_generators(tctx, gens, max_steps);
}

template <class K>
struct DerCache {
    std::mutex mu;
    std::unordered_map<std::string, std::shared_ptr<DerivationData<K>>> map;
    static DerCache& instance() {
        static DerCache c;
        return c;
    }
};

} // namespace detail

template <class K>
MVec<K> unit_vector(int comp, int nvars) {
    MVec<K> e;
    e.t.push_back(MTerm<K>{comp, Mono::one(nvars), K(1)});
    return e;
}

template <class K>
Poly<K> poly_determinant(const std::vector<std::vector<Poly<K>>>& M) {
    const int n = (int)M.size();
    if (n == 0) throw error("poly_determinant: empty matrix");
    if (n == 1) return M[0][0];
    int nv = M[0][0].nvars();
    Poly<K> det(nv);
    for (int j = 0; j < n; ++j) {
        if (M[0][j].is_zero()) continue;
        std::vector<std::vector<Poly<K>>> minor;
        for (int i = 1; i < n; ++i) {
            std::vector<Poly<K>> row;
            for (int k = 0; k < n; ++k)
                if (k != j) row.push_back(M[i][k]);
            minor.push_back(std::move(row));
        }
        Poly<K> term = M[0][j] * poly_determinant(minor);
        det = (j % 2 == 0) ? det + term : det - term;
    }
    return det;
}

/// theta(alpha_H) is divisible by alpha_H for every H.
template <class K>
bool is_logarithmic(const Arrangement& A, const Derivation<K>& theta,
                    uint64_t prime = Zp::kDefaultPrime) {
    for (const auto& h : A.hyperplanes()) {
        Poly<K> alpha = h.template form<K>(prime);
        Poly<K> val = apply_derivation(theta, alpha);
        if (val.is_zero()) continue;
        if (!val.exact_divide(alpha)) return false;
    }
    return true;
}

template <class K>
Derivation<K> derivation_from_mvec(int nvars, const MVec<K>& v) {
    Derivation<K> th;
    th.coords.reserve(nvars);
    for (int i = 0; i < nvars; ++i) th.coords.push_back(modops::coordinate(nvars, v, i));
    return th;
}

/// Minimal generators of D(A) and D_0(A), memoized per arrangement.
template <class K = QQ>
std::shared_ptr<DerivationData<K>> derivation_module(const Arrangement& A,
                                                     DerStrategy strategy = DerStrategy::Auto,
                                                     uint64_t prime = Zp::kDefaultPrime,
                                                     uint64_t max_steps = UINT64_MAX) {
    if (!A.central()) throw centrality_error("derivation_module: central arrangements only");
    if (strategy == DerStrategy::Auto)
        strategy = (A.size() + A.dim() <= 14) ? DerStrategy::MultiplierKernel : DerStrategy::Incremental;
    std::string key = A.key() + "#s" + std::to_string((int)strategy) + "#p" +
                      (std::is_same_v<K, QQ> ? std::string("q") : std::to_string(prime));
    auto& cache = detail::DerCache<K>::instance();
    {
        std::lock_guard<std::mutex> lk(cache.mu);
        auto it = cache.map.find(key);
        if (it != cache.map.end()) return it->second;
    }
    auto data = std::make_shared<DerivationData<K>>();
    data->A = A;
    data->ctx = detail::derivation_ctx<K>(A.dim());
    switch (strategy) {
        case DerStrategy::MultiplierKernel:
            data->min_gens = detail::derivation_gens_kernel<K>(A, prime, max_steps);
            break;
        case DerStrategy::Incremental:
            data->min_gens = detail::derivation_gens_incremental<K>(A, prime, max_steps);
            break;
        case DerStrategy::JacobianSyzygy:
            data->min_gens = detail::derivation_gens_jacobian<K>(A, prime, max_steps);
            break;
        default:
            throw error("derivation_module: bad strategy");
    }
    // Euler split: gens of D_0 are theta - (theta(Q)/(|A| Q)) theta_E, with
    // theta(Q)/Q computed termwise as sum_H theta(alpha_H)/alpha_H.
    if (A.size() > 0) {
        const int n = A.dim();
        std::vector<MVec<K>> d0;
        K inv_count = K(1) / K((long)A.size());
        for (const auto& g : data->min_gens) {
            Derivation<K> th = derivation_from_mvec(n, g);
            Poly<K> p(n); // theta(Q)/Q
            for (const auto& h : A.hyperplanes()) {
                Poly<K> alpha = h.template form<K>(prime);
                Poly<K> val = apply_derivation(th, alpha);
                if (val.is_zero()) continue;
                auto quot = val.exact_divide(alpha);
                if (!quot) throw oracle_mismatch("split_euler: theta(alpha) not divisible by alpha");
                p += *quot;
            }
            MVec<K> proj = g;
            if (!p.is_zero()) {
                for (int i = 0; i < n; ++i) {
                    Poly<K> corr = p.scaled(inv_count) * Poly<K>::variable(n, i);
                    for (const auto& [m, c] : corr.terms())
                        proj = modops::axpy(data->ctx, proj, -c, m, unit_vector<K>(i, n));
                }
            }
            if (!proj.is_zero()) d0.push_back(std::move(proj));
        }
        data->d0_gens = min_generators(data->ctx, d0, max_steps);
    }
    std::lock_guard<std::mutex> lk(cache.mu);
    auto [it, inserted] = cache.map.emplace(key, data);
    return it->second;
}

/// Minimal free resolution of D_0(A), memoized.
template <class K = QQ>
std::shared_ptr<Resolution<K>> d0_resolution(const Arrangement& A,
                                             DerStrategy strategy = DerStrategy::Auto,
                                             uint64_t prime = Zp::kDefaultPrime,
                                             uint64_t max_steps = UINT64_MAX) {
    auto data = derivation_module<K>(A, strategy, prime, max_steps);
    if (!data->d0_res) {
        auto res = std::make_shared<Resolution<K>>(
            minimal_resolution<K>(data->ctx, data->d0_gens, A.dim() + 1, max_steps));
        data->d0_res = res;
    }
    return data->d0_res;
}

/// Betti table of D_0(A).
template <class K = QQ>
BettiTable d0_betti(const Arrangement& A, DerStrategy strategy = DerStrategy::Auto,
                    uint64_t prime = Zp::kDefaultPrime, uint64_t max_steps = UINT64_MAX) {
    return betti_table(*d0_resolution<K>(A, strategy, prime, max_steps));
}

/// Betti table of D(A) = S theta_E (+) D_0(A).
template <class K = QQ>
BettiTable d_betti(const Arrangement& A, DerStrategy strategy = DerStrategy::Auto) {
    if (A.size() == 0) {
        BettiTable t;
        t.add(0, 0, A.dim());
        return t;
    }
    BettiTable t = d0_betti<K>(A, strategy);
    t.add(0, 1);
    return t;
}

struct FreenessReport {
    bool free;
    std::vector<int> exponents; // sorted; meaningful when free
    int pd;                     // projective dimension of D(A)
};

/// Freeness by minimal resolution length.  D(A) has rank dim, so freeness is
/// equivalent to having exactly dim minimal generators; the projective
/// dimension for non-free input comes from the D_0 resolution.
/// Non-essential arrangements are essentialized first (exponents gain zeros).
template <class K = QQ>
FreenessReport exponents_if_free(const Arrangement& A, DerStrategy strategy = DerStrategy::Auto,
                                 uint64_t max_steps = UINT64_MAX) {
    Essentialization E = essentialize(A);
    int pad = A.dim() - E.ess.dim();
    const Arrangement& W = pad == 0 ? A : E.ess;
    auto data = derivation_module<K>(W, strategy, Zp::kDefaultPrime, max_steps);
    FreenessReport rep;
    if ((int)data->min_gens.size() == W.dim()) {
        rep.free = true;
        rep.pd = 0;
        for (const auto& g : data->min_gens)
            rep.exponents.push_back(modops::degree(data->ctx, g));
        for (int i = 0; i < pad; ++i) rep.exponents.push_back(0);
        std::sort(rep.exponents.begin(), rep.exponents.end());
    } else {
        rep.free = false;
        rep.pd = d0_resolution<K>(W, strategy, Zp::kDefaultPrime, max_steps)->pd();
    }
    return rep;
}

struct SaitoCertificate {
    bool ok;
    QQ factor; // det(theta_i) = factor * Q(A)
    std::string reason;
};

/// Saito's criterion: dim(A) candidate logarithmic derivations form a basis
/// of D(A) iff det of their coefficient matrix is a nonzero scalar multiple
/// of Q(A).
inline SaitoCertificate saito_check(const Arrangement& A, const std::vector<Derivation<QQ>>& thetas) {
    if (!A.central()) throw centrality_error("saito_check: central arrangements only");
    const int n = A.dim();
    if ((int)thetas.size() != n)
        return {false, QQ(0), "need exactly dim candidate derivations"};
    for (const auto& th : thetas)
        if (!is_logarithmic(A, th))
            throw membership_error("saito_check: candidate is not logarithmic");
    // determinant by cofactor expansion over the polynomial ring (n <= 5 here)
    std::vector<std::vector<Poly<QQ>>> M(n, std::vector<Poly<QQ>>(n, Poly<QQ>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) M[i][j] = thetas[i].coords[j];
    Poly<QQ> det = poly_determinant(M);
    if (det.is_zero()) return {false, QQ(0), "determinant vanishes"};
    Poly<QQ> Q = A.defining_polynomial<QQ>();
    auto quot = det.exact_divide(Q);
    if (!quot) return {false, QQ(0), "determinant is not a multiple of Q"};
    auto deg = quot->homogeneous_degree();
    if (!deg || *deg != 0) return {false, QQ(0), "determinant degree exceeds |A|"};
    return {true, quot->terms().front().second, ""};
}

struct MultiExponents {
    std::vector<int> exponents; // (d1, d2) sorted
    QQ det_factor;              // det(theta_1, theta_2) = factor * prod alpha^m
    std::vector<Derivation<QQ>> basis;
};

namespace detail {

/// Degree-d solutions of the rank-2 multiarrangement constraints
/// theta(alpha_X) = 0 mod alpha_X^{m_X}, as coefficient vectors over the
/// basis (coordinate, monomial).
inline std::vector<std::vector<QQ>> multi_solutions(const Multiarrangement& M, int d) {
    const int n = 2;
    std::vector<Mono> monos = monomials_of_degree(n, d);
    const int ncols = n * (int)monos.size();
    Mat<QQ> rows;
    for (int x = 0; x < M.base.size(); ++x) {
        const Hyperplane& h = M.base[x];
        const int mx = M.mult[x];
        // coordinates (w, t): w = alpha_X, t = the non-pivot variable;
        // substitution u_pivot = w - a_other * t, u_other = t.
        int p = h.pivot();
        int o = 1 - p;
        std::vector<Poly<QQ>> images(2, Poly<QQ>(2));
        // image of variable p: w - a_o * t  (working in new vars w=0, t=1)
        images[p] = Poly<QQ>::variable(2, 0) -
                    Poly<QQ>::monomial(2, Mono::var(2, 1), h.a[o]);
        images[o] = Poly<QQ>::variable(2, 1);
        // rows: coefficients of w^k t^{d-k}, k < mx, of theta(alpha)
        Mat<QQ> block(std::min(mx, d + 1), std::vector<QQ>(ncols, QQ(0)));
        for (int i = 0; i < n; ++i) {
            if (h.a[i].is_zero()) continue;
            for (int k = 0; k < (int)monos.size(); ++k) {
                Poly<QQ> contrib = Poly<QQ>::monomial(2, monos[k], h.a[i]).substitute(images);
                for (const auto& [m, c] : contrib.terms()) {
                    int wk = m.exp(0);
                    if (wk < mx && wk <= d) block[wk][i * monos.size() + k] += c;
                }
            }
        }
        for (auto& r : block) rows.push_back(std::move(r));
    }
    if (rows.empty()) {
        std::vector<std::vector<QQ>> all;
        for (int c = 0; c < ncols; ++c) {
            std::vector<QQ> v(ncols, QQ(0));
            v[c] = QQ(1);
            all.push_back(std::move(v));
        }
        return all;
    }
    return nullspace(std::move(rows));
}

inline Derivation<QQ> derivation_from_vector(const std::vector<QQ>& v, int d) {
    std::vector<Mono> monos = monomials_of_degree(2, d);
    Derivation<QQ> th;
    th.coords.assign(2, Poly<QQ>(2));
    for (int i = 0; i < 2; ++i)
        for (int k = 0; k < (int)monos.size(); ++k) {
            const QQ& c = v[i * monos.size() + k];
            if (!c.is_zero()) th.coords[i] += Poly<QQ>::monomial(2, monos[k], c);
        }
    return th;
}

} // namespace detail

/// Exponents of a rank-2 multiarrangement (always free) found degreewise:
/// d1 = first degree carrying a derivation, d2 = |m| - d1, certified by the
/// Saito-Ziegler determinant det(theta_1, theta_2) = c * prod alpha^m.
inline MultiExponents multi_exponents(const Multiarrangement& M) {
    if (M.base.dim() != 2) throw dimension_error("multi_exponents: ambient dimension must be 2");
    const int total = M.total_multiplicity();
    int d1 = -1;
    std::vector<std::vector<QQ>> sol1;
    for (int d = 0; 2 * d <= total; ++d) {
        sol1 = detail::multi_solutions(M, d);
        if (!sol1.empty()) {
            d1 = d;
            break;
        }
    }
    if (d1 < 0) throw error("multi_exponents: no derivation up to |m|/2; not a rank-2 multiarrangement?");
    const int d2 = total - d1;
    Derivation<QQ> th1 = detail::derivation_from_vector(sol1[0], d1);
    Poly<QQ> qm = Poly<QQ>::constant(2, QQ(1));
    for (int x = 0; x < M.base.size(); ++x) {
        Poly<QQ> f = M.base[x].form<QQ>();
        for (int k = 0; k < M.mult[x]; ++k) qm *= f;
    }
    std::vector<std::vector<QQ>> sol2 = detail::multi_solutions(M, d2);
    for (const auto& v : sol2) {
        Derivation<QQ> th2 = detail::derivation_from_vector(v, d2);
        Poly<QQ> det = th1.coords[0] * th2.coords[1] - th1.coords[1] * th2.coords[0];
        if (det.is_zero()) continue;
        auto quot = det.exact_divide(qm);
        if (!quot) throw oracle_mismatch("multi_exponents: determinant not divisible by Q_m");
        auto dg = quot->homogeneous_degree();
        if (!dg || *dg != 0) continue;
        MultiExponents out;
        out.exponents = {d1, d2};
        std::sort(out.exponents.begin(), out.exponents.end());
        out.det_factor = quot->terms().front().second;
        out.basis = {th1, th2};
        return out;
    }
    throw error("multi_exponents: no independent partner derivation found");
}

namespace detail {
inline uint64_t mkey(const Mono& m) { return mono_key(m); }
} // namespace detail

/// Dimension of the degree-d slice of D(A) straight from the linear
/// constraints theta(alpha_H) = 0 mod alpha_H.  Independent of any Groebner
/// computation; used as an oracle.
inline long derivation_space_dim(const Arrangement& A, int d) {
    if (!A.central()) throw centrality_error("derivation_space_dim: central arrangements only");
    const int n = A.dim();
    std::vector<Mono> monos = monomials_of_degree(n, d);
    const int ncols = n * (int)monos.size();
    Mat<QQ> rows;
    for (const auto& h : A.hyperplanes()) {
        std::vector<Poly<QQ>> chart = detail::chart_images<QQ>(h, 0);
        std::vector<Mono> bar = monomials_of_degree(n - 1, d);
        std::unordered_map<uint64_t, int> bar_idx;
        for (int k = 0; k < (int)bar.size(); ++k) bar_idx[detail::mkey(bar[k])] = k;
        Mat<QQ> block((int)bar.size(), std::vector<QQ>(ncols, QQ(0)));
        for (int i = 0; i < n; ++i) {
            if (h.a[i].is_zero()) continue;
            for (int k = 0; k < (int)monos.size(); ++k) {
                Poly<QQ> contrib = Poly<QQ>::monomial(n, monos[k], h.a[i]).substitute(chart);
                for (const auto& [m, c] : contrib.terms())
                    block[bar_idx.at(detail::mkey(m))][i * monos.size() + k] += c;
            }
        }
        for (auto& r : block) rows.push_back(std::move(r));
    }
    if (rows.empty()) return ncols;
    return ncols - rank(std::move(rows));
}

} // namespace arr

#endif
