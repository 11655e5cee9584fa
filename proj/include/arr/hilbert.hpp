#ifndef ARR_HILBERT_HPP
#define ARR_HILBERT_HPP

#include <cstring>
#include <unordered_map>
#include <vector>

#include "linalg.hpp"
#include "resolution.hpp"

namespace arr {

/// dim_K S_d for S a polynomial ring in n variables.
inline long dim_poly_ring(int nvars, int d) {
    if (d < 0) return 0;
    if (nvars == 0) return d == 0 ? 1 : 0;
    // C(d + n - 1, n - 1)
    long num = 1, den = 1;
    for (int i = 1; i <= nvars - 1; ++i) {
        num *= d + i;
        den *= i;
    }
    return num / den;
}

namespace detail {
inline uint64_t mono_key(const Mono& m) {
    uint64_t k = 0;
    std::memcpy(&k, m.e.data(), sizeof(k));
    return k;
}
} // namespace detail

/// Degreewise dimensions of the submodule generated by gens inside the
/// ambient free module, by pure linear algebra on coefficient vectors.  This
/// path never touches the Groebner machinery, which is the point: it
/// cross-checks resolutions.
template <class K>
std::vector<long> hilbert_dims(const ModuleCtx& ctx, const std::vector<MVec<K>>& gens, int dmin,
                               int dmax) {
    std::vector<long> out;
    for (int d = dmin; d <= dmax; ++d) {
        // column basis: (comp, monomial of degree d - shift[comp])
        std::vector<std::unordered_map<uint64_t, int>> col_of(ctx.rank());
        int ncols = 0;
        for (int c = 0; c < ctx.rank(); ++c) {
            int md = d - ctx.shifts[c];
            if (md < 0) continue;
            for (const Mono& m : monomials_of_degree(ctx.nvars, md))
                col_of[c][detail::mono_key(m)] = ncols++;
        }
        Mat<K> rows;
        for (const auto& g : gens) {
            if (g.is_zero()) continue;
            int dg = modops::degree(ctx, g);
            int md = d - dg;
            if (md < 0) continue;
            for (const Mono& m : monomials_of_degree(ctx.nvars, md)) {
                std::vector<K> row(ncols, K());
                for (const auto& tm : g.t) {
                    Mono mm = tm.m.mul(m);
                    auto it = col_of[tm.comp].find(detail::mono_key(mm));
                    if (it == col_of[tm.comp].end()) throw error("hilbert_dims: internal indexing");
                    row[it->second] += tm.c;
                }
                rows.push_back(std::move(row));
            }
        }
        out.push_back(rows.empty() ? 0 : (long)rank(std::move(rows)));
    }
    return out;
}

/// dim M_d predicted by a Betti table through the alternating sum over the
/// resolution.
inline long hilbert_from_betti(const BettiTable& t, int nvars, int d) {
    long s = 0;
    for (const auto& [k, v] : t.b) {
        long sign = (k.first % 2 == 0) ? 1 : -1;
        s += sign * v * dim_poly_ring(nvars, d - k.second);
    }
    return s;
}

/// Exactness cross-check: generator-span dimensions equal the alternating
/// sum of the minimal resolution, over [dmin, dmax].
template <class K>
bool hilbert_oracle_agrees(const ModuleCtx& ctx, const std::vector<MVec<K>>& gens,
                           const BettiTable& t, int dmin, int dmax) {
    std::vector<long> dims = hilbert_dims(ctx, gens, dmin, dmax);
    for (int d = dmin; d <= dmax; ++d)
        if (dims[d - dmin] != hilbert_from_betti(t, ctx.nvars, d)) return false;
    return true;
}

} // namespace arr

#endif
