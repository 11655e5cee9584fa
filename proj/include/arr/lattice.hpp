#ifndef ARR_LATTICE_HPP
#define ARR_LATTICE_HPP

#include <map>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "arrangement.hpp"

namespace arr {

/// Intersection lattice of a central arrangement: flats grouped by
/// codimension, with Moebius values.  Level 0 is the whole space.
struct IntersectionLattice {
    std::vector<std::vector<Flat>> levels; // levels[c] = flats of codim c
    std::vector<std::vector<long long>> mobius;

    int rank() const { return (int)levels.size() - 1; }
};

inline IntersectionLattice intersection_lattice(const Arrangement& A) {
    if (!A.central()) throw centrality_error("intersection_lattice: affine input; cone it first");
    IntersectionLattice L;
    // level 0: ambient space
    L.levels.push_back({Flat{{}, {}}});
    if (A.size() == 0) {
        L.mobius.push_back({1});
        return L;
    }
    // level 1: the hyperplanes
    std::vector<Flat> cur;
    for (int i = 0; i < A.size(); ++i) cur.push_back(make_flat(A, {i}));
    L.levels.push_back(cur);
    // higher levels by intersecting with hyperplanes
    while (true) {
        std::unordered_map<std::string, Flat> next;
        for (const Flat& X : L.levels.back()) {
            std::unordered_set<int> inX(X.planes.begin(), X.planes.end());
            for (int i = 0; i < A.size(); ++i) {
                if (inX.count(i)) continue;
                std::vector<int> idx = X.planes;
                idx.push_back(i);
                Flat Y = make_flat(A, idx);
                if (Y.codim() != X.codim() + 1) continue; // parallel inside X: impossible centrally
                next.emplace(Y.key(), std::move(Y));
            }
        }
        if (next.empty()) break;
        std::vector<Flat> lvl;
        lvl.reserve(next.size());
        for (auto& [k, f] : next) lvl.push_back(std::move(f));
        std::sort(lvl.begin(), lvl.end(), [](const Flat& a, const Flat& b) { return a.planes < b.planes; });
        L.levels.push_back(std::move(lvl));
    }
    // Moebius: mu(V) = 1; mu(X) = -sum over flats Y strictly containing X.
    // Containment: X <= Y (X contained in Y) iff planes(Y) subset planes(X).
    L.mobius.resize(L.levels.size());
    L.mobius[0] = {1};
    for (int c = 1; c < (int)L.levels.size(); ++c) {
        L.mobius[c].resize(L.levels[c].size());
        for (size_t x = 0; x < L.levels[c].size(); ++x) {
            const Flat& X = L.levels[c][x];
            std::unordered_set<int> planesX(X.planes.begin(), X.planes.end());
            long long s = 1; // mu(V)
            for (int cc = 1; cc < c; ++cc) {
                for (size_t y = 0; y < L.levels[cc].size(); ++y) {
                    const Flat& Y = L.levels[cc][y];
                    bool contains = true;
                    for (int p : Y.planes)
                        if (!planesX.count(p)) { contains = false; break; }
                    if (contains) s += L.mobius[cc][y];
                }
            }
            L.mobius[c][x] = -s;
        }
    }
    return L;
}

/// Characteristic polynomial coefficients, highest degree first (monic of
/// degree dim for central input).  For affine input this computes the cone
/// and divides by (t - 1).
struct CharPoly {
    std::vector<long long> coeffs; // c[0] t^deg + ... + c[deg]

    int degree() const { return (int)coeffs.size() - 1; }

    long long eval(long long t) const {
        long long v = 0;
        for (long long c : coeffs) v = v * t + c;
        return v;
    }

    /// Quotient by (t - 1); requires exact division.
    CharPoly divide_by_t_minus_1() const {
        CharPoly q;
        q.coeffs.resize(coeffs.size() - 1);
        long long carry = 0;
        for (size_t i = 0; i + 1 < coeffs.size(); ++i) {
            carry += coeffs[i];
            q.coeffs[i] = carry;
        }
        if (carry + coeffs.back() != 0) throw error("CharPoly: not divisible by (t-1)");
        return q;
    }
};

inline CharPoly characteristic_polynomial_central(const Arrangement& A) {
    IntersectionLattice L = intersection_lattice(A);
    CharPoly chi;
    chi.coeffs.assign(A.dim() + 1, 0);
    for (int c = 0; c < (int)L.levels.size(); ++c)
        for (size_t x = 0; x < L.levels[c].size(); ++x)
            chi.coeffs[c] += L.mobius[c][x]; // dim X = dim - c, so t^{dim-c}
    return chi;
}

/// chi for central input; chi_0 of the cone for affine input (the standard
/// deconing identity chi(cA;t) = (t-1) chi(A;t)).
inline CharPoly characteristic_polynomial(const Arrangement& A) {
    if (A.central()) return characteristic_polynomial_central(A);
    return characteristic_polynomial_central(cone(A)).divide_by_t_minus_1();
}

/// chi_0 = chi / (t-1) for a nonempty central arrangement.
inline CharPoly chi0(const Arrangement& A) {
    if (!A.central()) throw centrality_error("chi0: central arrangements only");
    if (A.size() == 0) throw error("chi0: empty arrangement");
    return characteristic_polynomial_central(A).divide_by_t_minus_1();
}

/// Number of points of the projectivized rank-3 arrangement, weighted:
/// b2 = sum over codim-2 flats of mu(X); used via b2_0 = chi_0(0).
inline long long chi0_at_zero(const Arrangement& A) { return chi0(A).eval(0); }

/// Flats of A^H of the given codimension in V, pulled back from the
/// restriction chart (excluding the center).
inline std::vector<Flat> restriction_flats(const Arrangement& A, const Hyperplane& h, int codim) {
    Restriction r = restrict_to(A, h);
    if (codim < 1) throw error("restriction_flats: codim must be >= 1");
    if (codim == 1) return {make_flat(A, {A.index_of(h)})};
    IntersectionLattice L = intersection_lattice(r.arr);
    std::vector<Flat> out;
    int hi = A.index_of(h);
    if (codim - 1 >= (int)L.levels.size()) return out;
    for (const Flat& Xc : L.levels[codim - 1]) {
        // pull back: planes of A through the chart flat
        std::vector<int> idx = {hi};
        for (int t : Xc.planes)
            for (int p : r.preimages[t]) idx.push_back(p);
        Flat X = make_flat(A, idx);
        if (X.codim() == codim && (int)X.planes.size() < A.size()) out.push_back(std::move(X));
    }
    return out;
}

} // namespace arr

#endif
