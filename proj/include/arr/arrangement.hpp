#ifndef ARR_ARRANGEMENT_HPP
#define ARR_ARRANGEMENT_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "linalg.hpp"
#include "polynomial.hpp"
#include "rootsys.hpp"

namespace arr {

/// A hyperplane {a.x + c = 0}, normalized so the first nonzero x-coefficient
/// is 1.  Central hyperplanes have c = 0.
struct Hyperplane {
    std::vector<QQ> a;
    QQ c;

    Hyperplane() = default;
    Hyperplane(std::vector<QQ> coeffs, QQ constant) : a(std::move(coeffs)), c(std::move(constant)) {
        normalize();
    }

    int dim() const { return (int)a.size(); }
    bool is_central() const { return c.is_zero(); }

    void normalize() {
        int p = pivot();
        const QQ& lead = a[p];
        if (lead.is_one()) return;
        QQ inv = lead.inv();
        for (auto& x : a) x *= inv;
        c *= inv;
    }

    int pivot() const {
        for (int i = 0; i < (int)a.size(); ++i)
            if (!a[i].is_zero()) return i;
        throw error("Hyperplane: zero linear part");
    }

    /// Defining linear polynomial a.x + c over a chosen field.
    template <class K>
    Poly<K> form(uint64_t prime = Zp::kDefaultPrime) const {
        Poly<K> f((int)a.size());
        for (int i = 0; i < (int)a.size(); ++i)
            if (!a[i].is_zero())
                f += Poly<K>::monomial((int)a.size(), Mono::var((int)a.size(), i),
                                       scalar_from_qq<K>(a[i], prime));
        if (!c.is_zero()) f += Poly<K>::constant((int)a.size(), scalar_from_qq<K>(c, prime));
        return f;
    }

    friend bool operator==(const Hyperplane& x, const Hyperplane& y) { return x.a == y.a && x.c == y.c; }
    friend bool operator!=(const Hyperplane& x, const Hyperplane& y) { return !(x == y); }
    friend bool operator<(const Hyperplane& x, const Hyperplane& y) {
        for (size_t i = 0; i < x.a.size() && i < y.a.size(); ++i) {
            if (x.a[i] != y.a[i]) return x.a[i] < y.a[i];
        }
        if (x.a.size() != y.a.size()) return x.a.size() < y.a.size();
        return x.c < y.c;
    }

    std::string str() const {
        std::string s;
        for (int i = 0; i < dim(); ++i) {
            if (a[i].is_zero()) continue;
            if (!s.empty()) s += "+";
            s += a[i].str() + "*x" + std::to_string(i + 1);
        }
        if (!c.is_zero()) s += "+" + c.str();
        return s + "=0";
    }
};

/// Duplicate-free list of hyperplanes in K^dim, kept in canonical sorted
/// order.  Central arrangements have every constant term zero.
class Arrangement {
  public:
    Arrangement() : dim_(0), central_(true) {}
    Arrangement(int dim, bool central, std::vector<Hyperplane> hs)
        : dim_(dim), central_(central), hs_(std::move(hs)) {
        for (const auto& h : hs_) {
            if (h.dim() != dim_) throw dimension_error("Arrangement: hyperplane dimension mismatch");
            if (central_ && !h.is_central())
                throw centrality_error("Arrangement: constant term in central arrangement");
        }
        std::sort(hs_.begin(), hs_.end());
        for (size_t i = 1; i < hs_.size(); ++i)
            if (hs_[i] == hs_[i - 1]) throw error("Arrangement: duplicate hyperplane " + hs_[i].str());
    }

    int dim() const { return dim_; }
    bool central() const { return central_; }
    int size() const { return (int)hs_.size(); }
    const std::vector<Hyperplane>& hyperplanes() const { return hs_; }
    const Hyperplane& operator[](int i) const { return hs_[i]; }

    int index_of(const Hyperplane& h) const {
        auto it = std::lower_bound(hs_.begin(), hs_.end(), h);
        if (it == hs_.end() || !(*it == h)) return -1;
        return (int)(it - hs_.begin());
    }
    bool contains(const Hyperplane& h) const { return index_of(h) >= 0; }

    /// Defining polynomial Q = prod of the normalized forms.
    template <class K>
    Poly<K> defining_polynomial(uint64_t prime = Zp::kDefaultPrime) const {
        Poly<K> q = Poly<K>::constant(dim_, K(1));
        for (const auto& h : hs_) q *= h.template form<K>(prime);
        return q;
    }

    std::string key() const {
        std::string s = std::to_string(dim_) + (central_ ? "c" : "a");
        for (const auto& h : hs_) {
            for (const auto& x : h.a) s += "," + x.str();
            s += ";" + h.c.str() + "|";
        }
        return s;
    }

    friend bool operator==(const Arrangement& x, const Arrangement& y) {
        return x.dim_ == y.dim_ && x.central_ == y.central_ && x.hs_ == y.hs_;
    }

  private:
    int dim_;
    bool central_;
    std::vector<Hyperplane> hs_;
};

/// An arrangement with a positive multiplicity per hyperplane.
struct Multiarrangement {
    Arrangement base;
    std::vector<int> mult; // aligned with base.hyperplanes()

    int total_multiplicity() const {
        int s = 0;
        for (int m : mult) s += m;
        return s;
    }
};

inline Hyperplane hyperplane_from_ints(const std::vector<int>& coeffs, long constant = 0) {
    std::vector<QQ> a;
    a.reserve(coeffs.size());
    for (int v : coeffs) a.emplace_back((long)v);
    return Hyperplane(std::move(a), QQ(constant));
}

/// Weyl arrangement of a root system: {alpha = 0}.
inline Arrangement weyl_arrangement(const RootSystem& rs) {
    std::vector<Hyperplane> hs;
    hs.reserve(rs.count());
    for (const auto& r : rs.roots) hs.push_back(hyperplane_from_ints(r));
    return Arrangement(rs.rank, true, std::move(hs));
}

/// Deformation {alpha = s | alpha positive, a <= s <= b}; stays affine even
/// when a = b = 0 (coning is always an explicit step).
inline Arrangement deformation(const RootSystem& rs, int a, int b) {
    if (a > b) throw error("deformation: empty interval (a > b)");
    std::vector<Hyperplane> hs;
    hs.reserve((size_t)rs.count() * (b - a + 1));
    for (const auto& r : rs.roots)
        for (int s = a; s <= b; ++s) hs.push_back(hyperplane_from_ints(r, -(long)s));
    return Arrangement(rs.rank, false, std::move(hs));
}

/// Coning: homogenize every form with a new last variable z and adjoin z = 0.
inline Arrangement cone(const Arrangement& aff) {
    if (aff.central()) throw centrality_error("cone: input is already central");
    std::vector<Hyperplane> hs;
    hs.reserve(aff.size() + 1);
    for (const auto& h : aff.hyperplanes()) {
        std::vector<QQ> a = h.a;
        a.push_back(h.c);
        hs.emplace_back(std::move(a), QQ(0));
    }
    std::vector<QQ> z(aff.dim() + 1, QQ(0));
    z.back() = QQ(1);
    hs.emplace_back(std::move(z), QQ(0));
    return Arrangement(aff.dim() + 1, true, std::move(hs));
}

inline Arrangement delete_hyperplane(const Arrangement& A, const Hyperplane& h) {
    int i = A.index_of(h);
    if (i < 0) throw membership_error("delete: hyperplane not in arrangement: " + h.str());
    std::vector<Hyperplane> hs = A.hyperplanes();
    hs.erase(hs.begin() + i);
    return Arrangement(A.dim(), A.central(), std::move(hs));
}

inline Arrangement add_hyperplane(const Arrangement& A, const Hyperplane& h) {
    if (A.contains(h)) throw membership_error("add: hyperplane already present: " + h.str());
    std::vector<Hyperplane> hs = A.hyperplanes();
    hs.push_back(h);
    return Arrangement(A.dim(), A.central() && h.is_central(), std::move(hs));
}

/// Restriction of a central arrangement to H, in explicit chart coordinates:
/// the pivot variable of H is solved for and dropped.
struct Restriction {
    Arrangement arr;                     // in dim-1 chart variables
    int pivot;                           // dropped variable index in V
    std::vector<std::vector<int>> preimages; // per trace: indices into A of planes with that trace
};

namespace detail {
/// Substitute the chart of h (solve for its pivot) into the form of g,
/// returning the dim-1 variable coefficient vector.  Central forms only.
inline std::vector<QQ> trace_coeffs(const Hyperplane& h, const Hyperplane& g) {
    int p = h.pivot();
    // x_p = -sum_{i != p} h.a[i] x_i   (h.a[p] = 1)
    std::vector<QQ> out;
    out.reserve(g.a.size() - 1);
    for (int i = 0; i < (int)g.a.size(); ++i) {
        if (i == p) continue;
        out.push_back(g.a[i] - g.a[p] * h.a[i]);
    }
    return out;
}
} // namespace detail

inline Restriction restrict_to(const Arrangement& A, const Hyperplane& h) {
    if (!A.central()) throw centrality_error("restrict: arrangement must be central");
    int hi = A.index_of(h);
    if (hi < 0) throw membership_error("restrict: hyperplane not in arrangement");
    std::vector<Hyperplane> traces;
    std::vector<std::vector<int>> pre;
    for (int i = 0; i < A.size(); ++i) {
        if (i == hi) continue;
        std::vector<QQ> tc = detail::trace_coeffs(h, A[i]);
        bool zero = true;
        for (const auto& x : tc)
            if (!x.is_zero()) { zero = false; break; }
        if (zero) throw error("restrict: coincident hyperplanes"); // cannot happen, duplicates rejected
        Hyperplane t(std::move(tc), QQ(0));
        bool found = false;
        for (size_t k = 0; k < traces.size(); ++k) {
            if (traces[k] == t) {
                pre[k].push_back(i);
                found = true;
                break;
            }
        }
        if (!found) {
            traces.push_back(std::move(t));
            pre.push_back({i});
        }
    }
    // canonical order, keeping preimages aligned
    std::vector<int> order(traces.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = (int)i;
    std::sort(order.begin(), order.end(), [&](int x, int y) { return traces[x] < traces[y]; });
    std::vector<Hyperplane> sorted;
    std::vector<std::vector<int>> spre;
    for (int i : order) {
        sorted.push_back(traces[i]);
        spre.push_back(pre[i]);
    }
    Restriction r{Arrangement(A.dim() - 1, true, sorted), h.pivot(), std::move(spre)};
    return r;
}

/// Ziegler restriction: traces with multiplicity = number of coincident
/// preimages; |m| = |A| - 1.
inline Multiarrangement ziegler_restriction(const Arrangement& A, const Hyperplane& h) {
    Restriction r = restrict_to(A, h);
    Multiarrangement m;
    m.base = r.arr;
    m.mult.reserve(r.preimages.size());
    for (const auto& p : r.preimages) m.mult.push_back((int)p.size());
    return m;
}

/// A flat of a central arrangement: canonical reduced equations plus the set
/// of hyperplanes containing it.
struct Flat {
    Mat<QQ> eqs;              // RREF rows (normals)
    std::vector<int> planes;  // indices into the owning arrangement

    int codim() const { return (int)eqs.size(); }

    std::string key() const {
        std::string s;
        for (const auto& row : eqs) {
            for (const auto& x : row) s += x.str() + ",";
            s += ";";
        }
        return s;
    }
    friend bool operator==(const Flat& a, const Flat& b) { return a.eqs == b.eqs; }
};

/// Build the flat spanned by the normals of the given hyperplanes and close
/// it under containment.
inline Flat make_flat(const Arrangement& A, const std::vector<int>& plane_idx) {
    if (!A.central()) throw centrality_error("make_flat: central arrangements only");
    Mat<QQ> rows;
    for (int i : plane_idx) rows.push_back(A[i].a);
    std::vector<int> pivots = rref(rows);
    Flat f;
    f.eqs = rows;
    for (int i = 0; i < A.size(); ++i)
        if (in_row_span_rref(rows, pivots, A[i].a)) f.planes.push_back(i);
    return f;
}

/// All hyperplanes containing X.  X must be an honest flat of A (the common
/// intersection of the planes through it).
inline Arrangement localize(const Arrangement& A, const Flat& X) {
    if (!A.central()) throw centrality_error("localize: central arrangements only");
    Flat check = make_flat(A, X.planes);
    if (!(check.eqs == X.eqs) || (int)check.eqs.size() != X.codim())
        throw membership_error("localize: X is not a flat of the arrangement");
    std::vector<Hyperplane> hs;
    for (int i : check.planes) hs.push_back(A[i]);
    return Arrangement(A.dim(), true, std::move(hs));
}

/// Terao polynomial B(A, H): the product of the non-selected forms, one
/// hyperplane per trace selected by the canonical section (lex-smallest
/// normalized coefficient vector), reduced modulo the form of H.  deg B =
/// |A| - 1 - |A^H|.
inline Poly<QQ> terao_b_polynomial(const Arrangement& A, const Hyperplane& h) {
    Restriction r = restrict_to(A, h);
    std::vector<bool> selected(A.size(), false);
    for (const auto& pre : r.preimages) {
        int best = pre[0]; // preimages are in canonical (sorted) order already
        selected[best] = true;
    }
    int hi = A.index_of(h);
    Poly<QQ> b = Poly<QQ>::constant(A.dim(), QQ(1));
    for (int i = 0; i < A.size(); ++i) {
        if (i == hi || selected[i]) continue;
        b *= A[i].form<QQ>();
    }
    // reduce modulo the form of h: substitute the chart of h
    int p = h.pivot();
    std::vector<Poly<QQ>> images;
    for (int i = 0; i < A.dim(); ++i) {
        if (i != p) {
            images.push_back(Poly<QQ>::variable(A.dim(), i));
        } else {
            Poly<QQ> sub(A.dim());
            for (int j = 0; j < A.dim(); ++j)
                if (j != p && !h.a[j].is_zero())
                    sub -= Poly<QQ>::monomial(A.dim(), Mono::var(A.dim(), j), h.a[j]);
            images.push_back(sub);
        }
    }
    return b.substitute(images);
}

/// Essentialization: coordinates in which the forms use only the first r
/// variables, r = rank of the normals.  subst maps new coordinates to old
/// (x = subst * y), inv the other way.
struct Essentialization {
    Arrangement ess;   // in r variables
    int old_dim;
    Mat<QQ> subst;     // old_dim x old_dim, invertible
    Mat<QQ> inv;       // subst^{-1}
};

inline Essentialization essentialize(const Arrangement& A) {
    if (!A.central()) throw centrality_error("essentialize: central arrangements only");
    const int n = A.dim();
    Mat<QQ> normals;
    for (const auto& h : A.hyperplanes()) normals.push_back(h.a);
    Mat<QQ> rr = normals;
    std::vector<int> pivots = rref(rr);
    const int r = (int)pivots.size();
    std::vector<std::vector<QQ>> null_basis = nullspace(std::move(normals));
    // columns of subst: e_{pivot_k} for k < r, then the null space basis
    Mat<QQ> subst(n, std::vector<QQ>(n, QQ(0)));
    for (int k = 0; k < r; ++k) subst[pivots[k]][k] = QQ(1);
    for (int k = 0; k < n - r; ++k)
        for (int i = 0; i < n; ++i) subst[i][r + k] = null_basis[k][i];
    // invert
    Mat<QQ> aug(n, std::vector<QQ>(2 * n, QQ(0)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug[i][j] = subst[i][j];
        aug[i][n + i] = QQ(1);
    }
    if ((int)rref(aug).size() != n) throw error("essentialize: substitution not invertible");
    Mat<QQ> inv(n, std::vector<QQ>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
    std::vector<Hyperplane> hs;
    for (const auto& h : A.hyperplanes()) {
        std::vector<QQ> coeffs(r, QQ(0));
        for (int k = 0; k < r; ++k) coeffs[k] = h.a[pivots[k]];
        hs.emplace_back(std::move(coeffs), QQ(0));
    }
    return Essentialization{Arrangement(r, true, std::move(hs)), n, std::move(subst), std::move(inv)};
}

} // namespace arr

#endif
