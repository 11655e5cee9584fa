#ifndef ARR_POLYNOMIAL_HPP
#define ARR_POLYNOMIAL_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "monomial.hpp"
#include "rational.hpp"

namespace arr {

namespace detail {
/// Canonical term order used for the stored representation: grevlex with the
/// identity permutation.  Engines that run under a different order re-sort.
inline int canonical_cmp(const Mono& a, const Mono& b) {
    static const MonomialOrder ord{};
    return ord.cmp(a, b);
}
} // namespace detail

/// Sparse multivariate polynomial over K.  Terms are kept sorted in
/// decreasing canonical order with no zero coefficients.
template <class K>
class Poly {
  public:
    using Term = std::pair<Mono, K>;

    Poly() : n_(0) {}
    explicit Poly(int nvars) : n_(nvars) {
        if (nvars < 0 || nvars > kMaxVars) throw dimension_error("Poly: bad variable count");
    }

    static Poly zero(int nvars) { return Poly(nvars); }

    static Poly constant(int nvars, const K& c) {
        Poly p(nvars);
        if (!c.is_zero()) p.t_.emplace_back(Mono::one(nvars), c);
        return p;
    }

    static Poly variable(int nvars, int i) {
        Poly p(nvars);
        p.t_.emplace_back(Mono::var(nvars, i), K(1));
        return p;
    }

    static Poly monomial(int nvars, const Mono& m, const K& c) {
        Poly p(nvars);
        if (!c.is_zero()) p.t_.emplace_back(m, c);
        return p;
    }

    /// Build from unsorted terms (duplicates combined).
    static Poly from_terms(int nvars, std::vector<Term> ts) {
        Poly p(nvars);
        p.t_ = std::move(ts);
        p.normalize();
        return p;
    }

    int nvars() const { return n_; }
    bool is_zero() const { return t_.empty(); }
    const std::vector<Term>& terms() const { return t_; }
    size_t size() const { return t_.size(); }

    /// Total degree; -1 for the zero polynomial.
    int degree() const {
        int d = -1;
        for (const auto& [m, c] : t_) d = std::max(d, (int)m.deg);
        return d;
    }

    /// Common total degree of all terms, or nullopt if inhomogeneous.
    /// The zero polynomial is homogeneous of every degree; reports -1.
    std::optional<int> homogeneous_degree() const {
        if (t_.empty()) return -1;
        int d = t_.front().first.deg;
        for (const auto& [m, c] : t_)
            if ((int)m.deg != d) return std::nullopt;
        return d;
    }

    const Term& leading_term() const {
        if (t_.empty()) throw error("Poly: leading term of zero");
        return t_.front();
    }

    K coeff(const Mono& m) const {
        for (const auto& [mm, c] : t_)
            if (mm == m) return c;
        return K();
    }

    friend bool operator==(const Poly& a, const Poly& b) {
        if (a.n_ != b.n_) return false;
        if (a.t_.size() != b.t_.size()) return false;
        for (size_t i = 0; i < a.t_.size(); ++i)
            if (a.t_[i].first != b.t_[i].first || !(a.t_[i].second == b.t_[i].second))
                return false;
        return true;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly operator-() const {
        Poly r = *this;
        for (auto& [m, c] : r.t_) c = -c;
        return r;
    }

    friend Poly operator+(const Poly& a, const Poly& b) { return merge(a, b, false); }
    friend Poly operator-(const Poly& a, const Poly& b) { return merge(a, b, true); }

    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        a.check_same(b);
        Poly r(a.n_);
        if (a.is_zero() || b.is_zero()) return r;
        std::vector<Term> acc;
        acc.reserve(a.t_.size() * b.t_.size());
        for (const auto& [ma, ca] : a.t_)
            for (const auto& [mb, cb] : b.t_)
                acc.emplace_back(ma.mul(mb), ca * cb);
        r.t_ = std::move(acc);
        r.normalize();
        return r;
    }

    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly scaled(const K& c) const {
        Poly r(n_);
        if (c.is_zero()) return r;
        r.t_ = t_;
        for (auto& [m, cc] : r.t_) cc = cc * c;
        return r;
    }

    /// f * x^m
    Poly mono_mul(const Mono& m) const {
        Poly r(n_);
        r.t_ = t_;
        for (auto& [mm, c] : r.t_) mm = mm.mul(m);
        return r;
    }

    /// Exact quotient this / b, or nullopt when not exactly divisible.
    std::optional<Poly> exact_divide(const Poly& b) const {
        check_same(b);
        if (b.is_zero()) throw error("Poly: division by zero");
        Poly q(n_);
        Poly r = *this;
        const auto& [lm, lc] = b.leading_term();
        while (!r.is_zero()) {
            const auto& [rm, rc] = r.leading_term();
            if (!lm.divides(rm)) return std::nullopt;
            Mono dm = rm.div(lm);
            K dc = rc / lc;
            q.t_.emplace_back(dm, dc);
            r -= b.mono_mul(dm).scaled(dc);
        }
        q.normalize();
        return q;
    }

    /// d/dx_i
    Poly derivative(int i) const {
        if (i < 0 || i >= n_) throw dimension_error("Poly: derivative index");
        Poly r(n_);
        for (const auto& [m, c] : t_) {
            if (m.e[i] == 0) continue;
            Mono mm = m;
            K cc = c * K((long)m.e[i]);
            mm.e[i] -= 1;
            mm.deg -= 1;
            r.t_.emplace_back(mm, cc);
        }
        r.normalize();
        return r;
    }

    /// Substitute each variable by the given polynomial image (all images in
    /// a common ring).
    Poly substitute(const std::vector<Poly>& images) const {
        if ((int)images.size() != n_) throw dimension_error("Poly: substitute needs one image per variable");
        int m = images.empty() ? 0 : images[0].nvars();
        for (const auto& g : images)
            if (g.nvars() != m) throw dimension_error("Poly: images in different rings");
        Poly out(m);
        for (const auto& [mono, c] : t_) {
            Poly term = Poly::constant(m, c);
            for (int i = 0; i < n_; ++i)
                for (int k = 0; k < mono.e[i]; ++k) term *= images[i];
            out += term;
        }
        return out;
    }

    /// Evaluate at a scalar point.
    K evaluate(const std::vector<K>& pt) const {
        if ((int)pt.size() != n_) throw dimension_error("Poly: evaluate point size");
        K acc;
        for (const auto& [m, c] : t_) {
            K v = c;
            for (int i = 0; i < n_; ++i)
                for (int k = 0; k < m.e[i]; ++k) v = v * pt[i];
            acc += v;
        }
        return acc;
    }

    std::string str(const std::vector<std::string>& names = {}) const {
        if (t_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [m, c] : t_) {
            std::string cs = c.str();
            bool neg = !cs.empty() && cs[0] == '-';
            if (first) {
                s += neg ? "-" : "";
            } else {
                s += neg ? " - " : " + ";
            }
            if (neg) cs = cs.substr(1);
            if (m.is_one()) {
                s += cs;
            } else {
                if (cs != "1") s += cs + "*";
                s += m.str(names);
            }
            first = false;
        }
        return s;
    }

  private:
    void check_same(const Poly& o) const {
        if (n_ != o.n_) throw dimension_error("Poly: mixed variable counts");
    }

    void normalize() {
        std::sort(t_.begin(), t_.end(), [](const Term& a, const Term& b) {
            return detail::canonical_cmp(a.first, b.first) > 0;
        });
        std::vector<Term> out;
        out.reserve(t_.size());
        for (auto& tm : t_) {
            if (!out.empty() && out.back().first == tm.first)
                out.back().second += tm.second;
            else
                out.push_back(std::move(tm));
            if (!out.empty() && out.back().second.is_zero()) out.pop_back();
        }
        t_ = std::move(out);
    }

    static Poly merge(const Poly& a, const Poly& b, bool sub) {
        a.check_same(b);
        Poly r(a.n_);
        r.t_.reserve(a.t_.size() + b.t_.size());
        size_t i = 0, j = 0;
        while (i < a.t_.size() || j < b.t_.size()) {
            int c;
            if (i >= a.t_.size()) c = -1;
            else if (j >= b.t_.size()) c = 1;
            else c = detail::canonical_cmp(a.t_[i].first, b.t_[j].first);
            if (c > 0) {
                r.t_.push_back(a.t_[i++]);
            } else if (c < 0) {
                auto t = b.t_[j++];
                if (sub) t.second = -t.second;
                r.t_.push_back(std::move(t));
            } else {
                K v = sub ? a.t_[i].second - b.t_[j].second : a.t_[i].second + b.t_[j].second;
                if (!v.is_zero()) r.t_.emplace_back(a.t_[i].first, v);
                ++i;
                ++j;
            }
        }
        return r;
    }

    int n_;
    std::vector<Term> t_;
};

/// A polynomial vector field theta = sum_i theta_i d/dx_i.  For graded use
/// all nonzero coordinates must share one total degree.
template <class K>
struct Derivation {
    std::vector<Poly<K>> coords;

    int nvars() const { return coords.empty() ? 0 : coords[0].nvars(); }

    /// Common coordinate degree, or nullopt if coordinates mix degrees.
    std::optional<int> degree() const {
        int d = -1;
        for (const auto& p : coords) {
            auto h = p.homogeneous_degree();
            if (!h) return std::nullopt;
            if (*h >= 0) {
                if (d >= 0 && d != *h) return std::nullopt;
                d = *h;
            }
        }
        return d;
    }

    bool is_zero() const {
        for (const auto& p : coords)
            if (!p.is_zero()) return false;
        return true;
    }
};

/// theta(f) = sum_i theta_i * df/dx_i
template <class K>
Poly<K> apply_derivation(const Derivation<K>& theta, const Poly<K>& f) {
    if ((int)theta.coords.size() != f.nvars())
        throw dimension_error("apply_derivation: coordinate count mismatch");
    Poly<K> out(f.nvars());
    for (int i = 0; i < f.nvars(); ++i) {
        if (theta.coords[i].is_zero()) continue;
        out += theta.coords[i] * f.derivative(i);
    }
    return out;
}

/// Euler vector field sum_i x_i d/dx_i.
template <class K>
Derivation<K> euler_derivation(int nvars) {
    Derivation<K> th;
    th.coords.reserve(nvars);
    for (int i = 0; i < nvars; ++i) th.coords.push_back(Poly<K>::variable(nvars, i));
    return th;
}

/// Homogenize with one extra (last) variable: z^deg(f) * f(x/z).
template <class K>
Poly<K> homogenize(const Poly<K>& f) {
    int n = f.nvars();
    int d = f.degree();
    Poly<K> out(n + 1);
    if (f.is_zero()) return out;
    std::vector<typename Poly<K>::Term> ts;
    ts.reserve(f.size());
    for (const auto& [m, c] : f.terms()) {
        std::vector<int> e(n + 1, 0);
        for (int i = 0; i < n; ++i) e[i] = m.e[i];
        e[n] = d - m.deg;
        ts.emplace_back(Mono::from_exponents(e), c);
    }
    return Poly<K>::from_terms(n + 1, std::move(ts));
}

} // namespace arr

#endif
