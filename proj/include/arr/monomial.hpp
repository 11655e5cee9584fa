#ifndef ARR_MONOMIAL_HPP
#define ARR_MONOMIAL_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"

namespace arr {

/// Hard cap on ambient variables; exponents are stored packed.  Rank <= 7
/// root systems after coning fit comfortably.
constexpr int kMaxVars = 8;

/// Monomial in a fixed number of variables: packed exponent vector plus a
/// cached total degree.
struct Mono {
    uint16_t deg = 0;
    uint8_t n = 0;
    std::array<uint8_t, kMaxVars> e{};

    static Mono one(int nvars) {
        check_nvars(nvars);
        Mono m;
        m.n = (uint8_t)nvars;
        return m;
    }

    static Mono var(int nvars, int i, int power = 1) {
        check_nvars(nvars);
        if (i < 0 || i >= nvars) throw dimension_error("Mono: variable index out of range");
        Mono m;
        m.n = (uint8_t)nvars;
        m.e[i] = (uint8_t)power;
        m.deg = (uint16_t)power;
        return m;
    }

    static Mono from_exponents(const std::vector<int>& exps) {
        check_nvars((int)exps.size());
        Mono m;
        m.n = (uint8_t)exps.size();
        int d = 0;
        for (size_t i = 0; i < exps.size(); ++i) {
            if (exps[i] < 0 || exps[i] > 255) throw error("Mono: exponent out of range");
            m.e[i] = (uint8_t)exps[i];
            d += exps[i];
        }
        m.deg = (uint16_t)d;
        return m;
    }

    int exp(int i) const { return e[i]; }
    int degree() const { return deg; }
    bool is_one() const { return deg == 0; }

    Mono mul(const Mono& o) const {
        Mono r = *this;
        r.deg = (uint16_t)(deg + o.deg);
        for (int i = 0; i < n; ++i) r.e[i] = (uint8_t)(e[i] + o.e[i]);
        return r;
    }

    bool divides(const Mono& o) const {
        if (deg > o.deg) return false;
        for (int i = 0; i < n; ++i)
            if (e[i] > o.e[i]) return false;
        return true;
    }

    /// this / o, assuming o.divides(*this).
    Mono div(const Mono& o) const {
        Mono r = *this;
        r.deg = (uint16_t)(deg - o.deg);
        for (int i = 0; i < n; ++i) r.e[i] = (uint8_t)(e[i] - o.e[i]);
        return r;
    }

    Mono lcm(const Mono& o) const {
        Mono r = *this;
        int d = 0;
        for (int i = 0; i < n; ++i) {
            r.e[i] = e[i] > o.e[i] ? e[i] : o.e[i];
            d += r.e[i];
        }
        r.deg = (uint16_t)d;
        return r;
    }

    friend bool operator==(const Mono& a, const Mono& b) {
        return a.n == b.n && a.deg == b.deg && a.e == b.e;
    }
    friend bool operator!=(const Mono& a, const Mono& b) { return !(a == b); }

    std::string str(const std::vector<std::string>& names = {}) const {
        std::string s;
        for (int i = 0; i < n; ++i) {
            if (!e[i]) continue;
            if (!s.empty()) s += "*";
            s += (i < (int)names.size()) ? names[i] : ("x" + std::to_string(i + 1));
            if (e[i] > 1) s += "^" + std::to_string((int)e[i]);
        }
        return s.empty() ? "1" : s;
    }

  private:
    static void check_nvars(int nvars) {
        if (nvars < 0 || nvars > kMaxVars)
            throw dimension_error("Mono: variable count must be in [0," + std::to_string(kMaxVars) + "]");
    }
};

/// Degree-refining monomial order: graded (reverse) lexicographic with an
/// optional variable priority permutation.  perm[k] is the variable compared
/// at position k; empty means identity.
struct MonomialOrder {
    enum class Kind { GrevLex, GrLex };

    Kind kind = Kind::GrevLex;
    std::vector<int> perm;

    static MonomialOrder grevlex() { return MonomialOrder{}; }
    static MonomialOrder grlex() { return MonomialOrder{Kind::GrLex, {}}; }

    int at(int k, int n) const { return perm.empty() ? k : perm[k]; }

    /// -1 if a < b, 0 if equal, +1 if a > b.
    int cmp(const Mono& a, const Mono& b) const {
        if (a.deg != b.deg) return a.deg < b.deg ? -1 : 1;
        const int n = a.n;
        if (kind == Kind::GrLex) {
            for (int k = 0; k < n; ++k) {
                int i = at(k, n);
                if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
            }
        } else {
            for (int k = n - 1; k >= 0; --k) {
                int i = at(k, n);
                if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
            }
        }
        return 0;
    }

    bool less(const Mono& a, const Mono& b) const { return cmp(a, b) < 0; }
};

/// Enumerate all monomials of the given total degree, in decreasing grevlex
/// order.  Used by the degreewise linear-algebra oracles.
inline std::vector<Mono> monomials_of_degree(int nvars, int d) {
    std::vector<Mono> out;
    if (d < 0) return out;
    std::vector<int> exps(nvars, 0);
    // lexicographic run over compositions of d into nvars parts
    if (nvars == 0) {
        if (d == 0) out.push_back(Mono::one(0));
        return out;
    }
    std::vector<int> cur(nvars, 0);
    // iterative composition enumeration
    auto emit = [&]() { out.push_back(Mono::from_exponents(cur)); };
    // recursive lambda
    auto rec = [&](auto&& self, int pos, int rem) -> void {
        if (pos == nvars - 1) {
            cur[pos] = rem;
            emit();
            cur[pos] = 0;
            return;
        }
        for (int v = rem; v >= 0; --v) {
            cur[pos] = v;
            self(self, pos + 1, rem - v);
        }
        cur[pos] = 0;
    };
    rec(rec, 0, d);
    return out;
}

} // namespace arr

#endif
