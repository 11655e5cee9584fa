#ifndef ARR_RATIONAL_HPP
#define ARR_RATIONAL_HPP

#include <cstdint>
#include <string>
#include <iosfwd>
#include <gmpxx.h>

#include "errors.hpp"

namespace arr {

/// Exact rational scalar backed by GMP.  Always canonical: lowest terms,
/// positive denominator.
class QQ {
  public:
    QQ() : v_(0) {}
    QQ(long n) : v_(n) {}
    QQ(long n, long d) : v_(n, d) {
        if (d == 0) throw error("QQ: zero denominator");
        v_.canonicalize();
    }
    explicit QQ(const mpq_class& q) : v_(q) { v_.canonicalize(); }
    explicit QQ(const mpz_class& z) : v_(z) {}

    /// Parse "p/q" or "p".
    static QQ parse(const std::string& s) {
        mpq_class q;
        if (q.set_str(s, 10) != 0) throw parse_error("QQ: bad rational literal '" + s + "'");
        if (q.get_den() == 0) throw parse_error("QQ: zero denominator in '" + s + "'");
        q.canonicalize();
        return QQ(q);
    }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }

    QQ operator-() const { return QQ(mpq_class(-v_)); }
    QQ& operator+=(const QQ& o) { v_ += o.v_; return *this; }
    QQ& operator-=(const QQ& o) { v_ -= o.v_; return *this; }
    QQ& operator*=(const QQ& o) { v_ *= o.v_; return *this; }
    QQ& operator/=(const QQ& o) {
        if (o.is_zero()) throw error("QQ: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend QQ operator+(QQ a, const QQ& b) { return a += b; }
    friend QQ operator-(QQ a, const QQ& b) { return a -= b; }
    friend QQ operator*(QQ a, const QQ& b) { return a *= b; }
    friend QQ operator/(QQ a, const QQ& b) { return a /= b; }
    friend bool operator==(const QQ& a, const QQ& b) { return a.v_ == b.v_; }
    friend bool operator!=(const QQ& a, const QQ& b) { return a.v_ != b.v_; }
    friend bool operator<(const QQ& a, const QQ& b) { return a.v_ < b.v_; }
    friend bool operator<=(const QQ& a, const QQ& b) { return a.v_ <= b.v_; }
    friend bool operator>(const QQ& a, const QQ& b) { return a.v_ > b.v_; }
    friend bool operator>=(const QQ& a, const QQ& b) { return a.v_ >= b.v_; }

    QQ inv() const {
        if (is_zero()) throw error("QQ: inverse of zero");
        return QQ(mpq_class(1) / v_);
    }

    const mpq_class& raw() const { return v_; }
    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    bool is_integer() const { return v_.get_den() == 1; }
    long to_long() const {
        if (!is_integer() || !v_.get_num().fits_slong_p())
            throw error("QQ: not a small integer");
        return v_.get_num().get_si();
    }

    /// "p/q" with q > 1, else just "p".
    std::string str() const { return v_.get_str(); }

  private:
    mpq_class v_;
};

inline std::ostream& operator<<(std::ostream& os, const QQ& q) { return os << q.str(); }

/// Element of a prime field F_p, p < 2^31.  A value built from a plain
/// integer carries no modulus yet and adopts one on first contact, so the
/// field-generic templates can say K(1), K(-3) and so on.
class Zp {
  public:
    static constexpr uint64_t kDefaultPrime = 2147483647ull; // 2^31 - 1

    Zp() : v_(0), p_(0) {}
    Zp(long n) : v_(n), p_(0) {}
    Zp(long n, uint64_t p) : v_(n), p_(p) { reduce(); }

    uint64_t modulus() const { return p_; }
    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    Zp operator-() const {
        Zp r = *this;
        r.v_ = -r.v_;
        r.reduce();
        return r;
    }
    Zp& operator+=(const Zp& o) {
        align(o);
        v_ += aligned_value(o);
        reduce();
        return *this;
    }
    Zp& operator-=(const Zp& o) {
        align(o);
        v_ -= aligned_value(o);
        reduce();
        return *this;
    }
    Zp& operator*=(const Zp& o) {
        align(o);
        v_ *= aligned_value(o);
        reduce();
        return *this;
    }
    Zp& operator/=(const Zp& o) { return *this *= o.inv(); }

    friend Zp operator+(Zp a, const Zp& b) { return a += b; }
    friend Zp operator-(Zp a, const Zp& b) { return a -= b; }
    friend Zp operator*(Zp a, const Zp& b) { return a *= b; }
    friend Zp operator/(Zp a, const Zp& b) { return a /= b; }
    friend bool operator==(const Zp& a, const Zp& b) {
        if (a.p_ == b.p_) return a.v_ == b.v_;
        Zp x = a, y = b;
        x.align(b);
        y.align(a);
        return x.v_ == y.v_;
    }
    friend bool operator!=(const Zp& a, const Zp& b) { return !(a == b); }

    Zp inv() const {
        if (v_ == 0) throw error("Zp: inverse of zero");
        if (p_ == 0) {
            if (v_ == 1 || v_ == -1) return *this;
            throw error("Zp: inverse of modulus-free value");
        }
        int64_t t = 0, newt = 1;
        int64_t r = (int64_t)p_, newr = v_;
        while (newr != 0) {
            int64_t q = r / newr;
            int64_t tmp = t - q * newt; t = newt; newt = tmp;
            tmp = r - q * newr; r = newr; newr = tmp;
        }
        if (r != 1) throw error("Zp: modulus not prime or zero divisor");
        if (t < 0) t += (int64_t)p_;
        return Zp(t, p_);
    }

    std::string str() const { return std::to_string(v_); }
    int64_t value() const { return v_; }

  private:
    void reduce() {
        if (p_ == 0) return;
        v_ %= (int64_t)p_;
        if (v_ < 0) v_ += (int64_t)p_;
    }
    void align(const Zp& o) {
        if (p_ == 0 && o.p_ != 0) {
            p_ = o.p_;
            reduce();
        } else if (p_ != 0 && o.p_ != 0 && o.p_ != p_) {
            throw error("Zp: mixed moduli");
        }
    }
    int64_t aligned_value(const Zp& o) const {
        if (o.p_ == p_ || o.p_ != 0) return o.v_;
        int64_t v = o.v_ % (int64_t)p_;
        if (v < 0) v += (int64_t)p_;
        return v;
    }

    int64_t v_;
    uint64_t p_;
};

inline bool qq_is_zero(const QQ& x) { return x.is_zero(); }

/// Map an exact rational into F_p.  Throws if the denominator vanishes mod p.
inline Zp to_zp(const QQ& q, uint64_t p) {
    mpz_class n = q.num() % (long)p;
    mpz_class d = q.den() % (long)p;
    long ni = n.get_si(), di = d.get_si();
    if (ni < 0) ni += (long)p;
    if (di == 0) throw error("Zp: denominator divisible by the prime");
    return Zp(ni, p) / Zp(di, p);
}

/// Field-generic conversion from exact rational input data.
template <class K> K scalar_from_qq(const QQ& q, uint64_t prime);
template <> inline QQ scalar_from_qq<QQ>(const QQ& q, uint64_t) { return q; }
template <> inline Zp scalar_from_qq<Zp>(const QQ& q, uint64_t prime) { return to_zp(q, prime); }

} // namespace arr

#endif
