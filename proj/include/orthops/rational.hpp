#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace orthops {

/// Arbitrary-precision rational, always canonical: gcd(|num|, den) = 1,
/// den > 0, zero stored as 0/1. Canonical form makes equality structural.
/// Values are immutable in practice (all operations return fresh values),
/// so they are safe to share across threads.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long num, long den) { init(mpz_class(num), mpz_class(den)); }
    explicit Rational(const mpz_class& n) : v_(n) {}
    Rational(const mpz_class& num, const mpz_class& den) { init(num, den); }

    /// Parses "p" or "p/q" with an optional leading sign on p and an
    /// unsigned q. Throws std::invalid_argument on anything else.
    static Rational from_string(std::string_view s);

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational abs() const { return Rational(raw{}, ::abs(v_)); }

    Rational inverse() const {
        if (is_zero()) throw std::invalid_argument("Rational: inverse of zero");
        return Rational(raw{}, 1 / v_);
    }

    Rational operator-() const { return Rational(raw{}, -v_); }

    Rational operator+(const Rational& o) const { return Rational(raw{}, v_ + o.v_); }
    Rational operator-(const Rational& o) const { return Rational(raw{}, v_ - o.v_); }
    Rational operator*(const Rational& o) const { return Rational(raw{}, v_ * o.v_); }
    Rational operator/(const Rational& o) const {
        if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
        return Rational(raw{}, v_ / o.v_);
    }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    std::strong_ordering operator<=>(const Rational& o) const {
        const int c = cmp(v_, o.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    /// "p/q", or "p" when the denominator is 1.
    std::string str() const { return v_.get_str(); }

private:
    struct raw {};  // result of a GMP mpq operation, already canonical
    Rational(raw, mpq_class v) : v_(std::move(v)) {}

    void init(const mpz_class& num, const mpz_class& den) {
        if (sgn(den) == 0) throw std::invalid_argument("Rational: zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }

    mpq_class v_;
};

inline Rational operator*(long s, const Rational& r) { return Rational(s) * r; }

/// Complex numbers with rational real and imaginary parts (the Gaussian
/// rationals). A field: division goes through the conjugate.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(long n) : re_(n) {}
    GaussianRational(Rational re) : re_(std::move(re)) {}
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    /// Parses the rational text form or "a+b*i" / "a-b*i".
    static GaussianRational from_string(std::string_view s);

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }

    GaussianRational conj() const { return {re_, -im_}; }
    Rational norm() const { return re_ * re_ + im_ * im_; }

    GaussianRational operator-() const { return {-re_, -im_}; }

    GaussianRational operator+(const GaussianRational& o) const {
        return {re_ + o.re_, im_ + o.im_};
    }
    GaussianRational operator-(const GaussianRational& o) const {
        return {re_ - o.re_, im_ - o.im_};
    }
    GaussianRational operator*(const GaussianRational& o) const {
        return {re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_};
    }
    GaussianRational operator/(const GaussianRational& o) const {
        if (o.is_zero()) throw std::invalid_argument("GaussianRational: division by zero");
        const Rational n = o.norm();
        const GaussianRational t = *this * o.conj();
        return {t.re_ / n, t.im_ / n};
    }

    GaussianRational& operator+=(const GaussianRational& o) { return *this = *this + o; }
    GaussianRational& operator-=(const GaussianRational& o) { return *this = *this - o; }
    GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }
    GaussianRational& operator/=(const GaussianRational& o) { return *this = *this / o; }

    bool operator==(const GaussianRational& o) const = default;

    /// "a" when the imaginary part is zero, otherwise "a+b*i" / "a-b*i".
    std::string str() const;

private:
    Rational re_, im_;
};

/// Exact binomial coefficient C(n, k); zero when k < 0 or k > n.
Rational binom(unsigned long n, long k);

/// Generalized binomial C(top, k) = top(top-1)...(top-k+1)/k! with rational
/// upper argument; 1 when k = 0.
Rational gen_binom(const Rational& top, unsigned long k);

/// k! as an exact scalar.
Rational factorial(unsigned long k);

// Realness helpers so code templated over the scalar field can state
// real-only conditions uniformly.
inline bool is_real_scalar(const Rational&) { return true; }
inline bool is_real_scalar(const GaussianRational& z) { return z.is_real(); }
inline const Rational& real_part(const Rational& r) { return r; }
inline const Rational& real_part(const GaussianRational& z) { return z.re(); }

}  // namespace orthops
