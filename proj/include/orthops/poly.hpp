#pragma once

#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "orthops/rational.hpp"

namespace orthops {

/// Dense univariate polynomial over an exact scalar field K. coeffs()[i] is
/// the coefficient of x^i; the highest stored coefficient is nonzero, the
/// zero polynomial stores nothing and has degree -1.
template <typename K>
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<K> cs) : c_(std::move(cs)) { trim(); }

    static Polynomial constant(K v) {
        Polynomial p;
        if (!v.is_zero()) p.c_.push_back(std::move(v));
        return p;
    }

    static Polynomial monomial(int n, K lead = K(1)) {
        if (n < 0) throw std::invalid_argument("Polynomial: negative exponent");
        Polynomial p;
        if (lead.is_zero()) return p;
        p.c_.resize(static_cast<size_t>(n) + 1, K(0));
        p.c_.back() = std::move(lead);
        return p;
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }

    /// Coefficient of x^i, zero beyond the degree.
    K coeff(int i) const {
        if (i < 0 || i > degree()) return K(0);
        return c_[static_cast<size_t>(i)];
    }

    const std::vector<K>& coeffs() const { return c_; }

    const K& leading() const {
        if (is_zero()) throw std::invalid_argument("Polynomial: zero polynomial has no leading coefficient");
        return c_.back();
    }

    Polynomial operator-() const {
        Polynomial out = *this;
        for (K& v : out.c_) v = -v;
        return out;
    }

    Polynomial operator+(const Polynomial& o) const {
        std::vector<K> out(std::max(c_.size(), o.c_.size()), K(0));
        for (size_t i = 0; i < c_.size(); ++i) out[i] = c_[i];
        for (size_t i = 0; i < o.c_.size(); ++i) out[i] += o.c_[i];
        return Polynomial(std::move(out));
    }

    Polynomial operator-(const Polynomial& o) const { return *this + (-o); }

    Polynomial operator*(const Polynomial& o) const {
        if (is_zero() || o.is_zero()) return {};
        std::vector<K> out(c_.size() + o.c_.size() - 1, K(0));
        for (size_t i = 0; i < c_.size(); ++i)
            for (size_t j = 0; j < o.c_.size(); ++j)
                out[i + j] += c_[i] * o.c_[j];
        return Polynomial(std::move(out));
    }

    Polynomial operator*(const K& s) const {
        if (s.is_zero()) return {};
        Polynomial out = *this;
        for (K& v : out.c_) v *= s;
        return out;
    }

    Polynomial operator/(const K& s) const { return *this * (K(1) / s); }

    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
    Polynomial& operator*=(const K& s) { return *this = *this * s; }

    bool operator==(const Polynomial& o) const = default;

    /// Exact Horner evaluation.
    K operator()(const K& x) const {
        K acc(0);
        for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<K> c_;
};

template <typename K>
Polynomial<K> operator*(const K& s, const Polynomial<K>& p) { return p * s; }

/// k-th formal derivative; the zero polynomial once k exceeds the degree.
template <typename K>
Polynomial<K> derivative(const Polynomial<K>& p, int k = 1) {
    if (k < 0) throw std::invalid_argument("derivative: negative order");
    std::vector<K> cur = p.coeffs();
    for (int round = 0; round < k; ++round) {
        if (cur.empty()) break;
        std::vector<K> next;
        next.reserve(cur.size() - 1);
        for (size_t i = 1; i < cur.size(); ++i)
            next.push_back(cur[i] * K(static_cast<long>(i)));
        cur = std::move(next);
    }
    return Polynomial<K>(std::move(cur));
}

/// q with q(x) = p(x + s), computed by repeated synthetic division by
/// (x - s): the remainders are exactly the Taylor coefficients of p at s.
template <typename K>
Polynomial<K> taylor_shift(const Polynomial<K>& p, const K& s) {
    if (p.is_zero()) return {};
    std::vector<K> work = p.coeffs();
    std::vector<K> out(work.size(), K(0));
    for (size_t round = 0; round < out.size(); ++round) {
        // One synthetic division of `work` by (x - s); remainder drops out.
        for (size_t i = work.size() - 1; i-- > 0;)
            work[i] += work[i + 1] * s;
        out[round] = work.front();
        work.erase(work.begin());
        if (work.empty()) break;
    }
    return Polynomial<K>(std::move(out));
}

/// p(s*x): coefficient i picks up a factor s^i.
template <typename K>
Polynomial<K> scale_argument(const Polynomial<K>& p, const K& s) {
    std::vector<K> out = p.coeffs();
    K power(1);
    for (size_t i = 0; i < out.size(); ++i) {
        out[i] *= power;
        power *= s;
    }
    return Polynomial<K>(std::move(out));
}

template <typename K>
struct DivMod {
    Polynomial<K> quotient;
    Polynomial<K> remainder;
};

/// Euclidean division over the field K: p = q*d + r with deg r < deg d.
template <typename K>
DivMod<K> divmod(const Polynomial<K>& p, const Polynomial<K>& d) {
    if (d.is_zero()) throw std::invalid_argument("divmod: division by zero polynomial");
    std::vector<K> rem = p.coeffs();
    const int dd = d.degree();
    if (p.degree() < dd) return {{}, p};
    std::vector<K> quo(static_cast<size_t>(p.degree() - dd) + 1, K(0));
    const K lead_inv = K(1) / d.leading();
    for (int i = p.degree(); i >= dd; --i) {
        K f = rem[static_cast<size_t>(i)] * lead_inv;
        if (f.is_zero()) continue;
        quo[static_cast<size_t>(i - dd)] = f;
        for (int j = 0; j <= dd; ++j)
            rem[static_cast<size_t>(i - dd + j)] -= f * d.coeff(j);
    }
    return {Polynomial<K>(std::move(quo)), Polynomial<K>(std::move(rem))};
}

template <typename K>
std::string to_string(const Polynomial<K>& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int i = p.degree(); i >= 0; --i) {
        const K c = p.coeff(i);
        if (c.is_zero()) continue;
        std::string cs = c.str();
        const bool composite = cs.find("*i") != std::string::npos;
        if (composite) cs = "(" + cs + ")";
        if (!out.empty()) {
            if (!composite && cs.front() == '-') {
                out += " - ";
                cs.erase(cs.begin());
            } else {
                out += " + ";
            }
        }
        if (i == 0) {
            out += cs;
        } else {
            if (cs != "1") out += cs + "*";
            out += i == 1 ? "x" : "x^" + std::to_string(i);
        }
    }
    return out;
}

template <typename K>
std::ostream& operator<<(std::ostream& os, const Polynomial<K>& p) {
    return os << to_string(p);
}

using PolyQ = Polynomial<Rational>;
using PolyGQ = Polynomial<GaussianRational>;

}  // namespace orthops
