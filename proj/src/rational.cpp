#include "orthops/rational.hpp"

namespace orthops {

namespace {

bool valid_integer_token(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

}  // namespace

Rational Rational::from_string(std::string_view s) {
    const auto slash = s.find('/');
    std::string_view num = s.substr(0, slash);
    if (!valid_integer_token(num))
        throw std::invalid_argument("Rational: cannot parse '" + std::string(s) + "'");
    if (num.front() == '+') num.remove_prefix(1);  // mpz_set_str rejects '+'
    if (slash == std::string_view::npos)
        return Rational(mpz_class(std::string(num)));
    std::string_view den = s.substr(slash + 1);
    if (!valid_integer_token(den) || den.front() == '-' || den.front() == '+')
        throw std::invalid_argument("Rational: cannot parse '" + std::string(s) + "'");
    return Rational(mpz_class(std::string(num)), mpz_class(std::string(den)));
}

GaussianRational GaussianRational::from_string(std::string_view s) {
    const auto star = s.rfind("*i");
    if (star == std::string_view::npos)
        return GaussianRational(Rational::from_string(s));
    if (star + 2 != s.size())
        throw std::invalid_argument("GaussianRational: cannot parse '" + std::string(s) + "'");
    // Split at the sign that separates the parts; position 0 is the sign of
    // the real part, and "p/q" tokens contain no interior signs.
    std::string_view body = s.substr(0, star);
    size_t split = std::string_view::npos;
    for (size_t i = 1; i < body.size(); ++i)
        if (body[i] == '+' || body[i] == '-') split = i;
    if (split == std::string_view::npos)
        throw std::invalid_argument("GaussianRational: cannot parse '" + std::string(s) + "'");
    Rational re = Rational::from_string(body.substr(0, split));
    Rational im = Rational::from_string(body.substr(split + 1));
    if (body[split] == '-') im = -im;
    return {std::move(re), std::move(im)};
}

std::string GaussianRational::str() const {
    if (im_.is_zero()) return re_.str();
    std::string out = re_.str();
    out += im_.sign() < 0 ? '-' : '+';
    out += im_.abs().str();
    out += "*i";
    return out;
}

Rational binom(unsigned long n, long k) {
    if (k < 0 || static_cast<unsigned long>(k) > n) return Rational(0);
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, static_cast<unsigned long>(k));
    return Rational(b);
}

Rational gen_binom(const Rational& top, unsigned long k) {
    Rational out(1);
    Rational factor = top;
    for (unsigned long j = 0; j < k; ++j) {
        out *= factor;
        factor -= Rational(1);
    }
    return out / factorial(k);
}

Rational factorial(unsigned long k) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), k);
    return Rational(f);
}

}  // namespace orthops
