#include "orthops/opsfam.hpp"

namespace orthops {

PolyQ hermite_std(int n) {
    if (n < 0) throw std::invalid_argument("hermite_std: negative degree");
    PolyQ prev;                              // H_{-1} = 0
    PolyQ cur = PolyQ::constant(Rational(1));  // H_0
    const PolyQ two_x = PolyQ::monomial(1, Rational(2));
    for (int m = 0; m < n; ++m) {
        PolyQ next = two_x * cur - prev * Rational(2L * m);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

PolyQ laguerre(const Rational& alpha, int n) {
    if (n < 0) throw std::invalid_argument("laguerre: negative degree");
    const Rational top = Rational(static_cast<long>(n)) + alpha;
    std::vector<Rational> coeffs(static_cast<size_t>(n) + 1);
    Rational sign(1);
    for (int r = 0; r <= n; ++r) {
        coeffs[static_cast<size_t>(r)] =
            sign / factorial(static_cast<unsigned long>(r)) *
            gen_binom(top, static_cast<unsigned long>(n - r));
        sign = -sign;
    }
    return PolyQ(std::move(coeffs));
}

}  // namespace orthops
