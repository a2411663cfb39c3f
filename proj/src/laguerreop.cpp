#include "orthops/laguerreop.hpp"

#include <stdexcept>

#include "orthops/opsfam.hpp"

namespace orthops {

Rational a_closed(int r) {
    if (r < 0) throw std::invalid_argument("a_closed: negative index");
    Rational sum(0);
    for (int l = 0; l <= r; ++l)
        sum += binom(static_cast<unsigned long>(r), l) /
               factorial(static_cast<unsigned long>(l));
    return r % 2 == 0 ? sum : -sum;
}

Rational a_recursive(int r) {
    if (r < 0) throw std::invalid_argument("a_recursive: negative index");
    std::vector<Rational> a;
    a.reserve(static_cast<size_t>(r) + 1);
    a.push_back(Rational(1));
    for (int m = 1; m <= r; ++m) {
        Rational v = (m % 2 == 0 ? Rational(1) : Rational(-1)) /
                     factorial(static_cast<unsigned long>(m));
        for (int k = 0; k < m; ++k)
            v -= binom(static_cast<unsigned long>(m), k) * a[static_cast<size_t>(k)];
        a.push_back(std::move(v));
    }
    return a.back();
}

PolyQ build_p(int n) {
    if (n < 0) throw std::invalid_argument("build_p: negative index");
    std::vector<Rational> coeffs(static_cast<size_t>(n) + 1);
    for (int r = 0; r <= n; ++r)
        coeffs[static_cast<size_t>(r)] =
            binom(static_cast<unsigned long>(n), r) * a_closed(r);
    return PolyQ(std::move(coeffs));
}

DiffOp<Rational> laguerre_op(int N) {
    if (N < 0) throw std::invalid_argument("laguerre_op: negative bound");
    DiffOp<Rational> op;
    op.pk.reserve(static_cast<size_t>(N) + 1);
    for (int n = 0; n <= N; ++n) op.pk.push_back(build_p(n));
    return op;
}

bool identity_check(int r) {
    if (r < 0) throw std::invalid_argument("identity_check: negative index");
    Rational sum(0);
    for (int k = 0; k <= r; ++k) {
        Rational inner(0);
        for (int l = 0; l <= k; ++l)
            inner += binom(static_cast<unsigned long>(k), l) /
                     factorial(static_cast<unsigned long>(l));
        const Rational term = binom(static_cast<unsigned long>(r), k) * inner;
        sum += k % 2 == 0 ? term : -term;
    }
    const Rational rhs = (r % 2 == 0 ? Rational(1) : Rational(-1)) /
                         factorial(static_cast<unsigned long>(r));
    return sum == rhs;
}

namespace {

TheoremCheck scan_results(const std::vector<unsigned char>& ok) {
    for (size_t n = 0; n < ok.size(); ++n)
        if (!ok[n]) return {false, static_cast<int>(n)};
    return {};
}

bool image_matches(const DiffOp<Rational>& op, int n) {
    return apply(op, PolyQ::monomial(n)) == laguerre(Rational(0), n);
}

}  // namespace

TheoremCheck verify_theorem(int N) {
    const DiffOp<Rational> op = laguerre_op(N);
    std::vector<unsigned char> ok(static_cast<size_t>(N) + 1, 0);
#pragma omp parallel for schedule(dynamic)
    for (int n = 0; n <= N; ++n)
        ok[static_cast<size_t>(n)] = image_matches(op, n) ? 1 : 0;
    return scan_results(ok);
}

TheoremCheck verify_theorem_serial(int N) {
    const DiffOp<Rational> op = laguerre_op(N);
    std::vector<unsigned char> ok(static_cast<size_t>(N) + 1, 0);
    for (int n = 0; n <= N; ++n)
        ok[static_cast<size_t>(n)] = image_matches(op, n) ? 1 : 0;
    return scan_results(ok);
}

}  // namespace orthops
