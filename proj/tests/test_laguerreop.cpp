#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "orthops/diffop.hpp"
#include "orthops/laguerreop.hpp"
#include "orthops/opsfam.hpp"
#include "orthops/poly.hpp"

using orthops::PolyQ;
using orthops::Rational;

TEST_CASE("coefficient spot values") {
    CHECK(orthops::a_closed(0) == Rational(1));
    CHECK(orthops::a_closed(1) == Rational(-2));
    CHECK(orthops::a_closed(2) == Rational(7, 2));
    CHECK(orthops::a_closed(3) == Rational(-17, 3));
    CHECK(orthops::a_closed(4) == Rational(209, 24));
    CHECK_THROWS_AS(orthops::a_closed(-1), std::invalid_argument);
    CHECK_THROWS_AS(orthops::a_recursive(-1), std::invalid_argument);
}

TEST_CASE("closed form equals the recursion for r <= 40") {
    for (int r = 0; r <= 40; ++r) CHECK(orthops::a_closed(r) == orthops::a_recursive(r));
}

TEST_CASE("alternating double sum collapses to (-1)^r/r! for r <= 40") {
    for (int r = 0; r <= 40; ++r) CHECK(orthops::identity_check(r));
}

TEST_CASE("the collapse rests on the standard binomial product identity") {
    // C(r,k) C(k,l) = C(r,l) C(r-l, k-l) for 0 <= l <= k <= r — the exchange
    // that turns the double sum into a single alternating inner sum.
    for (int r = 0; r <= 12; ++r)
        for (int k = 0; k <= r; ++k)
            for (int l = 0; l <= k; ++l) {
                const auto R = static_cast<unsigned long>(r);
                const auto K = static_cast<unsigned long>(k);
                const auto RL = static_cast<unsigned long>(r - l);
                CHECK(orthops::binom(R, k) * orthops::binom(K, l) ==
                      orthops::binom(R, l) * orthops::binom(RL, k - l));
            }
}

TEST_CASE("operator polynomials combine binomials with the a-coefficients") {
    CHECK(orthops::build_p(0) == PolyQ::constant(Rational(1)));
    CHECK(orthops::build_p(1) == PolyQ({Rational(1), Rational(-2)}));
    CHECK(orthops::build_p(2) == PolyQ({Rational(1), Rational(-4), Rational(7, 2)}));
    for (int n = 0; n <= 12; ++n) {
        const PolyQ pn = orthops::build_p(n);
        CHECK(pn.degree() == n);
        for (int r = 0; r <= n; ++r)
            CHECK(pn.coeff(r) ==
                  orthops::binom(static_cast<unsigned long>(n), r) * orthops::a_closed(r));
    }
}

TEST_CASE("independent extraction from Laguerre images gives the same operator") {
    const int N = 25;
    std::vector<PolyQ> images;
    for (int n = 0; n <= N; ++n) images.push_back(orthops::laguerre(Rational(0), n));
    const auto op = orthops::extract(images, N);
    for (int n = 0; n <= N; ++n)
        CHECK(op.pk[static_cast<std::size_t>(n)] == orthops::build_p(n));
}

TEST_CASE("operator images reproduce the Laguerre polynomials") {
    const auto res = orthops::verify_theorem(25);
    CHECK(res.ok);
    CHECK(res.first_violation == -1);
    const auto serial = orthops::verify_theorem_serial(25);
    CHECK(serial.ok == res.ok);
    CHECK(serial.first_violation == res.first_violation);
    // direct spot check at n = 2: p-images built by hand
    const auto op = orthops::laguerre_op(2);
    CHECK(orthops::apply(op, PolyQ::monomial(2)) ==
          PolyQ({Rational(1), Rational(-2), Rational(1, 2)}));
}

TEST_CASE("a deliberately broken operator is caught with its witness") {
    auto op = orthops::laguerre_op(6);
    op.pk[4] += PolyQ::constant(Rational(1, 3));
    for (int n = 0; n <= 6; ++n) {
        const bool match =
            orthops::apply(op, PolyQ::monomial(n)) == orthops::laguerre(Rational(0), n);
        CHECK(match == (n < 4));
    }
}
