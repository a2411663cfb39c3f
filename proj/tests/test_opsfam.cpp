#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "orthops/opsfam.hpp"
#include "orthops/poly.hpp"

using orthops::GaussianRational;
using orthops::PolyQ;
using orthops::Rational;
using orthops::TTRSpec;

namespace {
PolyQ make(std::initializer_list<long> cs) {
    std::vector<Rational> v;
    for (long c : cs) v.emplace_back(c);
    return PolyQ(std::move(v));
}
}  // namespace

TEST_CASE("monic recurrence generation") {
    // P_1 = x - 1, P_2 = (x - 2) P_1 - 3 P_0
    const auto spec = TTRSpec<Rational>::monic(
        Rational(1), {Rational(1), Rational(2)}, {Rational(3)});
    const auto ps = orthops::ttr_generate(spec, 2);
    REQUIRE(ps.size() == 3);
    CHECK(ps[0] == make({1}));
    CHECK(ps[1] == make({-1, 1}));
    CHECK(ps[2] == make({-1, -3, 1}));  // (x-2)(x-1) - 3 = x^2 - 3x - 1
    // every member is monic of exact degree n
    for (std::size_t n = 0; n < ps.size(); ++n) {
        CHECK(ps[n].degree() == static_cast<int>(n));
        CHECK(ps[n].leading() == Rational(1));
    }
}

TEST_CASE("general recurrence generation matches standard Hermite") {
    // H_{n+1} = 2x H_n - 2n H_{n-1}: A_n = 2, B_n = 0, C_n = 2n.
    TTRSpec<Rational> spec;
    spec.kind = TTRSpec<Rational>::Kind::general;
    for (int n = 0; n < 8; ++n) {
        spec.A.push_back(Rational(2));
        spec.B.push_back(Rational(0));
        if (n >= 1) spec.C.push_back(Rational(2 * n));
    }
    const auto ps = orthops::ttr_generate(spec, 8);
    for (int n = 0; n <= 8; ++n)
        CHECK(ps[static_cast<std::size_t>(n)] == orthops::hermite_std(n));
}

TEST_CASE("recurrence validation") {
    const auto spec = TTRSpec<Rational>::monic(
        Rational(1), {Rational(0)}, {});
    CHECK_THROWS_AS(orthops::ttr_generate(spec, 2), std::invalid_argument);  // tables too short
    const auto zero_lam = TTRSpec<Rational>::monic(
        Rational(1), {Rational(0), Rational(0)}, {Rational(0)});
    CHECK_THROWS_AS(orthops::ttr_generate(zero_lam, 2), std::invalid_argument);
    CHECK_THROWS_AS(orthops::ttr_generate(spec, -1), std::invalid_argument);
}

TEST_CASE("standard Hermite values") {
    CHECK(orthops::hermite_std(0) == make({1}));
    CHECK(orthops::hermite_std(1) == make({0, 2}));
    CHECK(orthops::hermite_std(2) == make({-2, 0, 4}));
    CHECK(orthops::hermite_std(3) == make({0, -12, 0, 8}));
    CHECK(orthops::hermite_std(4) == make({12, 0, -48, 0, 16}));
    CHECK_THROWS_AS(orthops::hermite_std(-1), std::invalid_argument);
}

TEST_CASE("generalized Hermite values") {
    const Rational one(1);
    CHECK(orthops::hermite_gen(one, 0) == make({1}));
    CHECK(orthops::hermite_gen(one, 1) == make({0, 1}));
    CHECK(orthops::hermite_gen(one, 2) == make({-1, 0, 1}));
    CHECK(orthops::hermite_gen(one, 3) == make({0, -3, 0, 1}));
    CHECK(orthops::hermite_gen(one, 4) == make({3, 0, -6, 0, 1}));
    CHECK(orthops::hermite_gen(Rational(1, 2), 2) == PolyQ({Rational(-1, 2), Rational(0), Rational(1)}));
    // alpha as a gaussian rational works through the same template
    const GaussianRational i = GaussianRational::i();
    CHECK(orthops::hermite_gen(i, 2) ==
          orthops::PolyGQ({-i, GaussianRational(0), GaussianRational(1)}));
}

TEST_CASE("Laguerre closed form") {
    CHECK(orthops::laguerre(Rational(0), 0) == make({1}));
    CHECK(orthops::laguerre(Rational(0), 1) == make({1, -1}));
    CHECK(orthops::laguerre(Rational(0), 2) == PolyQ({Rational(1), Rational(-2), Rational(1, 2)}));
    CHECK(orthops::laguerre(Rational(0), 3) ==
          PolyQ({Rational(1), Rational(-3), Rational(3, 2), Rational(-1, 6)}));
    CHECK(orthops::laguerre(Rational(1), 1) == make({2, -1}));
    CHECK_THROWS_AS(orthops::laguerre(Rational(0), -1), std::invalid_argument);
}

TEST_CASE("Laguerre closed form satisfies the classical recurrence") {
    // (n+1) L_{n+1}^a = (2n+1+a-x) L_n^a - (n+a) L_{n-1}^a
    for (const Rational& a : {Rational(0), Rational(1), Rational(1, 2), Rational(-1, 3)}) {
        for (int n = 1; n <= 10; ++n) {
            const PolyQ lhs = orthops::laguerre(a, n + 1) * Rational(n + 1);
            const PolyQ mid = PolyQ({Rational(2 * n + 1) + a, Rational(-1)});
            const PolyQ rhs =
                mid * orthops::laguerre(a, n) - orthops::laguerre(a, n - 1) * (Rational(n) + a);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("element-wise shift maps recurrences correctly") {
    // R_n(x) = P_n(x + s) satisfies the monic recurrence with c_n - s.
    const auto spec = TTRSpec<Rational>::monic(
        Rational(1), {Rational(1), Rational(-2), Rational(0)},
        {Rational(2), Rational(1)});
    const Rational s(3, 2);
    auto shifted_spec = spec;
    for (auto& c : shifted_spec.c) c -= s;
    const auto shifted = orthops::shift_system(orthops::ttr_generate(spec, 3), s);
    CHECK(shifted == orthops::ttr_generate(shifted_spec, 3));
}

TEST_CASE("positive-definiteness via the recurrence criterion") {
    using orthops::PdViolation;
    const auto good = orthops::exp_form_ttr(Rational(1, 2), Rational(-3), 10);
    CHECK(orthops::pd_check(good, 10).positive_definite);

    const auto bad = orthops::exp_form_ttr(Rational(-1), Rational(0), 10);
    const auto rep = orthops::pd_check(bad, 10);
    CHECK(!rep.positive_definite);
    CHECK(rep.first_violation == 2);
    CHECK(rep.reason == PdViolation::lambda_not_positive);

    // a non-real c_n is flagged as such
    TTRSpec<GaussianRational> complex_spec;
    complex_spec.c = {GaussianRational::i(), GaussianRational(1)};
    complex_spec.lam = {GaussianRational(1)};
    const auto crep = orthops::pd_check(complex_spec, 2);
    CHECK(!crep.positive_definite);
    CHECK(crep.first_violation == 1);
    CHECK(crep.reason == PdViolation::coefficient_not_real);

    // the criterion is defined for monic recurrences only
    TTRSpec<Rational> general;
    general.kind = TTRSpec<Rational>::Kind::general;
    CHECK_THROWS_AS(orthops::pd_check(general, 1), std::invalid_argument);
    CHECK_THROWS_AS(orthops::pd_check(TTRSpec<Rational>{}, 5), std::invalid_argument);
}

TEST_CASE("exp-form recurrence tables") {
    const auto spec = orthops::exp_form_ttr(Rational(2), Rational(-1), 5);
    REQUIRE(spec.c.size() == 5);
    REQUIRE(spec.lam.size() == 4);
    for (int n = 1; n <= 5; ++n) CHECK(spec.c_at(n) == Rational(-1));
    for (int n = 2; n <= 5; ++n) CHECK(spec.lam_at(n) == Rational(2 * (n - 1)));
    // the generated system is the generalized Hermite system shifted by beta
    const auto ps = orthops::ttr_generate(spec, 5);
    for (int n = 0; n <= 5; ++n)
        CHECK(ps[static_cast<std::size_t>(n)] ==
              orthops::taylor_shift(orthops::hermite_gen(Rational(2), n), Rational(1)));
}
