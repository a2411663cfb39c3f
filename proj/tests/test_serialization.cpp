#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "orthops/serialization.hpp"

using nlohmann::json;
using orthops::ClassifyResult;
using orthops::DiffOp;
using orthops::GammaSeq;
using orthops::GaussianRational;
using orthops::PolyGQ;
using orthops::PolyQ;
using orthops::Rational;
using orthops::TTRSpec;

TEST_CASE("scalars travel as exact strings") {
    json j = Rational(3, 4);
    CHECK(j == json("3/4"));
    CHECK(j.get<Rational>() == Rational(3, 4));
    CHECK(json(Rational(-5)).get<Rational>() == Rational(-5));
    CHECK(json(Rational(-5)) == json("-5"));

    const GaussianRational z(Rational(1, 2), Rational(-1, 3));
    json jz = z;
    CHECK(jz == json("1/2-1/3*i"));
    CHECK(jz.get<GaussianRational>() == z);
    CHECK(json(GaussianRational(7)).get<GaussianRational>() == GaussianRational(7));

    CHECK_THROWS(json("3.5").get<Rational>());
    CHECK_THROWS(json("").get<Rational>());
}

TEST_CASE("polynomials round trip, including the zero polynomial") {
    const PolyQ p({Rational(1, 2), Rational(0), Rational(-3)});
    json j = p;
    CHECK(j.dump() == R"({"coeffs":["1/2","0","-3"]})");
    CHECK(j.get<PolyQ>() == p);

    CHECK(json(PolyQ()).dump() == R"({"coeffs":[]})");
    CHECK(json(PolyQ()).get<PolyQ>().is_zero());

    // trailing zeros in the input collapse to canonical form on parse
    const auto q = json::parse(R"({"coeffs":["2","1","0","0"]})").get<PolyQ>();
    CHECK(q.degree() == 1);
    CHECK(q == PolyQ({Rational(2), Rational(1)}));

    const PolyGQ g({GaussianRational(Rational(1), Rational(1)), GaussianRational::i()});
    CHECK(json(g).get<PolyGQ>() == g);
}

TEST_CASE("operators and gamma sequences round trip") {
    DiffOp<Rational> op;
    op.pk = {PolyQ({Rational(1)}), PolyQ({Rational(0), Rational(2)}), PolyQ()};
    json j = op;
    REQUIRE(j.at("pk").size() == 3);
    CHECK(j.get<DiffOp<Rational>>() == op);

    const GammaSeq<Rational> g{{Rational(1), Rational(0), Rational(-1)}};
    json jg = g;
    CHECK(jg.dump() == R"({"gammas":["1","0","-1"]})");
    CHECK(jg.get<GammaSeq<Rational>>() == g);
}

TEST_CASE("monic recurrence tables keep semantic index alignment") {
    const auto spec = TTRSpec<Rational>::monic(
        Rational(1), {Rational(1), Rational(1), Rational(1)}, {Rational(1), Rational(2)});
    json j = spec;
    CHECK(j.at("kind") == "monic");
    CHECK(j.at("p0") == json("1"));
    CHECK(j.at("c").size() == 3);
    REQUIRE(j.at("lam").size() == 4);
    // lambda_n lives at array position n; positions 0 and 1 are undefined
    CHECK(j.at("lam")[0].is_null());
    CHECK(j.at("lam")[1].is_null());
    CHECK(j.at("lam")[2] == json("1"));
    CHECK(j.at("lam")[3] == json("2"));

    const auto back = j.get<TTRSpec<Rational>>();
    CHECK(back.kind == TTRSpec<Rational>::Kind::monic);
    CHECK(back.p0 == spec.p0);
    CHECK(back.c == spec.c);
    CHECK(back.lam == spec.lam);
    CHECK(orthops::ttr_generate(back, 3) == orthops::ttr_generate(spec, 3));
}

TEST_CASE("general recurrence tables round trip") {
    const auto spec = TTRSpec<Rational>::general(
        Rational(1), {Rational(2), Rational(2)}, {Rational(0), Rational(0)}, {Rational(2)});
    json j = spec;
    CHECK(j.at("kind") == "general");
    CHECK(j.at("A") == json::parse(R"(["2","2"])"));
    REQUIRE(j.at("C").size() == 2);
    CHECK(j.at("C")[0].is_null());
    CHECK(j.at("C")[1] == json("2"));

    const auto back = j.get<TTRSpec<Rational>>();
    CHECK(back.kind == TTRSpec<Rational>::Kind::general);
    CHECK(back.A == spec.A);
    CHECK(back.B == spec.B);
    CHECK(back.C == spec.C);
}

TEST_CASE("malformed recurrence specs are rejected") {
    CHECK_THROWS_AS(json::parse(R"({"kind":"fancy"})").get<TTRSpec<Rational>>(),
                    std::invalid_argument);
    CHECK_THROWS(json::parse(R"({"c":["1"]})").get<TTRSpec<Rational>>());  // kind missing
    // value sitting at an undefined index position
    CHECK_THROWS_AS(
        json::parse(R"({"kind":"monic","c":["1"],"lam":[null,"9"]})").get<TTRSpec<Rational>>(),
        std::invalid_argument);
    CHECK_THROWS_AS(
        json::parse(R"({"kind":"general","C":["1","2"]})").get<TTRSpec<Rational>>(),
        std::invalid_argument);
    CHECK_THROWS_AS(
        json::parse(R"({"kind":"monic","lam":"2"})").get<TTRSpec<Rational>>(),
        std::invalid_argument);
    // p0 defaults to 1 when omitted
    const auto spec = json::parse(R"({"kind":"monic","c":["0"]})").get<TTRSpec<Rational>>();
    CHECK(spec.p0 == Rational(1));
}

TEST_CASE("classification verdicts serialize by shape") {
    const auto hit = ClassifyResult<Rational>::exp_form({Rational(2), Rational(1, 2), Rational(-3)});
    json j = hit;
    CHECK(j.dump() == R"({"alpha":"1/2","beta":"-3","gamma0":"2","verdict":"exp_form"})");

    const auto miss = ClassifyResult<Rational>::not_ops(5, orthops::NotOpsReason::recursion);
    json jm = miss;
    CHECK(jm.dump() == R"({"index":5,"reason":"recursion","verdict":"not_ops"})");

    const auto deg = ClassifyResult<GaussianRational>::not_ops(2, orthops::NotOpsReason::alpha_zero);
    CHECK(json(deg).at("reason") == "alpha_zero");
}

TEST_CASE("root reports carry exact interval endpoints") {
    const orthops::RootReport r = orthops::count_real_roots(
        PolyQ({Rational(-2), Rational(0), Rational(1)}));  // x^2 - 2
    json j = r;
    CHECK(j.at("degree") == 2);
    CHECK(j.at("distinct_real_roots") == 2);
    CHECK(j.at("all_roots_real") == true);
    REQUIRE(j.at("isolating_intervals").size() == 2);
    for (const auto& iv : j.at("isolating_intervals")) {
        REQUIRE(iv.is_array());
        REQUIRE(iv.size() == 2);
        const auto lo = iv[0].get<Rational>();
        const auto hi = iv[1].get<Rational>();
        CHECK(lo < hi);
    }
}

TEST_CASE("key order is canonical, so dumps are byte-deterministic") {
    json a = json{{"zeta", 1}, {"alpha", 2}};
    json b = json{{"alpha", 2}, {"zeta", 1}};
    CHECK(a.dump() == b.dump());
}
