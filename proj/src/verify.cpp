#include "orthops/verify.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "orthops/classify.hpp"
#include "orthops/diffop.hpp"
#include "orthops/laguerreop.hpp"
#include "orthops/opsfam.hpp"
#include "orthops/poly.hpp"
#include "orthops/random.hpp"
#include "orthops/rootcheck.hpp"

namespace orthops {

namespace {

std::string nstr(long v) { return std::to_string(v); }

struct Outcome {
    bool pass = false;
    std::string detail;
};

Outcome ok(std::string detail) { return {true, std::move(detail)}; }
Outcome fail(std::string detail) { return {false, std::move(detail)}; }

// ----- laguerre suite ------------------------------------------------------

Outcome chk_operator_images(const VerifyConfig& cfg) {
    const TheoremCheck r = verify_theorem(cfg.degree_bound);
    if (!r.ok) return fail("image of x^n differs from L_n first at n = " + nstr(r.first_violation));
    return ok("apply(op, x^n) = L_n exactly for 0 <= n <= " + nstr(cfg.degree_bound));
}

Outcome chk_coefficients_agree(const VerifyConfig& cfg) {
    const int R = std::max(cfg.degree_bound, 40);
    for (int r = 0; r <= R; ++r)
        if (!(a_closed(r) == a_recursive(r)))
            return fail("closed form and recursion disagree at r = " + nstr(r));
    if (!(a_closed(1) == Rational(-2)))
        return fail("a_1 != -2");
    if (!(a_closed(2) == Rational(7, 2)))
        return fail("a_2 != 7/2");
    if (!(a_closed(3) == Rational(-17, 3)))
        return fail("a_3 != -17/3");
    return ok("closed form = recursion for r <= " + nstr(R) + "; spot values a_1, a_2, a_3 match");
}

Outcome chk_double_sum(const VerifyConfig& cfg) {
    const int R = std::max(cfg.degree_bound, 40);
    for (int r = 0; r <= R; ++r)
        if (!identity_check(r))
            return fail("double sum != (-1)^r/r! at r = " + nstr(r));
    return ok("double sum collapses to (-1)^r/r! for r <= " + nstr(R));
}

Outcome chk_extraction_matches(const VerifyConfig& cfg) {
    const int N = cfg.degree_bound;
    std::vector<PolyQ> images;
    images.reserve(static_cast<std::size_t>(N) + 1);
    for (int n = 0; n <= N; ++n) images.push_back(laguerre(Rational(0), n));
    const DiffOp<Rational> op = extract(images, N);
    for (int n = 0; n <= N; ++n) {
        if (!(op.pk[static_cast<std::size_t>(n)] == build_p(n)))
            return fail("extracted p_" + nstr(n) + " differs from the closed-form build");
        if (op.pk[static_cast<std::size_t>(n)].degree() > n)
            return fail("extracted p_" + nstr(n) + " has degree > n");
    }
    return ok("extraction from Laguerre images reproduces the closed-form operator, n <= " + nstr(N));
}

Outcome chk_coefficient_rows(const VerifyConfig& cfg) {
    const int N = cfg.degree_bound;
    std::vector<PolyQ> images;
    images.reserve(static_cast<std::size_t>(N) + 1);
    for (int n = 0; n <= N; ++n) images.push_back(laguerre(Rational(0), n));
    const DiffOp<Rational> op = extract(images, N);
    for (int n = 0; n <= N; ++n)
        for (int r = 0; r <= n; ++r) {
            const Rational qnr = op.pk[static_cast<std::size_t>(n)].coeff(static_cast<std::size_t>(r));
            const Rational qrr = op.pk[static_cast<std::size_t>(r)].coeff(static_cast<std::size_t>(r));
            if (!(qnr == Rational(binom(static_cast<unsigned long>(n), r)) * qrr))
                return fail("q_{n,r} != C(n,r) q_{r,r} at n = " + nstr(n) + ", r = " + nstr(r));
        }
    return ok("extracted coefficients satisfy q_{n,r} = C(n,r) q_{r,r} for n <= " + nstr(N));
}

// ----- main-theorem suite --------------------------------------------------

template <typename K, typename Draw>
Outcome recover_params(const VerifyConfig& cfg, std::uint64_t salt, Draw draw,
                       const char* field_name) {
    Rng rng(cfg.seed + salt);
    const int N = cfg.degree_bound;
    const int cases = 100;
    for (int t = 0; t < cases; ++t) {
        const ExpOpParams<K> params = draw(rng);
        const GammaSeq<K> g = exp_gamma(params, N);
        const ClassifyResult<K> res = classify_gamma(g, N);
        if (!res.is_exp_form() || !(res.params == params))
            return fail(std::string("parameters not recovered on ") + field_name +
                        " draw " + nstr(t));
        if (!verify_ttr_equivalence(g, N))
            return fail(std::string("three-term recurrence fails on ") + field_name +
                        " draw " + nstr(t));
        if (!check_ode_coeffs(g, params.alpha, params.beta, N))
            return fail(std::string("coefficient recursion fails on ") + field_name +
                        " draw " + nstr(t));
    }
    return ok(nstr(cases) + " random " + field_name +
              " parameter draws: consistent with exp-form up to N = " + nstr(N) +
              ", parameters recovered exactly, recurrence verdicts agree");
}

Outcome chk_recover_rational(const VerifyConfig& cfg) {
    return recover_params<Rational>(
        cfg, 11,
        [](Rng& rng) {
            return ExpOpParams<Rational>{random_nonzero_rational(rng, 8),
                                         random_nonzero_rational(rng, 8),
                                         random_rational(rng, 8)};
        },
        "rational");
}

Outcome chk_recover_gaussian(const VerifyConfig& cfg) {
    return recover_params<GaussianRational>(
        cfg, 12,
        [](Rng& rng) {
            return ExpOpParams<GaussianRational>{random_nonzero_gaussian(rng, 6),
                                                 random_nonzero_gaussian(rng, 6),
                                                 random_gaussian(rng, 6)};
        },
        "gaussian");
}

Outcome chk_reject_factorial(const VerifyConfig& cfg) {
    const int N = cfg.degree_bound;
    GammaSeq<Rational> g;
    for (int k = 0; k <= N; ++k) g.gammas.push_back(factorial(static_cast<unsigned long>(k)));
    const ClassifyResult<Rational> res = classify_gamma(g, N);
    if (res.is_exp_form()) return fail("factorial sequence accepted as exp-form");
    if (res.witness_index != 3 || res.reason != NotOpsReason::recursion)
        return fail("factorial sequence rejected at index " + nstr(res.witness_index) +
                    " (" + to_string(res.reason) + "), expected recursion witness 3");
    return ok("gamma_k = k! rejected with recursion witness at n = 3");
}

Outcome chk_reject_corrupted(const VerifyConfig& cfg) {
    Rng rng(cfg.seed + 13);
    const int N = cfg.degree_bound;
    const int cases = 50;
    for (int t = 0; t < cases; ++t) {
        const ExpOpParams<Rational> params{random_nonzero_rational(rng, 8),
                                           random_nonzero_rational(rng, 8),
                                           random_rational(rng, 8)};
        GammaSeq<Rational> g = exp_gamma(params, N);
        const int j = static_cast<int>(rng.uniform(3, N));
        g.gammas[static_cast<std::size_t>(j)] += random_nonzero_rational(rng, 5);
        const ClassifyResult<Rational> res = classify_gamma(g, N);
        if (res.is_exp_form() || res.witness_index != j || res.reason != NotOpsReason::recursion)
            return fail("corruption at index " + nstr(j) + " not rejected there (draw " + nstr(t) + ")");
        const RecurrenceCheck ttr = verify_ttr_equivalence(g, N);
        const RecurrenceCheck ode = check_ode_coeffs(g, params.alpha, params.beta, N);
        if (ttr.ok || ttr.first_violation != j || ode.ok || ode.first_violation != j)
            return fail("recurrence checks disagree with witness " + nstr(j) + " (draw " + nstr(t) + ")");
    }
    return ok(nstr(cases) + " corrupted sequences all rejected exactly at the corrupted index");
}

Outcome chk_shifted_hermite(const VerifyConfig& cfg) {
    Rng rng(cfg.seed + 14);
    const int N = cfg.degree_bound;
    const int cases = 50;
    for (int t = 0; t < cases; ++t) {
        const ExpOpParams<Rational> params{random_nonzero_rational(rng, 6),
                                           random_nonzero_rational(rng, 6),
                                           random_rational(rng, 6)};
        const GammaSeq<Rational> g = exp_gamma(params, N);
        for (int n = 0; n <= N; ++n) {
            const PolyQ expected =
                taylor_shift(hermite_gen(params.alpha, n), -params.beta) * params.gamma0;
            if (!(apply_gamma(g, n) == expected))
                return fail("image != gamma0 H_n^alpha(x - beta) at n = " + nstr(n) +
                            " (draw " + nstr(t) + ")");
        }
    }
    return ok(nstr(cases) + " random (gamma0, alpha, beta): images equal gamma0 H_n^alpha(x - beta), n <= " + nstr(N));
}

Outcome chk_hermite_scaling(const VerifyConfig& cfg) {
    const int N = cfg.degree_bound;
    const Rational half(1, 2);
    for (int n = 0; n <= N; ++n) {
        const PolyQ h_std = hermite_std(n);
        if (!(hermite_gen(Rational(2), n) == scale_argument(h_std, half)))
            return fail("H_n^2(x) != H_n(x/2) at n = " + nstr(n));
        Rational pow(1);
        for (int i = 0; i < n; ++i) pow = pow * half;
        if (!(hermite_gen(half, n) == h_std * pow))
            return fail("H_n^{1/2}(x) != 2^{-n} H_n(x) at n = " + nstr(n));
    }
    return ok("H_n^2(x) = H_n(x/2) and H_n^{1/2}(x) = 2^{-n} H_n(x) for n <= " + nstr(N));
}

Outcome chk_positive_definite_link(const VerifyConfig& cfg) {
    Rng rng(cfg.seed + 15);
    const int N = cfg.degree_bound;
    for (int t = 0; t < 10; ++t) {
        const Rational alpha = random_positive_rational(rng, 6);
        const Rational beta = random_rational(rng, 6);
        const TTRSpec<Rational> spec = exp_form_ttr(alpha, beta, N);
        if (!pd_check(spec, N).positive_definite)
            return fail("exp-form recurrence with alpha > 0 not positive-definite (draw " + nstr(t) + ")");
        const std::vector<PolyQ> ps = ttr_generate(spec, N);
        const GammaSeq<Rational> g =
            exp_gamma(ExpOpParams<Rational>{Rational(1), alpha, beta}, N);
        for (int n = 0; n <= N; ++n)
            if (!(ps[static_cast<std::size_t>(n)] == apply_gamma(g, n)))
                return fail("recurrence polynomials differ from operator images at n = " + nstr(n));
    }
    const PdReport neg = pd_check(exp_form_ttr(Rational(-1), Rational(0), N), N);
    if (neg.positive_definite || neg.first_violation != 2 ||
        neg.reason != PdViolation::lambda_not_positive)
        return fail("alpha = -1 recurrence wrongly reported positive-definite");
    return ok("alpha > 0 recurrences are positive-definite and match the operator images; alpha = -1 is flagged at lambda_2");
}

Outcome chk_round_trip(const VerifyConfig& cfg) {
    Rng rng(cfg.seed + 16);
    const int N = cfg.degree_bound;
    const int cases = 20;
    for (int t = 0; t < cases; ++t) {
        std::vector<PolyQ> images;
        images.reserve(static_cast<std::size_t>(N) + 1);
        for (int n = 0; n <= N; ++n) images.push_back(random_poly(rng, n));
        const DiffOp<Rational> op = extract(images, N);
        for (int n = 0; n <= N; ++n) {
            if (op.pk[static_cast<std::size_t>(n)].degree() > n)
                return fail("extracted p_" + nstr(n) + " has degree > n (draw " + nstr(t) + ")");
            if (!(apply(op, PolyQ::monomial(n)) == images[static_cast<std::size_t>(n)]))
                return fail("round trip broke at n = " + nstr(n) + " (draw " + nstr(t) + ")");
        }
    }
    return ok(nstr(cases) + " random transforms: extract-then-apply reproduces all images of x^0..x^" +
              nstr(N) + ", deg p_n <= n");
}

// ----- roots suite ---------------------------------------------------------

Outcome chk_sturm_oracle(const VerifyConfig& cfg) {
    Rng rng(cfg.seed + 17);
    const int maxdeg = std::min(cfg.degree_bound, 12);
    const int cases = 200;
    std::vector<PolyQ> polys;
    std::vector<std::vector<Rational>> distinct;
    polys.reserve(cases);
    distinct.reserve(cases);
    for (int t = 0; t < cases; ++t) {
        RealRootedSample s = random_real_rooted(rng, static_cast<int>(rng.uniform(0, maxdeg)));
        std::vector<Rational> d = s.roots;
        d.erase(std::unique(d.begin(), d.end()), d.end());
        polys.push_back(std::move(s.poly));
        distinct.push_back(std::move(d));
    }
    const std::vector<RootReport> reports = count_real_roots_batch(polys);
    for (int t = 0; t < cases; ++t) {
        const RootReport& r = reports[static_cast<std::size_t>(t)];
        const std::vector<Rational>& d = distinct[static_cast<std::size_t>(t)];
        if (r.distinct_real_roots != static_cast<int>(d.size()) || !r.all_roots_real)
            return fail("Sturm census disagrees with constructed roots on draw " + nstr(t));
        for (std::size_t i = 0; i < d.size(); ++i) {
            const auto& iv = r.isolating_intervals[i];
            if (!(iv.first < d[i]) || !(d[i] <= iv.second))
                return fail("isolating interval misses root " + d[i].str() + " on draw " + nstr(t));
        }
    }
    return ok(nstr(cases) + " constructed real-rooted polynomials (deg <= " + nstr(maxdeg) +
              "): counts, flags and isolating intervals all match");
}

Outcome chk_hermite_roots(const VerifyConfig& cfg) {
    const int N = cfg.degree_bound;
    const Rational alphas[] = {Rational(1), Rational(1, 2), Rational(3)};
    for (const Rational& alpha : alphas) {
        PolyQ prev = hermite_gen(alpha, 1);
        for (int n = 2; n <= N; ++n) {
            const PolyQ cur = hermite_gen(alpha, n);
            const RootReport rep = count_real_roots(cur);
            if (rep.distinct_real_roots != n || !rep.all_roots_real)
                return fail("H_" + nstr(n) + "^{" + alpha.str() + "} lacks " + nstr(n) +
                            " distinct real roots");
            if (!interlace(cur, prev))
                return fail("roots of H_" + nstr(n) + "^{" + alpha.str() +
                            "} do not interlace with H_" + nstr(n - 1));
            prev = cur;
        }
    }
    return ok("alpha in {1, 1/2, 3}: H_n^alpha has n distinct real roots and consecutive members interlace, n <= " + nstr(N));
}

Outcome chk_negative_alpha(const VerifyConfig&) {
    const RootReport r2 = count_real_roots(hermite_gen(Rational(-1), 2));
    if (r2.distinct_real_roots != 0 || r2.all_roots_real)
        return fail("H_2^{-1} = x^2 + 1 reported real roots");
    const RootReport r3 = count_real_roots(hermite_gen(Rational(-1), 3));
    if (r3.distinct_real_roots != 1 || r3.all_roots_real)
        return fail("H_3^{-1} = x^3 + 3x should have exactly one real root");
    return ok("alpha = -1 breaks real-rootedness: H_2^{-1} has 0 real roots, H_3^{-1} only 1");
}

Outcome chk_preservation(const VerifyConfig& cfg) {
    Rng rng(cfg.seed + 18);
    const int maxdeg = std::min(cfg.degree_bound, 10);
    const int cases = 200;
    std::vector<PreservationCase> batch;
    batch.reserve(cases);
    for (int t = 0; t < cases; ++t) {
        RealRootedSample s = random_real_rooted(rng, static_cast<int>(rng.uniform(1, maxdeg)));
        batch.push_back({{random_nonzero_rational(rng, 6), random_positive_rational(rng, 6),
                          random_rational(rng, 6)},
                         std::move(s.poly)});
    }
    const std::vector<unsigned char> res = preservation_batch(batch);
    for (int t = 0; t < cases; ++t)
        if (!res[static_cast<std::size_t>(t)])
            return fail("image lost real-rootedness on draw " + nstr(t));
    return ok(nstr(cases) + " random real-rooted inputs (deg <= " + nstr(maxdeg) +
              "), alpha > 0: every image is real-rooted");
}

// ----- registry ------------------------------------------------------------

using CheckFn = Outcome (*)(const VerifyConfig&);

struct Entry {
    Suite suite;
    const char* id;
    CheckFn fn;
};

constexpr Entry kChecks[] = {
    {Suite::laguerre, "laguerre/operator-images-match-closed-form", chk_operator_images},
    {Suite::laguerre, "laguerre/coefficients-closed-equals-recursive", chk_coefficients_agree},
    {Suite::laguerre, "laguerre/double-sum-collapses-to-inverse-factorial", chk_double_sum},
    {Suite::laguerre, "laguerre/extraction-matches-closed-form", chk_extraction_matches},
    {Suite::laguerre, "laguerre/coefficient-rows-follow-binomials", chk_coefficient_rows},
    {Suite::main_theorem, "main/recovers-rational-parameters", chk_recover_rational},
    {Suite::main_theorem, "main/recovers-gaussian-parameters", chk_recover_gaussian},
    {Suite::main_theorem, "main/rejects-factorial-sequence", chk_reject_factorial},
    {Suite::main_theorem, "main/rejects-corrupted-at-corrupted-index", chk_reject_corrupted},
    {Suite::main_theorem, "main/images-are-shifted-hermite", chk_shifted_hermite},
    {Suite::main_theorem, "main/hermite-argument-scaling", chk_hermite_scaling},
    {Suite::main_theorem, "main/positive-definite-recurrence-link", chk_positive_definite_link},
    {Suite::main_theorem, "main/monomial-images-round-trip", chk_round_trip},
    {Suite::roots, "roots/sturm-count-matches-constructed-roots", chk_sturm_oracle},
    {Suite::roots, "roots/hermite-distinct-roots-and-interlacing", chk_hermite_roots},
    {Suite::roots, "roots/negative-parameter-breaks-real-rootedness", chk_negative_alpha},
    {Suite::roots, "roots/exp-operator-preserves-real-roots", chk_preservation},
};

}  // namespace

Suite suite_from_name(const std::string& name) {
    if (name == "all") return Suite::all;
    if (name == "laguerre") return Suite::laguerre;
    if (name == "main-theorem") return Suite::main_theorem;
    if (name == "roots") return Suite::roots;
    throw std::invalid_argument("unknown suite \"" + name +
                                "\" (expected all, laguerre, main-theorem or roots)");
}

const char* to_string(Suite s) {
    switch (s) {
        case Suite::laguerre: return "laguerre";
        case Suite::main_theorem: return "main-theorem";
        case Suite::roots: return "roots";
        default: return "all";
    }
}

std::vector<CheckResult> run_suite(Suite suite, const VerifyConfig& cfg) {
    if (cfg.degree_bound < 4)
        throw std::invalid_argument("verify: degree bound must be at least 4");
    std::vector<CheckResult> out;
    for (const Entry& e : kChecks) {
        if (suite != Suite::all && e.suite != suite) continue;
        CheckResult r{e.id, false, {}};
        try {
            Outcome o = e.fn(cfg);
            r.pass = o.pass;
            r.detail = std::move(o.detail);
        } catch (const std::exception& ex) {
            r.detail = std::string("unexpected exception: ") + ex.what();
        }
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace orthops
