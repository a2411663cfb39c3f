#pragma once

#include <stdexcept>
#include <string>

#include "orthops/diffop.hpp"
#include "orthops/poly.hpp"

namespace orthops {

enum class NotOpsReason { none, gamma0_zero, alpha_zero, recursion };

inline const char* to_string(NotOpsReason r) {
    switch (r) {
        case NotOpsReason::gamma0_zero: return "gamma0_zero";
        case NotOpsReason::alpha_zero: return "alpha_zero";
        case NotOpsReason::recursion: return "recursion";
        default: return "none";
    }
}

/// Verdict of the exp-form decision. exp_form means the gamma recursion held
/// at every checked index (consistency up to the supplied bound, never an
/// infinite claim); not_ops carries the first witness index and the reason.
template <typename K>
struct ClassifyResult {
    enum class Verdict { exp_form, not_ops };

    Verdict verdict = Verdict::not_ops;
    ExpOpParams<K> params{};   // meaningful when verdict == exp_form
    int witness_index = -1;    // meaningful when verdict == not_ops
    NotOpsReason reason = NotOpsReason::none;

    bool is_exp_form() const { return verdict == Verdict::exp_form; }

    static ClassifyResult exp_form(ExpOpParams<K> p) {
        return {Verdict::exp_form, std::move(p), -1, NotOpsReason::none};
    }
    static ClassifyResult not_ops(int index, NotOpsReason r) {
        return {Verdict::not_ops, {}, index, r};
    }
};

struct RecurrenceCheck {
    bool ok = true;
    int first_violation = -1;

    explicit operator bool() const { return ok; }
};

/// Checks gamma_n = -b gamma_{n-1} - a (n-1) gamma_{n-2} for
/// start_n <= n <= N, with gamma_{-1} = 0.
template <typename K>
RecurrenceCheck check_gamma_recursion(const GammaSeq<K>& g, const K& a, const K& b,
                                      int N, int start_n = 1) {
    if (g.max_index() < N)
        throw std::invalid_argument("check_gamma_recursion: gamma sequence shorter than N");
    for (int n = std::max(start_n, 1); n <= N; ++n) {
        const K prev2 = n >= 2 ? g[n - 2] : K(0);
        const K expected = -b * g[n - 1] - a * K(static_cast<long>(n - 1)) * prev2;
        if (!(g[n] == expected)) return {false, n};
    }
    return {};
}

/// Coefficient recursion of the ODE phi'' + (ax+b) phi' + a phi = 0, which
/// constrains indices n >= 2 only (n = 1 is not forced by the ODE).
template <typename K>
RecurrenceCheck check_ode_coeffs(const GammaSeq<K>& g, const K& a, const K& b, int N) {
    return check_gamma_recursion(g, a, b, N, 2);
}

/// Decides whether the gamma operator is consistent with
/// gamma0 * exp(-a/2 D^2 - b D) for every index up to N. b and a are pinned
/// by the recursion at n = 1, 2 (b = -gamma_1/gamma_0,
/// a = (-b gamma_1 - gamma_2)/gamma_0); later indices confirm or refute.
/// gamma_0 = 0 and a = 0 are distinct degeneracies: the first breaks the
/// degree condition, the second collapses every lambda_n to zero.
template <typename K>
ClassifyResult<K> classify_gamma(const GammaSeq<K>& g, int N) {
    if (g.max_index() + 1 < std::max(4, N + 1))
        throw std::invalid_argument("classify_gamma: need at least max(4, N+1) gamma coefficients");
    if (g[0].is_zero())
        return ClassifyResult<K>::not_ops(0, NotOpsReason::gamma0_zero);
    const K b = -g[1] / g[0];
    const K a = (-b * g[1] - g[2]) / g[0];
    if (a.is_zero())
        return ClassifyResult<K>::not_ops(2, NotOpsReason::alpha_zero);
    if (const auto chk = check_gamma_recursion(g, a, b, N, 1); !chk.ok)
        return ClassifyResult<K>::not_ops(chk.first_violation, NotOpsReason::recursion);
    return ClassifyResult<K>::exp_form({g[0], a, b});
}

/// Checks the polynomial three-term recurrence
/// P_n = (x - b) P_{n-1} - a (n-1) P_{n-2} for the images P_n = apply_gamma(g, n),
/// 1 <= n <= N, with a, b derived from the sequence as in classify_gamma.
/// a = 0 is reported as a violation at index 2, where a is pinned.
template <typename K>
RecurrenceCheck verify_ttr_equivalence(const GammaSeq<K>& g, int N) {
    if (g.max_index() < std::max(2, N))
        throw std::invalid_argument("verify_ttr_equivalence: gamma sequence shorter than N");
    if (g[0].is_zero())
        throw std::invalid_argument("verify_ttr_equivalence: gamma_0 = 0 leaves the parameters undetermined");
    const K b = -g[1] / g[0];
    const K a = (-b * g[1] - g[2]) / g[0];
    if (a.is_zero()) return {false, 2};

    Polynomial<K> prev2;  // P_{-1} = 0
    Polynomial<K> prev = Polynomial<K>::constant(g[0]);
    const Polynomial<K> x_minus_b(std::vector<K>{-b, K(1)});
    for (int n = 1; n <= N; ++n) {
        const Polynomial<K> expected =
            x_minus_b * prev - prev2 * (a * K(static_cast<long>(n - 1)));
        const Polynomial<K> actual = apply_gamma(g, n);
        if (!(actual == expected)) return {false, n};
        prev2 = std::move(prev);
        prev = actual;
    }
    return {};
}

}  // namespace orthops
