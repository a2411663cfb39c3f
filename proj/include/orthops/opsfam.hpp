#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "orthops/poly.hpp"
#include "orthops/rational.hpp"

namespace orthops {

/// Three-term recurrence data as finite, materialized tables.
///
/// monic ........ P_n = (x - c_n) P_{n-1} - lambda_n P_{n-2},  n >= 1,
///                with c_n defined for n >= 1 and lambda_n for n >= 2
///                (lambda_1 multiplies P_{-1} = 0 and is never read).
/// general ...... P_{n+1} = (A_n x + B_n) P_n - C_n P_{n-1},   n >= 0,
///                with A_n, B_n from n = 0 and C_n from n = 1.
///
/// Tables are stored compactly from their first semantic index:
/// c[0] is c_1, lam[0] is lambda_2, A[0]/B[0] are A_0/B_0, C[0] is C_1.
template <typename K>
struct TTRSpec {
    enum class Kind { monic, general };

    Kind kind = Kind::monic;
    K p0 = K(1);
    std::vector<K> c;    // monic: c_{i+1} at index i
    std::vector<K> lam;  // monic: lambda_{i+2} at index i
    std::vector<K> A;    // general: A_i at index i
    std::vector<K> B;    // general: B_i at index i
    std::vector<K> C;    // general: C_{i+1} at index i

    const K& c_at(int n) const { return c.at(static_cast<size_t>(n - 1)); }
    const K& lam_at(int n) const { return lam.at(static_cast<size_t>(n - 2)); }
    const K& A_at(int n) const { return A.at(static_cast<size_t>(n)); }
    const K& B_at(int n) const { return B.at(static_cast<size_t>(n)); }
    const K& C_at(int n) const { return C.at(static_cast<size_t>(n - 1)); }

    static TTRSpec monic(K p0, std::vector<K> c, std::vector<K> lam) {
        TTRSpec s;
        s.kind = Kind::monic;
        s.p0 = std::move(p0);
        s.c = std::move(c);
        s.lam = std::move(lam);
        return s;
    }

    static TTRSpec general(K p0, std::vector<K> A, std::vector<K> B, std::vector<K> C) {
        TTRSpec s;
        s.kind = Kind::general;
        s.p0 = std::move(p0);
        s.A = std::move(A);
        s.B = std::move(B);
        s.C = std::move(C);
        return s;
    }
};

/// P_0..P_N from the recurrence tables. Throws on missing table entries or
/// on zero lambda/A/C, which invalidate the spec.
template <typename K>
std::vector<Polynomial<K>> ttr_generate(const TTRSpec<K>& spec, int N) {
    using PK = Polynomial<K>;
    if (N < 0) throw std::invalid_argument("ttr_generate: negative degree bound");

    if (spec.kind == TTRSpec<K>::Kind::monic) {
        if (static_cast<int>(spec.c.size()) < N)
            throw std::invalid_argument("ttr_generate: c table missing entries (need c_1..c_" + std::to_string(N) + ")");
        if (N >= 2 && static_cast<int>(spec.lam.size()) < N - 1)
            throw std::invalid_argument("ttr_generate: lambda table missing entries (need lambda_2..lambda_" + std::to_string(N) + ")");
        for (int n = 2; n <= N; ++n)
            if (spec.lam_at(n).is_zero())
                throw std::invalid_argument("ttr_generate: lambda_" + std::to_string(n) + " = 0 is not a valid recurrence");

        std::vector<PK> out;
        out.reserve(static_cast<size_t>(N) + 1);
        out.push_back(PK::constant(spec.p0));
        PK prev;  // P_{-1} = 0
        for (int n = 1; n <= N; ++n) {
            PK x_minus_c(std::vector<K>{-spec.c_at(n), K(1)});
            PK next = x_minus_c * out.back();
            if (n >= 2) next -= prev * spec.lam_at(n);
            prev = out.back();
            out.push_back(std::move(next));
        }
        return out;
    }

    if (static_cast<int>(spec.A.size()) < N || static_cast<int>(spec.B.size()) < N)
        throw std::invalid_argument("ttr_generate: A/B tables missing entries (need indices 0.." + std::to_string(N - 1) + ")");
    if (N >= 2 && static_cast<int>(spec.C.size()) < N - 1)
        throw std::invalid_argument("ttr_generate: C table missing entries (need C_1..C_" + std::to_string(N - 1) + ")");
    for (int n = 0; n < N; ++n)
        if (spec.A_at(n).is_zero())
            throw std::invalid_argument("ttr_generate: A_" + std::to_string(n) + " = 0 is not a valid recurrence");
    for (int n = 1; n < N; ++n)
        if (spec.C_at(n).is_zero())
            throw std::invalid_argument("ttr_generate: C_" + std::to_string(n) + " = 0 is not a valid recurrence");

    std::vector<PK> out;
    out.reserve(static_cast<size_t>(N) + 1);
    out.push_back(PK::constant(spec.p0));
    PK prev;
    for (int n = 0; n < N; ++n) {
        PK ax_plus_b(std::vector<K>{spec.B_at(n), spec.A_at(n)});
        PK next = ax_plus_b * out.back();
        if (n >= 1) next -= prev * spec.C_at(n);
        prev = out.back();
        out.push_back(std::move(next));
    }
    return out;
}

/// Standard Hermite H_n: H_{n+1} = 2x H_n - 2n H_{n-1}, H_0 = 1.
PolyQ hermite_std(int n);

/// Generalized Hermite H_n^alpha: H_n = x H_{n-1} - alpha (n-1) H_{n-2}.
template <typename K>
Polynomial<K> hermite_gen(const K& alpha, int n) {
    if (n < 0) throw std::invalid_argument("hermite_gen: negative degree");
    Polynomial<K> prev;                            // H_{-1} = 0
    Polynomial<K> cur = Polynomial<K>::constant(K(1));  // H_0
    const Polynomial<K> x = Polynomial<K>::monomial(1);
    for (int m = 1; m <= n; ++m) {
        Polynomial<K> next = x * cur - prev * (alpha * K(static_cast<long>(m - 1)));
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

/// Generalized Laguerre L_n^alpha via the closed form
/// sum_{r=0}^n (-1)^r / r! * C(n+alpha, n-r) x^r.
PolyQ laguerre(const Rational& alpha, int n);

/// Element-wise Taylor shift: returns R with R_n(x) = P_n(x + s). A monic
/// system with tables (c_n, lambda_n) maps to one with (c_n - s, lambda_n).
template <typename K>
std::vector<Polynomial<K>> shift_system(const std::vector<Polynomial<K>>& ps, const K& s) {
    std::vector<Polynomial<K>> out;
    out.reserve(ps.size());
    for (const auto& p : ps) out.push_back(taylor_shift(p, s));
    return out;
}

enum class PdViolation { none, coefficient_not_real, lambda_not_positive };

struct PdReport {
    bool positive_definite = true;
    int first_violation = -1;  // semantic recurrence index n
    PdViolation reason = PdViolation::none;
};

/// Favard positive-definiteness criterion on a monic spec, checked for
/// n <= N: every c_n real and every lambda_n > 0. A finite table can only
/// certify "positive-definite up to N".
template <typename K>
PdReport pd_check(const TTRSpec<K>& spec, int N) {
    if (spec.kind != TTRSpec<K>::Kind::monic)
        throw std::invalid_argument("pd_check: criterion applies to monic recurrences");
    if (static_cast<int>(spec.c.size()) < N || (N >= 2 && static_cast<int>(spec.lam.size()) < N - 1))
        throw std::invalid_argument("pd_check: tables missing entries up to N");
    for (int n = 1; n <= N; ++n) {
        if (!is_real_scalar(spec.c_at(n)))
            return {false, n, PdViolation::coefficient_not_real};
        if (n >= 2) {
            const K& lam = spec.lam_at(n);
            if (!is_real_scalar(lam) || !(real_part(lam) > Rational(0)))
                return {false, n,
                        is_real_scalar(lam) ? PdViolation::lambda_not_positive
                                            : PdViolation::coefficient_not_real};
        }
    }
    return {};
}

/// Monic spec (c_n = beta, lambda_n = alpha (n-1)) of the exp-form system,
/// materialized up to degree N.
template <typename K>
TTRSpec<K> exp_form_ttr(const K& alpha, const K& beta, int N) {
    TTRSpec<K> spec;
    spec.kind = TTRSpec<K>::Kind::monic;
    spec.p0 = K(1);
    for (int n = 1; n <= N; ++n) spec.c.push_back(beta);
    for (int n = 2; n <= N; ++n) spec.lam.push_back(alpha * K(static_cast<long>(n - 1)));
    return spec;
}

}  // namespace orthops
