#pragma once

#include <stdexcept>
#include <vector>

#include "orthops/poly.hpp"
#include "orthops/rational.hpp"

namespace orthops {

/// Finite differential operator f |-> sum_k p_k(x) f^(k)(x) / k!.
/// Terms with k > deg f contribute nothing, so truncating the list at the
/// largest applied degree is lossless.
template <typename K>
struct DiffOp {
    std::vector<Polynomial<K>> pk;

    bool operator==(const DiffOp&) const = default;
};

/// Coefficients gamma_0..gamma_N of a constant-coefficient operator
/// sum_k gamma_k D^k / k!. gamma_0 is the leading coefficient of every image.
template <typename K>
struct GammaSeq {
    std::vector<K> gammas;

    int max_index() const { return static_cast<int>(gammas.size()) - 1; }
    const K& operator[](int k) const { return gammas[static_cast<size_t>(k)]; }
    bool operator==(const GammaSeq&) const = default;
};

/// Parameters (gamma0, alpha, beta) of the exp-form operator
/// gamma0 * exp(-alpha/2 D^2 - beta D), with alpha, gamma0 nonzero.
template <typename K>
struct ExpOpParams {
    K gamma0;
    K alpha;
    K beta;

    bool operator==(const ExpOpParams&) const = default;
};

template <typename K>
Polynomial<K> apply(const DiffOp<K>& op, const Polynomial<K>& f) {
    Polynomial<K> out;
    Polynomial<K> fk = f;  // f^(k), walked up incrementally
    const int kmax = std::min<int>(static_cast<int>(op.pk.size()) - 1, std::max(f.degree(), 0));
    for (int k = 0; k <= kmax; ++k) {
        if (k > 0) fk = derivative(fk);
        out += op.pk[static_cast<size_t>(k)] * fk / K(factorial(static_cast<unsigned long>(k)));
    }
    return out;
}

/// Image of x^n under the gamma operator:
/// P_n(x) = sum_{k=0}^{n} gamma_{n-k} C(n,k) x^k. Needs gammas through index n.
template <typename K>
Polynomial<K> apply_gamma(const GammaSeq<K>& g, int n) {
    if (n < 0) throw std::invalid_argument("apply_gamma: negative degree");
    if (g.max_index() < n) throw std::invalid_argument("apply_gamma: gamma sequence shorter than requested degree");
    std::vector<K> coeffs(static_cast<size_t>(n) + 1, K(0));
    for (int k = 0; k <= n; ++k)
        coeffs[static_cast<size_t>(k)] =
            g[n - k] * K(binom(static_cast<unsigned long>(n), k));
    return Polynomial<K>(std::move(coeffs));
}

/// Recovers the unique operator polynomials p_0..p_N from the images of the
/// monomials: p_n = images[n] - sum_{k<n} p_k * C(n,k) x^{n-k}. Defined for
/// exactly the degrees supplied; no extrapolation.
template <typename K>
DiffOp<K> extract(const std::vector<Polynomial<K>>& images, int N) {
    if (N < 0 || images.size() <= static_cast<size_t>(N))
        throw std::invalid_argument("extract: need images of x^0..x^N");
    DiffOp<K> op;
    op.pk.reserve(static_cast<size_t>(N) + 1);
    for (int n = 0; n <= N; ++n) {
        Polynomial<K> pn = images[static_cast<size_t>(n)];
        for (int k = 0; k < n; ++k) {
            // p_k(x) * D^k x^n / k! = p_k(x) * C(n,k) x^{n-k}
            const K c = K(binom(static_cast<unsigned long>(n), k));
            pn -= op.pk[static_cast<size_t>(k)] * Polynomial<K>::monomial(n - k, c);
        }
        op.pk.push_back(std::move(pn));
    }
    return op;
}

/// gamma_0..gamma_N of gamma0 * exp(-alpha/2 x^2 - beta x):
/// gamma_1 = -beta gamma_0, gamma_n = -beta gamma_{n-1} - alpha (n-1) gamma_{n-2}.
template <typename K>
GammaSeq<K> exp_gamma(const ExpOpParams<K>& params, int N) {
    if (params.alpha.is_zero() || params.gamma0.is_zero())
        throw std::invalid_argument("exp_gamma: alpha and gamma0 must be nonzero");
    if (N < 0) throw std::invalid_argument("exp_gamma: negative length");
    GammaSeq<K> g;
    g.gammas.reserve(static_cast<size_t>(N) + 1);
    g.gammas.push_back(params.gamma0);
    if (N >= 1) g.gammas.push_back(-params.beta * params.gamma0);
    for (int n = 2; n <= N; ++n)
        g.gammas.push_back(-params.beta * g[n - 1] -
                           params.alpha * K(static_cast<long>(n - 1)) * g[n - 2]);
    return g;
}

/// The gamma operator as a DiffOp with constant coefficient polynomials.
template <typename K>
DiffOp<K> to_diffop(const GammaSeq<K>& g) {
    DiffOp<K> op;
    op.pk.reserve(g.gammas.size());
    for (const K& gamma : g.gammas)
        op.pk.push_back(Polynomial<K>::constant(gamma));
    return op;
}

}  // namespace orthops
