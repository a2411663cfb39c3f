#pragma once

#include <utility>
#include <vector>

#include "orthops/diffop.hpp"
#include "orthops/poly.hpp"
#include "orthops/rational.hpp"

namespace orthops {

/// Exact real-root census of a polynomial with rational coefficients.
/// Counting happens on the squarefree part, so distinct_real_roots ignores
/// multiplicities; all_roots_real says every complex root (with
/// multiplicity) is real. Degree-0 polynomials are vacuously real-rooted.
struct RootReport {
    int degree = 0;
    int distinct_real_roots = 0;
    bool all_roots_real = false;
    std::vector<std::pair<Rational, Rational>> isolating_intervals;  // (lo, hi], sorted

    bool operator==(const RootReport&) const = default;
};

/// Monic gcd over the rationals; zero only when both inputs are zero.
PolyQ poly_gcd(const PolyQ& a, const PolyQ& b);

/// Monic squarefree part p / gcd(p, p'). Throws on the zero polynomial.
PolyQ squarefree(const PolyQ& p);

/// Distinct real roots counted by a Sturm chain, with one isolating
/// interval per root found by bisection inside a power-of-two Cauchy bound.
/// All interval endpoints are dyadic. Throws on the zero polynomial.
RootReport count_real_roots(const PolyQ& p);

/// Strict interlacing: between consecutive roots of p lies exactly one root
/// of q, with deg p = deg q + 1. Both inputs must be real-rooted with
/// distinct roots (throws otherwise); a shared root yields false.
bool interlace(const PolyQ& p, const PolyQ& q);

/// Applies gamma0 e^{-alpha/2 D^2 - beta D} to f and reports whether the
/// image is real-rooted. Preconditions checked and reported distinctly:
/// alpha > 0, gamma0 nonzero, f nonzero and real-rooted.
bool preservation_test(const ExpOpParams<Rational>& params, const PolyQ& f);

struct PreservationCase {
    ExpOpParams<Rational> params;
    PolyQ f;
};

// Batch kernels. Elements are independent, so the primary versions fan out
// with OpenMP; the *_serial twins are the reference the agreement tests and
// the benchmark compare against.
std::vector<RootReport> count_real_roots_batch(const std::vector<PolyQ>& ps);
std::vector<RootReport> count_real_roots_batch_serial(const std::vector<PolyQ>& ps);
std::vector<unsigned char> preservation_batch(const std::vector<PreservationCase>& cases);
std::vector<unsigned char> preservation_batch_serial(const std::vector<PreservationCase>& cases);

}  // namespace orthops
