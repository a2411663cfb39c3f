#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "orthops/poly.hpp"
#include "orthops/rational.hpp"

namespace orthops {

/// Deterministic random source for the property suites. std::mt19937_64 has
/// a fully specified output sequence, and values are reduced by modulo
/// rather than std::uniform_int_distribution (whose mapping is
/// implementation-defined), so a given seed produces identical streams on
/// every platform. The modulo bias is irrelevant for test-case generation.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform-ish integer in [lo, hi], inclusive. Requires lo <= hi.
    long uniform(long lo, long hi);

    /// True with probability num/den.
    bool chance(long num, long den) { return uniform(1, den) <= num; }

  private:
    std::mt19937_64 engine_;
};

/// Rational with numerator in [-mag, mag] and denominator in [1, den_mag].
Rational random_rational(Rng& rng, long mag, long den_mag = 4);
Rational random_nonzero_rational(Rng& rng, long mag, long den_mag = 4);
Rational random_positive_rational(Rng& rng, long mag, long den_mag = 4);

GaussianRational random_gaussian(Rng& rng, long mag, long den_mag = 4);
GaussianRational random_nonzero_gaussian(Rng& rng, long mag, long den_mag = 4);

/// Dense polynomial of exactly the given degree (nonzero leading term).
PolyQ random_poly(Rng& rng, int degree, long mag = 6);
PolyGQ random_poly_gaussian(Rng& rng, int degree, long mag = 6);

/// Real-rooted polynomial built as a scalar times a product of rational
/// linear factors. Roots repeat occasionally, so multiplicities > 1 are
/// exercised. Also returns the chosen roots (with multiplicity, sorted).
struct RealRootedSample {
    PolyQ poly;
    std::vector<Rational> roots;
};
RealRootedSample random_real_rooted(Rng& rng, int degree, long root_mag = 6);

}  // namespace orthops
