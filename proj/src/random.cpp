#include "orthops/random.hpp"

#include <algorithm>
#include <stdexcept>

namespace orthops {

long Rng::uniform(long lo, long hi) {
    if (lo > hi) throw std::invalid_argument("Rng::uniform: empty range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(engine_() % span);
}

Rational random_rational(Rng& rng, long mag, long den_mag) {
    return Rational(rng.uniform(-mag, mag), rng.uniform(1, den_mag));
}

Rational random_nonzero_rational(Rng& rng, long mag, long den_mag) {
    Rational r = random_rational(rng, mag, den_mag);
    while (r.is_zero()) r = random_rational(rng, mag, den_mag);
    return r;
}

Rational random_positive_rational(Rng& rng, long mag, long den_mag) {
    return Rational(rng.uniform(1, mag), rng.uniform(1, den_mag));
}

GaussianRational random_gaussian(Rng& rng, long mag, long den_mag) {
    return GaussianRational(random_rational(rng, mag, den_mag),
                            random_rational(rng, mag, den_mag));
}

GaussianRational random_nonzero_gaussian(Rng& rng, long mag, long den_mag) {
    GaussianRational g = random_gaussian(rng, mag, den_mag);
    while (g.is_zero()) g = random_gaussian(rng, mag, den_mag);
    return g;
}

PolyQ random_poly(Rng& rng, int degree, long mag) {
    if (degree < 0) throw std::invalid_argument("random_poly: negative degree");
    std::vector<Rational> c(static_cast<std::size_t>(degree) + 1);
    for (auto& ci : c) ci = random_rational(rng, mag);
    c.back() = random_nonzero_rational(rng, mag);
    return PolyQ(std::move(c));
}

PolyGQ random_poly_gaussian(Rng& rng, int degree, long mag) {
    if (degree < 0)
        throw std::invalid_argument("random_poly_gaussian: negative degree");
    std::vector<GaussianRational> c(static_cast<std::size_t>(degree) + 1);
    for (auto& ci : c) ci = random_gaussian(rng, mag);
    c.back() = random_nonzero_gaussian(rng, mag);
    return PolyGQ(std::move(c));
}

RealRootedSample random_real_rooted(Rng& rng, int degree, long root_mag) {
    if (degree < 0)
        throw std::invalid_argument("random_real_rooted: negative degree");
    RealRootedSample s;
    s.poly = PolyQ::constant(random_nonzero_rational(rng, 5, 3));
    for (int i = 0; i < degree; ++i) {
        Rational root;
        // Reuse an earlier root about a quarter of the time to create
        // multiplicities; otherwise draw a fresh rational root.
        if (!s.roots.empty() && rng.chance(1, 4))
            root = s.roots[static_cast<std::size_t>(
                rng.uniform(0, static_cast<long>(s.roots.size()) - 1))];
        else
            root = random_rational(rng, root_mag);
        s.roots.push_back(root);
        s.poly *= PolyQ({-root, Rational(1)});
    }
    std::sort(s.roots.begin(), s.roots.end());
    return s;
}

}  // namespace orthops
