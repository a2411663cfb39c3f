#include "orthops/rootcheck.hpp"

#include <cstddef>
#include <exception>
#include <stdexcept>
#include <string>

namespace orthops {

namespace {

// Integer-coefficient scalar multiple of p with coprime coefficients and
// the sign pattern preserved (the scaling factor is positive). Keeping the
// chain primitive stops coefficient blow-up in the Euclidean remainders
// without disturbing the sign data Sturm counting depends on.
PolyQ primitive_part(const PolyQ& p) {
    if (p.is_zero()) return p;
    mpz_class lcm_den(1);
    for (const Rational& c : p.coeffs()) {
        mpz_class d = c.denominator();
        mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), d.get_mpz_t());
    }
    mpz_class gcd_num(0);
    for (const Rational& c : p.coeffs()) {
        mpz_class scaled = c.numerator() * (lcm_den / c.denominator());
        mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), scaled.get_mpz_t());
    }
    return p * Rational(lcm_den, gcd_num);
}

PolyQ monic(const PolyQ& p) { return p.is_zero() ? p : p / p.leading(); }

// Signed-remainder chain of a squarefree polynomial, each member reduced to
// its primitive part. Sign variations V(x) drop zero entries, which makes
// V right-continuous, so V(a) - V(b) counts distinct roots in (a, b] with
// no caveats about roots sitting on an endpoint.
class SturmChain {
  public:
    static SturmChain build(const PolyQ& squarefree_poly) {
        SturmChain ch;
        ch.seq_.push_back(primitive_part(squarefree_poly));
        PolyQ next = primitive_part(derivative(ch.seq_.front()));
        while (!next.is_zero()) {
            ch.seq_.push_back(next);
            const PolyQ& a = ch.seq_[ch.seq_.size() - 2];
            next = primitive_part(-divmod(a, ch.seq_.back()).remainder);
        }
        return ch;
    }

    int variations_at(const Rational& x) const {
        int var = 0;
        int last = 0;
        for (const PolyQ& s : seq_) {
            const int sg = s(x).sign();
            if (sg == 0) continue;
            if (last != 0 && sg != last) ++var;
            last = sg;
        }
        return var;
    }

    // Number of distinct roots in the half-open interval (lo, hi].
    int count_in(const Rational& lo, const Rational& hi) const {
        return variations_at(lo) - variations_at(hi);
    }

    const PolyQ& front() const { return seq_.front(); }

  private:
    std::vector<PolyQ> seq_;
};

// Smallest power of two strictly above the Cauchy bound 1 + max|a_i|/|a_n|,
// so every real root lies in (-B, B] and bisection midpoints stay dyadic.
Rational dyadic_root_bound(const PolyQ& p) {
    Rational m(0);
    for (int i = 0; i < p.degree(); ++i) {
        Rational q = (p.coeff(i) / p.leading()).abs();
        if (q > m) m = q;
    }
    const Rational cauchy = Rational(1) + m;
    mpz_class ceil_bound;
    mpz_cdiv_q(ceil_bound.get_mpz_t(), cauchy.numerator().get_mpz_t(),
               cauchy.denominator().get_mpz_t());
    mpz_class pow2;
    mpz_ui_pow_ui(pow2.get_mpz_t(), 2,
                  mpz_sizeinbase(ceil_bound.get_mpz_t(), 2));
    return Rational(pow2);
}

struct Isolation {
    SturmChain chain;
    std::vector<std::pair<Rational, Rational>> intervals;  // (lo, hi], sorted
};

Isolation isolate_roots(const PolyQ& squarefree_poly) {
    Isolation iso{SturmChain::build(squarefree_poly), {}};
    const Rational bound = dyadic_root_bound(iso.chain.front());

    struct Frame {
        Rational lo, hi;
        int vlo, vhi;  // cached variation counts at lo / hi
    };
    std::vector<Frame> stack;
    {
        const Rational lo = -bound;
        const int vlo = iso.chain.variations_at(lo);
        const int vhi = iso.chain.variations_at(bound);
        if (vlo - vhi > 0) stack.push_back({lo, bound, vlo, vhi});
    }
    while (!stack.empty()) {
        Frame f = stack.back();
        stack.pop_back();
        if (f.vlo - f.vhi == 1) {
            iso.intervals.emplace_back(f.lo, f.hi);
            continue;
        }
        const Rational mid = (f.lo + f.hi) / Rational(2);
        const int vmid = iso.chain.variations_at(mid);
        // Right half pushed first so the stack pops left-to-right and the
        // collected intervals come out sorted.
        if (vmid - f.vhi > 0) stack.push_back({mid, f.hi, vmid, f.vhi});
        if (f.vlo - vmid > 0) stack.push_back({f.lo, mid, f.vlo, vmid});
    }
    return iso;
}

// Halve an isolating interval, keeping the half that holds the root.
void refine(const SturmChain& chain, std::pair<Rational, Rational>& iv) {
    const Rational mid = (iv.first + iv.second) / Rational(2);
    if (chain.count_in(iv.first, mid) == 1)
        iv.second = mid;
    else
        iv.first = mid;
}

bool intervals_overlap(const std::pair<Rational, Rational>& a,
                       const std::pair<Rational, Rational>& b) {
    // (a1, b1] and (a2, b2] intersect iff a1 < b2 and a2 < b1.
    return a.first < b.second && b.first < a.second;
}

}  // namespace

PolyQ poly_gcd(const PolyQ& a, const PolyQ& b) {
    PolyQ x = a;
    PolyQ y = b;
    while (!y.is_zero()) {
        PolyQ r = primitive_part(divmod(x, y).remainder);
        x = std::move(y);
        y = std::move(r);
    }
    return monic(x);
}

PolyQ squarefree(const PolyQ& p) {
    if (p.is_zero())
        throw std::invalid_argument("squarefree: zero polynomial");
    if (p.degree() == 0) return PolyQ::constant(Rational(1));
    const PolyQ g = poly_gcd(p, derivative(p));
    return monic(divmod(p, g).quotient);
}

RootReport count_real_roots(const PolyQ& p) {
    if (p.is_zero())
        throw std::invalid_argument("count_real_roots: zero polynomial");
    RootReport rep;
    rep.degree = p.degree();
    if (p.degree() == 0) {
        rep.all_roots_real = true;
        return rep;
    }
    const PolyQ sf = squarefree(p);
    Isolation iso = isolate_roots(sf);
    rep.distinct_real_roots = static_cast<int>(iso.intervals.size());
    rep.all_roots_real = rep.distinct_real_roots == sf.degree();
    rep.isolating_intervals = std::move(iso.intervals);
    return rep;
}

bool interlace(const PolyQ& p, const PolyQ& q) {
    if (p.is_zero() || q.is_zero())
        throw std::invalid_argument("interlace: zero polynomial");
    if (p.degree() != q.degree() + 1)
        throw std::invalid_argument(
            "interlace: require deg p = deg q + 1, got " +
            std::to_string(p.degree()) + " and " + std::to_string(q.degree()));

    const RootReport rp = count_real_roots(p);
    if (!rp.all_roots_real || rp.distinct_real_roots != p.degree())
        throw std::invalid_argument(
            "interlace: p is not real-rooted with distinct roots");
    const RootReport rq = count_real_roots(q);
    if (!rq.all_roots_real || rq.distinct_real_roots != q.degree())
        throw std::invalid_argument(
            "interlace: q is not real-rooted with distinct roots");
    if (q.degree() == 0) return true;  // no consecutive root pairs to test

    if (poly_gcd(p, q).degree() > 0) return false;  // shared root

    // Both polynomials are already squarefree (distinct roots), so their
    // own isolating intervals are pairwise disjoint. Refine until no
    // p-interval overlaps a q-interval; the gap between distinct roots is
    // positive, so halving terminates.
    Isolation ip = isolate_roots(p);
    Isolation iq = isolate_roots(q);
    for (bool overlapping = true; overlapping;) {
        overlapping = false;
        for (auto& a : ip.intervals)
            for (auto& b : iq.intervals)
                if (intervals_overlap(a, b)) {
                    refine(ip.chain, a);
                    refine(iq.chain, b);
                    overlapping = true;
                }
    }

    // Merge by position and demand strict alternation p, q, p, ..., p.
    std::size_t i = 0;
    std::size_t j = 0;
    int expect_p = 1;
    while (i < ip.intervals.size() || j < iq.intervals.size()) {
        const bool take_p =
            j == iq.intervals.size() ||
            (i < ip.intervals.size() &&
             ip.intervals[i].second <= iq.intervals[j].first);
        if (take_p != (expect_p == 1)) return false;
        if (take_p)
            ++i;
        else
            ++j;
        expect_p = 1 - expect_p;
    }
    return i == ip.intervals.size() && j == iq.intervals.size();
}

bool preservation_test(const ExpOpParams<Rational>& params, const PolyQ& f) {
    if (params.gamma0.is_zero())
        throw std::invalid_argument("preservation_test: gamma0 must be nonzero");
    if (!(params.alpha > Rational(0)))
        throw std::invalid_argument("preservation_test: alpha must be positive");
    if (f.is_zero())
        throw std::invalid_argument("preservation_test: f must be nonzero");
    if (f.degree() == 0) return true;
    if (!count_real_roots(f).all_roots_real)
        throw std::invalid_argument("preservation_test: f is not real-rooted");

    const GammaSeq<Rational> g = exp_gamma(params, f.degree());
    const PolyQ image = apply(to_diffop(g), f);
    return count_real_roots(image).all_roots_real;
}

namespace {

// Shared driver for the batch kernels: the loop body is identical, only the
// OpenMP pragma differs, and exceptions from worker iterations are carried
// out of the parallel region and rethrown.
template <typename In, typename Out, typename Fn>
std::vector<Out> batch_map(const std::vector<In>& in, Fn fn, bool parallel) {
    std::vector<Out> out(in.size());
    std::exception_ptr err = nullptr;
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(in.size());
    if (parallel) {
#pragma omp parallel for schedule(dynamic)
        for (std::ptrdiff_t i = 0; i < n; ++i) {
            try {
                out[static_cast<std::size_t>(i)] = fn(in[static_cast<std::size_t>(i)]);
            } catch (...) {
#pragma omp critical
                if (!err) err = std::current_exception();
            }
        }
    } else {
        for (std::ptrdiff_t i = 0; i < n; ++i) {
            try {
                out[static_cast<std::size_t>(i)] = fn(in[static_cast<std::size_t>(i)]);
            } catch (...) {
                if (!err) err = std::current_exception();
            }
        }
    }
    if (err) std::rethrow_exception(err);
    return out;
}

RootReport count_one(const PolyQ& p) { return count_real_roots(p); }

unsigned char preserve_one(const PreservationCase& c) {
    return preservation_test(c.params, c.f) ? 1 : 0;
}

}  // namespace

std::vector<RootReport> count_real_roots_batch(const std::vector<PolyQ>& ps) {
    return batch_map<PolyQ, RootReport>(ps, count_one, true);
}

std::vector<RootReport> count_real_roots_batch_serial(const std::vector<PolyQ>& ps) {
    return batch_map<PolyQ, RootReport>(ps, count_one, false);
}

std::vector<unsigned char> preservation_batch(const std::vector<PreservationCase>& cases) {
    return batch_map<PreservationCase, unsigned char>(cases, preserve_one, true);
}

std::vector<unsigned char> preservation_batch_serial(const std::vector<PreservationCase>& cases) {
    return batch_map<PreservationCase, unsigned char>(cases, preserve_one, false);
}

}  // namespace orthops
