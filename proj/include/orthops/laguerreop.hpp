#pragma once

#include <vector>

#include "orthops/diffop.hpp"
#include "orthops/poly.hpp"
#include "orthops/rational.hpp"

namespace orthops {

/// Closed-form coefficient a_r = (-1)^r sum_{l=0}^r C(r,l)/l!.
/// a_0 = 1 and the sign alternates with r.
Rational a_closed(int r);

/// The same coefficient from the recursion
/// a_r = (-1)^r/r! - sum_{k=0}^{r-1} C(r,k) a_k, seeded with a_0 = 1.
/// Kept fully independent of a_closed so the two can cross-check.
Rational a_recursive(int r);

/// Operator polynomial p_n(x) = sum_{r=0}^n C(n,r) a_r x^r, built from the
/// closed form.
PolyQ build_p(int n);

/// The operator with polynomials p_0..p_N, whose images of x^n are the
/// standard Laguerre polynomials.
DiffOp<Rational> laguerre_op(int N);

/// Direct double-sum evaluation of
/// sum_{k=0}^r sum_{l=0}^k C(r,k) C(k,l) (-1)^k / l!  ==  (-1)^r / r!.
bool identity_check(int r);

struct TheoremCheck {
    bool ok = true;
    int first_violation = -1;

    explicit operator bool() const { return ok; }
};

/// Checks apply(laguerre_op(N), x^n) == laguerre(0, n) exactly for all
/// n <= N. Degrees are independent once the operator is built, so they are
/// checked concurrently; the serial variant is the reference.
TheoremCheck verify_theorem(int N);
TheoremCheck verify_theorem_serial(int N);

}  // namespace orthops
