#pragma once

#include <vector>

#include "cliffordix/curve_data.hpp"

namespace cliffordix {

// Numerical type of a hypothetical semistable bundle: rank, degree, and the
// number of independent sections. Nothing sheaf-like is ever stored.
struct BundleClass {
    Int n = 1;
    Int d = 0;
    Int h0 = 0;

    Rational slope() const { return Rational(d, n); }
};

// gamma(E) = (d - 2(h0 - n)) / n, exactly.
Rational gamma_of(const BundleClass& b);

// The numerical type of the twisted dual: same rank, degree n(2g-2) - d,
// and the section count forced by Riemann-Roch. gamma is preserved.
// Throws DomainError when the input would force a negative h^1.
BundleClass serre_dual(const BundleClass& b, Int genus);

// Result of running the necessary-condition catalog at fixed (n, d):
// the least upper bound on h^0, the ids of the rules achieving it, and the
// rules that were skipped because the curve data could not certify their
// hypotheses.
struct H0Bound {
    Int bound = 0;
    std::vector<std::string> sources;
    std::vector<std::string> skipped;
};

H0Bound h0_upper(const Curve& curve, Int n, Int d);

} // namespace cliffordix
