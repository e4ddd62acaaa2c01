#pragma once

#include "pitune/polynomial.hpp"

#include <vector>

namespace pitune {

/// All roots of p with multiplicity, for degree 1, 2 or 3.
///
/// Quadratics use the cancellation-free formula (larger-magnitude root first,
/// the other from the product of roots). Cubics locate one real root by
/// safeguarded bisection/Newton on a Cauchy bracket, deflate, and solve the
/// remaining quadratic; root clusters are then re-polished through p' / p'' so
/// exact double and triple roots come back at full precision instead of the
/// O(eps^(1/2)) / O(eps^(1/3)) scatter plain deflation leaves.
///
/// Every returned root r satisfies
///   |p(r)| <= 1e-9 * max|coeff| * max(1, |r|)^degree.
/// Roots are sorted by real part, then imaginary part.
///
/// Throws DegreeUnsupported for degree 0 (or the zero polynomial) and for
/// degree > 3.
std::vector<Complex> poly_roots(const Polynomial& p);

}  // namespace pitune
