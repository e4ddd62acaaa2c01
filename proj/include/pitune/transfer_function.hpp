#pragma once

#include "pitune/polynomial.hpp"

namespace pitune {

/// Ratio of two real polynomials in s. The denominator is never the zero
/// polynomial, and no pole-zero cancellation is ever performed implicitly:
/// num and den keep exactly the factors they were built from.
struct RationalTF {
    RationalTF() : num({0.0}), den({1.0}) {}
    RationalTF(Polynomial numerator, Polynomial denominator);

    Polynomial num;
    Polynomial den;
};

/// Frequency response num(jw)/den(jw).
/// Throws EvalAtPole when |den(jw)| falls below the absolute floor 1e-300.
Complex tf_eval(const RationalTF& g, double omega);

/// Cascade a*b as raw polynomial products, uncancelled.
RationalTF tf_series(const RationalTF& a, const RationalTF& b);

/// Unity negative feedback around l: num_l / (num_l + den_l).
RationalTF tf_unity_feedback(const RationalTF& l);

}  // namespace pitune
