#pragma once

#include "pitune/model.hpp"
#include "pitune/roots.hpp"

#include <array>
#include <vector>

namespace pitune {

struct ClosedLoopReport {
    /// Monic closed-loop characteristic cubic, coefficients ascending.
    Polynomial char_poly;
    /// All three closed-loop poles, with multiplicity, sorted by (re, im).
    std::vector<Complex> poles;
    /// True iff some pole sits on the controller zero -1/ti to relative 1e-8.
    bool cancellation_detected = false;
    /// Absolute mismatch of the root sum, pairwise-product sum, and product
    /// against the coefficient-side values they must equal.
    std::array<double, 3> vieta_residuals{};
};

/// Monic cubic s^3 + (1/t1 + 1/t2) s^2 + (1 + k*kp)/(t1*t2) s + k*kp/(t1*t2*ti).
Polynomial characteristic_poly(const Plant& plant, const PiController& ctrl);

/// Raw series product controller * plant, uncancelled.
RationalTF loop_tf(const Plant& plant, const PiController& ctrl);

/// Unity feedback around loop_tf. The shared constant term makes the DC gain
/// exactly 1 for every valid plant and controller.
RationalTF closed_loop(const Plant& plant, const PiController& ctrl);

ClosedLoopReport analyze_closed_loop(const Plant& plant, const PiController& ctrl);

}  // namespace pitune
