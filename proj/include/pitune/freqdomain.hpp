#pragma once

#include "pitune/model.hpp"

#include <vector>

namespace pitune {

struct FreqMetrics {
    /// Peak of |S(jw)|, the maximum sensitivity.
    double ms = 0.0;
    /// Peak of |T(jw)|, the complementary sensitivity peak.
    double mt = 0.0;
    double pm_deg = 0.0;
    /// Gain-crossover frequency, |L(jw)| = 1.
    double wgc = 0.0;
};

struct FreqSample {
    double omega = 0.0;
    Complex value;
};

struct MagnitudePeak {
    double peak = 0.0;
    double omega_at = 0.0;
};

/// Sensitivity 1/(1+l) as raw polynomials: den_l / (num_l + den_l).
RationalTF sensitivity_tf(const RationalTF& l);

/// Complementary sensitivity l/(1+l); identical to tf_unity_feedback.
RationalTF comp_sensitivity_tf(const RationalTF& l);

/// Largest |g(jw)| over [omega_lo, omega_hi]: a logarithmic grid of at least
/// 2000 points followed by golden-section refinement to relative frequency
/// tolerance 1e-10. An argmax on the first or last grid point is returned
/// as that endpoint (the supremum of a monotone magnitude sits on the
/// boundary). Throws InvalidRange unless 0 < omega_lo < omega_hi.
MagnitudePeak magnitude_peak(const RationalTF& g, double omega_lo, double omega_hi);

/// Sensitivity magnitude of the tuned loop in the normalized frequency
/// u = w * t2: 4u * sqrt(1 + u^2) / (1 + 4u^2).
double closed_form_sensitivity_mag(double u);

/// Frequency where |l(jw)| = 1, by bisection on log frequency to |mag - 1|
/// below 1e-10. Requires |l| > 1 at omega_lo and < 1 at omega_hi; throws
/// NotBracketed otherwise.
double gain_crossover(const RationalTF& l, double omega_lo, double omega_hi);

/// Loop phase at omega in degrees, unwrapped continuously along a dense log
/// grid climbing from omega/1e6, where the principal value is already on the
/// correct branch for any loop whose low-frequency phase sits in (-180, 180).
double unwrapped_phase_deg(const RationalTF& g, double omega);

/// 180 degrees plus the unwrapped loop phase at the gain crossover, which is
/// located automatically by scanning [1e-9, 1e9] for the |l| = 1 bracket.
double phase_margin(const RationalTF& l);

/// tf_eval at each grid frequency; the grid must be strictly positive and
/// ascending.
std::vector<FreqSample> nyquist_points(const RationalTF& g,
                                       const std::vector<double>& omega_grid);

/// Ms, Mt, phase margin, and gain crossover of the loop formed by ctrl and
/// plant, each found by numeric search on the raw transfer functions.
FreqMetrics robustness_report(const Plant& plant, const PiController& ctrl);

}  // namespace pitune
