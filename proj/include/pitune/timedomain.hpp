#pragma once

#include "pitune/transfer_function.hpp"

#include <vector>

namespace pitune {

/// Uniformly sampled step response; samples[k] is y(k * dt), samples[0] = y(0).
struct StepResponse {
    double dt = 0.0;
    std::vector<double> samples;
};

struct StepMetrics {
    double ts = 0.0;
    double po = 0.0;
    bool monotonic = false;
};

/// Unit-step response of a strictly proper g (den degree <= 3) by classical
/// fixed-step fourth-order Runge-Kutta on the controllable-canonical
/// realization. Throws NotStrictlyProper, and UnstableSystem when any pole
/// has real part > 1e-12.
StepResponse simulate_step(const RationalTF& g, double dt, double horizon);

/// Closed form 1 - exp(-t/(2*t2)) * (1 + t/(2*t2)): the step response of the
/// tuned closed loop 1/(1 + 2*t2*s)^2.
double analytic_step_tuned(double t2, double t);

/// Smallest grid time after which the response stays within band * |y_final|
/// of its final value, where y_final is the mean of the last 1% of samples.
/// Throws NotSettled when the tail has not converged to within band of 1.
double settling_time(const StepResponse& r, double band);

/// max(0, (peak - y_final) / y_final) * 100, y_final as in settling_time.
double percent_overshoot(const StepResponse& r);

/// True iff y[k+1] >= y[k] - tol for every consecutive pair. The default tol
/// absorbs integrator rounding wobble while rejecting genuine dips.
bool is_monotonic(const StepResponse& r, double tol = 1e-9);

/// The constant tau solving exp(-tau) * (1 + tau) = band, by bisection on
/// [0, 100] to absolute 1e-10. The tuned loop then settles at 2 * t2 * tau.
double settling_constant(double band);

/// Bundles settling time, overshoot, and monotonicity for one response.
StepMetrics step_metrics(const StepResponse& r, double band);

}  // namespace pitune
