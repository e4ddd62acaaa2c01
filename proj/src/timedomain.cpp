#include "pitune/timedomain.hpp"

#include "pitune/errors.hpp"
#include "pitune/roots.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pitune {

namespace {

double final_value(const StepResponse& r) {
    const auto n = static_cast<Eigen::Index>(r.samples.size());
    const Eigen::Index tail = std::max<Eigen::Index>(1, n / 100);
    return Eigen::Map<const Eigen::VectorXd>(r.samples.data(), n).tail(tail).mean();
}

}  // namespace

StepResponse simulate_step(const RationalTF& g, double dt, double horizon) {
    const bool proper =
        g.num.is_zero() ? g.den.degree() >= 1 : g.num.degree() < g.den.degree();
    if (!proper) {
        throw NotStrictlyProper("simulate_step: numerator degree must be below denominator degree");
    }
    if (!(dt > 0.0)) {
        throw std::invalid_argument("simulate_step: dt must be > 0");
    }
    if (!(horizon >= 10.0 * dt)) {
        throw std::invalid_argument("simulate_step: horizon must be at least 10 * dt");
    }

    for (Complex p : poly_roots(g.den)) {
        if (p.real() > 1e-12) {
            throw UnstableSystem("simulate_step: pole with positive real part at re = " +
                                 std::to_string(p.real()));
        }
    }

    // Controllable canonical realization of the monic-denominator form:
    // x' = A x + B u, y = C x, with A the companion matrix of den.
    const int n = g.den.degree();
    const double lead = g.den.leading();
    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i + 1 < n; ++i) {
        A(i, i + 1) = 1.0;
    }
    for (int j = 0; j < n; ++j) {
        A(n - 1, j) = -g.den[j] / lead;
    }
    Eigen::VectorXd B = Eigen::VectorXd::Zero(n);
    B[n - 1] = 1.0;
    Eigen::RowVectorXd C = Eigen::RowVectorXd::Zero(n);
    for (int j = 0; j < n; ++j) {
        C[j] = g.num[j] / lead;
    }

    const auto steps = static_cast<std::size_t>(std::llround(horizon / dt));
    StepResponse r;
    r.dt = dt;
    r.samples.reserve(steps + 1);

    Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
    r.samples.push_back(0.0);
    for (std::size_t k = 0; k < steps; ++k) {
        const Eigen::VectorXd k1 = A * x + B;
        const Eigen::VectorXd k2 = A * (x + 0.5 * dt * k1) + B;
        const Eigen::VectorXd k3 = A * (x + 0.5 * dt * k2) + B;
        const Eigen::VectorXd k4 = A * (x + dt * k3) + B;
        x += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        r.samples.push_back(C.dot(x));
    }
    return r;
}

double analytic_step_tuned(double t2, double t) {
    if (!(t2 > 0.0)) {
        throw std::invalid_argument("analytic_step_tuned: t2 must be > 0");
    }
    if (!(t >= 0.0)) {
        throw std::invalid_argument("analytic_step_tuned: t must be >= 0");
    }
    const double tau = t / (2.0 * t2);
    return 1.0 - std::exp(-tau) * (1.0 + tau);
}

double settling_time(const StepResponse& r, double band) {
    if (!(band > 0.0 && band < 1.0)) {
        throw std::invalid_argument("settling_time: band must lie in (0, 1)");
    }
    const double y_final = final_value(r);
    if (std::abs(y_final - 1.0) > band) {
        throw NotSettled("settling_time: tail mean " + std::to_string(y_final) +
                         " is not within the band around 1");
    }
    const double tol = band * std::abs(y_final);
    std::size_t first_inside = r.samples.size();
    for (std::size_t k = r.samples.size(); k-- > 0;) {
        if (std::abs(r.samples[k] - y_final) > tol) {
            break;
        }
        first_inside = k;
    }
    if (first_inside == r.samples.size()) {
        throw NotSettled("settling_time: response never stays inside the band");
    }
    return static_cast<double>(first_inside) * r.dt;
}

double percent_overshoot(const StepResponse& r) {
    const double y_final = final_value(r);
    const double peak = *std::max_element(r.samples.begin(), r.samples.end());
    return std::max(0.0, (peak - y_final) / y_final) * 100.0;
}

bool is_monotonic(const StepResponse& r, double tol) {
    if (!(tol >= 0.0)) {
        throw std::invalid_argument("is_monotonic: tol must be >= 0");
    }
    for (std::size_t k = 0; k + 1 < r.samples.size(); ++k) {
        if (r.samples[k + 1] < r.samples[k] - tol) {
            return false;
        }
    }
    return true;
}

double settling_constant(double band) {
    if (!(band > 0.0 && band < 1.0)) {
        throw std::invalid_argument("settling_constant: band must lie in (0, 1)");
    }
    // exp(-tau)*(1+tau) falls monotonically from 1 to ~1e-41 on [0, 100],
    // so the bracket always holds for band in (0, 1).
    double lo = 0.0;
    double hi = 100.0;
    while (hi - lo > 1e-10) {
        const double mid = 0.5 * (lo + hi);
        if (std::exp(-mid) * (1.0 + mid) > band) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

StepMetrics step_metrics(const StepResponse& r, double band) {
    return {
        .ts = settling_time(r, band),
        .po = percent_overshoot(r),
        .monotonic = is_monotonic(r),
    };
}

}  // namespace pitune
