#include "pitune/freqdomain.hpp"

#include "pitune/errors.hpp"
#include "pitune/loop.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace pitune {

namespace {

double magnitude(const RationalTF& g, double omega) {
    return std::abs(tf_eval(g, omega));
}

// Golden-section maximum of |g| on [lo, hi] in log frequency; assumes the
// magnitude is unimodal on the bracket, which grid preselection guarantees
// for the rational functions handled here.
MagnitudePeak golden_section_peak(const RationalTF& g, double lo, double hi) {
    constexpr double inv_phi = 0.6180339887498949;
    double a = std::log(lo);
    double b = std::log(hi);
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = magnitude(g, std::exp(x1));
    double f2 = magnitude(g, std::exp(x2));
    while (b - a > 1e-10) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = magnitude(g, std::exp(x2));
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = magnitude(g, std::exp(x1));
        }
    }
    const double omega = std::exp(0.5 * (a + b));
    return {.peak = magnitude(g, omega), .omega_at = omega};
}

// Gain-crossover bracket scan: the first adjacent grid pair where |l| passes
// down through 1 on a coarse log grid over [1e-9, 1e9].
double auto_crossover(const RationalTF& l) {
    constexpr double lo = 1e-9;
    constexpr double hi = 1e9;
    constexpr int per_decade = 16;
    const int n = static_cast<int>(per_decade * std::log10(hi / lo)) + 1;
    double prev_omega = lo;
    double prev_mag = magnitude(l, lo);
    for (int i = 1; i < n; ++i) {
        const double omega = lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1));
        const double mag = magnitude(l, omega);
        if (mag == 1.0) {
            return omega;
        }
        if (prev_mag > 1.0 && mag < 1.0) {
            return gain_crossover(l, prev_omega, omega);
        }
        prev_omega = omega;
        prev_mag = mag;
    }
    throw NotBracketed("phase_margin: no gain crossover found in [1e-9, 1e9]");
}

}  // namespace

RationalTF sensitivity_tf(const RationalTF& l) {
    return {l.den, l.num + l.den};
}

RationalTF comp_sensitivity_tf(const RationalTF& l) {
    return tf_unity_feedback(l);
}

MagnitudePeak magnitude_peak(const RationalTF& g, double omega_lo, double omega_hi) {
    if (!(omega_lo > 0.0) || !(omega_hi > omega_lo) || !std::isfinite(omega_hi)) {
        throw InvalidRange("magnitude_peak: need 0 < omega_lo < omega_hi, finite");
    }

    const double decades = std::log10(omega_hi / omega_lo);
    const int n = std::max(2001, static_cast<int>(2000.0 * decades) + 1);
    int best = 0;
    double best_mag = -1.0;
    std::vector<double> grid(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        grid[i] = omega_lo * std::pow(omega_hi / omega_lo, static_cast<double>(i) / (n - 1));
        const double mag = magnitude(g, grid[i]);
        if (mag > best_mag) {
            best_mag = mag;
            best = i;
        }
    }

    if (best == 0 || best == n - 1) {
        return {.peak = best_mag, .omega_at = grid[best]};
    }
    const MagnitudePeak refined = golden_section_peak(g, grid[best - 1], grid[best + 1]);
    if (refined.peak >= best_mag) {
        return refined;
    }
    return {.peak = best_mag, .omega_at = grid[best]};
}

double closed_form_sensitivity_mag(double u) {
    if (!(u >= 0.0)) {
        throw std::invalid_argument("closed_form_sensitivity_mag: u must be >= 0");
    }
    return 4.0 * u * std::sqrt(1.0 + u * u) / (1.0 + 4.0 * u * u);
}

double gain_crossover(const RationalTF& l, double omega_lo, double omega_hi) {
    if (!(omega_lo > 0.0) || !(omega_hi > omega_lo)) {
        throw InvalidRange("gain_crossover: need 0 < omega_lo < omega_hi");
    }
    if (!(magnitude(l, omega_lo) > 1.0) || !(magnitude(l, omega_hi) < 1.0)) {
        throw NotBracketed("gain_crossover: need |l| > 1 at omega_lo and |l| < 1 at omega_hi");
    }
    double lo = std::log(omega_lo);
    double hi = std::log(omega_hi);
    double omega = std::exp(0.5 * (lo + hi));
    for (int iter = 0; iter < 200; ++iter) {
        const double mag = magnitude(l, omega);
        if (std::abs(mag - 1.0) <= 1e-10) {
            break;
        }
        if (mag > 1.0) {
            lo = std::log(omega);
        } else {
            hi = std::log(omega);
        }
        omega = std::exp(0.5 * (lo + hi));
    }
    return omega;
}

double unwrapped_phase_deg(const RationalTF& g, double omega) {
    if (!(omega > 0.0)) {
        throw InvalidRange("unwrapped_phase_deg: omega must be > 0");
    }
    constexpr double rad_to_deg = 180.0 / std::numbers::pi;
    constexpr int per_decade = 100;
    constexpr double span_decades = 6.0;
    const int n = static_cast<int>(per_decade * span_decades) + 1;
    const double start = omega / std::pow(10.0, span_decades);

    double phase = rad_to_deg * std::arg(tf_eval(g, start));
    double prev_principal = phase;
    for (int i = 1; i < n; ++i) {
        const double w = start * std::pow(omega / start, static_cast<double>(i) / (n - 1));
        const double principal = rad_to_deg * std::arg(tf_eval(g, w));
        double delta = principal - prev_principal;
        while (delta > 180.0) {
            delta -= 360.0;
        }
        while (delta <= -180.0) {
            delta += 360.0;
        }
        phase += delta;
        prev_principal = principal;
    }
    return phase;
}

double phase_margin(const RationalTF& l) {
    const double wgc = auto_crossover(l);
    return 180.0 + unwrapped_phase_deg(l, wgc);
}

std::vector<FreqSample> nyquist_points(const RationalTF& g,
                                       const std::vector<double>& omega_grid) {
    std::vector<FreqSample> out;
    out.reserve(omega_grid.size());
    double prev = 0.0;
    for (double omega : omega_grid) {
        if (!(omega > prev)) {
            throw InvalidRange("nyquist_points: grid must be strictly positive and ascending");
        }
        out.push_back({.omega = omega, .value = tf_eval(g, omega)});
        prev = omega;
    }
    return out;
}

FreqMetrics robustness_report(const Plant& plant, const PiController& ctrl) {
    const RationalTF l = loop_tf(plant, ctrl);
    const RationalTF s = sensitivity_tf(l);
    const RationalTF t = comp_sensitivity_tf(l);
    const double t2 = plant.t2();
    const double wgc = auto_crossover(l);
    // |T| of the tuned loop peaks at the w -> 0 boundary, so its search range
    // reaches far enough down for the grid endpoint to carry |T| = 1 to 1e-9.
    return {
        .ms = magnitude_peak(s, 1e-3 / t2, 1e3 / t2).peak,
        .mt = magnitude_peak(t, 1e-6 / t2, 1e3 / t2).peak,
        .pm_deg = 180.0 + unwrapped_phase_deg(l, wgc),
        .wgc = wgc,
    };
}

}  // namespace pitune
