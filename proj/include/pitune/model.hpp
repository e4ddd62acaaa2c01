#pragma once

#include "pitune/transfer_function.hpp"

namespace pitune {

/// Stable second-order process kp / ((1 + s*t1)(1 + s*t2)).
/// Construction orders the time constants so t1 >= t2 always holds; t1 is the
/// slow pole the controller zero will be placed on.
class Plant {
public:
    Plant(double kp, double t1, double t2);

    double kp() const { return kp_; }
    double t1() const { return t1_; }
    double t2() const { return t2_; }

private:
    double kp_;
    double t1_;
    double t2_;
};

/// PI controller k * (1 + 1/(s*ti)).
class PiController {
public:
    PiController(double k, double ti);

    double k() const { return k_; }
    double ti() const { return ti_; }

private:
    double k_;
    double ti_;
};

struct SecondOrderParams {
    double zeta;
    double wn;
};

/// Closed-form gains k = t1 / (4 * kp * t2), ti = t1. Cancelling the slow pole
/// and critically damping the remaining loop, this leaves the repeated
/// closed-loop pole at -1/(2*t2).
PiController tune_pi(const Plant& plant);

/// Damping ratio and natural frequency of the loop after the controller zero
/// cancels the slow pole: zeta = sqrt(t1*t2) / (2*t2*sqrt(k*kp)),
/// wn = sqrt(k*kp / (t1*t2)). Valid only when ti matches t1 to relative 1e-12;
/// throws CancellationRequired otherwise.
SecondOrderParams damping_params(const Plant& plant, const PiController& ctrl);

RationalTF plant_tf(const Plant& plant);
RationalTF controller_tf(const PiController& ctrl);

}  // namespace pitune
