#include "pitune/model.hpp"

#include "pitune/errors.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace pitune {

namespace {

void require_positive(double value, const char* message) {
    if (!(value > 0.0) || !std::isfinite(value)) {
        throw std::invalid_argument(message);
    }
}

}  // namespace

Plant::Plant(double kp, double t1, double t2) : kp_(kp), t1_(t1), t2_(t2) {
    require_positive(kp_, "kp must be > 0");
    require_positive(t1_, "t1 must be > 0");
    require_positive(t2_, "t2 must be > 0");
    if (t1_ < t2_) {
        std::swap(t1_, t2_);
    }
}

PiController::PiController(double k, double ti) : k_(k), ti_(ti) {
    require_positive(k_, "k must be > 0");
    require_positive(ti_, "ti must be > 0");
}

PiController tune_pi(const Plant& plant) {
    return {plant.t1() / (4.0 * plant.kp() * plant.t2()), plant.t1()};
}

SecondOrderParams damping_params(const Plant& plant, const PiController& ctrl) {
    if (std::abs(ctrl.ti() - plant.t1()) > 1e-12 * plant.t1()) {
        throw CancellationRequired(
            "damping_params: ti must equal t1 (controller zero on the slow pole)");
    }
    const double kkp = ctrl.k() * plant.kp();
    return {
        .zeta = std::sqrt(plant.t1() * plant.t2()) / (2.0 * plant.t2() * std::sqrt(kkp)),
        .wn = std::sqrt(kkp / (plant.t1() * plant.t2())),
    };
}

RationalTF plant_tf(const Plant& plant) {
    return {Polynomial{plant.kp()},
            Polynomial{1.0, plant.t1() + plant.t2(), plant.t1() * plant.t2()}};
}

RationalTF controller_tf(const PiController& ctrl) {
    return {Polynomial{ctrl.k(), ctrl.k() * ctrl.ti()}, Polynomial{0.0, ctrl.ti()}};
}

}  // namespace pitune
