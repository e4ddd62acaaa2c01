#include "pitune/loop.hpp"

#include <cmath>

namespace pitune {

Polynomial characteristic_poly(const Plant& plant, const PiController& ctrl) {
    const double kkp = ctrl.k() * plant.kp();
    const double t1t2 = plant.t1() * plant.t2();
    return Polynomial{
        kkp / (t1t2 * ctrl.ti()),
        (1.0 + kkp) / t1t2,
        1.0 / plant.t1() + 1.0 / plant.t2(),
        1.0,
    };
}

RationalTF loop_tf(const Plant& plant, const PiController& ctrl) {
    return tf_series(controller_tf(ctrl), plant_tf(plant));
}

RationalTF closed_loop(const Plant& plant, const PiController& ctrl) {
    return tf_unity_feedback(loop_tf(plant, ctrl));
}

ClosedLoopReport analyze_closed_loop(const Plant& plant, const PiController& ctrl) {
    ClosedLoopReport report;
    report.char_poly = characteristic_poly(plant, ctrl);
    report.poles = poly_roots(report.char_poly);

    const Complex sum = report.poles[0] + report.poles[1] + report.poles[2];
    const Complex pair_sum = report.poles[0] * report.poles[1] +
                             report.poles[0] * report.poles[2] +
                             report.poles[1] * report.poles[2];
    const Complex product = report.poles[0] * report.poles[1] * report.poles[2];

    const double kkp = ctrl.k() * plant.kp();
    const double t1t2 = plant.t1() * plant.t2();
    report.vieta_residuals = {
        std::abs(sum + Complex(1.0 / plant.t1() + 1.0 / plant.t2())),
        std::abs(pair_sum - Complex((1.0 + kkp) / t1t2)),
        std::abs(product + Complex(kkp / (t1t2 * ctrl.ti()))),
    };

    const double zero = 1.0 / ctrl.ti();
    for (Complex p : report.poles) {
        if (std::abs(p + Complex(zero)) <= 1e-8 * zero) {
            report.cancellation_detected = true;
            break;
        }
    }
    return report;
}

}  // namespace pitune
