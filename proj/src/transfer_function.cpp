#include "pitune/transfer_function.hpp"

#include "pitune/errors.hpp"

#include <cmath>
#include <utility>

namespace pitune {

RationalTF::RationalTF(Polynomial numerator, Polynomial denominator)
    : num(std::move(numerator)), den(std::move(denominator)) {
    if (den.is_zero()) {
        throw std::invalid_argument("RationalTF: denominator must not be the zero polynomial");
    }
}

Complex tf_eval(const RationalTF& g, double omega) {
    const Complex s(0.0, omega);
    const Complex d = poly_eval(g.den, s);
    if (std::abs(d) < 1e-300) {
        throw EvalAtPole("tf_eval: denominator magnitude below 1e-300 at omega = " +
                         std::to_string(omega));
    }
    return poly_eval(g.num, s) / d;
}

RationalTF tf_series(const RationalTF& a, const RationalTF& b) {
    return {a.num * b.num, a.den * b.den};
}

RationalTF tf_unity_feedback(const RationalTF& l) {
    return {l.num, l.num + l.den};
}

}  // namespace pitune
