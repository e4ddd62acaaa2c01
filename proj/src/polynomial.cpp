#include "pitune/polynomial.hpp"

#include <utility>

namespace pitune {

namespace {

Eigen::VectorXd trimmed(Eigen::VectorXd c) {
    Eigen::Index n = c.size();
    while (n > 1 && c[n - 1] == 0.0) {
        --n;
    }
    c.conservativeResize(n == 0 ? 1 : n);
    if (c.size() == 0) {
        c = Eigen::VectorXd::Zero(1);
    }
    return c;
}

}  // namespace

Polynomial::Polynomial(Eigen::VectorXd coeffs) : coeffs_(trimmed(std::move(coeffs))) {}

Polynomial::Polynomial(std::initializer_list<double> coeffs)
    : coeffs_(trimmed(Eigen::Map<const Eigen::VectorXd>(coeffs.begin(),
                                                        static_cast<Eigen::Index>(coeffs.size())))) {}

Polynomial Polynomial::monic() const {
    return Polynomial(coeffs_ / leading());
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    const Eigen::Index n = std::max(a.coeffs().size(), b.coeffs().size());
    Eigen::VectorXd sum = Eigen::VectorXd::Zero(n);
    sum.head(a.coeffs().size()) = a.coeffs();
    sum.head(b.coeffs().size()) += b.coeffs();
    return Polynomial(std::move(sum));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) {
        return Polynomial();
    }
    Eigen::VectorXd prod = Eigen::VectorXd::Zero(a.coeffs().size() + b.coeffs().size() - 1);
    for (Eigen::Index i = 0; i < a.coeffs().size(); ++i) {
        prod.segment(i, b.coeffs().size()) += a.coeffs()[i] * b.coeffs();
    }
    return Polynomial(std::move(prod));
}

Polynomial operator*(double c, const Polynomial& p) {
    return Polynomial(c * p.coeffs());
}

Polynomial derivative(const Polynomial& p) {
    if (p.degree() == 0) {
        return Polynomial();
    }
    Eigen::VectorXd d(p.coeffs().size() - 1);
    for (Eigen::Index k = 1; k < p.coeffs().size(); ++k) {
        d[k - 1] = static_cast<double>(k) * p.coeffs()[k];
    }
    return Polynomial(std::move(d));
}

Complex poly_eval(const Polynomial& p, Complex s) {
    const auto& c = p.coeffs();
    Complex acc(c[c.size() - 1], 0.0);
    for (Eigen::Index k = c.size() - 2; k >= 0; --k) {
        acc = acc * s + c[k];
    }
    return acc;
}

double poly_eval(const Polynomial& p, double s) {
    const auto& c = p.coeffs();
    double acc = c[c.size() - 1];
    for (Eigen::Index k = c.size() - 2; k >= 0; --k) {
        acc = acc * s + c[k];
    }
    return acc;
}

}  // namespace pitune
