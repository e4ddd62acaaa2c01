#pragma once

#include <Eigen/Dense>

#include <complex>
#include <initializer_list>

namespace pitune {

using Complex = std::complex<double>;

/// Real-coefficient polynomial in the Laplace variable s, stored ascending by
/// power: coeffs()[k] multiplies s^k. Trailing zero coefficients are trimmed on
/// construction, so the leading coefficient is nonzero unless the polynomial is
/// the zero polynomial, which is stored as the single coefficient 0.
class Polynomial {
public:
    Polynomial() : coeffs_(Eigen::VectorXd::Zero(1)) {}
    explicit Polynomial(Eigen::VectorXd coeffs);
    Polynomial(std::initializer_list<double> coeffs);

    const Eigen::VectorXd& coeffs() const { return coeffs_; }

    /// Degree of the stored polynomial; the zero polynomial reports degree 0.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == 0.0; }

    /// Coefficient of s^k; zero outside the stored range.
    double operator[](int k) const {
        return (k >= 0 && k < coeffs_.size()) ? coeffs_[k] : 0.0;
    }

    double leading() const { return coeffs_[coeffs_.size() - 1]; }

    /// Same polynomial scaled so the leading coefficient is 1.
    Polynomial monic() const;

private:
    Eigen::VectorXd coeffs_;
};

Polynomial operator+(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial operator*(double c, const Polynomial& p);

Polynomial derivative(const Polynomial& p);

/// Horner evaluation at a complex point; exact for degree 0.
Complex poly_eval(const Polynomial& p, Complex s);
double poly_eval(const Polynomial& p, double s);

}  // namespace pitune
