#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "pitune/polynomial.hpp"

#include <random>

using pitune::Complex;
using pitune::Polynomial;

TEST_CASE("storage is ascending with trailing zeros trimmed") {
    const Polynomial p{1.0, 2.0, 3.0, 0.0, 0.0};
    CHECK(p.degree() == 2);
    CHECK(p[0] == 1.0);
    CHECK(p[2] == 3.0);
    CHECK(p[3] == 0.0);
    CHECK(p[-1] == 0.0);
    CHECK(p.leading() == 3.0);
}

TEST_CASE("zero polynomial is a single zero coefficient") {
    const Polynomial z{0.0, 0.0, 0.0};
    CHECK(z.is_zero());
    CHECK(z.degree() == 0);
    CHECK(Polynomial{}.is_zero());
    CHECK_FALSE(Polynomial{0.0, 1.0}.is_zero());
}

TEST_CASE("eval: cubic with roots -1, -2, -3 vanishes at -1") {
    const Polynomial p{6.0, 11.0, 6.0, 1.0};
    CHECK(pitune::poly_eval(p, Complex(-1.0, 0.0)) == Complex(0.0, 0.0));
    CHECK(pitune::poly_eval(p, -1.0) == 0.0);
}

TEST_CASE("eval: constant polynomial is exact anywhere") {
    const Polynomial p{1.0};
    CHECK(pitune::poly_eval(p, Complex(3.25e7, -4.5)) == Complex(1.0, 0.0));
    CHECK(pitune::poly_eval(p, 1e300) == 1.0);
}

TEST_CASE("eval: identity polynomial returns its argument") {
    const Polynomial p{0.0, 1.0};
    CHECK(pitune::poly_eval(p, Complex(0.0, 2.0)) == Complex(0.0, 2.0));
}

TEST_CASE("eval agrees with an independent Horner on random input") {
    std::mt19937 rng(11u);
    std::uniform_real_distribution<double> coeff(-5.0, 5.0);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<double> c(1 + static_cast<std::size_t>(rng() % 4));
        for (double& x : c) {
            x = coeff(rng);
        }
        const Complex s(coeff(rng), coeff(rng));
        const Complex got = pitune::poly_eval(Polynomial(Eigen::Map<Eigen::VectorXd>(
                                                  c.data(), static_cast<Eigen::Index>(c.size()))),
                                              s);
        const Complex want = oracle::horner(c, s);
        CHECK(std::abs(got - want) <= 1e-12 * std::max(1.0, std::abs(want)));
    }
}

TEST_CASE("sum pads shorter operand and trims cancellation") {
    const Polynomial a{1.0, 2.0};
    const Polynomial b{3.0, 0.0, 4.0};
    const Polynomial s = a + b;
    CHECK(s.degree() == 2);
    CHECK(s[0] == 4.0);
    CHECK(s[1] == 2.0);
    CHECK(s[2] == 4.0);

    const Polynomial c{1.0, 0.0, -4.0};
    CHECK((b + c).degree() == 0);
    CHECK((b + c)[0] == 4.0);
}

TEST_CASE("product is the coefficient convolution") {
    const Polynomial a{1.0, 1.0};
    const Polynomial b{2.0, 1.0};
    const Polynomial p = a * b;
    CHECK(p.degree() == 2);
    CHECK(p[0] == 2.0);
    CHECK(p[1] == 3.0);
    CHECK(p[2] == 1.0);

    CHECK((Polynomial{} * a).is_zero());
    CHECK((3.0 * a)[1] == 3.0);
}

TEST_CASE("derivative") {
    const Polynomial p{6.0, 11.0, 6.0, 1.0};
    const Polynomial d = pitune::derivative(p);
    CHECK(d.degree() == 2);
    CHECK(d[0] == 11.0);
    CHECK(d[1] == 12.0);
    CHECK(d[2] == 3.0);
    CHECK(pitune::derivative(Polynomial{5.0}).is_zero());
}

TEST_CASE("monic divides by the leading coefficient") {
    const Polynomial p{2.0, 4.0, 2.0};
    const Polynomial m = p.monic();
    CHECK(m.leading() == 1.0);
    CHECK(m[0] == 1.0);
    CHECK(m[1] == 2.0);
}
