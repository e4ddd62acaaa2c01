#include "pitune/roots.hpp"

#include "pitune/errors.hpp"

#include <algorithm>
#include <cmath>

namespace pitune {

namespace {

// Roots of the monic quadratic s^2 + b s + c without subtractive cancellation.
void quadratic_roots_monic(double b, double c, std::vector<Complex>& out) {
    const double disc = b * b - 4.0 * c;
    if (disc >= 0.0) {
        const double sq = std::sqrt(disc);
        const double q = -0.5 * (b + std::copysign(sq, b));
        if (q == 0.0) {
            out.emplace_back(0.0, 0.0);
            out.emplace_back(-b, 0.0);
        } else {
            out.emplace_back(q, 0.0);
            out.emplace_back(c / q, 0.0);
        }
    } else {
        const double re = -0.5 * b;
        const double im = 0.5 * std::sqrt(-disc);
        out.emplace_back(re, -im);
        out.emplace_back(re, im);
    }
}

// One real root of the monic cubic s^3 + c2 s^2 + c1 s + c0.
// Bisection on the Cauchy bracket [-R, R] keeps the iterate pinned; Newton
// steps are taken only when they stay inside the bracket. Sign changes occur
// only at odd-multiplicity roots, so the bracket always closes on one.
double cubic_real_root(double c2, double c1, double c0) {
    const auto f = [&](double s) { return ((s + c2) * s + c1) * s + c0; };
    const auto df = [&](double s) { return (3.0 * s + 2.0 * c2) * s + c1; };

    const double radius = 1.0 + std::max({std::abs(c0), std::abs(c1), std::abs(c2)});
    double lo = -radius;
    double hi = radius;
    double x = -c2 / 3.0;  // inflection point, a reasonable start

    for (int iter = 0; iter < 200; ++iter) {
        const double fx = f(x);
        if (fx == 0.0) {
            return x;
        }
        if (fx > 0.0) {
            hi = x;
        } else {
            lo = x;
        }
        if (hi - lo <= 1e-16 * std::max(1.0, std::abs(x))) {
            break;
        }
        double next = 0.5 * (lo + hi);
        const double d = df(x);
        if (d != 0.0) {
            const double newton = x - fx / d;
            if (newton > lo && newton < hi) {
                next = newton;
            }
        }
        x = next;
    }
    return x;
}

struct Cluster {
    double spread = 0.0;
    Complex centroid;
};

Cluster cluster_of(const std::vector<Complex>& roots) {
    Cluster c;
    c.centroid = (roots[0] + roots[1] + roots[2]) / 3.0;
    for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) {
            c.spread = std::max(c.spread, std::abs(roots[i] - roots[j]));
        }
    }
    return c;
}

bool residual_ok(const Polynomial& p, Complex r) {
    const double coeff_scale = p.coeffs().cwiseAbs().maxCoeff();
    const double growth = std::pow(std::max(1.0, std::abs(r)), p.degree());
    return std::abs(poly_eval(p, r)) <= 1e-9 * coeff_scale * growth;
}

bool residuals_ok(const Polynomial& p, const std::vector<Complex>& roots) {
    return std::all_of(roots.begin(), roots.end(),
                       [&](Complex r) { return residual_ok(p, r); });
}

// Multiple roots leave deflation-based estimates smeared across a cluster
// whose width tracks the rounding-noise floor, not the true root spacing:
// a triple smears as eps^(1/3), a double as eps^(1/2). A triple root of p is
// the (exactly computable) root of p''; a double root is a simple,
// well-conditioned root of p'. A cluster is treated as a true triple only
// when the coefficients satisfy the triple-root identities c1 = c2^2/3 and
// c0 = (c2/3)^3, which separated roots miss at order (spacing)^2, far above
// coefficient rounding noise. Refined candidates are accepted only when they
// meet the residual contract on the original polynomial. Roots genuinely
// separated by less than ~sqrt(eps) are indistinguishable from exact
// multiples in double precision and collapse to the multiple-root estimate.
std::vector<Complex> refine_clusters(const Polynomial& p, double c2, double c1,
                                     std::vector<Complex> roots) {
    const double c0 = p.monic()[0];
    const Cluster all = cluster_of(roots);
    const double scale = std::max(1.0, std::abs(all.centroid));

    const double m = -c2 / 3.0;  // root of p'' for the monic cubic
    const bool triple_coeffs =
        std::abs(c1 - c2 * c2 / 3.0) <= 1e-13 * std::max(1.0, c2 * c2) &&
        std::abs(c0 + m * m * m) <= 1e-13 * std::max(1.0, std::abs(m * m * m));
    if (all.spread <= 1e-4 * scale && triple_coeffs) {
        const std::vector<Complex> refined(3, Complex(m, 0.0));
        if (residuals_ok(p, refined)) {
            return refined;
        }
    }

    int a = 0, b = 1;
    double best = std::abs(roots[0] - roots[1]);
    for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) {
            const double d = std::abs(roots[i] - roots[j]);
            if (d < best) {
                best = d;
                a = i;
                b = j;
            }
        }
    }
    const Complex pair_mid = 0.5 * (roots[a] + roots[b]);
    if (best <= 1e-6 * std::max(1.0, std::abs(pair_mid))) {
        // p' = 3 s^2 + 2 c2 s + c1 (monic cubic); its real root nearest the
        // cluster is the double-root location, the simple root follows from
        // the root sum.
        std::vector<Complex> droots;
        quadratic_roots_monic(2.0 * c2 / 3.0, c1 / 3.0, droots);
        if (droots[0].imag() == 0.0) {
            const double rd = std::abs(droots[0] - pair_mid) <= std::abs(droots[1] - pair_mid)
                                  ? droots[0].real()
                                  : droots[1].real();
            const double rs = -c2 - 2.0 * rd;
            const std::vector<Complex> refined = {Complex(rd, 0.0), Complex(rd, 0.0),
                                                  Complex(rs, 0.0)};
            if (residuals_ok(p, refined)) {
                return refined;
            }
        }
    }
    return roots;
}

}  // namespace

std::vector<Complex> poly_roots(const Polynomial& p) {
    const int deg = p.degree();
    if (p.is_zero() || deg == 0) {
        throw DegreeUnsupported("poly_roots: degree 0 has no roots to extract");
    }
    if (deg > 3) {
        throw DegreeUnsupported("poly_roots: degree " + std::to_string(deg) +
                                " exceeds the supported maximum of 3");
    }

    const Polynomial m = p.monic();
    std::vector<Complex> roots;
    roots.reserve(deg);

    if (deg == 1) {
        roots.emplace_back(-m[0], 0.0);
    } else if (deg == 2) {
        quadratic_roots_monic(m[1], m[0], roots);
    } else {
        const double c2 = m[2];
        const double c1 = m[1];
        const double c0 = m[0];
        const double r = cubic_real_root(c2, c1, c0);
        roots.emplace_back(r, 0.0);
        // Deflate by (s - r); the quotient is s^2 + (c2 + r) s + (c1 + r (c2 + r)).
        const double b1 = c2 + r;
        const double b0 = c1 + r * b1;
        quadratic_roots_monic(b1, b0, roots);
        roots = refine_clusters(p, c2, c1, std::move(roots));
    }

    std::sort(roots.begin(), roots.end(), [](Complex x, Complex y) {
        return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
    });
    return roots;
}

}  // namespace pitune
