#ifndef DIRACSQ_ALGEBRA_HPP
#define DIRACSQ_ALGEBRA_HPP

#include "diracsq/types.hpp"

#include <array>
#include <functional>
#include <vector>

namespace dsq {

// Exact cofactor-expansion determinant of a 4x4 complex matrix.
Complex det4(const CMatrix4& m);

// Number of pivots exceeding tau * max|entry| under complete-pivoting
// Gaussian elimination. Deterministic; tau is relative.
int numerical_rank(const CMatrix4& m, double tau = tol::rank_pivot);

// Polynomial with ascending complex coefficients: c0 + c1 K + c2 K^2 + ...
struct CPolynomial {
    std::vector<Complex> coeffs;

    // Degree after dropping trailing coefficients below `eps` in magnitude
    // relative to the largest coefficient.
    int degree(double eps = 0.0) const;
    Complex eval(Complex z) const;           // Horner
    CPolynomial derivative() const;
    double max_coeff() const;                // max |c_i|
    CPolynomial trimmed(double eps) const;   // drop small leading coefficients
};

// All roots (with multiplicity) by Durand-Kerner iteration from deterministic
// starting points, polished by Newton steps. Residual |p(r)| <= 1e-12*max|c|.
// Throws std::runtime_error on non-convergence (message carries residuals).
std::vector<Complex> poly_roots(const CPolynomial& p);

// Subset of roots with ||r|-1| <= tol, each normalized to exact unit modulus.
std::vector<Complex> unit_circle_filter(const std::vector<Complex>& roots,
                                        double tol = tol::unit_circle);

// Fixed interpolation nodes {0, 1, -1, i, -i}.
extern const std::array<Complex, 5> kInterpNodes;

// Unique degree-<=4 polynomial through the 5 fixed nodes (Lagrange).
CPolynomial interpolate_det_poly(const std::function<Complex(Complex)>& eval);

}  // namespace dsq

#endif
