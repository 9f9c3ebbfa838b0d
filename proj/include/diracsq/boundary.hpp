#ifndef DIRACSQ_BOUNDARY_HPP
#define DIRACSQ_BOUNDARY_HPP

#include "diracsq/algebra.hpp"
#include "diracsq/solutions.hpp"
#include "diracsq/types.hpp"

#include <span>
#include <vector>

namespace dsq {

struct BoundaryPhases {
    double rho = 0.0, sigma = 0.0, mu = 0.0, nu = 0.0;
    Complex x() const { return std::exp(I * rho); }
    Complex v() const { return std::exp(I * sigma); }
    Complex y() const { return std::exp(I * mu); }
    Complex w() const { return std::exp(I * nu); }
};

struct SlabGeometry {
    double a;  // half-distance between the planes, > 0
};

struct QuantizationRoot {
    Complex K;
    double k = 0.0;
    double det_residual = 0.0;
    double unit_modulus_dev = 0.0;
    int branch_index = 0;
};

enum class BoundaryBasis { PlaneWave, Squared };

// J^z = Psi^dag gamma^0 gamma^3 Psi of the coefficient combination,
// evaluated at the point. Imaginary part is discarded after checking it is
// at roundoff level.
double current_jz(std::span<const StructuredSolution> columns,
                  std::span<const Complex> coeffs, const GammaSet& g, double t,
                  double x, double y, double z);

// Coefficient matrix of the boundary system in the plane-wave helicity basis
// (system 7.7c).
CMatrix4 boundary_matrix_planewave(const ModeParams& m,
                                   const BoundaryPhases& ph, Complex K);

// Coefficient matrix of the boundary system in the squared sin-basis,
// assembled from the Eq. 8.2 boundary conditions. The printed system carries
// an m/n swap in two entries; see boundary_matrix_squared_printed.
CMatrix4 boundary_matrix_squared(const ModeParams& m, const BoundaryPhases& ph,
                                 Complex K);

// Literal transcription of the printed Section 8 system (for deviation
// reports only).
CMatrix4 boundary_matrix_squared_printed(const ModeParams& m,
                                         const BoundaryPhases& ph, Complex K);

// Literal transcription of the printed (7.8) matrix display (deviation
// reports only; its rows 3-4 disagree with the system).
CMatrix4 boundary_matrix_planewave_display(const ModeParams& m,
                                           const BoundaryPhases& ph,
                                           Complex K);

// Degree-<=4 determinant polynomial in K for the selected matrix builder.
CPolynomial boundary_det_poly(const ModeParams& m, const BoundaryPhases& ph,
                              BoundaryBasis which);

// Solutions of det = 0 with K = e^{2iak} on the unit circle, k in (0, k_max],
// by grid continuation + bisection. Sorted by k.
std::vector<QuantizationRoot> quantize_dirac(double k1, double k2, double M,
                                             SlabGeometry geom,
                                             BoundaryPhases ph, double k_max,
                                             BoundaryBasis which);

// K^2 = (x+f)(y+g)/((x+g)(y+f)) with f = (k1+ik2)/(eps-k),
// g = (k1+ik2)/(eps+k); unit modulus.
Complex weyl_K2(double k1, double k2, double k, double rho, double sigma);

// Solutions of e^{4iak} = K^2(k), same continuation scheme.
std::vector<QuantizationRoot> weyl_quantize(double k1, double k2,
                                            SlabGeometry geom, double rho,
                                            double sigma, double k_max);

struct CovariantG {
    double rho = 0.0, sigma = 0.0;
    CMatrix4 matrix;
    Complex n0, n3, m0, m3;
};

// Three routes (explicit antidiagonal phases, coefficient form, projector
// form) must agree; built in the representation of `g` (coefficient and
// projector forms from g's gammas; the explicit matrix transported when g is
// not the spinor set is not needed -- callers conjugate externally).
CovariantG build_covariant_G(double rho, double sigma, const GammaSet& g);

// Agreement between the three construction routes, spinor rep.
double covariant_G_route_deviation(double rho, double sigma);

struct FixedPointReport {
    double fixed_point_dev;  // ||G psi - psi||
    double jz;               // psi^dag gamma0 gamma3 psi
    bool implied;            // fixed point  =>  |jz| small
};

FixedPointReport check_G_implies_zero_current(const CovariantG& G,
                                              const CVector4& psi,
                                              const GammaSet& g);

}  // namespace dsq

#endif
