#ifndef DIRACSQ_TYPES_HPP
#define DIRACSQ_TYPES_HPP

#include <Eigen/Dense>
#include <complex>

namespace dsq {

using Complex  = std::complex<double>;
using CMatrix4 = Eigen::Matrix4cd;
using CMatrix2 = Eigen::Matrix2cd;
using CVector4 = Eigen::Vector4cd;
using CVector2 = Eigen::Vector2cd;

inline constexpr Complex I{0.0, 1.0};

// Default tolerances (overridable via function parameters where relevant).
namespace tol {
inline constexpr double rank_pivot     = 1e-9;   // relative pivot threshold
inline constexpr double root_residual  = 1e-12;  // |p(root)| <= this * max|coeff|
inline constexpr double unit_circle    = 1e-8;   // ||K|-1| for accepted roots
inline constexpr double clifford       = 1e-12;  // anticommutator deviation
inline constexpr double dirac_residual = 1e-10;  // structured operator residual
inline constexpr double quantize       = 1e-8;   // |e^{2iak} - K| at solved k
}  // namespace tol

}  // namespace dsq

#endif
