#ifndef DIRACSQ_SOLUTIONS_HPP
#define DIRACSQ_SOLUTIONS_HPP

#include "diracsq/clifford.hpp"
#include "diracsq/types.hpp"

#include <array>
#include <string>
#include <utility>
#include <variant>

namespace dsq {

struct ModeParams {
    double k1 = 0.0;
    double k2 = 0.0;
    double k = 0.0;   // |k3|; the sign lives in the solution structure
    double M = 0.0;
    double epsilon = 0.0;  // +sqrt(k1^2 + k2^2 + k^2 + M^2)
    double p = 0.0;        // +sqrt(epsilon^2 - M^2)
};

// Throws std::invalid_argument on the all-zero mode.
ModeParams make_mode(double k1, double k2, double k, double M);

struct HelicityData {
    Complex alpha;  // (eps - p)/M
    Complex beta;   // (eps + p)/M
    Complex s;      // (k1 + i k2)/(k + p)
    Complex t;      // (k1 + i k2)/(k - p)
};

// Requires M > 0; rejects 0/0 component ratios.
HelicityData helicity_data(const ModeParams& m);

// Psi = e^{i(-eps t + k1 x + k2 y)} (plus e^{ikz} + minus e^{-ikz})
struct TransverseZ {
    CVector4 plus = CVector4::Zero();
    CVector4 minus = CVector4::Zero();
};

// Psi = cosPart cos(kx) + sinPart sin(kx), kx = eps t - k1 x - k2 y - k3 z
struct RealPhase {
    CVector4 cosPart = CVector4::Zero();
    CVector4 sinPart = CVector4::Zero();
    double k3 = 0.0;  // signed
};

struct StructuredSolution {
    ModeParams mode;
    Rep rep = Rep::Spinor;
    std::variant<TransverseZ, RealPhase> form;
};

struct SolutionSet {
    std::array<StructuredSolution, 4> columns;
    std::string generator;     // provenance tag
    double phase_gamma = 0.0;  // seed phase, when applicable
    ModeParams mode;
    Rep rep = Rep::Spinor;
};

// Pointwise evaluation.
CVector4 evaluate(const StructuredSolution& sol, double t, double x, double y,
                  double z);
CMatrix4 evaluate_set(const SolutionSet& set, double t, double x, double y,
                      double z);

// Max coefficient magnitude of (i gamma^a d_a - M) Psi, applied structurally.
double dirac_residual(const StructuredSolution& sol, const GammaSet& g);

// Momentum-helicity basis Phi_1..Phi_4 (spinor rep).
SolutionSet phi_basis(const ModeParams& m);

// Squared set from seed sin(kz + gamma) in the given representation.
SolutionSet squared_set(const ModeParams& m, Rep rep, double gamma);

// U, U' plane-wave squared sets (spinor rep).
std::pair<SolutionSet, SolutionSet> u_sets(const ModeParams& m);

// Columnwise c0*a + c1*b. Throws on mode/rep mismatch.
SolutionSet combine_sets(const SolutionSet& a, const SolutionSet& b,
                         std::pair<Complex, Complex> coeffs);

// Block helicity operator sigma.k applied to each 2-spinor block.
CVector4 helicity_apply(const ModeParams& m, double k3, const CVector4& f);

struct WeylSpinor {
    ModeParams mode;  // M = 0
    int sign = +1;    // sign of k3
    CVector2 components;
};

// The two massless 2-spinors with k3 = +k and k3 = -k.
std::pair<WeylSpinor, WeylSpinor> weyl_waves(double k1, double k2, double k);

// Max component of (eps I + k_j sigma^j) eta.
double weyl_residual(const WeylSpinor& w);

CVector2 evaluate(const WeylSpinor& w, double t, double x, double y, double z);

}  // namespace dsq

#endif
