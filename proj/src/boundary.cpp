#include "diracsq/boundary.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace dsq {

namespace {

constexpr double kPi = std::numbers::pi;

double wrap_angle(double a) {
    // into (-pi, pi]
    a = std::fmod(a, 2.0 * kPi);
    if (a <= -kPi) a += 2.0 * kPi;
    if (a > kPi) a -= 2.0 * kPi;
    return a;
}

}  // namespace

double current_jz(std::span<const StructuredSolution> columns,
                  std::span<const Complex> coeffs, const GammaSet& g, double t,
                  double x, double y, double z) {
    if (columns.size() != coeffs.size())
        throw std::invalid_argument("current_jz: size mismatch");
    CVector4 psi = CVector4::Zero();
    for (std::size_t i = 0; i < columns.size(); ++i)
        psi += coeffs[i] * evaluate(columns[i], t, x, y, z);
    const Complex jz = psi.adjoint() * (g.gamma[0] * g.gamma[3]) * psi;
    return jz.real();
}

CMatrix4 boundary_matrix_planewave(const ModeParams& m,
                                   const BoundaryPhases& ph, Complex K) {
    const HelicityData h = helicity_data(m);
    const Complex al = h.alpha, be = h.beta;
    const Complex x = ph.x(), y = ph.y(), v = ph.v(), w = ph.w();
    const double kp = m.k + m.p, km = m.k - m.p;
    CMatrix4 s;
    s << (al - x), (be - x), (al - x) * K, (be - x) * K,
         (al - y) * K, (be - y) * K, (al - y), (be - y),
         (al - v) * km, (be - v) * kp, -K * (al - v) * kp, -K * (be - v) * km,
         (al - w) * km * K, (be - w) * kp * K, -(al - w) * kp, -(be - w) * km;
    return s;
}

CMatrix4 boundary_matrix_planewave_display(const ModeParams& m,
                                           const BoundaryPhases& ph,
                                           Complex K) {
    const HelicityData h = helicity_data(m);
    const Complex al = h.alpha, be = h.beta;
    const Complex x = ph.x(), y = ph.y(), v = ph.v(), w = ph.w();
    const double kp = m.k + m.p, km = m.k - m.p;
    CMatrix4 s;
    s << (al - x), (be - x), (al - x) * K, (be - x) * K,
         (al - y) * K, (be - y) * K, (al - y), (be - y),
         (al - v) * kp, (be - v) * km, -(al - v) * km * K, -(be - v) * kp * K,
         (al - w) * kp * K, (be - w) * km * K, -(al - w) * km, -(be - w) * kp;
    return s;
}

namespace {

CMatrix4 squared_matrix(const ModeParams& mode, const BoundaryPhases& ph,
                        Complex K, bool printed) {
    const double mm = mode.epsilon + mode.k;  // m
    const double nn = mode.epsilon - mode.k;  // n
    const Complex f{mode.k1, mode.k2};
    const Complex g{mode.k1, -mode.k2};
    const double M = mode.M;
    const Complex x = ph.x(), y = ph.y(), v = ph.v(), w = ph.w();
    const Complex K1 = K - 1.0;

    CMatrix4 s;
    s(0, 0) = -(K * (mm - x * M) - (nn - x * M));
    s(0, 1) = g * K1;
    s(0, 2) = -(K * (M - x * nn) - (M - x * mm));
    s(0, 3) = x * g * K1;

    s(1, 0) = -(K * (nn - y * M) - (mm - y * M));
    s(1, 1) = g * K1;
    s(1, 2) = -(K * (M - y * mm) - (M - y * nn));
    s(1, 3) = y * g * K1;

    s(2, 0) = f * K1;
    s(2, 1) = -(K * (nn - v * M) - (mm - v * M));
    s(2, 2) = v * f * K1;
    s(3, 0) = f * K1;
    s(3, 1) = -(K * (mm - w * M) - (nn - w * M));
    s(3, 2) = w * f * K1;

    if (printed) {
        // as typeset (rows 3-4 swap m and n inside the A4 brackets)
        s(2, 3) = -(K * (M - v * nn) - (M - v * mm));
        s(3, 3) = -(K * (M - w * mm) - (M - w * nn));
    } else {
        // from the Eq. 8.2 boundary conditions
        s(2, 3) = -(K * (M - v * mm) - (M - v * nn));
        s(3, 3) = -(K * (M - w * nn) - (M - w * mm));
    }
    return s;
}

}  // namespace

CMatrix4 boundary_matrix_squared(const ModeParams& m, const BoundaryPhases& ph,
                                 Complex K) {
    return squared_matrix(m, ph, K, false);
}

CMatrix4 boundary_matrix_squared_printed(const ModeParams& m,
                                         const BoundaryPhases& ph, Complex K) {
    return squared_matrix(m, ph, K, true);
}

CPolynomial boundary_det_poly(const ModeParams& m, const BoundaryPhases& ph,
                              BoundaryBasis which) {
    auto det_at = [&](Complex K) {
        const CMatrix4 s = which == BoundaryBasis::PlaneWave
                               ? boundary_matrix_planewave(m, ph, K)
                               : boundary_matrix_squared(m, ph, K);
        return det4(s);
    };
    return interpolate_det_poly(det_at);
}

namespace {

struct Branch {
    int id;
    double arg;  // unwrapped arg of the tracked root
    double k;
    bool alive;
};

// Continuation + bisection driver shared by the Dirac and Weyl solvers.
// roots_at(k) returns the unit-circle root args available at k (wrapped);
// target phase is factor*a*k (factor = 2 for K, 4 for K^2).
template <typename RootsFn, typename ResidualFn>
std::vector<QuantizationRoot> continuation_solve(double a, double k_max,
                                                 double phase_factor,
                                                 RootsFn roots_at,
                                                 ResidualFn finalize) {
    std::vector<QuantizationRoot> spectrum;
    const double dk = std::min(kPi / (16.0 * a), k_max / 64.0);
    std::vector<Branch> branches;
    int next_id = 0;
    double prev_k = 0.0;
    bool have_prev = false;

    for (double k = dk; k <= k_max + 0.5 * dk; k += dk) {
        const double kk = std::min(k, k_max);
        std::vector<double> args = roots_at(kk);
        std::vector<bool> used(args.size(), false);

        // match existing branches to nearest new root by wrapped distance
        for (auto& br : branches) {
            if (!br.alive) continue;
            int best = -1;
            double best_d = 0.6;  // movement bound per grid step
            for (std::size_t i = 0; i < args.size(); ++i) {
                if (used[i]) continue;
                const double d = std::abs(wrap_angle(args[i] - br.arg));
                if (d < best_d) {
                    best_d = d;
                    best = static_cast<int>(i);
                }
            }
            if (best < 0) {
                br.alive = false;
                continue;
            }
            used[best] = true;
            const double new_arg = br.arg + wrap_angle(args[best] - br.arg);

            // crossing test: h(k) = phase_factor*a*k - theta(k) crossing 2*pi*n
            if (have_prev) {
                const double h1 = phase_factor * a * br.k - br.arg;
                const double h2 = phase_factor * a * kk - new_arg;
                const int n_lo = static_cast<int>(
                    std::floor(std::min(h1, h2) / (2.0 * kPi)));
                const int n_hi = static_cast<int>(
                    std::ceil(std::max(h1, h2) / (2.0 * kPi)));
                for (int n = n_lo; n <= n_hi; ++n) {
                    const double t1 = h1 - 2.0 * kPi * n;
                    const double t2 = h2 - 2.0 * kPi * n;
                    if (t1 == 0.0 || (t1 < 0.0) == (t2 < 0.0)) continue;
                    // bisection on the same branch
                    double ka = br.k, kb = kk;
                    double arga = br.arg;
                    double fa = t1;
                    for (int it = 0; it < 80 && kb - ka > 1e-15; ++it) {
                        const double km = 0.5 * (ka + kb);
                        const std::vector<double> margs = roots_at(km);
                        if (margs.empty()) break;
                        int mb = 0;
                        double mbd = 1e9;
                        for (std::size_t i = 0; i < margs.size(); ++i) {
                            const double d =
                                std::abs(wrap_angle(margs[i] - arga));
                            if (d < mbd) {
                                mbd = d;
                                mb = static_cast<int>(i);
                            }
                        }
                        const double argm = arga + wrap_angle(margs[mb] - arga);
                        const double fm =
                            phase_factor * a * km - argm - 2.0 * kPi * n;
                        if ((fm < 0.0) == (fa < 0.0)) {
                            ka = km;
                            arga = argm;
                            fa = fm;
                        } else {
                            kb = km;
                        }
                    }
                    const double ksol = 0.5 * (ka + kb);
                    QuantizationRoot root = finalize(ksol, arga, br.id);
                    if (std::abs(std::exp(2.0 * I * a * root.k) - root.K) <=
                        tol::quantize)
                        spectrum.push_back(root);
                }
            }
            br.arg = new_arg;
            br.k = kk;
        }
        // unmatched roots start new branches
        for (std::size_t i = 0; i < args.size(); ++i) {
            if (!used[i]) branches.push_back({next_id++, args[i], kk, true});
        }
        prev_k = kk;
        have_prev = true;
        (void)prev_k;
    }

    std::sort(spectrum.begin(), spectrum.end(),
              [](const QuantizationRoot& l, const QuantizationRoot& r) {
                  return l.k < r.k;
              });
    // drop duplicates found by coincident branches
    std::vector<QuantizationRoot> out;
    for (const auto& r : spectrum) {
        if (!out.empty() && std::abs(out.back().k - r.k) < 1e-7 &&
            std::abs(out.back().K - r.K) < 1e-6)
            continue;
        out.push_back(r);
    }
    return out;
}

}  // namespace

std::vector<QuantizationRoot> quantize_dirac(double k1, double k2, double M,
                                             SlabGeometry geom,
                                             BoundaryPhases ph, double k_max,
                                             BoundaryBasis which) {
    if (geom.a <= 0.0 || k_max <= 0.0)
        throw std::invalid_argument("quantize_dirac: need a > 0, k_max > 0");

    auto unit_roots = [&](double k) {
        const ModeParams m = make_mode(k1, k2, k, M);
        const CPolynomial p = boundary_det_poly(m, ph, which);
        std::vector<double> args;
        if (p.degree(1e-12) < 1) return args;  // degenerate: no isolated roots
        for (const Complex& r : poly_roots(p))
            if (std::abs(std::abs(r) - 1.0) <= 1e-6)
                args.push_back(std::arg(r));
        return args;
    };
    auto finalize = [&](double ksol, double arg_hint, int branch) {
        const ModeParams m = make_mode(k1, k2, ksol, M);
        const CPolynomial p = boundary_det_poly(m, ph, which);
        QuantizationRoot root;
        root.k = ksol;
        root.branch_index = branch;
        root.K = std::exp(I * arg_hint);
        double best = 1e9;
        for (const Complex& r : poly_roots(p)) {
            const double d = std::abs(r - std::exp(I * arg_hint));
            if (d < best) {
                best = d;
                root.unit_modulus_dev = std::abs(std::abs(r) - 1.0);
                root.K = r / std::abs(r);
            }
        }
        const CMatrix4 s = which == BoundaryBasis::PlaneWave
                               ? boundary_matrix_planewave(m, ph, root.K)
                               : boundary_matrix_squared(m, ph, root.K);
        root.det_residual = std::abs(det4(s));
        return root;
    };
    return continuation_solve(geom.a, k_max, 2.0, unit_roots, finalize);
}

Complex weyl_K2(double k1, double k2, double k, double rho, double sigma) {
    if (k1 == 0.0 && k2 == 0.0)
        throw std::invalid_argument("weyl_K2: k1 = k2 = 0 is degenerate");
    const double eps = std::sqrt(k1 * k1 + k2 * k2 + k * k);
    const Complex num{k1, k2};
    const Complex f = num / (eps - k);
    const Complex g = num / (eps + k);
    const Complex x = std::exp(I * rho), y = std::exp(I * sigma);
    const Complex den = (x + g) * (y + f);
    if (std::abs(den) < 1e-300)
        throw std::invalid_argument("weyl_K2: vanishing denominator");
    return (x + f) * (y + g) / den;
}

std::vector<QuantizationRoot> weyl_quantize(double k1, double k2,
                                            SlabGeometry geom, double rho,
                                            double sigma, double k_max) {
    if (k1 == 0.0 && k2 == 0.0)
        throw std::invalid_argument("weyl_quantize: k1 = k2 = 0 is degenerate");
    if (geom.a <= 0.0 || k_max <= 0.0)
        throw std::invalid_argument("weyl_quantize: need a > 0, k_max > 0");

    auto roots_at = [&](double k) {
        return std::vector<double>{std::arg(weyl_K2(k1, k2, k, rho, sigma))};
    };
    auto finalize = [&](double ksol, double, int branch) {
        QuantizationRoot root;
        root.k = ksol;
        root.branch_index = branch;
        const Complex k2v = weyl_K2(k1, k2, ksol, rho, sigma);
        root.unit_modulus_dev = std::abs(std::abs(k2v) - 1.0);
        root.K = std::exp(2.0 * I * geom.a * ksol);
        root.det_residual = std::abs(std::exp(4.0 * I * geom.a * ksol) - k2v);
        return root;
    };
    // phase factor 4: e^{4iak} = K^2
    auto spectrum = continuation_solve(geom.a, k_max, 4.0, roots_at, finalize);
    // residual invariant for the Weyl case: |e^{4iak} - K^2| <= tol
    std::erase_if(spectrum, [&](const QuantizationRoot& r) {
        return r.det_residual > tol::quantize;
    });
    return spectrum;
}

namespace {

CMatrix4 coefficient_G(double rho, double sigma, const GammaSet& g) {
    const Complex n0 = 0.5 * (std::cos(rho) + std::cos(sigma));
    const Complex n3 = 0.5 * (I * std::sin(rho) - I * std::sin(sigma));
    const Complex m0 = 0.5 * (I * std::sin(rho) + I * std::sin(sigma));
    const Complex m3 = 0.5 * (std::cos(rho) - std::cos(sigma));
    return (n0 * g.gamma[0] + n3 * g.gamma[3]) +
           g.gamma5 * (m0 * g.gamma[0] + m3 * g.gamma[3]);
}

CMatrix4 projector_G(double rho, double sigma, const GammaSet& g) {
    const CMatrix4 id = CMatrix4::Identity();
    const CMatrix4 chiral_p = 0.5 * (id + g.gamma5);
    const CMatrix4 chiral_m = 0.5 * (id - g.gamma5);
    const CMatrix4 gp = 0.5 * (g.gamma[0] + g.gamma[3]);
    const CMatrix4 gm = 0.5 * (g.gamma[0] - g.gamma[3]);
    return std::exp(I * rho) * chiral_p * gp + std::exp(-I * rho) * chiral_m * gm +
           std::exp(I * sigma) * chiral_p * gm +
           std::exp(-I * sigma) * chiral_m * gp;
}

CMatrix4 explicit_G(double rho, double sigma) {
    CMatrix4 m = CMatrix4::Zero();
    m(0, 2) = std::exp(-I * rho);
    m(1, 3) = std::exp(-I * sigma);
    m(2, 0) = std::exp(I * rho);
    m(3, 1) = std::exp(I * sigma);
    return m;
}

}  // namespace

CovariantG build_covariant_G(double rho, double sigma, const GammaSet& g) {
    CovariantG out;
    out.rho = rho;
    out.sigma = sigma;
    out.n0 = 0.5 * (std::cos(rho) + std::cos(sigma));
    out.n3 = 0.5 * (I * std::sin(rho) - I * std::sin(sigma));
    out.m0 = 0.5 * (I * std::sin(rho) + I * std::sin(sigma));
    out.m3 = 0.5 * (std::cos(rho) - std::cos(sigma));
    out.matrix = coefficient_G(rho, sigma, g);
    if ((out.matrix - projector_G(rho, sigma, g)).cwiseAbs().maxCoeff() >
        tol::clifford)
        throw std::runtime_error("build_covariant_G: construction routes differ");
    if ((out.matrix * out.matrix - CMatrix4::Identity()).cwiseAbs().maxCoeff() >
        tol::clifford)
        throw std::runtime_error("build_covariant_G: G^2 != I");
    return out;
}

double covariant_G_route_deviation(double rho, double sigma) {
    const GammaSet g = build_gammas(Rep::Spinor);
    const CMatrix4 a = explicit_G(rho, sigma);
    const CMatrix4 b = coefficient_G(rho, sigma, g);
    const CMatrix4 c = projector_G(rho, sigma, g);
    return std::max({(a - b).cwiseAbs().maxCoeff(),
                     (a - c).cwiseAbs().maxCoeff(),
                     (b - c).cwiseAbs().maxCoeff()});
}

FixedPointReport check_G_implies_zero_current(const CovariantG& G,
                                              const CVector4& psi,
                                              const GammaSet& g) {
    FixedPointReport rep;
    rep.fixed_point_dev = (G.matrix * psi - psi).cwiseAbs().maxCoeff();
    const Complex jz = psi.adjoint() * (g.gamma[0] * g.gamma[3]) * psi;
    rep.jz = jz.real();
    rep.implied = rep.fixed_point_dev > 1e-10 || std::abs(rep.jz) <= 1e-10;
    return rep;
}

}  // namespace dsq
