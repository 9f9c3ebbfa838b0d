#include "diracsq/solutions.hpp"

#include <cmath>
#include <stdexcept>

namespace dsq {

namespace {

bool same_mode(const ModeParams& a, const ModeParams& b) {
    const double eps = 1e-12;
    return std::abs(a.k1 - b.k1) < eps && std::abs(a.k2 - b.k2) < eps &&
           std::abs(a.k - b.k) < eps && std::abs(a.M - b.M) < eps;
}

// eps gamma^0 - k1 gamma^1 - k2 gamma^2 - k3 gamma^3
CMatrix4 momentum_slash(const ModeParams& m, double k3, const GammaSet& g) {
    return m.epsilon * g.gamma[0] - m.k1 * g.gamma[1] - m.k2 * g.gamma[2] -
           k3 * g.gamma[3];
}

}  // namespace

ModeParams make_mode(double k1, double k2, double k, double M) {
    if (k1 == 0.0 && k2 == 0.0 && k == 0.0 && M == 0.0)
        throw std::invalid_argument("make_mode: all-zero input has no mode");
    if (M < 0.0) throw std::invalid_argument("make_mode: negative mass");
    ModeParams m;
    m.k1 = k1;
    m.k2 = k2;
    m.k = k;
    m.M = M;
    m.epsilon = std::sqrt(k1 * k1 + k2 * k2 + k * k + M * M);
    m.p = std::sqrt(std::max(0.0, m.epsilon * m.epsilon - M * M));
    return m;
}

HelicityData helicity_data(const ModeParams& m) {
    if (m.M <= 0.0)
        throw std::invalid_argument("helicity_data: requires M > 0");
    HelicityData h;
    h.alpha = (m.epsilon - m.p) / m.M;
    h.beta = (m.epsilon + m.p) / m.M;
    const Complex num{m.k1, m.k2};
    const double dplus = m.k + m.p, dminus = m.k - m.p;
    if (num == Complex{0.0, 0.0}) {
        if (dplus == 0.0 || dminus == 0.0)
            throw std::invalid_argument("helicity_data: 0/0 component ratio");
        h.s = h.t = Complex{0.0, 0.0};
    } else {
        if (dplus == 0.0 || dminus == 0.0)
            throw std::invalid_argument("helicity_data: k = +-p pole");
        h.s = num / dplus;
        h.t = num / dminus;
    }
    return h;
}

CVector4 evaluate(const StructuredSolution& sol, double t, double x, double y,
                  double z) {
    const ModeParams& m = sol.mode;
    if (const auto* tz = std::get_if<TransverseZ>(&sol.form)) {
        const Complex pref =
            std::exp(I * (-m.epsilon * t + m.k1 * x + m.k2 * y));
        return pref * (tz->plus * std::exp(I * (m.k * z)) +
                       tz->minus * std::exp(I * (-m.k * z)));
    }
    const auto& rp = std::get<RealPhase>(sol.form);
    const double kx = m.epsilon * t - m.k1 * x - m.k2 * y - rp.k3 * z;
    return rp.cosPart * std::cos(kx) + rp.sinPart * std::sin(kx);
}

CMatrix4 evaluate_set(const SolutionSet& set, double t, double x, double y,
                      double z) {
    CMatrix4 m;
    for (int j = 0; j < 4; ++j) m.col(j) = evaluate(set.columns[j], t, x, y, z);
    return m;
}

double dirac_residual(const StructuredSolution& sol, const GammaSet& g) {
    const ModeParams& m = sol.mode;
    const CMatrix4 mass = m.M * CMatrix4::Identity();
    if (const auto* tz = std::get_if<TransverseZ>(&sol.form)) {
        // (i gamma^a d_a - M) on e^{i(-eps t + k1 x + k2 y +- k z)} picks up
        // the momentum slash with k3 = +-k.
        const CVector4 res_plus =
            (momentum_slash(m, +m.k, g) - mass) * tz->plus;
        const CVector4 res_minus =
            (momentum_slash(m, -m.k, g) - mass) * tz->minus;
        return std::max(res_plus.cwiseAbs().maxCoeff(),
                        res_minus.cwiseAbs().maxCoeff());
    }
    const auto& rp = std::get<RealPhase>(sol.form);
    const CMatrix4 P = momentum_slash(m, rp.k3, g);
    // (i gamma^a d_a - M)(C cos kx + S sin kx)
    //   = (i P S - M C) cos kx + (-i P C - M S) sin kx
    const CVector4 res_cos = I * P * rp.sinPart - mass * rp.cosPart;
    const CVector4 res_sin = -I * P * rp.cosPart - mass * rp.sinPart;
    return std::max(res_cos.cwiseAbs().maxCoeff(),
                    res_sin.cwiseAbs().maxCoeff());
}

SolutionSet phi_basis(const ModeParams& m) {
    const HelicityData h = helicity_data(m);
    SolutionSet set;
    set.mode = m;
    set.rep = Rep::Spinor;
    set.generator = "phi_basis";

    // column j: (1, ratio, lambda, lambda*ratio) attached to e^{+-ikz}
    auto column = [&](Complex lambda, Complex ratio, bool plus_wave) {
        StructuredSolution sol;
        sol.mode = m;
        sol.rep = Rep::Spinor;
        TransverseZ tz;
        CVector4 c;
        c << Complex{1.0, 0.0}, ratio, lambda, lambda * ratio;
        (plus_wave ? tz.plus : tz.minus) = c;
        sol.form = tz;
        return sol;
    };
    // with k1 = k2 = 0 we get p = |k| and the beta-type component ratios
    // degenerate to 0/0; the basis needs genuine transverse momentum
    const Complex num{m.k1, m.k2};
    if (num == Complex{0.0, 0.0})
        throw std::invalid_argument(
            "phi_basis: requires k1^2 + k2^2 > 0 (0/0 component ratio)");
    set.columns[0] = column(h.alpha, num / (m.k + m.p), true);    // Phi1
    set.columns[1] = column(h.alpha, num / (-m.k + m.p), false);  // Phi2
    set.columns[2] = column(h.beta, num / (m.k - m.p), true);     // Phi3
    set.columns[3] = column(h.beta, num / (-m.k - m.p), false);   // Phi4
    return set;
}

SolutionSet squared_set(const ModeParams& m, Rep rep, double gamma) {
    const GammaSet g = build_gammas(rep);
    // sin(kz+gamma) = (e^{i gamma} e^{ikz} - e^{-i gamma} e^{-ikz})/(2i);
    // applying (i gamma^a d_a + M) to each exponential factor gives the
    // momentum slash with k3 = +-k plus the mass term.
    const CMatrix4 mass = m.M * CMatrix4::Identity();
    const Complex cp = std::exp(I * gamma) / (2.0 * I);
    const Complex cm = -std::exp(-I * gamma) / (2.0 * I);
    const CMatrix4 Qp = cp * (momentum_slash(m, +m.k, g) + mass);
    const CMatrix4 Qm = cm * (momentum_slash(m, -m.k, g) + mass);

    SolutionSet set;
    set.mode = m;
    set.rep = rep;
    set.generator = "squared_sin_seed";
    set.phase_gamma = gamma;
    for (int j = 0; j < 4; ++j) {
        StructuredSolution sol;
        sol.mode = m;
        sol.rep = rep;
        TransverseZ tz;
        tz.plus = Qp.col(j);
        tz.minus = Qm.col(j);
        sol.form = tz;
        set.columns[j] = sol;
    }
    return set;
}

std::pair<SolutionSet, SolutionSet> u_sets(const ModeParams& m) {
    const Complex f{m.k1, m.k2};   // k1 + i k2
    const Complex gbar{m.k1, -m.k2};  // k1 - i k2
    const double eps = m.epsilon, k = m.k, M = m.M;

    CMatrix4 u, up;
    u << M, 0, eps + k, gbar,
         0, M, f, eps - k,
         eps - k, -gbar, M, 0,
         -f, eps + k, 0, M;
    // same with k -> -k
    up << M, 0, eps - k, gbar,
          0, M, f, eps + k,
          eps + k, -gbar, M, 0,
          -f, eps - k, 0, M;

    auto build = [&](const CMatrix4& cols, bool plus_wave, const char* tag) {
        SolutionSet set;
        set.mode = m;
        set.rep = Rep::Spinor;
        set.generator = tag;
        for (int j = 0; j < 4; ++j) {
            StructuredSolution sol;
            sol.mode = m;
            sol.rep = Rep::Spinor;
            TransverseZ tz;
            (plus_wave ? tz.plus : tz.minus) = cols.col(j);
            sol.form = tz;
            set.columns[j] = sol;
        }
        return set;
    };
    return {build(u, true, "u_plane_wave"), build(up, false, "u_prime_plane_wave")};
}

SolutionSet combine_sets(const SolutionSet& a, const SolutionSet& b,
                         std::pair<Complex, Complex> coeffs) {
    if (!same_mode(a.mode, b.mode) || a.rep != b.rep)
        throw std::invalid_argument("combine_sets: mode/rep mismatch");
    SolutionSet out;
    out.mode = a.mode;
    out.rep = a.rep;
    out.generator = "combination";
    for (int j = 0; j < 4; ++j) {
        const bool a_tz = std::holds_alternative<TransverseZ>(a.columns[j].form);
        const bool b_tz = std::holds_alternative<TransverseZ>(b.columns[j].form);
        if (a_tz != b_tz)
            throw std::invalid_argument("combine_sets: structural form mismatch");
        StructuredSolution sol;
        sol.mode = a.mode;
        sol.rep = a.rep;
        if (a_tz) {
            const auto& ta = std::get<TransverseZ>(a.columns[j].form);
            const auto& tb = std::get<TransverseZ>(b.columns[j].form);
            TransverseZ tz;
            tz.plus = coeffs.first * ta.plus + coeffs.second * tb.plus;
            tz.minus = coeffs.first * ta.minus + coeffs.second * tb.minus;
            sol.form = tz;
        } else {
            const auto& ra = std::get<RealPhase>(a.columns[j].form);
            const auto& rb = std::get<RealPhase>(b.columns[j].form);
            if (std::abs(ra.k3 - rb.k3) > 1e-12)
                throw std::invalid_argument("combine_sets: k3 mismatch");
            RealPhase rp;
            rp.k3 = ra.k3;
            rp.cosPart = coeffs.first * ra.cosPart + coeffs.second * rb.cosPart;
            rp.sinPart = coeffs.first * ra.sinPart + coeffs.second * rb.sinPart;
            sol.form = rp;
        }
        out.columns[j] = sol;
    }
    return out;
}

CVector4 helicity_apply(const ModeParams& m, double k3, const CVector4& f) {
    CMatrix2 sigma_k;
    sigma_k << k3, Complex{m.k1, -m.k2}, Complex{m.k1, m.k2}, -k3;
    CVector4 out;
    out.segment<2>(0) = sigma_k * f.segment<2>(0);
    out.segment<2>(2) = sigma_k * f.segment<2>(2);
    return out;
}

std::pair<WeylSpinor, WeylSpinor> weyl_waves(double k1, double k2, double k) {
    if (k1 == 0.0 && k2 == 0.0 && k != 0.0)
        throw std::invalid_argument("weyl_waves: 0/0 component ratio at k1=k2=0");
    const ModeParams m = make_mode(k1, k2, k, 0.0);
    const Complex num{k1, k2};
    auto build = [&](int sign) {
        WeylSpinor w;
        w.mode = m;
        w.sign = sign;
        const double denom = m.epsilon - sign * k;
        w.components << Complex{1.0, 0.0},
            (denom == 0.0 ? Complex{0.0, 0.0} : -num / denom);
        if (denom == 0.0)
            throw std::invalid_argument("weyl_waves: vanishing eps - k3");
        return w;
    };
    return {build(+1), build(-1)};
}

double weyl_residual(const WeylSpinor& w) {
    const ModeParams& m = w.mode;
    CMatrix2 op;
    const double k3 = w.sign * m.k;
    op << m.epsilon + k3, Complex{m.k1, -m.k2},
          Complex{m.k1, m.k2}, m.epsilon - k3;
    return (op * w.components).cwiseAbs().maxCoeff();
}

CVector2 evaluate(const WeylSpinor& w, double t, double x, double y, double z) {
    const ModeParams& m = w.mode;
    const Complex pref = std::exp(
        I * (-m.epsilon * t + m.k1 * x + m.k2 * y + w.sign * m.k * z));
    return pref * w.components;
}

}  // namespace dsq
