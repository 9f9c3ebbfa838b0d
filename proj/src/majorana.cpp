#include "diracsq/majorana.hpp"

#include <cmath>
#include <stdexcept>

namespace dsq {

namespace {

// eps gamma^0 - k1 gamma^1 - k2 gamma^2 - k3 gamma^3 in the Majorana rep
CMatrix4 momentum_slash_majorana(const ModeParams& m, double k3) {
    const GammaSet g = build_gammas(Rep::Majorana);
    return m.epsilon * g.gamma[0] - m.k1 * g.gamma[1] - m.k2 * g.gamma[2] -
           k3 * g.gamma[3];
}

bool same_mode(const ModeParams& a, const ModeParams& b) {
    const double eps = 1e-12;
    return std::abs(a.k1 - b.k1) < eps && std::abs(a.k2 - b.k2) < eps &&
           std::abs(a.k - b.k) < eps && std::abs(a.M - b.M) < eps;
}

}  // namespace

StructuredSolution to_majorana(const StructuredSolution& sol) {
    if (sol.rep != Rep::Spinor)
        throw std::invalid_argument("to_majorana: spinor-rep input required");
    const CMatrix4 A = majorana_transform().S;
    StructuredSolution out = sol;
    out.rep = Rep::Majorana;
    if (auto* tz = std::get_if<TransverseZ>(&out.form)) {
        tz->plus = A * tz->plus;
        tz->minus = A * tz->minus;
    } else {
        auto& rp = std::get<RealPhase>(out.form);
        rp.cosPart = A * rp.cosPart;
        rp.sinPart = A * rp.sinPart;
    }
    return out;
}

StructuredSolution to_real_phase(const StructuredSolution& sol) {
    if (std::holds_alternative<RealPhase>(sol.form)) return sol;
    const auto& tz = std::get<TransverseZ>(sol.form);
    const bool has_plus = tz.plus.cwiseAbs().maxCoeff() > 0.0;
    const bool has_minus = tz.minus.cwiseAbs().maxCoeff() > 0.0;
    if (has_plus && has_minus)
        throw std::invalid_argument(
            "to_real_phase: single plane wave required");
    // e^{i(-eps t + k.x)} c = e^{-i kx} c = cos(kx) c + sin(kx) (-i c)
    StructuredSolution out = sol;
    RealPhase rp;
    rp.k3 = has_plus ? sol.mode.k : -sol.mode.k;
    const CVector4& c = has_plus ? tz.plus : tz.minus;
    rp.cosPart = c;
    rp.sinPart = -I * c;
    out.form = rp;
    return out;
}

StructuredSolution conjugate_solution(const StructuredSolution& sol) {
    StructuredSolution rp_sol = to_real_phase(sol);
    auto& rp = std::get<RealPhase>(rp_sol.form);
    rp.cosPart = rp.cosPart.conjugate();
    rp.sinPart = rp.sinPart.conjugate();
    return rp_sol;
}

std::pair<StructuredSolution, StructuredSolution> real_imag_split(
    const StructuredSolution& sol, const StructuredSolution& conj_sol) {
    if (!same_mode(sol.mode, conj_sol.mode))
        throw std::invalid_argument("real_imag_split: mismatched modes");
    const StructuredSolution a = to_real_phase(sol);
    const StructuredSolution b = to_real_phase(conj_sol);
    const auto& ra = std::get<RealPhase>(a.form);
    const auto& rb = std::get<RealPhase>(b.form);
    if (std::abs(ra.k3 - rb.k3) > 1e-12)
        throw std::invalid_argument("real_imag_split: mismatched k3");
    {
        // conj_sol must really be the complex conjugate of sol
        const StructuredSolution expect = conjugate_solution(sol);
        const auto& re = std::get<RealPhase>(expect.form);
        const double dev =
            std::max((re.cosPart - rb.cosPart).cwiseAbs().maxCoeff(),
                     (re.sinPart - rb.sinPart).cwiseAbs().maxCoeff());
        if (dev > 1e-10)
            throw std::invalid_argument(
                "real_imag_split: conj_sol is not the conjugate solution");
    }
    auto make = [&](double w) {
        StructuredSolution out = a;
        RealPhase rp;
        rp.k3 = ra.k3;
        rp.cosPart = 0.5 * (ra.cosPart + w * rb.cosPart);
        rp.sinPart = 0.5 * (ra.sinPart + w * rb.sinPart);
        out.form = rp;
        return out;
    };
    return {make(+1.0), make(-1.0)};
}

std::pair<MajoranaFamily, MajoranaFamily> squared_majorana_sets(
    const ModeParams& m) {
    const CMatrix4 P = momentum_slash_majorana(m, +m.k);
    // seed cos kx:    (i gamma_M^a d_a + M) cos kx = M cos kx I - i P sin kx
    // seed -i sin kx: gives P cos kx - i M sin kx
    MajoranaFamily r{MajoranaFamily::Kind::Real, {}, m};
    MajoranaFamily im{MajoranaFamily::Kind::Imaginary, {}, m};
    for (int j = 0; j < 4; ++j) {
        StructuredSolution sol;
        sol.mode = m;
        sol.rep = Rep::Majorana;
        RealPhase rp;
        rp.k3 = m.k;
        rp.cosPart = m.M * CVector4::Unit(j);
        rp.sinPart = -I * P.col(j);
        sol.form = rp;
        r.columns[j] = sol;

        RealPhase ip;
        ip.k3 = m.k;
        ip.cosPart = P.col(j);
        ip.sinPart = -I * m.M * CVector4::Unit(j);
        sol.form = ip;
        im.columns[j] = sol;
    }
    return {r, im};
}

CMatrix4 evaluate_family(const MajoranaFamily& fam, double t, double x,
                         double y, double z) {
    CMatrix4 out;
    for (int j = 0; j < 4; ++j)
        out.col(j) = evaluate(fam.columns[j], t, x, y, z);
    return out;
}

LinearMapReport linear_map_nonexistence(const MajoranaFamily& R,
                                        const MajoranaFamily& Ifam,
                                        SpacetimePoint p1, SpacetimePoint p2) {
    auto s_at = [&](const SpacetimePoint& p) {
        const CMatrix4 r = evaluate_family(R, p.t, p.x, p.y, p.z);
        const CMatrix4 i = evaluate_family(Ifam, p.t, p.x, p.y, p.z);
        if (std::abs(r.determinant()) < 1e-12)
            throw std::runtime_error(
                "linear_map_nonexistence: singular R at sample point");
        return CMatrix4(i * r.inverse());
    };
    LinearMapReport rep;
    rep.S1 = s_at(p1);
    rep.S2 = s_at(p2);
    rep.deviation = (rep.S1 - rep.S2).cwiseAbs().maxCoeff();
    return rep;
}

CMatrix4 majorana_s_display(const ModeParams& m, double kx) {
    const double s2 = std::sin(2.0 * kx);
    const double F = 0.5 * (m.M * m.M + m.k1 * m.k1);
    const double ep = (m.epsilon + m.k) * (m.epsilon + m.k);
    const double en = (m.epsilon - m.k) * (m.epsilon - m.k);
    const double Mk1 = m.M * m.k1;
    CMatrix4 d;
    d << Mk1 - F * s2, -ep * s2, 0, -m.k2 * s2,
         -en * s2, -(Mk1 + F * s2), -m.k2 * s2, 0,
         0, -m.k2 * s2, Mk1 - F * s2, -en * s2,
         -m.k2 * s2, 0, -ep * s2, -(Mk1 + F * s2);
    return (I / (m.M * m.M)) * d;
}

}  // namespace dsq
