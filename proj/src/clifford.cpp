#include "diracsq/clifford.hpp"

#include "diracsq/solutions.hpp"

#include <cmath>
#include <stdexcept>

namespace dsq {

namespace {

CMatrix2 pauli(int j) {
    CMatrix2 s;
    switch (j) {
        case 0: s << 1, 0, 0, 1; break;
        case 1: s << 0, 1, 1, 0; break;
        case 2: s << 0, -I, I, 0; break;
        default: s << 1, 0, 0, -1; break;
    }
    return s;
}

CMatrix4 blocks(const CMatrix2& tl, const CMatrix2& tr, const CMatrix2& bl,
                const CMatrix2& br) {
    CMatrix4 m;
    m.block<2, 2>(0, 0) = tl;
    m.block<2, 2>(0, 2) = tr;
    m.block<2, 2>(2, 0) = bl;
    m.block<2, 2>(2, 2) = br;
    return m;
}

GammaSet spinor_gammas() {
    // gamma^a = |0 sigma-bar^a; sigma^a 0|, sigma^a = (I, +sigma^k),
    // sigma-bar^a = (I, -sigma^k); gamma5 = diag(-I, I)
    const CMatrix2 z = CMatrix2::Zero();
    const CMatrix2 id = CMatrix2::Identity();
    GammaSet g;
    g.rep = Rep::Spinor;
    g.gamma[0] = blocks(z, id, id, z);
    for (int j = 1; j <= 3; ++j) g.gamma[j] = blocks(z, -pauli(j), pauli(j), z);
    g.gamma5 = blocks(-id, z, z, id);
    return g;
}

}  // namespace

std::string rep_name(Rep rep) {
    switch (rep) {
        case Rep::Spinor: return "spinor";
        case Rep::Standard: return "standard";
        case Rep::Majorana: return "majorana";
        default: return "custom";
    }
}

RepTransform majorana_transform() {
    const CMatrix4 g2 = spinor_gammas().gamma[2];
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    RepTransform t;
    t.S = inv_sqrt2 * (CMatrix4::Identity() - g2);
    t.S_inv = inv_sqrt2 * (CMatrix4::Identity() + g2);
    return t;
}

RepTransform standard_transform() {
    // S = (1/sqrt(2)) |I I; I -I|: Hermitian and involutive, maps the spinor
    // blocks to gamma^0 = diag(I, -I), gamma^j = |0 s^j; -s^j 0|.
    const CMatrix2 id = CMatrix2::Identity();
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    RepTransform t;
    t.S = inv_sqrt2 * blocks(id, id, id, -id);
    t.S_inv = t.S;
    return t;
}

GammaSet build_gammas(Rep rep) {
    switch (rep) {
        case Rep::Spinor: return spinor_gammas();
        case Rep::Standard: {
            GammaSet g = transform_gammas(standard_transform(), spinor_gammas());
            g.rep = Rep::Standard;
            return g;
        }
        case Rep::Majorana: {
            GammaSet g = transform_gammas(majorana_transform(), spinor_gammas());
            g.rep = Rep::Majorana;
            return g;
        }
        default:
            throw std::invalid_argument("build_gammas: named representation required");
    }
}

GammaSet transform_gammas(const RepTransform& t, const GammaSet& g) {
    GammaSet out;
    out.rep = Rep::Custom;
    for (int a = 0; a < 4; ++a) out.gamma[a] = t.S * g.gamma[a] * t.S_inv;
    out.gamma5 = t.S * g.gamma5 * t.S_inv;
    if (clifford_deviation(out) > tol::clifford)
        throw std::runtime_error("transform_gammas: Clifford invariants broken");
    return out;
}

double clifford_deviation(const GammaSet& g) {
    double dev = 0.0;
    for (int a = 0; a < 4; ++a) {
        for (int b = a; b < 4; ++b) {
            const CMatrix4 anti = g.gamma[a] * g.gamma[b] + g.gamma[b] * g.gamma[a];
            const CMatrix4 target =
                (a == b) ? CMatrix4(2.0 * kMetric[a] * CMatrix4::Identity())
                         : CMatrix4(CMatrix4::Zero());
            dev = std::max(dev, (anti - target).cwiseAbs().maxCoeff());
        }
        const CMatrix4 anti5 = g.gamma5 * g.gamma[a] + g.gamma[a] * g.gamma5;
        dev = std::max(dev, anti5.cwiseAbs().maxCoeff());
    }
    const CMatrix4 sq = g.gamma5 * g.gamma5 - CMatrix4::Identity();
    dev = std::max(dev, sq.cwiseAbs().maxCoeff());
    return dev;
}

namespace {

bool same_mode(const ModeParams& a, const ModeParams& b) {
    const double eps = 1e-12;
    return std::abs(a.k1 - b.k1) < eps && std::abs(a.k2 - b.k2) < eps &&
           std::abs(a.k - b.k) < eps && std::abs(a.M - b.M) < eps;
}

}  // namespace

double covariance_check(const RepTransform& t, const SolutionSet& set_src,
                        const SolutionSet& set_dst) {
    if (!same_mode(set_src.mode, set_dst.mode))
        throw std::invalid_argument("covariance_check: mismatched mode parameters");

    // Compare structural coefficient matrices part by part: for squared sets
    // the columns matrix is the squared operator itself, so S {Psi} S^{-1}
    // must equal the destination matrix (Eq-level conjugation, both parts).
    auto parts = [](const SolutionSet& set) {
        std::pair<CMatrix4, CMatrix4> pm;
        for (int j = 0; j < 4; ++j) {
            if (const auto* tz = std::get_if<TransverseZ>(&set.columns[j].form)) {
                pm.first.col(j) = tz->plus;
                pm.second.col(j) = tz->minus;
            } else {
                const auto& rp = std::get<RealPhase>(set.columns[j].form);
                pm.first.col(j) = rp.cosPart;
                pm.second.col(j) = rp.sinPart;
            }
        }
        return pm;
    };
    const auto [src_a, src_b] = parts(set_src);
    const auto [dst_a, dst_b] = parts(set_dst);
    const double dev_a = (t.S * src_a * t.S_inv - dst_a).cwiseAbs().maxCoeff();
    const double dev_b = (t.S * src_b * t.S_inv - dst_b).cwiseAbs().maxCoeff();
    return std::max(dev_a, dev_b);
}

}  // namespace dsq
