#include "diracsq/basis_maps.hpp"

#include "diracsq/algebra.hpp"

#include <cmath>
#include <stdexcept>

namespace dsq {

namespace {

const CVector4& part(const StructuredSolution& sol, bool plus) {
    const auto& tz = std::get<TransverseZ>(sol.form);
    return plus ? tz.plus : tz.minus;
}

bool plus_supported(const SolutionSet& set) {
    double plus_mag = 0.0, minus_mag = 0.0;
    for (const auto& col : set.columns) {
        const auto& tz = std::get<TransverseZ>(col.form);
        plus_mag = std::max(plus_mag, tz.plus.cwiseAbs().maxCoeff());
        minus_mag = std::max(minus_mag, tz.minus.cwiseAbs().maxCoeff());
    }
    if ((plus_mag > 0.0) == (minus_mag > 0.0))
        throw std::invalid_argument(
            "expand_u_in_phi: set must live on a single e^{+-ikz} wave");
    return plus_mag > 0.0;
}

// Solve column = x0 * b0 + x1 * b1 from the best-conditioned row pair,
// verify the remaining rows.
std::pair<Complex, Complex> solve_pair(const CVector4& column,
                                       const CVector4& b0, const CVector4& b1) {
    int r0 = 0, r1 = 1;
    double best = -1.0;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            const double d = std::abs(b0(i) * b1(j) - b0(j) * b1(i));
            if (d > best) {
                best = d;
                r0 = i;
                r1 = j;
            }
        }
    CMatrix2 sys;
    sys << b0(r0), b1(r0), b0(r1), b1(r1);
    CVector2 rhs;
    rhs << column(r0), column(r1);
    const CVector2 x = sys.fullPivLu().solve(rhs);
    const CVector4 residual = column - x(0) * b0 - x(1) * b1;
    if (residual.cwiseAbs().maxCoeff() > 1e-10)
        throw std::runtime_error(
            "expand_u_in_phi: inconsistent overdetermined system");
    return {x(0), x(1)};
}

}  // namespace

std::string map_tag_name(MapTag tag) {
    switch (tag) {
        case MapTag::A: return "a";
        case MapTag::APrime: return "a_prime";
        case MapTag::S: return "S";
        case MapTag::SPrime: return "S_prime";
        default: return "composite";
    }
}

ExpansionCoeffs expand_u_in_phi(const SolutionSet& u, const SolutionSet& phi) {
    ExpansionCoeffs ec{};
    if (plus_supported(u)) {
        // U columns expand in {Phi_1, Phi_3} (the e^{+ikz} pair)
        const CVector4& p1 = part(phi.columns[0], true);
        const CVector4& p3 = part(phi.columns[2], true);
        std::tie(ec.a, ec.b) = solve_pair(part(u.columns[0], true), p1, p3);
        std::tie(ec.c, ec.d) = solve_pair(part(u.columns[1], true), p1, p3);
    } else {
        // U' columns expand in {Phi_2, Phi_4}
        const CVector4& p2 = part(phi.columns[1], false);
        const CVector4& p4 = part(phi.columns[3], false);
        std::tie(ec.ap, ec.bp) = solve_pair(part(u.columns[0], false), p2, p4);
        std::tie(ec.cp, ec.dp) = solve_pair(part(u.columns[1], false), p2, p4);
    }
    return ec;
}

std::array<BasisMatrix, 4> build_basis_matrices(const ModeParams& m) {
    if (m.M <= 0.0 || m.p <= 0.0 || m.k == 0.0)
        throw std::invalid_argument("build_basis_matrices: degenerate mode");
    const SolutionSet phi = phi_basis(m);
    const auto [u, up] = u_sets(m);

    const CVector4& p1 = part(phi.columns[0], true);
    const CVector4& p3 = part(phi.columns[2], true);
    const CVector4& p2 = part(phi.columns[1], false);
    const CVector4& p4 = part(phi.columns[3], false);

    // Psi_j = (U_j - U'_j)/2i, Psi'_j = -(U_j + U'_j)/2; U_j expands in
    // {Phi_1, Phi_3}, U'_j in {Phi_2, Phi_4}, so row j of each map collects
    // the expansion coefficients into Phi slots (1,3) and (2,4).
    CMatrix4 a = CMatrix4::Zero(), aprime = CMatrix4::Zero();
    const Complex half_i = 1.0 / (2.0 * I);
    for (int j = 0; j < 4; ++j) {
        const auto [cu0, cu1] = solve_pair(part(u.columns[j], true), p1, p3);
        const auto [cp0, cp1] = solve_pair(part(up.columns[j], false), p2, p4);
        a(j, 0) = half_i * cu0;
        a(j, 2) = half_i * cu1;
        a(j, 1) = -half_i * cp0;
        a(j, 3) = -half_i * cp1;
        aprime(j, 0) = -0.5 * cu0;
        aprime(j, 2) = -0.5 * cu1;
        aprime(j, 1) = -0.5 * cp0;
        aprime(j, 3) = -0.5 * cp1;
    }
    return {BasisMatrix{a, MapTag::A}, BasisMatrix{aprime, MapTag::APrime},
            BasisMatrix{-aprime + I * a, MapTag::S},
            BasisMatrix{-aprime - I * a, MapTag::SPrime}};
}

CMatrix4 invert_basis_matrix(const BasisMatrix& b) {
    if (b.tag != MapTag::A && b.tag != MapTag::APrime)
        throw std::invalid_argument("invert_basis_matrix: rank-4 tag required");
    if (std::abs(det4(b.entries)) <= 1e-12)
        throw std::invalid_argument("invert_basis_matrix: singular input");
    const CMatrix4 inv = b.entries.inverse();
    if ((b.entries * inv - CMatrix4::Identity()).cwiseAbs().maxCoeff() > 1e-10)
        throw std::runtime_error("invert_basis_matrix: inverse check failed");
    return inv;
}

std::pair<CMatrix4, CMatrix4> composite_maps(const ModeParams& m) {
    const auto mats = build_basis_matrices(m);
    const CMatrix4 a_inv = invert_basis_matrix(mats[0]);
    const CMatrix4 ap_inv = invert_basis_matrix(mats[1]);
    return {mats[1].entries * a_inv, mats[0].entries * ap_inv};
}

namespace {

struct DisplaySymbols {
    double p, k;
    Complex g;  // k1 - i k2
    Complex alpha, beta;
};

DisplaySymbols symbols(const ModeParams& m) {
    const HelicityData h = helicity_data(m);
    return {m.p, m.k, Complex{m.k1, -m.k2}, h.alpha, h.beta};
}

}  // namespace

CMatrix4 display_a_matrix(const ModeParams& m) {
    const auto [p, k, g, al, be] = symbols(m);
    CMatrix4 d;
    d << (p + k), -(p - k), (p - k), -(p + k),
         g, -g, -g, g,
         (p + k) / al, -(p - k) / al, (p - k) / be, -(p + k) / be,
         g / al, -g / al, -g / be, g / be;
    return (m.M / (4.0 * p)) / I * d;  // printed as  i a_ij = (M/4p) [...]
}

CMatrix4 display_a_prime_matrix(const ModeParams& m) {
    const auto [p, k, g, al, be] = symbols(m);
    CMatrix4 d;
    d << (p + k), (p - k), (p - k), (p + k),
         g, g, -g, -g,
         (p + k) / al, (p - k) / al, (p - k) / be, (p + k) / be,
         g / al, g / al, -g / be, -g / be;
    return -(m.M / (4.0 * p)) * d;  // printed as  -a'_ij = (M/4p) [...]
}

CMatrix4 display_S_matrix(const ModeParams& m) {
    const auto [p, k, g, al, be] = symbols(m);
    CMatrix4 d;
    d << (p + k), 0, (p - k), 0,
         g, 0, -g, 0,
         (p + k) / al, 0, (p - k) / be, 0,
         g / al, 0, -g / be, 0;
    return (m.M / (2.0 * p)) * d;
}

CMatrix4 display_S_prime_matrix(const ModeParams& m) {
    const auto [p, k, g, al, be] = symbols(m);
    CMatrix4 d;
    d << 0, (p - k), 0, (p + k),
         0, g, 0, -g,
         0, (p - k) / al, 0, (p + k) / be,
         0, g / al, 0, -g / be;
    return (m.M / (2.0 * p)) * d;
}

std::pair<Complex, Complex> display_dets(const ModeParams& m) {
    const auto [p, k, g, al, be] = symbols(m);
    const Complex common = (k * k) * (g * g) * (al * al + be * be - 2.0) /
                           (I * p) * m.M;
    return {al * al * common, -common};
}

CMatrix4 display_a_inverse(const ModeParams& m) {
    const auto [p, k, g, al, be] = symbols(m);
    CMatrix4 d;
    d << al, al * (k - p) / g, -1, -(k - p) / g,
         al, -al * (k + p) / g, -1, (k + p) / g,
         be, be * (k + p) / g, -1, -(k + p) / g,
         be, -be * (k - p) / g, -1, (k - p) / g;
    return (2.0 * I * p / (k * m.M * (al - be))) * d;
}

CMatrix4 display_a_prime_inverse(const ModeParams& m) {
    const auto [p, k, g, al, be] = symbols(m);
    CMatrix4 d;
    d << -al, -al * (k - p) / g, 1, (k - p) / g,
         al, -al * (k + p) / g, -1, (k + p) / g,
         -be, -be * (k + p) / g, 1, (k + p) / g,
         be, -be * (k - p) / g, -1, (k - p) / g;
    return (2.0 * I * p / (k * m.M * (al - be))) * d;
}

CMatrix4 display_composite_prime(const ModeParams& m) {
    const auto [p, k, g, al, be] = symbols(m);
    CMatrix4 d;
    d << (p + k) * al, -(p - k) * (p - k) * al / g, -(p - k),
         (p * p - k * k) / g,
         g * al, -(k + p) * al, g, -(k + p),
         (k + p) * be / al, (p * p - k * k) * be / (g * al), -(p - k) / be,
         -(p + k) * (p + k) / (g * be),
         g * be / al, (p - k) * be / al, g / be, (p - k) / be;
    return (I / (2.0 * k * (al - be))) * d;
}

CMatrix4 display_composite(const ModeParams& m) {
    const auto [p, k, g, al, be] = symbols(m);
    CMatrix4 d;
    d << -(p + k) * al, -(p - k) * (p - k) * al / g, (p - k),
         (p * p - k * k) / g,
         g * al, (k + p) * al, g, (k + p),
         -(k + p) * be / al, (p * p - k * k) * be / (g * al), (p - k) / be,
         -(p + k) * (p + k) / (g * be),
         g * be / al, -(p - k) * be / al, g / be, -(p - k) / be;
    return (1.0 / (k * (al - be))) * d;
}

}  // namespace dsq
