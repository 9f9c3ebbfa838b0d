#include "diracsq/report.hpp"

#include "diracsq/algebra.hpp"
#include "diracsq/basis_maps.hpp"
#include "diracsq/boundary.hpp"

#include <cmath>
#include <numbers>

namespace dsq {

namespace {

double max_dev(const CMatrix4& a, const CMatrix4& b) {
    return (a - b).cwiseAbs().maxCoeff();
}

Json mismatch_entries(const CMatrix4& a, const CMatrix4& b, double tolv) {
    Json out = Json::array();
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
            if (std::abs(a(r, c) - b(r, c)) > tolv)
                out.push_back(Json{{"row", r},
                                   {"col", c},
                                   {"constructed", json_complex(a(r, c))},
                                   {"printed", json_complex(b(r, c))}});
    return out;
}

}  // namespace

std::array<CMatrix4, 4> majorana_gamma_display() {
    std::array<CMatrix4, 4> g;
    g[0] << 0, -I, 0, 0,
            I, 0, 0, 0,
            0, 0, 0, I,
            0, 0, -I, 0;
    g[1] << -I, 0, 0, 0,
            0, I, 0, 0,
            0, 0, -I, 0,
            0, 0, 0, I;
    g[2] << 0, 0, 0, I,
            0, 0, -I, 0,
            0, -I, 0, 0,
            I, 0, 0, 0;
    g[3] << 0, I, 0, 0,
            I, 0, 0, 0,
            0, 0, 0, I,
            0, 0, I, 0;
    return g;
}

Json map_report(const ModeParams& m) {
    const auto mats = build_basis_matrices(m);
    const CMatrix4& a = mats[0].entries;
    const CMatrix4& ap = mats[1].entries;
    const CMatrix4& S = mats[2].entries;
    const CMatrix4& Sp = mats[3].entries;
    const CMatrix4 a_inv = invert_basis_matrix(mats[0]);
    const CMatrix4 ap_inv = invert_basis_matrix(mats[1]);
    const auto [comp_prime, comp] = composite_maps(m);
    const auto [det_a_disp, det_ap_disp] = display_dets(m);

    Json out;
    out["mode"] = json_mode(m);
    out["a"] = json_matrix(a);
    out["a_prime"] = json_matrix(ap);
    out["S"] = json_matrix(S);
    out["S_prime"] = json_matrix(Sp);
    out["composite_prime"] = json_matrix(comp_prime);  // a' a^{-1}
    out["composite"] = json_matrix(comp);              // a a'^{-1}
    out["ranks"] = Json{{"a", numerical_rank(a)},
                        {"a_prime", numerical_rank(ap)},
                        {"S", numerical_rank(S)},
                        {"S_prime", numerical_rank(Sp)}};
    out["determinants"] = Json{{"a", json_complex(det4(a))},
                               {"a_prime", json_complex(det4(ap))}};
    out["display_deviation"] =
        Json{{"a", max_dev(a, display_a_matrix(m))},
             {"a_prime", max_dev(ap, display_a_prime_matrix(m))},
             {"S", max_dev(S, display_S_matrix(m))},
             {"S_prime", max_dev(Sp, display_S_prime_matrix(m))},
             {"det_a", std::abs(det4(a) - det_a_disp)},
             {"det_a_prime", std::abs(det4(ap) - det_ap_disp)},
             {"a_inverse", max_dev(a_inv, display_a_inverse(m))},
             {"a_prime_inverse", max_dev(ap_inv, display_a_prime_inverse(m))},
             {"composite_prime",
              max_dev(comp_prime, display_composite_prime(m))},
             {"composite", max_dev(comp, display_composite(m))}};
    return out;
}

Json majorana_report(const ModeParams& m, SpacetimePoint p1,
                     SpacetimePoint p2) {
    const auto [R, Ifam] = squared_majorana_sets(m);
    const CMatrix4 r_eval = evaluate_family(R, 0.13, 0.21, -0.34, 0.55);
    const CMatrix4 i_eval = evaluate_family(Ifam, 0.13, 0.21, -0.34, 0.55);
    const double M4 = std::pow(m.M, 4);
    const LinearMapReport lin = linear_map_nonexistence(R, Ifam, p1, p2);

    Json out;
    out["mode"] = json_mode(m);
    Json rcols = Json::array(), icols = Json::array();
    for (int j = 0; j < 4; ++j) {
        rcols.push_back(json_solution(R.columns[j]));
        icols.push_back(json_solution(Ifam.columns[j]));
    }
    out["real_family"] = rcols;
    out["imaginary_family"] = icols;
    out["det_R"] = json_complex(det4(r_eval));
    out["det_I"] = json_complex(det4(i_eval));
    out["det_vs_M4"] = Json{{"R", std::abs(det4(r_eval) - M4)},
                            {"I", std::abs(det4(i_eval) - M4)}};
    out["linear_map"] = Json{{"S_at_p1", json_matrix(lin.S1)},
                             {"S_at_p2", json_matrix(lin.S2)},
                             {"deviation", lin.deviation}};
    return out;
}

Json deviation_report() {
    Json out;
    const ModeParams m = make_mode(0.3, 0.4, 1.2, 1.0);
    out["reference_mode"] = json_mode(m);

    {  // gamma-matrix displays
        const GammaSet mj = build_gammas(Rep::Majorana);
        const auto disp = majorana_gamma_display();
        double dev = 0.0;
        for (int a = 0; a < 4; ++a)
            dev = std::max(dev, max_dev(mj.gamma[a], disp[a]));
        const GammaSet sp = build_gammas(Rep::Spinor);
        const CMatrix4 prod =
            I * sp.gamma[0] * sp.gamma[1] * sp.gamma[2] * sp.gamma[3];
        out["clifford"] = Json{
            {"majorana_display_vs_constructed", dev},
            // the article never defines gamma5 via the product; recorded only
            {"gamma5_vs_i_g0g1g2g3", max_dev(sp.gamma5, prod)},
            {"gamma5_vs_minus_product", max_dev(sp.gamma5, CMatrix4(-prod))}};
    }

    {  // det of the squared sin-seed set: claimed k^4
        // at t = x = y = 0 the common transverse phase of the four columns
        // drops out; elsewhere the determinant carries e^{4i(-eps t + ...)}
        const SolutionSet psi = squared_set(m, Rep::Spinor, 0.0);
        const Complex det = det4(evaluate_set(psi, 0.0, 0.0, 0.0, 0.31));
        const double k4 = std::pow(m.k, 4);
        out["squared_set_determinant"] =
            Json{{"claimed", k4},
                 {"measured", json_complex(det)},
                 {"measured_modulus", std::abs(det)},
                 {"deviation", std::abs(det - k4)}};
    }

    {  // Section 4 displays (via the per-mode map report deviations)
        out["expansion_maps"] = map_report(m)["display_deviation"];
    }

    {  // Majorana wave column and the constancy of S
        const ModeParams m11 = make_mode(0.0, 0.0, 1.0, 1.0);
        const HelicityData h = helicity_data(m11);
        const Complex al = h.alpha, s = h.s;
        CVector4 printed;
        printed << (1.0 + I * al * s), (s - I * al), -I * (s + I * al),
            I * (1.0 - I * al * s);
        printed /= std::sqrt(2.0);
        StructuredSolution printed_sol;
        printed_sol.mode = m11;
        printed_sol.rep = Rep::Majorana;
        TransverseZ tz;
        tz.plus = printed;
        printed_sol.form = tz;

        StructuredSolution alpha_wave;  // (1, 0, alpha, 0) e^{ikz}
        alpha_wave.mode = m11;
        alpha_wave.rep = Rep::Spinor;
        TransverseZ atz;
        atz.plus << 1.0, 0.0, al, 0.0;
        alpha_wave.form = atz;
        const StructuredSolution honest = to_majorana(alpha_wave);
        const GammaSet gm = build_gammas(Rep::Majorana);
        const auto& htz = std::get<TransverseZ>(honest.form);
        out["majorana_wave_column"] = Json{
            {"printed", json_vector(printed)},
            {"constructed", json_vector(htz.plus)},
            {"printed_dirac_residual", dirac_residual(printed_sol, gm)},
            {"constructed_dirac_residual", dirac_residual(honest, gm)}};

        const auto [R, Ifam] = squared_majorana_sets(m);
        const LinearMapReport lin = linear_map_nonexistence(
            R, Ifam, {0.0, 0.0, 0.0, 0.1}, {0.0, 0.0, 0.0, 0.47});
        const double kx1 = -m.k * 0.1;
        out["majorana_linear_map"] = Json{
            {"claimed", "S depends on the point through sin 2kx"},
            {"measured_point_dependence", lin.deviation},
            {"display_vs_measured_at_p1",
             max_dev(lin.S1, majorana_s_display(m, kx1))}};
    }

    {  // boundary matrix displays
        const BoundaryPhases ph{0.3, -0.8, 1.1, 0.4};
        const Complex K = std::exp(0.7 * I);
        out["boundary_planewave_display_mismatches"] = mismatch_entries(
            boundary_matrix_planewave(m, ph, K),
            boundary_matrix_planewave_display(m, ph, K), 1e-10);
        out["boundary_squared_printed_mismatches"] = mismatch_entries(
            boundary_matrix_squared(m, ph, K),
            boundary_matrix_squared_printed(m, ph, K), 1e-10);
        const double mn = (m.epsilon + m.k) * (m.epsilon - m.k);
        const double fg = m.k1 * m.k1 + m.k2 * m.k2;
        out["mn_vs_fg"] = Json{{"claimed", "m n = f g"},
                               {"measured_mn_minus_fg", mn - fg},
                               {"mass_squared", m.M * m.M}};
    }

    {  // Weyl current normalization
        const double k1 = 0.3, k2 = 0.4, k = 1.2;
        const double eps = std::sqrt(k1 * k1 + k2 * k2 + k * k);
        const auto [eta, etap] = weyl_waves(k1, k2, k);
        const CVector2 v = evaluate(eta, 0.0, 0.0, 0.0, 0.0);
        const double jz_raw =
            (std::norm(v(0)) - std::norm(v(1))) * (-1.0);  // -eta^dag s3 eta
        const double claimed = k / (eps - k);
        out["weyl_jz"] = Json{{"claimed", claimed},
                              {"measured_raw", jz_raw},
                              {"ratio", jz_raw / claimed}};
    }

    out["covariant_G_route_deviation"] = covariant_G_route_deviation(0.3, -0.8);
    return out;
}

}  // namespace dsq
