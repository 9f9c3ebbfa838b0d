#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "diracsq/algebra.hpp"
#include "diracsq/basis_maps.hpp"

#include <cmath>
#include <random>

using namespace dsq;

namespace {

const CVector4& coeff(const StructuredSolution& s, bool plus) {
    const auto& tz = std::get<TransverseZ>(s.form);
    return plus ? tz.plus : tz.minus;
}

ModeParams random_mode(std::mt19937& rng) {
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    std::uniform_real_distribution<double> um(0.05, 2.0);
    std::uniform_real_distribution<double> uk(0.05, 2.0);
    return make_mode(u(rng), u(rng), uk(rng), um(rng));
}

}  // namespace

TEST_CASE("expansion coefficients match the closed forms") {
    {
        // at k = p = M = 1 (vanishing transverse momentum is degenerate for
        // the helicity basis, so approach it): a = M(k+p)/2p -> 1, b -> 0
        const ModeParams m = make_mode(1e-4, 0, 1, 1);
        const auto ec = expand_u_in_phi(u_sets(m).first, phi_basis(m));
        CHECK(std::abs(ec.a - m.M * (m.k + m.p) / (2.0 * m.p)) < 1e-12);
        CHECK(std::abs(ec.a - 1.0) < 1e-6);
        CHECK(std::abs(ec.b) < 1e-6);
    }
    const ModeParams m = make_mode(0.3, 0.4, 1.2, 1.0);
    const SolutionSet phi = phi_basis(m);
    const auto [u, up] = u_sets(m);
    const auto ec = expand_u_in_phi(u, phi);
    const Complex g{m.k1, -m.k2};
    CHECK(std::abs(ec.a - m.M * (m.k + m.p) / (2.0 * m.p)) <= 1e-12);
    CHECK(std::abs(ec.b + m.M * (m.k - m.p) / (2.0 * m.p)) <= 1e-12);
    CHECK(std::abs(ec.c - Complex{0.3, -0.4} / 2.6) <= 1e-13);
    CHECK(std::abs(ec.d + ec.c) <= 1e-12);

    const auto ecp = expand_u_in_phi(up, phi);
    CHECK(std::abs(ecp.ap - m.M * (-m.k + m.p) / (2.0 * m.p)) <= 1e-12);
    CHECK(std::abs(ecp.bp - m.M * (m.k + m.p) / (2.0 * m.p)) <= 1e-12);
    CHECK(std::abs(ecp.cp - m.M * g / (2.0 * m.p)) <= 1e-12);
    CHECK(std::abs(ecp.dp + ecp.cp) <= 1e-12);

    // reconstruction: U_1 = a Phi_1 + b Phi_3
    const CVector4 rec = ec.a * coeff(phi.columns[0], true) +
                         ec.b * coeff(phi.columns[2], true);
    CHECK((rec - coeff(u.columns[0], true)).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("constructed map matrices: expansions, ranks, identities") {
    const ModeParams m = make_mode(0.3, 0.4, 1.2, 1.0);
    const auto mats = build_basis_matrices(m);
    const SolutionSet phi = phi_basis(m);
    const SolutionSet psi = squared_set(m, Rep::Spinor, 0.0);
    const SolutionSet psi_p = squared_set(m, Rep::Spinor, -M_PI / 2.0);

    // Psi_l = a_{ln} Phi_n and Psi'_l = a'_{ln} Phi_n, checked on both the
    // e^{+ikz} and e^{-ikz} coefficient spinors
    auto check_expansion = [&](const CMatrix4& map, const SolutionSet& set) {
        for (int l = 0; l < 4; ++l) {
            CVector4 plus = CVector4::Zero(), minus = CVector4::Zero();
            for (int n = 0; n < 4; ++n) {
                plus += map(l, n) * coeff(phi.columns[n], true);
                minus += map(l, n) * coeff(phi.columns[n], false);
            }
            CHECK((plus - coeff(set.columns[l], true)).cwiseAbs().maxCoeff() <=
                  1e-10);
            CHECK((minus - coeff(set.columns[l], false))
                      .cwiseAbs().maxCoeff() <= 1e-10);
        }
    };
    check_expansion(mats[0].entries, psi);
    check_expansion(mats[1].entries, psi_p);

    CHECK(numerical_rank(mats[0].entries) == 4);
    CHECK(numerical_rank(mats[1].entries) == 4);
    CHECK(numerical_rank(mats[2].entries) == 2);
    CHECK(numerical_rank(mats[3].entries) == 2);

    // S + S' = -2 a'
    CHECK((mats[2].entries + mats[3].entries + 2.0 * mats[1].entries)
              .cwiseAbs().maxCoeff() <= 1e-12);
    // S selects {Phi_1, Phi_3}: columns 2, 4 vanish; S' the complement
    for (int l = 0; l < 4; ++l) {
        CHECK(std::abs(mats[2].entries(l, 1)) <= 1e-13);
        CHECK(std::abs(mats[2].entries(l, 3)) <= 1e-13);
        CHECK(std::abs(mats[3].entries(l, 0)) <= 1e-13);
        CHECK(std::abs(mats[3].entries(l, 2)) <= 1e-13);
    }
}

TEST_CASE("inverses and composite maps") {
    const ModeParams m = make_mode(0.3, 0.4, 1.2, 1.0);
    const auto mats = build_basis_matrices(m);
    const CMatrix4 a_inv = invert_basis_matrix(mats[0]);
    CHECK((mats[0].entries * a_inv - CMatrix4::Identity())
              .cwiseAbs().maxCoeff() <= 1e-10);
    CHECK_THROWS_AS(invert_basis_matrix(mats[2]), std::invalid_argument);

    const auto [comp_prime, comp] = composite_maps(m);
    CHECK((comp_prime * comp - CMatrix4::Identity()).cwiseAbs().maxCoeff() <=
          1e-10);

    // Psi'_j = [a' a^{-1}]_{jk} Psi_k and Psi_j = [a a'^{-1}]_{jk} Psi'_k
    const SolutionSet psi = squared_set(m, Rep::Spinor, 0.0);
    const SolutionSet psi_p = squared_set(m, Rep::Spinor, -M_PI / 2.0);
    auto check_map = [&](const CMatrix4& map, const SolutionSet& from,
                         const SolutionSet& to) {
        for (int j = 0; j < 4; ++j) {
            CVector4 plus = CVector4::Zero(), minus = CVector4::Zero();
            for (int k = 0; k < 4; ++k) {
                plus += map(j, k) * coeff(from.columns[k], true);
                minus += map(j, k) * coeff(from.columns[k], false);
            }
            CHECK((plus - coeff(to.columns[j], true)).cwiseAbs().maxCoeff() <=
                  1e-10);
            CHECK((minus - coeff(to.columns[j], false))
                      .cwiseAbs().maxCoeff() <= 1e-10);
        }
    };
    check_map(comp_prime, psi, psi_p);
    check_map(comp, psi_p, psi);
}

TEST_CASE("self-consistent printed displays agree with the construction") {
    const ModeParams m = make_mode(0.3, 0.4, 1.2, 1.0);
    const auto mats = build_basis_matrices(m);
    CHECK((mats[0].entries - display_a_matrix(m)).cwiseAbs().maxCoeff() <=
          1e-10);
    CHECK((mats[1].entries - display_a_prime_matrix(m))
              .cwiseAbs().maxCoeff() <= 1e-10);
    CHECK((mats[2].entries - display_S_matrix(m)).cwiseAbs().maxCoeff() <=
          1e-10);
    CHECK((mats[3].entries - display_S_prime_matrix(m))
              .cwiseAbs().maxCoeff() <= 1e-10);
    // the remaining displays (determinants, inverses, composites) are typeset
    // inconsistently and only recorded by the deviation report
}

TEST_CASE("round trip over random modes") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        const ModeParams m = random_mode(rng);
        const SolutionSet phi = phi_basis(m);
        const auto [u, up] = u_sets(m);
        const auto ec = expand_u_in_phi(u, phi);
        CHECK(std::abs(ec.a - m.M * (m.k + m.p) / (2.0 * m.p)) <= 1e-12);
        CHECK(std::abs(ec.b + m.M * (m.k - m.p) / (2.0 * m.p)) <= 1e-12);
        CHECK(std::abs(ec.c - m.M * Complex{m.k1, -m.k2} / (2.0 * m.p)) <=
              1e-12);

        // recombining U, U' through Psi = (U - U')/2i reproduces the
        // sin-seed squared set
        const SolutionSet psi = squared_set(m, Rep::Spinor, 0.0);
        const SolutionSet rec = combine_sets(
            u, up, {1.0 / (2.0 * I), -1.0 / (2.0 * I)});
        for (int j = 0; j < 4; ++j) {
            CHECK((coeff(rec.columns[j], true) - coeff(psi.columns[j], true))
                      .cwiseAbs().maxCoeff() <= 1e-10);
            CHECK((coeff(rec.columns[j], false) - coeff(psi.columns[j], false))
                      .cwiseAbs().maxCoeff() <= 1e-10);
        }
    }
}

TEST_CASE("seed phase only rotates the basis inside one span") {
    const ModeParams m = make_mode(0.3, 0.4, 1.2, 1.0);
    const SolutionSet phi = phi_basis(m);
    for (double gamma : {0.0, 0.6, -1.9, 2.8}) {
        const SolutionSet set = squared_set(m, Rep::Spinor, gamma);
        // every column's e^{ikz} part lies in span{Phi1+, Phi3+} and the
        // e^{-ikz} part in span{Phi2-, Phi4-}
        Eigen::Matrix<Complex, 4, 2> bp, bm;
        bp.col(0) = coeff(phi.columns[0], true);
        bp.col(1) = coeff(phi.columns[2], true);
        bm.col(0) = coeff(phi.columns[1], false);
        bm.col(1) = coeff(phi.columns[3], false);
        for (int j = 0; j < 4; ++j) {
            const CVector4 rp = coeff(set.columns[j], true) -
                                bp * bp.fullPivLu()
                                         .solve(coeff(set.columns[j], true))
                                         .eval();
            const CVector4 rm = coeff(set.columns[j], false) -
                                bm * bm.fullPivLu()
                                         .solve(coeff(set.columns[j], false))
                                         .eval();
            CHECK(rp.cwiseAbs().maxCoeff() <= 1e-10);
            CHECK(rm.cwiseAbs().maxCoeff() <= 1e-10);
        }
    }
}

TEST_CASE("degenerate modes are rejected") {
    CHECK_THROWS_AS(build_basis_matrices(make_mode(0.3, 0.4, 0.0, 1.0)),
                    std::invalid_argument);
}
