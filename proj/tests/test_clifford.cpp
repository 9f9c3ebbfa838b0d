#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "diracsq/algebra.hpp"
#include "diracsq/clifford.hpp"
#include "diracsq/report.hpp"
#include "diracsq/solutions.hpp"

#include <cmath>

using namespace dsq;

TEST_CASE("Clifford invariants hold in all three representations") {
    for (Rep rep : {Rep::Spinor, Rep::Standard, Rep::Majorana})
        CHECK(clifford_deviation(build_gammas(rep)) <= 1e-12);
}

TEST_CASE("explicit block structure of the named representations") {
    const GammaSet sp = build_gammas(Rep::Spinor);
    // gamma^0 = antidiag(I, I)
    CHECK((sp.gamma[0].block<2, 2>(0, 2) - CMatrix2::Identity())
              .cwiseAbs().maxCoeff() == 0.0);
    CHECK((sp.gamma[0].block<2, 2>(2, 0) - CMatrix2::Identity())
              .cwiseAbs().maxCoeff() == 0.0);
    CHECK(sp.gamma[0].block<2, 2>(0, 0).cwiseAbs().maxCoeff() == 0.0);
    // gamma5 = diag(-I, I)
    CHECK((sp.gamma5.block<2, 2>(0, 0) + CMatrix2::Identity())
              .cwiseAbs().maxCoeff() == 0.0);
    CHECK((sp.gamma5.block<2, 2>(2, 2) - CMatrix2::Identity())
              .cwiseAbs().maxCoeff() == 0.0);

    const GammaSet st = build_gammas(Rep::Standard);
    CHECK((st.gamma[0].block<2, 2>(0, 0) - CMatrix2::Identity())
              .cwiseAbs().maxCoeff() < 1e-15);
    CHECK((st.gamma[0].block<2, 2>(2, 2) + CMatrix2::Identity())
              .cwiseAbs().maxCoeff() < 1e-15);

    const GammaSet mj = build_gammas(Rep::Majorana);
    CHECK((mj.gamma[2] - sp.gamma[2]).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("majorana_transform") {
    const RepTransform t = majorana_transform();
    CHECK((t.S * t.S_inv - CMatrix4::Identity()).cwiseAbs().maxCoeff() <
          1e-14);
    const GammaSet sp = build_gammas(Rep::Spinor);
    CHECK((t.S * sp.gamma[2] * t.S_inv - sp.gamma[2]).cwiseAbs().maxCoeff() <
          1e-14);
    const CMatrix4 g0m = t.S * sp.gamma[0] * t.S_inv;
    CHECK((g0m - sp.gamma[0] * sp.gamma[2]).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("constructed Majorana set matches the explicit display") {
    const GammaSet mj = build_gammas(Rep::Majorana);
    const auto disp = majorana_gamma_display();
    for (int a = 0; a < 4; ++a)
        CHECK((mj.gamma[a] - disp[a]).cwiseAbs().maxCoeff() <= 1e-14);
}

TEST_CASE("transform_gammas round trips and transports gamma5 covariantly") {
    const GammaSet sp = build_gammas(Rep::Spinor);
    const RepTransform id{CMatrix4::Identity(), CMatrix4::Identity()};
    const GammaSet same = transform_gammas(id, sp);
    for (int a = 0; a < 4; ++a)
        CHECK((same.gamma[a] - sp.gamma[a]).cwiseAbs().maxCoeff() == 0.0);

    const RepTransform t = standard_transform();
    const GammaSet fwd = transform_gammas(t, sp);
    CHECK((fwd.gamma5 - t.S * sp.gamma5 * t.S_inv).cwiseAbs().maxCoeff() ==
          0.0);
    const RepTransform back{t.S_inv, t.S};
    const GammaSet orig = transform_gammas(back, fwd);
    for (int a = 0; a < 4; ++a)
        CHECK((orig.gamma[a] - sp.gamma[a]).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("covariance of squared sets under representation change") {
    const ModeParams m = make_mode(0.3, 0.4, 1.2, 1.0);
    const SolutionSet spinor_set = squared_set(m, Rep::Spinor, 0.0);
    CHECK(covariance_check({CMatrix4::Identity(), CMatrix4::Identity()},
                           spinor_set, spinor_set) == 0.0);

    const SolutionSet standard_set = squared_set(m, Rep::Standard, 0.0);
    CHECK(covariance_check(standard_transform(), spinor_set, standard_set) <=
          1e-10);

    const SolutionSet majorana_set = squared_set(m, Rep::Majorana, 0.0);
    CHECK(covariance_check(majorana_transform(), spinor_set, majorana_set) <=
          1e-10);
}

TEST_CASE("rank is preserved under representation change") {
    const ModeParams m = make_mode(0.3, 0.4, 1.2, 1.0);
    const CMatrix4 u = evaluate_set(u_sets(m).first, 0.1, 0.2, -0.3, 0.4);
    for (const RepTransform& t : {standard_transform(), majorana_transform()})
        CHECK(numerical_rank(CMatrix4(t.S * u * t.S_inv)) ==
              numerical_rank(u));
}
