#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "diracsq/algebra.hpp"
#include "diracsq/solutions.hpp"

#include <algorithm>
#include <cmath>
#include <random>

using namespace dsq;

namespace {

CMatrix4 random_unit_disc(std::mt19937& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    CMatrix4 m;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) m(r, c) = Complex{u(rng), u(rng)};
    return m;
}

}  // namespace

TEST_CASE("det4 basics") {
    CHECK(std::abs(det4(CMatrix4::Identity()) - 1.0) < 1e-15);
    CMatrix4 d = CMatrix4::Zero();
    d(0, 0) = 2; d(1, 1) = 3; d(2, 2) = 4; d(3, 3) = 5;
    CHECK(std::abs(det4(d) - 120.0) < 1e-12);
}

TEST_CASE("det4 vanishes on the rank-2 plane-wave set") {
    const ModeParams m = make_mode(0.3, 0.4, 1.2, 1.0);
    const auto [u, up] = u_sets(m);
    const CMatrix4 eval = evaluate_set(u, 0.0, 0.0, 0.0, 0.0);
    CHECK(std::abs(det4(eval)) < 1e-12);
}

TEST_CASE("det4 is multiplicative") {
    std::mt19937 rng(42);
    for (int trial = 0; trial < 20; ++trial) {
        const CMatrix4 a = random_unit_disc(rng), b = random_unit_disc(rng);
        const Complex lhs = det4(a * b), rhs = det4(a) * det4(b);
        CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(rhs)));
    }
}

TEST_CASE("numerical_rank basics and invariances") {
    CHECK(numerical_rank(CMatrix4::Zero()) == 0);
    CHECK(numerical_rank(CMatrix4::Identity()) == 4);

    const ModeParams m = make_mode(0.3, 0.4, 1.2, 1.0);
    const CMatrix4 u = evaluate_set(u_sets(m).first, 0.0, 0.0, 0.0, 0.0);
    CHECK(numerical_rank(u) == 2);

    CMatrix4 perm = u;
    perm.row(0).swap(perm.row(3));
    perm.col(1).swap(perm.col(2));
    CHECK(numerical_rank(perm) == 2);

    CMatrix4 scaled = u;
    scaled.row(2) *= std::exp(I * 0.77);
    CHECK(numerical_rank(scaled) == 2);
}

TEST_CASE("poly_roots on known polynomials") {
    {
        CPolynomial p{{-1.0, 0.0, 0.0, 0.0, 1.0}};  // K^4 - 1
        auto roots = poly_roots(p);
        REQUIRE(roots.size() == 4);
        for (Complex target : {Complex{1, 0}, Complex{-1, 0}, Complex{0, 1},
                               Complex{0, -1}}) {
            const double best = std::transform_reduce(
                roots.begin(), roots.end(), 1e9,
                [](double a, double b) { return std::min(a, b); },
                [&](Complex r) { return std::abs(r - target); });
            CHECK(best < 1e-12);
        }
    }
    {
        const Complex c{0.3, -1.7};
        CPolynomial p{{-c, 1.0}};
        auto roots = poly_roots(p);
        REQUIRE(roots.size() == 1);
        CHECK(std::abs(roots[0] - c) < 1e-13);
    }
    {
        // two-plate phase ratio with equal phases and f = g collapses to
        // K^2 = 1
        CPolynomial p{{-1.0, 0.0, 1.0}};
        auto roots = poly_roots(p);
        REQUIRE(roots.size() == 2);
        const double d1 = std::min(std::abs(roots[0] - 1.0),
                                   std::abs(roots[1] - 1.0));
        const double d2 = std::min(std::abs(roots[0] + 1.0),
                                   std::abs(roots[1] + 1.0));
        CHECK(d1 < 1e-13);
        CHECK(d2 < 1e-13);
    }
}

TEST_CASE("poly_roots residual and reconstruction properties") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int trial = 0; trial < 25; ++trial) {
        CPolynomial p;
        for (int i = 0; i < 5; ++i) p.coeffs.push_back({u(rng), u(rng)});
        if (std::abs(p.coeffs.back()) < 0.1) p.coeffs.back() += 0.5;
        const auto roots = poly_roots(p);
        REQUIRE(roots.size() == 4);
        for (Complex r : roots)
            CHECK(std::abs(p.eval(r)) <= 1e-12 * p.max_coeff());
        // monic product of (K - r_i) reconstructs p / lead
        std::vector<Complex> mono{1.0};
        for (Complex r : roots) {
            std::vector<Complex> next(mono.size() + 1, Complex{0.0, 0.0});
            for (std::size_t i = 0; i < mono.size(); ++i) {
                next[i] += -r * mono[i];
                next[i + 1] += mono[i];
            }
            mono = next;
        }
        const Complex lead = p.coeffs.back();
        for (int i = 0; i < 5; ++i)
            CHECK(std::abs(mono[i] - p.coeffs[i] / lead) <=
                  1e-10 * std::max(1.0, p.max_coeff() / std::abs(lead)));
    }
}

TEST_CASE("unit_circle_filter") {
    const auto out = unit_circle_filter({Complex{1, 0}, Complex{2, 0},
                                         Complex{0, 1}}, 1e-9);
    REQUIRE(out.size() == 2);
    CHECK(std::abs(out[0] - 1.0) < 1e-15);
    CHECK(std::abs(out[1] - I) < 1e-15);
    CHECK(std::abs(std::abs(out[0]) - 1.0) == 0.0);
    CHECK(unit_circle_filter({}).empty());
}

TEST_CASE("interpolate_det_poly") {
    {
        const auto p = interpolate_det_poly([](Complex k) { return k * k; });
        REQUIRE(p.coeffs.size() == 5);
        for (int i = 0; i < 5; ++i)
            CHECK(std::abs(p.coeffs[i] - (i == 2 ? 1.0 : 0.0)) < 1e-13);
    }
    {
        const auto p = interpolate_det_poly([](Complex) { return Complex{7.0}; });
        CHECK(std::abs(p.coeffs[0] - 7.0) < 1e-13);
        for (int i = 1; i < 5; ++i) CHECK(std::abs(p.coeffs[i]) < 1e-13);
    }
    {
        std::mt19937 rng(11);
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        CPolynomial q;
        for (int i = 0; i < 5; ++i) q.coeffs.push_back({u(rng), u(rng)});
        const auto p =
            interpolate_det_poly([&](Complex k) { return q.eval(k); });
        for (int i = 0; i < 5; ++i)
            CHECK(std::abs(p.coeffs[i] - q.coeffs[i]) < 1e-13);
        // reproduces all 5 samples
        for (Complex node : kInterpNodes)
            CHECK(std::abs(p.eval(node) - q.eval(node)) < 1e-13);
    }
}
