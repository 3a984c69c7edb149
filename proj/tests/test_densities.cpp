#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include <zeromode/densities.hpp>

#include "oracles.hpp"

using namespace zeromode;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

constexpr double pi = std::numbers::pi;

TEST_CASE("infinite-radius density and its normalization", "[densities]") {
    auto const d = delta_infinity();
    CHECK_THAT(d.normalization, WithinRel(pi / 4, 1e-12));
    double const z = oracle::simpson([&](double r) { return d.evaluate(r); }, 0, 40, 40000);
    CHECK_THAT(z, WithinRel(pi / 4, 1e-10));
    for (double r : {0.3, 1.0, 2.5}) {
        double const t = std::tanh(r);
        CHECK_THAT(d.evaluate(r), WithinRel(t * t / std::cosh(r), 1e-15));
        // Ground-state potential of delta^{1/2} is 1/4 - (15/4) sech^2.
        double const s = 1 / std::cosh(r);
        CHECK_THAT(d.ground_state_potential(r), WithinAbs(0.25 - 3.75 * s * s, 1e-12));
    }
    CHECK_THROWS_AS(d.log_derivative(0.0), DomainError);
}

TEST_CASE("zero-mode density normalizes on R^3", "[densities]") {
    // 4 pi int x^2 g0(x) dx = 1.
    double const z = oracle::simpson([](double x) { return 4 * pi * x * x * g0_density_su2(x); }, 0, 30, 60000);
    CHECK_THAT(z, WithinRel(1.0, 1e-9));
    CHECK_THAT(g0_density_su2(0), WithinRel(8 / (pi * pi), 1e-15));
}

TEST_CASE("level densities and potentials", "[densities][level]") {
    for (double l : {0.0, 1.0, 2.0, 4.0}) {
        auto const d = delta_level(l);
        double const a = 2 / (2 + l);
        auto sqrt_delta = [&](double r) { return std::sqrt(d.evaluate(r)); };
        for (double r : {0.4, 1.3, 3.0, 7.0}) {
            double const fd = oracle::d2(sqrt_delta, r, 1e-3) / sqrt_delta(r);
            CHECK_THAT(potential_level_value(a, r), WithinAbs(fd, 1e-7));
            CHECK_THAT(d.ground_state_potential(r), WithinAbs(potential_level_value(a, r), 1e-12));
        }
        // Even in r near the origin: q(r) - q(0) = O(r^2).
        double const q0 = potential_level_value(a, 1e-6);
        CHECK_THAT(potential_level_value(a, 1e-3), WithinAbs(q0, 1e-5));
        CHECK(std::abs(potential_level_value(a, 2e-3) - q0) > 3 * std::abs(potential_level_value(a, 1e-3) - q0));
        auto const q = potential_level(l);
        CHECK_THAT(*q.continuum_threshold, WithinAbs(0.25 * (2 - a) * (2 - a), 1e-15));
        CHECK_THAT(q.evaluate(60.0), WithinAbs(*q.continuum_threshold, 1e-12));
    }
    for (double r : {0.01, 0.5, 2.0, 10.0}) {
        double const s = 1 / std::cosh(r);
        CHECK_THAT(potential_level_value(1.0, r), WithinAbs(0.25 - 3.75 * s * s, 1e-13));
    }
}

TEST_CASE("level density normalization against Haar measure", "[densities][level]") {
    for (double l : {0.0, 2.0}) {
        double const z = oracle::simpson(
            [&](double x) {
                double const s = std::sinh(2 * x);
                return pi * phi_l_unnormalized(l, x) * s * s;
            },
            0, 30, 60000);
        CHECK_THAT(phi_l_normalization(l), WithinRel(z, 1e-9));
    }
    // phi_0 is proportional to the R = infinity density in r = 2x.
    for (double x : {0.2, 0.7, 1.5}) {
        double const s2 = std::sinh(2 * x);
        CHECK_THAT(8 * phi_l_unnormalized(0, x) * s2 * s2, WithinRel(delta_infinity().evaluate(2 * x), 1e-13));
    }
}

TEST_CASE("finite-radius density", "[densities][finite-R]") {
    for (double R : {0.05, 0.2, 1.0, 5.0}) {
        auto const tp = ThetaParams::from_modulus(R);
        auto const d = delta_finite_R(R, tp);
        double const sh = std::sinh(pi / (2 * R));
        auto g = [&](double r) {
            double const c = std::cosh(r);
            return oracle::theta3(cplx(R * r), R, 200).real() / (sh * sh + c * c);
        };
        for (double r : {0.5, 1.5, 4.0}) {
            double const ref = -oracle::d1(g, r, 1e-4) * std::sinh(r);
            CHECK_THAT(d.evaluate(r), WithinAbs(ref, 1e-8 * std::max(1.0, std::abs(ref))));
        }
        for (int i = 0; i < 200; ++i) CHECK(d.evaluate(20.0 * i / 199) >= 0);
    }
    auto const d1 = delta_finite_R(1.0, ThetaParams::from_modulus(1.0));
    double const z = oracle::simpson([&](double r) { return d1.evaluate(r); }, 0, 45, 45000);
    CHECK_THAT(d1.normalization, WithinRel(z, 1e-9));
    CHECK_THROWS_AS(delta_finite_R(1.0, ThetaParams::from_modulus(2.0)), std::invalid_argument);
}

TEST_CASE("finite-radius potential is the ground-state potential", "[densities][finite-R]") {
    auto const tp = ThetaParams::from_modulus(1.0);
    auto const d = delta_finite_R(1.0, tp);
    auto const q = potential_finite_R(1.0, tp);
    CHECK_FALSE(q.continuum_threshold.has_value());
    auto sqrt_delta = [&](double r) { return std::sqrt(d.evaluate(r)); };
    for (double r : {0.7, 2.0, 5.0}) {
        CHECK_THAT(q.evaluate(r), WithinAbs(oracle::d2(sqrt_delta, r, 1e-3) / sqrt_delta(r), 1e-6));
    }
    CHECK_THROWS_AS(q.evaluate(0.0), DomainError);
}

TEST_CASE("rank-one inversion reproduces the closed forms", "[densities][inversion]") {
    double const inf = std::numeric_limits<double>::infinity();
    for (double l : {0.0, 1.0}) {
        double const h = 2 + l;
        for (double r : {0.5, 1.0, 2.0}) {
            auto const inv = invert_transform_rank1(l, inf, r);
            CHECK_THAT(inv.haar_density, WithinRel(8 * h * h * h / pi * phi_l_unnormalized(l, r / 2), 1e-9));
            CHECK(std::abs(inv.imag_residual) < 1e-12);
        }
    }
    auto const d = delta_finite_R(1.0, ThetaParams::from_modulus(1.0));
    double const c = invert_transform_rank1(0, 1, 1.0).radial_density / d.evaluate(1.0);
    for (double r : {0.5, 2.0, 3.0}) {
        CHECK_THAT(invert_transform_rank1(0, 1, r).radial_density, WithinRel(c * d.evaluate(r), 1e-9));
    }
    CHECK_THROWS_AS(invert_transform_rank1(-1, 1, 1), std::invalid_argument);
}

TEST_CASE("slope of ln theta3 against finite differences", "[densities][positivity]") {
    for (double R : {0.1, 1.0, 3.0}) {
        auto const tp = ThetaParams::from_modulus(R);
        auto lnth = [&](double z) { return std::log(oracle::theta3(cplx(R * z), R, 200).real()); };
        for (double z : {0.2, 1.0, 2.5}) {
            CHECK_THAT(log_theta3_slope(z, tp), WithinAbs(oracle::d1(lnth, z, 1e-4), 1e-7));
        }
    }
}

TEST_CASE("positivity report", "[densities][positivity]") {
    for (double R : {0.05, 0.3, 1.0, 5.0}) {
        auto const rep = positivity_check(R, 200, ThetaParams::from_modulus(R));
        CHECK(rep.grid_pass);
        CHECK(rep.min_margin > 0);
        CHECK_THAT(rep.rhs_minimum, WithinRel(positivity_rhs(pi / (2 * R), R), 1e-13));
        if (R >= 0.06) CHECK(rep.large_R_fires);
    }
    for (double R : {0.05, 0.08, 0.1}) {
        double const mx = positivity_trig_form_max(ThetaParams::from_modulus(R)).first;
        CHECK(mx <= positivity_small_R_bound(R));
        // Brute-force grid maximum cannot exceed the refined one.
        double grid = 0;
        for (int i = 1; i < 2000; ++i) grid = std::max(grid, positivity_trig_form(pi * i / 2000, ThetaParams::from_modulus(R)));
        CHECK(grid <= mx * (1 + 1e-12));
    }
}
