// Walks from the theta function to the radial zero mode at R = 1 and R = infinity.

#include <cmath>
#include <cstdio>
#include <limits>

#include <zeromode/zeromode.hpp>

using namespace zeromode;

int main() {
    auto const tp = ThetaParams::from_modulus(1.0);
    std::printf("theta1 at R = 1, q = %.6g\n", tp.q);
    for (double x : {0.25, 0.5, 1.0, 1.5}) {
        std::printf("  x = %-5g series %.15f  product %.15f\n", x, theta1_series(x, tp).real(), theta1_product(x, tp).real());
    }

    auto const f = theta_reciprocal_fourier(std::numbers::pi / 2, 0.5, tp);
    std::printf("\nFourier transform of 1/theta1 at x0 = pi/2, p = 0.5\n  quadrature %.15g\n  closed form %.15g\n",
                f.quadrature, f.closed_form);

    auto const dinf = delta_infinity();
    auto const d1 = delta_finite_R(1.0, tp);
    std::printf("\nnormalized zero-mode densities\n  %6s %14s %14s\n", "r", "R = inf", "R = 1");
    for (double r : {0.0, 0.5, 1.0, 2.0, 4.0}) std::printf("  %6g %14.8f %14.8f\n", r, dinf.normalized(r), d1.normalized(r));

    SchrodingerProblem prob;
    prob.potential = poschl_teller_potential();
    auto const gap = mass_gap(prob);
    std::printf("\nradial operator with q(r) = 1/4 - (15/4) sech^2 r\n  ground eigenvalue %.3e\n  mass gap %.10f\n",
                gap.ground_eigenvalue.value_or(std::nan("")), gap.gap);
    double const dist = ground_state_overlap(prob, [&](double r) { return std::sqrt(dinf.evaluate(r)); });
    std::printf("  L2 distance from delta^{1/2} %.2e\n", dist);

    auto const counts = bound_state_count_vs_level({0, 4, 16, 32});
    std::printf("\nbound states vs level: l=0:%d l=4:%d l=16:%d l=32:%d\n", counts[0], counts[1], counts[2], counts[3]);
    return 0;
}
