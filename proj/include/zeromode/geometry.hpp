#pragma once

// Radial calculus for an orthogonally invariant metric g_x = A(ad x) on
// p = R^3 (the rank-one case). A metric profile is the scalar function a(z)
// applied to the ad-eigenvalues; on p the nonzero eigenvalues come in the
// pair +-zeta(r), so
//
//   rho = det(A)^{1/2} = sqrt|a(zeta) a(-zeta)|,   delta = rho r^{n-1},
//
// and the radial operator is -delta^{-1/2} D alpha D delta^{1/2} + gamma with
// gamma fixed by annihilating constants: gamma = D(alpha D delta^{1/2}) / delta^{1/2}.

#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "errors.hpp"
#include "jet.hpp"
#include "numerics.hpp"

namespace zeromode {

struct MetricProfile {
    std::string label;
    /// a(z) on jets (plain values via constant jets); a(0) = 1.
    std::function<Jet<3>(Jet<3> const&)> profile;
    /// zeta(r), the nonzero ad-eigenvalue magnitude; zeta(r) = r by default.
    std::function<Jet<3>(Jet<3> const&)> eigenvalue_map = [](Jet<3> const& r) { return r; };
    int ambient_dim = 3;
    /// Recorded in output metadata.
    std::string eigenvalue_normalization = "zeta(r) = r";

    double a(double z) const { return profile(Jet<3>(z)).value(); }

    void validate() const {
        if (!profile) throw std::invalid_argument("metric profile has no evaluator");
        if (ambient_dim < 1) throw std::invalid_argument("metric profile: ambient dimension must be positive");
        double const a0 = profile(Jet<3>(1e-8)).value();
        if (std::abs(a0 - 1) > 1e-6) throw std::invalid_argument(label + ": profile must satisfy a(0) = 1");
    }
};

/// a = 1 (Euclidean).
inline MetricProfile flat_profile() {
    return {"flat", [](Jet<3> const&) { return Jet<3>(1.0); }};
}

/// a(z) = ((1 - e^{-z}) / z)^2, the negatively curved metric on G/K.
inline MetricProfile symmetric_space_profile() {
    return {"G/K exponential map", [](Jet<3> const& z) {
                auto const f = (1.0 - exp(-z)) / z;
                return f * f;
            }};
}

/// a(z) = tanh(z/2) / (z/2), the p-block of the Guillemin-Stenzel metric.
inline MetricProfile guillemin_stenzel_profile() {
    return {"Guillemin-Stenzel p-block", [](Jet<3> const& z) { return tanh(0.5 * z) / (0.5 * z); }};
}

/// 2 (cosh z - 1) / (z sinh z), the same block in the form it takes in the
/// full Kahler metric; equal to tanh(z/2)/(z/2).
inline double guillemin_stenzel_block(double z) { return 2 * (std::cosh(z) - 1) / (z * std::sinh(z)); }

struct AlphaReport {
    std::vector<double> r;
    std::vector<double> alpha;
    /// sqrt(det A) from the matrix realization, for comparison with rho.
    std::vector<double> rho_matrix;
    double max_deviation = 0;  // max |alpha - 1|
};

namespace detail {

using Mat2 = std::array<std::complex<double>, 4>;

inline Mat2 mat_mul(Mat2 const& a, Mat2 const& b) {
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2],
            a[2] * b[1] + a[3] * b[3]};
}

inline Mat2 commutator(Mat2 const& a, Mat2 const& b) {
    auto const ab = mat_mul(a, b), ba = mat_mul(b, a);
    return {ab[0] - ba[0], ab[1] - ba[1], ab[2] - ba[2], ab[3] - ba[3]};
}

inline std::array<Mat2, 3> pauli() {
    using c = std::complex<double>;
    return {Mat2{c(0), c(1), c(1), c(0)}, Mat2{c(0), c(0, -1), c(0, 1), c(0)}, Mat2{c(1), c(0), c(0), c(-1)}};
}

/// Coordinates of a traceless Hermitian 2x2 matrix in the Pauli basis.
inline std::array<double, 3> pauli_coordinates(Mat2 const& m) {
    return {0.5 * (m[1] + m[2]).real(), 0.5 * (m[2] - m[1]).imag(), 0.5 * (m[0] - m[3]).real()};
}

} // namespace detail

/// alpha(r) = <A^{-1}(x) x/r, x/r> with A realized on p = i su(2) (Pauli
/// matrices): W = ad(x)^2 on p for x = (zeta/2) n.sigma, A = m(W) with
/// m(w) = sqrt|a(sqrt w) a(-sqrt w)|.
inline AlphaReport alpha_check(MetricProfile const& metric, std::vector<double> const& r_samples) {
    metric.validate();
    auto const sigma = detail::pauli();
    // A fixed, generic unit direction.
    std::array<double, 3> const n = {0.48, -0.6, 0.64};
    AlphaReport rep;
    for (double r : r_samples) {
        if (!(r > 0)) throw std::invalid_argument("alpha_check: samples must be positive");
        double const zeta = metric.eigenvalue_map(Jet<3>(r)).value();
        detail::Mat2 x{};
        for (int i = 0; i < 3; ++i) {
            for (int k = 0; k < 4; ++k) x[static_cast<std::size_t>(k)] += 0.5 * zeta * n[static_cast<std::size_t>(i)] * sigma[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
        }
        std::vector<double> w(9);
        for (int j = 0; j < 3; ++j) {
            auto const col = detail::pauli_coordinates(detail::commutator(x, detail::commutator(x, sigma[static_cast<std::size_t>(j)])));
            for (int i = 0; i < 3; ++i) w[static_cast<std::size_t>(i * 3 + j)] = col[static_cast<std::size_t>(i)];
        }
        auto const eig = numerics::eig_sym_dense(w, 3);
        double const scale = std::max(std::abs(eig.values.front()), std::abs(eig.values.back()));
        auto m = [&](double wv) {
            // The kernel of ad(x)^2 (the direction of x itself) carries a(0) = 1.
            if (std::abs(wv) <= 1e-10 * scale) return 1.0;
            double const s = std::sqrt(std::abs(wv));
            return std::sqrt(std::abs(metric.a(s) * metric.a(-s)));
        };
        double alpha = 0, det = 1;
        for (std::size_t k = 0; k < 3; ++k) {
            double const mk = m(eig.values[k]);
            double proj = 0;
            for (std::size_t i = 0; i < 3; ++i) proj += eig.vectors[i * 3 + k] * n[i];
            alpha += proj * proj / mk;
            det *= mk;
        }
        rep.r.push_back(r);
        rep.alpha.push_back(alpha);
        rep.rho_matrix.push_back(std::sqrt(det));
        rep.max_deviation = std::max(rep.max_deviation, std::abs(alpha - 1));
    }
    return rep;
}

struct RadialGeometry {
    MetricProfile metric;

    Jet<3> rho_jet(double r) const {
        auto const zeta = metric.eigenvalue_map(Jet<3>::variable(r));
        auto const p = metric.profile(zeta) * metric.profile(-zeta);
        return sqrt(p.value() < 0 ? -p : p);
    }

    Jet<3> delta_jet(double r) const {
        auto const rr = Jet<3>::variable(r);
        Jet<3> power(1.0);
        for (int i = 1; i < metric.ambient_dim; ++i) power = power * rr;
        return rho_jet(r) * power;
    }

    double rho(double r) const { return rho_jet(r).value(); }
    double delta(double r) const { return delta_jet(r).value(); }
    double alpha(double r) const { return alpha_check(metric, {r}).alpha.front(); }

    /// D^2(delta^{1/2}) / delta^{1/2} = delta''/(2 delta) - (delta'/delta)^2 / 4 (alpha = 1).
    double gamma(double r) const {
        auto const d = delta_jet(r);
        double const l1 = d.derivative(1) / d.value();
        return 0.5 * d.derivative(2) / d.value() - 0.25 * l1 * l1;
    }

    /// (1/2)[(alpha delta')'/delta - ((ln delta)')^2] with alpha = 1.
    double gamma_printed(double r) const {
        auto const d = delta_jet(r);
        double const l1 = d.derivative(1) / d.value();
        return 0.5 * (d.derivative(2) / d.value() - l1 * l1);
    }

    /// The radial operator applied to the constant 1, with the derivative
    /// term evaluated by finite differences of delta^{1/2}.
    double annihilation_residual(double r) const {
        auto half = [&](double s) { return std::sqrt(delta(s)); };
        double const a = alpha(r);
        double const dd = numerics::second_derivative4(half, r);
        return -a * dd / half(r) + gamma(r);
    }
};

inline RadialGeometry radial_geometry(MetricProfile const& metric) {
    metric.validate();
    return RadialGeometry{metric};
}

/// For the G/K profile, delta = 4 sinh^2(r/2) and D^2(delta^{1/2})/delta^{1/2}
/// is the constant 1/4.
inline double gk_constant_shift(double r = 1.0) {
    if (!(r > 0)) throw std::invalid_argument("gk_constant_shift: r must be positive");
    return radial_geometry(symmetric_space_profile()).gamma(r);
}

} // namespace zeromode
