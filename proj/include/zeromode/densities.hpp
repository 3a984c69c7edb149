#pragma once

// Radial zero-mode densities, their Schrodinger potentials
// q = D^2(delta^{1/2}) / delta^{1/2} = (1/2)(ln delta)'' + (1/4)((ln delta)')^2,
// the rank-one inversion of the transforms, and the positivity machinery for
// the finite-radius density.

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "jet.hpp"
#include "numerics.hpp"
#include "theta.hpp"
#include "transforms.hpp"

namespace zeromode {

using Jet3 = Jet<3>;

struct RadialDensity {
    std::string label;
    /// delta as a jet in r: value, first and second derivative.
    std::function<Jet3(Jet3 const&)> jet;
    /// Z with int_0^inf delta / Z = 1.
    double normalization = 1.0;

    double evaluate(double r) const { return jet(Jet3(r)).value(); }
    double normalized(double r) const { return evaluate(r) / normalization; }

    Jet3 at(double r) const { return jet(Jet3::variable(r)); }

    double log_derivative(double r) const {
        auto const d = at(r);
        if (!(d.value() > 0)) throw DomainError(label + ": log-derivative at a zero of the density, r = " + std::to_string(r));
        return d.derivative(1) / d.value();
    }

    double log_second(double r) const {
        auto const d = at(r);
        if (!(d.value() > 0)) throw DomainError(label + ": log-derivative at a zero of the density, r = " + std::to_string(r));
        double const l1 = d.derivative(1) / d.value();
        return d.derivative(2) / d.value() - l1 * l1;
    }

    /// (1/2)(ln delta)'' + (1/4)((ln delta)')^2.
    double ground_state_potential(double r) const {
        double const l1 = log_derivative(r);
        return 0.5 * log_second(r) + 0.25 * l1 * l1;
    }
};

struct PotentialProfile {
    std::string label;
    std::function<double(double)> evaluate;
    /// lim_{r->inf} q(r) when known.
    std::optional<double> continuum_threshold;
};

namespace detail {

/// Z by quadrature on [0, inf), rescaled by the largest sampled value so that
/// the absolute tolerance is meaningful for tiny densities.
inline double density_normalization(std::function<Jet3(Jet3 const&)> const& jet, double decay_rate) {
    double scale = 0;
    for (double r = 0.05; r < 40; r += 0.05) scale = std::max(scale, std::abs(jet(Jet3(r)).value()));
    if (!(scale > 0) || !std::isfinite(scale)) throw InvariantViolation("density vanishes or overflows on its sample grid");
    numerics::QuadratureSpec spec;
    spec.abs_tol = 1e-15;
    spec.rel_tol = 1e-13;
    auto res = numerics::integrate_half_line([&](double r) { return jet(Jet3(r)).value() / scale; }, decay_rate, spec);
    return res.value * scale;
}

template <class T>
T sech(T const& x) {
    using std::cosh;
    return T(1.0) / cosh(x);
}

} // namespace detail

// ---------------------------------------------------------------------------
// infinite radius

/// sech(r) tanh^2(r); Z = pi/4.
inline RadialDensity delta_infinity() {
    RadialDensity d;
    d.label = "sech(r) tanh^2(r)";
    d.jet = [](Jet3 const& r) {
        auto const t = tanh(r);
        return detail::sech(r) * t * t;
    };
    d.normalization = detail::density_normalization(d.jet, 1.0);
    return d;
}

/// SU(2) zero-mode density with respect to dk x dx on R^3, normalized to one:
/// (8/pi^2) sech(2x) (tanh(2x)/(2x))^2.
inline double g0_density_su2(double x_norm) {
    if (!(x_norm >= 0)) throw std::invalid_argument("g0_density_su2: |x| must be nonnegative");
    double const u = 2 * x_norm;
    double const ratio = (u < 1e-4) ? 1 - u * u / 3 : std::tanh(u) / u;
    return 8 / (std::numbers::pi * std::numbers::pi) * ratio * ratio / std::cosh(u);
}

/// (a^h + a^{-h})^{-3} (a^h - a^{-h}) / (a^2 - a^{-2}), a = e^x, h = 2 + l,
/// i.e. sinh(hx) / (8 cosh^3(hx) sinh(2x)).
inline double phi_l_unnormalized(double l, double x) {
    if (!(l >= 0)) throw std::invalid_argument("phi_l: level must be nonnegative");
    double const h = 2 + l;
    double const ax = std::abs(x);
    double const c = std::cosh(h * ax);
    double ratio = 0;
    if (ax < 1e-3) {
        double const x2 = ax * ax;
        ratio = (h / 2) * (1 + (h * h - 4) * x2 / 6 + (3 * h * h * h * h - 40 * h * h + 112) * x2 * x2 / 360);
    } else {
        ratio = std::sinh(h * ax) / std::sinh(2 * ax);
    }
    return ratio / (8 * c * c * c);
}

/// Normalization of phi_l against Haar measure dg = (sinh(2|x|)/2|x|)^2 dk dx:
/// pi int_0^inf phi sinh^2(2x) dx.
inline double phi_l_normalization(double l) {
    static std::mutex mutex;
    static std::map<double, double> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(l); it != cache.end()) return it->second;
    }
    double const h = 2 + l;
    numerics::QuadratureSpec spec;
    spec.abs_tol = 1e-15;
    spec.rel_tol = 1e-13;
    auto res = numerics::integrate_half_line(
        [&](double x) {
            double const s = std::sinh(2 * x);
            return phi_l_unnormalized(l, x) * s * s;
        },
        2 * h - 2, spec);
    double const z = std::numbers::pi * res.value;
    std::lock_guard lock(mutex);
    cache.emplace(l, z);
    return z;
}

inline double phi_l(double l, double x) { return phi_l_unnormalized(l, x) / phi_l_normalization(l); }

/// sech^3(r) sinh(r) sinh(a r), a = 2/(2+l).
inline RadialDensity delta_level(double l) {
    if (!(l >= 0)) throw std::invalid_argument("delta_level: level must be nonnegative");
    double const a = 2.0 / (2.0 + l);
    RadialDensity d;
    d.label = "sech^3(r) sinh(r) sinh(a r), l = " + std::to_string(l);
    d.jet = [a](Jet3 const& r) {
        auto const s = detail::sech(r);
        return s * s * s * sinh(r) * sinh(a * r);
    };
    d.normalization = detail::density_normalization(d.jet, 2.0 - a);
    return d;
}

/// 1/4 (5 + 2a^2 - 6a tanh(r)/tanh(ar) - (a coth(ar) - coth(r))^2 - 15 sech^2(r)).
inline double potential_level_value(double a, double r) {
    double const ar = std::abs(r);
    double ratio = 0;  // tanh(r)/tanh(ar)
    double diff = 0;   // a coth(ar) - coth(r)
    if (ar < 1e-3) {
        double const r2 = ar * ar, a2 = a * a;
        ratio = (1 - r2 / 3 + 2 * r2 * r2 / 15) / (a * (1 - a2 * r2 / 3 + 2 * a2 * a2 * r2 * r2 / 15));
        double const a4 = a2 * a2;
        diff = (a2 - 1) * ar / 3 - (a4 - 1) * ar * r2 / 45 + 2 * (a4 * a2 - 1) * ar * r2 * r2 / 945;
    } else {
        ratio = std::tanh(ar) / std::tanh(a * ar);
        diff = a / std::tanh(a * ar) - 1 / std::tanh(ar);
    }
    double const sech = 1 / std::cosh(ar);
    return 0.25 * (5 + 2 * a * a - 6 * a * ratio - diff * diff - 15 * sech * sech);
}

inline PotentialProfile potential_level(double l) {
    if (!(l >= 0)) throw std::invalid_argument("potential_level: level must be nonnegative");
    double const a = 2.0 / (2.0 + l);
    return {"level potential, l = " + std::to_string(l), [a](double r) { return potential_level_value(a, r); },
            0.25 * (2 - a) * (2 - a)};
}

/// offset - depth sech^2(r); the R = infinity zero-mode potential is depth 15/4, offset 1/4.
inline PotentialProfile sech2_potential(double depth, double offset = 0.0) {
    return {"sech^2 well", [depth, offset](double r) {
                double const s = 1 / std::cosh(r);
                return offset - depth * s * s;
            },
            offset};
}

inline PotentialProfile poschl_teller_potential() {
    auto p = sech2_potential(15.0 / 4.0, 0.25);
    p.label = "1/4 - (15/4) sech^2(r)";
    return p;
}

// ---------------------------------------------------------------------------
// finite radius

namespace detail {

/// g(z) = theta3(Rz) / (sinh^2(pi/2R) + cosh^2 z) as a jet of order 4 in z.
inline Jet<4> finite_R_profile(Jet<4> const& z, ThetaParams const& tp) {
    double const R = tp.R;
    double const z0 = z.value();
    std::array<double, 4> derivs{};
    double rk = 1;
    for (int k = 0; k < 4; ++k) {
        derivs[static_cast<std::size_t>(k)] = rk * theta3_derivative(R * z0, k, tp);
        rk *= R;
    }
    double const sh = std::sinh(std::numbers::pi / (2 * R));
    auto const c = cosh(z);
    return compose(derivs, z) / (c * c + sh * sh);
}

/// -g'(r) sinh(r) as a jet of order 3 (expanded in z, then composed with r).
inline Jet3 finite_R_density_jet(Jet3 const& r, ThetaParams const& tp) {
    auto const g = finite_R_profile(Jet<4>::variable(r.value()), tp);
    Jet3 const in_z = -differentiate(g) * sinh(Jet3::variable(r.value()));
    return compose(std::array<double, 3>{in_z.derivative(0), in_z.derivative(1), in_z.derivative(2)}, r);
}

} // namespace detail

/// (-d/dr [theta3(Rr) / (sinh^2(pi/2R) + cosh^2 r)]) sinh(r), Z by quadrature.
inline RadialDensity delta_finite_R(double R, ThetaParams const& tp) {
    tp.validate();
    if (std::abs(tp.R - R) > 1e-14 * R) throw std::invalid_argument("delta_finite_R: theta modulus does not match R");
    static std::mutex mutex;
    static std::map<std::pair<double, double>, double> cache;
    RadialDensity d;
    d.label = "finite-radius density, R = " + std::to_string(R);
    d.jet = [tp](Jet3 const& r) { return detail::finite_R_density_jet(r, tp); };
    auto const key = std::make_pair(R, tp.tol);
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(key); it != cache.end()) {
            d.normalization = it->second;
            return d;
        }
    }
    d.normalization = detail::density_normalization(d.jet, 1.0);
    std::lock_guard lock(mutex);
    cache.emplace(key, d.normalization);
    return d;
}

/// q_R = (1/2)[(ln delta)'' + (1/2)((ln delta)')^2] from analytic jets.
/// The continuum threshold is not known.
inline PotentialProfile potential_finite_R(double R, ThetaParams const& tp) {
    auto const density = delta_finite_R(R, tp);
    return {"finite-radius potential, R = " + std::to_string(R),
            [density](double r) {
                if (!(r > 0)) throw DomainError("finite-radius potential: r must be positive");
                return density.ground_state_potential(r);
            },
            std::nullopt};
}

// ---------------------------------------------------------------------------
// rank-one inversion

struct InversionResult {
    /// Density with respect to Haar measure at |x| = r/2.
    double haar_density = 0;
    /// haar_density * sinh^2(r), the radial density in r.
    double radial_density = 0;
    /// Integral of the component that cancels under the Weyl sum.
    double imag_residual = 0;
    double error_estimate = 0;
};

/// Transform value H(s), s = <lambda, alpha> = 2 lambda0, for rank one:
/// s / sinh(pi s / 2h) at infinite radius, K(pi s / 2h) at finite radius
/// (both up to the normalization at s = 0).
inline double rank1_transform_profile(double s, double h, std::optional<ThetaParams> const& tp) {
    double const y = std::numbers::pi * s / (2 * h);
    if (!tp) return (2 * h / std::numbers::pi) / numerics::sinhc(y);
    return theta_sinc_kernel(y, *tp);
}

/// phi(x) = 1/(2 sinh 2x) (1/pi) int s H(s) sin(2 lambda x) d lambda with
/// s = 2 lambda, at x = r/2. Pass R = infinity for the affine transform.
inline InversionResult invert_transform_rank1(double l, double R, double r,
                                              numerics::QuadratureSpec const& spec = default_fourier_spec()) {
    if (!(l >= 0)) throw std::invalid_argument("invert_transform_rank1: level must be nonnegative");
    if (!(r > 0)) throw std::invalid_argument("invert_transform_rank1: r must be positive");
    if (!(R > 0)) throw std::invalid_argument("invert_transform_rank1: R must be positive or infinite");
    double const h = 2 + l;
    double const x = r / 2;
    std::optional<ThetaParams> tp;
    if (std::isfinite(R)) tp = ThetaParams::from_modulus(R);
    auto weight = [&](double lambda) {
        double const s = 2 * lambda;
        return s * rank1_transform_profile(s, h, tp);
    };
    double const rate = std::numbers::pi / h;
    auto even = numerics::integrate_line([&](double lam) { return weight(lam) * std::sin(2 * lam * x); }, rate, spec);
    auto odd = numerics::integrate_line([&](double lam) { return weight(lam) * std::cos(2 * lam * x); }, rate, spec);
    double const prefactor = 1 / (2 * std::sinh(2 * x) * std::numbers::pi);
    InversionResult out;
    out.haar_density = prefactor * even.value;
    out.imag_residual = prefactor * odd.value;
    out.error_estimate = prefactor * even.error_estimate;
    double const s2 = std::sinh(r);
    out.radial_density = out.haar_density * s2 * s2;
    return out;
}

// ---------------------------------------------------------------------------
// positivity of the finite-radius density

/// d/dz ln theta3(Rz, iR) = -4R sin(2Rz) sum_{n>=1} q^{n-1/2} / (1 + 2 cos(2Rz) q^{n-1/2} + q^{2n-1}).
inline double log_theta3_slope(double z, ThetaParams const& tp) {
    tp.validate();
    double const R = tp.R;
    double const c = std::cos(2 * R * z);
    auto term = [&](long n) {
        double const w = std::pow(tp.q, static_cast<double>(n) - 0.5);
        return w / (1 + 2 * c * w + w * w);
    };
    double const first = term(1);
    auto sum = numerics::sum_series(term, 1e-17 * std::abs(first) + std::numeric_limits<double>::min(), tp.max_terms);
    return -4 * R * std::sin(2 * R * z) * sum.value;
}

/// 2 sinh z cosh z / (sinh^2(pi/2R) + cosh^2 z).
inline double positivity_rhs(double z, double R) {
    double const sh = std::sinh(std::numbers::pi / (2 * R));
    double const c = std::cosh(z);
    return std::sinh(2 * z) / (sh * sh + c * c);
}

/// 2R e^{pi R} sin(theta) sum_{n>=1} 1/(cosh(2 pi R n) - cos theta).
inline double positivity_trig_form(double theta, ThetaParams const& tp) {
    double const R = tp.R;
    double const c = std::cos(theta);
    auto term = [&](long n) { return 1 / (std::cosh(2 * std::numbers::pi * R * static_cast<double>(n)) - c); };
    double const first = term(1);
    auto sum = numerics::sum_series(term, 1e-16 * first, tp.max_terms);
    return 2 * R * std::exp(std::numbers::pi * R) * std::sin(theta) * sum.value;
}

/// 2R e^{pi R} sum_{n>=1} 1/sinh(2 pi R n).
inline double positivity_large_R_bound(ThetaParams const& tp) {
    double const R = tp.R;
    auto term = [&](long n) { return 1 / std::sinh(2 * std::numbers::pi * R * static_cast<double>(n)); };
    auto sum = numerics::sum_series(term, 1e-16 * term(1), tp.max_terms);
    return 2 * R * std::exp(std::numbers::pi * R) * sum.value;
}

/// Minimum of the right-hand side on [pi/2R, pi/R], i.e. its value at pi/2R:
/// 2 sinh cosh / (sinh^2 + cosh^2) = tanh(pi/R).
inline double positivity_rhs_minimum(double R) { return std::tanh(std::numbers::pi / R); }

/// The small-R terminal bound 0.73 e^{pi R}.
inline double positivity_small_R_bound(double R) { return 0.73 * std::exp(std::numbers::pi * R); }

struct PositivityReport {
    double R = 0;
    int grid_points = 0;
    bool grid_pass = false;
    double min_margin = 0;           // min over the grid of rhs - lhs
    double min_relative_margin = 0;  // min of (rhs - lhs) / rhs
    double witness_z = 0;            // where the minimum margin occurs
    double large_R_bound = 0;
    double rhs_minimum = 0;
    double trig_form_max = 0;
    double trig_form_argmax = 0;
    double small_R_bound = 0;
    bool large_R_fires = false;
    bool small_R_fires = false;
    bool small_R_chain_holds = false;  // trig_form_max <= small_R_bound

    std::string sufficient_condition() const {
        if (large_R_fires && small_R_fires) return "large-R and small-R";
        if (large_R_fires) return "large-R";
        if (small_R_fires) return "small-R";
        return "none";
    }
};

/// Maximum of the trigonometric form over theta in [0, pi]: grid search
/// followed by golden-section refinement.
inline std::pair<double, double> positivity_trig_form_max(ThetaParams const& tp, int samples = 400) {
    double best = -std::numeric_limits<double>::infinity();
    int best_i = 0;
    double const step = std::numbers::pi / samples;
    for (int i = 1; i < samples; ++i) {
        double const v = positivity_trig_form(i * step, tp);
        if (v > best) {
            best = v;
            best_i = i;
        }
    }
    double lo = (best_i - 1) * step, hi = (best_i + 1) * step;
    double const g = (std::sqrt(5.0) - 1) / 2;
    double x1 = hi - g * (hi - lo), x2 = lo + g * (hi - lo);
    double f1 = positivity_trig_form(x1, tp), f2 = positivity_trig_form(x2, tp);
    for (int it = 0; it < 80 && hi - lo > 1e-12; ++it) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + g * (hi - lo);
            f2 = positivity_trig_form(x2, tp);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - g * (hi - lo);
            f1 = positivity_trig_form(x1, tp);
        }
    }
    double const arg = 0.5 * (lo + hi);
    return {std::max(best, positivity_trig_form(arg, tp)), arg};
}

/// Direct grid check of d/dz ln theta3(Rz) <= rhs(z) on [pi/2R, pi/R] plus the
/// two sufficient-condition chains.
inline PositivityReport positivity_check(double R, int grid_points, ThetaParams const& tp) {
    tp.validate();
    if (!(R > 0)) throw std::invalid_argument("positivity_check: R must be positive");
    if (grid_points < 2) throw std::invalid_argument("positivity_check: need at least two grid points");
    if (std::abs(tp.R - R) > 1e-14 * R) throw std::invalid_argument("positivity_check: theta modulus does not match R");
    PositivityReport rep;
    rep.R = R;
    rep.grid_points = grid_points;
    rep.min_margin = std::numeric_limits<double>::infinity();
    rep.min_relative_margin = std::numeric_limits<double>::infinity();
    double const z0 = std::numbers::pi / (2 * R);
    double const z1 = std::numbers::pi / R;
    for (int i = 0; i < grid_points; ++i) {
        double const z = z0 + (z1 - z0) * i / (grid_points - 1);
        double const lhs = log_theta3_slope(z, tp);
        double const rhs = positivity_rhs(z, R);
        double const margin = rhs - lhs;
        if (margin < rep.min_margin) {
            rep.min_margin = margin;
            rep.witness_z = z;
        }
        rep.min_relative_margin = std::min(rep.min_relative_margin, margin / rhs);
    }
    rep.grid_pass = rep.min_margin >= 0;
    rep.large_R_bound = positivity_large_R_bound(tp);
    rep.rhs_minimum = positivity_rhs_minimum(R);
    auto [mx, arg] = positivity_trig_form_max(tp);
    rep.trig_form_max = mx;
    rep.trig_form_argmax = arg;
    rep.small_R_bound = positivity_small_R_bound(R);
    rep.large_R_fires = rep.large_R_bound <= rep.rhs_minimum;
    rep.small_R_chain_holds = rep.trig_form_max <= rep.small_R_bound;
    rep.small_R_fires = R <= 0.1 && rep.small_R_bound <= rep.rhs_minimum;
    return rep;
}

} // namespace zeromode
