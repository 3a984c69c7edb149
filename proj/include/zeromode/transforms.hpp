#pragma once

// c-function products and the Fourier identities built on theta functions.
//
// Conventions: lambda is an ambient-coordinate weight (same length as rho),
// h = dual_coxeter + level, and for rank one s = <lambda, alpha> = 2 lambda0
// when lambda = lambda0 * alpha.

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "errors.hpp"
#include "numerics.hpp"
#include "root_systems.hpp"
#include "theta.hpp"

namespace zeromode {

struct SpectralParameter {
    Weight lambda;

    static SpectralParameter scaled(Weight const& direction, double factor) {
        SpectralParameter sp{direction};
        for (double& v : sp.lambda) v *= factor;
        return sp;
    }

    /// lambda0 * alpha for the first positive root.
    static SpectralParameter along_root(RootSystem const& rs, double lambda0) {
        return scaled(rs.positive_roots.front(), lambda0);
    }

    void validate(RootSystem const& rs) const {
        if (lambda.size() != rs.ambient_dim()) {
            throw std::invalid_argument("spectral parameter dimension does not match the root system");
        }
    }
};

struct ModelParams {
    double level = 0.0;
    double radius = std::numeric_limits<double>::infinity();

    double a() const { return 2.0 / (2.0 + level); }
    bool finite_radius() const { return std::isfinite(radius); }

    void validate() const {
        if (!(level >= 0) || !std::isfinite(level)) throw std::invalid_argument("level must be a finite nonnegative real");
        if (!(radius > 0)) throw std::invalid_argument("radius must be positive or infinite");
    }
};

inline double shifted_coxeter(RootSystem const& rs, ModelParams const& mp) {
    return static_cast<double>(rs.dual_coxeter) + mp.level;
}

// ---------------------------------------------------------------------------
// c-functions

/// prod_{alpha>0} <rho,alpha> / <rho - i lambda, alpha>.
inline cplx hc_c_function(RootSystem const& rs, SpectralParameter const& lam) {
    lam.validate(rs);
    cplx prod = 1.0;
    for (auto const& alpha : rs.positive_roots) {
        double const ra = rs.pairing(rs.rho, alpha);
        double const la = rs.pairing(lam.lambda, alpha);
        prod *= ra / cplx(ra, -la);
    }
    return prod;
}

/// prod_{alpha>0} sin(pi <rho,alpha> / 2h) / sin(pi <rho - i lambda, alpha> / 2h).
inline cplx affine_c_function(RootSystem const& rs, ModelParams const& mp, SpectralParameter const& lam) {
    mp.validate();
    lam.validate(rs);
    double const h = shifted_coxeter(rs, mp);
    double const k = std::numbers::pi / (2 * h);
    cplx prod = 1.0;
    for (auto const& alpha : rs.positive_roots) {
        double const ra = rs.pairing(rs.rho, alpha);
        double const la = rs.pairing(lam.lambda, alpha);
        prod *= std::sin(k * ra) / std::sin(k * cplx(ra, -la));
    }
    return prod;
}

struct GammaFormResult {
    cplx lhs;
    /// prod over +-alpha of Gamma(1 + i pi <lambda,alpha> / 2h).
    cplx rhs_printed;
    /// The same product without the factor pi in the Gamma argument.
    cplx rhs_without_pi;
};

/// lhs = c prod_{alpha>0} <-i lambda,alpha> / sin(pi <-i lambda,alpha> / 2h),
/// with c matching the Gamma products at lambda = 0 (where both are 1).
inline GammaFormResult hc_transform_gamma_form(RootSystem const& rs, ModelParams const& mp,
                                               SpectralParameter const& lam) {
    mp.validate();
    lam.validate(rs);
    double const h = shifted_coxeter(rs, mp);
    double const k = std::numbers::pi / (2 * h);
    GammaFormResult out{1.0, 1.0, 1.0};
    for (auto const& alpha : rs.positive_roots) {
        double const s = rs.pairing(lam.lambda, alpha);
        cplx const u(0, -s);
        cplx const ratio = (s == 0) ? cplx(1.0 / k) : u / std::sin(k * u);
        out.lhs *= k * ratio;
        for (double sign : {1.0, -1.0}) {
            out.rhs_printed *= numerics::gamma(cplx(1, sign * std::numbers::pi * s / (2 * h)));
            out.rhs_without_pi *= numerics::gamma(cplx(1, sign * s / (2 * h)));
        }
    }
    return out;
}

/// c prod_{alpha>0} sinh(pi u / (2 R h)) / (u theta1(pi u / 2h, iR)),
/// u = <rho - i lambda, alpha>, normalized to 1 at lambda = 0.
inline cplx finite_R_transform(RootSystem const& rs, ModelParams const& mp, SpectralParameter const& lam,
                               ThetaParams const& tp) {
    mp.validate();
    lam.validate(rs);
    if (!mp.finite_radius()) throw std::invalid_argument("finite_R_transform: radius must be finite");
    if (std::abs(tp.R - mp.radius) > 1e-14 * mp.radius) {
        throw std::invalid_argument("finite_R_transform: theta modulus does not match the model radius");
    }
    double const h = shifted_coxeter(rs, mp);
    double const k = std::numbers::pi / (2 * h);
    auto factor = [&](cplx u) { return std::sinh(k * u / mp.radius) / u * theta1_reciprocal(k * u, tp); };
    cplx prod = 1.0;
    for (auto const& alpha : rs.positive_roots) {
        double const ra = rs.pairing(rs.rho, alpha);
        double const la = rs.pairing(lam.lambda, alpha);
        prod *= factor(cplx(ra, -la)) / factor(cplx(ra, 0));
    }
    return prod;
}

// ---------------------------------------------------------------------------
// the kernel sin(y/R) / T(y), where theta1(iy) = i T(y)

/// K(y) = sin(y/R) / T(y). Real, even, smooth: the zeros of the sine at
/// y = m pi R cancel those of theta1(i y). Evaluated from y = m pi R + t as
/// exp(-pi R m^2 - 2 m t) sinc(t/R) / (R sinhc(t) P(it)), P = theta1 / sin.
inline double theta_sinc_kernel(double y, ThetaParams const& tp) {
    tp.validate();
    double const period = std::numbers::pi * tp.R;
    double const m = std::round(y / period);
    double const t = y - m * period;
    double const p = theta1_over_sine(cplx(0, t), tp).real();
    return std::exp(-period * m * m - 2 * m * t) * numerics::sinc(t / tp.R) /
           (tp.R * numerics::sinhc(t) * p);
}

/// One positive-root factor sin(pi s / (2 R h)) / theta1(i pi s / 2h, iR)
/// of the finite-radius transform, as a function of s = <lambda, alpha>.
inline cplx finite_R_hc_factor(double s, double h, ThetaParams const& tp) {
    double const y = std::numbers::pi * s / (2 * h);
    return cplx(0, -theta_sinc_kernel(y, tp));
}

// ---------------------------------------------------------------------------
// Fourier identities

struct FourierCheck {
    double quadrature = 0;
    double closed_form = 0;
    double imag_residual = 0;
    double error_estimate = 0;

    double relative_error() const {
        return std::abs(quadrature - closed_form) / std::max(std::abs(closed_form), std::numeric_limits<double>::min());
    }
};

inline numerics::QuadratureSpec default_fourier_spec() {
    numerics::QuadratureSpec spec;
    spec.abs_tol = 1e-14;
    spec.rel_tol = 1e-12;
    return spec;
}

/// (1/2pi) int e^{ipy} / theta1(x0 + iy) dy against
/// theta4(pi R p / 2) / (theta1'(0) (e^{x0 p} + e^{(x0 - pi) p})).
inline FourierCheck theta_reciprocal_fourier(double x0, double p, ThetaParams const& tp,
                                             numerics::QuadratureSpec const& spec = default_fourier_spec()) {
    tp.validate();
    if (!(x0 > 0 && x0 < std::numbers::pi)) throw std::invalid_argument("x0 must lie in (0, pi)");
    auto value = [&](double y) { return std::exp(cplx(0, p * y)) * theta1_reciprocal(cplx(x0, y), tp); };
    auto re = numerics::integrate_line([&](double y) { return value(y).real(); }, 1.0, spec);
    auto im = numerics::integrate_line([&](double y) { return value(y).imag(); }, 1.0, spec);
    double const inv2pi = 1.0 / (2 * std::numbers::pi);
    FourierCheck out;
    out.quadrature = re.value * inv2pi;
    out.imag_residual = im.value * inv2pi;
    out.error_estimate = re.error_estimate * inv2pi;
    out.closed_form = theta4(std::numbers::pi * tp.R * p / 2, tp) /
                      (theta1_prime0(tp) * (std::exp(x0 * p) + std::exp((x0 - std::numbers::pi) * p)));
    return out;
}

/// (i/2pi) int (y / theta1(iy)) (sinh(iy/R) / (iy/R)) e^{ipy} dy, which is
/// (R/2pi) int K(y) e^{ipy} dy, against
/// R sinh(pi/R) theta3(pi R p / 2) / (4 theta1'(0) (sinh^2(pi/2R) + cosh^2(pi p/2))).
inline FourierCheck theta_sinc_fourier(double p, ThetaParams const& tp,
                                       numerics::QuadratureSpec const& spec = default_fourier_spec()) {
    tp.validate();
    double const R = tp.R;
    auto re = numerics::integrate_line([&](double y) { return theta_sinc_kernel(y, tp) * std::cos(p * y); }, 1.0, spec);
    auto im = numerics::integrate_line([&](double y) { return theta_sinc_kernel(y, tp) * std::sin(p * y); }, 1.0, spec);
    double const scale = R / (2 * std::numbers::pi);
    FourierCheck out;
    out.quadrature = re.value * scale;
    out.imag_residual = im.value * scale;
    out.error_estimate = re.error_estimate * scale;
    double const sh = std::sinh(std::numbers::pi / (2 * R));
    double const ch = std::cosh(std::numbers::pi * p / 2);
    out.closed_form = R * std::sinh(std::numbers::pi / R) * theta3(std::numbers::pi * R * p / 2, tp) /
                      (4 * theta1_prime0(tp) * (sh * sh + ch * ch));
    return out;
}

struct TermwiseCheck {
    double quadrature = 0;
    double imag_residual = 0;
    /// sin(pi n R p) / (sinh(pi n R) (e^{x0 p} + e^{(x0 - pi) p})).
    double printed = 0;
    /// Residue evaluation: sin(pi n R p) / ((1 - q^{2n}) (e^{x0 p} - e^{(x0 - pi) p})).
    double residue = 0;

    double relative_error_printed() const { return std::abs(quadrature - printed) / std::abs(quadrature); }
    double relative_error_residue() const { return std::abs(quadrature - residue) / std::abs(quadrature); }
};

/// (1/2pi) int e^{ipy} / (1 - 2 cos(2(x0 + iy)) q^n + q^{2n}) dy.
inline TermwiseCheck termwise_ft(double x0, int n, double p, ThetaParams const& tp,
                                 numerics::QuadratureSpec const& spec = default_fourier_spec()) {
    tp.validate();
    if (!(x0 > 0 && x0 < std::numbers::pi)) throw std::invalid_argument("x0 must lie in (0, pi)");
    if (n < 1) throw std::invalid_argument("termwise_ft: n must be positive");
    double const qn = std::pow(tp.q, n);
    auto value = [&](double y) {
        cplx const denom = 1.0 - 2.0 * std::cos(2.0 * cplx(x0, y)) * qn + qn * qn;
        return std::exp(cplx(0, p * y)) / denom;
    };
    auto re = numerics::integrate_line([&](double y) { return value(y).real(); }, 2.0, spec);
    auto im = numerics::integrate_line([&](double y) { return value(y).imag(); }, 2.0, spec);
    double const pi = std::numbers::pi;
    TermwiseCheck out;
    out.quadrature = re.value / (2 * pi);
    out.imag_residual = im.value / (2 * pi);
    double const nR = n * tp.R;
    out.printed = std::sin(pi * nR * p) / (std::sinh(pi * nR) * (std::exp(x0 * p) + std::exp((x0 - pi) * p)));
    out.residue = nR * numerics::sinc(pi * nR * p) /
                  ((1 - qn * qn) * std::exp((x0 - pi / 2) * p) * numerics::sinhc(pi * p / 2));
    return out;
}

struct PoissonCheck {
    double lhs = 0;
    double rhs = 0;
};

/// sum_{n>=1} 1/(alpha^2 + n^2) against (pi coth(pi alpha)/alpha - 1/alpha^2)/2.
inline PoissonCheck poisson_identity(double alpha, double tol = 1e-13) {
    if (!(alpha > 0)) throw std::invalid_argument("poisson_identity: alpha must be positive");
    double const a2 = alpha * alpha;
    auto sum = numerics::sum_series([&](long n) { return 1.0 / (a2 + static_cast<double>(n) * n); }, tol, 1L << 30);
    double const pi = std::numbers::pi;
    double const x = pi * alpha;
    double rhs = 0;
    if (x < 1e-2) {
        double const x2 = x * x;
        rhs = pi * pi * (1.0 / 3 - x2 / 45 + 2 * x2 * x2 / 945 - x2 * x2 * x2 / 4725) / 2;
    } else {
        rhs = 0.5 * (pi / (alpha * std::tanh(x)) - 1 / a2);
    }
    return {sum.value, rhs};
}

// ---------------------------------------------------------------------------
// positive-definiteness proxy

/// Smallest eigenvalue of M_jk = F(t_j - t_k) for a (Hermitian-symmetric) F.
template <class F>
double gram_min_eigenvalue(std::vector<double> const& points, F&& f) {
    std::size_t const n = points.size();
    std::vector<cplx> m(n * n);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) m[j * n + k] = f(points[j] - points[k]);
    }
    return numerics::min_eigenvalue_hermitian(m, n);
}

/// Gram check for the finite-radius transform restricted to lambda = t * alpha.
inline double finite_R_gram_min_eigenvalue(RootSystem const& rs, ModelParams const& mp, ThetaParams const& tp,
                                           std::vector<double> const& points) {
    return gram_min_eigenvalue(points, [&](double t) {
        return finite_R_transform(rs, mp, SpectralParameter::along_root(rs, t), tp);
    });
}

} // namespace zeromode
