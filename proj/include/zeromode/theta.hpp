#pragma once

// Jacobi theta functions at purely imaginary modulus tau = iR with nome
// q = exp(-2 pi R), normalized so that theta1(x) = 2 q^{1/8} sin x + ...
//
//   theta1(x) = 2 sum_{n>=0} (-1)^n q^{(2n+1)^2/8} sin((2n+1)x)
//   theta3(x) = 1 + 2 sum_{n>=1} q^{n^2/2} cos(2nx)
//   theta4(x) = 1 + 2 sum_{n>=1} (-1)^n q^{n^2/2} cos(2nx)
//
// Series are accumulated in long double. The *_series functions sum at the
// given argument; the plain functions first reduce the argument into the
// strip |Re x| <= pi/2, |Im x| <= pi R/2 with the quasi-periodicity
//
//   theta1(x + m pi tau) = (-1)^m exp(pi R m^2) exp(-2imx) theta1(x)
//
// (theta3 the same without the sign, theta4 with it).

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "errors.hpp"

namespace zeromode {

using cplx = std::complex<double>;

struct ThetaParams {
    double R = 1.0;
    double q = std::exp(-2 * std::numbers::pi);
    /// Relative truncation tolerance for series and products.
    double tol = 1e-18;
    long max_terms = 10000;

    static ThetaParams from_modulus(double R, double tol = 1e-18, long max_terms = 10000) {
        ThetaParams tp;
        tp.R = R;
        tp.q = std::exp(-2 * std::numbers::pi * R);
        tp.tol = tol;
        tp.max_terms = max_terms;
        tp.validate();
        return tp;
    }

    void validate() const {
        if (!(R > 0) || !std::isfinite(R)) throw std::invalid_argument("theta: modulus R must be positive and finite");
        if (!(q > 0 && q < 1)) throw std::invalid_argument("theta: nome must lie in (0, 1)");
        if (!(tol > 0)) throw std::invalid_argument("theta: tolerance must be positive");
        if (max_terms < 1) throw std::invalid_argument("theta: max_terms must be positive");
    }
};

namespace detail {

using ld = long double;
using cld = std::complex<long double>;

inline constexpr ld pi_ld = std::numbers::pi_v<long double>;

/// q^{e} = exp(-2 pi R e), in long double.
inline ld nome_power(ThetaParams const& tp, ld e) { return std::exp(-2 * pi_ld * static_cast<ld>(tp.R) * e); }

/// Shared stopping rule: past the peak of the term bounds, and the bound is
/// below tol relative to the partial sum (or has underflowed).
struct SeriesStop {
    ld previous = std::numeric_limits<ld>::infinity();

    bool done(ld bound, cld const& sum, ld tol) {
        bool const decreasing = bound < previous;
        previous = bound;
        if (!decreasing) return false;
        return bound <= tol * std::abs(sum) || bound < std::numeric_limits<ld>::min();
    }
};

[[noreturn]] inline void series_failure(char const* name, ThetaParams const& tp, cld partial) {
    throw ConvergenceError(std::string(name) + ": series did not converge within max_terms at R = " +
                               std::to_string(tp.R),
                           static_cast<double>(partial.real()));
}

inline cld theta1_series_ld(cld x, ThetaParams const& tp) {
    ld const b = std::abs(x.imag());
    cld sum = 0;
    SeriesStop stop;
    ld const tol = static_cast<ld>(tp.tol);
    for (long n = 0; n < tp.max_terms; ++n) {
        ld const k = 2 * n + 1;
        ld const w = nome_power(tp, k * k / 8);
        ld const sign = (n % 2 == 0) ? 1 : -1;
        sum += 2 * sign * w * std::sin(k * x);
        if (stop.done(2 * w * std::cosh(k * b), sum, tol)) return sum;
    }
    series_failure("theta1", tp, sum);
}

/// Shared loop for theta3 / theta4 and their derivatives in x:
/// delta_{k0} + 2 sum_{n>=1} s^n q^{n^2/2} (2n)^k d^k/du^k cos(u)|_{u=2nx}.
inline cld theta_even_series_ld(cld x, ThetaParams const& tp, bool alternating, int order) {
    ld const b = std::abs(x.imag());
    cld sum = (order == 0) ? cld(1) : cld(0);
    SeriesStop stop;
    ld const tol = static_cast<ld>(tp.tol);
    for (long n = 1; n <= tp.max_terms; ++n) {
        ld const w = nome_power(tp, static_cast<ld>(n) * n / 2);
        ld const sign = (alternating && n % 2 == 1) ? -1 : 1;
        ld const freq = 2 * static_cast<ld>(n);
        cld const u = freq * x;
        cld d;
        switch (order % 4) {
        case 0: d = std::cos(u); break;
        case 1: d = -std::sin(u); break;
        case 2: d = -std::cos(u); break;
        default: d = std::sin(u); break;
        }
        ld const scale = std::pow(freq, static_cast<ld>(order));
        sum += 2 * sign * w * scale * d;
        if (stop.done(2 * w * scale * std::cosh(freq * b), sum, tol)) return sum;
    }
    series_failure(alternating ? "theta4" : "theta3", tp, sum);
}

/// Decomposition x = x_red + k pi + m pi tau with the reduced point in the
/// fundamental strip.
struct LatticeReduction {
    cld reduced;
    long k;
    long m;
};

inline LatticeReduction reduce(cld x, ThetaParams const& tp) {
    ld const period = pi_ld * static_cast<ld>(tp.R);
    ld const mm = std::round(x.imag() / period);
    ld const kk = std::round(x.real() / pi_ld);
    return {cld(x.real() - kk * pi_ld, x.imag() - mm * period), static_cast<long>(kk), static_cast<long>(mm)};
}

} // namespace detail

// ---------------------------------------------------------------------------
// raw series / product forms

inline cplx theta1_series(cplx x, ThetaParams const& tp) {
    tp.validate();
    auto const v = detail::theta1_series_ld(detail::cld(x.real(), x.imag()), tp);
    return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
}

/// theta1(x) / sin(x) from the triple product
/// 2 q^{1/8} prod_{n>=1} (1 - q^n)(1 - q^n e^{2ix})(1 - q^n e^{-2ix}).
inline cplx theta1_over_sine(cplx x, ThetaParams const& tp) {
    tp.validate();
    using detail::cld;
    using detail::ld;
    cld const z(x.real(), x.imag());
    cld const e_plus = std::exp(cld(0, 2) * z);
    cld const e_minus = std::exp(cld(0, -2) * z);
    ld const growth = std::exp(2 * std::abs(static_cast<ld>(x.imag())));
    cld prod = 2 * detail::nome_power(tp, ld(1) / 8);
    for (long n = 1; n <= tp.max_terms; ++n) {
        ld const qn = detail::nome_power(tp, static_cast<ld>(n));
        prod *= (1 - qn) * (ld(1) - qn * e_plus) * (ld(1) - qn * e_minus);
        if (qn * (1 + growth) < static_cast<ld>(tp.tol) * 1e-2L) {
            return {static_cast<double>(prod.real()), static_cast<double>(prod.imag())};
        }
    }
    throw ConvergenceError("theta1 product did not converge within max_terms", static_cast<double>(prod.real()));
}

inline cplx theta1_product(cplx x, ThetaParams const& tp) {
    return std::sin(x) * theta1_over_sine(x, tp);
}

// ---------------------------------------------------------------------------
// lattice-reduced evaluation

inline cplx theta1(cplx x, ThetaParams const& tp) {
    tp.validate();
    using detail::cld;
    using detail::ld;
    auto const red = detail::reduce(cld(x.real(), x.imag()), tp);
    ld const sign = ((red.k + red.m) % 2 == 0) ? 1 : -1;
    ld const m = static_cast<ld>(red.m);
    cld const factor = sign * std::exp(detail::pi_ld * static_cast<ld>(tp.R) * m * m - cld(0, 2) * m * red.reduced);
    cld const v = factor * detail::theta1_series_ld(red.reduced, tp);
    return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
}

/// 1/theta1(x), with the quasi-periodic growth applied as decay so that far
/// from the real axis the result underflows to 0 instead of overflowing.
inline cplx theta1_reciprocal(cplx x, ThetaParams const& tp) {
    tp.validate();
    using detail::cld;
    using detail::ld;
    auto const red = detail::reduce(cld(x.real(), x.imag()), tp);
    ld const sign = ((red.k + red.m) % 2 == 0) ? 1 : -1;
    ld const m = static_cast<ld>(red.m);
    cld const factor = sign * std::exp(-detail::pi_ld * static_cast<ld>(tp.R) * m * m + cld(0, 2) * m * red.reduced);
    cld const v = factor / detail::theta1_series_ld(red.reduced, tp);
    return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
}

inline cplx theta3(cplx x, ThetaParams const& tp) {
    tp.validate();
    using detail::cld;
    using detail::ld;
    auto const red = detail::reduce(cld(x.real(), x.imag()), tp);
    ld const m = static_cast<ld>(red.m);
    cld const factor = std::exp(detail::pi_ld * static_cast<ld>(tp.R) * m * m - cld(0, 2) * m * red.reduced);
    cld const v = factor * detail::theta_even_series_ld(red.reduced, tp, false, 0);
    return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
}

inline cplx theta4(cplx x, ThetaParams const& tp) {
    tp.validate();
    using detail::cld;
    using detail::ld;
    auto const red = detail::reduce(cld(x.real(), x.imag()), tp);
    ld const sign = (red.m % 2 == 0) ? 1 : -1;
    ld const m = static_cast<ld>(red.m);
    cld const factor = sign * std::exp(detail::pi_ld * static_cast<ld>(tp.R) * m * m - cld(0, 2) * m * red.reduced);
    cld const v = factor * detail::theta_even_series_ld(red.reduced, tp, true, 0);
    return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
}

/// Real-argument overloads.
inline double theta3(double x, ThetaParams const& tp) { return theta3(cplx(x, 0), tp).real(); }
inline double theta4(double x, ThetaParams const& tp) { return theta4(cplx(x, 0), tp).real(); }

/// Term-wise derivative d theta3 / dx (no lattice reduction; intended for
/// moderate imaginary parts).
inline cplx theta3_dz(cplx x, ThetaParams const& tp) {
    tp.validate();
    auto const v = detail::theta_even_series_ld(detail::cld(x.real(), x.imag()), tp, false, 1);
    return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
}

/// d^order theta3 / dx^order at real x, order 0..3 (any order is accepted).
inline double theta3_derivative(double x, int order, ThetaParams const& tp) {
    tp.validate();
    if (order < 0) throw std::invalid_argument("theta3_derivative: negative order");
    detail::ld const period = detail::pi_ld;
    detail::ld const xr = static_cast<detail::ld>(x) - period * std::round(static_cast<detail::ld>(x) / period);
    return static_cast<double>(detail::theta_even_series_ld(detail::cld(xr, 0), tp, false, order).real());
}

/// theta1'(0) = 2 sum (-1)^n (2n+1) q^{(2n+1)^2/8}.
inline double theta1_prime0(ThetaParams const& tp) {
    tp.validate();
    using detail::ld;
    ld sum = 0;
    for (long n = 0; n < tp.max_terms; ++n) {
        ld const k = 2 * n + 1;
        ld const term = 2 * k * detail::nome_power(tp, k * k / 8);
        sum += (n % 2 == 0) ? term : -term;
        if (n > 0 && (term <= static_cast<ld>(tp.tol) * std::abs(sum) || term < std::numeric_limits<ld>::min())) {
            return static_cast<double>(sum);
        }
    }
    throw ConvergenceError("theta1'(0) series did not converge within max_terms");
}

} // namespace zeromode
