#pragma once

// Reference implementations used only by the tests. They are deliberately
// naive and share no code with the library.

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <vector>

namespace oracle {

using cplx = std::complex<double>;
constexpr double pi = std::numbers::pi;

/// Bilateral sums in the nome q_s = e^{-pi R} (tau = iR):
/// theta1 = -i sum (-1)^n q_s^{(n+1/2)^2} e^{(2n+1) i z}, n in [-N, N].
inline cplx theta1(cplx z, double R, int N = 60) {
    cplx sum = 0;
    for (int n = -N; n <= N; ++n) {
        double const k = n + 0.5;
        double const sign = (n % 2 == 0) ? 1.0 : -1.0;
        sum += sign * std::exp(-pi * R * k * k + cplx(0, 2 * k) * z);
    }
    return cplx(0, -1) * sum;
}

inline cplx theta3(cplx z, double R, int N = 60) {
    cplx sum = 0;
    for (int n = -N; n <= N; ++n) sum += std::exp(-pi * R * n * n + cplx(0, 2.0 * n) * z);
    return sum;
}

inline cplx theta4(cplx z, double R, int N = 60) {
    cplx sum = 0;
    for (int n = -N; n <= N; ++n) {
        double const sign = (n % 2 == 0) ? 1.0 : -1.0;
        sum += sign * std::exp(-pi * R * n * n + cplx(0, 2.0 * n) * z);
    }
    return sum;
}

/// theta1'(0) by a central difference of the bilateral sum.
inline double theta1_prime0(double R) {
    double const h = 1e-5;
    return ((theta1(cplx(h), R) - theta1(cplx(-h), R)) / (2 * h)).real();
}

/// Log-gamma by upward recurrence to Re z >= 15, then the Stirling series.
inline cplx lgamma(cplx z) {
    cplx shift = 0;
    while (z.real() < 15) {
        shift -= std::log(z);
        z += 1.0;
    }
    cplx const z2 = z * z;
    cplx series = 1.0 / (12.0 * z) - 1.0 / (360.0 * z * z2) + 1.0 / (1260.0 * z * z2 * z2) -
                  1.0 / (1680.0 * z * z2 * z2 * z2);
    return shift + (z - 0.5) * std::log(z) - z + 0.5 * std::log(2 * pi) + series;
}

inline cplx gamma(cplx z) { return std::exp(lgamma(z)); }

/// Trapezoid rule on [-L, L] with step h; spectrally accurate for analytic,
/// exponentially decaying integrands.
inline double trapezoid_line(std::function<double(double)> const& f, double L, double h) {
    long const n = static_cast<long>(std::ceil(L / h));
    double sum = f(0.0);
    for (long k = 1; k <= n; ++k) sum += f(k * h) + f(-k * h);
    return sum * h;
}

/// Composite Simpson on [a, b] with n (even) panels.
inline double simpson(std::function<double(double)> const& f, double a, double b, int n = 20000) {
    if (n % 2) ++n;
    double const h = (b - a) / n;
    double sum = f(a) + f(b);
    for (int i = 1; i < n; ++i) sum += f(a + i * h) * ((i % 2) ? 4 : 2);
    return sum * h / 3;
}

/// Partial sum, smallest terms first.
inline double brute_sum(std::function<double(double)> const& term, long N) {
    double s = 0;
    for (long n = N; n >= 1; --n) s += term(static_cast<double>(n));
    return s;
}

/// Central differences.
inline double d1(std::function<double(double)> const& f, double x, double h = 1e-4) {
    return (f(x - 2 * h) - 8 * f(x - h) + 8 * f(x + h) - f(x + 2 * h)) / (12 * h);
}

inline double d2(std::function<double(double)> const& f, double x, double h = 1e-3) {
    return (-f(x - 2 * h) + 16 * f(x - h) - 30 * f(x) + 16 * f(x + h) - f(x + 2 * h)) / (12 * h * h);
}

/// Eigenvalues of the n x n Toeplitz tridiagonal (d on the diagonal, e off it).
inline std::vector<double> toeplitz_eigenvalues(int n, double d, double e) {
    std::vector<double> v;
    for (int k = 1; k <= n; ++k) v.push_back(d + 2 * e * std::cos(k * pi / (n + 1)));
    std::sort(v.begin(), v.end());
    return v;
}

/// Real roots of a cubic x^3 + a x^2 + b x + c with three real roots (trigonometric form).
inline std::vector<double> cubic_roots(double a, double b, double c) {
    double const p = b - a * a / 3;
    double const q = 2 * a * a * a / 27 - a * b / 3 + c;
    double const m = 2 * std::sqrt(-p / 3);
    double const theta = std::acos(3 * q / (p * m)) / 3;
    std::vector<double> r;
    for (int k = 0; k < 3; ++k) r.push_back(m * std::cos(theta - 2 * pi * k / 3) - a / 3);
    return r;
}

} // namespace oracle
