#pragma once

// Shared numerical kernels: line quadrature, tolerance-driven series
// summation, the symmetric tridiagonal eigensolver (Sturm bisection plus
// inverse iteration), a small dense symmetric eigensolver, complex Gamma and
// fourth-order finite differences.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdio>
#include <functional>
#include <future>
#include <limits>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <type_traits>
#include <utility>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "errors.hpp"

namespace zeromode::numerics {

inline constexpr double pi = std::numbers::pi;

// ---------------------------------------------------------------------------
// small helpers

/// sin(x)/x with the removable point handled.
inline double sinc(double x) {
    if (std::abs(x) < 1e-4) {
        double const x2 = x * x;
        return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
    }
    return std::sin(x) / x;
}

/// sinh(x)/x with the removable point handled.
inline double sinhc(double x) {
    if (std::abs(x) < 1e-4) {
        double const x2 = x * x;
        return 1.0 + x2 / 6.0 + x2 * x2 / 120.0;
    }
    return std::sinh(x) / x;
}

/// Neumaier compensated accumulator.
template <class Real = double>
class CompensatedSum {
public:
    void add(Real v) {
        Real const t = sum_ + v;
        if (std::abs(sum_) >= std::abs(v)) {
            comp_ += (sum_ - t) + v;
        } else {
            comp_ += (v - t) + sum_;
        }
        sum_ = t;
    }
    Real value() const { return sum_ + comp_; }

private:
    Real sum_{0};
    Real comp_{0};
};

// ---------------------------------------------------------------------------
// quadrature

struct QuadratureSpec {
    double abs_tol = 1e-14;
    double rel_tol = 1e-12;
    /// Half-width of the integration window for integrate_line; nullopt picks
    /// it from the decay-rate hint and probes the integrand at the cutoff.
    std::optional<double> truncation_radius;
    /// Upper bound on the number of bisections per panel.
    int max_subdivisions = 4096;
    /// Panels are pre-split to at most this width before adaptive refinement.
    double panel_width = 2.0;

    void validate() const {
        if (!(abs_tol > 0) || !(rel_tol > 0)) {
            throw std::invalid_argument("quadrature tolerances must be positive");
        }
        if (truncation_radius && !(*truncation_radius > 0)) {
            throw std::invalid_argument("truncation radius must be positive");
        }
        if (max_subdivisions < 1 || !(panel_width > 0)) {
            throw std::invalid_argument("invalid quadrature subdivision settings");
        }
    }
};

struct QuadratureResult {
    double value = 0;
    double error_estimate = 0;
    /// Truncation radius actually used (0 for finite intervals).
    double radius = 0;
};

/// Adaptive Gauss-Kronrod (31 point) on [a, b], pre-split into panels.
/// Throws ConvergenceError (carrying the partial value) if the accumulated
/// error estimate exceeds max(abs_tol, rel_tol * max(|value|, L1 norm)).
template <class F>
QuadratureResult integrate_interval(F&& f, double a, double b, QuadratureSpec const& spec = {}) {
    spec.validate();
    if (!(b > a)) {
        if (a == b) return {};
        throw std::invalid_argument("integrate_interval: expected a < b");
    }
    using gk = boost::math::quadrature::gauss_kronrod<double, 31>;
    int const panels = std::max(1, static_cast<int>(std::ceil((b - a) / spec.panel_width)));
    unsigned const depth =
        static_cast<unsigned>(std::ceil(std::log2(static_cast<double>(spec.max_subdivisions))));
    double const width = (b - a) / panels;

    CompensatedSum<double> value;
    double error = 0;
    double l1 = 0;
    for (int k = 0; k < panels; ++k) {
        double const lo = a + k * width;
        double const hi = (k + 1 == panels) ? b : a + (k + 1) * width;
        double err = 0;
        double panel_l1 = 0;
        double const v = gk::integrate(f, lo, hi, depth, spec.rel_tol, &err, &panel_l1);
        value.add(v);
        error += err;
        l1 += panel_l1;
    }
    QuadratureResult out{value.value(), error, 0.0};
    // Cancellation limits the attainable relative accuracy, so the relative
    // tolerance is measured against the larger of |value| and the L1 norm.
    double const allowed = std::max(spec.abs_tol, spec.rel_tol * std::max(std::abs(out.value), l1));
    if (!std::isfinite(out.value) || out.error_estimate > allowed) {
        char msg[160];
        std::snprintf(msg, sizeof msg, "quadrature did not reach tolerance on [%.6g, %.6g]: error estimate %.3e",
                      a, b, error);
        throw ConvergenceError(msg, out.value);
    }
    return out;
}

/// Integral over the real line of an integrand with (at least) exponential
/// decay e^{-rate |y|}. The window [-Y, Y] comes from the spec, or from
/// e^{-rate Y} < abs_tol, widened until the integrand is negligible at the edges.
template <class F>
QuadratureResult integrate_line(F&& f, double decay_rate_hint, QuadratureSpec const& spec = {}) {
    spec.validate();
    if (!(decay_rate_hint > 0)) {
        throw std::invalid_argument("integrate_line: decay rate hint must be positive");
    }
    double radius = 0;
    if (spec.truncation_radius) {
        radius = *spec.truncation_radius;
    } else {
        radius = std::log(1.0 / spec.abs_tol) / decay_rate_hint;
        auto edge = [&](double y) { return std::max(std::abs(f(y)), std::abs(f(-y))); };
        for (int i = 0; i < 40 && edge(radius) / decay_rate_hint > 0.01 * spec.abs_tol; ++i) {
            radius *= 1.25;
        }
    }
    auto left = integrate_interval(f, -radius, 0.0, spec);
    auto right = integrate_interval(f, 0.0, radius, spec);
    return {left.value + right.value, left.error_estimate + right.error_estimate, radius};
}

/// Integral over [0, inf) of an integrand decaying at least like e^{-rate y}.
template <class F>
QuadratureResult integrate_half_line(F&& f, double decay_rate_hint, QuadratureSpec const& spec = {}) {
    spec.validate();
    if (!(decay_rate_hint > 0)) {
        throw std::invalid_argument("integrate_half_line: decay rate hint must be positive");
    }
    double radius = 0;
    if (spec.truncation_radius) {
        radius = *spec.truncation_radius;
    } else {
        radius = std::log(1.0 / spec.abs_tol) / decay_rate_hint;
        for (int i = 0; i < 40 && std::abs(f(radius)) / decay_rate_hint > 0.01 * spec.abs_tol; ++i) {
            radius *= 1.25;
        }
    }
    auto out = integrate_interval(f, 0.0, radius, spec);
    out.radius = radius;
    return out;
}

// ---------------------------------------------------------------------------
// series

struct SeriesResult {
    double value = 0;
    /// Bound (geometric / alternating) or extrapolation-difference estimate of
    /// the remaining error.
    double tail_bound = 0;
    long terms = 0;
};

/// Sum term(n) for n = first, first+1, ... until the remaining tail is below
/// tol. Geometric tails use a ratio bound, alternating tails the averaged
/// partial sum, and slowly (algebraically) decaying positive tails Richardson
/// extrapolation of partial sums at doubling cut-offs.
template <class Term>
SeriesResult sum_series(Term&& term, double tol, long max_terms, long first = 1) {
    if (!(tol > 0) || max_terms < 1) {
        throw std::invalid_argument("sum_series: tol must be positive and max_terms >= 1");
    }
    CompensatedSum<double> sum;
    long n = first;
    long const last = first + max_terms - 1;
    double prev = 0;
    double prev_ratio = 1;
    long count = 0;

    auto t_at = [&](long k) { return static_cast<double>(term(k)); };

    constexpr long warmup = 8;
    constexpr long richardson_start = 64;
    for (; n <= last; ++n) {
        double const t = t_at(n);
        sum.add(t);
        ++count;
        if (count >= 2 && prev != 0) {
            double const ratio = std::abs(t / prev);
            bool const alternating = (t < 0) != (prev < 0) && std::abs(t) <= std::abs(prev);
            if (t == 0 && count >= warmup) {
                return {sum.value(), 0.0, count};
            }
            if (count >= warmup && ratio < 0.95 && prev_ratio < 0.95 && ratio <= prev_ratio * 1.0001) {
                double const bound = std::abs(t) * ratio / (1 - ratio);
                if (bound < tol) return {sum.value(), bound, count};
            } else if (count >= warmup && alternating) {
                double const t1 = t_at(n + 1);
                double const t2 = t_at(n + 2);
                double const bound = 0.5 * std::abs(t1 + t2);
                if (bound < tol) return {sum.value() + 0.5 * t1, bound, count};
            } else if (count >= richardson_start && !alternating && ratio > 0.95) {
                break;
            }
            prev_ratio = ratio;
        }
        prev = t;
    }
    if (n > last) {
        throw ConvergenceError("sum_series: max_terms exceeded", sum.value());
    }

    // Richardson on S_N, N = count * 2^k, tail expanded in powers of 1/N.
    std::vector<std::vector<double>> table;
    long cut = count;
    long next = n + 1;
    double best = sum.value();
    double best_err = std::numeric_limits<double>::infinity();
    table.push_back({sum.value()});
    while (true) {
        long const target = 2 * cut;
        if (first + target - 1 > last) {
            throw ConvergenceError("sum_series: extrapolation did not converge within max_terms", best);
        }
        for (; next <= first + target - 1; ++next) sum.add(t_at(next));
        cut = target;
        std::vector<double> row{sum.value()};
        auto const& above = table.back();
        for (std::size_t j = 1; j <= above.size(); ++j) {
            double const factor = std::ldexp(1.0, static_cast<int>(j)) - 1.0;
            row.push_back(row[j - 1] + (row[j - 1] - above[j - 1]) / factor);
        }
        double const err = std::abs(row.back() - above.back());
        if (err < best_err) {
            best_err = err;
            best = row.back();
        }
        table.push_back(std::move(row));
        if (best_err < tol && table.size() >= 4) {
            return {best, best_err, cut};
        }
        if (table.size() > 24) {
            throw ConvergenceError("sum_series: extrapolation table exhausted", best);
        }
    }
}

// ---------------------------------------------------------------------------
// symmetric tridiagonal eigenproblems

struct TridiagonalSystem {
    std::vector<double> diagonal;
    std::vector<double> off_diagonal;

    std::size_t size() const { return diagonal.size(); }

    void validate() const {
        if (diagonal.empty()) throw std::invalid_argument("tridiagonal system is empty");
        if (off_diagonal.size() + 1 != diagonal.size()) {
            throw std::invalid_argument("off-diagonal must be one shorter than the diagonal");
        }
    }
};

/// Number of eigenvalues strictly below x (Sturm sequence via LDL^T pivots).
inline std::size_t sturm_count(TridiagonalSystem const& sys, double x) {
    auto const& d = sys.diagonal;
    auto const& e = sys.off_diagonal;
    double scale = 0;
    for (double v : d) scale = std::max(scale, std::abs(v));
    for (double v : e) scale = std::max(scale, std::abs(v));
    double const pivmin = std::numeric_limits<double>::min() * std::max(1.0, scale * scale);

    std::size_t count = 0;
    double q = d[0] - x;
    if (std::abs(q) < pivmin) q = -pivmin;
    if (q < 0) ++count;
    for (std::size_t i = 1; i < d.size(); ++i) {
        q = d[i] - x - e[i - 1] * e[i - 1] / q;
        if (std::abs(q) < pivmin) q = -pivmin;
        if (q < 0) ++count;
    }
    return count;
}

/// Gershgorin enclosure of the spectrum.
inline std::pair<double, double> gershgorin_bounds(TridiagonalSystem const& sys) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    std::size_t const n = sys.size();
    for (std::size_t i = 0; i < n; ++i) {
        double r = 0;
        if (i > 0) r += std::abs(sys.off_diagonal[i - 1]);
        if (i + 1 < n) r += std::abs(sys.off_diagonal[i]);
        lo = std::min(lo, sys.diagonal[i] - r);
        hi = std::max(hi, sys.diagonal[i] + r);
    }
    return {lo, hi};
}

/// All eigenvalues in [lo, hi), ascending, by bisection on the Sturm count.
inline std::vector<double> eig_sym_tridiag(TridiagonalSystem const& sys, double lo, double hi,
                                           double abs_tol = 1e-13) {
    sys.validate();
    if (!(hi > lo)) throw std::invalid_argument("eig_sym_tridiag: empty interval");
    auto [glo, ghi] = gershgorin_bounds(sys);
    double const left_bound = std::max(lo, glo - 1.0);
    double const right_bound = std::min(hi, ghi + 1.0);
    std::vector<double> out;
    if (!(right_bound > left_bound)) return out;

    std::size_t const k0 = sturm_count(sys, lo);
    std::size_t const k1 = sturm_count(sys, hi);
    for (std::size_t k = k0; k < k1; ++k) {
        double a = left_bound;
        double b = right_bound;
        for (int it = 0; it < 200; ++it) {
            double const width = b - a;
            double const floor = std::max(abs_tol, 4 * std::numeric_limits<double>::epsilon() *
                                                       std::max(std::abs(a), std::abs(b)));
            if (width <= floor) break;
            double const mid = 0.5 * (a + b);
            if (sturm_count(sys, mid) > k) {
                b = mid;
            } else {
                a = mid;
            }
        }
        out.push_back(0.5 * (a + b));
    }
    return out;
}

/// Eigenvector for an (accurate) eigenvalue by inverse iteration with a
/// pivoted tridiagonal solve. Normalized to unit Euclidean norm.
inline std::vector<double> eigenvector_tridiag(TridiagonalSystem const& sys, double eigenvalue,
                                               int iterations = 3) {
    sys.validate();
    std::size_t const n = sys.size();
    double scale = 0;
    for (double v : sys.diagonal) scale = std::max(scale, std::abs(v));
    double const shift = eigenvalue + 16 * std::numeric_limits<double>::epsilon() * std::max(1.0, scale);

    // LU with partial pivoting: rows carry up to two super-diagonals.
    std::vector<double> dl(sys.off_diagonal), d(n), du(sys.off_diagonal), du2(n > 2 ? n - 2 : 0, 0.0);
    for (std::size_t i = 0; i < n; ++i) d[i] = sys.diagonal[i] - shift;
    std::vector<char> swapped(n > 0 ? n - 1 : 0, 0);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (std::abs(d[i]) >= std::abs(dl[i])) {
            if (d[i] == 0) d[i] = std::numeric_limits<double>::epsilon() * std::max(1.0, scale);
            double const m = dl[i] / d[i];
            dl[i] = m;
            d[i + 1] -= m * du[i];
            if (i + 2 < n) du2[i] = 0;
        } else {
            double const m = d[i] / dl[i];
            d[i] = dl[i];
            dl[i] = m;
            double const tmp = du[i];
            du[i] = d[i + 1];
            d[i + 1] = tmp - m * d[i + 1];
            if (i + 2 < n) {
                du2[i] = du[i + 1];
                du[i + 1] = -m * du[i + 1];
            }
            swapped[i] = 1;
        }
    }
    if (d[n - 1] == 0) d[n - 1] = std::numeric_limits<double>::epsilon() * std::max(1.0, scale);

    auto solve = [&](std::vector<double>& b) {
        for (std::size_t i = 0; i + 1 < n; ++i) {
            if (swapped[i]) {
                double const tmp = b[i];
                b[i] = b[i + 1];
                b[i + 1] = tmp - dl[i] * b[i];
            } else {
                b[i + 1] -= dl[i] * b[i];
            }
        }
        b[n - 1] /= d[n - 1];
        if (n > 1) b[n - 2] = (b[n - 2] - du[n - 2] * b[n - 1]) / d[n - 2];
        for (std::size_t ii = n; ii-- > 2;) {
            std::size_t const i = ii - 2;
            b[i] = (b[i] - du[i] * b[i + 1] - du2[i] * b[i + 2]) / d[i];
        }
    };

    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = 1.0 + 0.1 * std::sin(static_cast<double>(i) + 1.0);
    for (int it = 0; it < iterations; ++it) {
        solve(v);
        double norm = 0;
        for (double x : v) norm += x * x;
        norm = std::sqrt(norm);
        for (double& x : v) x /= norm;
    }
    return v;
}

// ---------------------------------------------------------------------------
// dense symmetric eigenproblems (small matrices)

struct DenseEigen {
    std::vector<double> values;   // ascending
    std::vector<double> vectors;  // column k is the k-th eigenvector, row-major n x n
};

/// Cyclic Jacobi rotations on a row-major symmetric n x n matrix.
inline DenseEigen eig_sym_dense(std::vector<double> a, std::size_t n) {
    if (a.size() != n * n) throw std::invalid_argument("eig_sym_dense: size mismatch");
    std::vector<double> v(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) v[i * n + i] = 1.0;
    auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * n + j]; };

    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0, total = 0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                total += at(i, j) * at(i, j);
                if (i != j) off += at(i, j) * at(i, j);
            }
        }
        if (off <= 1e-30 * std::max(total, 1e-300)) break;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                if (at(p, q) == 0) continue;
                double const theta = (at(q, q) - at(p, p)) / (2 * at(p, q));
                double const t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
                double const c = 1 / std::sqrt(t * t + 1);
                double const s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    double const akp = at(k, p), akq = at(k, q);
                    at(k, p) = c * akp - s * akq;
                    at(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    double const apk = at(p, k), aqk = at(q, k);
                    at(p, k) = c * apk - s * aqk;
                    at(q, k) = s * apk + c * aqk;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    double const vkp = v[k * n + p], vkq = v[k * n + q];
                    v[k * n + p] = c * vkp - s * vkq;
                    v[k * n + q] = s * vkp + c * vkq;
                }
            }
        }
    }
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return at(x, x) < at(y, y); });
    DenseEigen out;
    out.values.resize(n);
    out.vectors.resize(n * n);
    for (std::size_t k = 0; k < n; ++k) {
        out.values[k] = at(order[k], order[k]);
        for (std::size_t i = 0; i < n; ++i) out.vectors[i * n + k] = v[i * n + order[k]];
    }
    return out;
}

/// Smallest eigenvalue of a Hermitian matrix (row-major), via the real
/// symmetric embedding [[Re, -Im], [Im, Re]].
inline double min_eigenvalue_hermitian(std::vector<std::complex<double>> const& h, std::size_t n) {
    if (h.size() != n * n) throw std::invalid_argument("min_eigenvalue_hermitian: size mismatch");
    std::size_t const m = 2 * n;
    std::vector<double> a(m * m);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            auto const z = h[i * n + j];
            a[i * m + j] = z.real();
            a[(i + n) * m + (j + n)] = z.real();
            a[i * m + (j + n)] = -z.imag();
            a[(i + n) * m + j] = z.imag();
        }
    }
    return eig_sym_dense(std::move(a), m).values.front();
}

// ---------------------------------------------------------------------------
// complex Gamma (Lanczos, g = 7, n = 9)

inline std::complex<double> gamma(std::complex<double> z) {
    static constexpr std::array<double, 9> coeff = {
        0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
        771.32342877765313,   -176.61502916214059,   12.507343278686905,
        -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
    if (z.real() < 0.5) {
        return pi / (std::sin(pi * z) * gamma(1.0 - z));
    }
    z -= 1.0;
    std::complex<double> x = coeff[0];
    for (std::size_t i = 1; i < coeff.size(); ++i) x += coeff[i] / (z + static_cast<double>(i));
    std::complex<double> const t = z + 7.5;
    return std::sqrt(2 * pi) * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

// ---------------------------------------------------------------------------
// finite differences (4th-order central)

template <class F>
double derivative4(F&& f, double x, std::optional<double> step = std::nullopt) {
    double const h = step ? *step
                          : std::pow(std::numeric_limits<double>::epsilon(), 0.2) * std::max(1.0, std::abs(x));
    return (-f(x + 2 * h) + 8 * f(x + h) - 8 * f(x - h) + f(x - 2 * h)) / (12 * h);
}

template <class F>
double second_derivative4(F&& f, double x, std::optional<double> step = std::nullopt) {
    double const h = step ? *step
                          : std::pow(std::numeric_limits<double>::epsilon(), 1.0 / 6.0) * std::max(1.0, std::abs(x));
    return (-f(x + 2 * h) + 16 * f(x + h) - 30 * f(x) + 16 * f(x - h) - f(x - 2 * h)) / (12 * h * h);
}

// ---------------------------------------------------------------------------
// parameter scans

/// Evaluates fn(i) for i in [0, count) on up to hardware_concurrency threads;
/// results are returned in index order.
template <class Fn>
auto parallel_map(std::size_t count, Fn&& fn) -> std::vector<std::invoke_result_t<Fn&, std::size_t>> {
    using T = std::invoke_result_t<Fn&, std::size_t>;
    std::vector<std::optional<T>> slots(count);
    unsigned const workers = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(),
                                                             static_cast<unsigned>(std::max<std::size_t>(count, 1))));
    if (workers <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) slots[i].emplace(fn(i));
    } else {
        std::vector<std::future<void>> jobs;
        for (unsigned w = 0; w < workers; ++w) {
            jobs.push_back(std::async(std::launch::async, [&, w] {
                for (std::size_t i = w; i < count; i += workers) slots[i].emplace(fn(i));
            }));
        }
        for (auto& j : jobs) j.get();
    }
    std::vector<T> out;
    out.reserve(count);
    for (auto& s : slots) out.push_back(std::move(*s));
    return out;
}

} // namespace zeromode::numerics
