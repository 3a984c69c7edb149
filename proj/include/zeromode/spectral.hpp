#pragma once

// Half-line Schrodinger operators -D^2 + q(r): second-order finite
// differences, Sturm-bisection eigenvalues with Richardson extrapolation
// across two grids, ground states by inverse iteration, and a full-line
// scattering probe for sech^2 wells.

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/numeric/odeint.hpp>

#include "densities.hpp"
#include "errors.hpp"
#include "numerics.hpp"

namespace zeromode {

enum class Parity { odd, even };

inline char const* to_string(Parity p) { return p == Parity::odd ? "odd" : "even"; }

struct SchrodingerProblem {
    PotentialProfile potential;
    /// odd: Dirichlet at r = 0; even: Neumann at r = 0.
    Parity parity = Parity::odd;
    double r_max = 30.0;
    int grid_points = 6000;
    double continuum_margin = 1e-3;

    void validate() const {
        if (!potential.evaluate) throw std::invalid_argument("Schrodinger problem has no potential");
        if (!(r_max > 0)) throw std::invalid_argument("r_max must be positive");
        if (grid_points < 100) throw std::invalid_argument("grid_points must be at least 100");
        if (!(continuum_margin > 0)) throw std::invalid_argument("continuum_margin must be positive");
    }

    /// Known threshold, or q(r_max) as a provisional one.
    double threshold() const {
        return potential.continuum_threshold ? *potential.continuum_threshold : potential.evaluate(r_max);
    }
};

struct Discretization {
    numerics::TridiagonalSystem system;
    std::vector<double> r;
    double step = 0;
};

/// Odd parity: nodes r_i = i h, i = 1..N, Dirichlet at 0 and r_max.
/// Even parity: cell centres r_i = (i - 1/2) h with a reflected ghost cell
/// at 0 (Neumann) and an antisymmetric ghost at r_max (Dirichlet).
inline Discretization discretize(SchrodingerProblem const& problem, int n) {
    problem.validate();
    Discretization d;
    auto const un = static_cast<std::size_t>(n);
    d.r.resize(un);
    d.system.diagonal.resize(un);
    d.system.off_diagonal.assign(un - 1, 0.0);
    double h = 0;
    if (problem.parity == Parity::odd) {
        h = problem.r_max / (n + 1);
        for (std::size_t i = 0; i < un; ++i) d.r[i] = static_cast<double>(i + 1) * h;
    } else {
        h = problem.r_max / n;
        for (std::size_t i = 0; i < un; ++i) d.r[i] = (static_cast<double>(i) + 0.5) * h;
    }
    double const inv_h2 = 1 / (h * h);
    for (std::size_t i = 0; i < un; ++i) d.system.diagonal[i] = 2 * inv_h2 + problem.potential.evaluate(d.r[i]);
    for (std::size_t i = 0; i + 1 < un; ++i) d.system.off_diagonal[i] = -inv_h2;
    if (problem.parity == Parity::even) {
        d.system.diagonal.front() -= inv_h2;
        d.system.diagonal.back() += inv_h2;
    }
    d.step = h;
    return d;
}

struct SpectrumResult {
    std::vector<double> bound_eigenvalues;
    /// Per-eigenvalue Richardson error estimates.
    std::vector<double> eigenvalue_errors;
    /// Eigenvalues within the margin below the threshold; not asserted as bound.
    std::vector<double> near_threshold;
    double continuum_threshold = 0;
    bool threshold_provisional = false;
    double discretization_error_estimate = 0;
};

namespace detail {

inline double spectrum_floor(Discretization const& d) {
    return numerics::gershgorin_bounds(d.system).first - 1.0;
}

} // namespace detail

/// All eigenvalues below threshold - margin, Richardson-extrapolated from
/// grids of N and 2N points.
inline SpectrumResult bound_states(SchrodingerProblem const& problem) {
    problem.validate();
    SpectrumResult out;
    out.continuum_threshold = problem.threshold();
    out.threshold_provisional = !problem.potential.continuum_threshold.has_value();
    double const cut = out.continuum_threshold - problem.continuum_margin;

    auto const coarse = discretize(problem, problem.grid_points);
    auto const fine = discretize(problem, 2 * problem.grid_points);
    double const floor = std::min(detail::spectrum_floor(coarse), detail::spectrum_floor(fine));
    auto const ev_c = numerics::eig_sym_tridiag(coarse.system, floor, out.continuum_threshold);
    auto const ev_f = numerics::eig_sym_tridiag(fine.system, floor, out.continuum_threshold);

    for (std::size_t k = 0; k < ev_f.size(); ++k) {
        double value = ev_f[k];
        double err = 0;
        if (k < ev_c.size()) {
            value = (4 * ev_f[k] - ev_c[k]) / 3;
            err = std::max(std::abs(ev_f[k] - ev_c[k]) / 3, 1e-14);
        } else {
            err = std::abs(out.continuum_threshold - ev_f[k]);
        }
        if (value < cut) {
            out.bound_eigenvalues.push_back(value);
            out.eigenvalue_errors.push_back(err);
            out.discretization_error_estimate = std::max(out.discretization_error_estimate, err);
        } else if (value < out.continuum_threshold) {
            out.near_threshold.push_back(value);
        }
    }
    return out;
}

struct GroundState {
    double eigenvalue = 0;  // on the fine grid, not extrapolated
    std::vector<double> r;
    std::vector<double> psi;  // L2-normalized on the grid, positive near its maximum
    double step = 0;
};

/// Lowest eigenpair on the 2N grid. Throws DomainError when no eigenvalue lies
/// below the threshold.
inline GroundState ground_state(SchrodingerProblem const& problem) {
    problem.validate();
    auto const d = discretize(problem, 2 * problem.grid_points);
    double const floor = detail::spectrum_floor(d);
    double const thr = problem.threshold();
    auto const ev = numerics::eig_sym_tridiag(d.system, floor, thr);
    if (ev.empty()) throw DomainError("no bound state below the continuum threshold");
    GroundState gs;
    gs.eigenvalue = ev.front();
    gs.r = d.r;
    gs.step = d.step;
    gs.psi = numerics::eigenvector_tridiag(d.system, ev.front());
    double norm = 0, peak = 0;
    for (double v : gs.psi) {
        norm += v * v;
        if (std::abs(v) > std::abs(peak)) peak = v;
    }
    double const scale = (peak < 0 ? -1.0 : 1.0) / std::sqrt(norm * d.step);
    for (double& v : gs.psi) v *= scale;
    return gs;
}

/// L2 distance between the normalized ground state and the normalized reference.
inline double ground_state_overlap(SchrodingerProblem const& problem, std::function<double(double)> const& reference) {
    auto const gs = ground_state(problem);
    std::vector<double> ref(gs.r.size());
    double norm = 0, dot = 0;
    for (std::size_t i = 0; i < ref.size(); ++i) {
        ref[i] = reference(gs.r[i]);
        norm += ref[i] * ref[i];
        dot += ref[i] * gs.psi[i];
    }
    norm = std::sqrt(norm * gs.step);
    if (!(norm > 0)) throw std::invalid_argument("reference function vanishes on the grid");
    double const sign = dot < 0 ? -1.0 : 1.0;
    double dist = 0;
    for (std::size_t i = 0; i < ref.size(); ++i) {
        double const diff = gs.psi[i] - sign * ref[i] / norm;
        dist += diff * diff;
    }
    return std::sqrt(dist * gs.step);
}

struct MassGapResult {
    double gap = 0;
    std::optional<double> ground_eigenvalue;
    double continuum_threshold = 0;
    bool has_bound_state = false;
    bool provisional = false;
};

/// threshold - ground eigenvalue; without a bound state the gap is reported
/// as the threshold itself and flagged.
inline MassGapResult mass_gap(SchrodingerProblem const& problem) {
    auto const spec = bound_states(problem);
    MassGapResult out;
    out.continuum_threshold = spec.continuum_threshold;
    out.provisional = spec.threshold_provisional;
    if (spec.bound_eigenvalues.empty()) {
        out.gap = spec.continuum_threshold;
        return out;
    }
    out.has_bound_state = true;
    out.ground_eigenvalue = spec.bound_eigenvalues.front();
    out.gap = spec.continuum_threshold - spec.bound_eigenvalues.front();
    return out;
}

struct LevelCountOptions {
    /// r_max = r_scale / a, so the cut-off follows the slower tail decay at high level.
    double r_scale = 30.0;
    /// Target grid step.
    double step = 0.005;
    double continuum_margin = 1e-3;
};

/// Odd-sector problem for the level-l potential.
inline SchrodingerProblem level_problem(double l, LevelCountOptions const& opt = {}) {
    double const a = 2.0 / (2.0 + l);
    SchrodingerProblem p;
    p.potential = potential_level(l);
    p.parity = Parity::odd;
    p.r_max = opt.r_scale / a;
    p.grid_points = std::max(100, static_cast<int>(std::ceil(p.r_max / opt.step)));
    p.continuum_margin = opt.continuum_margin;
    return p;
}

/// Number of odd-sector bound states of the level-l potential, per level.
inline std::vector<int> bound_state_count_vs_level(std::vector<double> const& levels, LevelCountOptions const& opt = {}) {
    for (double l : levels) {
        if (!(l >= 0)) throw std::invalid_argument("levels must be nonnegative");
    }
    return numerics::parallel_map(levels.size(), [&](std::size_t i) {
        return static_cast<int>(bound_states(level_problem(levels[i], opt)).bound_eigenvalues.size());
    });
}

struct GrowthProbe {
    std::vector<double> r;
    std::vector<double> q;
    /// ln|q| = power_exponent ln r + c.
    double power_exponent = 0;
    double power_residual = 0;
    /// ln|q| = exponential_rate r + c.
    double exponential_rate = 0;
    double exponential_residual = 0;
    std::string better_model;
    std::string flag = "open-question";
};

namespace detail {

struct LineFit {
    double slope = 0;
    double residual = 0;  // root-mean-square
};

inline LineFit least_squares(std::vector<double> const& x, std::vector<double> const& y) {
    double const n = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    double const den = n * sxx - sx * sx;
    LineFit f;
    f.slope = den != 0 ? (n * sxy - sx * sy) / den : 0.0;
    double const c = (sy - f.slope * sx) / n;
    double ss = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        double const e = y[i] - f.slope * x[i] - c;
        ss += e * e;
    }
    f.residual = std::sqrt(ss / n);
    return f;
}

} // namespace detail

/// Exploratory: samples of q_R at the given radii and two growth fits.
/// R = infinity uses 1/4 - (15/4) sech^2(r).
inline GrowthProbe probe_qR_growth(double R, std::vector<double> const& r_samples) {
    if (r_samples.size() < 2) throw std::invalid_argument("probe_qR_growth: need at least two samples");
    PotentialProfile const pot =
        std::isfinite(R) ? potential_finite_R(R, ThetaParams::from_modulus(R)) : poschl_teller_potential();
    GrowthProbe out;
    std::vector<double> lr, ll;
    for (double r : r_samples) {
        if (!(r > 0)) throw std::invalid_argument("probe_qR_growth: samples must be positive");
        double const q = pot.evaluate(r);
        out.r.push_back(r);
        out.q.push_back(q);
        lr.push_back(std::log(r));
        ll.push_back(std::log(std::max(std::abs(q), std::numeric_limits<double>::min())));
    }
    auto const pw = detail::least_squares(lr, ll);
    auto const ex = detail::least_squares(out.r, ll);
    out.power_exponent = pw.slope;
    out.power_residual = pw.residual;
    out.exponential_rate = ex.slope;
    out.exponential_residual = ex.residual;
    out.better_model = pw.residual <= ex.residual ? "power" : "exponential";
    return out;
}

// ---------------------------------------------------------------------------
// scattering

struct ReflectionResult {
    double k = 0;
    double well_depth = 0;
    double magnitude = 0;
    /// Largest change of |R| across the half-widths tried.
    double convergence_spread = 0;
    double half_width = 0;
    bool small_k_flag = false;
};

namespace detail {

/// Integrates -u'' - depth sech^2(r) u = k^2 u from r = L (pure e^{ikr}) back
/// to r = -L and returns |B/A| for u = A e^{ikr} + B e^{-ikr} there.
inline double reflection_at(double k, double depth, double L) {
    using state = std::array<double, 4>;  // Re u, Im u, Re u', Im u'
    auto rhs = [&](state const& s, state& ds, double r) {
        double const sech = 1 / std::cosh(r);
        double const w = -depth * sech * sech - k * k;
        ds[0] = s[2];
        ds[1] = s[3];
        ds[2] = w * s[0];
        ds[3] = w * s[1];
    };
    std::complex<double> const u0 = std::exp(std::complex<double>(0, k * L));
    std::complex<double> const du0 = std::complex<double>(0, k) * u0;
    state s{u0.real(), u0.imag(), du0.real(), du0.imag()};
    namespace ode = boost::numeric::odeint;
    auto stepper = ode::make_controlled(1e-13, 1e-13, ode::runge_kutta_dopri5<state>());
    ode::integrate_adaptive(stepper, rhs, s, L, -L, -1e-3);
    std::complex<double> const u(s[0], s[1]), du(s[2], s[3]);
    std::complex<double> const ik(0, k);
    double const r = -L;
    auto const A = (ik * u + du) / (2.0 * ik) * std::exp(-ik * r);
    auto const B = (ik * u - du) / (2.0 * ik) * std::exp(ik * r);
    return std::abs(B) / std::abs(A);
}

} // namespace detail

/// |reflection coefficient| of the full-line well -depth sech^2(r) at wave
/// number k, converged over half-widths 30, 40, 50.
inline ReflectionResult reflection_probe(double k, double well_depth) {
    if (!(k > 0)) throw std::invalid_argument("reflection_probe: k must be positive");
    ReflectionResult out;
    out.k = k;
    out.well_depth = well_depth;
    out.small_k_flag = k < 1e-2;
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    for (double L : {30.0, 40.0, 50.0}) {
        double const v = detail::reflection_at(k, well_depth, L);
        lo = std::min(lo, v);
        hi = std::max(hi, v);
        out.magnitude = v;
        out.half_width = L;
    }
    out.convergence_spread = hi - lo;
    return out;
}

/// |R|^2 = cos^2(pi sqrt(D + 1/4)) / (sinh^2(pi k) + cos^2(pi sqrt(D + 1/4))).
inline double reflection_exact(double k, double well_depth) {
    double const c = std::cos(std::numbers::pi * std::sqrt(well_depth + 0.25));
    double const s = std::sinh(std::numbers::pi * k);
    return std::sqrt(c * c / (s * s + c * c));
}

} // namespace zeromode
