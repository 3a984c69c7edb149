#pragma once

// Subcommand dispatch for the command-line tool. Parameters arrive as
// key/value strings, are validated per subcommand, and every subcommand
// produces a Table. Exit codes: 0 success, 1 invalid arguments, 2 a
// numerical method did not converge, 3 an identity or positivity statement
// failed numerically.

#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "densities.hpp"
#include "errors.hpp"
#include "geometry.hpp"
#include "numerics.hpp"
#include "root_systems.hpp"
#include "spectral.hpp"
#include "table.hpp"
#include "theta.hpp"
#include "transforms.hpp"
#include "verify.hpp"

namespace zeromode::cli {

enum class OutputFormat { csv, json };

struct RunConfig {
    std::string subcommand;
    std::map<std::string, std::string> parameters;
    OutputFormat output_format = OutputFormat::csv;
    std::optional<std::string> output_path;
};

enum ExitCode : int { ok = 0, invalid_arguments = 1, not_converged = 2, identity_violated = 3 };

inline std::vector<std::string> subcommands() {
    return {"theta",    "cfun",     "lemma411",   "lemma421", "poisson",  "density", "potential",
            "invert",   "positivity", "geometry", "spectrum", "probe-qr", "scatter", "verify"};
}

/// Accepted parameter names per subcommand.
inline std::set<std::string> allowed_parameters(std::string const& cmd) {
    static std::map<std::string, std::set<std::string>> const table = {
        {"theta", {"R", "x", "y", "tol", "max-terms", "R-scan"}},
        {"cfun", {"rank", "level", "lambda", "R", "R-scan"}},
        {"lemma411", {"x0", "R", "p", "tol", "R-scan"}},
        {"lemma421", {"R", "p", "tol", "R-scan"}},
        {"poisson", {"alpha", "tol"}},
        {"density", {"R", "level", "r", "r-scan", "R-scan"}},
        {"potential", {"R", "level", "r", "r-scan", "R-scan"}},
        {"invert", {"R", "level", "r", "r-scan"}},
        {"positivity", {"R", "R-scan", "grid-points"}},
        {"geometry", {"profile", "r", "r-scan"}},
        {"spectrum", {"potential", "R", "level", "parity", "r-max", "grid-points", "tol"}},
        {"probe-qr", {"R", "r", "r-scan"}},
        {"scatter", {"k", "depth"}},
        {"verify", {"suite", "tol"}},
    };
    auto it = table.find(cmd);
    if (it == table.end()) throw std::invalid_argument("unknown subcommand: " + cmd);
    return it->second;
}

// ---------------------------------------------------------------------------
// parameter parsing

inline double parse_real(std::string const& key, std::string const& text) {
    if (text == "inf" || text == "infinity") return std::numeric_limits<double>::infinity();
    double v = 0;
    auto const* end = text.data() + text.size();
    auto const res = std::from_chars(text.data(), end, v);
    if (res.ec != std::errc{} || res.ptr != end) throw std::invalid_argument("--" + key + ": not a number: " + text);
    return v;
}

inline long parse_integer(std::string const& key, std::string const& text) {
    long v = 0;
    auto const* end = text.data() + text.size();
    auto const res = std::from_chars(text.data(), end, v);
    if (res.ec != std::errc{} || res.ptr != end) throw std::invalid_argument("--" + key + ": not an integer: " + text);
    return v;
}

/// min:max:steps[:log]. Steps >= 2 points including both ends; log spacing
/// requires min > 0.
inline std::vector<double> parse_scan(std::string const& key, std::string const& text) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    for (std::string part; std::getline(ss, part, ':');) parts.push_back(part);
    if (parts.size() != 3 && parts.size() != 4) throw std::invalid_argument("--" + key + ": expected min:max:steps[:log]");
    double const lo = parse_real(key, parts[0]);
    double const hi = parse_real(key, parts[1]);
    long const steps = parse_integer(key, parts[2]);
    bool const log = parts.size() == 4;
    if (log && parts[3] != "log") throw std::invalid_argument("--" + key + ": fourth field must be 'log'");
    if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi)) throw std::invalid_argument("--" + key + ": need min < max");
    if (steps < 2) throw std::invalid_argument("--" + key + ": need at least 2 steps");
    if (log && !(lo > 0)) throw std::invalid_argument("--" + key + ": log spacing needs min > 0");
    std::vector<double> v(static_cast<std::size_t>(steps));
    for (long i = 0; i < steps; ++i) {
        double const t = static_cast<double>(i) / static_cast<double>(steps - 1);
        v[static_cast<std::size_t>(i)] = log ? lo * std::pow(hi / lo, t) : lo + (hi - lo) * t;
    }
    v.back() = hi;
    return v;
}

class Parameters {
public:
    Parameters(std::string cmd, std::map<std::string, std::string> kv) : cmd_(std::move(cmd)), kv_(std::move(kv)) {
        auto const allowed = allowed_parameters(cmd_);
        for (auto const& [k, v] : kv_) {
            if (!allowed.count(k)) throw std::invalid_argument(cmd_ + ": unexpected parameter --" + k);
        }
    }

    bool has(std::string const& key) const { return kv_.count(key) > 0; }

    double real(std::string const& key, double fallback) const {
        auto it = kv_.find(key);
        return it == kv_.end() ? fallback : parse_real(key, it->second);
    }

    long integer(std::string const& key, long fallback) const {
        auto it = kv_.find(key);
        return it == kv_.end() ? fallback : parse_integer(key, it->second);
    }

    std::string text(std::string const& key, std::string fallback) const {
        auto it = kv_.find(key);
        return it == kv_.end() ? fallback : it->second;
    }

    double positive(std::string const& key, double fallback) const {
        double const v = real(key, fallback);
        if (!(v > 0)) throw std::invalid_argument("--" + key + " must be positive");
        return v;
    }

    /// Values of `key`, or the scan `key`-scan when given (not both).
    std::vector<double> values(std::string const& key, double fallback) const {
        std::string const scan = key + "-scan";
        if (has(scan)) {
            if (has(key)) throw std::invalid_argument(cmd_ + ": give either --" + key + " or --" + scan);
            return parse_scan(scan, kv_.at(scan));
        }
        return {real(key, fallback)};
    }

    /// Values of `key` with a list fallback when neither value nor scan is given.
    std::vector<double> values_or(std::string const& key, std::vector<double> fallback) const {
        if (!has(key) && !has(key + "-scan")) return fallback;
        return values(key, 0);
    }

private:
    std::string cmd_;
    std::map<std::string, std::string> kv_;
};

/// Only `theta` reads --tol as the series tolerance; elsewhere --tol is the
/// identity or margin tolerance of the subcommand.
inline ThetaParams theta_params(Parameters const& p, double R, bool series_tol = false) {
    if (!(R >= 0.02)) throw std::invalid_argument("--R must be at least 0.02");
    double const tol = series_tol ? p.positive("tol", 1e-18) : 1e-18;
    return ThetaParams::from_modulus(R, tol, p.integer("max-terms", 10000));
}

struct CommandOutput {
    Table table;
    /// Set when an identity or positivity statement failed; names the witness.
    std::optional<std::string> violation;
};

// ---------------------------------------------------------------------------
// subcommands

inline CommandOutput cmd_theta(Parameters const& p) {
    CommandOutput o;
    o.table.command = "theta";
    o.table.note("nome", "q = exp(-2 pi R)");
    o.table.columns = {"quantity", "R", "x", "y", "theta1_re", "theta1_im", "theta3_re", "theta3_im", "theta4_re", "theta4_im"};
    double const x = p.real("x", 0.5), y = p.real("y", 0.0);
    auto const radii = p.values("R", 1.0);
    auto rows = numerics::parallel_map(radii.size(), [&](std::size_t i) {
        auto const tp = theta_params(p, radii[i], true);
        cplx const z(x, y);
        return std::array<cplx, 3>{theta1(z, tp), theta3(z, tp), theta4(z, tp)};
    });
    for (std::size_t i = 0; i < radii.size(); ++i) {
        auto const& v = rows[i];
        o.table.add_row({std::string("jacobi theta at modulus iR"), radii[i], x, y, v[0].real(), v[0].imag(), v[1].real(),
                         v[1].imag(), v[2].real(), v[2].imag()});
    }
    return o;
}

inline CommandOutput cmd_cfun(Parameters const& p) {
    CommandOutput o;
    o.table.command = "cfun";
    long const n = p.integer("rank", 1);
    if (n < 1) throw std::invalid_argument("--rank must be at least 1");
    auto const rs = build_type_A(static_cast<int>(n) + 1);
    double const level = p.real("level", 0.0);
    double const l0 = p.real("lambda", 0.5);
    auto const lam = SpectralParameter::along_root(rs, l0);
    o.table.note("root system", "A_" + std::to_string(n));
    o.table.note("spectral parameter", "lambda = lambda0 * (first positive root)");
    o.table.columns = {"quantity", "rank", "level", "R", "lambda0", "value_re", "value_im"};
    double const inf = std::numeric_limits<double>::infinity();
    auto const hc = hc_c_function(rs, lam);
    auto const af = affine_c_function(rs, ModelParams{level}, lam);
    auto const nn = static_cast<std::int64_t>(n);
    o.table.add_row({std::string("Harish-Chandra c-function"), nn, level, inf, l0, hc.real(), hc.imag()});
    o.table.add_row({std::string("affine c-function"), nn, level, inf, l0, af.real(), af.imag()});
    auto const g = hc_transform_gamma_form(rs, ModelParams{level}, lam);
    o.table.add_row({std::string("Gamma-form lhs"), nn, level, inf, l0, g.lhs.real(), g.lhs.imag()});
    o.table.add_row({std::string("Gamma-form rhs"), nn, level, inf, l0, g.rhs_without_pi.real(), g.rhs_without_pi.imag()});
    if (p.has("R") || p.has("R-scan")) {
        auto const radii = p.values("R", 1.0);
        auto vals = numerics::parallel_map(radii.size(), [&](std::size_t i) {
            return finite_R_transform(rs, ModelParams{level, radii[i]}, lam, theta_params(p, radii[i]));
        });
        for (std::size_t i = 0; i < radii.size(); ++i) {
            o.table.add_row({std::string("finite-radius transform"), nn, level, radii[i], l0, vals[i].real(), vals[i].imag()});
        }
    }
    return o;
}

inline CommandOutput cmd_lemma411(Parameters const& p) {
    CommandOutput o;
    o.table.command = "lemma411";
    double const tol = p.positive("tol", 1e-8);
    double const x0 = p.real("x0", std::numbers::pi / 2), pp = p.real("p", 0.5);
    auto const radii = p.values("R", 1.0);
    for (double R : radii) theta_params(p, R);
    auto res = numerics::parallel_map(radii.size(), [&](std::size_t i) {
        return theta_reciprocal_fourier(x0, pp, ThetaParams::from_modulus(radii[i]));
    });
    o.table.columns = {"quantity", "x0", "R", "p", "quadrature", "closed_form", "relative_error", "imag_residual", "error_estimate", "tol"};
    for (std::size_t i = 0; i < radii.size(); ++i) {
        o.table.add_row({std::string("Fourier transform of 1/theta1 along x0 + iy"), x0, radii[i], pp, res[i].quadrature,
                         res[i].closed_form, res[i].relative_error(), res[i].imag_residual, res[i].error_estimate, tol});
        if (res[i].relative_error() > tol && !o.violation) {
            o.violation = "Fourier identity for 1/theta1 fails at R = " + format_double(radii[i]);
        }
    }
    return o;
}

inline CommandOutput cmd_lemma421(Parameters const& p) {
    CommandOutput o;
    o.table.command = "lemma421";
    double const tol = p.positive("tol", 1e-8);
    double const pp = p.real("p", 0.7);
    auto const radii = p.values("R", 1.0);
    for (double R : radii) theta_params(p, R);
    auto res = numerics::parallel_map(radii.size(), [&](std::size_t i) {
        return theta_sinc_fourier(pp, ThetaParams::from_modulus(radii[i]));
    });
    o.table.columns = {"quantity", "R", "p", "quadrature", "closed_form", "relative_error", "imag_residual", "error_estimate", "tol"};
    for (std::size_t i = 0; i < radii.size(); ++i) {
        o.table.add_row({std::string("Fourier transform of the theta-sinc kernel"), radii[i], pp, res[i].quadrature,
                         res[i].closed_form, res[i].relative_error(), res[i].imag_residual, res[i].error_estimate, tol});
        if (res[i].relative_error() > tol && !o.violation) {
            o.violation = "Fourier identity for the theta-sinc kernel fails at R = " + format_double(radii[i]);
        }
    }
    return o;
}

inline CommandOutput cmd_poisson(Parameters const& p) {
    CommandOutput o;
    o.table.command = "poisson";
    double const tol = p.positive("tol", 1e-10);
    double const alpha = p.positive("alpha", 1.0);
    auto const r = poisson_identity(alpha);
    o.table.columns = {"quantity", "alpha", "series", "closed_form", "abs_error", "tol"};
    o.table.add_row({std::string("sum 1/(alpha^2+n^2)"), alpha, r.lhs, r.rhs, std::abs(r.lhs - r.rhs), tol});
    if (std::abs(r.lhs - r.rhs) > tol) o.violation = "series identity fails at alpha = " + format_double(alpha);
    return o;
}

namespace detail {

struct DensityChoice {
    RadialDensity density;
    PotentialProfile potential;
    std::string tag;
};

inline DensityChoice choose_density(Parameters const& p, double R) {
    double const level = p.real("level", 0.0);
    if (!(level >= 0)) throw std::invalid_argument("--level must be nonnegative");
    if (std::isfinite(R)) {
        if (level != 0) throw std::invalid_argument("finite-radius densities are defined at level 0 only");
        if (!(R >= 0.02)) throw std::invalid_argument("--R must be at least 0.02");
        auto const tp = ThetaParams::from_modulus(R);
        return {delta_finite_R(R, tp), potential_finite_R(R, tp), "finite-radius"};
    }
    if (level == 0) return {delta_infinity(), poschl_teller_potential(), "infinite radius"};
    return {delta_level(level), potential_level(level), "level"};
}

} // namespace detail

inline CommandOutput cmd_density(Parameters const& p, bool potential) {
    CommandOutput o;
    o.table.command = potential ? "potential" : "density";
    double const level = p.real("level", 0.0);
    auto const radii = p.values("R", std::numeric_limits<double>::infinity());
    auto const rs = p.values("r", 1.0);
    for (double r : rs) {
        if (!(r > 0) && potential) throw std::invalid_argument("--r must be positive");
        if (!(r >= 0)) throw std::invalid_argument("--r must be nonnegative");
    }
    o.table.columns = potential ? std::vector<std::string>{"quantity", "R", "level", "r", "q", "continuum_threshold"}
                                : std::vector<std::string>{"quantity", "R", "level", "r", "delta", "delta_normalized", "normalization"};
    auto blocks = numerics::parallel_map(radii.size(), [&](std::size_t k) {
        auto const c = detail::choose_density(p, radii[k]);
        std::vector<std::vector<Cell>> rows;
        for (double r : rs) {
            if (potential) {
                double const thr = c.potential.continuum_threshold.value_or(std::nan(""));
                rows.push_back({"radial potential (" + c.tag + ")", radii[k], level, r, c.potential.evaluate(r), thr});
            } else {
                rows.push_back({"radial density (" + c.tag + ")", radii[k], level, r, c.density.evaluate(r),
                                c.density.normalized(r), c.density.normalization});
            }
        }
        return rows;
    });
    for (auto& block : blocks) {
        for (auto& row : block) {
            if (!potential && !o.violation) {
                double const v = std::get<double>(row[4]);
                if (v < 0) {
                    o.violation = "negative density " + format_double(v) + " at R = " + format_cell(row[1]) +
                                  ", r = " + format_cell(row[3]);
                }
            }
            o.table.add_row(std::move(row));
        }
    }
    if (potential) o.table.note("continuum threshold", "nan when unknown (finite radius)");
    return o;
}

inline CommandOutput cmd_invert(Parameters const& p) {
    CommandOutput o;
    o.table.command = "invert";
    double const R = p.real("R", std::numeric_limits<double>::infinity());
    double const level = p.real("level", 0.0);
    if (std::isfinite(R) && !(R >= 0.02)) throw std::invalid_argument("--R must be at least 0.02");
    if (std::isfinite(R) && level != 0) throw std::invalid_argument("finite-radius inversion is defined at level 0 only");
    auto const rs = p.values("r", 1.0);
    for (double r : rs) {
        if (!(r > 0)) throw std::invalid_argument("--r must be positive");
    }
    double const h = 2 + level;
    o.table.note("argument scaling", "x = r/2; the level enters as z = (2+l) x with no extra 1/pi");
    auto res = numerics::parallel_map(rs.size(), [&](std::size_t i) { return invert_transform_rank1(level, R, rs[i]); });
    o.table.columns = {"quantity", "R", "level", "r", "haar_density", "radial_density", "reference", "ratio", "imag_residual", "error_estimate"};
    std::optional<RadialDensity> dR;
    if (std::isfinite(R)) dR = delta_finite_R(R, ThetaParams::from_modulus(R));
    for (std::size_t i = 0; i < rs.size(); ++i) {
        // Reference: closed-form Haar density at R = infinity, delta_R otherwise.
        double ref = 0, ratio = 0;
        if (dR) {
            ref = dR->evaluate(rs[i]);
            ratio = res[i].radial_density / ref;
        } else {
            ref = phi_l_unnormalized(level, rs[i] / 2);
            ratio = res[i].haar_density / ref;
        }
        o.table.add_row({std::string("rank-one inverse transform"), R, level, rs[i], res[i].haar_density,
                         res[i].radial_density, ref, ratio, res[i].imag_residual, res[i].error_estimate});
    }
    if (!dR) o.table.note("expected ratio at infinite radius", format_double(8 * h * h * h / std::numbers::pi) + " (8h^3/pi)");
    return o;
}

inline CommandOutput cmd_positivity(Parameters const& p) {
    CommandOutput o;
    o.table.command = "positivity";
    auto const radii = p.values("R", 1.0);
    long const grid = p.integer("grid-points", 200);
    if (grid < 2) throw std::invalid_argument("--grid-points must be at least 2");
    for (double R : radii) theta_params(p, R);
    auto reps = numerics::parallel_map(radii.size(), [&](std::size_t i) {
        return positivity_check(radii[i], static_cast<int>(grid), ThetaParams::from_modulus(radii[i]));
    });
    o.table.columns = {"quantity", "R", "grid_points", "grid_pass", "min_margin", "min_relative_margin", "witness_z",
                       "large_R_bound", "rhs_minimum", "trig_form_max", "small_R_bound", "small_R_chain_holds",
                       "sufficient_condition"};
    for (auto const& r : reps) {
        o.table.add_row({std::string("slope inequality for ln theta3"), r.R, static_cast<std::int64_t>(r.grid_points),
                         r.grid_pass, r.min_margin, r.min_relative_margin, r.witness_z, r.large_R_bound, r.rhs_minimum,
                         r.trig_form_max, r.small_R_bound, r.small_R_chain_holds, r.sufficient_condition()});
        if (!r.grid_pass && !o.violation) {
            o.violation = "slope inequality fails at R = " + format_double(r.R) + ", z = " + format_double(r.witness_z);
        }
    }
    return o;
}

inline CommandOutput cmd_geometry(Parameters const& p) {
    CommandOutput o;
    o.table.command = "geometry";
    std::string const name = p.text("profile", "gk");
    MetricProfile metric;
    if (name == "flat") metric = flat_profile();
    else if (name == "gk") metric = symmetric_space_profile();
    else if (name == "gs") metric = guillemin_stenzel_profile();
    else throw std::invalid_argument("--profile must be flat, gk or gs");
    auto const geo = radial_geometry(metric);
    auto const rs = p.values("r", 1.0);
    for (double r : rs) {
        if (!(r > 0)) throw std::invalid_argument("--r must be positive");
    }
    o.table.note("profile", metric.label);
    o.table.note("eigenvalue normalization", metric.eigenvalue_normalization);
    o.table.columns = {"quantity", "profile", "r", "rho", "delta", "alpha", "gamma", "annihilation_residual"};
    for (double r : rs) {
        o.table.add_row({std::string("radial geometry"), name, r, geo.rho(r), geo.delta(r), geo.alpha(r), geo.gamma(r),
                         geo.annihilation_residual(r)});
    }
    return o;
}

inline CommandOutput cmd_spectrum(Parameters const& p) {
    CommandOutput o;
    o.table.command = "spectrum";
    SchrodingerProblem prob;
    std::string const pot = p.text("potential", p.has("R") ? "finite-R" : (p.has("level") ? "level" : "pt"));
    std::string desc;
    if (pot == "pt") {
        prob.potential = poschl_teller_potential();
    } else if (pot == "level") {
        double const l = p.real("level", 0.0);
        if (!(l >= 0)) throw std::invalid_argument("--level must be nonnegative");
        prob.potential = potential_level(l);
    } else if (pot == "finite-R") {
        double const R = p.real("R", 1.0);
        prob.potential = potential_finite_R(R, theta_params(p, R));
    } else if (pot == "free") {
        prob.potential = sech2_potential(0.0, 0.25);
        prob.potential.label = "free, q = 1/4";
    } else {
        throw std::invalid_argument("--potential must be pt, level, finite-R or free");
    }
    std::string const parity = p.text("parity", "odd");
    if (parity == "odd") prob.parity = Parity::odd;
    else if (parity == "even") prob.parity = Parity::even;
    else throw std::invalid_argument("--parity must be odd or even");
    prob.r_max = p.positive("r-max", 30.0);
    prob.grid_points = static_cast<int>(p.integer("grid-points", 6000));
    prob.continuum_margin = p.positive("tol", 1e-3);
    auto const s = bound_states(prob);
    o.table.note("potential", prob.potential.label);
    o.table.note("threshold", s.threshold_provisional ? "provisional, q(r_max)" : "known");
    o.table.columns = {"quantity", "potential", "parity", "r_max", "grid_points", "index", "value", "error_estimate"};
    auto row = [&](std::string q, std::int64_t idx, double v, double e) {
        o.table.add_row({std::move(q), pot, parity, prob.r_max, static_cast<std::int64_t>(prob.grid_points), idx, v, e});
    };
    for (std::size_t i = 0; i < s.bound_eigenvalues.size(); ++i) {
        row("bound eigenvalue", static_cast<std::int64_t>(i), s.bound_eigenvalues[i], s.eigenvalue_errors[i]);
    }
    for (std::size_t i = 0; i < s.near_threshold.size(); ++i) {
        row("near-threshold eigenvalue (unresolved)", static_cast<std::int64_t>(i), s.near_threshold[i], std::nan(""));
    }
    row("continuum threshold", -1, s.continuum_threshold, std::nan(""));
    if (s.bound_eigenvalues.empty()) {
        o.table.note("mass gap", "no bound state; gap reported as the threshold");
        row("mass gap", -1, s.continuum_threshold, std::nan(""));
    } else {
        row("mass gap", -1, s.continuum_threshold - s.bound_eigenvalues.front(), s.eigenvalue_errors.front());
    }
    return o;
}

inline CommandOutput cmd_probe_qr(Parameters const& p) {
    CommandOutput o;
    o.table.command = "probe-qr";
    double const R = p.real("R", 1.0);
    if (std::isfinite(R)) theta_params(p, R);
    auto const rs = p.values_or("r", {5, 10, 20, 40});
    auto const g = probe_qR_growth(R, rs);
    o.table.note("status", g.flag);
    o.table.note("better model", g.better_model);
    o.table.columns = {"quantity", "R", "r", "value"};
    for (std::size_t i = 0; i < g.r.size(); ++i) o.table.add_row({std::string("q_R sample"), R, g.r[i], g.q[i]});
    double const nan = std::nan("");
    o.table.add_row({std::string("power-law exponent (ln|q| vs ln r)"), R, nan, g.power_exponent});
    o.table.add_row({std::string("power-law rms residual"), R, nan, g.power_residual});
    o.table.add_row({std::string("exponential rate (ln|q| vs r)"), R, nan, g.exponential_rate});
    o.table.add_row({std::string("exponential rms residual"), R, nan, g.exponential_residual});
    return o;
}

inline CommandOutput cmd_scatter(Parameters const& p) {
    CommandOutput o;
    o.table.command = "scatter";
    double const k = p.positive("k", 1.0);
    double const depth = p.real("depth", 3.75);
    auto const r = reflection_probe(k, depth);
    o.table.columns = {"quantity", "k", "depth", "value", "exact", "convergence_spread", "small_k_flag"};
    o.table.add_row({std::string("|reflection coefficient| of -depth sech^2"), k, depth, r.magnitude,
                     reflection_exact(k, depth), r.convergence_spread, r.small_k_flag});
    return o;
}

inline CommandOutput cmd_verify(Parameters const& p) {
    VerifyOptions opt;
    if (p.has("tol")) opt.tol = p.positive("tol", 1e-8);
    auto const checks = run_suite(p.text("suite", "all"), opt);
    CommandOutput o{checks_table(checks), std::nullopt};
    o.table.note("suite", p.text("suite", "all"));
    o.table.note("status info", "printed forms that differ from the corrected identity; not asserted");
    for (auto const& c : checks) {
        if (c.status == CheckStatus::fail) {
            o.violation = c.suite + ": " + c.name + " (" + c.parameters + ") error " + format_double(c.error);
            break;
        }
    }
    return o;
}

inline CommandOutput dispatch(RunConfig const& cfg) {
    Parameters const p(cfg.subcommand, cfg.parameters);
    auto const& c = cfg.subcommand;
    if (c == "theta") return cmd_theta(p);
    if (c == "cfun") return cmd_cfun(p);
    if (c == "lemma411") return cmd_lemma411(p);
    if (c == "lemma421") return cmd_lemma421(p);
    if (c == "poisson") return cmd_poisson(p);
    if (c == "density") return cmd_density(p, false);
    if (c == "potential") return cmd_density(p, true);
    if (c == "invert") return cmd_invert(p);
    if (c == "positivity") return cmd_positivity(p);
    if (c == "geometry") return cmd_geometry(p);
    if (c == "spectrum") return cmd_spectrum(p);
    if (c == "probe-qr") return cmd_probe_qr(p);
    if (c == "scatter") return cmd_scatter(p);
    if (c == "verify") return cmd_verify(p);
    throw std::invalid_argument("unknown subcommand: " + c);
}

/// Runs one subcommand, writing the table to `out` (or the configured file)
/// and diagnostics to `err`. Returns the exit code.
inline int run(RunConfig const& cfg, std::ostream& out, std::ostream& err) {
    CommandOutput result;
    try {
        result = dispatch(cfg);
    } catch (ConvergenceError const& e) {
        err << "error: " << e.what() << '\n';
        return not_converged;
    } catch (InvariantViolation const& e) {
        err << "identity violated: " << e.what() << '\n';
        return identity_violated;
    } catch (std::invalid_argument const& e) {
        err << "error: " << e.what() << '\n';
        return invalid_arguments;
    } catch (DomainError const& e) {
        err << "error: " << e.what() << '\n';
        return invalid_arguments;
    }
    std::ofstream file;
    std::ostream* sink = &out;
    if (cfg.output_path) {
        file.open(*cfg.output_path, std::ios::binary);
        if (!file) {
            err << "error: cannot open " << *cfg.output_path << '\n';
            return invalid_arguments;
        }
        sink = &file;
    }
    if (cfg.output_format == OutputFormat::json) write_json(result.table, *sink);
    else write_csv(result.table, *sink);
    if (result.violation) {
        err << "identity violated: " << *result.violation << '\n';
        return identity_violated;
    }
    return ok;
}

} // namespace zeromode::cli
