#pragma once

// Root data for type A_{n-1}, realized as e_i - e_j in R^n with the
// Euclidean form, so long roots have squared length 2.

#include <cmath>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "errors.hpp"

namespace zeromode {

using Weight = std::vector<double>;

struct RootSystem {
    int rank = 0;
    std::vector<Weight> positive_roots;
    Weight rho;            // sum (not half-sum) of the positive roots
    Weight highest_root;
    int dual_coxeter = 0;

    std::size_t ambient_dim() const { return rho.size(); }

    double pairing(Weight const& a, Weight const& b) const {
        if (a.size() != b.size() || a.size() != ambient_dim()) {
            throw std::invalid_argument("pairing: coordinate tuples have mismatched dimension");
        }
        return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
    }

    /// 1 + <rho, theta>/2, recomputed from the stored roots.
    double derived_dual_coxeter() const { return 1.0 + pairing(rho, highest_root) / 2.0; }

    /// Throws InvariantViolation naming the first broken invariant.
    void validate() const {
        if (rank < 1 || positive_roots.empty()) throw InvariantViolation("root system is empty");
        Weight sum(ambient_dim(), 0.0);
        double const rho_theta = pairing(rho, highest_root);
        for (std::size_t k = 0; k < positive_roots.size(); ++k) {
            auto const& a = positive_roots[k];
            if (std::abs(pairing(a, a) - 2.0) > 1e-14) {
                throw InvariantViolation("root " + std::to_string(k) + " does not have squared length 2");
            }
            double const ra = pairing(rho, a);
            if (!(ra > 0)) throw InvariantViolation("<rho, alpha> not positive for root " + std::to_string(k));
            if (ra > rho_theta + 1e-12) {
                throw InvariantViolation("<rho, alpha> exceeds <rho, theta> for root " + std::to_string(k));
            }
            for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += a[i];
        }
        for (std::size_t i = 0; i < sum.size(); ++i) {
            if (std::abs(sum[i] - rho[i]) > 1e-12) throw InvariantViolation("rho is not the sum of positive roots");
        }
        if (derived_dual_coxeter() != static_cast<double>(dual_coxeter)) {
            throw InvariantViolation("stored dual Coxeter number disagrees with 1 + <rho, theta>/2");
        }
    }
};

/// A_{n-1}: positive roots e_i - e_j for i < j, highest root e_1 - e_n.
inline RootSystem build_type_A(int n) {
    if (n < 2) throw std::invalid_argument("build_type_A: n must be at least 2");
    RootSystem rs;
    rs.rank = n - 1;
    auto const dim = static_cast<std::size_t>(n);
    rs.rho.assign(dim, 0.0);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = i + 1; j < dim; ++j) {
            Weight a(dim, 0.0);
            a[i] = 1.0;
            a[j] = -1.0;
            rs.rho[i] += 1.0;
            rs.rho[j] -= 1.0;
            rs.positive_roots.push_back(std::move(a));
        }
    }
    rs.highest_root.assign(dim, 0.0);
    rs.highest_root.front() = 1.0;
    rs.highest_root.back() = -1.0;
    rs.dual_coxeter = static_cast<int>(std::lround(rs.derived_dual_coxeter()));
    rs.validate();
    return rs;
}

} // namespace zeromode
