#ifndef TWOARC_ROOTFIND_HPP
#define TWOARC_ROOTFIND_HPP

#include <complex>
#include <cstdint>
#include <vector>

#include "twoarc/poly.hpp"

namespace twoarc {

struct RootFindOptions {
    double tol = 1e-12;
    int max_iter = 200;
    std::uint64_t seed = 1;
    /// Roots closer than cluster_radius_factor * root_bound merge into one
    /// multiple root; <= 0 selects sqrt(tol).
    double cluster_radius_factor = -1.0;
    /// Optional warm-start positions (continuation); must match the degree.
    std::vector<std::complex<double>> initial;
};

struct Root {
    std::complex<double> value;
    int multiplicity = 1;
    /// |P(value)| / max(1, largest coefficient magnitude)
    double residual = 0.0;
};

struct RootSet {
    std::vector<Root> roots;  // sorted by (re, im)
    int degree = 0;
    bool converged = false;
    int iterations = 0;

    /// All roots repeated by multiplicity, sorted.
    std::vector<std::complex<double>> expanded() const;
};

/* All complex roots by simultaneous (Aberth-Ehrlich) iteration with Newton
 * polishing and multiplicity clustering. Deterministic for a fixed seed.
 * Exact input is converted to approximate coefficients up front.
 *
 * Throws std::invalid_argument for degree < 1 or a leading coefficient
 * smaller than tol times the largest coefficient. Non-convergence is not an
 * exception: the best iterate is returned with converged = false.
 */
RootSet all_roots(const Poly& p, const RootFindOptions& opts = {});

/// Real roots in [lo, hi]: the subset of all_roots with |Im| <= tol,
/// ascending, one entry per distinct root.
std::vector<double> real_roots_in(const Poly& p, double lo, double hi, double tol,
                                  const RootFindOptions& opts = {});

}  // namespace twoarc

#endif
