#pragma once
#include <optional>
#include <vector>

#include "ugcduo/model.hpp"

namespace ugcduo {

/// Who holds the upper beta interval; `split` marks the excluded half/half case.
enum class Dominance { split = 0, platform1 = 1, platform2 = 2 };

/** A partition of the type space [0,1] described by a single cutoff.
 *
 * The dominant platform always occupies the upper interval [beta_tilde, 1],
 * so its share is 1 - beta_tilde and the cutoff lives in [0, 1/2]. Boundary
 * allocations are the beta_tilde = 0 cases.
 */
struct ThresholdAllocation {
    double beta_tilde = 0.0;
    Dominance dominant = Dominance::platform1;
    double share1 = 1.0;

    /// Build the allocation implied by platform 1's share.
    static ThresholdAllocation from_share1(double share1);

    /// share2 is pinned down by the unit population.
    double share2() const noexcept { return 1.0 - share1; }

    /// Cross-field consistency: cutoff, orientation and share agree.
    bool consistent() const noexcept;

    bool operator==(const ThresholdAllocation&) const = default;
};

/// Orbit of the expected->realized share map from a given start.
struct IterationTrace {
    std::vector<double> shares; // n^0, n^1, ... (n^0 is the start)
    bool converged = false;
    std::optional<double> limit;
    int steps = 0; // number of map applications performed

    bool operator==(const IterationTrace&) const = default;
};

/** Expected-share to realized-share map.
 *
 * 0 and 1 are absorbing. For an expected share n on either side of 1/2 the
 * indifferent type is found from the expected shares and interval qualities
 * and the resulting share is clamped into [0,1] (the unclamped expression can
 * leave the unit interval on either side for extreme ad gaps). n = 1/2 makes
 * the denominator vanish and throws singular_share_error.
 */
double gamma_map(const ModelParams& params, const AdProfile& ads,
                 double expected_share1);

/// One step of best responses against an expected threshold allocation.
/// Agrees with gamma_map on the expected share; a split expectation throws.
ThresholdAllocation realized_allocation(const ModelParams& params,
                                        const AdProfile& ads,
                                        const ThresholdAllocation& expected);

/// Iterate gamma_map from initial_share1 until two consecutive shares differ
/// by less than tol or max_steps is exhausted. Landing exactly on 1/2
/// mid-orbit throws singular_orbit_error carrying the step index.
IterationTrace iterate_to_fixed_point(const ModelParams& params,
                                      const AdProfile& ads,
                                      double initial_share1,
                                      double tol = 1e-12, int max_steps = 10000);

} // namespace ugcduo
