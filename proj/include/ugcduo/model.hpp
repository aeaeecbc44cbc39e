#pragma once
#include <limits>
#include <optional>

#include "ugcduo/errors.hpp"

namespace ugcduo {

/** Structural constants of the model.
 *
 * `lambda` measures how strongly contributed-content quality falls with the
 * user type; the whole analysis lives in 0 < lambda < 1/4, so anything else
 * is rejected at construction. `qm` is the quality contributed by type 0 and
 * must exceed lambda so the schedule stays positive on [0,1]. Quality only
 * ever enters through differences, so qm defaults to 1.
 */
class ModelParams {
public:
    explicit ModelParams(double lambda, double qm = 1.0);

    double lambda() const noexcept { return lambda_; }
    double qm() const noexcept { return qm_; }

    bool operator==(const ModelParams&) const = default;

private:
    double lambda_;
    double qm_;
};

/// The two platforms' advertising intensities, both nonnegative.
class AdProfile {
public:
    AdProfile(double a1, double a2);

    double a1() const noexcept { return a1_; }
    double a2() const noexcept { return a2_; }
    /// a1 - a2; the sign conventions of every branch condition hang off this.
    double gap() const noexcept { return a1_ - a2_; }

    bool operator==(const AdProfile&) const = default;

private:
    double a1_;
    double a2_;
};

/// A user's relative valuation of network size versus content quality.
struct UserType {
    double beta = 0.0; // uniform on [0,1] in the population

    bool operator==(const UserType&) const = default;
};

/// Utility value below every finite utility: an empty platform evaluates to
/// this, so it loses every comparison against a platform that has users.
inline constexpr double dominated_utility = -std::numeric_limits<double>::infinity();

/// Mean contributed quality of type beta: qm - lambda * beta.
double quality_schedule(const ModelParams& params, double beta);

/// Mean of the quality schedule over [lo, hi); equals qm - lambda*(lo+hi)/2.
/// Throws degenerate_interval_error when the interval has no positive length
/// (a platform whose user set has measure zero is always dominated instead).
double interval_avg_quality(const ModelParams& params, double lo, double hi);

/// Utility of a type-beta user on a platform with the given average quality,
/// share and ad level: Q + beta*n - a. A nullopt quality marks an empty
/// platform and yields dominated_utility.
double user_utility(const ModelParams& params, double beta,
                    std::optional<double> platform_quality,
                    double platform_share, double ad_level);

} // namespace ugcduo
