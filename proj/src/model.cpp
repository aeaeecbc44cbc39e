#include "ugcduo/model.hpp"

#include <cmath>
#include <stdexcept>

namespace ugcduo {

ModelParams::ModelParams(double lambda, double qm) : lambda_(lambda), qm_(qm) {
    if (!(lambda > 0.0 && lambda < 0.25))
        throw std::invalid_argument("lambda must lie in (0, 0.25)");
    if (!(qm > lambda) || !std::isfinite(qm))
        throw std::invalid_argument("qm must be finite and exceed lambda");
}

AdProfile::AdProfile(double a1, double a2) : a1_(a1), a2_(a2) {
    if (!std::isfinite(a1) || !(a1 >= 0.0))
        throw std::invalid_argument("a1 must be finite and nonnegative");
    if (!std::isfinite(a2) || !(a2 >= 0.0))
        throw std::invalid_argument("a2 must be finite and nonnegative");
}

double quality_schedule(const ModelParams& params, double beta) {
    if (!(beta >= 0.0 && beta <= 1.0))
        throw std::domain_error("beta outside [0,1]");
    return params.qm() - params.lambda() * beta;
}

double interval_avg_quality(const ModelParams& params, double lo, double hi) {
    if (!(lo >= 0.0) || !(hi <= 1.0))
        throw std::domain_error("interval outside [0,1]");
    if (!(lo < hi))
        throw degenerate_interval_error("interval has no positive length");
    return params.qm() - params.lambda() * 0.5 * (lo + hi);
}

double user_utility(const ModelParams& params, double beta,
                    std::optional<double> platform_quality,
                    double platform_share, double ad_level) {
    if (!(beta >= 0.0 && beta <= 1.0))
        throw std::domain_error("beta outside [0,1]");
    if (!(platform_share >= 0.0 && platform_share <= 1.0))
        throw std::domain_error("platform share outside [0,1]");
    if (!std::isfinite(ad_level))
        throw std::domain_error("ad level must be finite");
    if (!platform_quality)
        return dominated_utility; // empty platform loses every comparison
    if (!std::isfinite(*platform_quality))
        throw std::domain_error("platform quality must be finite");
    (void)params;
    return *platform_quality + beta * platform_share - ad_level;
}

} // namespace ugcduo
