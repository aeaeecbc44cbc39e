#include "ugcduo/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ugcduo {

namespace {

double clamp01(double x) { return std::clamp(x, 0.0, 1.0); }

} // namespace

ThresholdAllocation ThresholdAllocation::from_share1(double share1) {
    if (!(share1 >= 0.0 && share1 <= 1.0))
        throw std::domain_error("share outside [0,1]");
    if (share1 > 0.5)
        return {1.0 - share1, Dominance::platform1, share1};
    if (share1 < 0.5)
        return {share1, Dominance::platform2, share1};
    return {0.5, Dominance::split, share1};
}

bool ThresholdAllocation::consistent() const noexcept {
    if (!(beta_tilde >= 0.0 && beta_tilde <= 0.5)) return false;
    if (!(share1 >= 0.0 && share1 <= 1.0)) return false;
    switch (dominant) {
        case Dominance::platform1: return share1 == 1.0 - beta_tilde;
        case Dominance::platform2: return share1 == beta_tilde;
        case Dominance::split: return share1 == 0.5 && beta_tilde == 0.5;
    }
    return false;
}

double gamma_map(const ModelParams& params, const AdProfile& ads,
                 double expected_share1) {
    const double n = expected_share1;
    if (!(n >= 0.0 && n <= 1.0))
        throw std::domain_error("expected share outside [0,1]");
    if (n == 0.0) return 0.0;
    if (n == 1.0) return 1.0;
    if (n == 0.5)
        throw singular_share_error(
            "expected share 1/2: realized-share map is singular");
    const double half_lambda = 0.5 * params.lambda();
    if (n < 0.5) {
        // platform 1 expected on the lower interval: quality edge +lambda/2,
        // network disadvantage 2n-1 < 0
        return clamp01((ads.gap() - half_lambda) / (2.0 * n - 1.0));
    }
    return clamp01(1.0 - (half_lambda + ads.gap()) / (2.0 * n - 1.0));
}

ThresholdAllocation realized_allocation(const ModelParams& params,
                                        const AdProfile& ads,
                                        const ThresholdAllocation& expected) {
    if (!expected.consistent())
        throw std::invalid_argument("expected allocation fields disagree");
    if (expected.dominant == Dominance::split)
        throw singular_share_error(
            "expected allocation splits the market exactly in half");
    return ThresholdAllocation::from_share1(
        gamma_map(params, ads, expected.share1));
}

IterationTrace iterate_to_fixed_point(const ModelParams& params,
                                      const AdProfile& ads,
                                      double initial_share1, double tol,
                                      int max_steps) {
    if (!(initial_share1 >= 0.0 && initial_share1 <= 1.0))
        throw std::domain_error("initial share outside [0,1]");
    if (initial_share1 == 0.5)
        throw singular_share_error("initial share 1/2 excluded");
    if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");
    if (max_steps < 1) throw std::invalid_argument("max_steps must be >= 1");

    IterationTrace trace;
    trace.shares.push_back(initial_share1);
    double current = initial_share1;
    for (int step = 0; step < max_steps; ++step) {
        if (current == 0.5) throw singular_orbit_error(step);
        const double next = gamma_map(params, ads, current);
        trace.shares.push_back(next);
        trace.steps = step + 1;
        if (std::abs(next - current) < tol) {
            trace.converged = true;
            trace.limit = next;
            return trace;
        }
        current = next;
    }
    return trace; // max_steps exhausted, converged stays false
}

} // namespace ugcduo
