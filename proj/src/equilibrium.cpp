#include "ugcduo/equilibrium.hpp"

#include <cmath>
#include <stdexcept>

namespace ugcduo {

namespace {

// Constant of the cutoff quadratic for the given orientation: the dominant
// platform's quality handicap lambda/2 net of its ad handicap.
double orientation_constant(const ModelParams& params, const AdProfile& ads,
                            Platform dominant) {
    const double signed_gap =
        dominant == Platform::platform1 ? ads.gap() : -ads.gap();
    return signed_gap + 0.5 * params.lambda();
}

Dominance to_dominance(Platform p) {
    return p == Platform::platform1 ? Dominance::platform1
                                    : Dominance::platform2;
}

} // namespace

std::vector<double> cutoff_roots(double c) {
    if (!(c > 0.0) || c > 0.125) return {};
    const double disc = 1.0 - 8.0 * c;
    if (disc == 0.0) return {0.25};
    const double u = std::sqrt(disc);
    // smaller root written as 2c/(1+u) to dodge the 1 - u cancellation
    return {2.0 * c / (1.0 + u), 0.25 * (1.0 + u)};
}

std::vector<double> interior_cutoffs(const ModelParams& params,
                                     const AdProfile& ads, Platform dominant) {
    return cutoff_roots(orientation_constant(params, ads, dominant));
}

double stability_derivative(const ModelParams& params, const AdProfile& ads,
                            double cutoff, Platform dominant) {
    const double c = orientation_constant(params, ads, dominant);
    if (!(cutoff > 0.0 && cutoff < 0.5))
        throw std::invalid_argument("cutoff outside (0, 1/2)");
    if (std::abs((1.0 - 2.0 * cutoff) * cutoff - c) > 1e-10)
        throw std::invalid_argument("cutoff is not a fixed point");
    const double d = 1.0 - 2.0 * cutoff;
    return 2.0 * c / (d * d);
}

Stability classify_stability(const ModelParams& params, const AdProfile& ads,
                             double cutoff, Platform dominant) {
    return stability_derivative(params, ads, cutoff, dominant) < 1.0
               ? Stability::stable
               : Stability::unstable;
}

std::vector<Equilibrium> boundary_equilibria(const ModelParams& params,
                                             const AdProfile& ads) {
    const double gap = ads.gap();
    const double half_lambda = 0.5 * params.lambda();
    Equilibrium all_to_2{EquilibriumKind::boundary,
                         ThresholdAllocation{0.0, Dominance::platform2, 0.0},
                         gap > half_lambda ? Stability::stable
                                           : Stability::unstable,
                         Platform::platform2};
    Equilibrium all_to_1{EquilibriumKind::boundary,
                         ThresholdAllocation{0.0, Dominance::platform1, 1.0},
                         gap < -half_lambda ? Stability::stable
                                            : Stability::unstable,
                         Platform::platform1};
    return {all_to_2, all_to_1};
}

EquilibriumSet solve_equilibria(const ModelParams& params, const AdProfile& ads,
                                Platform focal) {
    std::vector<Equilibrium> found;
    for (Platform dominant : {Platform::platform1, Platform::platform2}) {
        for (double cutoff : interior_cutoffs(params, ads, dominant)) {
            const double share1 = dominant == Platform::platform1
                                      ? 1.0 - cutoff
                                      : cutoff;
            found.push_back(
                {EquilibriumKind::interior,
                 ThresholdAllocation{cutoff, to_dominance(dominant), share1},
                 classify_stability(params, ads, cutoff, dominant), dominant});
        }
    }
    for (const Equilibrium& b : boundary_equilibria(params, ads))
        found.push_back(b);

    const auto focal_share = [focal](const Equilibrium& e) {
        return focal == Platform::platform1 ? e.allocation.share1
                                            : e.allocation.share2();
    };
    std::optional<Equilibrium> selected;
    for (const Equilibrium& e : found) {
        if (e.stability != Stability::stable) continue;
        if (!selected || focal_share(e) > focal_share(*selected)) {
            selected = e;
        } else if (focal_share(e) == focal_share(*selected) &&
                   e.kind == EquilibriumKind::interior &&
                   selected->kind == EquilibriumKind::boundary) {
            selected = e; // tie-break: prefer the interior equilibrium
        }
    }
    return {params, ads, std::move(found), selected};
}

} // namespace ugcduo
