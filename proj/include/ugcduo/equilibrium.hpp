#pragma once
#include <optional>
#include <vector>

#include "ugcduo/dynamics.hpp"

namespace ugcduo {

enum class Platform { platform1 = 1, platform2 = 2 };
enum class Stability { stable, unstable };
enum class EquilibriumKind { interior, boundary };

/// A self-fulfilling allocation, classified.
struct Equilibrium {
    EquilibriumKind kind = EquilibriumKind::boundary;
    ThresholdAllocation allocation;
    Stability stability = Stability::unstable;
    Platform dominant = Platform::platform1;

    bool operator==(const Equilibrium&) const = default;
};

/// Every equilibrium for one (params, ads) cell plus the focal-rule pick.
/// `selected` is empty only when nothing is stable (a measure-zero ad gap).
struct EquilibriumSet {
    ModelParams params;
    AdProfile ads;
    std::vector<Equilibrium> equilibria;
    std::optional<Equilibrium> selected;

    bool operator==(const EquilibriumSet&) const = default;
};

/// Roots of (1 - 2b) b = c inside (0, 1/2): two for 0 < c < 1/8, the double
/// root 1/4 at c = 1/8, none otherwise. Sorted ascending.
std::vector<double> cutoff_roots(double c);

/// Interior equilibrium cutoffs for the given dominance orientation.
/// Empty result encodes nonexistence (the ad gap is outside the window).
std::vector<double> interior_cutoffs(const ModelParams& params,
                                     const AdProfile& ads, Platform dominant);

/// |f'| of the cutoff iteration at a fixed point: 2c / (1 - 2b)^2.
/// Throws std::invalid_argument when the cutoff is not a fixed point
/// (residual above 1e-10).
double stability_derivative(const ModelParams& params, const AdProfile& ads,
                            double cutoff, Platform dominant);

/// Stable iff the derivative magnitude is strictly below 1. The smaller root
/// is always the stable one; the neutral double-root case counts as unstable.
Stability classify_stability(const ModelParams& params, const AdProfile& ads,
                             double cutoff, Platform dominant);

/// The two all-or-nothing allocations. Both are always fixed points; share1=0
/// is stable iff a1 - a2 > lambda/2, share1=1 iff a1 - a2 < -lambda/2.
std::vector<Equilibrium> boundary_equilibria(const ModelParams& params,
                                             const AdProfile& ads);

/// Enumerate interior cutoffs in both orientations plus the boundaries,
/// classify each, and select the stable equilibrium giving the focal platform
/// the largest share (ties prefer interior).
EquilibriumSet solve_equilibria(const ModelParams& params, const AdProfile& ads,
                                Platform focal = Platform::platform1);

} // namespace ugcduo
