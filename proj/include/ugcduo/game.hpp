#pragma once
#include <optional>

#include "ugcduo/equilibrium.hpp"

namespace ugcduo {

/// Which piece of the piecewise profit map applies at an ad profile.
enum class ProfitBranch { interior, p1_monopoly, p2_monopoly };

/// Profits a_j * n_j under the focal-selected allocation at the profile.
struct ProfitOutcome {
    double pi1 = 0.0;
    double pi2 = 0.0;
    ProfitBranch branch = ProfitBranch::interior;

    bool operator==(const ProfitOutcome&) const = default;
};

/// The simultaneous interior first-order-condition point and its auxiliary
/// constant c* = a1* + a2*.
struct FocCandidate {
    double a1 = 0.0;
    double a2 = 0.0;
    double c_star = 0.0;

    bool operator==(const FocCandidate&) const = default;
};

/// Why the interior candidate is not an equilibrium: platform 2's market-
/// capture supremum against a1* beats its interior profit.
struct FocRefutation {
    FocCandidate candidate;
    double p2_monopoly_supremum = 0.0;
    double p2_interior_profit = 0.0;
    bool refuted = false;

    bool operator==(const FocRefutation&) const = default;
};

/// Search box and resolution for grid-based optimization. Analytic
/// candidates (FOC roots, branch seams) are always injected on top of the
/// grid so seam optima are never missed.
struct GridSpec {
    double step = 1e-4;
    double a_max = 1.0;

    bool operator==(const GridSpec&) const = default;
};

/** Result of maximizing one platform's profit against a fixed opponent.
 *
 * `level`/`value` is the best *attained* point. When the true supremum sits
 * on an open branch edge (platform 2's capture branch: every level strictly
 * below the seam earns that level, the seam itself does not), `attained` is
 * false and `supremum`/`sup_level` report the unattained bound.
 */
struct BestResponse {
    double level = 0.0;
    double value = 0.0;
    double supremum = 0.0;
    double sup_level = 0.0;
    bool attained = true;

    bool operator==(const BestResponse&) const = default;
};

enum class GameConcept { nash, stackelberg_leader1 };

/// An advertising-game solution plus its deviation audit. Gaps are incumbent
/// payoff minus best attainable deviation payoff; negative means profitable
/// deviation.
struct GameSolution {
    GameConcept solution_concept = GameConcept::nash;
    ModelParams params;
    AdProfile ads;
    ProfitOutcome profits;
    double p1_deviation_gap = 0.0;
    double p2_deviation_gap = 0.0;
    bool deviation_free = false;
    std::optional<FocRefutation> foc;

    /// Throws inconsistency_error when the audit found a profitable deviation.
    void require_consistent() const;

    bool operator==(const GameSolution&) const = default;
};

/// Piecewise profits. Interior window -lambda/2 <= a1-a2 <= 1/8-lambda/2
/// uses the stable dominant-1 shares; beyond it one platform takes all. Seam
/// points evaluate with the interior expression (weak inequalities).
ProfitOutcome profits(const ModelParams& params, const AdProfile& ads);

/// Closed-form simultaneous interior FOC point:
/// c* = (-2 + sqrt(9 - 20 lambda)) / 5, a1* = (3c* + c*^2)/4, a2* = (c* - c*^2)/4.
FocCandidate interior_foc_candidate(const ModelParams& params);

/// Maximize the mover's profit over [0, a_max] against a fixed opponent
/// level, combining the analytic interior FOC roots, branch seams, box edges
/// and a grid scan.
BestResponse best_response(const ModelParams& params, Platform mover,
                           double opponent_ad, const GridSpec& grid = {});

/// The documented closed-form profile (1/8 - lambda/2, 0) with a full
/// deviation audit for both platforms and the interior-candidate refutation.
GameSolution nash_solve(const ModelParams& params, const GridSpec& grid = {});

/// Leader-commitment version: platform 1 moves first against a follower that
/// captures the market whenever feasible. Returns the same closed form, with
/// a grid audit of the leader's payoff against that scripted follower.
GameSolution stackelberg_solve(const ModelParams& params,
                               const GridSpec& grid = {});

} // namespace ugcduo
