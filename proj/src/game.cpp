#include "ugcduo/game.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace ugcduo {

namespace {

constexpr double kDeviationTolerance = 1e-9;

double mover_profit(const ModelParams& params, Platform mover, double own,
                    double opponent) {
    const AdProfile ads = mover == Platform::platform1
                              ? AdProfile(own, opponent)
                              : AdProfile(opponent, own);
    const ProfitOutcome outcome = profits(params, ads);
    return mover == Platform::platform1 ? outcome.pi1 : outcome.pi2;
}

// Stationary points of the mover's interior-branch profit against a fixed
// opponent, parameterized by s = sqrt(1 - 8(a1 - a2 + lambda/2)).
std::vector<double> interior_stationary_levels(const ModelParams& params,
                                               Platform mover,
                                               double opponent) {
    const double lambda = params.lambda();
    std::vector<double> levels;
    if (mover == Platform::platform1) {
        // 3s^2 + 6s - (1 - 4 lambda + 8 opponent) = 0, positive root only
        const double disc = 9.0 + 3.0 * (1.0 - 4.0 * lambda + 8.0 * opponent);
        if (disc >= 0.0) {
            const double s = (-3.0 + std::sqrt(disc)) / 3.0;
            if (s > 0.0)
                levels.push_back(opponent + (1.0 - s * s - 4.0 * lambda) / 8.0);
        }
    } else {
        // 3s^2 - 2s + (8 opponent + 4 lambda - 1) = 0; both roots can be
        // genuine stationary points (one is typically a trough)
        const double disc = 4.0 - 24.0 * opponent - 12.0 * lambda;
        if (disc >= 0.0) {
            for (double s : {(1.0 - std::sqrt(disc)) / 3.0,
                             (1.0 + std::sqrt(disc)) / 3.0}) {
                if (s >= 0.0 && s <= 1.0)
                    levels.push_back(
                        (s * s - 1.0 + 8.0 * opponent + 4.0 * lambda) / 8.0);
            }
        }
    }
    return levels;
}

} // namespace

void GameSolution::require_consistent() const {
    if (!deviation_free)
        throw inconsistency_error(
            "solution fails its deviation audit: p1 gap " +
            std::to_string(p1_deviation_gap) + ", p2 gap " +
            std::to_string(p2_deviation_gap));
}

ProfitOutcome profits(const ModelParams& params, const AdProfile& ads) {
    const double gap = ads.gap();
    const double half_lambda = 0.5 * params.lambda();
    if (gap < -half_lambda)
        return {ads.a1(), 0.0, ProfitBranch::p1_monopoly};
    if (gap > 0.125 - half_lambda)
        return {0.0, ads.a2(), ProfitBranch::p2_monopoly};
    // max guards float dust at the right seam where the radicand hits zero
    const double u = std::sqrt(std::max(0.0, 1.0 - 8.0 * (gap + half_lambda)));
    return {0.25 * ads.a1() * (3.0 + u), 0.25 * ads.a2() * (1.0 - u),
            ProfitBranch::interior};
}

FocCandidate interior_foc_candidate(const ModelParams& params) {
    const double lambda = params.lambda();
    const double r = std::sqrt(9.0 - 20.0 * lambda);
    return {(11.0 * r - 20.0 * lambda - 17.0) / 100.0,
            (9.0 * r + 20.0 * lambda - 23.0) / 100.0, (r - 2.0) / 5.0};
}

BestResponse best_response(const ModelParams& params, Platform mover,
                           double opponent_ad, const GridSpec& grid) {
    if (!std::isfinite(opponent_ad) || opponent_ad < 0.0)
        throw std::invalid_argument("opponent ad level must be >= 0");
    if (!(grid.step > 0.0) || !(grid.a_max > 0.0))
        throw std::invalid_argument("grid step and a_max must be positive");

    std::vector<double> candidates;
    candidates.reserve(static_cast<std::size_t>(grid.a_max / grid.step) + 8);
    const long cells = static_cast<long>(std::floor(grid.a_max / grid.step));
    for (long k = 0; k <= cells; ++k)
        candidates.push_back(static_cast<double>(k) * grid.step);
    candidates.push_back(grid.a_max);
    // branch seams in the mover's own variable
    if (mover == Platform::platform1) {
        candidates.push_back(opponent_ad - 0.5 * params.lambda());
        candidates.push_back(opponent_ad + 0.125 - 0.5 * params.lambda());
    } else {
        candidates.push_back(opponent_ad - 0.125 + 0.5 * params.lambda());
        candidates.push_back(opponent_ad + 0.5 * params.lambda());
    }
    for (double level : interior_stationary_levels(params, mover, opponent_ad))
        candidates.push_back(level);

    std::sort(candidates.begin(), candidates.end());
    double best_level = 0.0;
    double best_value = mover_profit(params, mover, 0.0, opponent_ad);
    for (double level : candidates) {
        if (level <= 0.0 || level > grid.a_max) continue;
        const double value = mover_profit(params, mover, level, opponent_ad);
        if (value > best_value) {
            best_value = value;
            best_level = level;
        }
    }

    BestResponse br{best_level, best_value, best_value, best_level, true};
    if (mover == Platform::platform2) {
        // below this seam every own level captures the whole market and earns
        // itself; the bound is approached but never attained
        const double seam = opponent_ad - 0.125 + 0.5 * params.lambda();
        if (seam > 0.0 && seam <= grid.a_max && seam > best_value) {
            br.supremum = seam;
            br.sup_level = seam;
            br.attained = false;
        }
    }
    return br;
}

GameSolution nash_solve(const ModelParams& params, const GridSpec& grid) {
    const double a1 = 0.125 - 0.5 * params.lambda();
    const AdProfile ads{a1, 0.0};
    const ProfitOutcome outcome = profits(params, ads);

    const BestResponse br1 = best_response(params, Platform::platform1, 0.0, grid);
    const BestResponse br2 = best_response(params, Platform::platform2, a1, grid);
    const double p1_gap = outcome.pi1 - br1.value;
    const double p2_gap = outcome.pi2 - br2.value;

    const FocCandidate candidate = interior_foc_candidate(params);
    const double p2_sup = candidate.a1 - 0.125 + 0.5 * params.lambda();
    const double p2_interior =
        profits(params, AdProfile{candidate.a1, candidate.a2}).pi2;
    const FocRefutation refutation{candidate, p2_sup, p2_interior,
                                   p2_sup > p2_interior};

    return {GameConcept::nash,
            params,
            ads,
            outcome,
            p1_gap,
            p2_gap,
            p1_gap >= -kDeviationTolerance && p2_gap >= -kDeviationTolerance,
            refutation};
}

GameSolution stackelberg_solve(const ModelParams& params,
                               const GridSpec& grid) {
    const double a1 = 0.125 - 0.5 * params.lambda();
    const AdProfile ads{a1, 0.0};
    const ProfitOutcome outcome = profits(params, ads);

    // leader payoff against the scripted follower: capture whenever feasible
    const auto leader_payoff = [&](double level) {
        const double follower_seam = level - 0.125 + 0.5 * params.lambda();
        if (follower_seam > 0.0) return 0.0; // follower tips the market
        return profits(params, AdProfile{level, 0.0}).pi1;
    };

    std::vector<double> candidates;
    const long cells = static_cast<long>(std::floor(grid.a_max / grid.step));
    for (long k = 0; k <= cells; ++k)
        candidates.push_back(static_cast<double>(k) * grid.step);
    candidates.push_back(grid.a_max);
    candidates.push_back(a1);
    for (double level :
         interior_stationary_levels(params, Platform::platform1, 0.0))
        candidates.push_back(level);
    std::sort(candidates.begin(), candidates.end());

    double best_value = leader_payoff(0.0);
    for (double level : candidates) {
        if (level <= 0.0 || level > grid.a_max) continue;
        best_value = std::max(best_value, leader_payoff(level));
    }
    const double p1_gap = outcome.pi1 - best_value;

    const BestResponse br2 = best_response(params, Platform::platform2, a1, grid);
    const double p2_gap = outcome.pi2 - br2.value;

    return {GameConcept::stackelberg_leader1,
            params,
            ads,
            outcome,
            p1_gap,
            p2_gap,
            p1_gap >= -kDeviationTolerance && p2_gap >= -kDeviationTolerance,
            std::nullopt};
}

} // namespace ugcduo
