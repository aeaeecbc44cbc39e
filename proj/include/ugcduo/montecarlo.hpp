#pragma once
#include <cstdint>
#include <optional>
#include <vector>

#include "ugcduo/model.hpp"

namespace ugcduo {

struct Agent {
    double beta = 0.0;
    double quality = 0.0;

    bool operator==(const Agent&) const = default;
};

/// A finite sampled user population; deterministic given the seed.
struct AgentPopulation {
    std::vector<Agent> agents;
    std::uint64_t seed = 0;

    std::size_t size() const noexcept { return agents.size(); }

    bool operator==(const AgentPopulation&) const = default;
};

/// Per-round aggregates of the simulated re-allocation dynamic.
struct RoundStats {
    int round = 0;
    double share1 = 0.0;
    std::optional<double> q1; // empty when the platform has no agents
    std::optional<double> q2;
    long switches = 0;

    bool operator==(const RoundStats&) const = default;
};

struct SimulationResult {
    double final_share1 = 0.0;
    double empirical_cutoff = 0.0;
    int rounds = 0;
    bool converged = false;
    std::vector<RoundStats> trace;
    std::vector<bool> on_platform1; // final assignment, indexed like the agents

    bool operator==(const SimulationResult&) const = default;
};

/// Draw n agents with beta ~ U[0,1) and quality q(beta) plus uniform noise
/// on [-noise_halfwidth, +noise_halfwidth] (default off). Requires n >= 2 and
/// 0 <= noise_halfwidth <= qm - lambda so qualities stay positive.
AgentPopulation sample_population(const ModelParams& params, std::size_t n,
                                  std::uint64_t seed,
                                  double noise_halfwidth = 0.0);

/** Synchronous best-response rounds on a finite population.
 *
 * The top initial_share1 fraction of agents by beta starts on platform 1.
 * Each round every agent sees the previous round's empirical shares and
 * average qualities (an empty platform is dominated) and picks the better
 * platform, staying put on exact ties. Stops when nobody switches.
 */
SimulationResult run_dynamics(const AgentPopulation& population,
                              const ModelParams& params, const AdProfile& ads,
                              double initial_share1, int max_rounds = 1000);

} // namespace ugcduo
