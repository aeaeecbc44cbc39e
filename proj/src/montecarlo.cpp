#include "ugcduo/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "ugcduo/rng.hpp"

namespace ugcduo {

AgentPopulation sample_population(const ModelParams& params, std::size_t n,
                                  std::uint64_t seed, double noise_halfwidth) {
    if (n < 2) throw std::invalid_argument("population needs at least 2 agents");
    if (!std::isfinite(noise_halfwidth) || noise_halfwidth < 0.0 ||
        noise_halfwidth > params.qm() - params.lambda())
        throw std::invalid_argument(
            "noise halfwidth must lie in [0, qm - lambda]");

    std::mt19937_64 engine(seed);
    AgentPopulation population;
    population.seed = seed;
    population.agents.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double beta = uniform01(engine);
        // noise draw always consumed so betas are seed-stable across halfwidths
        const double noise = (2.0 * uniform01(engine) - 1.0) * noise_halfwidth;
        population.agents.push_back({beta, quality_schedule(params, beta) + noise});
    }
    return population;
}

namespace {

struct Aggregates {
    double share1 = 0.0;
    std::optional<double> q1;
    std::optional<double> q2;
};

Aggregates aggregate(const std::vector<Agent>& agents,
                     const std::vector<char>& on1) {
    std::size_t count1 = 0;
    double sum1 = 0.0;
    double sum2 = 0.0;
    for (std::size_t i = 0; i < agents.size(); ++i) {
        if (on1[i]) {
            ++count1;
            sum1 += agents[i].quality;
        } else {
            sum2 += agents[i].quality;
        }
    }
    const std::size_t count2 = agents.size() - count1;
    Aggregates agg;
    agg.share1 = static_cast<double>(count1) / static_cast<double>(agents.size());
    if (count1 > 0) agg.q1 = sum1 / static_cast<double>(count1);
    if (count2 > 0) agg.q2 = sum2 / static_cast<double>(count2);
    return agg;
}

} // namespace

SimulationResult run_dynamics(const AgentPopulation& population,
                              const ModelParams& params, const AdProfile& ads,
                              double initial_share1, int max_rounds) {
    const std::vector<Agent>& agents = population.agents;
    if (agents.empty()) throw std::invalid_argument("population is empty");
    if (!(initial_share1 >= 0.0 && initial_share1 <= 1.0))
        throw std::domain_error("initial share outside [0,1]");
    if (max_rounds < 1) throw std::invalid_argument("max_rounds must be >= 1");

    const std::size_t n = agents.size();
    // seed assignment: the top initial_share1 fraction by beta joins platform 1
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (agents[a].beta != agents[b].beta)
            return agents[a].beta > agents[b].beta;
        return a < b;
    });
    const auto k = static_cast<std::size_t>(std::llround(
        initial_share1 * static_cast<double>(n)));
    std::vector<char> on1(n, 0);
    for (std::size_t i = 0; i < std::min(k, n); ++i) on1[order[i]] = 1;

    SimulationResult result;
    for (int round = 1; round <= max_rounds; ++round) {
        const Aggregates agg = aggregate(agents, on1);
        long switches = 0;
        for (std::size_t i = 0; i < n; ++i) {
            const double u1 = user_utility(params, agents[i].beta, agg.q1,
                                           agg.share1, ads.a1());
            const double u2 = user_utility(params, agents[i].beta, agg.q2,
                                           1.0 - agg.share1, ads.a2());
            // exact ties keep the agent on its incumbent platform
            const char next = u1 > u2 ? 1 : (u2 > u1 ? 0 : on1[i]);
            if (next != on1[i]) {
                on1[i] = next;
                ++switches;
            }
        }
        result.trace.push_back({round, agg.share1, agg.q1, agg.q2, switches});
        result.rounds = round;
        if (switches == 0) {
            result.converged = true;
            break;
        }
    }

    std::size_t count1 = 0;
    for (char c : on1) count1 += c;
    result.final_share1 =
        static_cast<double>(count1) / static_cast<double>(n);
    result.on_platform1.assign(on1.begin(), on1.end());

    // cutoff estimate: midpoint of the empirical gap between the two groups
    if (count1 == 0 || count1 == n) {
        result.empirical_cutoff = 0.0;
    } else {
        double max_low = 0.0;
        double min_high = 1.0;
        const bool p1_on_top = 2 * count1 >= n;
        for (std::size_t i = 0; i < n; ++i) {
            const bool high_group = (on1[i] != 0) == p1_on_top;
            if (high_group)
                min_high = std::min(min_high, agents[i].beta);
            else
                max_low = std::max(max_low, agents[i].beta);
        }
        result.empirical_cutoff = 0.5 * (max_low + min_high);
    }
    return result;
}

} // namespace ugcduo
