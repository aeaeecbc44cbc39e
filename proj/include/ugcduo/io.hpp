#pragma once
#include <iosfwd>
#include <string>

#include <json.hpp>

#include "ugcduo/dynamics.hpp"
#include "ugcduo/equilibrium.hpp"
#include "ugcduo/game.hpp"
#include "ugcduo/montecarlo.hpp"
#include "ugcduo/scenario.hpp"

namespace ugcduo {

/// Shortest round-trip text for a double via "%.17g" (CSV cells).
std::string format_double(double v);

// JSON adapters. Parsing runs the same validating constructors as the API,
// so a config or result file with out-of-range values is rejected.
void to_json(nlohmann::json& j, const ThresholdAllocation& a);
void from_json(const nlohmann::json& j, ThresholdAllocation& a);
void to_json(nlohmann::json& j, const IterationTrace& t);
void from_json(const nlohmann::json& j, IterationTrace& t);
void to_json(nlohmann::json& j, const Equilibrium& e);
void from_json(const nlohmann::json& j, Equilibrium& e);
void to_json(nlohmann::json& j, const ProfitOutcome& p);
void from_json(const nlohmann::json& j, ProfitOutcome& p);
void to_json(nlohmann::json& j, const FocCandidate& f);
void from_json(const nlohmann::json& j, FocCandidate& f);
void to_json(nlohmann::json& j, const FocRefutation& f);
void from_json(const nlohmann::json& j, FocRefutation& f);
void to_json(nlohmann::json& j, const BestResponse& b);
void from_json(const nlohmann::json& j, BestResponse& b);
void to_json(nlohmann::json& j, const Agent& a);
void from_json(const nlohmann::json& j, Agent& a);
void to_json(nlohmann::json& j, const AgentPopulation& p);
void from_json(const nlohmann::json& j, AgentPopulation& p);
void to_json(nlohmann::json& j, const RoundStats& r);
void from_json(const nlohmann::json& j, RoundStats& r);
void to_json(nlohmann::json& j, const SimulationResult& r);
void from_json(const nlohmann::json& j, SimulationResult& r);

std::string to_string(Dominance d);
std::string to_string(Platform p);
std::string to_string(Stability s);
std::string to_string(EquilibriumKind k);
std::string to_string(ProfitBranch b);
std::string to_string(GameConcept c);

// CSV emitters used by the CLI and the acceptance checks. All doubles are
// written with format_double so files are byte-stable and parse back exactly.
void write_dynamics_csv(std::ostream& os, const IterationTrace& trace);
void write_figure_csv(std::ostream& os, const FigureColumns& fig);
void write_undercut_csv(std::ostream& os, const UndercutTrace& trace);
void write_montecarlo_csv(std::ostream& os, const SimulationResult& result);
void write_equilibria_csv(std::ostream& os, const EquilibriumSet& set);

nlohmann::json trace_json(const ModelParams& params, const AdProfile& ads,
                          const IterationTrace& trace);
nlohmann::json equilibria_json(const EquilibriumSet& set);
nlohmann::json game_solution_json(const GameSolution& sol);
nlohmann::json montecarlo_json(const ModelParams& params, const AdProfile& ads,
                               const AgentPopulation& population,
                               double start_share,
                               const SimulationResult& result);

EquilibriumSet equilibria_from_json(const nlohmann::json& j);
GameSolution game_solution_from_json(const nlohmann::json& j);

} // namespace ugcduo

namespace nlohmann {

// ModelParams and AdProfile have no default constructor (their invariants
// are enforced at construction), hence explicit serializers.
template <>
struct adl_serializer<ugcduo::ModelParams> {
    static void to_json(json& j, const ugcduo::ModelParams& p) {
        j = json{{"lambda", p.lambda()}, {"qm", p.qm()}};
    }
    static ugcduo::ModelParams from_json(const json& j) {
        return ugcduo::ModelParams(j.at("lambda").get<double>(),
                                   j.value("qm", 1.0));
    }
};

template <>
struct adl_serializer<ugcduo::AdProfile> {
    static void to_json(json& j, const ugcduo::AdProfile& a) {
        j = json{{"a1", a.a1()}, {"a2", a.a2()}};
    }
    static ugcduo::AdProfile from_json(const json& j) {
        return ugcduo::AdProfile(j.at("a1").get<double>(),
                                 j.at("a2").get<double>());
    }
};

} // namespace nlohmann
