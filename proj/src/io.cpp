#include "ugcduo/io.hpp"

#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace ugcduo {

namespace {

nlohmann::json optional_to_json(const std::optional<double>& v) {
    if (v) return *v;
    return nullptr;
}

std::optional<double> optional_from_json(const nlohmann::json& j) {
    if (j.is_null()) return std::nullopt;
    return j.get<double>();
}

template <typename Enum>
Enum parse_enum(const nlohmann::json& j,
                std::initializer_list<std::pair<const char*, Enum>> table) {
    const auto name = j.get<std::string>();
    for (const auto& [key, value] : table)
        if (name == key) return value;
    throw std::invalid_argument("unknown enum value: " + name);
}

} // namespace

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string to_string(Dominance d) {
    switch (d) {
        case Dominance::split: return "split";
        case Dominance::platform1: return "platform1";
        case Dominance::platform2: return "platform2";
    }
    return "split";
}

std::string to_string(Platform p) {
    return p == Platform::platform1 ? "platform1" : "platform2";
}

std::string to_string(Stability s) {
    return s == Stability::stable ? "stable" : "unstable";
}

std::string to_string(EquilibriumKind k) {
    return k == EquilibriumKind::interior ? "interior" : "boundary";
}

std::string to_string(ProfitBranch b) {
    switch (b) {
        case ProfitBranch::interior: return "interior";
        case ProfitBranch::p1_monopoly: return "p1_monopoly";
        case ProfitBranch::p2_monopoly: return "p2_monopoly";
    }
    return "interior";
}

std::string to_string(GameConcept c) {
    return c == GameConcept::nash ? "nash" : "stackelberg_leader1";
}

void to_json(nlohmann::json& j, const ThresholdAllocation& a) {
    j = nlohmann::json{{"beta_tilde", a.beta_tilde},
                       {"dominant", static_cast<int>(a.dominant)},
                       {"share1", a.share1}};
}

void from_json(const nlohmann::json& j, ThresholdAllocation& a) {
    a.beta_tilde = j.at("beta_tilde").get<double>();
    a.dominant = static_cast<Dominance>(j.at("dominant").get<int>());
    a.share1 = j.at("share1").get<double>();
}

void to_json(nlohmann::json& j, const IterationTrace& t) {
    j = nlohmann::json{{"trace", t.shares},
                       {"converged", t.converged},
                       {"limit", optional_to_json(t.limit)},
                       {"steps", t.steps}};
}

void from_json(const nlohmann::json& j, IterationTrace& t) {
    t.shares = j.at("trace").get<std::vector<double>>();
    t.converged = j.at("converged").get<bool>();
    t.limit = optional_from_json(j.at("limit"));
    t.steps = j.at("steps").get<int>();
}

void to_json(nlohmann::json& j, const Equilibrium& e) {
    j = nlohmann::json{{"kind", to_string(e.kind)},
                       {"dominant", static_cast<int>(e.dominant)},
                       {"beta_tilde", e.allocation.beta_tilde},
                       {"share1", e.allocation.share1},
                       {"stability", to_string(e.stability)}};
}

void from_json(const nlohmann::json& j, Equilibrium& e) {
    e.kind = parse_enum<EquilibriumKind>(
        j.at("kind"), {{"interior", EquilibriumKind::interior},
                       {"boundary", EquilibriumKind::boundary}});
    e.dominant = static_cast<Platform>(j.at("dominant").get<int>());
    e.stability = parse_enum<Stability>(
        j.at("stability"),
        {{"stable", Stability::stable}, {"unstable", Stability::unstable}});
    e.allocation.beta_tilde = j.at("beta_tilde").get<double>();
    e.allocation.share1 = j.at("share1").get<double>();
    e.allocation.dominant = e.dominant == Platform::platform1
                                ? Dominance::platform1
                                : Dominance::platform2;
}

void to_json(nlohmann::json& j, const ProfitOutcome& p) {
    j = nlohmann::json{{"pi1", p.pi1},
                       {"pi2", p.pi2},
                       {"branch", to_string(p.branch)}};
}

void from_json(const nlohmann::json& j, ProfitOutcome& p) {
    p.pi1 = j.at("pi1").get<double>();
    p.pi2 = j.at("pi2").get<double>();
    p.branch = parse_enum<ProfitBranch>(
        j.at("branch"), {{"interior", ProfitBranch::interior},
                         {"p1_monopoly", ProfitBranch::p1_monopoly},
                         {"p2_monopoly", ProfitBranch::p2_monopoly}});
}

void to_json(nlohmann::json& j, const FocCandidate& f) {
    j = nlohmann::json{{"a1", f.a1}, {"a2", f.a2}, {"c_star", f.c_star}};
}

void from_json(const nlohmann::json& j, FocCandidate& f) {
    f.a1 = j.at("a1").get<double>();
    f.a2 = j.at("a2").get<double>();
    f.c_star = j.at("c_star").get<double>();
}

void to_json(nlohmann::json& j, const FocRefutation& f) {
    j = nlohmann::json{{"candidate", f.candidate},
                       {"p2_monopoly_supremum", f.p2_monopoly_supremum},
                       {"p2_interior_profit", f.p2_interior_profit},
                       {"refuted", f.refuted}};
}

void from_json(const nlohmann::json& j, FocRefutation& f) {
    f.candidate = j.at("candidate").get<FocCandidate>();
    f.p2_monopoly_supremum = j.at("p2_monopoly_supremum").get<double>();
    f.p2_interior_profit = j.at("p2_interior_profit").get<double>();
    f.refuted = j.at("refuted").get<bool>();
}

void to_json(nlohmann::json& j, const BestResponse& b) {
    j = nlohmann::json{{"level", b.level},
                       {"value", b.value},
                       {"supremum", b.supremum},
                       {"sup_level", b.sup_level},
                       {"attained", b.attained}};
}

void from_json(const nlohmann::json& j, BestResponse& b) {
    b.level = j.at("level").get<double>();
    b.value = j.at("value").get<double>();
    b.supremum = j.at("supremum").get<double>();
    b.sup_level = j.at("sup_level").get<double>();
    b.attained = j.at("attained").get<bool>();
}

void to_json(nlohmann::json& j, const Agent& a) {
    j = nlohmann::json{{"beta", a.beta}, {"quality", a.quality}};
}

void from_json(const nlohmann::json& j, Agent& a) {
    a.beta = j.at("beta").get<double>();
    a.quality = j.at("quality").get<double>();
}

void to_json(nlohmann::json& j, const AgentPopulation& p) {
    j = nlohmann::json{{"agents", p.agents}, {"seed", p.seed}};
}

void from_json(const nlohmann::json& j, AgentPopulation& p) {
    p.agents = j.at("agents").get<std::vector<Agent>>();
    p.seed = j.at("seed").get<std::uint64_t>();
}

void to_json(nlohmann::json& j, const RoundStats& r) {
    j = nlohmann::json{{"round", r.round},
                       {"share1", r.share1},
                       {"q1", optional_to_json(r.q1)},
                       {"q2", optional_to_json(r.q2)},
                       {"switches", r.switches}};
}

void from_json(const nlohmann::json& j, RoundStats& r) {
    r.round = j.at("round").get<int>();
    r.share1 = j.at("share1").get<double>();
    r.q1 = optional_from_json(j.at("q1"));
    r.q2 = optional_from_json(j.at("q2"));
    r.switches = j.at("switches").get<long>();
}

void to_json(nlohmann::json& j, const SimulationResult& r) {
    j = nlohmann::json{{"final_share1", r.final_share1},
                       {"empirical_cutoff", r.empirical_cutoff},
                       {"rounds", r.rounds},
                       {"converged", r.converged},
                       {"trace", r.trace},
                       {"on_platform1", r.on_platform1}};
}

void from_json(const nlohmann::json& j, SimulationResult& r) {
    r.final_share1 = j.at("final_share1").get<double>();
    r.empirical_cutoff = j.at("empirical_cutoff").get<double>();
    r.rounds = j.at("rounds").get<int>();
    r.converged = j.at("converged").get<bool>();
    r.trace = j.at("trace").get<std::vector<RoundStats>>();
    r.on_platform1 = j.at("on_platform1").get<std::vector<bool>>();
}

void write_dynamics_csv(std::ostream& os, const IterationTrace& trace) {
    os << "step,share1\n";
    for (std::size_t i = 0; i < trace.shares.size(); ++i)
        os << i << ',' << format_double(trace.shares[i]) << '\n';
}

void write_figure_csv(std::ostream& os, const FigureColumns& fig) {
    os << "beta_tilde,F_red,F_blue,y_line,y_red_dashed,y_blue_dashed\n";
    for (std::size_t i = 0; i < fig.beta.size(); ++i) {
        os << format_double(fig.beta[i]) << ',' << format_double(fig.f_red[i])
           << ',' << format_double(fig.f_blue[i]) << ','
           << format_double(fig.y_line[i]) << ','
           << format_double(fig.y_red_dashed[i]) << ','
           << format_double(fig.y_blue_dashed[i]) << '\n';
    }
}

void write_undercut_csv(std::ostream& os, const UndercutTrace& trace) {
    os << "round,a1,a2,pi1,pi2\n";
    for (const UndercutRound& r : trace.rounds)
        os << r.round << ',' << format_double(r.a1) << ','
           << format_double(r.a2) << ',' << format_double(r.pi1) << ','
           << format_double(r.pi2) << '\n';
}

void write_montecarlo_csv(std::ostream& os, const SimulationResult& result) {
    os << "round,share1,Q1,Q2,switches\n";
    for (const RoundStats& r : result.trace) {
        os << r.round << ',' << format_double(r.share1) << ','
           << (r.q1 ? format_double(*r.q1) : "nan") << ','
           << (r.q2 ? format_double(*r.q2) : "nan") << ',' << r.switches
           << '\n';
    }
}

void write_equilibria_csv(std::ostream& os, const EquilibriumSet& set) {
    os << "kind,dominant,beta_tilde,share1,stability,selected\n";
    for (const Equilibrium& e : set.equilibria) {
        const bool is_selected = set.selected && *set.selected == e;
        os << to_string(e.kind) << ',' << static_cast<int>(e.dominant) << ','
           << format_double(e.allocation.beta_tilde) << ','
           << format_double(e.allocation.share1) << ','
           << to_string(e.stability) << ',' << (is_selected ? 1 : 0) << '\n';
    }
}

nlohmann::json trace_json(const ModelParams& params, const AdProfile& ads,
                          const IterationTrace& trace) {
    nlohmann::json j = trace;
    j["params"] = params;
    j["ads"] = ads;
    return j;
}

nlohmann::json equilibria_json(const EquilibriumSet& set) {
    nlohmann::json j{{"params", set.params},
                     {"ads", set.ads},
                     {"equilibria", set.equilibria}};
    j["selected"] =
        set.selected ? nlohmann::json(*set.selected) : nlohmann::json(nullptr);
    return j;
}

EquilibriumSet equilibria_from_json(const nlohmann::json& j) {
    EquilibriumSet set{j.at("params").get<ModelParams>(),
                       j.at("ads").get<AdProfile>(),
                       j.at("equilibria").get<std::vector<Equilibrium>>(),
                       std::nullopt};
    if (!j.at("selected").is_null())
        set.selected = j.at("selected").get<Equilibrium>();
    return set;
}

nlohmann::json game_solution_json(const GameSolution& sol) {
    nlohmann::json j{{"concept", to_string(sol.solution_concept)},
                     {"lambda", sol.params.lambda()},
                     {"qm", sol.params.qm()},
                     {"a1", sol.ads.a1()},
                     {"a2", sol.ads.a2()},
                     {"pi1", sol.profits.pi1},
                     {"pi2", sol.profits.pi2},
                     {"branch", to_string(sol.profits.branch)},
                     {"verification",
                      {{"p1_deviation_gap", sol.p1_deviation_gap},
                       {"p2_deviation_gap", sol.p2_deviation_gap},
                       {"deviation_free", sol.deviation_free}}}};
    if (sol.foc) j["foc_candidate"] = *sol.foc;
    return j;
}

GameSolution game_solution_from_json(const nlohmann::json& j) {
    GameSolution sol{
        parse_enum<GameConcept>(
            j.at("concept"),
            {{"nash", GameConcept::nash},
             {"stackelberg_leader1", GameConcept::stackelberg_leader1}}),
        ModelParams(j.at("lambda").get<double>(), j.value("qm", 1.0)),
        AdProfile(j.at("a1").get<double>(), j.at("a2").get<double>()),
        ProfitOutcome{j.at("pi1").get<double>(), j.at("pi2").get<double>(),
                      parse_enum<ProfitBranch>(
                          j.at("branch"),
                          {{"interior", ProfitBranch::interior},
                           {"p1_monopoly", ProfitBranch::p1_monopoly},
                           {"p2_monopoly", ProfitBranch::p2_monopoly}})},
        j.at("verification").at("p1_deviation_gap").get<double>(),
        j.at("verification").at("p2_deviation_gap").get<double>(),
        j.at("verification").at("deviation_free").get<bool>(),
        std::nullopt};
    if (j.contains("foc_candidate"))
        sol.foc = j.at("foc_candidate").get<FocRefutation>();
    return sol;
}

nlohmann::json montecarlo_json(const ModelParams& params, const AdProfile& ads,
                               const AgentPopulation& population,
                               double start_share,
                               const SimulationResult& result) {
    return nlohmann::json{{"params", params},
                          {"ads", ads},
                          {"n_agents", population.size()},
                          {"seed", population.seed},
                          {"start_share", start_share},
                          {"final_share1", result.final_share1},
                          {"empirical_cutoff", result.empirical_cutoff},
                          {"rounds", result.rounds},
                          {"converged", result.converged}};
}

} // namespace ugcduo
