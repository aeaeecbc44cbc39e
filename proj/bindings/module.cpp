#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "ugcduo/io.hpp"

namespace py = pybind11;
using namespace ugcduo;

namespace {

std::string repr_params(const ModelParams& p) {
    std::ostringstream os;
    os << "ModelParams(lambda=" << format_double(p.lambda())
       << ", qm=" << format_double(p.qm()) << ")";
    return os.str();
}

std::string repr_ads(const AdProfile& a) {
    std::ostringstream os;
    os << "AdProfile(a1=" << format_double(a.a1())
       << ", a2=" << format_double(a.a2()) << ")";
    return os.str();
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Two-platform market with user-contributed content quality: "
              "allocation equilibria, share dynamics, advertising games and "
              "finite-agent simulation";

    py::register_exception<degenerate_interval_error>(m, "DegenerateIntervalError",
                                                      PyExc_ValueError);
    py::register_exception<singular_share_error>(m, "SingularShareError",
                                                 PyExc_ValueError);
    py::register_exception<inconsistency_error>(m, "InconsistencyError",
                                                PyExc_RuntimeError);

    py::enum_<Dominance>(m, "Dominance")
        .value("split", Dominance::split)
        .value("platform1", Dominance::platform1)
        .value("platform2", Dominance::platform2);
    py::enum_<Platform>(m, "Platform")
        .value("platform1", Platform::platform1)
        .value("platform2", Platform::platform2);
    py::enum_<Stability>(m, "Stability")
        .value("stable", Stability::stable)
        .value("unstable", Stability::unstable);
    py::enum_<EquilibriumKind>(m, "EquilibriumKind")
        .value("interior", EquilibriumKind::interior)
        .value("boundary", EquilibriumKind::boundary);
    py::enum_<ProfitBranch>(m, "ProfitBranch")
        .value("interior", ProfitBranch::interior)
        .value("p1_monopoly", ProfitBranch::p1_monopoly)
        .value("p2_monopoly", ProfitBranch::p2_monopoly);
    py::enum_<GameConcept>(m, "GameConcept")
        .value("nash", GameConcept::nash)
        .value("stackelberg_leader1", GameConcept::stackelberg_leader1);

    py::class_<ModelParams>(m, "ModelParams")
        .def(py::init<double, double>(), py::arg("lambda_"), py::arg("qm") = 1.0)
        .def_property_readonly("lambda_", &ModelParams::lambda)
        .def_property_readonly("qm", &ModelParams::qm)
        .def("__eq__", [](const ModelParams& a, const ModelParams& b) { return a == b; })
        .def("__repr__", &repr_params);

    py::class_<AdProfile>(m, "AdProfile")
        .def(py::init<double, double>(), py::arg("a1"), py::arg("a2"))
        .def_property_readonly("a1", &AdProfile::a1)
        .def_property_readonly("a2", &AdProfile::a2)
        .def_property_readonly("gap", &AdProfile::gap)
        .def("__eq__", [](const AdProfile& a, const AdProfile& b) { return a == b; })
        .def("__repr__", &repr_ads);

    py::class_<UserType>(m, "UserType")
        .def(py::init([](double beta) { return UserType{beta}; }), py::arg("beta"))
        .def_readwrite("beta", &UserType::beta);

    py::class_<ThresholdAllocation>(m, "ThresholdAllocation")
        .def_static("from_share1", &ThresholdAllocation::from_share1,
                    py::arg("share1"))
        .def_readonly("beta_tilde", &ThresholdAllocation::beta_tilde)
        .def_readonly("dominant", &ThresholdAllocation::dominant)
        .def_readonly("share1", &ThresholdAllocation::share1)
        .def_property_readonly("share2", &ThresholdAllocation::share2)
        .def("consistent", &ThresholdAllocation::consistent);

    py::class_<IterationTrace>(m, "IterationTrace")
        .def_readonly("shares", &IterationTrace::shares)
        .def_readonly("converged", &IterationTrace::converged)
        .def_readonly("limit", &IterationTrace::limit)
        .def_readonly("steps", &IterationTrace::steps);

    py::class_<Equilibrium>(m, "Equilibrium")
        .def_readonly("kind", &Equilibrium::kind)
        .def_readonly("allocation", &Equilibrium::allocation)
        .def_readonly("stability", &Equilibrium::stability)
        .def_readonly("dominant", &Equilibrium::dominant);

    py::class_<EquilibriumSet>(m, "EquilibriumSet")
        .def_readonly("params", &EquilibriumSet::params)
        .def_readonly("ads", &EquilibriumSet::ads)
        .def_readonly("equilibria", &EquilibriumSet::equilibria)
        .def_readonly("selected", &EquilibriumSet::selected);

    py::class_<ProfitOutcome>(m, "ProfitOutcome")
        .def_readonly("pi1", &ProfitOutcome::pi1)
        .def_readonly("pi2", &ProfitOutcome::pi2)
        .def_readonly("branch", &ProfitOutcome::branch);

    py::class_<FocCandidate>(m, "FocCandidate")
        .def_readonly("a1", &FocCandidate::a1)
        .def_readonly("a2", &FocCandidate::a2)
        .def_readonly("c_star", &FocCandidate::c_star);

    py::class_<FocRefutation>(m, "FocRefutation")
        .def_readonly("candidate", &FocRefutation::candidate)
        .def_readonly("p2_monopoly_supremum", &FocRefutation::p2_monopoly_supremum)
        .def_readonly("p2_interior_profit", &FocRefutation::p2_interior_profit)
        .def_readonly("refuted", &FocRefutation::refuted);

    py::class_<GridSpec>(m, "GridSpec")
        .def(py::init([](double step, double a_max) {
                 return GridSpec{step, a_max};
             }),
             py::arg("step") = 1e-4, py::arg("a_max") = 1.0)
        .def_readwrite("step", &GridSpec::step)
        .def_readwrite("a_max", &GridSpec::a_max);

    py::class_<BestResponse>(m, "BestResponse")
        .def_readonly("level", &BestResponse::level)
        .def_readonly("value", &BestResponse::value)
        .def_readonly("supremum", &BestResponse::supremum)
        .def_readonly("sup_level", &BestResponse::sup_level)
        .def_readonly("attained", &BestResponse::attained);

    py::class_<GameSolution>(m, "GameSolution")
        .def_readonly("solution_concept", &GameSolution::solution_concept)
        .def_readonly("params", &GameSolution::params)
        .def_readonly("ads", &GameSolution::ads)
        .def_readonly("profits", &GameSolution::profits)
        .def_readonly("p1_deviation_gap", &GameSolution::p1_deviation_gap)
        .def_readonly("p2_deviation_gap", &GameSolution::p2_deviation_gap)
        .def_readonly("deviation_free", &GameSolution::deviation_free)
        .def_readonly("foc", &GameSolution::foc)
        .def("require_consistent", &GameSolution::require_consistent);

    py::class_<Agent>(m, "Agent")
        .def_readonly("beta", &Agent::beta)
        .def_readonly("quality", &Agent::quality);

    py::class_<AgentPopulation>(m, "AgentPopulation")
        .def_readonly("agents", &AgentPopulation::agents)
        .def_readonly("seed", &AgentPopulation::seed)
        .def("__len__", &AgentPopulation::size)
        .def("__eq__", [](const AgentPopulation& a, const AgentPopulation& b) {
            return a == b;
        });

    py::class_<RoundStats>(m, "RoundStats")
        .def_readonly("round", &RoundStats::round)
        .def_readonly("share1", &RoundStats::share1)
        .def_readonly("q1", &RoundStats::q1)
        .def_readonly("q2", &RoundStats::q2)
        .def_readonly("switches", &RoundStats::switches);

    py::class_<SimulationResult>(m, "SimulationResult")
        .def_readonly("final_share1", &SimulationResult::final_share1)
        .def_readonly("empirical_cutoff", &SimulationResult::empirical_cutoff)
        .def_readonly("rounds", &SimulationResult::rounds)
        .def_readonly("converged", &SimulationResult::converged)
        .def_readonly("trace", &SimulationResult::trace)
        .def_readonly("on_platform1", &SimulationResult::on_platform1)
        .def("__eq__", [](const SimulationResult& a, const SimulationResult& b) {
            return a == b;
        });

    py::class_<FigureColumns>(m, "FigureColumns")
        .def_readonly("beta", &FigureColumns::beta)
        .def_readonly("f_red", &FigureColumns::f_red)
        .def_readonly("f_blue", &FigureColumns::f_blue)
        .def_readonly("y_line", &FigureColumns::y_line)
        .def_readonly("y_red_dashed", &FigureColumns::y_red_dashed)
        .def_readonly("y_blue_dashed", &FigureColumns::y_blue_dashed);

    py::class_<UndercutRound>(m, "UndercutRound")
        .def_readonly("round", &UndercutRound::round)
        .def_readonly("a1", &UndercutRound::a1)
        .def_readonly("a2", &UndercutRound::a2)
        .def_readonly("pi1", &UndercutRound::pi1)
        .def_readonly("pi2", &UndercutRound::pi2);

    py::class_<UndercutTrace>(m, "UndercutTrace")
        .def_readonly("rounds", &UndercutTrace::rounds)
        .def_readonly("a1_final", &UndercutTrace::a1_final)
        .def_readonly("a2_final", &UndercutTrace::a2_final)
        .def_readonly("terminated", &UndercutTrace::terminated);

    m.def("quality_schedule", &quality_schedule, py::arg("params"), py::arg("beta"),
          "Mean contributed quality of type beta: qm - lambda * beta");
    m.def("interval_avg_quality", &interval_avg_quality, py::arg("params"),
          py::arg("lo"), py::arg("hi"),
          "Average quality over [lo, hi): qm - lambda * (lo + hi) / 2");
    m.def("user_utility", &user_utility, py::arg("params"), py::arg("beta"),
          py::arg("platform_quality"), py::arg("platform_share"),
          py::arg("ad_level"),
          "Q + beta * n - a; None quality marks an empty (dominated) platform");
    m.def("gamma_map", &gamma_map, py::arg("params"), py::arg("ads"),
          py::arg("expected_share1"),
          "Expected-share to realized-share map; raises on share 1/2");
    m.def("realized_allocation", &realized_allocation, py::arg("params"),
          py::arg("ads"), py::arg("expected"));
    m.def("iterate_to_fixed_point", &iterate_to_fixed_point, py::arg("params"),
          py::arg("ads"), py::arg("initial_share1"), py::arg("tol") = 1e-12,
          py::arg("max_steps") = 10000);
    m.def("cutoff_roots", &cutoff_roots, py::arg("c"),
          "Roots of (1 - 2b) b = c in (0, 1/2)");
    m.def("interior_cutoffs", &interior_cutoffs, py::arg("params"), py::arg("ads"),
          py::arg("dominant"));
    m.def("stability_derivative", &stability_derivative, py::arg("params"),
          py::arg("ads"), py::arg("cutoff"), py::arg("dominant"));
    m.def("classify_stability", &classify_stability, py::arg("params"),
          py::arg("ads"), py::arg("cutoff"), py::arg("dominant"));
    m.def("boundary_equilibria", &boundary_equilibria, py::arg("params"),
          py::arg("ads"));
    m.def("solve_equilibria", &solve_equilibria, py::arg("params"), py::arg("ads"),
          py::arg("focal") = Platform::platform1);
    m.def("profits", &profits, py::arg("params"), py::arg("ads"));
    m.def("interior_foc_candidate", &interior_foc_candidate, py::arg("params"));
    m.def("best_response", &best_response, py::arg("params"), py::arg("mover"),
          py::arg("opponent_ad"), py::arg("grid") = GridSpec{});
    m.def("nash_solve", &nash_solve, py::arg("params"), py::arg("grid") = GridSpec{});
    m.def("stackelberg_solve", &stackelberg_solve, py::arg("params"),
          py::arg("grid") = GridSpec{});
    m.def("sample_population", &sample_population, py::arg("params"), py::arg("n"),
          py::arg("seed"), py::arg("noise_halfwidth") = 0.0);
    m.def("run_dynamics", &run_dynamics, py::arg("population"), py::arg("params"),
          py::arg("ads"), py::arg("initial_share1"), py::arg("max_rounds") = 1000);
    m.def("figure_curves", &figure_curves, py::arg("lambda_"), py::arg("a1"),
          py::arg("a2"), py::arg("step") = 1e-3,
          "Plot columns; lambda is unrestricted here so the breakdown beyond "
          "1/4 stays drawable");
    m.def("undercut_demo", &undercut_demo, py::arg("params"), py::arg("start"),
          py::arg("grid") = GridSpec{}, py::arg("max_moves") = 0);

    m.def("equilibria_to_json",
          [](const EquilibriumSet& set) { return equilibria_json(set).dump(2); });
    m.def("game_solution_to_json",
          [](const GameSolution& sol) { return game_solution_json(sol).dump(2); });
    m.def("trace_to_json", [](const ModelParams& p, const AdProfile& a,
                              const IterationTrace& t) {
        return trace_json(p, a, t).dump(2);
    });
    m.def("montecarlo_to_json",
          [](const ModelParams& p, const AdProfile& a, const AgentPopulation& pop,
             double start, const SimulationResult& r) {
              return montecarlo_json(p, a, pop, start, r).dump(2);
          });

#ifdef UGCDUO_VERSION
    m.attr("__version__") = UGCDUO_VERSION;
#else
    m.attr("__version__") = "dev";
#endif
}
