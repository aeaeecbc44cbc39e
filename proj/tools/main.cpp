// Command-line front end: equilibrium enumeration, share dynamics, the
// advertising games, parameter sweeps, agent simulation and plot data.
#include <CLI11.hpp>

#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <algorithm>
#include <thread>
#include <vector>

#include "ugcduo/io.hpp"

using namespace ugcduo;
using nlohmann::json;

namespace {

struct CommonOpts {
    double lambda = 0.1;
    double qm = 1.0;
    double a1 = 0.0;
    double a2 = 0.0;
    int focal = 1;
    std::uint64_t seed = 0;
    long n_agents = 100000;
    double start_share = 0.99;
    double noise = 0.0;
    double tol = 1e-12;
    long max_steps = 10000;
    double grid_step = 1e-4;
    std::string format;
    std::string out;
    std::string config; // consumed by the argv preprocessing below
};

CLI::Option* take_last(CLI::Option* opt) {
    return opt->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
}

void add_common(CLI::App* cmd, CommonOpts& o, const char* default_format) {
    o.format = default_format;
    take_last(cmd->add_option("--lambda", o.lambda,
                              "Quality-composition sensitivity, in (0, 0.25)"));
    take_last(cmd->add_option("--qm", o.qm, "Content quality contributed by type 0"));
    take_last(cmd->add_option("--a1", o.a1, "Advertising intensity of platform 1"));
    take_last(cmd->add_option("--a2", o.a2, "Advertising intensity of platform 2"));
    take_last(cmd->add_option("--focal", o.focal, "Focal platform (1 or 2)")
                  ->check(CLI::IsMember({1, 2})));
    take_last(cmd->add_option("--seed", o.seed, "Seed for the agent sampler"));
    take_last(cmd->add_option("--n-agents", o.n_agents, "Simulated population size"));
    take_last(cmd->add_option("--start-share", o.start_share,
                              "Initial share of platform 1"));
    take_last(cmd->add_option("--noise", o.noise, "Quality noise halfwidth (agents)"));
    take_last(cmd->add_option("--tol", o.tol, "Fixed-point convergence tolerance"));
    take_last(cmd->add_option("--max-steps", o.max_steps, "Iteration / round limit"));
    take_last(cmd->add_option("--grid-step", o.grid_step,
                              "Grid resolution for searches"));
    take_last(cmd->add_option("--format", o.format, "Output format")
                  ->check(CLI::IsMember({"csv", "json"})));
    take_last(cmd->add_option("--out", o.out, "Output path (default: stdout)"));
    take_last(cmd->add_option("--config", o.config,
                              "Flat key=value config file (flags override it)"));
}

std::string trim(const std::string& s) {
    const auto l = s.find_first_not_of(" \t\r");
    if (l == std::string::npos) return "";
    const auto r = s.find_last_not_of(" \t\r");
    return s.substr(l, r - l + 1);
}

// Flat key=value lines -> "--key value" argument pairs.
std::vector<std::string> config_file_args(const std::string& path) {
    std::ifstream file(path);
    if (!file) throw std::runtime_error("cannot read config file: " + path);
    std::vector<std::string> args;
    std::string line;
    while (std::getline(file, line)) {
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line is not key=value: " + line);
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || key == "config")
            throw std::invalid_argument("bad config key in line: " + line);
        args.push_back("--" + key);
        args.push_back(value);
    }
    return args;
}

// Splice config-file values in right after the subcommand so explicit flags,
// which come later, take precedence.
std::vector<std::string> preprocess_args(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    std::string config_path;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size())
            config_path = args[i + 1];
        else if (args[i].rfind("--config=", 0) == 0)
            config_path = args[i].substr(9);
    }
    if (!config_path.empty()) {
        std::size_t subcmd = 0;
        while (subcmd < args.size() && !args[subcmd].empty() &&
               args[subcmd][0] == '-')
            ++subcmd;
        const auto injected = config_file_args(config_path);
        args.insert(args.begin() + static_cast<std::ptrdiff_t>(
                                       std::min(subcmd + 1, args.size())),
                    injected.begin(), injected.end());
    }
    return args;
}

ModelParams params_of(const CommonOpts& o) { return ModelParams(o.lambda, o.qm); }
AdProfile ads_of(const CommonOpts& o) { return AdProfile(o.a1, o.a2); }
Platform focal_of(const CommonOpts& o) {
    return o.focal == 2 ? Platform::platform2 : Platform::platform1;
}

void emit(const CommonOpts& o, const std::string& text) {
    if (o.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(o.out, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open output path: " + o.out);
    file << text;
}

std::string json_text(const json& j) { return j.dump(2) + "\n"; }

struct SweepOpts {
    std::string axis;
    double min = 0.0;
    double max = 0.0;
    long steps = 0;
};

struct SweepRow {
    long index;
    double lambda;
    double a1;
    double a2;
    std::optional<Equilibrium> selected;
    ProfitOutcome prof;
};

SweepRow sweep_cell(const CommonOpts& o, const SweepOpts& s, long index) {
    const double t = s.steps == 1 ? 0.0
                                  : static_cast<double>(index) /
                                        static_cast<double>(s.steps - 1);
    const double value = s.min + (s.max - s.min) * t;
    double lambda = o.lambda, a1 = o.a1, a2 = o.a2;
    if (s.axis == "lambda") lambda = value;
    if (s.axis == "a1") a1 = value;
    if (s.axis == "a2") a2 = value;
    const ModelParams params(lambda, o.qm);
    const AdProfile ads(a1, a2);
    const auto set = solve_equilibria(params, ads, focal_of(o));
    return {index, lambda, a1, a2, set.selected, profits(params, ads)};
}

void run_sweep(const CommonOpts& o, const SweepOpts& s) {
    if (s.axis != "lambda" && s.axis != "a1" && s.axis != "a2")
        throw std::invalid_argument("sweep axis must be lambda, a1 or a2");
    if (s.steps < 2) throw std::invalid_argument("sweep needs at least 2 steps");

    // cells are independent; batch them across workers and emit in index order
    std::vector<SweepRow> rows(static_cast<std::size_t>(s.steps),
                               SweepRow{0, 0, 0, 0, std::nullopt, {}});
    const unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    const long chunk = (s.steps + static_cast<long>(workers) - 1) /
                       static_cast<long>(workers);
    std::vector<std::future<void>> futures;
    for (long begin = 0; begin < s.steps; begin += chunk) {
        const long end = std::min(s.steps, begin + chunk);
        futures.push_back(std::async(std::launch::async, [&, begin, end] {
            for (long i = begin; i < end; ++i)
                rows[static_cast<std::size_t>(i)] = sweep_cell(o, s, i);
        }));
    }
    for (auto& f : futures) f.get();

    if (o.format == "json") {
        json out = json::array();
        for (const SweepRow& r : rows) {
            json row{{"index", r.index}, {"lambda", r.lambda},
                     {"a1", r.a1},       {"a2", r.a2},
                     {"pi1", r.prof.pi1}, {"pi2", r.prof.pi2},
                     {"branch", to_string(r.prof.branch)}};
            row["selected"] =
                r.selected ? json(*r.selected) : json(nullptr);
            out.push_back(std::move(row));
        }
        emit(o, json_text(out));
        return;
    }
    std::ostringstream os;
    os << "index,lambda,a1,a2,share1,beta_tilde,kind,dominant,stability,pi1,pi2,branch\n";
    for (const SweepRow& r : rows) {
        os << r.index << ',' << format_double(r.lambda) << ','
           << format_double(r.a1) << ',' << format_double(r.a2) << ',';
        if (r.selected) {
            os << format_double(r.selected->allocation.share1) << ','
               << format_double(r.selected->allocation.beta_tilde) << ','
               << to_string(r.selected->kind) << ','
               << static_cast<int>(r.selected->dominant) << ','
               << to_string(r.selected->stability) << ',';
        } else {
            os << ",,,,,";
        }
        os << format_double(r.prof.pi1) << ',' << format_double(r.prof.pi2)
           << ',' << to_string(r.prof.branch) << '\n';
    }
    emit(o, os.str());
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Two-platform market with user-contributed quality: "
                 "equilibria, dynamics and advertising games"};
    app.require_subcommand(1);
    int exit_code = 0;

    CommonOpts eq_opts;
    auto* cmd_eq = app.add_subcommand(
        "equilibria", "Enumerate and classify all equilibria, apply the focal rule");
    add_common(cmd_eq, eq_opts, "json");
    cmd_eq->callback([&] {
        const auto set =
            solve_equilibria(params_of(eq_opts), ads_of(eq_opts), focal_of(eq_opts));
        if (eq_opts.format == "csv") {
            std::ostringstream os;
            write_equilibria_csv(os, set);
            emit(eq_opts, os.str());
        } else {
            emit(eq_opts, json_text(equilibria_json(set)));
        }
    });

    CommonOpts dyn_opts;
    auto* cmd_dyn = app.add_subcommand(
        "dynamics", "Iterate the expected-to-realized share map to a fixed point");
    add_common(cmd_dyn, dyn_opts, "csv");
    cmd_dyn->callback([&] {
        const auto params = params_of(dyn_opts);
        const auto ads = ads_of(dyn_opts);
        const auto trace = iterate_to_fixed_point(
            params, ads, dyn_opts.start_share, dyn_opts.tol,
            static_cast<int>(dyn_opts.max_steps));
        if (dyn_opts.format == "json") {
            emit(dyn_opts, json_text(trace_json(params, ads, trace)));
        } else {
            std::ostringstream os;
            write_dynamics_csv(os, trace);
            emit(dyn_opts, os.str());
        }
    });

    CommonOpts br_opts;
    int br_mover = 2;
    auto* cmd_br = app.add_subcommand(
        "best-response", "Maximize one platform's profit against a fixed rival level");
    add_common(cmd_br, br_opts, "json");
    take_last(cmd_br->add_option("--mover", br_mover, "Optimizing platform (1 or 2)")
                  ->check(CLI::IsMember({1, 2})));
    cmd_br->callback([&] {
        const Platform mover =
            br_mover == 1 ? Platform::platform1 : Platform::platform2;
        const double opponent = br_mover == 1 ? br_opts.a2 : br_opts.a1;
        const auto br =
            best_response(params_of(br_opts), mover, opponent,
                          GridSpec{br_opts.grid_step, 1.0});
        if (br_opts.format == "csv") {
            std::ostringstream os;
            os << "mover,opponent_ad,level,value,supremum,sup_level,attained\n"
               << br_mover << ',' << format_double(opponent) << ','
               << format_double(br.level) << ',' << format_double(br.value)
               << ',' << format_double(br.supremum) << ','
               << format_double(br.sup_level) << ',' << (br.attained ? 1 : 0)
               << '\n';
            emit(br_opts, os.str());
        } else {
            json j = br;
            j["mover"] = br_mover;
            j["opponent_ad"] = opponent;
            emit(br_opts, json_text(j));
        }
    });

    CommonOpts nash_opts;
    auto* cmd_nash = app.add_subcommand(
        "nash-check",
        "Report the closed-form simultaneous solution and audit deviations");
    add_common(cmd_nash, nash_opts, "json");
    cmd_nash->callback([&] {
        const auto sol = nash_solve(params_of(nash_opts),
                                    GridSpec{nash_opts.grid_step, 1.0});
        emit(nash_opts, json_text(game_solution_json(sol)));
        if (!sol.deviation_free) {
            std::cerr << json{{"error",
                               {{"kind", "internal-inconsistency"},
                                {"message",
                                 "closed-form solution fails its deviation audit"},
                                {"p1_deviation_gap", sol.p1_deviation_gap},
                                {"p2_deviation_gap", sol.p2_deviation_gap}}}}
                             .dump()
                      << '\n';
            exit_code = 3;
        }
    });

    CommonOpts stack_opts;
    auto* cmd_stack = app.add_subcommand(
        "stackelberg", "Solve the leader-commitment game (platform 1 moves first)");
    add_common(cmd_stack, stack_opts, "json");
    cmd_stack->callback([&] {
        const auto sol = stackelberg_solve(params_of(stack_opts),
                                           GridSpec{stack_opts.grid_step, 1.0});
        emit(stack_opts, json_text(game_solution_json(sol)));
    });

    CommonOpts sweep_opts;
    SweepOpts sweep_spec;
    auto* cmd_sweep = app.add_subcommand(
        "sweep", "Solve the model across a one-dimensional parameter grid");
    add_common(cmd_sweep, sweep_opts, "csv");
    take_last(cmd_sweep->add_option("--sweep-axis", sweep_spec.axis, "lambda|a1|a2")
                  ->required());
    take_last(cmd_sweep->add_option("--sweep-min", sweep_spec.min, "Axis start")
                  ->required());
    take_last(cmd_sweep->add_option("--sweep-max", sweep_spec.max, "Axis end")
                  ->required());
    take_last(cmd_sweep->add_option("--sweep-steps", sweep_spec.steps,
                                    "Number of cells")
                  ->required());
    cmd_sweep->callback([&] { run_sweep(sweep_opts, sweep_spec); });

    CommonOpts mc_opts;
    auto* cmd_mc = app.add_subcommand(
        "montecarlo", "Finite-agent re-allocation dynamics on a sampled population");
    add_common(cmd_mc, mc_opts, "csv");
    cmd_mc->callback([&] {
        const auto params = params_of(mc_opts);
        const auto ads = ads_of(mc_opts);
        if (mc_opts.n_agents < 2)
            throw std::invalid_argument("n-agents must be at least 2");
        const auto population = sample_population(
            params, static_cast<std::size_t>(mc_opts.n_agents), mc_opts.seed,
            mc_opts.noise);
        const auto result =
            run_dynamics(population, params, ads, mc_opts.start_share,
                         static_cast<int>(mc_opts.max_steps));
        if (mc_opts.format == "json") {
            emit(mc_opts, json_text(montecarlo_json(params, ads, population,
                                                    mc_opts.start_share, result)));
        } else {
            std::ostringstream os;
            write_montecarlo_csv(os, result);
            emit(mc_opts, os.str());
        }
    });

    CommonOpts fig_opts;
    auto* cmd_fig = app.add_subcommand(
        "figure", "Emit the cutoff-condition curves (parabolas and ad-gap lines)");
    add_common(cmd_fig, fig_opts, "csv");
    cmd_fig->callback([&] {
        // lambda is taken raw here: the picture is precisely how one sees the
        // lambda >= 1/4 breakdown, so it must be drawable there
        const auto fig = figure_curves(fig_opts.lambda, fig_opts.a1, fig_opts.a2,
                                       fig_opts.grid_step);
        if (fig_opts.format == "json") {
            emit(fig_opts, json_text(json{{"beta_tilde", fig.beta},
                                          {"F_red", fig.f_red},
                                          {"F_blue", fig.f_blue},
                                          {"y_line", fig.y_line},
                                          {"y_red_dashed", fig.y_red_dashed},
                                          {"y_blue_dashed", fig.y_blue_dashed}}));
        } else {
            std::ostringstream os;
            write_figure_csv(os, fig);
            emit(fig_opts, os.str());
        }
    });

    CommonOpts under_opts;
    auto* cmd_under = app.add_subcommand(
        "undercut-demo", "Scripted alternating undercutting race between the platforms");
    add_common(cmd_under, under_opts, "csv");
    cmd_under->callback([&] {
        // the race can need ~2 a_max/step moves; derive the bound unless the
        // user capped it explicitly
        const int max_moves = cmd_under->count("--max-steps") > 0
                                  ? static_cast<int>(under_opts.max_steps)
                                  : 0;
        const auto trace = undercut_demo(
            params_of(under_opts), ads_of(under_opts),
            GridSpec{under_opts.grid_step, 1.0}, max_moves);
        if (under_opts.format == "json") {
            json rounds = json::array();
            for (const auto& r : trace.rounds)
                rounds.push_back(json{{"round", r.round},
                                      {"a1", r.a1},
                                      {"a2", r.a2},
                                      {"pi1", r.pi1},
                                      {"pi2", r.pi2}});
            emit(under_opts, json_text(json{{"rounds", rounds},
                                            {"a1_final", trace.a1_final},
                                            {"a2_final", trace.a2_final},
                                            {"terminated", trace.terminated}}));
        } else {
            std::ostringstream os;
            write_undercut_csv(os, trace);
            emit(under_opts, os.str());
        }
    });

    try {
        std::vector<std::string> args = preprocess_args(argc, argv);
        std::reverse(args.begin(), args.end()); // CLI11 consumes back to front
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help and friends
        std::cerr << json{{"error", {{"kind", "validation"},
                                     {"message", e.what()}}}}
                         .dump()
                  << '\n';
        return 2;
    } catch (const singular_orbit_error& e) {
        std::cerr << json{{"error", {{"kind", "validation"},
                                     {"message", e.what()},
                                     {"step", e.step()}}}}
                         .dump()
                  << '\n';
        return 2;
    } catch (const inconsistency_error& e) {
        std::cerr << json{{"error", {{"kind", "internal-inconsistency"},
                                     {"message", e.what()}}}}
                         .dump()
                  << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << json{{"error", {{"kind", "validation"},
                                     {"message", e.what()}}}}
                         .dump()
                  << '\n';
        return 2;
    }
    return exit_code;
}
