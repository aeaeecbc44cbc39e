// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Every tolerance is pinned in code next to its check.
#include <cmath>
#include <cstdio>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ugcduo/io.hpp"
#include "ugcduo/rng.hpp"

using namespace ugcduo;
using nlohmann::json;

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

// ---------------------------------------------------------------- criterion 1
// Closed-form simultaneous solution (1/8 - lambda/2, 0) at lambda in
// {0.05, 0.10, 0.20}; grid deviation checks (step 1e-4, box [0,1]) must find
// no unilateral improvement beyond 1e-9.
std::string criterion_nash_values() {
    std::ostringstream fail;
    for (double lambda : {0.05, 0.10, 0.20}) {
        const ModelParams params(lambda);
        const auto sol = nash_solve(params, GridSpec{1e-4, 1.0});
        if (sol.ads.a1() != 0.125 - lambda / 2.0 || sol.ads.a2() != 0.0)
            fail << " closed form wrong at lambda=" << fmt(lambda) << ";";
        if (sol.p1_deviation_gap < -1e-9 || sol.p2_deviation_gap < -1e-9)
            fail << " profitable deviation at lambda=" << fmt(lambda)
                 << " (p1_gap=" << fmt(sol.p1_deviation_gap)
                 << ", p2_gap=" << fmt(sol.p2_deviation_gap) << ");";
    }
    return fail.str();
}

// ---------------------------------------------------------------- criterion 2
// Interior FOC candidate at lambda = 0.1 and its refutation: the follower's
// market-capture supremum strictly beats its interior profit.
std::string criterion_candidate_refutation() {
    const ModelParams params(0.1);
    const auto cand = interior_foc_candidate(params);
    std::ostringstream fail;

    const long double r = sqrtl(9.0L - 20.0L * 0.1L);
    const double a1_ref = static_cast<double>((11.0L * r - 2.0L - 17.0L) / 100.0L);
    const double a2_ref = static_cast<double>((9.0L * r + 2.0L - 23.0L) / 100.0L);
    const double c_ref = static_cast<double>((r - 2.0L) / 5.0L);
    if (std::abs(cand.a1 - a1_ref) > 1e-9 || std::abs(cand.a2 - a2_ref) > 1e-9 ||
        std::abs(cand.c_star - c_ref) > 1e-9)
        fail << " candidate differs from the closed form;";
    if (std::abs(cand.a1 - 0.1010326) > 1e-7 ||
        std::abs(cand.a2 - 0.0281176) > 1e-7)
        fail << " candidate values off (" << fmt(cand.a1) << ", " << fmt(cand.a2)
             << ");";
    if (std::abs(cand.a1 + cand.a2 - cand.c_star) > 1e-12)
        fail << " a1+a2 != c*;";
    const double gap_identity =
        (1.0 - cand.c_star * cand.c_star) / 8.0 - 0.05;
    if (std::abs((cand.a1 - cand.a2) - gap_identity) > 1e-12)
        fail << " gap identity residual too large;";

    const auto sol = nash_solve(params);
    if (!sol.foc || !sol.foc->refuted) fail << " refutation flag missing;";
    if (sol.foc) {
        if (std::abs(sol.foc->p2_monopoly_supremum - 0.0260326) > 1e-7)
            fail << " capture supremum " << fmt(sol.foc->p2_monopoly_supremum)
                 << " off;";
        if (!(sol.foc->p2_monopoly_supremum > sol.foc->p2_interior_profit))
            fail << " supremum does not beat the interior profit;";
    }
    return fail.str();
}

// ---------------------------------------------------------------- criterion 3
// The commitment solution equals the simultaneous one for 24 lambda values on
// [0.01, 0.24] (exact closed forms), and a grid oracle over the leader's
// payoff against the scripted follower agrees within one grid step.
std::string criterion_stackelberg_coincidence() {
    std::ostringstream fail;
    int equality_failures = 0;
    std::vector<double> oracle_failures;
    for (int i = 0; i < 24; ++i) {
        const double lambda = 0.01 + i * (0.24 - 0.01) / 23.0;
        const ModelParams params(lambda);
        const auto nash = nash_solve(params);
        const auto stack = stackelberg_solve(params);
        if (nash.ads.a1() != stack.ads.a1() || nash.ads.a2() != stack.ads.a2() ||
            nash.profits.pi1 != stack.profits.pi1)
            ++equality_failures;

        const double step = 1e-4;
        double best_level = 0.0, best_value = 0.0;
        for (long k = 0; k <= 10000; ++k) {
            const double a1 = k * step;
            const double value = a1 - 0.125 + 0.5 * lambda > 0.0
                                     ? 0.0
                                     : profits(params, AdProfile(a1, 0.0)).pi1;
            if (value > best_value) {
                best_value = value;
                best_level = a1;
            }
        }
        if (std::abs(best_level - (0.125 - 0.5 * lambda)) > step + 1e-12)
            oracle_failures.push_back(lambda);
    }
    if (equality_failures > 0)
        fail << " closed forms differ for " << equality_failures << " lambdas;";
    if (!oracle_failures.empty()) {
        fail << " grid-oracle argmax != 1/8-lambda/2 for "
             << oracle_failures.size() << "/24 lambdas (leader's in-branch "
             << "optimum lies below the seam), e.g. lambda="
             << fmt(oracle_failures.front()) << ";";
    }
    return fail.str();
}

// ---------------------------------------------------------------- criterion 4
// 500 random admissible (lambda, a1, a2); from 20 random starts each the
// iteration may settle only on a stable interior share or a boundary, and
// converged limits match the quadratic closed forms within 1e-9.
std::string criterion_iteration_oracle() {
    std::mt19937_64 rng(20240517);
    std::ostringstream fail;
    int bad = 0;
    for (int i = 0; i < 500; ++i) {
        const double lambda = 0.01 + 0.23 * uniform01(rng);
        const double c = 1e-3 + (0.124 - 1e-3) * uniform01(rng);
        const double gap = c - 0.5 * lambda;
        const ModelParams params(lambda);
        const AdProfile ads =
            gap >= 0.0 ? AdProfile(gap, 0.0) : AdProfile(0.0, -gap);

        std::vector<double> targets{0.0, 1.0};
        const double u = std::sqrt(1.0 - 8.0 * c);
        targets.push_back(1.0 - 2.0 * c / (1.0 + u)); // dominant-1 stable share
        const double c2 = lambda - c; // dominance-2 constant at this gap
        if (c2 > 0.0 && c2 <= 0.125)
            targets.push_back(2.0 * c2 / (1.0 + std::sqrt(1.0 - 8.0 * c2)));

        for (int s = 0; s < 20; ++s) {
            double start = uniform01(rng);
            if (start == 0.5 || start == 0.0) start = 0.25;
            IterationTrace trace;
            try {
                trace = iterate_to_fixed_point(params, ads, start);
            } catch (const singular_orbit_error&) {
                continue; // measure-zero orbit through 1/2
            }
            if (!trace.converged) {
                ++bad;
                continue;
            }
            bool matched = false;
            for (double t : targets)
                matched = matched || std::abs(*trace.limit - t) <= 1e-9;
            if (!matched) ++bad;
        }
    }
    if (bad > 0) fail << " " << bad << "/10000 orbits missed every closed form;";
    return fail.str();
}

// ---------------------------------------------------------------- criterion 5
// Derivative magnitudes at the two roots: < 1 at the smaller root, > 1 at the
// larger, with the lambda=0.1 even-ads instance matching the closed forms
// (1-u)/(1+u) and (1+u)/(1-u), u = sqrt(0.6), within 1e-5.
std::string criterion_stability_derivatives() {
    std::ostringstream fail;
    const ModelParams params(0.1);
    const AdProfile even(0.0, 0.0);
    const auto roots = interior_cutoffs(params, even, Platform::platform1);
    if (roots.size() != 2) return " expected two roots;";
    const double d1 = stability_derivative(params, even, roots[0], Platform::platform1);
    const double d2 = stability_derivative(params, even, roots[1], Platform::platform1);
    if (std::abs(d1 - 0.127017) > 1e-5)
        fail << " |f'| at the small root is " << fmt(d1) << ";";
    if (std::abs(d2 - 7.872983346207417) > 1e-5)
        fail << " |f'| at the large root is " << fmt(d2) << ";";

    std::mt19937_64 rng(99);
    for (int i = 0; i < 300; ++i) {
        const double c = 1e-4 + (0.1249 - 1e-4) * uniform01(rng);
        const auto r = cutoff_roots(c);
        if (r.size() != 2) continue;
        const double f1 = 2.0 * c / ((1.0 - 2.0 * r[0]) * (1.0 - 2.0 * r[0]));
        const double f2 = 2.0 * c / ((1.0 - 2.0 * r[1]) * (1.0 - 2.0 * r[1]));
        if (!(f1 < 1.0 && 1.0 < f2)) {
            fail << " ordering violated at c=" << fmt(c) << ";";
            break;
        }
    }
    return fail.str();
}

// ---------------------------------------------------------------- criterion 6
// Scanning the ad gap at 1e-4 resolution reproduces the existence windows to
// one grid step; both dominance orientations coexist at even ads for
// lambda = 0.24, and the coexistence window collapses like 1/4 - lambda.
std::string criterion_existence_windows() {
    std::ostringstream fail;
    const double step = 1e-4;
    for (double lambda : {0.05, 0.10, 0.20, 0.24}) {
        const ModelParams params(lambda);
        double lo1 = 1e9, hi1 = -1e9, lo2 = 1e9, hi2 = -1e9;
        double both_lo = 1e9, both_hi = -1e9;
        for (long k = -2000; k <= 2000; ++k) {
            const double gap = k * step;
            const AdProfile ads =
                gap >= 0.0 ? AdProfile(gap, 0.0) : AdProfile(0.0, -gap);
            const bool e1 = !interior_cutoffs(params, ads, Platform::platform1).empty();
            const bool e2 = !interior_cutoffs(params, ads, Platform::platform2).empty();
            if (e1) { lo1 = std::min(lo1, gap); hi1 = std::max(hi1, gap); }
            if (e2) { lo2 = std::min(lo2, gap); hi2 = std::max(hi2, gap); }
            if (e1 && e2) { both_lo = std::min(both_lo, gap); both_hi = std::max(both_hi, gap); }
        }
        const double tol = step + 1e-12;
        if (std::abs(lo1 - (-0.5 * lambda)) > tol ||
            std::abs(hi1 - (0.125 - 0.5 * lambda)) > tol)
            fail << " dominant-1 window off at lambda=" << fmt(lambda) << ";";
        if (std::abs(lo2 - (-0.125 + 0.5 * lambda)) > tol ||
            std::abs(hi2 - 0.5 * lambda) > tol)
            fail << " dominant-2 window off at lambda=" << fmt(lambda) << ";";
        if (lambda > 0.125 &&
            std::abs((both_hi - both_lo) - (0.25 - lambda)) > 2.0 * step)
            fail << " coexistence width off at lambda=" << fmt(lambda) << ";";
    }

    const ModelParams near_bound(0.24);
    const auto set = solve_equilibria(near_bound, AdProfile(0.0, 0.0));
    int stable_orientations = 0;
    for (const auto& e : set.equilibria)
        if (e.kind == EquilibriumKind::interior && e.stability == Stability::stable)
            ++stable_orientations;
    if (stable_orientations != 2)
        fail << " expected coexisting stable interiors at lambda=0.24;";
    return fail.str();
}

// ---------------------------------------------------------------- criterion 7
// Finite-agent validation: N = 1e5, lambda = 0.1, even ads, start 0.99, ten
// seeds; mean share error < 0.01 and a single-step threshold in every run.
std::string criterion_montecarlo() {
    const ModelParams params(0.1);
    const AdProfile ads(0.0, 0.0);
    const double stable_share = 1.0 - 2.0 * 0.05 / (1.0 + std::sqrt(0.6));
    double total_err = 0.0;
    std::ostringstream fail;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const auto pop = sample_population(params, 100000, seed);
        const auto result = run_dynamics(pop, params, ads, 0.99);
        if (!result.converged) {
            fail << " seed " << seed << " did not converge;";
            continue;
        }
        total_err += std::abs(result.final_share1 - stable_share);

        std::vector<std::size_t> order(pop.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return pop.agents[a].beta < pop.agents[b].beta;
        });
        int flips = 0;
        for (std::size_t k = 1; k < order.size(); ++k)
            flips += result.on_platform1[order[k]] != result.on_platform1[order[k - 1]];
        if (flips > 1) fail << " seed " << seed << " has " << flips << " flips;";
    }
    const double mean_err = total_err / 10.0;
    if (!(mean_err < 0.01))
        fail << " mean share error " << fmt(mean_err) << " >= 0.01;";
    return fail.str();
}

// ---------------------------------------------------------------- criterion 8
// Figure data: intersections extracted from the emitted curves match the
// cutoff closed forms within 1e-9, and the dashed-line gap equals lambda
// exactly; covers the lambda = 0.10 and lambda = 0.25 configurations.
std::string criterion_figure_data() {
    std::ostringstream fail;

    const auto intersections = [](const FigureColumns& fig, bool red) {
        std::vector<double> found;
        const auto value = [&](std::size_t i) {
            return red ? fig.f_red[i] - fig.y_red_dashed[i]
                       : fig.f_blue[i] - fig.y_blue_dashed[i];
        };
        for (std::size_t i = 1; i < fig.beta.size(); ++i) {
            if (value(i - 1) == 0.0) found.push_back(fig.beta[i - 1]);
            if (value(i - 1) * value(i) < 0.0) {
                // bisect the underlying continuous functions
                double lo = fig.beta[i - 1], hi = fig.beta[i];
                const double c = red ? fig.y_red_dashed[i] : -fig.y_blue_dashed[i];
                const auto g = [&](double b) { return (1.0 - 2.0 * b) * b - c; };
                for (int it = 0; it < 200; ++it) {
                    const double mid = 0.5 * (lo + hi);
                    (g(lo) * g(mid) <= 0.0 ? hi : lo) = mid;
                }
                found.push_back(0.5 * (lo + hi));
            }
        }
        return found;
    };

    {
        const auto fig = figure_curves(0.1, 0.0, 0.0, 1e-3);
        const ModelParams params(0.1);
        const auto expected =
            interior_cutoffs(params, AdProfile(0.0, 0.0), Platform::platform1);
        const auto red = intersections(fig, true);
        const auto blue = intersections(fig, false);
        if (red.size() != 2 || blue.size() != 2) {
            fail << " expected two intersections per parabola at lambda=0.1;";
        } else {
            for (std::size_t i = 0; i < 2; ++i) {
                if (std::abs(red[i] - expected[i]) > 1e-9)
                    fail << " red intersection " << fmt(red[i]) << " vs "
                         << fmt(expected[i]) << ";";
                if (std::abs(blue[i] - expected[i]) > 1e-9)
                    fail << " blue intersection off;";
            }
        }
        for (std::size_t i = 0; i < fig.beta.size(); ++i)
            if (fig.y_red_dashed[i] - fig.y_blue_dashed[i] != 0.1) {
                fail << " dashed gap != lambda at lambda=0.1;";
                break;
            }
    }

    {
        const auto fig = figure_curves(0.25, 0.0, 0.0, 1e-3);
        // tangency configuration: the line touches the parabola at its vertex
        const auto roots = cutoff_roots(0.0 + 0.125);
        if (roots.size() != 1 || roots[0] != 0.25)
            fail << " vertex root wrong at lambda=0.25;";
        double best = -1e9, best_beta = 0.0;
        for (std::size_t i = 0; i < fig.beta.size(); ++i) {
            const double v = fig.f_red[i] - fig.y_red_dashed[i];
            if (v > best) { best = v; best_beta = fig.beta[i]; }
        }
        if (!(best <= 1e-12) || std::abs(best) > 1e-9 ||
            std::abs(best_beta - 0.25) > 1e-3)
            fail << " tangency at the vertex violated (max gap " << fmt(best)
                 << " at " << fmt(best_beta) << ");";
        for (std::size_t i = 0; i < fig.beta.size(); ++i)
            if (fig.y_red_dashed[i] - fig.y_blue_dashed[i] != 0.25) {
                fail << " dashed gap != lambda at lambda=0.25;";
                break;
            }
        // the parabola peaks at 1/8
        double fmax = 0.0;
        for (double v : fig.f_red) fmax = std::max(fmax, v);
        if (std::abs(fmax - 0.125) > 1e-6) fail << " parabola peak off;";
    }
    return fail.str();
}

// ---------------------------------------------------------------- criterion 9
// The undercutting script terminates at (1/8 - lambda/2, 0) within one grid
// step from five random starting profiles, for lambda in {0.1, 0.2}.
std::string criterion_undercut_demo() {
    std::mt19937_64 rng(4242);
    std::ostringstream fail;
    for (double lambda : {0.1, 0.2}) {
        const ModelParams params(lambda);
        for (int s = 0; s < 5; ++s) {
            const AdProfile start(uniform01(rng), uniform01(rng));
            const auto trace = undercut_demo(params, start, GridSpec{1e-4, 1.0});
            if (!trace.terminated) {
                fail << " run did not terminate at lambda=" << fmt(lambda) << ";";
                continue;
            }
            if (std::abs(trace.a1_final - (0.125 - 0.5 * lambda)) > 1e-4 + 1e-12 ||
                trace.a2_final != 0.0)
                fail << " terminal (" << fmt(trace.a1_final) << ", "
                     << fmt(trace.a2_final) << ") at lambda=" << fmt(lambda)
                     << ";";
        }
    }
    // already at the terminal profile: nothing happens
    const auto idle =
        undercut_demo(ModelParams(0.1), AdProfile(0.075, 0.0), GridSpec{1e-4, 1.0});
    if (!idle.rounds.empty()) fail << " idle start produced moves;";
    return fail.str();
}

// --------------------------------------------------------------- criterion 10
// Property suites, each over at least 100 randomized instances.
std::string criterion_property_suites() {
    std::ostringstream fail;
    std::mt19937_64 rng(31337);

    // root identities
    for (int i = 0; i < 150; ++i) {
        const double c = 1e-6 + (0.125 - 2e-6) * uniform01(rng);
        const auto r = cutoff_roots(c);
        if (r.size() != 2) continue;
        if (std::abs(r[0] + r[1] - 0.5) > 1e-12 ||
            std::abs(r[0] * r[1] - 0.5 * c) > 1e-12) {
            fail << " root identity failed at c=" << fmt(c) << ";";
            break;
        }
    }

    // boundary absorption
    for (int i = 0; i < 150; ++i) {
        const ModelParams p(0.01 + 0.23 * uniform01(rng));
        const AdProfile ads(uniform01(rng), uniform01(rng));
        if (gamma_map(p, ads, 0.0) != 0.0 || gamma_map(p, ads, 1.0) != 1.0) {
            fail << " boundary absorption failed;";
            break;
        }
    }

    // pointwise best-response oracle agreement
    for (int i = 0; i < 120; ++i) {
        const ModelParams p(0.01 + 0.23 * uniform01(rng));
        const AdProfile ads(0.3 * uniform01(rng), 0.3 * uniform01(rng));
        double n = uniform01(rng);
        if (n == 0.5 || n == 0.0) n = 0.3;
        const int grid_n = 1000;
        std::optional<double> q1, q2;
        if (n > 0.5) {
            q1 = interval_avg_quality(p, 1.0 - n, 1.0);
            q2 = interval_avg_quality(p, 0.0, 1.0 - n);
        } else {
            q1 = interval_avg_quality(p, 0.0, n);
            q2 = interval_avg_quality(p, n, 1.0);
        }
        int count = 0;
        for (int k = 0; k < grid_n; ++k) {
            const double beta = (k + 0.5) / grid_n;
            count += user_utility(p, beta, q1, n, ads.a1()) >=
                     user_utility(p, beta, q2, 1.0 - n, ads.a2());
        }
        const double oracle = static_cast<double>(count) / grid_n;
        if (std::abs(gamma_map(p, ads, n) - oracle) > 2.0 / grid_n) {
            fail << " oracle disagreement at n=" << fmt(n) << ";";
            break;
        }
    }

    // second-derivative signs by centered differences
    for (int i = 0; i < 110; ++i) {
        const double lambda = 0.01 + 0.23 * uniform01(rng);
        const double a2 = 0.15 + 0.15 * uniform01(rng);
        const double c = 0.02 + 0.095 * uniform01(rng);
        const double a1 = a2 + c - 0.5 * lambda;
        if (a1 < 1e-3) continue;
        const ModelParams p(lambda);
        const double u = 1.0 - 8.0 * c;
        const double analytic = -2.0 / std::sqrt(u) - 4.0 * a1 / std::pow(u, 1.5);
        const double h = 1e-5;
        const auto f = [&](double a) { return profits(p, AdProfile(a, a2)).pi1; };
        const double fd = (f(a1 + h) - 2.0 * f(a1) + f(a1 - h)) / (h * h);
        if (!(analytic < 0.0) || std::abs(fd / analytic - 1.0) > 1e-4) {
            fail << " leader concavity check failed;";
            break;
        }
    }
    for (int i = 0; i < 110; ++i) {
        const double lambda = 0.02 + 0.21 * uniform01(rng);
        const ModelParams p(lambda);
        const auto cand = interior_foc_candidate(p);
        const double cs = cand.c_star;
        const double analytic = -2.0 / cs + 4.0 * cand.a2 / (cs * cs * cs);
        const double h = 3e-4 * cs * cs;
        const auto f = [&](double a) {
            return profits(p, AdProfile(cand.a1, a)).pi2;
        };
        const double fd =
            (f(cand.a2 + h) - 2.0 * f(cand.a2) + f(cand.a2 - h)) / (h * h);
        if (!(analytic > 0.0) || std::abs(fd / analytic - 1.0) > 1e-4) {
            fail << " follower convexity check failed;";
            break;
        }
    }

    // serialization round-trips
    for (int i = 0; i < 110; ++i) {
        const ModelParams p(0.01 + 0.23 * uniform01(rng), 0.5 + uniform01(rng));
        const AdProfile ads(0.3 * uniform01(rng), 0.3 * uniform01(rng));
        if (json(p).get<ModelParams>() != p || json(ads).get<AdProfile>() != ads) {
            fail << " parameter round-trip failed;";
            break;
        }
        const auto set = solve_equilibria(p, ads);
        if (equilibria_from_json(json::parse(equilibria_json(set).dump())) != set) {
            fail << " equilibrium-set round-trip failed;";
            break;
        }
        double start = uniform01(rng);
        if (start == 0.5) start = 0.25;
        const auto trace = iterate_to_fixed_point(p, ads, start);
        const json tj = trace_json(p, ads, trace);
        if (json::parse(tj.dump()).get<IterationTrace>() != trace) {
            fail << " trace round-trip failed;";
            break;
        }
        const auto sol = nash_solve(p);
        if (game_solution_from_json(json::parse(game_solution_json(sol).dump())) !=
            sol) {
            fail << " game-solution round-trip failed;";
            break;
        }
    }
    return fail.str();
}

struct Criterion {
    int id;
    const char* name;
    std::function<std::string()> run;
};

} // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "nash-closed-form-and-deviation-audit", criterion_nash_values},
        {2, "interior-candidate-refutation", criterion_candidate_refutation},
        {3, "stackelberg-coincidence", criterion_stackelberg_coincidence},
        {4, "cutoff-closed-forms-vs-iteration", criterion_iteration_oracle},
        {5, "stability-derivative-test", criterion_stability_derivatives},
        {6, "existence-and-coexistence-windows", criterion_existence_windows},
        {7, "montecarlo-convergence", criterion_montecarlo},
        {8, "figure-data", criterion_figure_data},
        {9, "undercut-demo-terminal-state", criterion_undercut_demo},
        {10, "property-suites", criterion_property_suites},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        std::string detail;
        try {
            detail = c.run();
        } catch (const std::exception& e) {
            detail = std::string(" exception: ") + e.what();
        }
        if (detail.empty()) {
            std::printf("PASS %2d. %s\n", c.id, c.name);
        } else {
            std::printf("FAIL %2d. %s --%s\n", c.id, c.name, detail.c_str());
            ++failures;
        }
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
                criteria.size());
    return failures == 0 ? 0 : 1;
}
