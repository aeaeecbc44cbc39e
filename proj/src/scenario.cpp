#include "ugcduo/scenario.hpp"

#include <cmath>
#include <stdexcept>

namespace ugcduo {

namespace {

// Grid indices with a relative fuzz so decimal-intended boundaries that land
// a few ulps off a binary grid multiple resolve the way the decimals read.
long weak_grid_index(double x, double step) {
    return static_cast<long>(std::floor(x / step + 1e-6));
}

long strict_grid_index(double x, double step) {
    return static_cast<long>(std::ceil(x / step - 1e-6)) - 1;
}

} // namespace

FigureColumns figure_curves(double lambda, double a1, double a2, double step) {
    if (!std::isfinite(lambda) || !(lambda > 0.0))
        throw std::invalid_argument("lambda must be positive");
    if (!std::isfinite(a1) || a1 < 0.0 || !std::isfinite(a2) || a2 < 0.0)
        throw std::invalid_argument("ad levels must be finite and nonnegative");
    if (!(step > 0.0 && step < 0.5))
        throw std::invalid_argument("step must lie in (0, 0.5)");

    const double gap = a1 - a2;
    FigureColumns fig;
    const long last = strict_grid_index(0.5, step);
    for (long k = 1; k <= last; ++k) {
        const double b = static_cast<double>(k) * step;
        fig.beta.push_back(b);
        fig.f_red.push_back((1.0 - 2.0 * b) * b);
        fig.f_blue.push_back((2.0 * b - 1.0) * b);
        fig.y_line.push_back(gap);
        fig.y_red_dashed.push_back(gap + 0.5 * lambda);
        fig.y_blue_dashed.push_back(gap - 0.5 * lambda);
    }
    return fig;
}

UndercutTrace undercut_demo(const ModelParams& params, const AdProfile& start,
                            const GridSpec& grid, int max_moves) {
    if (!(grid.step > 0.0) || !(grid.a_max > 0.0))
        throw std::invalid_argument("grid step and a_max must be positive");
    if (max_moves <= 0)
        max_moves = 2 * static_cast<int>(grid.a_max / grid.step) + 128;

    const double seam = 0.125 - 0.5 * params.lambda();
    double a1 = start.a1();
    double a2 = start.a2();

    UndercutTrace trace;
    int round = 0;
    int quiet_moves = 0;
    bool p2_turn = true;
    for (int m = 0; m < max_moves && quiet_moves < 2; ++m, p2_turn = !p2_turn) {
        double next1 = a1;
        double next2 = a2;
        if (p2_turn) {
            // largest grid level strictly undercutting enough to tip the
            // market; infeasible -> give up and fall back to zero
            const long k = strict_grid_index(a1 - seam, grid.step);
            next2 = k < 0 ? 0.0
                          : std::min(static_cast<double>(k) * grid.step,
                                     grid.a_max);
        } else {
            // largest grid level that still retains the dominant position
            const double retain = a2 + seam;
            const long k = weak_grid_index(retain, grid.step);
            next1 = std::min(static_cast<double>(k) * grid.step, grid.a_max);
            if (std::abs(next1 - retain) <= 1e-9) next1 = retain;
            if (next1 < 0.0) next1 = 0.0;
        }
        if (next1 == a1 && next2 == a2) {
            ++quiet_moves;
            continue;
        }
        quiet_moves = 0;
        a1 = next1;
        a2 = next2;
        const ProfitOutcome outcome = profits(params, AdProfile{a1, a2});
        trace.rounds.push_back({++round, a1, a2, outcome.pi1, outcome.pi2});
    }
    trace.a1_final = a1;
    trace.a2_final = a2;
    trace.terminated = quiet_moves >= 2;
    return trace;
}

} // namespace ugcduo
