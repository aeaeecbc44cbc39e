#pragma once
#include <vector>

#include "ugcduo/game.hpp"

namespace ugcduo {

/** Plot-ready columns for the cutoff-condition picture on (0, 1/2).
 *
 * f_red = (1-2b)b and f_blue = (2b-1)b are the two orientation parabolas;
 * y_line is the raw ad gap and the dashed lines sit lambda/2 above and below
 * it, so their vertical distance is exactly lambda. Intersections of f_red
 * with y_red_dashed (resp. f_blue with y_blue_dashed) are the interior
 * cutoffs of the corresponding orientation.
 */
struct FigureColumns {
    std::vector<double> beta;
    std::vector<double> f_red;
    std::vector<double> f_blue;
    std::vector<double> y_line;
    std::vector<double> y_red_dashed;
    std::vector<double> y_blue_dashed;

    bool operator==(const FigureColumns&) const = default;
};

/// Takes lambda raw (not ModelParams): the picture is the standard way to see
/// why lambda >= 1/4 kills interior coexistence, so it must be drawable there.
FigureColumns figure_curves(double lambda, double a1, double a2,
                            double step = 1e-3);

struct UndercutRound {
    int round = 0;
    double a1 = 0.0;
    double a2 = 0.0;
    double pi1 = 0.0;
    double pi2 = 0.0;

    bool operator==(const UndercutRound&) const = default;
};

struct UndercutTrace {
    std::vector<UndercutRound> rounds;
    double a1_final = 0.0;
    double a2_final = 0.0;
    bool terminated = false;

    bool operator==(const UndercutTrace&) const = default;
};

/** Scripted alternating undercutting demo.
 *
 * Platform 2 moves to the largest grid level that tips the market its way
 * (or to 0 when no such level is feasible); platform 1 answers with the
 * largest grid level that keeps the dominant position. Moves that change
 * nothing are skipped and the script stops once a full cycle is a no-op,
 * which lands on (largest grid value <= 1/8 - lambda/2, 0) from any start.
 */
UndercutTrace undercut_demo(const ModelParams& params, const AdProfile& start,
                            const GridSpec& grid = {}, int max_moves = 0);

} // namespace ugcduo
