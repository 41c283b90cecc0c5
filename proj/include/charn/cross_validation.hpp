#pragma once

#include <span>
#include <vector>

#include "charn/kernel.hpp"
#include "charn/local_poly.hpp"
#include "charn/parallel.hpp"

namespace charn {

struct CvInterval {
    double lo;  // sigma_hat / n^{1/(3+eps)}
    double hi;  // sigma_hat log^2(n) / n^{1/(4-eps)}
};

CvInterval cv_interval(std::span<const double> z, double eps = 0.1);

struct CvSelection {
    double h;
    double score;                 // leave-one-out mean squared prediction error
    std::vector<double> grid;
    std::vector<double> scores;   // NaN for discarded candidates
};

// Leave-one-out bandwidth selection on a log-spaced grid in [lo, hi].
// Candidates where more than 5% of the leave-one-out fits are singular are
// discarded; exact score ties resolve to the larger bandwidth.
CvSelection cv_bandwidth_detailed(std::span<const double> z,
                                  std::span<const double> y, int p,
                                  const Kernel& k, double eps = 0.1,
                                  int grid_size = 25,
                                  Exec exec = Exec::Parallel);

Bandwidth cv_bandwidth(std::span<const double> z, std::span<const double> y,
                       int p, const Kernel& k, double eps = 0.1,
                       int grid_size = 25, Exec exec = Exec::Parallel);

}  // namespace charn
