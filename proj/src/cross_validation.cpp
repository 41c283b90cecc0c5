#include "charn/cross_validation.hpp"

#include <cmath>
#include <limits>

#include "charn/error.hpp"
#include "charn/special.hpp"

namespace charn {

CvInterval cv_interval(std::span<const double> z, double eps) {
    const double n = static_cast<double>(z.size());
    const double sigma = robust_sigma(z);
    const double ln = std::log(n);
    return CvInterval{sigma * std::pow(n, -1.0 / (3.0 + eps)),
                      sigma * ln * ln * std::pow(n, -1.0 / (4.0 - eps))};
}

CvSelection cv_bandwidth_detailed(std::span<const double> z,
                                  std::span<const double> y, int p,
                                  const Kernel& k, double eps, int grid_size,
                                  Exec exec) {
    const std::size_t n = z.size();
    if (n < 20) throw DomainError("cv_bandwidth: needs at least 20 observations");
    if (y.size() != n) throw DomainError("cv_bandwidth: length mismatch");

    const CvInterval interval = cv_interval(z, eps);
    CvSelection sel;
    sel.grid.resize(grid_size);
    const double log_lo = std::log(interval.lo);
    const double log_hi = std::log(interval.hi);
    for (int g = 0; g < grid_size; ++g) {
        const double frac = grid_size == 1 ? 0.0
                                           : static_cast<double>(g) /
                                                 static_cast<double>(grid_size - 1);
        sel.grid[g] = std::exp(log_lo + frac * (log_hi - log_lo));
    }
    sel.scores.assign(grid_size, std::numeric_limits<double>::quiet_NaN());

    Columns x_cols{std::vector<double>(z.begin(), z.end())};
    const std::size_t max_failures = n / 20;  // 5% rule

    parallel_for(static_cast<std::size_t>(grid_size), exec, [&](std::size_t g) {
        const Bandwidth h = Bandwidth::uniform(sel.grid[g]);
        double err = 0.0;
        std::size_t ok = 0;
        std::size_t failed = 0;
        const double point[1] = {0.0};
        (void)point;
        for (std::size_t i = 0; i < n; ++i) {
            const double x0[1] = {z[i]};
            try {
                const double pred = local_poly_fit_excluding(
                    x_cols, y, std::span<const double>(x0, 1), p, h, k,
                    static_cast<long>(i));
                const double r = pred - y[i];
                err += r * r;
                ++ok;
            } catch (const SingularDesign&) {
                ++failed;
                if (failed > max_failures) return;  // candidate discarded
            }
        }
        if (failed > max_failures || ok == 0) return;
        sel.scores[g] = err / static_cast<double>(ok);
    });

    double best = std::numeric_limits<double>::infinity();
    int best_idx = -1;
    for (int g = 0; g < grid_size; ++g) {
        if (std::isnan(sel.scores[g])) continue;
        if (sel.scores[g] <= best) {  // <= so ties go to the larger bandwidth
            best = sel.scores[g];
            best_idx = g;
        }
    }
    if (best_idx < 0) {
        throw NoValidBandwidth("cv_bandwidth: every candidate was discarded");
    }
    sel.h = sel.grid[best_idx];
    sel.score = best;
    return sel;
}

Bandwidth cv_bandwidth(std::span<const double> z, std::span<const double> y,
                       int p, const Kernel& k, double eps, int grid_size,
                       Exec exec) {
    return Bandwidth::uniform(
        cv_bandwidth_detailed(z, y, p, k, eps, grid_size, exec).h);
}

}  // namespace charn
