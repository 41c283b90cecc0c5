#include "charn/kde.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "charn/error.hpp"
#include "charn/special.hpp"

namespace charn {

KdeEstimate::KdeEstimate(std::vector<double> z, const Kernel& k)
    : z_(std::move(z)), k_(k) {
    if (z_.size() < 2) throw DomainError("kde: needs at least 2 observations");
    if (sample_sd(z_) <= 0.0) {
        throw DegenerateSample("kde: all observations equal");
    }
    sigma_ = robust_sigma(z_);
    h_ = 1.06 * sigma_ * std::pow(static_cast<double>(z_.size()), -0.2);
}

double KdeEstimate::operator()(double at) const {
    double s = 0.0;
    for (double zi : z_) s += k_((at - zi) / h_);
    return s / (static_cast<double>(z_.size()) * h_);
}

KdeEstimate kde(std::span<const double> z, const Kernel& k) {
    return KdeEstimate(std::vector<double>(z.begin(), z.end()), k);
}

WeightRegion WeightRegion::everything(int d) {
    WeightRegion r;
    r.box.assign(static_cast<std::size_t>(d),
                 {-std::numeric_limits<double>::infinity(),
                  std::numeric_limits<double>::infinity()});
    return r;
}

bool WeightRegion::contains(std::span<const double> x) const {
    for (std::size_t c = 0; c < box.size(); ++c) {
        if (x[c] < box[c][0] || x[c] > box[c][1]) return false;
    }
    return true;
}

WeightRegion weight_region_with_threshold(std::span<const double> z,
                                          const Kernel& k, double threshold,
                                          int grid) {
    const KdeEstimate f = kde(z, k);
    const double lo = *std::min_element(z.begin(), z.end());
    const double hi = *std::max_element(z.begin(), z.end());
    const double step = (hi - lo) / static_cast<double>(grid - 1);

    int best_start = -1, best_len = 0;
    int run_start = -1, run_len = 0;
    for (int g = 0; g < grid; ++g) {
        const double at = lo + step * g;
        if (f(at) >= threshold) {
            if (run_len == 0) run_start = g;
            ++run_len;
            if (run_len > best_len) {  // strict: ties keep the leftmost run
                best_len = run_len;
                best_start = run_start;
            }
        } else {
            run_len = 0;
        }
    }
    if (best_len == 0) {
        throw EmptyRegion("weight_region: no grid point reaches the threshold");
    }
    return WeightRegion::interval(lo + step * best_start,
                                  lo + step * (best_start + best_len - 1));
}

WeightRegion weight_region(std::span<const double> z, const Kernel& k) {
    const double n = static_cast<double>(z.size());
    const double sigma = robust_sigma(z);
    const double ln = std::log(n);
    return weight_region_with_threshold(z, k, 1.0 / (sigma * ln * ln));
}

}  // namespace charn
