#pragma once

#include <array>
#include <span>
#include <vector>

#include "charn/kernel.hpp"

namespace charn {

// Univariate kernel density estimate with the normal reference bandwidth
// 1.06 * sigma_hat * n^{-1/5}, sigma_hat = min(S, IQR/1.34).
class KdeEstimate {
public:
    KdeEstimate(std::vector<double> z, const Kernel& k);

    double operator()(double at) const;
    double bandwidth() const { return h_; }
    double sigma() const { return sigma_; }

private:
    std::vector<double> z_;
    Kernel k_;
    double sigma_;
    double h_;
};

KdeEstimate kde(std::span<const double> z, const Kernel& k);

// Axis-aligned box; the indicator weight w(x) = 1{x in box} with closed
// endpoints. The data-driven rule below produces the d = 1 case; larger d
// boxes are supplied by the caller.
struct WeightRegion {
    std::vector<std::array<double, 2>> box;

    static WeightRegion interval(double lo, double hi) {
        return WeightRegion{{{lo, hi}}};
    }
    static WeightRegion everything(int d = 1);

    bool contains1d(double x) const {
        return x >= box[0][0] && x <= box[0][1];
    }
    bool contains(std::span<const double> x) const;
    double lower() const { return box[0][0]; }
    double upper() const { return box[0][1]; }
};

// Largest contiguous run of a 512-point grid over [min Z, max Z] where the
// density estimate stays above the threshold (sigma_hat log^2 n)^{-1}.
WeightRegion weight_region(std::span<const double> z, const Kernel& k);
WeightRegion weight_region_with_threshold(std::span<const double> z,
                                          const Kernel& k, double threshold,
                                          int grid = 512);

}  // namespace charn
