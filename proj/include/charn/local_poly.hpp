#pragma once

#include <atomic>
#include <memory>
#include <span>
#include <vector>

#include "charn/kernel.hpp"
#include "charn/parallel.hpp"

namespace charn {

// Column-major covariate storage: d columns of length n.
using Columns = std::vector<std::vector<double>>;

inline std::size_t n_rows(const Columns& cols) {
    return cols.empty() ? 0 : cols.front().size();
}

struct Bandwidth {
    std::vector<double> per_coordinate;

    explicit Bandwidth(std::vector<double> h = {}) : per_coordinate(std::move(h)) {}
    static Bandwidth uniform(double h, int d = 1) {
        return Bandwidth(std::vector<double>(static_cast<std::size_t>(d), h));
    }
    double scalar() const { return per_coordinate.front(); }
};

// Fitted value (the intercept of the weighted degree-p polynomial fit) at x0.
// Throws SingularDesign when the local Gram matrix is numerically singular
// (smallest eigenvalue below 1e-10 of the largest).
double local_poly_fit(const Columns& x, std::span<const double> y,
                      std::span<const double> x0, int p, const Bandwidth& h,
                      const Kernel& k);

// Same fit with observation `exclude` left out (leave-one-out CV helper;
// pass a negative index for no exclusion).
double local_poly_fit_excluding(const Columns& x, std::span<const double> y,
                                std::span<const double> x0, int p,
                                const Bandwidth& h, const Kernel& k,
                                long exclude);

// Conditional mean/variance surfaces for one series: the mean from the
// regression of Y on X, the variance from the regression of Y^2 minus the
// squared mean, clamped below at `floor` (clamp events are counted).
class SmootherFit {
public:
    struct Eval {
        double mean;
        double variance;
        bool clamped;
    };

    SmootherFit(Columns x, std::vector<double> y, int p, Bandwidth h_mean,
                Bandwidth h_second_moment, const Kernel& k, double floor);

    Eval at(std::span<const double> x0) const;
    double mean_at(std::span<const double> x0) const;
    std::vector<Eval> at_many(const Columns& points,
                              Exec exec = Exec::Parallel) const;

    long floor_hits() const { return floor_hits_.load(); }
    double floor() const { return floor_; }
    const Bandwidth& bandwidth_mean() const { return h_mean_; }
    const Bandwidth& bandwidth_second_moment() const { return h_s_; }
    int order() const { return p_; }

private:
    Columns x_;
    std::vector<double> y_;
    std::vector<double> y_squared_;
    int p_;
    Bandwidth h_mean_;
    Bandwidth h_s_;
    Kernel k_;
    double floor_;
    mutable std::atomic<long> floor_hits_{0};
};

// Convenience: positive variance floor from the response scale.
double default_variance_floor(std::span<const double> y);

}  // namespace charn
