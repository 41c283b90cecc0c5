#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "charn/rng.hpp"

namespace charn {

enum class Family { Clayton, Frank, Gumbel, Gaussian, StudentT, Independence };

std::string family_name(Family f);
Family family_by_name(const std::string& name);

// Bivariate copula: a single-parameter family, or (rho, nu) for Student t.
// Construct through the factories so the parameter constraints hold.
struct CopulaModel {
    Family family;
    double theta = 0.0;  // dependence parameter (rho for the elliptical families)
    double nu = 4.0;     // Student t degrees of freedom (> 2)

    static CopulaModel clayton(double theta);
    static CopulaModel frank(double theta);
    static CopulaModel gumbel(double theta);
    static CopulaModel gaussian(double rho);
    static CopulaModel student_t(double rho, double nu);
    static CopulaModel independence();
};

// Grounded two-increasing CDF with uniform margins; boundary values exact.
double copula_cdf(const CopulaModel& m, double u, double v);

// Density / log-density on the open unit square (DomainError on boundary).
double copula_pdf(const CopulaModel& m, double u, double v);
double copula_log_pdf(const CopulaModel& m, double u, double v);

// Conditional distribution dC/du_coordinate, coordinate in {1, 2}.
double copula_partial(const CopulaModel& m, double u, double v, int coordinate);

// i.i.d. draws by conditional inversion (closed form where available, a
// guarded Newton root-find on the conditional CDF for Gumbel) or the
// elliptical transforms.
std::array<double, 2> copula_draw(const CopulaModel& m, Rng& rng);
std::vector<std::array<double, 2>> copula_sample(const CopulaModel& m,
                                                 std::size_t count,
                                                 std::uint64_t seed);

double kendall_tau(const CopulaModel& m);
// Smallest/largest tau the family can represent (open interval).
std::pair<double, double> tau_range(Family f);
bool tau_attainable(Family f, double tau);
// Solve kendall_tau(theta) = tau; OutOfRange when unattainable.
CopulaModel kendall_tau_inverse(Family f, double tau,
                                std::optional<double> nu = std::nullopt);
// d tau / d theta by central difference (used for delta-method mapping).
double kendall_tau_derivative(const CopulaModel& m);

}  // namespace charn
