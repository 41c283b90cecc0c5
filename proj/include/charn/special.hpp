#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace charn {

// Standard normal distribution.
double normal_pdf(double x);
double normal_cdf(double x);
// Inverse of normal_cdf; accurate to full double precision via a guarded
// Newton refinement of a tail/central starting value.
double normal_quantile(double p);

// Regularized incomplete beta I_x(a, b) by Lentz continued fraction.
double incomplete_beta(double a, double b, double x);

// Student t distribution with (possibly non-integer) dof > 0.
double student_t_pdf(double x, double dof);
double student_t_cdf(double x, double dof);
double student_t_quantile(double p, double dof);

// Debye function D1(x) = (1/x) * int_0^x t/(e^t - 1) dt, x != 0.
double debye1(double x);

// Basic sample statistics (shared conventions used across the library).
double mean(std::span<const double> values);
double sample_variance(std::span<const double> values);  // n-1 denominator
double sample_sd(std::span<const double> values);
// Linear-interpolation sample quantile (R type 7).
double quantile_type7(std::span<const double> values, double p);
double interquartile_range(std::span<const double> values);
// min(S, IQR/1.34); falls back to S when the IQR collapses to zero.
double robust_sigma(std::span<const double> values);

}  // namespace charn
