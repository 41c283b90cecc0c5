#include "charn/special.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "charn/error.hpp"

namespace charn {

namespace {
constexpr double kSqrt2 = 1.4142135623730950488016887;
constexpr double kInvSqrt2Pi = 0.3989422804014326779399461;
}  // namespace

double normal_pdf(double x) { return kInvSqrt2Pi * std::exp(-0.5 * x * x); }

double normal_cdf(double x) { return 0.5 * std::erfc(-x / kSqrt2); }

double normal_quantile(double p) {
    if (!(p > 0.0 && p < 1.0)) {
        if (p == 0.0) return -std::numeric_limits<double>::infinity();
        if (p == 1.0) return std::numeric_limits<double>::infinity();
        throw DomainError("normal_quantile: p outside [0,1]");
    }
    const double q = std::min(p, 1.0 - p);
    double x;
    if (q > 0.02425) {
        // Central start: truncated series of the inverse around 0.
        const double t = p - 0.5;
        x = t * (2.50662827463 + t * t * 1.0);
    } else {
        // Tail start from the classical asymptotic expansion.
        const double r = std::sqrt(-2.0 * std::log(q));
        x = r - (std::log(r) + std::log(6.283185307179586)) / (2.0 * r);
        if (p < 0.5) x = -x;
    }
    for (int it = 0; it < 60; ++it) {
        const double err = normal_cdf(x) - p;
        const double d = normal_pdf(x);
        if (d <= 0.0) break;
        // Halley step; falls back to Newton behavior for small steps.
        const double u = err / d;
        const double step = u / (1.0 + 0.5 * x * u);
        x -= step;
        if (std::abs(step) < 1e-15 * (1.0 + std::abs(x))) break;
    }
    return x;
}

namespace {

double beta_cont_fraction(double a, double b, double x) {
    constexpr int kMaxIter = 300;
    constexpr double kEps = 3e-16;
    constexpr double kFpMin = 1e-300;
    const double qab = a + b;
    const double qap = a + 1.0;
    const double qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::abs(d) < kFpMin) d = kFpMin;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= kMaxIter; ++m) {
        const int m2 = 2 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < kFpMin) d = kFpMin;
        c = 1.0 + aa / c;
        if (std::abs(c) < kFpMin) c = kFpMin;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < kFpMin) d = kFpMin;
        c = 1.0 + aa / c;
        if (std::abs(c) < kFpMin) c = kFpMin;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < kEps) break;
    }
    return h;
}

}  // namespace

double incomplete_beta(double a, double b, double x) {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    const double ln_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                            a * std::log(x) + b * std::log1p(-x);
    const double front = std::exp(ln_front);
    if (x < (a + 1.0) / (a + b + 2.0)) {
        return front * beta_cont_fraction(a, b, x) / a;
    }
    return 1.0 - front * beta_cont_fraction(b, a, 1.0 - x) / b;
}

double student_t_pdf(double x, double dof) {
    const double lg = std::lgamma(0.5 * (dof + 1.0)) - std::lgamma(0.5 * dof) -
                      0.5 * std::log(dof * 3.141592653589793238462643);
    return std::exp(lg - 0.5 * (dof + 1.0) * std::log1p(x * x / dof));
}

double student_t_cdf(double x, double dof) {
    if (std::isinf(x)) return x > 0 ? 1.0 : 0.0;
    const double z = dof / (dof + x * x);
    const double half_tail = 0.5 * incomplete_beta(0.5 * dof, 0.5, z);
    return x > 0.0 ? 1.0 - half_tail : half_tail;
}

double student_t_quantile(double p, double dof) {
    if (!(p > 0.0 && p < 1.0)) {
        if (p == 0.0) return -std::numeric_limits<double>::infinity();
        if (p == 1.0) return std::numeric_limits<double>::infinity();
        throw DomainError("student_t_quantile: p outside [0,1]");
    }
    if (p == 0.5) return 0.0;
    // Start from the scaled normal quantile, then safeguarded Newton.
    double x = normal_quantile(p);
    x *= std::sqrt(dof / std::max(dof - 2.0, 0.5));
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();
    for (int it = 0; it < 100; ++it) {
        const double f = student_t_cdf(x, dof) - p;
        if (f > 0.0) hi = std::min(hi, x); else lo = std::max(lo, x);
        const double d = student_t_pdf(x, dof);
        double step = f / std::max(d, 1e-300);
        double next = x - step;
        if (!(next > lo && next < hi)) {
            // Bisect within the bracket; widen an open side geometrically.
            if (std::isinf(lo)) next = hi - std::max(1.0, 2.0 * std::abs(hi));
            else if (std::isinf(hi)) next = lo + std::max(1.0, 2.0 * std::abs(lo));
            else next = 0.5 * (lo + hi);
        }
        if (std::abs(next - x) < 1e-14 * (1.0 + std::abs(next))) { x = next; break; }
        x = next;
    }
    return x;
}

double debye1(double x) {
    if (x == 0.0) throw DomainError("debye1: x must be nonzero");
    if (x < 0.0) return debye1(-x) + 0.5 * x;
    // Adaptive Simpson on t/(e^t - 1); integrand is smooth, ~1 near zero.
    const auto f = [](double t) {
        if (t < 1e-8) return 1.0 - 0.5 * t;
        return t / std::expm1(t);
    };
    // Composite Simpson with enough panels for ~1e-12 on the x-range in use.
    const int n = 512;
    const double h = x / n;
    double sum = f(0.0) + f(x);
    for (int i = 1; i < n; ++i) sum += f(i * h) * (i % 2 ? 4.0 : 2.0);
    const double integral = sum * h / 3.0;
    return integral / x;
}

double mean(std::span<const double> values) {
    double s = 0.0;
    for (double v : values) s += v;
    return s / static_cast<double>(values.size());
}

double sample_variance(std::span<const double> values) {
    const std::size_t n = values.size();
    if (n < 2) return 0.0;
    const double m = mean(values);
    double s = 0.0;
    for (double v : values) s += (v - m) * (v - m);
    return s / static_cast<double>(n - 1);
}

double sample_sd(std::span<const double> values) {
    return std::sqrt(sample_variance(values));
}

double quantile_type7(std::span<const double> values, double p) {
    if (values.empty()) throw DomainError("quantile of empty sample");
    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    const double h = (static_cast<double>(sorted.size()) - 1.0) * p;
    const std::size_t lo = static_cast<std::size_t>(std::floor(h));
    const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
    const double frac = h - static_cast<double>(lo);
    return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

double interquartile_range(std::span<const double> values) {
    return quantile_type7(values, 0.75) - quantile_type7(values, 0.25);
}

double robust_sigma(std::span<const double> values) {
    const double s = sample_sd(values);
    const double iqr_scaled = interquartile_range(values) / 1.34;
    if (iqr_scaled > 0.0) return std::min(s, iqr_scaled);
    return s;
}

}  // namespace charn
