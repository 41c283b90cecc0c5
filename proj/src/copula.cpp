#include "charn/copula.hpp"

#include <algorithm>
#include <cmath>

#include "charn/bvn.hpp"
#include "charn/error.hpp"
#include "charn/quadrature.hpp"
#include "charn/special.hpp"

namespace charn {

namespace {

constexpr double kPi = 3.141592653589793238462643;

void require_unit_square(double u, double v) {
    if (!(u >= 0.0 && u <= 1.0 && v >= 0.0 && v <= 1.0)) {
        throw DomainError("copula point outside the unit square");
    }
}

void require_interior(double u, double v) {
    if (!(u > 0.0 && u < 1.0 && v > 0.0 && v < 1.0)) {
        throw DomainError("copula density/partial requested on the boundary");
    }
}

// log(exp(a) + exp(b) - 1) for a, b >= 0, stable for large arguments.
double log_sum_exp_minus_one(double a, double b) {
    const double hi = std::max(a, b);
    const double lo = std::min(a, b);
    return hi + std::log1p(std::exp(lo - hi) - std::exp(-hi));
}

// ---- Student copula conditional pieces -----------------------------------

double student_conditional_cdf(double t, double xb, double rho, double nu) {
    const double scale =
        std::sqrt((nu + 1.0) / ((nu + t * t) * (1.0 - rho * rho)));
    return student_t_cdf((xb - rho * t) * scale, nu + 1.0);
}

// C(a, b) for a <= b via the conditioning integral in t-space with the
// rational tail substitution t = x_a - tan(phi).
double student_copula_cdf_ordered(double a, double b, double rho, double nu,
                                  int order) {
    const double xa = student_t_quantile(a, nu);
    const double xb = student_t_quantile(b, nu);
    const GaussLegendre& rule = gauss_legendre(order);
    double sum = 0.0;
    const double half = 0.25 * kPi;
    for (int i = 0; i < order; ++i) {
        const double phi = half * (rule.nodes[i] + 1.0);
        const double tanphi = std::tan(phi);
        const double sec = 1.0 / std::cos(phi);
        const double t = xa - tanphi;
        sum += rule.weights[i] * student_t_pdf(t, nu) *
               student_conditional_cdf(t, xb, rho, nu) * sec * sec;
    }
    return half * sum;
}

double student_copula_cdf(double u, double v, double rho, double nu) {
    const double a = std::min(u, v);
    const double b = std::max(u, v);
    return student_copula_cdf_ordered(a, b, rho, nu, 96);
}

// ---- family CDFs on the open square ---------------------------------------

double clayton_cdf(double u, double v, double th) {
    const double ls = log_sum_exp_minus_one(-th * std::log(u), -th * std::log(v));
    return std::exp(-ls / th);
}

double frank_cdf(double u, double v, double th) {
    const double num = std::expm1(-th * u) * std::expm1(-th * v);
    return -std::log1p(num / std::expm1(-th)) / th;
}

double gumbel_cdf(double u, double v, double th) {
    const double x = -std::log(u);
    const double y = -std::log(v);
    const double A = std::pow(x, th) + std::pow(y, th);
    return std::exp(-std::pow(A, 1.0 / th));
}

// ---- log densities ---------------------------------------------------------

double clayton_log_pdf(double u, double v, double th) {
    const double lu = std::log(u);
    const double lv = std::log(v);
    const double ls = log_sum_exp_minus_one(-th * lu, -th * lv);
    return std::log1p(th) - (th + 1.0) * (lu + lv) - (2.0 + 1.0 / th) * ls;
}

double frank_log_pdf(double u, double v, double th) {
    if (std::abs(th) < 1e-10) return 0.0;  // independence limit
    const double em = -std::expm1(-th);    // 1 - e^{-theta}
    const double denom = em - (-std::expm1(-th * u)) * (-std::expm1(-th * v));
    return std::log(std::abs(th)) + std::log(em) - th * (u + v) -
           2.0 * std::log(std::abs(denom));
}

double gumbel_log_pdf(double u, double v, double th) {
    const double x = -std::log(u);
    const double y = -std::log(v);
    const double lx = std::log(x);
    const double ly = std::log(y);
    const double lA = th * lx + std::log1p(std::exp(th * (ly - lx)));
    const double A_pow = std::exp(lA / th);  // A^{1/theta}
    return -A_pow + (th - 1.0) * (lx + ly) - std::log(u) - std::log(v) +
           (2.0 / th - 2.0) * lA + std::log1p((th - 1.0) / A_pow);
}

double gaussian_log_pdf(double u, double v, double rho) {
    const double x = normal_quantile(u);
    const double y = normal_quantile(v);
    const double r2 = 1.0 - rho * rho;
    return -0.5 * std::log(r2) -
           (rho * rho * (x * x + y * y) - 2.0 * rho * x * y) / (2.0 * r2);
}

double student_log_pdf(double u, double v, double rho, double nu) {
    const double x = student_t_quantile(u, nu);
    const double y = student_t_quantile(v, nu);
    const double r2 = 1.0 - rho * rho;
    const double q = (x * x - 2.0 * rho * x * y + y * y) / (nu * r2);
    const double lg = std::lgamma(0.5 * (nu + 2.0)) + std::lgamma(0.5 * nu) -
                      2.0 * std::lgamma(0.5 * (nu + 1.0));
    return lg - 0.5 * std::log(r2) - 0.5 * (nu + 2.0) * std::log1p(q) +
           0.5 * (nu + 1.0) *
               (std::log1p(x * x / nu) + std::log1p(y * y / nu));
}

// ---- conditional distributions C^{(1)} -------------------------------------

double clayton_partial(double u, double v, double th) {
    const double lu = std::log(u);
    const double ls = log_sum_exp_minus_one(-th * lu, -th * std::log(v));
    return std::exp(-(th + 1.0) * lu - (1.0 + 1.0 / th) * ls);
}

double frank_partial(double u, double v, double th) {
    const double eu = std::expm1(-th * u);
    const double ev = std::expm1(-th * v);
    const double e1 = std::expm1(-th);
    return std::exp(-th * u) * ev / (e1 + eu * ev);
}

double gumbel_partial(double u, double v, double th) {
    const double x = -std::log(u);
    const double y = -std::log(v);
    const double lx = std::log(x);
    const double lA = th * lx + std::log1p(std::exp(th * (std::log(y) - lx)));
    const double A_pow = std::exp(lA / th);
    return std::exp(-A_pow + (1.0 / th - 1.0) * lA + (th - 1.0) * lx - std::log(u));
}

double gaussian_partial(double u, double v, double rho) {
    const double x = normal_quantile(u);
    const double y = normal_quantile(v);
    return normal_cdf((y - rho * x) / std::sqrt(1.0 - rho * rho));
}

double student_partial(double u, double v, double rho, double nu) {
    const double x = student_t_quantile(u, nu);
    const double y = student_t_quantile(v, nu);
    return student_conditional_cdf(x, y, rho, nu);
}

}  // namespace

std::string family_name(Family f) {
    switch (f) {
        case Family::Clayton: return "clayton";
        case Family::Frank: return "frank";
        case Family::Gumbel: return "gumbel";
        case Family::Gaussian: return "gaussian";
        case Family::StudentT: return "student";
        case Family::Independence: return "independence";
    }
    return "?";
}

Family family_by_name(const std::string& name) {
    if (name == "clayton") return Family::Clayton;
    if (name == "frank") return Family::Frank;
    if (name == "gumbel") return Family::Gumbel;
    if (name == "gaussian" || name == "normal") return Family::Gaussian;
    if (name == "student" || name == "student4" || name == "t") return Family::StudentT;
    if (name == "independence") return Family::Independence;
    throw DomainError("unknown copula family: " + name);
}

CopulaModel CopulaModel::clayton(double theta) {
    if (!(theta > 0.0)) throw DomainError("Clayton requires theta > 0");
    return CopulaModel{Family::Clayton, theta};
}

CopulaModel CopulaModel::frank(double theta) {
    if (theta == 0.0) throw DomainError("Frank requires theta != 0");
    return CopulaModel{Family::Frank, theta};
}

CopulaModel CopulaModel::gumbel(double theta) {
    if (!(theta >= 1.0)) throw DomainError("Gumbel requires theta >= 1");
    return CopulaModel{Family::Gumbel, theta};
}

CopulaModel CopulaModel::gaussian(double rho) {
    if (!(rho > -1.0 && rho < 1.0)) throw DomainError("Gaussian requires |rho| < 1");
    return CopulaModel{Family::Gaussian, rho};
}

CopulaModel CopulaModel::student_t(double rho, double nu) {
    if (!(rho > -1.0 && rho < 1.0)) throw DomainError("Student requires |rho| < 1");
    if (!(nu > 2.0)) throw DomainError("Student requires nu > 2");
    return CopulaModel{Family::StudentT, rho, nu};
}

CopulaModel CopulaModel::independence() {
    return CopulaModel{Family::Independence, 0.0};
}

double copula_cdf(const CopulaModel& m, double u, double v) {
    require_unit_square(u, v);
    if (u == 0.0 || v == 0.0) return 0.0;
    if (u == 1.0) return v;
    if (v == 1.0) return u;
    switch (m.family) {
        case Family::Clayton: return clayton_cdf(u, v, m.theta);
        case Family::Frank: return frank_cdf(u, v, m.theta);
        case Family::Gumbel: return gumbel_cdf(u, v, m.theta);
        case Family::Gaussian:
            return bvn_cdf(normal_quantile(u), normal_quantile(v), m.theta);
        case Family::StudentT:
            return student_copula_cdf(u, v, m.theta, m.nu);
        case Family::Independence: return u * v;
    }
    return 0.0;
}

double copula_log_pdf(const CopulaModel& m, double u, double v) {
    require_interior(u, v);
    switch (m.family) {
        case Family::Clayton: return clayton_log_pdf(u, v, m.theta);
        case Family::Frank: return frank_log_pdf(u, v, m.theta);
        case Family::Gumbel: return gumbel_log_pdf(u, v, m.theta);
        case Family::Gaussian: return gaussian_log_pdf(u, v, m.theta);
        case Family::StudentT: return student_log_pdf(u, v, m.theta, m.nu);
        case Family::Independence: return 0.0;
    }
    return 0.0;
}

double copula_pdf(const CopulaModel& m, double u, double v) {
    return std::exp(copula_log_pdf(m, u, v));
}

double copula_partial(const CopulaModel& m, double u, double v, int coordinate) {
    require_interior(u, v);
    if (coordinate == 2) std::swap(u, v);  // all families are exchangeable
    else if (coordinate != 1) throw DomainError("partial: coordinate must be 1 or 2");
    switch (m.family) {
        case Family::Clayton: return clayton_partial(u, v, m.theta);
        case Family::Frank: return frank_partial(u, v, m.theta);
        case Family::Gumbel: return gumbel_partial(u, v, m.theta);
        case Family::Gaussian: return gaussian_partial(u, v, m.theta);
        case Family::StudentT: return student_partial(u, v, m.theta, m.nu);
        case Family::Independence: return v;
    }
    return 0.0;
}

namespace {

double gumbel_conditional_inverse(double u, double w, double th) {
    // Solve C^{(1)}(u, v) = w for v: Newton on the conditional CDF with a
    // maintained bracket (the conditional CDF is increasing in v).
    double lo = 1e-14, hi = 1.0 - 1e-14;
    double v = std::clamp(w, 1e-8, 1.0 - 1e-8);
    for (int it = 0; it < 200; ++it) {
        const double g = gumbel_partial(u, v, th) - w;
        if (g > 0.0) hi = v; else lo = v;
        const double dens = std::exp(gumbel_log_pdf(u, v, th));
        double next = v - g / std::max(dens, 1e-300);
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        if (std::abs(next - v) < 1e-13 && std::abs(g) < 1e-11) return next;
        v = next;
    }
    return v;
}

}  // namespace

std::array<double, 2> copula_draw(const CopulaModel& m, Rng& rng) {
    const double u = uniform_open(rng);
    const double w = uniform_open(rng);
    switch (m.family) {
        case Family::Independence:
            return {u, w};
        case Family::Clayton: {
            const double th = m.theta;
            const double v = std::pow(
                std::pow(u, -th) * (std::pow(w, -th / (th + 1.0)) - 1.0) + 1.0,
                -1.0 / th);
            return {u, v};
        }
        case Family::Frank: {
            const double th = m.theta;
            const double denom = std::exp(-th * u) - w * std::expm1(-th * u);
            const double v = -std::log1p(w * std::expm1(-th) / denom) / th;
            return {u, std::clamp(v, 1e-15, 1.0 - 1e-15)};
        }
        case Family::Gumbel:
            return {u, gumbel_conditional_inverse(u, w, m.theta)};
        case Family::Gaussian: {
            // Reuse (u, w) as the two uniforms behind one normal pair.
            const double r = std::sqrt(-2.0 * std::log(u));
            const double z1 = r * std::cos(2.0 * kPi * w);
            const double z2prime = r * std::sin(2.0 * kPi * w);
            const double rho = m.theta;
            const double z2 = rho * z1 + std::sqrt(1.0 - rho * rho) * z2prime;
            return {normal_cdf(z1), normal_cdf(z2)};
        }
        case Family::StudentT: {
            const double r = std::sqrt(-2.0 * std::log(u));
            const double z1 = r * std::cos(2.0 * kPi * w);
            const double z2prime = r * std::sin(2.0 * kPi * w);
            const double rho = m.theta;
            const double z2 = rho * z1 + std::sqrt(1.0 - rho * rho) * z2prime;
            const double s = std::sqrt(chi_square_draw(rng, m.nu) / m.nu);
            return {student_t_cdf(z1 / s, m.nu), student_t_cdf(z2 / s, m.nu)};
        }
    }
    return {u, w};
}

std::vector<std::array<double, 2>> copula_sample(const CopulaModel& m,
                                                 std::size_t count,
                                                 std::uint64_t seed) {
    Rng rng(seed);
    std::vector<std::array<double, 2>> out(count);
    for (auto& pt : out) pt = copula_draw(m, rng);
    return out;
}

double kendall_tau(const CopulaModel& m) {
    switch (m.family) {
        case Family::Clayton: return m.theta / (m.theta + 2.0);
        case Family::Gumbel: return 1.0 - 1.0 / m.theta;
        case Family::Frank: {
            const double th = m.theta;
            return 1.0 - 4.0 / th * (1.0 - debye1(th));
        }
        case Family::Gaussian:
        case Family::StudentT:
            return 2.0 / kPi * std::asin(m.theta);
        case Family::Independence: return 0.0;
    }
    return 0.0;
}

std::pair<double, double> tau_range(Family f) {
    switch (f) {
        case Family::Clayton:
        case Family::Gumbel: return {0.0, 1.0};
        case Family::Frank:
        case Family::Gaussian:
        case Family::StudentT: return {-1.0, 1.0};
        case Family::Independence: return {0.0, 0.0};
    }
    return {0.0, 0.0};
}

bool tau_attainable(Family f, double tau) {
    const auto [lo, hi] = tau_range(f);
    if (f == Family::Frank) return tau > lo && tau < hi && tau != 0.0;
    if (f == Family::Independence) return tau == 0.0;
    return tau > lo && tau < hi;
}

namespace {

double frank_theta_from_tau(double tau) {
    const double target = std::abs(tau);
    double lo = 1e-9, hi = 4.0;
    while (kendall_tau(CopulaModel{Family::Frank, hi}) < target) {
        hi *= 2.0;
        if (hi > 1e9) throw OutOfRange("Frank tau too close to 1");
    }
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (kendall_tau(CopulaModel{Family::Frank, mid}) < target) lo = mid;
        else hi = mid;
        if (hi - lo < 1e-12 * (1.0 + hi)) break;
    }
    const double th = 0.5 * (lo + hi);
    return tau > 0 ? th : -th;
}

}  // namespace

CopulaModel kendall_tau_inverse(Family f, double tau, std::optional<double> nu) {
    if (!tau_attainable(f, tau)) {
        throw OutOfRange("tau " + std::to_string(tau) + " not attainable by " +
                         family_name(f));
    }
    switch (f) {
        case Family::Clayton: return CopulaModel::clayton(2.0 * tau / (1.0 - tau));
        case Family::Gumbel: return CopulaModel::gumbel(1.0 / (1.0 - tau));
        case Family::Frank: return CopulaModel::frank(frank_theta_from_tau(tau));
        case Family::Gaussian:
            return CopulaModel::gaussian(std::sin(0.5 * kPi * tau));
        case Family::StudentT:
            return CopulaModel::student_t(std::sin(0.5 * kPi * tau),
                                          nu.value_or(4.0));
        case Family::Independence: return CopulaModel::independence();
    }
    throw OutOfRange("kendall_tau_inverse: unsupported family");
}

double kendall_tau_derivative(const CopulaModel& m) {
    const double step = 1e-5 * std::max(1.0, std::abs(m.theta));
    CopulaModel up = m;
    CopulaModel dn = m;
    up.theta += step;
    dn.theta -= step;
    return (kendall_tau(up) - kendall_tau(dn)) / (2.0 * step);
}

}  // namespace charn
