#include "charn/bvn.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "charn/quadrature.hpp"
#include "charn/special.hpp"

namespace charn {

namespace {

constexpr double kTwoPi = 6.283185307179586476925287;

// Genz (2004) upper-quadrant probability P(X > h, Y > k).
double bvnu(double h, double k, double r) {
    if (std::abs(r) < 1e-15) return normal_cdf(-h) * normal_cdf(-k);
    const int order = std::abs(r) < 0.3 ? 6 : (std::abs(r) < 0.75 ? 12 : 20);
    const GaussLegendre& rule = gauss_legendre(order);

    double bvn = 0.0;
    double hk = h * k;
    if (std::abs(r) < 0.925) {
        const double hs = 0.5 * (h * h + k * k);
        const double asr = std::asin(r);
        for (int i = 0; i < order; ++i) {
            // Map nodes onto [0, asin(r)]; both half-points of the
            // symmetric rule are folded in explicitly.
            for (double sign : {-1.0, 1.0}) {
                const double sn = std::sin(asr * 0.5 * (sign * rule.nodes[i] + 1.0));
                bvn += rule.weights[i] * std::exp((sn * hk - hs) / (1.0 - sn * sn));
            }
        }
        bvn = bvn * asr / (2.0 * kTwoPi) + normal_cdf(-h) * normal_cdf(-k);
        return bvn;
    }

    // |r| >= 0.925: Genz's expansion around |r| = 1.
    double kk = k;
    if (r < 0.0) {
        kk = -kk;
        hk = -hk;
    }
    if (std::abs(r) < 1.0) {
        const double as = (1.0 - r) * (1.0 + r);
        double a = std::sqrt(as);
        const double bs = (h - kk) * (h - kk);
        const double c = (4.0 - hk) / 8.0;
        const double d = (12.0 - hk) / 16.0;
        double asr = -0.5 * (bs / as + hk);
        if (asr > -100.0) {
            bvn = a * std::exp(asr) *
                  (1.0 - c * (bs - as) * (1.0 - d * bs / 5.0) / 3.0 +
                   c * d * as * as / 5.0);
        }
        if (-hk < 100.0) {
            const double b = std::sqrt(bs);
            bvn -= std::exp(-0.5 * hk) * std::sqrt(kTwoPi) * normal_cdf(-b / a) *
                   b * (1.0 - c * bs * (1.0 - d * bs / 5.0) / 3.0);
        }
        a *= 0.5;
        for (int i = 0; i < order; ++i) {
            for (double sign : {-1.0, 1.0}) {
                const double x = a * (sign * rule.nodes[i] + 1.0);
                const double xs = x * x;
                const double rs = std::sqrt(1.0 - xs);
                asr = -0.5 * (bs / xs + hk);
                if (asr > -100.0) {
                    bvn += a * rule.weights[i] * std::exp(asr) *
                           (std::exp(-hk * (1.0 - rs) / (2.0 * (1.0 + rs))) / rs -
                            (1.0 + c * xs * (1.0 + d * xs)));
                }
            }
        }
        bvn = -bvn / kTwoPi;
    }
    if (r > 0.0) return bvn + normal_cdf(-std::max(h, kk));
    bvn = -bvn;
    if (kk > h) bvn += normal_cdf(kk) - normal_cdf(h);
    return bvn;
}

}  // namespace

double bvn_cdf(double h, double k, double rho) {
    if (std::isinf(h) || std::isinf(k)) {
        if (h < 0 || k < 0) return 0.0;
        if (std::isinf(h) && std::isinf(k)) return 1.0;
        return std::isinf(h) ? normal_cdf(k) : normal_cdf(h);
    }
    rho = std::clamp(rho, -1.0, 1.0);
    if (rho == 1.0) return normal_cdf(std::min(h, k));
    if (rho == -1.0) return std::max(0.0, normal_cdf(h) + normal_cdf(k) - 1.0);
    // P(X<=h, Y<=k) = P(X>-h, Y>-k) by symmetry of the density.
    return bvnu(-h, -k, rho);
}

double bvn_cdf_reference(double h, double k, double rho) {
    if (std::isinf(h) || std::isinf(k)) return bvn_cdf(h, k, rho);
    rho = std::clamp(rho, -0.999999999, 0.999999999);
    const double s = std::sqrt(1.0 - rho * rho);
    const double lo = std::min(-9.0, h - 1.0);
    if (h < -9.5) return 0.0;
    const double hi = std::min(h, 9.5);
    return adaptive_simpson(
        [&](double t) { return normal_pdf(t) * normal_cdf((k - rho * t) / s); },
        lo, hi, 1e-13);
}

}  // namespace charn
