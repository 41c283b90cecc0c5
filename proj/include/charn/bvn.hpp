#pragma once

namespace charn {

// P(X <= h, Y <= k) for standard bivariate normal with correlation rho.
// Production path: Drezner/Genz single-integral reduction (abs error < 1e-14).
double bvn_cdf(double h, double k, double rho);

// Independent slow route: adaptive quadrature of the conditioning integral
// int phi(t) Phi((k - rho t)/sqrt(1-rho^2)) dt. Kept as the reference the
// fast path is tested against.
double bvn_cdf_reference(double h, double k, double rho);

}  // namespace charn
