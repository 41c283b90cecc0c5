#pragma once

#include <functional>
#include <vector>

namespace charn {

struct GaussLegendre {
    std::vector<double> nodes;    // on (-1, 1)
    std::vector<double> weights;
};

// Nodes/weights computed at first use by Newton iteration on P_n; cached per
// order. Accurate to machine precision, no hard-coded tables.
const GaussLegendre& gauss_legendre(int order);

// Integrate f over [a, b] with an order-point Gauss-Legendre rule.
double gl_integrate(const std::function<double(double)>& f, double a, double b,
                    int order);

// Adaptive Simpson with absolute tolerance; recursion depth capped.
double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double tol, int max_depth = 28);

// Iterated 2-D adaptive integral over [0,1]^2 (inner integral in v).
double adaptive_unit_square(const std::function<double(double, double)>& f,
                            double tol);

}  // namespace charn
