#include "charn/kernel.hpp"

#include <cmath>

#include "charn/error.hpp"
#include "charn/quadrature.hpp"

namespace charn {

namespace {

double triweight(double x) {
    if (x <= -1.0 || x >= 1.0) return 0.0;
    const double t = 1.0 - x * x;
    return 1.09375 * t * t * t;  // 35/32 (1-x^2)^3
}

double epanechnikov(double x) {
    if (x <= -1.0 || x >= 1.0) return 0.0;
    return 0.75 * (1.0 - x * x);
}

}  // namespace

Kernel triweight_kernel() { return Kernel{&triweight, "triweight"}; }

Kernel epanechnikov_kernel() { return Kernel{&epanechnikov, "epanechnikov"}; }

Kernel kernel_by_name(const std::string& name) {
    if (name == "triweight") return triweight_kernel();
    if (name == "epanechnikov") return epanechnikov_kernel();
    throw DomainError("unknown kernel: " + name);
}

void validate_kernel(const Kernel& k) {
    for (double x : {0.1, 0.33, 0.5, 0.77, 0.95}) {
        if (std::abs(k(x) - k(-x)) > 1e-12) {
            throw DomainError(std::string(k.name) + ": kernel not symmetric");
        }
    }
    if (k(1.0) != 0.0 || k(-1.0) != 0.0 || k(1.5) != 0.0) {
        throw DomainError(std::string(k.name) + ": kernel support exceeds [-1,1]");
    }
    const double mass = gl_integrate([&](double x) { return k(x); }, -1.0, 1.0, 200);
    if (std::abs(mass - 1.0) > 1e-8) {
        throw DomainError(std::string(k.name) + ": kernel mass differs from 1");
    }
}

}  // namespace charn
