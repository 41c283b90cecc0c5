#pragma once

#include <string>

namespace charn {

// Symmetric probability-density kernel supported on [-1, 1].
struct Kernel {
    double (*eval)(double);
    const char* name;

    double operator()(double x) const { return eval(x); }
};

Kernel triweight_kernel();
Kernel epanechnikov_kernel();
Kernel kernel_by_name(const std::string& name);

// Numerical check of the kernel contract: symmetry, support, unit mass
// (integral within 1e-8). Throws DomainError on violation.
void validate_kernel(const Kernel& k);

}  // namespace charn
