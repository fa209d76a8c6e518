#pragma once

#include <cmath>

#include "radlab/errors.hpp"

namespace radlab {

// Surface area of the unit sphere in R^n: 2 pi^{n/2} / Gamma(n/2).
// Gamma(n/2) is built by the recursion Gamma(x+1) = x Gamma(x) from
// Gamma(1) = 1 (n even) or Gamma(1/2) = sqrt(pi) (n odd), so no general
// gamma function is needed and the value is exact up to rounding.
inline double unit_sphere_area(int n) {
    if (n < 2) throw domain_error("unit_sphere_area: n must be >= 2");
    const double pi = 3.14159265358979323846264338327950288;
    double g, x;
    if (n % 2 == 0) {
        g = 1.0;
        x = 1.0;
    } else {
        g = std::sqrt(pi);
        x = 0.5;
    }
    while (x + 0.25 < 0.5 * n) {
        g *= x;
        x += 1.0;
    }
    return 2.0 * std::pow(pi, 0.5 * n) / g;
}

} // namespace radlab
