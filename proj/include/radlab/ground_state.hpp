#pragma once

#include <array>
#include <vector>

#include "radlab/dopri5.hpp"
#include "radlab/errors.hpp"
#include "radlab/sphere.hpp"

namespace radlab {

// Parameters of the radial profile problem
//   phi'' + (n-1)/r phi' + max(phi,0)^gamma = 0,  phi(0) = 1, phi'(0) = 0,
// integrated until the first zero of phi.  gamma must stay strictly between
// 1 and the critical value (n+2)/(n-2); oracle_mode additionally admits
// gamma = 1, where phi has a closed form that validates the whole pipeline
// (sin(r)/r at n = 3).
struct ProblemParams {
    int n = 3;
    double gamma = 2.0;
    bool oracle_mode = false;
    double tol_ode = 1e-10;
    double tol_root = 1e-12;
    double r_max = 50.0;

    double critical_exponent() const { return double(n + 2) / double(n - 2); }
    // exponent of the scale-invariant mass integrand
    double mass_exponent() const { return 0.5 * n * (gamma - 1.0); }
    // q with v -> mu^q v(mu x) mapping solutions to solutions
    double scaling_power() const { return 2.0 / (gamma - 1.0); }
    void validate() const;
};

// Piecewise description of a radial shot: a short series branch on
// [0, nodes.front()) and one dense interpolation segment per accepted step.
// values[i], slopes[i] are the state at nodes[i].
struct RadialProfile {
    std::array<double, 5> series{}; // value poly c0..c4 on the series branch
    std::vector<double> nodes;
    std::vector<double> values;
    std::vector<double> slopes;
    std::vector<DenseSegment> dense; // dense[i] covers [nodes[i], nodes[i+1]]

    double r_start() const { return nodes.empty() ? 0.0 : nodes.front(); }
    double r_stop() const { return nodes.empty() ? 0.0 : nodes.back(); }
    double eval(double r) const;
    double eval_slope(double r) const;
};

struct SeriesStart {
    double phi = 1.0;
    double dphi = 0.0;
};

// Quartic expansion around the regular singular point r = 0:
//   phi(r0)  = 1 - r0^2/(2n) + gamma r0^4 / (8 n (n+2)),
//   phi'(r0) =   - r0 /  n   + gamma r0^3 / (2 n (n+2)).
// Valid start window is 0 <= r0 <= 1e-2.
SeriesStart series_start(const ProblemParams& params, double r0);

// Integrates the profile from the series start until one node past the
// first sign change.  Throws zero_not_found if phi is still positive at
// r_max, carrying the last (r, phi).
RadialProfile integrate_phi(const ProblemParams& params);

struct FirstZero {
    double r_star = 0.0;
    double alpha_star = 0.0; // -phi'(r_star) > 0
};

// Locates the first zero by bisection on the dense output of the bracketing
// step, to absolute width tol_root.
FirstZero first_zero(const RadialProfile& profile, double tol_root);

struct GroundState {
    ProblemParams params;
    RadialProfile profile;
    double r_star = 0.0;
    double alpha_star = 0.0;
    double lambda_flux = 0.0;      // omega_{n-1} alpha* r*^{n-1}
    double lambda_flux_quad = 0.0; // omega_{n-1} int_0^{r*} phi^gamma r^{n-1} dr
    double lambda_mass = 0.0;      // omega_{n-1} int_0^{r*} phi^{n(gamma-1)/2} r^{n-1} dr
    double q = 0.0;                // 2/(gamma-1)
};

// Full solve: profile, first zero, and the three lambda values.  The two
// flux routes (boundary slope vs quadrature of the nonlinearity) agree up
// to solver accuracy; both are kept so that consumers can check.
GroundState ground_state(const ProblemParams& params);

} // namespace radlab
