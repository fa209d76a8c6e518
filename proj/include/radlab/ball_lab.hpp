#pragma once

#include <limits>
#include <vector>

#include "radlab/ground_state.hpp"

namespace radlab {

// Radial coefficient A(r) = coeffs[0] + coeffs[1] r + ... on [0, R],
// required nonnegative there.  min/max are found by sampling plus sign
// analysis of A' (bisection on each bracketed critical point), which is
// exact enough for the low-degree polynomials this is meant for.
struct ASpec {
    std::vector<double> coeffs{1.0};

    static ASpec constant(double a0) { return ASpec{{a0}}; }
    static ASpec polynomial(std::vector<double> c) { return ASpec{std::move(c)}; }

    double operator()(double r) const;
    double derivative(double r) const;
    double min_on(double R) const;
    double max_on(double R) const;
    void validate_on(double R) const; // throws unless A >= 0 on [0, R]
};

// One radial shot of  v'' + (n-1)/r v' + A(r) max(v,0)^gamma = 0 on [0, R]
// with v(0) = a, v'(0) = 0.  When a <= 0 the shot is the constant a.
// Past its first zero the equation is radially harmonic, so the solution
// continues as a1 + a2 r^{2-n}.
struct BallSolution {
    ProblemParams params;
    ASpec A;
    double R = 1.0;
    double a = 1.0;
    double mass_bound = std::numeric_limits<double>::infinity();
    bool trivial = false; // a <= 0: v is identically a
    RadialProfile profile;

    double eval(double r) const;
    double eval_slope(double r) const;
    double min_value() const; // v is radially decreasing, so this is v(R)
};

BallSolution shoot_ball(const ProblemParams& params, const ASpec& A, double a, double R,
                        double mass_bound = std::numeric_limits<double>::infinity());

// omega_{n-1} int_0^rho v_+^{n(gamma-1)/2} r^{n-1} dr, 0 <= rho <= R.
double mass_in_ball(const BallSolution& sol, double rho);

// Blowup family along a = A0^{-1/(gamma-1)} mu^q.  Each member concentrates
// the same mass quantum A0^{-n/2} lambda_mass once its support sits inside
// the ball; v at R/2 and R records the locally uniform divergence below.
struct BlowupReport {
    std::vector<double> mu_values;
    std::vector<double> sups;      // v(0) = a
    std::vector<double> infs;      // min over [0, R]
    std::vector<double> masses;    // mass_in_ball(R)
    std::vector<double> v_half;    // v(R/2)
    std::vector<double> v_edge;    // v(R)
    std::vector<double> residuals; // |mass - quantum|
    double quantum = 0.0;          // A0^{-n/2} lambda_mass
};

BlowupReport blowup_family(const ProblemParams& params, double A0,
                           const std::vector<double>& mu_values, double R);

// sup + C inf probe over the same family.  C_star is the coefficient that
// exactly cancels the mu^q growth of sup v against the boundary dip:
//   C_star = omega_{n-1} (n-2) r_star^{n-2} / lambda_flux.
struct SupInfReport {
    double C_used = 0.0;
    double C_star = 0.0;
    std::vector<double> mu_values;
    std::vector<double> sups;
    std::vector<double> infs;
    std::vector<double> values; // sup + C_used * inf
    double bound = 0.0;         // max of values
};

SupInfReport sup_inf_probe(const ProblemParams& params, double A0,
                           const std::vector<double>& mu_values, double R, double C_used);

// Smallest-eps concentration scale: bisects mu along the A == 1 family until
// mass_in_ball(R) equals eps, and reports the corresponding height mu^q.
// Requires 0 < eps < quantum (= lambda_mass); at or above the quantum no
// finite scale reaches the target.
struct EpsRegReport {
    double eps = 0.0;
    double quantum = 0.0;
    double c_of_eps = 0.0;  // mu_eps^q
    double mu_at_sup = 0.0; // mu_eps
    bool converged = false;
    int iterations = 0;
};

EpsRegReport eps_regularity_probe(const ProblemParams& params, double eps, double R);

} // namespace radlab
