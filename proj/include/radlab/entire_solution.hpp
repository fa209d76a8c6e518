#pragma once

#include <memory>
#include <span>
#include <vector>

#include "radlab/ground_state.hpp"

namespace radlab {

// Entire solution built from a ground-state profile by scaling and
// translation.  With b = r_star / mu:
//   |x - x0| <= b :  v = mu^q phi(mu |x - x0|)
//   |x - x0| >  b :  v = mu^{q-(n-2)} lambda_flux / (omega_{n-1} (n-2))
//                        * (|x - x0|^{2-n} - b^{2-n})
// The two branches share value and slope at b because the boundary slope
// alpha* and lambda_flux are tied by the flux identity.
struct EntireSolution {
    std::shared_ptr<const GroundState> gs;
    std::vector<double> x0;
    double mu = 1.0;
    double q = 0.0;

    double support_radius() const { return gs->r_star / mu; }
};

struct FarField {
    double c_gamma = 0.0;       // v -> -c_gamma at infinity
    double c_gamma_prime = 0.0; // v + c_gamma ~ c_gamma_prime |x|^{2-n}
};

// Requires a non-oracle ground state (gamma > 1), finite mu > 0, and
// x0.size() == n.
EntireSolution entire_solution(std::shared_ptr<const GroundState> gs,
                               std::vector<double> x0, double mu);
inline EntireSolution entire_solution(GroundState gs, std::vector<double> x0, double mu) {
    return entire_solution(std::make_shared<const GroundState>(std::move(gs)), std::move(x0),
                           mu);
}

double eval_entire_radial(const EntireSolution& sol, double s); // s = |x - x0|
double eval_entire(const EntireSolution& sol, std::span<const double> x);

// Group action v -> nu^q v(nu x): multiplies mu by nu and pulls the center
// back to x0 / nu.
EntireSolution scale_action(const EntireSolution& sol, double nu);

// omega_{n-1} int_0^{support} v_+^{n(gamma-1)/2} s^{n-1} ds, evaluated in
// physical coordinates; the value is independent of mu.
double total_mass(const EntireSolution& sol);

// Radial Newton potential of f = v_+^gamma:
//   N(s) = 1/(n-2) [ s^{2-n} int_0^s f t^{n-1} dt + int_s^infty f t dt ].
double newton_potential(const EntireSolution& sol, double s);

FarField far_field_constants(const EntireSolution& sol);

// max_s |v(s) - (N(s) - c_gamma)| over the given radii
double representation_residual(const EntireSolution& sol, std::span<const double> radii);

} // namespace radlab
