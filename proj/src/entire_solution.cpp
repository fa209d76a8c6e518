#include "radlab/entire_solution.hpp"

#include <algorithm>
#include <cmath>

#include "radlab/quadrature.hpp"

namespace radlab {

EntireSolution entire_solution(std::shared_ptr<const GroundState> gs, std::vector<double> x0,
                               double mu) {
    if (!gs) throw domain_error("entire_solution: null ground state");
    if (gs->params.oracle_mode || !(gs->params.gamma > 1.0))
        throw domain_error("entire_solution: needs gamma > 1 outside oracle mode");
    if (!(mu > 0.0) || !std::isfinite(mu))
        throw domain_error("entire_solution: mu must be positive and finite");
    if (x0.size() != std::size_t(gs->params.n))
        throw domain_error("entire_solution: x0 must have n components");
    EntireSolution sol;
    sol.q = gs->q;
    sol.gs = std::move(gs);
    sol.x0 = std::move(x0);
    sol.mu = mu;
    return sol;
}

namespace {
double exterior_coefficient(const EntireSolution& sol) {
    const auto& p = sol.gs->params;
    return std::pow(sol.mu, sol.q - (p.n - 2.0)) * sol.gs->lambda_flux /
           (unit_sphere_area(p.n) * (p.n - 2.0));
}
} // namespace

double eval_entire_radial(const EntireSolution& sol, double s) {
    if (s < 0.0) throw domain_error("eval_entire_radial: s must be >= 0");
    const auto& p = sol.gs->params;
    const double b = sol.support_radius();
    if (s <= b) {
        return std::pow(sol.mu, sol.q) * sol.gs->profile.eval(std::min(sol.mu * s, sol.gs->r_star));
    }
    const double em = 2.0 - p.n;
    return exterior_coefficient(sol) * (std::pow(s, em) - std::pow(b, em));
}

double eval_entire(const EntireSolution& sol, std::span<const double> x) {
    if (x.size() != sol.x0.size()) throw domain_error("eval_entire: wrong dimension");
    double s2 = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double d = x[i] - sol.x0[i];
        s2 += d * d;
    }
    return eval_entire_radial(sol, std::sqrt(s2));
}

EntireSolution scale_action(const EntireSolution& sol, double nu) {
    if (!(nu > 0.0) || !std::isfinite(nu))
        throw domain_error("scale_action: nu must be positive and finite");
    EntireSolution out = sol;
    out.mu = sol.mu * nu;
    for (auto& c : out.x0) c /= nu;
    return out;
}

double total_mass(const EntireSolution& sol) {
    const auto& p = sol.gs->params;
    const double b = sol.support_radius();
    const double expo = p.mass_exponent();
    const double nm1 = p.n - 1.0;
    auto f = [&](double s) {
        const double v = eval_entire_radial(sol, s);
        return std::pow(v > 0.0 ? v : 0.0, expo) * std::pow(s, nm1);
    };
    const double scale = std::pow(std::pow(sol.mu, sol.q), expo) * std::pow(b, double(p.n)) / p.n;
    QuadResult q = adaptive_gk15(f, 0.0, b, 1e-14 * scale, 2e-13);
    if (!q.converged) throw numerical_error("total_mass: quadrature did not converge");
    return unit_sphere_area(p.n) * q.value;
}

double newton_potential(const EntireSolution& sol, double s) {
    if (s < 0.0) throw domain_error("newton_potential: s must be >= 0");
    const auto& p = sol.gs->params;
    const double b = sol.support_radius();
    const double nm1 = p.n - 1.0;
    const double g = p.gamma;
    auto f = [&](double t) {
        const double v = eval_entire_radial(sol, t);
        return std::pow(v > 0.0 ? v : 0.0, g);
    };
    const double fscale = std::pow(std::pow(sol.mu, sol.q), g);
    const double inner_end = std::min(s, b);

    double inner = 0.0; // s^{2-n} int_0^{min(s,b)} f t^{n-1} dt
    if (inner_end > 0.0) {
        auto fi = [&](double t) { return f(t) * std::pow(t, nm1); };
        const double scale = fscale * std::pow(inner_end, double(p.n)) / p.n;
        QuadResult q = adaptive_gk15(fi, 0.0, inner_end, 1e-14 * scale, 2e-13);
        if (!q.converged) throw numerical_error("newton_potential: inner quadrature stalled");
        inner = std::pow(s, 2.0 - p.n) * q.value;
    }

    double outer = 0.0; // int_{min(s,b)}^b f t dt
    if (inner_end < b) {
        auto fo = [&](double t) { return f(t) * t; };
        const double scale = fscale * 0.5 * (b * b - inner_end * inner_end) + 1e-300;
        QuadResult q = adaptive_gk15(fo, inner_end, b, 1e-14 * scale, 2e-13);
        if (!q.converged) throw numerical_error("newton_potential: outer quadrature stalled");
        outer = q.value;
    }
    return (inner + outer) / (p.n - 2.0);
}

FarField far_field_constants(const EntireSolution& sol) {
    const auto& p = sol.gs->params;
    FarField ff;
    ff.c_gamma_prime = std::pow(sol.mu, sol.q - (p.n - 2.0)) * sol.gs->lambda_flux /
                       ((p.n - 2.0) * unit_sphere_area(p.n));
    ff.c_gamma = ff.c_gamma_prime * std::pow(sol.mu / sol.gs->r_star, p.n - 2.0);
    return ff;
}

double representation_residual(const EntireSolution& sol, std::span<const double> radii) {
    const FarField ff = far_field_constants(sol);
    double worst = 0.0;
    for (double s : radii) {
        const double v = eval_entire_radial(sol, s);
        const double rhs = newton_potential(sol, s) - ff.c_gamma;
        worst = std::max(worst, std::abs(v - rhs));
    }
    return worst;
}

} // namespace radlab
