#include "radlab/ground_state.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "radlab/quadrature.hpp"

namespace radlab {

void ProblemParams::validate() const {
    if (n < 3) throw domain_error("params: n must be an integer >= 3");
    if (!std::isfinite(gamma)) throw domain_error("params: gamma must be finite");
    const double crit = critical_exponent();
    const double lo = oracle_mode ? 1.0 : std::nextafter(1.0, 2.0);
    if (gamma < lo || gamma >= crit) {
        throw domain_error("params: gamma must lie in (1, (n+2)/(n-2)) = (1, " +
                           std::to_string(crit) + ")" +
                           (oracle_mode ? " or equal 1 in oracle mode" : ""));
    }
    if (!(tol_ode > 0.0) || !(tol_ode < 1.0) || !(tol_root > 0.0) || tol_root > tol_ode)
        throw domain_error("params: need 0 < tol_root <= tol_ode < 1");
    if (!(r_max > 0.0) || !std::isfinite(r_max))
        throw domain_error("params: r_max must be positive and finite");
}

double RadialProfile::eval(double r) const {
    if (r < 0.0) throw domain_error("profile: r must be >= 0");
    if (nodes.empty()) throw domain_error("profile: empty");
    if (r < nodes.front()) {
        return series[0] + r * (series[1] + r * (series[2] + r * (series[3] + r * series[4])));
    }
    if (r > nodes.back()) throw domain_error("profile: r beyond integrated range");
    auto it = std::upper_bound(nodes.begin(), nodes.end(), r);
    std::size_t i = (it == nodes.begin()) ? 0 : std::size_t(it - nodes.begin()) - 1;
    if (i >= dense.size()) i = dense.size() - 1;
    return dense[i].eval(0, r);
}

double RadialProfile::eval_slope(double r) const {
    if (r < 0.0) throw domain_error("profile: r must be >= 0");
    if (nodes.empty()) throw domain_error("profile: empty");
    if (r < nodes.front()) {
        return series[1] + r * (2.0 * series[2] + r * (3.0 * series[3] + r * 4.0 * series[4]));
    }
    if (r > nodes.back()) throw domain_error("profile: r beyond integrated range");
    auto it = std::upper_bound(nodes.begin(), nodes.end(), r);
    std::size_t i = (it == nodes.begin()) ? 0 : std::size_t(it - nodes.begin()) - 1;
    if (i >= dense.size()) i = dense.size() - 1;
    return dense[i].eval(1, r);
}

SeriesStart series_start(const ProblemParams& params, double r0) {
    params.validate();
    if (r0 < 0.0 || r0 > 1e-2)
        throw domain_error("series_start: r0 must lie in [0, 1e-2]");
    const double n = params.n, g = params.gamma;
    const double a2 = -1.0 / (2.0 * n);
    const double a4 = g / (8.0 * n * (n + 2.0));
    SeriesStart s;
    s.phi = 1.0 + r0 * r0 * (a2 + r0 * r0 * a4);
    s.dphi = r0 * (2.0 * a2 + r0 * r0 * 4.0 * a4);
    return s;
}

RadialProfile integrate_phi(const ProblemParams& params) {
    params.validate();
    const double n = params.n, g = params.gamma;
    const double r0 = std::clamp(std::pow(params.tol_ode, 0.25), 1e-4, 1e-2);
    const SeriesStart start = series_start(params, r0);

    RadialProfile prof;
    const double a2 = -1.0 / (2.0 * n);
    const double a4 = g / (8.0 * n * (n + 2.0));
    prof.series = {1.0, 0.0, a2, 0.0, a4};
    prof.nodes.push_back(r0);
    prof.values.push_back(start.phi);
    prof.slopes.push_back(start.dphi);

    auto rhs = [n, g](double r, const State2& y) -> State2 {
        const double ph = y[0] > 0.0 ? y[0] : 0.0;
        return {y[1], -(n - 1.0) / r * y[1] - std::pow(ph, g)};
    };

    Dopri5Options opt;
    // per-step control sits two decades under the requested accuracy so the
    // accumulated drift over a few hundred steps stays within tol_ode
    opt.rtol = 1e-2 * params.tol_ode;
    opt.atol = 1e-2 * params.tol_ode;
    opt.h_initial = 0.02 * r0;
    opt.h_max = 1.0;

    bool crossed = false;
    dopri5_integrate(rhs, r0, {start.phi, start.dphi}, params.r_max, opt,
                     [&](const StepRecord& rec) {
                         prof.nodes.push_back(rec.r0 + rec.h);
                         prof.values.push_back(rec.y1[0]);
                         prof.slopes.push_back(rec.y1[1]);
                         prof.dense.push_back(rec.seg);
                         if (rec.y1[0] < 0.0) {
                             crossed = true;
                             return false;
                         }
                         return true;
                     });
    if (!crossed) {
        throw zero_not_found("integrate_phi: no sign change before r_max = " +
                                 std::to_string(params.r_max),
                             prof.nodes.back(), prof.values.back());
    }
    return prof;
}

FirstZero first_zero(const RadialProfile& profile, double tol_root) {
    if (!(tol_root > 0.0)) throw domain_error("first_zero: tol_root must be positive");
    std::size_t i = 0;
    const std::size_t m = profile.values.size();
    while (i + 1 < m && !(profile.values[i] > 0.0 && profile.values[i + 1] <= 0.0)) ++i;
    if (i + 1 >= m)
        throw numerical_error("first_zero: profile holds no sign change");

    const DenseSegment& seg = profile.dense[i];
    double lo = profile.nodes[i], hi = profile.nodes[i + 1];
    while (hi - lo > tol_root) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break; // rounding resolution
        (seg.eval(0, mid) > 0.0 ? lo : hi) = mid;
    }
    FirstZero z;
    z.r_star = 0.5 * (lo + hi);
    z.alpha_star = -seg.eval(1, z.r_star);
    if (!(z.alpha_star > 100.0 * tol_root))
        throw numerical_error("first_zero: tangential zero, slope ~ 0 at the crossing");
    return z;
}

GroundState ground_state(const ProblemParams& params) {
    params.validate();
    GroundState gs;
    gs.params = params;
    gs.profile = integrate_phi(params);
    const FirstZero z = first_zero(gs.profile, params.tol_root);
    gs.r_star = z.r_star;
    gs.alpha_star = z.alpha_star;
    gs.q = 2.0 / (params.gamma - 1.0);

    const double om = unit_sphere_area(params.n);
    const double nm1 = params.n - 1.0;
    gs.lambda_flux = om * gs.alpha_star * std::pow(gs.r_star, nm1);

    const auto integral_of_power = [&](double expo) {
        auto f = [&](double t) {
            const double ph = gs.profile.eval(t);
            return std::pow(ph > 0.0 ? ph : 0.0, expo) * std::pow(t, nm1);
        };
        // split at the last node before r_star so the adaptive rule can work
        // the mildly singular endpoint |r* - t|^expo on its own interval
        double split = gs.r_star;
        for (std::size_t i = gs.profile.nodes.size(); i-- > 0;) {
            if (gs.profile.nodes[i] < gs.r_star) {
                split = gs.profile.nodes[i];
                break;
            }
        }
        const double scale = std::pow(gs.r_star, double(params.n)) / params.n;
        QuadResult q1 = adaptive_gk15(f, 0.0, split, 1e-14 * scale, 2e-13);
        QuadResult q2 = adaptive_gk15(f, split, gs.r_star, 1e-14 * scale, 2e-13);
        if (!q1.converged || !q2.converged)
            throw numerical_error("ground_state: lambda quadrature did not converge");
        return q1.value + q2.value;
    };

    gs.lambda_flux_quad = om * integral_of_power(params.gamma);
    gs.lambda_mass = om * integral_of_power(params.mass_exponent());
    return gs;
}

} // namespace radlab
