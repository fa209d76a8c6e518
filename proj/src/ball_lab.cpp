#include "radlab/ball_lab.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "radlab/quadrature.hpp"

namespace radlab {

double ASpec::operator()(double r) const {
    double v = 0.0;
    for (std::size_t k = coeffs.size(); k-- > 0;) v = v * r + coeffs[k];
    return v;
}

double ASpec::derivative(double r) const {
    double v = 0.0;
    for (std::size_t k = coeffs.size(); k-- > 1;) v = v * r + k * coeffs[k];
    return v;
}

namespace {
// critical points of A on [0, R] by sampling A' and bisecting sign changes
std::vector<double> critical_points(const ASpec& A, double R) {
    std::vector<double> out;
    if (A.coeffs.size() < 3) return out; // constant or affine: endpoints only
    const int m = 1024;
    double prev = A.derivative(0.0);
    for (int i = 1; i <= m; ++i) {
        const double r = R * i / m;
        const double cur = A.derivative(r);
        if ((prev < 0.0 && cur > 0.0) || (prev > 0.0 && cur < 0.0)) {
            double lo = R * (i - 1) / m, hi = r;
            for (int it = 0; it < 80 && hi - lo > 1e-15 * R; ++it) {
                const double mid = 0.5 * (lo + hi);
                ((A.derivative(mid) < 0.0) == (prev < 0.0) ? lo : hi) = mid;
            }
            out.push_back(0.5 * (lo + hi));
        } else if (cur == 0.0) {
            out.push_back(r);
        }
        prev = cur;
    }
    return out;
}

double extremum_on(const ASpec& A, double R, bool want_max) {
    double best = A(0.0);
    auto consider = [&](double r) {
        const double v = A(r);
        best = want_max ? std::max(best, v) : std::min(best, v);
    };
    consider(R);
    for (double r : critical_points(A, R)) consider(r);
    // coarse sweep backstops the analysis for any pathological coefficients
    for (int i = 1; i < 64; ++i) consider(R * i / 64.0);
    return best;
}
} // namespace

double ASpec::min_on(double R) const { return extremum_on(*this, R, false); }
double ASpec::max_on(double R) const { return extremum_on(*this, R, true); }

void ASpec::validate_on(double R) const {
    if (coeffs.empty()) throw domain_error("A: empty coefficient list");
    for (double c : coeffs)
        if (!std::isfinite(c)) throw domain_error("A: coefficients must be finite");
    if (min_on(R) < 0.0) throw domain_error("A: negative on [0, R]");
}

double BallSolution::eval(double r) const {
    if (r < 0.0 || r > R * (1.0 + 1e-12)) throw domain_error("ball eval: r outside [0, R]");
    if (trivial) return a;
    return profile.eval(std::min(r, profile.r_stop()));
}

double BallSolution::eval_slope(double r) const {
    if (r < 0.0 || r > R * (1.0 + 1e-12)) throw domain_error("ball eval: r outside [0, R]");
    if (trivial) return 0.0;
    return profile.eval_slope(std::min(r, profile.r_stop()));
}

double BallSolution::min_value() const {
    if (trivial) return a;
    double m = profile.values.front();
    for (double v : profile.values) m = std::min(m, v);
    return m;
}

BallSolution shoot_ball(const ProblemParams& params, const ASpec& A, double a, double R,
                        double mass_bound) {
    params.validate();
    if (!(R > 0.0) || !std::isfinite(R)) throw domain_error("shoot_ball: R must be positive");
    if (!std::isfinite(a)) throw domain_error("shoot_ball: a must be finite");
    A.validate_on(R);

    BallSolution sol;
    sol.params = params;
    sol.A = A;
    sol.R = R;
    sol.a = a;
    sol.mass_bound = mass_bound;

    if (a <= 0.0) {
        sol.trivial = true; // v' vanishes and the source is off: v stays at a
        return sol;
    }

    const double n = params.n, g = params.gamma;
    const double A0 = A(0.0);
    const double A1 = A.coeffs.size() > 1 ? A.coeffs[1] : 0.0;
    const double A2 = A.coeffs.size() > 2 ? A.coeffs[2] : 0.0;

    // start series v = a + c2 r^2 + c3 r^3 + c4 r^4 around the regular
    // singular point.  kappa = sqrt(A0 a^{g-1}) is the curvature scale: for
    // constant A the shot is exactly a phi(kappa r), so expressing the start
    // radius in kappa units keeps the truncation error at the tolerance
    // level for every height a
    const double units = std::clamp(std::pow(params.tol_ode, 0.25), 1e-4, 1e-2);
    double r0 = units;
    const double curv = A0 * std::pow(a, g - 1.0);
    if (curv > 1.0) r0 = units / std::sqrt(curv);
    r0 = std::min(r0, 0.1 * R);

    const double ag = std::pow(a, g);
    const double c2 = -A0 * ag / (2.0 * n);
    const double c3 = -A1 * ag / (3.0 * (n + 1.0));
    const double c4 = (-A2 * ag + g * A0 * A0 * std::pow(a, 2.0 * g - 1.0) / (2.0 * n)) /
                      (4.0 * (n + 2.0));
    sol.profile.series = {a, 0.0, c2, c3, c4};
    const double v0 = a + r0 * r0 * (c2 + r0 * (c3 + r0 * c4));
    const double dv0 = r0 * (2.0 * c2 + r0 * (3.0 * c3 + r0 * 4.0 * c4));
    sol.profile.nodes.push_back(r0);
    sol.profile.values.push_back(v0);
    sol.profile.slopes.push_back(dv0);

    auto rhs = [n, g, &A](double r, const State2& y) -> State2 {
        const double vp = y[0] > 0.0 ? y[0] : 0.0;
        return {y[1], -(n - 1.0) / r * y[1] - A(r) * std::pow(vp, g)};
    };

    Dopri5Options opt;
    // same two-decade safety margin as the ground-state integration
    opt.rtol = 1e-2 * params.tol_ode;
    opt.atol = 1e-2 * params.tol_ode * std::max(1.0, a); // scale relative to the peak
    opt.h_initial = 0.02 * r0;
    opt.h_max = std::max(R / 8.0, 1e-3 * R);

    dopri5_integrate(rhs, r0, {v0, dv0}, R, opt, [&](const StepRecord& rec) {
        sol.profile.nodes.push_back(rec.r0 + rec.h);
        sol.profile.values.push_back(rec.y1[0]);
        sol.profile.slopes.push_back(rec.y1[1]);
        sol.profile.dense.push_back(rec.seg);
        return true;
    });
    return sol;
}

namespace {
// radius of the first zero if the shot crosses inside [0, R], else R
double positive_part_end(const BallSolution& sol) {
    const auto& vals = sol.profile.values;
    std::size_t i = 0;
    while (i + 1 < vals.size() && !(vals[i] > 0.0 && vals[i + 1] <= 0.0)) ++i;
    if (i + 1 >= vals.size()) return sol.R;
    return first_zero(sol.profile, sol.params.tol_root).r_star;
}
} // namespace

double mass_in_ball(const BallSolution& sol, double rho) {
    if (rho < 0.0 || rho > sol.R * (1.0 + 1e-12))
        throw domain_error("mass_in_ball: rho outside [0, R]");
    if (sol.trivial || rho == 0.0) return 0.0;
    const auto& p = sol.params;
    const double expo = p.mass_exponent();
    const double nm1 = p.n - 1.0;
    const double end = std::min(rho, positive_part_end(sol));
    if (end <= 0.0) return 0.0;
    auto f = [&](double t) {
        const double v = sol.eval(t);
        return std::pow(v > 0.0 ? v : 0.0, expo) * std::pow(t, nm1);
    };
    const double scale =
        std::pow(sol.a, expo) * std::pow(end, double(p.n)) / p.n + 1e-300;
    QuadResult q = adaptive_gk15(f, 0.0, end, 1e-14 * scale, 2e-13);
    if (!q.converged) throw numerical_error("mass_in_ball: quadrature did not converge");
    return unit_sphere_area(p.n) * q.value;
}

BlowupReport blowup_family(const ProblemParams& params, double A0,
                           const std::vector<double>& mu_values, double R) {
    params.validate();
    if (!(A0 > 0.0)) throw domain_error("blowup_family: A0 must be positive");
    if (mu_values.empty()) throw domain_error("blowup_family: empty mu grid");
    for (std::size_t i = 0; i + 1 < mu_values.size(); ++i)
        if (!(mu_values[i] < mu_values[i + 1]))
            throw domain_error("blowup_family: mu grid must increase");
    if (!(mu_values.front() > 0.0)) throw domain_error("blowup_family: mu must be positive");

    const GroundState gs = ground_state(params);
    const double q = gs.q;
    const double height = std::pow(A0, -1.0 / (params.gamma - 1.0));

    BlowupReport rep;
    rep.mu_values = mu_values;
    rep.quantum = std::pow(A0, -0.5 * params.n) * gs.lambda_mass;
    const ASpec A = ASpec::constant(A0);
    for (double mu : mu_values) {
        const double a = height * std::pow(mu, q);
        const BallSolution sol = shoot_ball(params, A, a, R);
        const double mass = mass_in_ball(sol, R);
        rep.sups.push_back(a);
        rep.infs.push_back(sol.min_value());
        rep.masses.push_back(mass);
        rep.v_half.push_back(sol.eval(0.5 * R));
        rep.v_edge.push_back(sol.eval(R));
        rep.residuals.push_back(std::abs(mass - rep.quantum));
    }
    return rep;
}

SupInfReport sup_inf_probe(const ProblemParams& params, double A0,
                           const std::vector<double>& mu_values, double R, double C_used) {
    params.validate();
    if (!(A0 > 0.0)) throw domain_error("sup_inf_probe: A0 must be positive");
    if (!(C_used >= 0.0) || !std::isfinite(C_used))
        throw domain_error("sup_inf_probe: C_used must be finite and >= 0");
    if (mu_values.empty()) throw domain_error("sup_inf_probe: empty mu grid");
    for (std::size_t i = 0; i + 1 < mu_values.size(); ++i)
        if (!(mu_values[i] < mu_values[i + 1]))
            throw domain_error("sup_inf_probe: mu grid must increase");
    if (!(mu_values.front() > 0.0)) throw domain_error("sup_inf_probe: mu must be positive");

    const GroundState gs = ground_state(params);
    const double q = gs.q;
    const double height = std::pow(A0, -1.0 / (params.gamma - 1.0));

    SupInfReport rep;
    rep.C_used = C_used;
    rep.C_star = unit_sphere_area(params.n) * (params.n - 2.0) *
                 std::pow(gs.r_star, params.n - 2.0) / gs.lambda_flux;
    rep.mu_values = mu_values;
    const ASpec A = ASpec::constant(A0);
    for (double mu : mu_values) {
        const double a = height * std::pow(mu, q);
        const BallSolution sol = shoot_ball(params, A, a, R);
        const double inf = sol.min_value();
        rep.sups.push_back(a);
        rep.infs.push_back(inf);
        rep.values.push_back(a + C_used * inf);
    }
    rep.bound = *std::max_element(rep.values.begin(), rep.values.end());
    return rep;
}

EpsRegReport eps_regularity_probe(const ProblemParams& params, double eps, double R) {
    params.validate();
    if (!(R > 0.0)) throw domain_error("eps_regularity_probe: R must be positive");
    const GroundState gs = ground_state(params);
    const double quantum = gs.lambda_mass;
    if (!(eps > 0.0) || !(eps < quantum))
        throw domain_error("eps_regularity_probe: eps must lie in (0, quantum = " +
                           std::to_string(quantum) + ")");

    const ASpec A = ASpec::constant(1.0);
    const double q = gs.q;
    auto mass_at = [&](double mu) {
        const BallSolution sol = shoot_ball(params, A, std::pow(mu, q), R);
        return mass_in_ball(sol, R);
    };

    EpsRegReport rep;
    rep.eps = eps;
    rep.quantum = quantum;

    // mass is increasing in mu until the support fits in the ball at
    // mu = r*/R, where it saturates at the quantum
    double hi = gs.r_star / R;
    double lo = 0.5 * hi;
    int it = 0;
    while (mass_at(lo) >= eps) {
        lo *= 0.5;
        if (++it > 200) throw numerical_error("eps_regularity_probe: no lower bracket");
    }
    while ((hi - lo) > 1e-10 * hi && ++it < 400) {
        const double mid = 0.5 * (lo + hi);
        (mass_at(mid) < eps ? lo : hi) = mid;
    }
    const double mu = 0.5 * (lo + hi);
    rep.mu_at_sup = mu;
    rep.c_of_eps = std::pow(mu, q);
    rep.iterations = it;
    rep.converged = (hi - lo) <= 1e-8 * hi;
    return rep;
}

} // namespace radlab
