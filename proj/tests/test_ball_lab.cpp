#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "radlab/ball_lab.hpp"
#include "oracle_fixtures.hpp"

using namespace radlab;

namespace {
ProblemParams params(int n, double gamma) {
    ProblemParams p;
    p.n = n;
    p.gamma = gamma;
    return p;
}
} // namespace

TEST_CASE("polynomial coefficient: evaluation, extrema, validation") {
    const ASpec A = ASpec::polynomial({1.0, -1.0, 0.5});
    CHECK(A(0.0) == doctest::Approx(1.0));
    CHECK(A(2.0) == doctest::Approx(1.0 - 2.0 + 2.0));
    CHECK(A.derivative(2.0) == doctest::Approx(-1.0 + 2.0));

    // interior critical point at r = 1 is the minimum on [0, 2]
    CHECK(A.min_on(2.0) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(A.max_on(2.0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_NOTHROW(A.validate_on(2.0));

    CHECK_THROWS_AS(ASpec::polynomial({1.0, -2.0}).validate_on(1.0), domain_error);
    CHECK_THROWS_AS(ASpec::polynomial({}).validate_on(1.0), domain_error);
    CHECK_THROWS_AS(ASpec::polynomial({1.0, std::nan("")}).validate_on(1.0), domain_error);
    CHECK(ASpec::constant(3.0)(0.7) == 3.0);
}

TEST_CASE("shoot guards") {
    const ProblemParams p = params(3, 2.0);
    CHECK_THROWS_AS(shoot_ball(p, ASpec::constant(1.0), 1.0, 0.0), domain_error);
    CHECK_THROWS_AS(shoot_ball(p, ASpec::constant(1.0), std::nan(""), 1.0), domain_error);
    CHECK_THROWS_AS(shoot_ball(p, ASpec::constant(-1.0), 1.0, 1.0), domain_error);
}

TEST_CASE("nonpositive height gives the constant solution") {
    const ProblemParams p = params(3, 2.0);
    for (double a : {0.0, -3.0}) {
        const BallSolution sol = shoot_ball(p, ASpec::constant(1.0), a, 1.0);
        CHECK(sol.trivial);
        CHECK(sol.eval(0.0) == a);
        CHECK(sol.eval(0.63) == a);
        CHECK(sol.eval_slope(0.63) == 0.0);
        CHECK(sol.min_value() == a);
        CHECK(mass_in_ball(sol, 1.0) == 0.0);
    }
}

TEST_CASE("constant coefficient rescales onto the unit-coefficient shot") {
    // v_{A0}(r; a) = A0^{-1/(g-1)} v_1(r; A0^{1/(g-1)} a)
    const ProblemParams p = params(3, 2.0);
    const double A0 = 4.0, a = 2.0, R = 1.0;
    const double s = std::pow(A0, 1.0 / (p.gamma - 1.0));
    const BallSolution lhs = shoot_ball(p, ASpec::constant(A0), a, R);
    const BallSolution rhs = shoot_ball(p, ASpec::constant(1.0), s * a, R);
    for (int i = 0; i <= 16; ++i) {
        const double r = R * i / 16.0;
        CHECK(std::abs(lhs.eval(r) - rhs.eval(r) / s) <= 1e-9 * a);
    }
}

TEST_CASE("interior crossing hands over to the harmonic tail") {
    // once v_+ = 0 the radial operator alone drives v: a1 + a2 / r in n = 3
    const ProblemParams p = params(3, 2.0);
    const BallSolution sol = shoot_ball(p, ASpec::constant(1.0), 64.0, 1.0);
    const double b = oracle::r_star_n3_g2 / 8.0; // support of the mu = 8 member
    REQUIRE(sol.eval(b + 0.01) < 0.0);

    const double v06 = sol.eval(0.6), v10 = sol.eval(1.0);
    const double a2 = (v06 - v10) / (1.0 / 0.6 - 1.0);
    const double a1 = v10 - a2;
    const double scale = std::abs(a1) + std::abs(a2);
    for (double r : {0.65, 0.75, 0.9, 0.97}) {
        CHECK(std::abs(sol.eval(r) - (a1 + a2 / r)) <= 1e-8 * scale);
        CHECK(std::abs(sol.eval_slope(r) - (-a2 / (r * r))) <= 1e-7 * scale);
    }
}

TEST_CASE("ball mass grows with the radius and saturates past the support") {
    const ProblemParams p = params(3, 2.0);
    const BallSolution sol = shoot_ball(p, ASpec::constant(1.0), 64.0, 1.0);
    double prev = 0.0;
    for (int i = 1; i <= 10; ++i) {
        const double m = mass_in_ball(sol, 0.1 * i);
        CHECK(m >= prev);
        prev = m;
    }
    // support sits near 0.544: the mass inside rho = 0.9 and rho = 1 is the
    // same integral, so the values agree bitwise
    CHECK(mass_in_ball(sol, 0.9) == mass_in_ball(sol, 1.0));
    // mu = 8 member of the unit-coefficient family carries the full quantum
    CHECK(std::abs(mass_in_ball(sol, 1.0) - oracle::lambda_mass_n3_g2) <=
          1e-8 * oracle::lambda_mass_n3_g2);

    CHECK_THROWS_AS(mass_in_ball(sol, 1.5), domain_error);
    CHECK_THROWS_AS(mass_in_ball(sol, -0.1), domain_error);
}

TEST_CASE("blowup family concentrates one quantum and dives at fixed radii") {
    const ProblemParams p = params(3, 3.0);
    const double A0 = 4.0;
    const BlowupReport rep = blowup_family(p, A0, {8.0, 16.0, 32.0, 64.0}, 1.0);

    CHECK(rep.quantum ==
          doctest::Approx(std::pow(A0, -1.5) * oracle::lambda_mass_n3_g3).epsilon(1e-8));
    for (std::size_t i = 0; i < rep.mu_values.size(); ++i) {
        // support r*/mu is inside the unit ball from mu = 8 on
        CHECK(rep.residuals[i] <= 1e-8 * rep.quantum);
        // sup tracks the prescribed height A0^{-1/(g-1)} mu^q, q = 1
        CHECK(rep.sups[i] == doctest::Approx(0.5 * rep.mu_values[i]).epsilon(1e-14));
        if (i > 0) {
            CHECK(rep.v_half[i] < rep.v_half[i - 1]);
            CHECK(rep.v_edge[i] < rep.v_edge[i - 1]);
        }
    }
    // past mu = r*/(R/2) ~ 13.8 the half-radius point sits outside the
    // support, where the tail is negative and sinking
    CHECK(rep.v_half.back() < -1.0);
    CHECK(rep.infs.back() < rep.v_edge.back() * 0.999999);

    CHECK_THROWS_AS(blowup_family(p, 0.0, {1.0}, 1.0), domain_error);
    CHECK_THROWS_AS(blowup_family(p, 1.0, {}, 1.0), domain_error);
    CHECK_THROWS_AS(blowup_family(p, 1.0, {2.0, 1.0}, 1.0), domain_error);
    CHECK_THROWS_AS(blowup_family(p, 1.0, {-1.0, 2.0}, 1.0), domain_error);
}

TEST_CASE("sup/inf probe: uncompensated growth, compensated plateau") {
    const ProblemParams p = params(3, 2.0);
    std::vector<double> mus;
    for (int k = 0; k <= 12; ++k) mus.push_back(std::ldexp(1.0, k));

    const SupInfReport plain = sup_inf_probe(p, 1.0, mus, 1.0, 0.0);
    CHECK(plain.C_star ==
          doctest::Approx(4.0 * M_PI * oracle::r_star_n3_g2 / oracle::lambda_flux_n3_g2)
              .epsilon(1e-9));
    CHECK(plain.values.back() > 10.0 * plain.values.front());
    for (std::size_t i = 0; i < mus.size(); ++i)
        CHECK(plain.values[i] == plain.sups[i]); // C = 0 leaves bare sups

    const double C = 2.0 * plain.C_star;
    const SupInfReport comp = sup_inf_probe(p, 1.0, mus, 1.0, C);
    CHECK(comp.bound < plain.values.back());
    // compensated values turn over: the max sits strictly inside the grid
    std::size_t argmax = 0;
    for (std::size_t i = 0; i < comp.values.size(); ++i)
        if (comp.values[i] > comp.values[argmax]) argmax = i;
    CHECK(argmax > 0);
    CHECK(argmax + 1 < comp.values.size());
    CHECK(comp.values.back() < 0.0); // overcompensated tail sinks

    // extending the grid cannot move an interior max
    std::vector<double> wider = mus;
    wider.push_back(std::ldexp(1.0, 13));
    wider.push_back(std::ldexp(1.0, 14));
    const SupInfReport ext = sup_inf_probe(p, 1.0, wider, 1.0, C);
    CHECK(ext.bound == comp.bound);

    CHECK_THROWS_AS(sup_inf_probe(p, 1.0, mus, 1.0, -0.5), domain_error);
}

TEST_CASE("epsilon-regularity scale diverges toward the quantum") {
    const ProblemParams p = params(3, 1.5);
    const double R = 1.0;
    const EpsRegReport lo = eps_regularity_probe(p, 0.25 * oracle::lambda_mass_n3_g1p5, R);
    const EpsRegReport hi = eps_regularity_probe(p, 0.99 * oracle::lambda_mass_n3_g1p5, R);

    CHECK(lo.quantum == doctest::Approx(oracle::lambda_mass_n3_g1p5).epsilon(1e-8));
    CHECK(lo.converged);
    CHECK(hi.converged);
    CHECK(std::isfinite(lo.c_of_eps));
    CHECK(std::isfinite(hi.c_of_eps));
    CHECK(lo.c_of_eps > 0.0);
    CHECK(hi.mu_at_sup > lo.mu_at_sup);
    CHECK(hi.c_of_eps > 10.0 * lo.c_of_eps);
    CHECK(lo.iterations > 0);

    // at or above one quantum no finite scale reaches the target
    CHECK_THROWS_AS(eps_regularity_probe(p, lo.quantum, R), domain_error);
    CHECK_THROWS_AS(eps_regularity_probe(p, 2.0 * lo.quantum, R), domain_error);
    CHECK_THROWS_AS(eps_regularity_probe(p, 0.0, R), domain_error);
    CHECK_THROWS_AS(eps_regularity_probe(p, 0.5, 0.0), domain_error);
}
