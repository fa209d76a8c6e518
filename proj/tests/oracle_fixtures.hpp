// Frozen reference values for the radial ground-state IVP
//   phi'' + (n-1)/r phi' + max(phi,0)^gamma = 0, phi(0)=1, phi'(0)=0.
// Generated by tests/oracle/gen_fixtures.py: an independent
// arbitrary-order Taylor stepper in 36-digit mpmath arithmetic that
// stops before the first zero and closes with the exact harmonic tail.
// Do not edit by hand; regenerate with the script.
#pragma once

namespace oracle {

// n = 3, gamma = 1.5
inline constexpr double r_star_n3_g1p5       = 3.6537537362191224;
inline constexpr double alpha_star_n3_g1p5   = 0.20330128263854635;
inline constexpr double lambda_flux_n3_g1p5  = 34.105822507084341;
inline constexpr double lambda_mass_n3_g1p5  = 68.372196861313197;

// n = 3, gamma = 2
inline constexpr double r_star_n3_g2       = 4.3528745959461247;
inline constexpr double alpha_star_n3_g2   = 0.12724865113117521;
inline constexpr double lambda_flux_n3_g2  = 30.298097756282277;
inline constexpr double lambda_mass_n3_g2  = 44.827055929285911;

// n = 3, gamma = 3
inline constexpr double r_star_n3_g3       = 6.8968486193769604;
inline constexpr double alpha_star_n3_g3   = 0.042429757604452952;
inline constexpr double lambda_flux_n3_g3  = 25.361900947065253;
inline constexpr double lambda_mass_n3_g3  = 25.361900947065253;

// n = 4, gamma = 2
inline constexpr double r_star_n4_g2       = 6.3465109986123125;
inline constexpr double alpha_star_n4_g2   = 0.043885337167578514;
inline constexpr double lambda_flux_n4_g2  = 221.43909175155151;
inline constexpr double lambda_mass_n4_g2  = 221.43909175155151;

// n = 6, gamma = 1.5
inline constexpr double r_star_n6_g1p5       = 7.4021786224423528;
inline constexpr double alpha_star_n6_g1p5   = 0.025233616248272828;
inline constexpr double lambda_flux_n6_g1p5  = 17387.090574274173;
inline constexpr double lambda_mass_n6_g1p5  = 17387.090574274173;

// n = 3, gamma = 2 profile value at r_star/2
inline constexpr double phi_half_n3_g2 = 0.47308426405124929;

} // namespace oracle
