#pragma once

// High-precision values from tests/oracles/closed_form_values.py (mpmath,
// 50 digits). Regenerate with that script; never from the library.

namespace frozen {

namespace golden {  // mc^2 = 1, E = 2, V0 = 4
inline constexpr double a = 0.57735026918962576;
inline constexpr double k = 1.7320508075688773;
inline constexpr double kbar = 1.7320508075688773;
inline constexpr double b = -1.7320508075688773;
inline constexpr double b_dprime = 0.57735026918962576;
inline constexpr double r = -0.5;
inline constexpr double t = 0.5;
inline constexpr double R = 0.25;
inline constexpr double T = 0.75;
inline constexpr double rho0 = 1.0;
inline constexpr double j0 = 0.86602540378443865;
inline constexpr double v_t = 0.86602540378443865;
inline constexpr double force = -4.0;

inline constexpr double r_traditional = -2.0;
inline constexpr double t_traditional = -1.0;
inline constexpr double R_traditional = 4.0;
inline constexpr double T_traditional = -3.0;
}  // namespace golden

namespace negative_energy {  // mc^2 = 1, E = 2, V0 = 5
inline constexpr double b = -1.414213562373095;
inline constexpr double ab = -0.81649658092772603;
inline constexpr double r = -0.1010205144336438;
inline constexpr double t = 0.63567449039156449;
inline constexpr double rho0 = 1.2122461732037256;
inline constexpr double j0 = 1.1429166527197286;
inline constexpr double force = -6.0612308660186282;
}  // namespace negative_energy

inline constexpr double R_infinite = 0.071796769724490826;
inline constexpr double T_infinite = 0.92820323027550917;

namespace near_edge {  // mc^2 = 1, E = 2, delta = 1e-6
inline constexpr double b_dprime = 0.00070710660440991852;
inline constexpr double T = 0.0016316602369923989;
}  // namespace near_edge

inline constexpr double a_nonrel = 0.05;                  // E = 1.005
inline constexpr double a_exact = 0.049937616943892234;   // E = 1.005

// F(V0) + 4 (E - mc^2) at V0 = E + mc^2 + 1e-8, E = 2
inline constexpr double klein_force_gap = 0.00032654530203148898;

}  // namespace frozen
