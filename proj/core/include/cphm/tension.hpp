#pragma once

#include <utility>

#include "cphm/profile.hpp"
#include "cphm/space.hpp"

namespace cphm {

// Residual of the reduced harmonic-map ODE
//
//   r'' + [(2n-2p-1) cot t - (2p+1) tan t] r'
//      + [p/cos^2 t - (n-p-1)/sin^2 t] sin 2r - sin 4r / sin^2 2t,
//
// evaluated with the printed coefficients.
double ode_residual(const SpaceParams& sp, const Profile& profile, double t);

// Same residual at an explicit phase-space point; the integrator forms the
// second derivative as r'' = -ode_residual(sp, {r, r', 0}, t).
double ode_residual(const SpaceParams& sp, const ProfilePoint& point, double t);

// Same residual computed through the trace operations,
//   r'' + 1/2 r' Tr(P^-1 P') - 1/2 Tr(P^-1 (P')_r);
// the dual evaluation path used to cross-check the coefficients.
double ode_residual_via_traces(const SpaceParams& sp, const Profile& profile, double t);

// Target winding of the boundary value problem: r(0) = 0, r(pi/2) = k pi/2
// with odd k (k = j + 1, j even, forced by the isotropy groups).
struct BoundaryData {
    int k = 1;
    // Throws std::invalid_argument for even k.
    static BoundaryData create(int k);
};

bool admissible_k(int k) noexcept;

// (|r(eps) - 0|, |r(pi/2 - eps) - k pi/2|) for eps in (0, pi/4).  Numeric
// profiles are sampled at the nearest node-range point when eps falls
// outside their grid hull.
std::pair<double, double> boundary_gap(const Profile& profile, const BoundaryData& boundary,
                                       double eps);

enum class Parity { even, odd };

// Brouwer degree of a (k, r)-map from the general case tables:
//
//   j even:  k  if codim N0 and codim N1 are both odd;  +1 otherwise.
//   j odd:   k  if both odd;
//            0  if both even and |W| not in 4Z;
//           -1  if codim N0 even, codim N1 odd and |W| not in 8Z;
//           +1  otherwise.
//
// Raw table inputs are taken (not SpaceParams) so both tables are testable
// in full generality.  Consistency k = j*|W|/2 + 1 with the stated parity of
// j is enforced; violations throw std::invalid_argument.
int brouwer_degree(int codim0, int codim1, int weyl_order, int k, Parity j_parity);

}  // namespace cphm
