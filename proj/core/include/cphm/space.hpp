#pragma once

#include <Eigen/Core>

namespace cphm {

// Parameters of the SU(p+1) x SU(n-p) action on CP^n.  The orbit space is
// the interval [0, pi/2]; the singular orbits at the endpoints have real
// codimensions codim0 = 2(n-p) and codim1 = 2(p+1), and the Weyl group of
// the action has order 2.
struct SpaceParams {
    int n = 2;  // complex dimension of CP^n
    int p = 0;  // 0 <= p < n

    // Throws std::invalid_argument unless n >= 1 and 0 <= p < n.
    static SpaceParams create(int n, int p);

    int codim0() const noexcept { return 2 * (n - p); }
    int codim1() const noexcept { return 2 * (p + 1); }
    static constexpr int weyl_order = 2;

    // (n, p) = (1, 0) collapses the principal-orbit geometry: eta^2 = 0,
    // every basis block is empty except the D-direction, whose normalization
    // constant is undefined.  Closed forms below return zero blocks there
    // and strict-positivity claims are waived.
    bool degenerate() const noexcept { return n == 1; }
};

// eta^2 = 2(n-p-1)/(n-p) + 2p/(p+1); zero exactly in the degenerate case.
double eta_squared(const SpaceParams& sp) noexcept;

// Diagonal of the orbit endomorphism P_t in the ordered basis
// (N1, N2, N3, N4, D): cos^2 t on the 2p directions of N1 u N2, sin^2 t on
// the 2(n-p-1) directions of N3 u N4, and (eta^2/4) sin^2 2t on D.
struct OrbitEndomorphism {
    double block1 = 0.0;  // cos^2 t, multiplicity mult1 = 2p
    double block2 = 0.0;  // sin^2 t, multiplicity mult2 = 2(n-p-1)
    double block3 = 0.0;  // (eta^2/4) sin^2 2t, multiplicity 1
    int mult1 = 0;
    int mult2 = 0;
    double t = 0.0;

    // Full diagonal of length mult1 + mult2 + 1 = 2n - 1 in basis order.
    Eigen::VectorXd diagonal() const;
};

OrbitEndomorphism pt_diagonal(const SpaceParams& sp, double t);

// Tr(P_t^{-1} dP_t/dt).  Equals 2[(2n-2p-1) cot t - (2p+1) tan t].
double trace_p_inv_pdot(const SpaceParams& sp, double t);

// Tr(P_t^{-1} (dP/ds)|_{s=r}), the shifted trace whose half enters the
// zeroth-order term of the reduced harmonic-map ODE.
double trace_p_inv_pdot_shifted(const SpaceParams& sp, double t, double r);

namespace detail {
// Throws std::domain_error unless 0 < t < pi/2.  P_t and everything built
// from it is defined only off the singular orbits; limits are the caller's
// job.
void require_interior(double t);
}  // namespace detail

}  // namespace cphm
