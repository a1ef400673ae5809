#pragma once

#include <Eigen/Core>

#include <utility>
#include <vector>

#include "cphm/jacobi.hpp"
#include "cphm/profile.hpp"
#include "cphm/space.hpp"

namespace cphm {

// The equivariant stability problem on (0, pi/2) about a background r:
//
//   xi'' + c(t) xi' - V(t) xi + lambda xi = 0,
//   c = (2n-2p-1) cot t - (2p+1) tan t,
//   V = 2(n-p-1) cos 2r / sin^2 t - 2p cos 2r / cos^2 t + 4 cos 4r / sin^2 2t.
//
// c is the logarithmic derivative of w(t) = sin^(2n-2p-1) t cos^(2p+1) t, so
// the operator is self-adjoint in L^2(w dt); the discretization works with
// the Liouville normal form eta = sqrt(w) xi,
//
//   -eta'' + V_eff eta = lambda eta,   V_eff = V + c^2/4 + c'/2,
//
// on a uniform grid over [eps, pi/2 - eps] with homogeneous Dirichlet walls
// (the 1/t^2 growth of V confines eigenfunctions, so the wall error vanishes
// as eps -> 0 and is removed by extrapolation).
struct SturmLiouvilleProblem {
    SpaceParams params;
    Profile profile;     // background solution r
    int grid_size = 200;  // interior nodes N
    double eps = 1e-3;   // domain: (eps, pi/2 - eps)

    // Throws std::invalid_argument unless grid_size >= 16 and 0 < eps < pi/4.
    static SturmLiouvilleProblem create(SpaceParams params, Profile profile, int grid_size,
                                        double eps = 1e-3);
};

// w(t) = sin^(2n-2p-1) t cos^(2p+1) t; strictly positive on (0, pi/2).
double weight(const SpaceParams& params, double t);

// (log w)'(t) = (2n-2p-1) cot t - (2p+1) tan t.
double weight_log_derivative(const SpaceParams& params, double t);

// The potential V(t) of the stability equation about the given background.
double potential(const SpaceParams& params, const Profile& profile, double t);

struct SymTridiagonal {
    std::vector<double> diag;
    std::vector<double> off;  // subdiagonal, size diag.size() - 1

    Eigen::MatrixXd dense() const;
};

// Symmetric finite-difference matrix of the Liouville-form operator on the
// problem's interior grid t_i = eps + i h, h = (pi/2 - 2 eps)/(N + 1).
SymTridiagonal discretize(const SturmLiouvilleProblem& problem);

struct SpectrumResult {
    std::vector<double> eigenvalues;  // the `count` smallest, ascending
    // xi eigenfunctions on `grid`, w-orthonormal: sum_i h w(t_i) xi_a xi_b = delta_ab,
    // sign-normalized so the largest-magnitude component is positive.
    std::vector<std::vector<double>> eigenvectors;
    std::vector<double> grid;  // interior nodes t_i
    // Counted over the full discrete spectrum (all N eigenvalues), not just
    // the returned ones: index = #{lambda < -tol}, nullity = #{|lambda| <= tol}.
    int index = 0;
    int nullity = 0;
    double tol = 1e-3;
};

// The `count` smallest eigenpairs of the discretized problem; deterministic
// for fixed inputs.  Requires 0 <= count <= grid_size/4.  The default
// nullity tolerance 1e-3 reflects the grid limit: an analytic zero mode lands
// within O(h^2 + eps) of zero, not at zero.
// Throws std::runtime_error if the eigensolver fails to converge.
SpectrumResult eigen_smallest(const SturmLiouvilleProblem& problem, int count,
                              double tol = 1e-3);

// Values-only convenience wrapper around eigen_smallest.
std::vector<double> eigenvalues_smallest(const SturmLiouvilleProblem& problem, int count);

// Removes the leading discretization errors from the `count` smallest
// eigenvalues: Richardson in the grid spacing (solves at N and 2N, the error
// is O(h^2)) followed by linear extrapolation of the Dirichlet-wall offset
// (solves at eps and eps/2).  Four solves total.
std::vector<double> eigenvalues_refined(const SpaceParams& params, const Profile& profile,
                                        int count, int grid_size, double eps);

// lambda_j = 4 j (j + n + 2) for odd n, p = (n-1)/2, |rho| = 1 backgrounds.
// Throws std::invalid_argument for even or non-positive n or negative j.
double closed_spectrum(int n, int j);

// Applies the lambda = 0 stability operator to the family's deformation mode
// d/drho arctan(rho tan t) = tan t / (1 + rho^2 tan^2 t); vanishes identically
// because the family solves the harmonic ODE for every rho.  Evaluated from
// rational identities in (sin t, cos t, rho) so the cancellation is exact to
// roundoff.
double zero_mode_residual(const SpaceParams& params, double rho, double t);

// Counts (index, nullity) over result.eigenvalues with result.tol.  Note
// eigen_smallest's own index/nullity fields count the full discretization;
// this helper counts only the stored array.
std::pair<int, int> index_nullity(const SpectrumResult& result);

// Left side of the line-coordinate stability equation (x = log tan t)
//
//   xi''(x) - (n-1) tanh x xi'(x) - n tanh^2 x xi(x) + (lambda/4 + 1) sech^2 x xi(x)
//
// at the closed-form eigenfunction xi_j = sech x P_j^((n+1)/2,(n+1)/2)(tanh x)
// with lambda = 4j(j+n+2); vanishes identically.  rho_sign in {-1, +1} names
// the background (the equation is the same for both).  Requires odd n and
// |x| <= 20.
double line_transform_residual(int n, int rho_sign, int j, double x);

}  // namespace cphm
