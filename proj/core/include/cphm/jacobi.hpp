#pragma once

namespace cphm {

// Jacobi polynomial P_j^{(alpha,beta)}; evaluated by the standard three-term
// recurrence.  Degrees are capped at 50 -- the recurrence is numerically
// stable in [-1, 1] for the range needed here, and the cap keeps it that way.
struct JacobiParams {
    double alpha = 0.0;  // > -1
    double beta = 0.0;   // > -1
    int degree = 0;      // 0..50

    // Throws std::invalid_argument on violated bounds.
    static JacobiParams create(double alpha, double beta, int degree);
};

// P_j^{(alpha,beta)}(y) for |y| <= 1.
double jacobi_eval(const JacobiParams& jp, double y);

// d/dy and d^2/dy^2 via the shifted-parameter identity
// d/dy P_j^{(a,b)} = (j + a + b + 1)/2 * P_{j-1}^{(a+1,b+1)}.
double jacobi_derivative(const JacobiParams& jp, double y);
double jacobi_second_derivative(const JacobiParams& jp, double y);

// Residual of the defining ODE
//   (1 - y^2) u'' + [beta - alpha - (alpha+beta+2) y] u' + j(j+1+alpha+beta) u
// with u = P_j^{(alpha,beta)} and both derivatives taken by five-point
// finite-difference stencils (step 1e-4) evaluated in extended precision.
// This is the derivative-free oracle for jacobi_eval; requires
// |y| <= 1 - 2e-4 so the stencil stays inside the domain.
double jacobi_ode_residual_fd(const JacobiParams& jp, double y);

}  // namespace cphm
