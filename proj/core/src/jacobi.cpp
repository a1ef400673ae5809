#include "cphm/jacobi.hpp"

#include <boost/math/special_functions/jacobi.hpp>

#include <cmath>
#include <stdexcept>
#include <string>

namespace cphm {

namespace {

constexpr int kMaxDegree = 50;

void require_argument(double y) {
    if (!(std::abs(y) <= 1.0)) {
        throw std::domain_error("jacobi: argument must satisfy |y| <= 1, got " +
                                std::to_string(y));
    }
}

// All evaluation is routed through long double: the ODE-residual oracle
// differentiates twice by finite differences, which amplifies evaluation
// noise by 1/h^2, and 64-bit mantissas keep that amplified noise below the
// tolerances the callers pin.
long double eval_ld(const JacobiParams& jp, long double y) {
    return boost::math::jacobi(static_cast<unsigned>(jp.degree),
                               static_cast<long double>(jp.alpha),
                               static_cast<long double>(jp.beta), y);
}

}  // namespace

JacobiParams JacobiParams::create(double alpha, double beta, int degree) {
    if (!(alpha > -1.0) || !(beta > -1.0)) {
        throw std::invalid_argument(
            "JacobiParams: require alpha > -1 and beta > -1");
    }
    if (degree < 0 || degree > kMaxDegree) {
        throw std::invalid_argument("JacobiParams: degree must be in [0, " +
                                    std::to_string(kMaxDegree) + "], got " +
                                    std::to_string(degree));
    }
    return JacobiParams{alpha, beta, degree};
}

double jacobi_eval(const JacobiParams& jp, double y) {
    require_argument(y);
    return static_cast<double>(eval_ld(jp, static_cast<long double>(y)));
}

double jacobi_derivative(const JacobiParams& jp, double y) {
    require_argument(y);
    return static_cast<double>(boost::math::jacobi_prime(
        static_cast<unsigned>(jp.degree), static_cast<long double>(jp.alpha),
        static_cast<long double>(jp.beta), static_cast<long double>(y)));
}

double jacobi_second_derivative(const JacobiParams& jp, double y) {
    require_argument(y);
    return static_cast<double>(boost::math::jacobi_double_prime(
        static_cast<unsigned>(jp.degree), static_cast<long double>(jp.alpha),
        static_cast<long double>(jp.beta), static_cast<long double>(y)));
}

double jacobi_ode_residual_fd(const JacobiParams& jp, double y) {
    const long double h = 1e-4L;
    if (!(std::abs(y) <= 1.0 - 2.0 * static_cast<double>(h))) {
        throw std::domain_error(
            "jacobi_ode_residual_fd: stencil needs |y| <= 1 - 2e-4");
    }
    const long double yl = y;
    const long double fm2 = eval_ld(jp, yl - 2 * h);
    const long double fm1 = eval_ld(jp, yl - h);
    const long double f0 = eval_ld(jp, yl);
    const long double fp1 = eval_ld(jp, yl + h);
    const long double fp2 = eval_ld(jp, yl + 2 * h);

    const long double d1 = (-fp2 + 8 * fp1 - 8 * fm1 + fm2) / (12 * h);
    const long double d2 =
        (-fp2 + 16 * fp1 - 30 * f0 + 16 * fm1 - fm2) / (12 * h * h);

    const long double a = jp.alpha;
    const long double b = jp.beta;
    const long double j = jp.degree;
    const long double residual = (1 - yl * yl) * d2 +
                                 (b - a - (a + b + 2) * yl) * d1 +
                                 j * (j + 1 + a + b) * f0;
    return static_cast<double>(residual);
}

}  // namespace cphm
