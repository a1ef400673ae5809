#include "cphm/space.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace cphm {

namespace detail {

void require_interior(double t) {
    if (!(t > 0.0 && t < std::numbers::pi / 2)) {
        throw std::domain_error("t must lie strictly inside (0, pi/2), got t=" +
                                std::to_string(t));
    }
}

}  // namespace detail

SpaceParams SpaceParams::create(int n, int p) {
    if (n < 1 || p < 0 || p >= n) {
        throw std::invalid_argument("SpaceParams requires n >= 1 and 0 <= p < n, got n=" +
                                    std::to_string(n) + ", p=" + std::to_string(p));
    }
    return SpaceParams{n, p};
}

double eta_squared(const SpaceParams& sp) noexcept {
    const double np = sp.n - sp.p;
    return 2.0 * (np - 1.0) / np + 2.0 * sp.p / (sp.p + 1.0);
}

OrbitEndomorphism pt_diagonal(const SpaceParams& sp, double t) {
    detail::require_interior(t);
    const double c = std::cos(t);
    const double s = std::sin(t);
    const double s2 = std::sin(2.0 * t);
    OrbitEndomorphism pt;
    pt.t = t;
    pt.block1 = c * c;
    pt.block2 = s * s;
    pt.block3 = 0.25 * eta_squared(sp) * s2 * s2;
    pt.mult1 = 2 * sp.p;
    pt.mult2 = 2 * (sp.n - sp.p - 1);
    return pt;
}

Eigen::VectorXd OrbitEndomorphism::diagonal() const {
    Eigen::VectorXd d(mult1 + mult2 + 1);
    d.head(mult1).setConstant(block1);
    d.segment(mult1, mult2).setConstant(block2);
    d(mult1 + mult2) = block3;
    return d;
}

double trace_p_inv_pdot(const SpaceParams& sp, double t) {
    detail::require_interior(t);
    // Per-block logarithmic derivatives: (cos^2 t)'/cos^2 t = -2 tan t,
    // (sin^2 t)'/sin^2 t = 2 cot t, (sin^2 2t)'/sin^2 2t = 4 cot 2t.  The
    // eta^2 factor of the D-block cancels in the ratio, which also covers
    // the degenerate eta = 0 case by continuous extension.
    const double tn = std::tan(t);
    const double m1 = 2.0 * sp.p;
    const double m2 = 2.0 * (sp.n - sp.p - 1);
    return m1 * (-2.0 * tn) + m2 * (2.0 / tn) + 4.0 / std::tan(2.0 * t);
}

double trace_p_inv_pdot_shifted(const SpaceParams& sp, double t, double r) {
    detail::require_interior(t);
    // d/ds of each block at s = r over the block value at t:
    //   cos^2-block:  -sin 2r / cos^2 t             (multiplicity 2p)
    //   sin^2-block:   sin 2r / sin^2 t             (multiplicity 2(n-p-1))
    //   D-block:      (eta^2/2) sin 4r / ((eta^2/4) sin^2 2t) = 2 sin 4r / sin^2 2t
    const double c = std::cos(t);
    const double s = std::sin(t);
    const double s2 = std::sin(2.0 * t);
    const double s2r = std::sin(2.0 * r);
    const double s4r = std::sin(4.0 * r);
    const double m1 = 2.0 * sp.p;
    const double m2 = 2.0 * (sp.n - sp.p - 1);
    return m1 * (-s2r) / (c * c) + m2 * s2r / (s * s) + 2.0 * s4r / (s2 * s2);
}

}  // namespace cphm
