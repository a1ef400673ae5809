#include "cphm/solutions.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "cphm/space.hpp"

namespace cphm {

FamilyValues family_eval(const FamilyParam& fp, double t) {
    detail::require_interior(t);
    const double s = std::sin(t);
    const double c = std::cos(t);
    const double s2 = std::sin(2.0 * t);
    const double w = fp.rho * fp.rho * s * s + c * c;
    FamilyValues v;
    v.r = std::atan(fp.rho * std::tan(t)) + fp.ell * std::numbers::pi;
    v.dr = fp.rho / w;
    v.ddr = fp.rho * (1.0 - fp.rho * fp.rho) * s2 / (w * w);
    v.sin2r = fp.rho * s2 / w;
    v.cos2r = (c * c - fp.rho * fp.rho * s * s) / w;
    return v;
}

std::optional<double> holomorphicity_residual(const Profile& profile, double t) {
    detail::require_interior(t);
    const ProfilePoint pt = profile.eval(t);
    if (std::abs(std::cos(pt.r)) < 1e-12) return std::nullopt;  // tan r pole
    const double tr = std::tan(pt.r);
    const double tt = std::tan(t);
    return pt.dr * (1.0 + tr * tr) * tt - (1.0 + tt * tt) * tr;
}

double convergence_gap(double rho, double delta) {
    if (rho == 0.0 || !std::isfinite(rho)) {
        throw std::invalid_argument("convergence_gap requires finite rho != 0");
    }
    if (!(delta > 0.0 && delta < std::numbers::pi / 2)) {
        throw std::invalid_argument("convergence_gap requires delta in (0, pi/2)");
    }
    return std::numbers::pi / 2 - std::atan(std::abs(rho) * std::tan(delta));
}

double deformation_mode(double rho, double t) noexcept {
    const double tt = std::tan(t);
    return tt / (1.0 + rho * rho * tt * tt);
}

}  // namespace cphm
