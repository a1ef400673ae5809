#include "cphm/tension.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace cphm {

double ode_residual(const SpaceParams& sp, const Profile& profile, double t) {
    return ode_residual(sp, profile.eval(t), t);
}

double ode_residual(const SpaceParams& sp, const ProfilePoint& pt, double t) {
    detail::require_interior(t);
    const double c = std::cos(t);
    const double s = std::sin(t);
    const double s2 = std::sin(2.0 * t);
    const double coeff1 = (2.0 * sp.n - 2.0 * sp.p - 1.0) * (c / s) - (2.0 * sp.p + 1.0) * (s / c);
    const double coeff0 = sp.p / (c * c) - (sp.n - sp.p - 1.0) / (s * s);
    return pt.ddr + coeff1 * pt.dr + coeff0 * std::sin(2.0 * pt.r) -
           std::sin(4.0 * pt.r) / (s2 * s2);
}

double ode_residual_via_traces(const SpaceParams& sp, const Profile& profile, double t) {
    detail::require_interior(t);
    const ProfilePoint pt = profile.eval(t);
    return pt.ddr + 0.5 * pt.dr * trace_p_inv_pdot(sp, t) -
           0.5 * trace_p_inv_pdot_shifted(sp, t, pt.r);
}

BoundaryData BoundaryData::create(int k) {
    if (!admissible_k(k)) {
        throw std::invalid_argument("boundary winding k must be odd, got k=" + std::to_string(k));
    }
    return BoundaryData{k};
}

bool admissible_k(int k) noexcept { return k % 2 != 0; }

std::pair<double, double> boundary_gap(const Profile& profile, const BoundaryData& boundary,
                                       double eps) {
    const double pi2 = std::numbers::pi / 2;
    if (!(eps > 0.0 && eps < std::numbers::pi / 4)) {
        throw std::invalid_argument("boundary_gap requires eps in (0, pi/4)");
    }
    double tl = eps;
    double tr = pi2 - eps;
    if (profile.kind() == Profile::Kind::numeric) {
        tl = std::clamp(tl, profile.t_min(), profile.t_max());
        tr = std::clamp(tr, profile.t_min(), profile.t_max());
    }
    const double left = std::abs(profile.eval(tl).r);
    const double right = std::abs(profile.eval(tr).r - boundary.k * pi2);
    return {left, right};
}

int brouwer_degree(int codim0, int codim1, int weyl_order, int k, Parity j_parity) {
    if (codim0 < 1 || codim1 < 1 || weyl_order < 1) {
        throw std::invalid_argument("brouwer_degree requires positive codimensions and |W|");
    }
    // Consistency: k = j |W|/2 + 1 for an integer j of the stated parity.
    const long twice = 2L * (k - 1L);
    if (twice % weyl_order != 0) {
        throw std::invalid_argument("brouwer_degree: 2(k-1) is not a multiple of |W|; no integer j");
    }
    const long j = twice / weyl_order;
    const bool j_even = (j % 2 == 0);
    if (j_even != (j_parity == Parity::even)) {
        throw std::invalid_argument("brouwer_degree: j = 2(k-1)/|W| = " + std::to_string(j) +
                                    " contradicts the stated j parity");
    }
    const bool c0_odd = (codim0 % 2 != 0);
    const bool c1_odd = (codim1 % 2 != 0);
    if (j_even) {
        return (c0_odd && c1_odd) ? k : 1;
    }
    if (c0_odd && c1_odd) return k;
    if (!c0_odd && !c1_odd) return (weyl_order % 4 != 0) ? 0 : 1;
    if (!c0_odd && c1_odd) return (weyl_order % 8 != 0) ? -1 : 1;
    return 1;  // codim0 odd, codim1 even
}

}  // namespace cphm
