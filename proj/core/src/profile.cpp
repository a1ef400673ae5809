#include "cphm/profile.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "cphm/solutions.hpp"
#include "cphm/space.hpp"

namespace cphm {

Profile Profile::closed_form(double rho, int ell) {
    if (rho == 0.0 || !std::isfinite(rho)) {
        throw std::invalid_argument(
            "closed-form profile requires finite rho != 0 (rho = 0 is the constant profile)");
    }
    return Profile(Kind::closed_form, rho, ell);
}

Profile Profile::constant(int ell) { return Profile(Kind::constant, 0.0, ell); }

Profile Profile::numeric(std::vector<double> t, std::vector<double> r,
                         std::vector<double> dr, std::vector<double> ddr) {
    const std::size_t n = t.size();
    if (n < 2) throw std::invalid_argument("numeric profile needs at least 2 nodes");
    if (r.size() != n || dr.size() != n || ddr.size() != n) {
        throw std::invalid_argument("numeric profile arrays must have equal length");
    }
    const double pi2 = std::numbers::pi / 2;
    for (std::size_t i = 0; i < n; ++i) {
        if (!(t[i] > 0.0 && t[i] < pi2)) {
            throw std::invalid_argument("numeric profile nodes must lie inside (0, pi/2)");
        }
        if (i > 0 && !(t[i] > t[i - 1])) {
            throw std::invalid_argument("numeric profile nodes must be strictly increasing");
        }
    }
    Profile pr(Kind::numeric, 0.0, 0);
    pr.t_ = std::move(t);
    pr.r_ = std::move(r);
    pr.dr_ = std::move(dr);
    pr.ddr_ = std::move(ddr);
    return pr;
}

ProfilePoint Profile::eval(double t) const {
    detail::require_interior(t);
    switch (kind_) {
        case Kind::constant:
            return ProfilePoint{ell_ * std::numbers::pi / 2, 0.0, 0.0};
        case Kind::closed_form: {
            const FamilyValues fv = family_eval(FamilyParam{rho_, ell_}, t);
            return ProfilePoint{fv.r, fv.dr, fv.ddr};
        }
        case Kind::numeric:
            break;
    }
    if (t < t_.front() || t > t_.back()) {
        throw std::out_of_range("numeric profile evaluated at t=" + std::to_string(t) +
                                " outside node range [" + std::to_string(t_.front()) + ", " +
                                std::to_string(t_.back()) + "]");
    }
    // Locate the node interval [t_i, t_{i+1}] containing t.
    const auto it = std::upper_bound(t_.begin(), t_.end(), t);
    std::size_t i = (it == t_.begin()) ? 0 : static_cast<std::size_t>(it - t_.begin()) - 1;
    i = std::min(i, t_.size() - 2);

    const double h = t_[i + 1] - t_[i];
    const double s = (t - t_[i]) / h;
    const double s2 = s * s, s3 = s2 * s;
    const double h00 = 2 * s3 - 3 * s2 + 1;
    const double h10 = s3 - 2 * s2 + s;
    const double h01 = -2 * s3 + 3 * s2;
    const double h11 = s3 - s2;

    ProfilePoint out;
    // r from the (r, r') Hermite cubic.
    out.r = h00 * r_[i] + h * h10 * dr_[i] + h01 * r_[i + 1] + h * h11 * dr_[i + 1];
    // r' from the (r', r'') Hermite cubic, r'' as its derivative.
    out.dr = h00 * dr_[i] + h * h10 * ddr_[i] + h01 * dr_[i + 1] + h * h11 * ddr_[i + 1];
    const double d00 = (6 * s2 - 6 * s) / h;
    const double d10 = 3 * s2 - 4 * s + 1;
    const double d01 = (-6 * s2 + 6 * s) / h;
    const double d11 = 3 * s2 - 2 * s;
    out.ddr = d00 * dr_[i] + d10 * ddr_[i] + d01 * dr_[i + 1] + d11 * ddr_[i + 1];
    return out;
}

double Profile::rho() const {
    if (kind_ != Kind::closed_form) throw std::logic_error("rho(): not a closed-form profile");
    return rho_;
}

int Profile::ell() const {
    if (kind_ == Kind::numeric) throw std::logic_error("ell(): numeric profile has no ell");
    return ell_;
}

void Profile::require_numeric() const {
    if (kind_ != Kind::numeric) throw std::logic_error("numeric accessor on non-numeric profile");
}

const std::vector<double>& Profile::grid() const {
    require_numeric();
    return t_;
}
const std::vector<double>& Profile::r_values() const {
    require_numeric();
    return r_;
}
const std::vector<double>& Profile::dr_values() const {
    require_numeric();
    return dr_;
}
const std::vector<double>& Profile::ddr_values() const {
    require_numeric();
    return ddr_;
}

double Profile::t_min() const noexcept {
    return kind_ == Kind::numeric ? t_.front() : 0.0;
}
double Profile::t_max() const noexcept {
    return kind_ == Kind::numeric ? t_.back() : std::numbers::pi / 2;
}

}  // namespace cphm
