#pragma once

#include <vector>

namespace cphm {

struct ProfilePoint {
    double r = 0.0;
    double dr = 0.0;
    double ddr = 0.0;
};

// A profile r : (0, pi/2) -> R carrying two derivatives.  Closed-form
// profiles are the arctan family r(t) = arctan(rho tan t) + ell*pi with the
// exact derivative identities; constant profiles are kappa_ell = ell*pi/2;
// numeric profiles carry integrator output on a node grid and interpolate
// between nodes with cubic Hermite polynomials (r from (r, r'), r' from
// (r', r''), r'' as the derivative of the latter).
class Profile {
  public:
    enum class Kind { closed_form, constant, numeric };

    Profile() : Profile(Kind::constant, 0.0, 0) {}

    // rho = 0 is rejected: that degenerate member is the constant profile.
    static Profile closed_form(double rho, int ell = 0);
    static Profile constant(int ell);
    // Nodes must be >= 2, strictly increasing and strictly inside (0, pi/2);
    // all arrays must have equal length.
    static Profile numeric(std::vector<double> t, std::vector<double> r,
                           std::vector<double> dr, std::vector<double> ddr);

    // Throws std::domain_error outside (0, pi/2); std::out_of_range when a
    // numeric profile is evaluated outside its node range.
    ProfilePoint eval(double t) const;

    Kind kind() const noexcept { return kind_; }
    double rho() const;  // closed-form only
    int ell() const;     // closed-form or constant only

    // Numeric accessors; throw std::logic_error for other kinds.
    const std::vector<double>& grid() const;
    const std::vector<double>& r_values() const;
    const std::vector<double>& dr_values() const;
    const std::vector<double>& ddr_values() const;

    // Evaluable t-range: the node hull for numeric profiles, (0, pi/2)
    // otherwise (open interval endpoints returned for reference).
    double t_min() const noexcept;
    double t_max() const noexcept;

  private:
    Profile(Kind kind, double rho, int ell) : kind_(kind), rho_(rho), ell_(ell) {}

    void require_numeric() const;

    Kind kind_;
    double rho_ = 0.0;
    int ell_ = 0;
    std::vector<double> t_, r_, dr_, ddr_;
};

}  // namespace cphm
