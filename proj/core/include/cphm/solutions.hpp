#pragma once

#include <optional>

#include "cphm/profile.hpp"

namespace cphm {

// Parameters of the explicit solution family r(t) = arctan(rho tan t) + ell*pi.
// rho = 0 is allowed here (the family member degenerates to the constant
// ell*pi, still a solution of the reduced ODE); boundary-value use requires
// rho != 0 and is enforced by Profile::closed_form.
struct FamilyParam {
    double rho = 1.0;
    int ell = 0;
};

struct FamilyValues {
    double r = 0.0;
    double dr = 0.0;
    double ddr = 0.0;
    double sin2r = 0.0;
    double cos2r = 0.0;
};

// Closed forms with w = rho^2 sin^2 t + cos^2 t:
//   r      = arctan(rho tan t) + ell*pi
//   r'     = rho / w
//   r''    = rho (1 - rho^2) sin 2t / w^2
//   sin 2r = rho sin 2t / w
//   cos 2r = (cos^2 t - rho^2 sin^2 t) / w
// sin2r / cos2r come from the rational identities, not from r.
FamilyValues family_eval(const FamilyParam& fp, double t);

// Residual of the first-order holomorphicity equation
//   r'(1 + tan^2 r) tan t - (1 + tan^2 t) tan r,
// reported raw.  Returns nullopt at a pole of tan r (|cos r| ~ 0).
std::optional<double> holomorphicity_residual(const Profile& profile, double t);

// sup over t in [delta, pi/2) of |r_{rho,0}(t) - sign(rho) pi/2|.  The family
// member is monotone, so the sup is attained at t = delta and equals
// pi/2 - arctan(|rho| tan delta).
double convergence_gap(double rho, double delta);

// d r_{rho,0} / d rho = tan t / (1 + rho^2 tan^2 t); the family's
// deformation field and the spectral zero-mode candidate.
double deformation_mode(double rho, double t) noexcept;

}  // namespace cphm
