#pragma once

#include <stdexcept>
#include <string>

#include "cphm/profile.hpp"
#include "cphm/space.hpp"
#include "cphm/tension.hpp"

namespace cphm {

// Knobs for the singular boundary value problem
//
//   r(0) = 0,   lim_{t -> pi/2} r(t) = k pi/2   (k odd),
//
// solved by shooting on the initial slope a = r'(0+).  Both endpoints of the
// ODE are singular: at t = 0 the solution family is a t + c3(a) t^3 + ...,
// and at t = pi/2 the linearization about r = m pi/2 has exponents {1, -(2p+1)},
// so forward integration alone cannot reach the right endpoint (the negative
// exponent amplifies any numerical contamination like (pi/2 - t)^-(2p+1)).
// integrate() therefore marches forward only to a matching point
// pi/2 - fit_offset, classifies the limit multiple m, and closes the gap with
// a backward leg seeded by the endpoint series at pi/2 - t_end_offset.
struct ShootingConfig {
    double t_start = 1e-6;       // forward leg starts here (series-initialized)
    double t_end_offset = 1e-6;  // backward leg starts at pi/2 - t_end_offset
    double abs_tol = 1e-12;      // absolute step-error control
    double rel_tol = 1e-10;      // relative step-error control
    int max_bisection_iters = 200;
    double a_lo = 0.5;  // default shooting bracket
    double a_hi = 2.0;

    // Internals of the two-sided scheme.
    double gap_tol = 1e-6;           // |r(pi/2-eps) - k pi/2| convergence bar
    double max_step = 1e-3;          // node spacing cap (keeps Hermite error low)
    double fit_offset = 0.35;        // matching point is pi/2 - fit_offset
    double classify_offset = 0.02;   // first limit-classification station
    double blowup_threshold = 50.0;  // |r| beyond this aborts as divergence

    // Throws std::invalid_argument when the invariants
    // 0 < t_start <= 1e-3, 0 < t_end_offset, t_start < pi/2 - t_end_offset,
    // positive tolerances/steps, classify_offset < fit_offset < pi/4 fail.
    void validate() const;
};

struct ShotResult {
    double slope = 0.0;      // shooting parameter a = r'(0+)
    Profile profile;         // numeric profile of the matched trajectory
    double terminal_value = 0.0;  // r(pi/2 - t_end_offset)
    double terminal_gap = 0.0;    // |terminal_value - k pi/2|
    bool converged = false;       // implies terminal_gap < cfg.gap_tol
    int iterations = 0;           // integrate() evaluations spent
};

// Stiff blow-up: step-size underflow or |r| crossing the blow-up threshold.
// Carries the last t the integrator reached.
class DivergenceError : public std::runtime_error {
  public:
    DivergenceError(const std::string& what, double last_t)
        : std::runtime_error(what), last_t_(last_t) {}
    double last_t() const noexcept { return last_t_; }

  private:
    double last_t_;
};

// Structural failures of the shooting scheme (bracket without a root,
// unclassifiable limit, mismatched forward/backward legs).
class ShootingError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SeriesStart {
    double r0 = 0.0;
    double dr0 = 0.0;
};

// Third-order local expansion at the left singular endpoint:
//   r(t0) = a t0 + c3 t0^3,  r'(t0) = a + 3 c3 t0^2,  c3 = a(1 - a^2)/3.
// Matching the ODE's Taylor expansion makes every (n, p) dependence cancel
// from c3, so params only participates in the signature; the same c3 governs
// the expansion in u = pi/2 - t at the right endpoint.  Requires 0 < t0 <= 1e-3.
SeriesStart series_start(const SpaceParams& params, double a, double t0);

// Integrates the trajectory with r(0) = 0, r'(0+) = a across (0, pi/2) by the
// matched two-sided scheme and returns a numeric Profile on
// [t_start, pi/2 - t_end_offset] whose r'' values are recomputed from the ODE
// at every node.  a = 0 returns the zero profile.
// Throws DivergenceError on blow-up and ShootingError when the trajectory
// cannot be classified or the legs cannot be matched.
Profile integrate(const SpaceParams& params, double a, const ShootingConfig& cfg);

// Root-finds the slope for the target winding: secant on
// a -> r_a(pi/2 - t_end_offset) - k pi/2 from the bracket endpoints, falling
// back to bisection when the secant stalls but the bracket straddles a sign
// change.  Returns converged = false (no throw) when the iteration budget is
// exhausted; throws ShootingError when the bracket excludes every root.
ShotResult shoot(const SpaceParams& params, const BoundaryData& boundary,
                 const ShootingConfig& cfg);

}  // namespace cphm
