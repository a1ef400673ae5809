#include "cphm/shooting.hpp"

#include <boost/numeric/odeint.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <utility>
#include <vector>

namespace cphm {

namespace {

using State = std::array<double, 2>;  // (r, r')

constexpr double kPi2 = std::numbers::pi / 2;
constexpr double kZeroSlope = 1e-12;      // below this the zero solution is returned
constexpr double kClassifyWindow = 0.35;  // acceptance radius around odd multiples
constexpr double kMinStep = 1e-16;        // below this a rejected step is divergence
constexpr long kMaxMarchSteps = 2'000'000;

struct ReducedOde {
    SpaceParams params;
    void operator()(const State& s, State& dsdt, double t) const {
        dsdt[0] = s[1];
        dsdt[1] = -ode_residual(params, ProfilePoint{s[0], s[1], 0.0}, t);
    }
};

struct Node {
    double t;
    double r;
    double v;
};

// Advances (t, state) to t_target in either direction with dopri5 under
// PI error control, appending each accepted step to *nodes when given.
// Step size is capped by cfg.max_step so recorded grids stay dense enough
// for the Hermite interpolation of Profile::numeric.
void march(const ReducedOde& ode, const ShootingConfig& cfg, double& t, State& state,
           double t_target, std::vector<Node>* nodes) {
    namespace odeint = boost::numeric::odeint;
    auto ctrl = odeint::make_controlled<odeint::runge_kutta_dopri5<State>>(cfg.abs_tol,
                                                                           cfg.rel_tol);
    const double dir = (t_target >= t) ? 1.0 : -1.0;
    // Seed the step with the distance to the nearest singular endpoint: the
    // coefficients vary on that scale.
    const double to_singular = std::min(t, kPi2 - t);
    double dt = dir * std::min(cfg.max_step, std::max(0.5 * to_singular, 1e-9));
    long steps = 0;
    while (dir * (t_target - t) > 0.0) {
        if (dir * dt > dir * (t_target - t)) {
            dt = t_target - t;
        }
        if (std::abs(dt) > cfg.max_step) {
            dt = dir * cfg.max_step;
        }
        if (ctrl.try_step(ode, state, t, dt) == odeint::success) {
            if (!std::isfinite(state[0]) || !std::isfinite(state[1]) ||
                std::abs(state[0]) > cfg.blowup_threshold) {
                throw DivergenceError("trajectory blow-up near t = " + std::to_string(t), t);
            }
            if (nodes != nullptr) {
                nodes->push_back({t, state[0], state[1]});
            }
        } else if (std::abs(dt) < kMinStep) {
            throw DivergenceError("step-size underflow near t = " + std::to_string(t), t);
        }
        if (++steps > kMaxMarchSteps) {
            throw DivergenceError("step budget exhausted near t = " + std::to_string(t), t);
        }
    }
}

// Nearest odd m with r close to m*pi/2.
long nearest_odd_multiple(double r) {
    const double q = r / kPi2;
    long m = std::lround(q);
    if (m % 2 == 0) {
        m += (q >= static_cast<double>(m)) ? 1 : -1;
    }
    return m;
}

}  // namespace

void ShootingConfig::validate() const {
    if (!(t_start > 0.0) || !(t_start <= 1e-3)) {
        throw std::invalid_argument("ShootingConfig: t_start must lie in (0, 1e-3]");
    }
    if (!(t_end_offset > 0.0) || !(t_start < kPi2 - t_end_offset)) {
        throw std::invalid_argument(
            "ShootingConfig: need 0 < t_start < pi/2 - t_end_offset with t_end_offset > 0");
    }
    if (!(abs_tol > 0.0) || !(rel_tol > 0.0)) {
        throw std::invalid_argument("ShootingConfig: step tolerances must be positive");
    }
    if (max_bisection_iters < 1) {
        throw std::invalid_argument("ShootingConfig: max_bisection_iters must be >= 1");
    }
    if (!(gap_tol > 0.0) || !(max_step > 0.0) || !(blowup_threshold > 0.0)) {
        throw std::invalid_argument(
            "ShootingConfig: gap_tol, max_step and blowup_threshold must be positive");
    }
    if (!(classify_offset > 0.0) || !(classify_offset < fit_offset) ||
        !(fit_offset < std::numbers::pi / 4)) {
        throw std::invalid_argument(
            "ShootingConfig: need 0 < classify_offset < fit_offset < pi/4");
    }
}

SeriesStart series_start(const SpaceParams&, double a, double t0) {
    if (!(t0 > 0.0) || !(t0 <= 1e-3)) {
        throw std::invalid_argument("series_start requires 0 < t0 <= 1e-3");
    }
    if (!std::isfinite(a)) {
        throw std::invalid_argument("series_start: slope must be finite");
    }
    const double c3 = a * (1.0 - a * a) / 3.0;
    return SeriesStart{a * t0 + c3 * t0 * t0 * t0, a + 3.0 * c3 * t0 * t0};
}

Profile integrate(const SpaceParams& params, double a, const ShootingConfig& cfg) {
    cfg.validate();
    if (!std::isfinite(a)) {
        throw std::invalid_argument("integrate: slope must be finite");
    }
    const double t_right = kPi2 - cfg.t_end_offset;

    if (std::abs(a) <= kZeroSlope) {
        constexpr int kZeroNodes = 129;
        std::vector<double> grid(kZeroNodes);
        std::vector<double> zeros(kZeroNodes, 0.0);
        for (int i = 0; i < kZeroNodes; ++i) {
            grid[i] = cfg.t_start +
                      (t_right - cfg.t_start) * static_cast<double>(i) / (kZeroNodes - 1);
        }
        return Profile::numeric(grid, zeros, zeros, zeros);
    }

    const ReducedOde ode{params};
    const double t_match = kPi2 - cfg.fit_offset;

    // Forward leg from the left endpoint series.
    const SeriesStart start = series_start(params, a, cfg.t_start);
    State state{start.r0, start.dr0};
    double t = cfg.t_start;
    std::vector<Node> forward;
    forward.push_back({t, state[0], state[1]});
    march(ode, cfg, t, state, t_match, &forward);
    const double r_match = state[0];
    const double v_match = state[1];

    // Classify the limit multiple m pi/2 on a throwaway continuation.  The
    // unstable right-endpoint mode grows like (pi/2 - t)^-(2p+1), so the probe
    // reads the plateau at staged offsets instead of pushing to pi/2 itself.
    long m = 0;
    bool classified = false;
    double probe_r = r_match;
    {
        State probe = state;
        double tp = t;
        for (const double offset : {cfg.classify_offset, 0.1 * cfg.classify_offset}) {
            march(ode, cfg, tp, probe, kPi2 - offset, nullptr);
            probe_r = probe[0];
            const long candidate = nearest_odd_multiple(probe_r);
            if (std::abs(probe_r - static_cast<double>(candidate) * kPi2) < kClassifyWindow) {
                m = candidate;
                classified = true;
                break;
            }
        }
    }
    if (!classified) {
        throw ShootingError(
            "limit classification failed: r(pi/2-) is not settling on an odd multiple of "
            "pi/2 (reached r = " +
            std::to_string(probe_r) + "); no bounded continuation for slope a = " +
            std::to_string(a));
    }
    const double r_star = static_cast<double>(m) * kPi2;

    // Backward leg seeded by the endpoint series r = r* + A u + c3(A) u^3,
    // u = pi/2 - t; secant on the amplitude A matches position at t_match.
    auto backward_eval = [&](double amp, std::vector<Node>* nodes, State* end_state) {
        const double c3 = amp * (1.0 - amp * amp) / 3.0;
        const double u = cfg.t_end_offset;
        State s{r_star + amp * u + c3 * u * u * u, -(amp + 3.0 * c3 * u * u)};
        double tb = t_right;
        if (nodes != nullptr) {
            nodes->push_back({tb, s[0], s[1]});
        }
        march(ode, cfg, tb, s, t_match, nodes);
        if (end_state != nullptr) {
            *end_state = s;
        }
        return s[0] - r_match;
    };

    double a0 = (r_match - r_star) / cfg.fit_offset;
    double a1 = a0 + std::max(0.05 * std::abs(a0), 1e-3);
    double f0 = backward_eval(a0, nullptr, nullptr);
    double f1 = backward_eval(a1, nullptr, nullptr);
    double amp_best = (std::abs(f0) <= std::abs(f1)) ? a0 : a1;
    double f_best = (std::abs(f0) <= std::abs(f1)) ? f0 : f1;
    const double f_tol = 1e-12 * std::max(1.0, std::abs(r_star));
    for (int iter = 0; iter < 80 && std::abs(f_best) > f_tol; ++iter) {
        const double denom = f1 - f0;
        if (denom == 0.0 || !std::isfinite(denom)) {
            break;
        }
        const double a2 = a1 - f1 * (a1 - a0) / denom;
        if (!std::isfinite(a2)) {
            break;
        }
        a0 = a1;
        f0 = f1;
        a1 = a2;
        f1 = backward_eval(a1, nullptr, nullptr);
        if (std::abs(f1) < std::abs(f_best)) {
            amp_best = a1;
            f_best = f1;
        }
    }
    if (std::abs(f_best) > f_tol && std::abs(f_best) > 1e-9) {
        throw ShootingError("backward matching failed: position mismatch " +
                            std::to_string(f_best) + " at the matching point");
    }

    std::vector<Node> backward;
    State backward_end{};
    backward_eval(amp_best, &backward, &backward_end);
    const double v_mismatch = std::abs(backward_end[1] - v_match);
    if (v_mismatch > 1e-6 * std::max(1.0, std::abs(v_match))) {
        throw ShootingError(
            "forward/backward velocity mismatch " + std::to_string(v_mismatch) +
            " at the matching point: the trajectory is off the bounded manifold");
    }

    // Ascending grid: forward nodes, then the backward nodes reversed, with
    // the backward copy of the matching point dropped.
    std::vector<double> grid, r_vals, dr_vals, ddr_vals;
    grid.reserve(forward.size() + backward.size());
    r_vals.reserve(grid.capacity());
    dr_vals.reserve(grid.capacity());
    ddr_vals.reserve(grid.capacity());
    auto push = [&](const Node& node) {
        grid.push_back(node.t);
        r_vals.push_back(node.r);
        dr_vals.push_back(node.v);
        ddr_vals.push_back(-ode_residual(params, ProfilePoint{node.r, node.v, 0.0}, node.t));
    };
    for (const Node& node : forward) {
        push(node);
    }
    for (auto it = backward.rbegin(); it != backward.rend(); ++it) {
        if (it->t <= t_match + 1e-12) {
            continue;
        }
        push(*it);
    }
    return Profile::numeric(std::move(grid), std::move(r_vals), std::move(dr_vals),
                            std::move(ddr_vals));
}

ShotResult shoot(const SpaceParams& params, const BoundaryData& boundary,
                 const ShootingConfig& cfg) {
    cfg.validate();
    const double target = static_cast<double>(boundary.k) * kPi2;
    int evals = 0;

    struct Eval {
        double a = 0.0;
        Profile profile;
        double terminal = 0.0;
        double gap = 0.0;  // signed
    };
    auto run = [&](double slope) {
        ++evals;
        Profile prof = integrate(params, slope, cfg);
        const double terminal = prof.eval(prof.t_max()).r;
        return Eval{slope, std::move(prof), terminal, terminal - target};
    };
    auto report = [&](const Eval& e, bool converged) {
        return ShotResult{e.a,       e.profile, e.terminal, std::abs(e.gap),
                          converged, evals};
    };

    Eval lo = run(cfg.a_lo);
    Eval hi = run(cfg.a_hi);
    Eval best = (std::abs(lo.gap) <= std::abs(hi.gap)) ? lo : hi;
    if (std::abs(best.gap) < cfg.gap_tol) {
        return report(best, true);
    }
    const bool straddles = (lo.gap < 0.0) != (hi.gap < 0.0);
    const double span = std::abs(cfg.a_hi - cfg.a_lo);

    // Secant first: it exploits the smooth dependence of the terminal value
    // on the slope and needs no sign change.
    Eval s0 = lo;
    Eval s1 = hi;
    int used = 0;
    bool secant_stalled = false;
    for (; used < cfg.max_bisection_iters; ++used) {
        const double denom = s1.gap - s0.gap;
        if (denom == 0.0 || !std::isfinite(denom)) {
            secant_stalled = true;
            break;
        }
        const double next = s1.a - s1.gap * (s1.a - s0.a) / denom;
        if (!std::isfinite(next) || std::abs(next - cfg.a_lo) > 100.0 * (span + 1.0) ||
            std::abs(next - cfg.a_hi) > 100.0 * (span + 1.0)) {
            secant_stalled = true;  // escaping iterates: the target is unreachable
            break;
        }
        Eval trial = run(next);
        if (std::abs(trial.gap) < std::abs(best.gap)) {
            best = trial;
        }
        s0 = std::move(s1);
        s1 = std::move(trial);
        if (std::abs(best.gap) < cfg.gap_tol) {
            return report(best, true);
        }
    }
    if (!secant_stalled) {
        return report(best, false);  // iteration budget exhausted: honest report
    }
    if (!straddles) {
        throw ShootingError("shooting bracket [" + std::to_string(cfg.a_lo) + ", " +
                            std::to_string(cfg.a_hi) +
                            "] does not straddle the target k pi/2 for k = " +
                            std::to_string(boundary.k));
    }

    // Bisection fallback on the sign change preserved from the bracket.
    const bool lo_negative = (lo.gap < 0.0);
    Eval neg = lo_negative ? std::move(lo) : std::move(hi);
    Eval pos = lo_negative ? std::move(hi) : std::move(lo);
    for (int iter = 0; iter < cfg.max_bisection_iters; ++iter) {
        const double mid = 0.5 * (neg.a + pos.a);
        Eval trial = run(mid);
        if (std::abs(trial.gap) < std::abs(best.gap)) {
            best = trial;
        }
        if (std::abs(best.gap) < cfg.gap_tol) {
            return report(best, true);
        }
        if (trial.gap < 0.0) {
            neg = std::move(trial);
        } else {
            pos = std::move(trial);
        }
        if (std::abs(pos.a - neg.a) < 1e-15 * std::max(1.0, std::abs(neg.a))) {
            break;
        }
    }
    return report(best, false);
}

}  // namespace cphm
