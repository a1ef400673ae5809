#include "cphm/tension.hpp"

#include "doctest.h"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kPi2 = std::numbers::pi / 2;

std::vector<double> interior_grid(int count, double margin = 1e-3) {
    std::vector<double> grid(count);
    for (int i = 0; i < count; ++i)
        grid[i] = margin + (kPi2 - 2 * margin) * i / (count - 1);
    return grid;
}

double hand_residual(const cphm::SpaceParams& sp, const cphm::ProfilePoint& pt, double t) {
    const double coeff1 = (2.0 * sp.n - 2.0 * sp.p - 1.0) / std::tan(t) -
                          (2.0 * sp.p + 1.0) * std::tan(t);
    const double coeff0 =
        sp.p / (std::cos(t) * std::cos(t)) - (sp.n - sp.p - 1.0) / (std::sin(t) * std::sin(t));
    const double s2 = std::sin(2.0 * t);
    return pt.ddr + coeff1 * pt.dr + coeff0 * std::sin(2.0 * pt.r) -
           std::sin(4.0 * pt.r) / (s2 * s2);
}

}  // namespace

TEST_SUITE("tension") {

TEST_CASE("identity and constant backgrounds solve the ODE") {
    const auto sp = cphm::SpaceParams::create(3, 1);
    const cphm::Profile identity = cphm::Profile::closed_form(1.0, 0);
    const cphm::Profile kappa1 = cphm::Profile::constant(1);
    for (const double t : interior_grid(60, 0.05)) {
        CHECK(std::abs(cphm::ode_residual(sp, identity, t)) < 1e-10);
        CHECK(std::abs(cphm::ode_residual(sp, kappa1, t)) < 1e-12);
    }
    // kappa_0 kills every term identically, not just to roundoff.
    const cphm::Profile kappa0 = cphm::Profile::constant(0);
    CHECK(cphm::ode_residual(sp, kappa0, 0.7) == 0.0);
    CHECK(cphm::ode_residual_via_traces(sp, kappa0, 0.7) == 0.0);
}

TEST_CASE("family member example") {
    const auto sp = cphm::SpaceParams::create(3, 1);
    const cphm::Profile prof = cphm::Profile::closed_form(-2.0, 0);
    CHECK(std::abs(cphm::ode_residual(sp, prof, 0.7)) < 1e-10);
}

TEST_CASE("point overload matches the printed coefficients") {
    const auto sp = cphm::SpaceParams::create(4, 2);
    const cphm::ProfilePoint pt{0.25, 1.0, 2.0};
    CHECK(cphm::ode_residual(sp, pt, 0.5) ==
          doctest::Approx(hand_residual(sp, pt, 0.5)).epsilon(1e-13));
    CHECK_THROWS_AS(cphm::ode_residual(sp, pt, 0.0), std::domain_error);
}

TEST_CASE("numeric profile residual against an explicit non-solution") {
    // r = t^2 sampled exactly (quadratic data, so the Hermite interpolant is
    // exact); the residual must agree with the phase-space formula.
    const auto sp = cphm::SpaceParams::create(3, 1);
    std::vector<double> t, r, dr, ddr;
    for (double x = 0.45; x <= 0.55 + 1e-12; x += 1e-3) {
        t.push_back(x);
        r.push_back(x * x);
        dr.push_back(2 * x);
        ddr.push_back(2.0);
    }
    const auto prof = cphm::Profile::numeric(t, r, dr, ddr);
    const double via_profile = cphm::ode_residual(sp, prof, 0.5);
    const double direct = hand_residual(sp, cphm::ProfilePoint{0.25, 1.0, 2.0}, 0.5);
    CHECK(via_profile == doctest::Approx(direct).epsilon(1e-10));
    CHECK(std::abs(direct) > 1e-2);  // genuinely not a solution
}

TEST_CASE("coefficient and trace evaluation paths agree") {
    for (const auto [n, p] : {std::pair{2, 0}, {3, 1}, {5, 2}}) {
        const auto sp = cphm::SpaceParams::create(n, p);
        for (const double rho : {1.0, -1.0, 3.0}) {
            const cphm::Profile prof = cphm::Profile::closed_form(rho, 0);
            for (const double t : interior_grid(100)) {
                const double a = cphm::ode_residual(sp, prof, t);
                const double b = cphm::ode_residual_via_traces(sp, prof, t);
                CHECK(std::abs(a - b) < 1e-9);
            }
        }
    }
}

TEST_CASE("every family member solves the ODE in both evaluation paths") {
    const double rhos[] = {0.1, -0.1, 0.5, -0.5, 1.0, -1.0, 2.0, -2.0, 10.0, -10.0};
    for (const auto [n, p] : {std::pair{2, 0}, {3, 1}, {4, 2}, {5, 0}, {7, 3}}) {
        const auto sp = cphm::SpaceParams::create(n, p);
        for (const double rho : rhos) {
            for (const int ell : {-1, 0, 1}) {
                const cphm::Profile prof = cphm::Profile::closed_form(rho, ell);
                double worst = 0.0, worst_traces = 0.0;
                // Margin 5e-3: the ell*pi offset leaves sin 2r with an
                // absolute ~ulp(pi) error that 1/sin^2 t amplifies to ~3e-9
                // by t = 1e-3.
                for (const double t : interior_grid(200, 5e-3)) {
                    worst = std::max(worst, std::abs(cphm::ode_residual(sp, prof, t)));
                    worst_traces = std::max(
                        worst_traces, std::abs(cphm::ode_residual_via_traces(sp, prof, t)));
                }
                CHECK(worst < 1e-9);
                CHECK(worst_traces < 1e-9);
            }
        }
    }
}

TEST_CASE("residual is pi-periodic in the winding offset") {
    const auto sp = cphm::SpaceParams::create(4, 1);
    const cphm::Profile base = cphm::Profile::closed_form(2.0, 0);
    for (const int ell : {-1, 1}) {
        const cphm::Profile lifted = cphm::Profile::closed_form(2.0, ell);
        // Margin 0.01 keeps the csc^2-amplified rounding of the pi shift
        // under the 1e-10 bar.
        for (const double t : interior_grid(50, 0.01)) {
            CHECK(std::abs(cphm::ode_residual(sp, lifted, t) -
                           cphm::ode_residual(sp, base, t)) < 1e-10);
        }
    }
}

TEST_CASE("admissible windings") {
    CHECK(cphm::admissible_k(1));
    CHECK(cphm::admissible_k(-3));
    CHECK_FALSE(cphm::admissible_k(0));
    CHECK_FALSE(cphm::admissible_k(2));
    CHECK_NOTHROW(cphm::BoundaryData::create(-3));
    CHECK_THROWS_AS(cphm::BoundaryData::create(2), std::invalid_argument);
    CHECK_THROWS_AS(cphm::BoundaryData::create(0), std::invalid_argument);
}

TEST_CASE("boundary gap examples") {
    const auto k1 = cphm::BoundaryData::create(1);

    const auto [l5, r5] = cphm::boundary_gap(cphm::Profile::closed_form(5.0), k1, 1e-4);
    CHECK(l5 < 1e-3);
    CHECK(r5 < 1e-3);

    const auto [lc, rc] = cphm::boundary_gap(cphm::Profile::constant(1), k1, 0.01);
    CHECK(lc == doctest::Approx(kPi2).epsilon(1e-14));
    CHECK(rc == 0.0);

    const auto [li, ri] = cphm::boundary_gap(cphm::Profile::closed_form(1.0), k1, 0.01);
    CHECK(li == doctest::Approx(0.01).epsilon(1e-10));
    CHECK(ri == doctest::Approx(0.01).epsilon(1e-10));
}

TEST_CASE("boundary gap clamps to a numeric node hull") {
    const auto k1 = cphm::BoundaryData::create(1);
    std::vector<double> t, r, dr, ddr;
    const cphm::Profile closed = cphm::Profile::closed_form(1.0);
    for (double x = 0.3; x <= 0.9 + 1e-12; x += 0.01) {
        const auto pt = closed.eval(x);
        t.push_back(x);
        r.push_back(pt.r);
        dr.push_back(pt.dr);
        ddr.push_back(pt.ddr);
    }
    const auto prof = cphm::Profile::numeric(t, r, dr, ddr);
    const auto [left, right] = cphm::boundary_gap(prof, k1, 1e-4);
    CHECK(left == doctest::Approx(0.3).epsilon(1e-12));   // sampled at t = 0.3
    CHECK(right == doctest::Approx(kPi2 - 0.9).epsilon(1e-9));
    CHECK_THROWS_AS(cphm::boundary_gap(prof, k1, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(cphm::boundary_gap(prof, k1, 1.0), std::invalid_argument);
}

TEST_CASE("degree table cells") {
    using cphm::Parity;
    // j even rows: k when both codimensions are odd, +1 otherwise.
    CHECK(cphm::brouwer_degree(3, 5, 2, 3, Parity::even) == 3);
    CHECK(cphm::brouwer_degree(3, 4, 2, 3, Parity::even) == 1);
    CHECK(cphm::brouwer_degree(4, 3, 2, 3, Parity::even) == 1);
    CHECK(cphm::brouwer_degree(4, 6, 2, 3, Parity::even) == 1);
    // j odd rows.
    CHECK(cphm::brouwer_degree(3, 5, 2, 2, Parity::odd) == 2);
    CHECK(cphm::brouwer_degree(3, 4, 2, 2, Parity::odd) == 1);
    CHECK(cphm::brouwer_degree(4, 6, 2, 2, Parity::odd) == 0);
    CHECK(cphm::brouwer_degree(4, 6, 4, 3, Parity::odd) == 1);
    CHECK(cphm::brouwer_degree(4, 3, 2, 2, Parity::odd) == -1);
    CHECK(cphm::brouwer_degree(4, 3, 4, 3, Parity::odd) == -1);
    CHECK(cphm::brouwer_degree(4, 3, 8, 5, Parity::odd) == 1);
    CHECK(cphm::brouwer_degree(4, 6, 8, 5, Parity::odd) == 1);
}

TEST_CASE("degree of the cohomogeneity-one spaces is +1") {
    using cphm::Parity;
    // codim0 = 2(n-p), codim1 = 2(p+1) are both even and |W| = 2, so every
    // even-j winding lands in the +1 cell.
    for (const auto [n, p] : {std::pair{2, 0}, {3, 1}, {5, 2}, {7, 3}}) {
        const auto sp = cphm::SpaceParams::create(n, p);
        CHECK(cphm::brouwer_degree(sp.codim0(), sp.codim1(), sp.weyl_order, 1, Parity::even) == 1);
        CHECK(cphm::brouwer_degree(sp.codim0(), sp.codim1(), sp.weyl_order, 3, Parity::even) == 1);
    }
}

TEST_CASE("degree consistency violations throw") {
    using cphm::Parity;
    CHECK_THROWS_AS(cphm::brouwer_degree(3, 5, 2, 2, Parity::even), std::invalid_argument);
    CHECK_THROWS_AS(cphm::brouwer_degree(3, 5, 4, 2, Parity::odd), std::invalid_argument);
    CHECK_THROWS_AS(cphm::brouwer_degree(0, 5, 2, 3, Parity::even), std::invalid_argument);
    CHECK_THROWS_AS(cphm::brouwer_degree(3, 0, 2, 3, Parity::even), std::invalid_argument);
    CHECK_THROWS_AS(cphm::brouwer_degree(3, 5, 0, 3, Parity::even), std::invalid_argument);
}

}  // TEST_SUITE
