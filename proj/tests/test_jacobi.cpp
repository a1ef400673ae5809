#include "cphm/jacobi.hpp"

#include "doctest.h"

#include <cmath>
#include <initializer_list>
#include <stdexcept>

namespace {

double binomial(int top, int bottom) {
    double acc = 1.0;
    for (int i = 1; i <= bottom; ++i) acc *= static_cast<double>(top - bottom + i) / i;
    return acc;
}

}  // namespace

TEST_SUITE("jacobi") {

TEST_CASE("degree zero is the constant one") {
    for (const double y : {-1.0, -0.3, 0.0, 0.8, 1.0}) {
        CHECK(cphm::jacobi_eval(cphm::JacobiParams::create(2.0, 2.0, 0), y) == 1.0);
        CHECK(cphm::jacobi_eval(cphm::JacobiParams::create(0.5, 3.0, 0), y) == 1.0);
    }
}

TEST_CASE("degree one in the symmetric case") {
    // P_1^{(a,a)}(y) = (a+1) y.
    const auto jp = cphm::JacobiParams::create(2.0, 2.0, 1);
    CHECK(cphm::jacobi_eval(jp, 0.5) == doctest::Approx(1.5).epsilon(1e-14));
    CHECK(cphm::jacobi_eval(jp, -0.2) == doctest::Approx(-0.6).epsilon(1e-14));
}

TEST_CASE("value at the right endpoint is a binomial coefficient") {
    // P_j^{(a,b)}(1) = C(j + a, j) for integer a.
    CHECK(cphm::jacobi_eval(cphm::JacobiParams::create(2.0, 2.0, 4), 1.0) ==
          doctest::Approx(binomial(6, 4)).epsilon(1e-13));
    CHECK(cphm::jacobi_eval(cphm::JacobiParams::create(3.0, 1.0, 5), 1.0) ==
          doctest::Approx(binomial(8, 5)).epsilon(1e-13));
}

TEST_CASE("symmetric polynomials have definite parity") {
    const auto jp = cphm::JacobiParams::create(3.0, 3.0, 5);
    for (const double y : {0.1, 0.35, 0.7, 0.95}) {
        CHECK(cphm::jacobi_eval(jp, -y) ==
              doctest::Approx(-cphm::jacobi_eval(jp, y)).epsilon(1e-12));
    }
}

TEST_CASE("derivative matches the shifted-parameter identity") {
    for (const int j : {1, 3, 6}) {
        const auto jp = cphm::JacobiParams::create(2.0, 3.0, j);
        const auto shifted = cphm::JacobiParams::create(3.0, 4.0, j - 1);
        for (const double y : {-0.8, -0.1, 0.4, 0.9}) {
            const double expected =
                0.5 * (j + 2.0 + 3.0 + 1.0) * cphm::jacobi_eval(shifted, y);
            CHECK(cphm::jacobi_derivative(jp, y) ==
                  doctest::Approx(expected).epsilon(1e-12));
        }
    }
}

TEST_CASE("second derivative matches a finite difference of the first") {
    const auto jp = cphm::JacobiParams::create(2.0, 2.0, 5);
    const double h = 1e-6;
    for (const double y : {-0.5, 0.0, 0.6}) {
        const double fd =
            (cphm::jacobi_derivative(jp, y + h) - cphm::jacobi_derivative(jp, y - h)) / (2 * h);
        CHECK(cphm::jacobi_second_derivative(jp, y) == doctest::Approx(fd).epsilon(1e-6));
    }
}

TEST_CASE("defining ODE residual by finite differences") {
    for (const int n : {3, 5, 7}) {
        const double ab = (n + 1) / 2.0;
        for (int j = 0; j <= 10; ++j) {
            const auto jp = cphm::JacobiParams::create(ab, ab, j);
            for (int i = 0; i < 20; ++i) {
                const double y = -0.9 + 1.8 * i / 19.0;
                CHECK(std::abs(cphm::jacobi_ode_residual_fd(jp, y)) < 1e-8);
            }
        }
    }
    // Asymmetric parameters go through the same identity.
    const auto jp = cphm::JacobiParams::create(1.5, 2.5, 7);
    CHECK(std::abs(cphm::jacobi_ode_residual_fd(jp, 0.33)) < 1e-8);
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(cphm::JacobiParams::create(-1.0, 2.0, 3), std::invalid_argument);
    CHECK_THROWS_AS(cphm::JacobiParams::create(2.0, -1.5, 3), std::invalid_argument);
    CHECK_THROWS_AS(cphm::JacobiParams::create(2.0, 2.0, -1), std::invalid_argument);
    CHECK_THROWS_AS(cphm::JacobiParams::create(2.0, 2.0, 51), std::invalid_argument);
    CHECK_NOTHROW(cphm::JacobiParams::create(-0.5, -0.5, 50));

    const auto jp = cphm::JacobiParams::create(2.0, 2.0, 3);
    CHECK_THROWS_AS(cphm::jacobi_eval(jp, 1.5), std::domain_error);
    CHECK_THROWS_AS(cphm::jacobi_eval(jp, -1.0000001), std::domain_error);
    CHECK_THROWS_AS(cphm::jacobi_ode_residual_fd(jp, 1.0), std::domain_error);
    CHECK_THROWS_AS(cphm::jacobi_ode_residual_fd(jp, -0.99999), std::domain_error);
}

}  // TEST_SUITE
