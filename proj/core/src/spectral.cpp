#include "cphm/spectral.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

namespace cphm {

namespace {

constexpr double kPi2 = std::numbers::pi / 2;

void require_valid(const SturmLiouvilleProblem& problem) {
    if (problem.grid_size < 16) {
        throw std::invalid_argument("SturmLiouvilleProblem: grid_size must be >= 16");
    }
    if (!(problem.eps > 0.0) || !(problem.eps < std::numbers::pi / 4)) {
        throw std::invalid_argument("SturmLiouvilleProblem: eps must lie in (0, pi/4)");
    }
}

double grid_spacing(const SturmLiouvilleProblem& problem) {
    return (kPi2 - 2.0 * problem.eps) / (problem.grid_size + 1);
}

// V_eff of the Liouville normal form -eta'' + V_eff eta = lambda eta.
double effective_potential(const SturmLiouvilleProblem& problem, double t) {
    const double m0 = 2.0 * problem.params.n - 2.0 * problem.params.p - 1.0;
    const double m1 = 2.0 * problem.params.p + 1.0;
    const double s = std::sin(t);
    const double c = std::cos(t);
    const double log_w_prime = m0 * (c / s) - m1 * (s / c);
    const double log_w_second = -m0 / (s * s) - m1 / (c * c);
    return potential(problem.params, problem.profile, t) + 0.25 * log_w_prime * log_w_prime +
           0.5 * log_w_second;
}

Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solve_tridiagonal(
    const SturmLiouvilleProblem& problem, bool with_vectors) {
    const SymTridiagonal tri = discretize(problem);
    const auto n = static_cast<Eigen::Index>(tri.diag.size());
    Eigen::VectorXd diag(n);
    Eigen::VectorXd sub(n - 1);
    for (Eigen::Index i = 0; i < n; ++i) {
        diag[i] = tri.diag[static_cast<std::size_t>(i)];
    }
    for (Eigen::Index i = 0; i + 1 < n; ++i) {
        sub[i] = tri.off[static_cast<std::size_t>(i)];
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(
        diag, sub, with_vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error(
            "eigensolver failed to converge on the tridiagonal problem (grid_size=" +
            std::to_string(problem.grid_size) + ", info=" + std::to_string(solver.info()) +
            ")");
    }
    return solver;
}

}  // namespace

SturmLiouvilleProblem SturmLiouvilleProblem::create(SpaceParams params, Profile profile,
                                                    int grid_size, double eps) {
    SturmLiouvilleProblem problem{params, std::move(profile), grid_size, eps};
    require_valid(problem);
    return problem;
}

double weight(const SpaceParams& params, double t) {
    detail::require_interior(t);
    const double m0 = 2.0 * params.n - 2.0 * params.p - 1.0;
    const double m1 = 2.0 * params.p + 1.0;
    return std::pow(std::sin(t), m0) * std::pow(std::cos(t), m1);
}

double weight_log_derivative(const SpaceParams& params, double t) {
    detail::require_interior(t);
    const double m0 = 2.0 * params.n - 2.0 * params.p - 1.0;
    const double m1 = 2.0 * params.p + 1.0;
    return m0 * (std::cos(t) / std::sin(t)) - m1 * (std::sin(t) / std::cos(t));
}

double potential(const SpaceParams& params, const Profile& profile, double t) {
    detail::require_interior(t);
    const double r = profile.eval(t).r;
    const double c2r = std::cos(2.0 * r);
    const double c4r = std::cos(4.0 * r);
    const double s = std::sin(t);
    const double c = std::cos(t);
    const double s2 = std::sin(2.0 * t);
    return 2.0 * (params.n - params.p - 1.0) * c2r / (s * s) - 2.0 * params.p * c2r / (c * c) +
           4.0 * c4r / (s2 * s2);
}

Eigen::MatrixXd SymTridiagonal::dense() const {
    const auto n = static_cast<Eigen::Index>(diag.size());
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        m(i, i) = diag[static_cast<std::size_t>(i)];
    }
    for (Eigen::Index i = 0; i + 1 < n; ++i) {
        m(i + 1, i) = off[static_cast<std::size_t>(i)];
        m(i, i + 1) = off[static_cast<std::size_t>(i)];
    }
    return m;
}

SymTridiagonal discretize(const SturmLiouvilleProblem& problem) {
    require_valid(problem);
    const int n = problem.grid_size;
    const double h = grid_spacing(problem);
    SymTridiagonal tri;
    tri.diag.resize(static_cast<std::size_t>(n));
    tri.off.assign(static_cast<std::size_t>(n - 1), -1.0 / (h * h));
    for (int i = 0; i < n; ++i) {
        const double t = problem.eps + (i + 1) * h;
        tri.diag[static_cast<std::size_t>(i)] = 2.0 / (h * h) + effective_potential(problem, t);
    }
    return tri;
}

SpectrumResult eigen_smallest(const SturmLiouvilleProblem& problem, int count, double tol) {
    if (count < 0 || count > problem.grid_size / 4) {
        throw std::invalid_argument("eigen_smallest: count must lie in [0, grid_size/4]");
    }
    if (!(tol >= 0.0)) {
        throw std::invalid_argument("eigen_smallest: tol must be non-negative");
    }
    const auto solver = solve_tridiagonal(problem, count > 0);
    const Eigen::VectorXd& all = solver.eigenvalues();  // ascending
    const int n = problem.grid_size;
    const double h = grid_spacing(problem);

    SpectrumResult result;
    result.tol = tol;
    for (int i = 0; i < n; ++i) {
        if (all[i] < -tol) {
            ++result.index;
        } else if (std::abs(all[i]) <= tol) {
            ++result.nullity;
        }
    }
    result.grid.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        result.grid[static_cast<std::size_t>(i)] = problem.eps + (i + 1) * h;
    }
    result.eigenvalues.assign(all.data(), all.data() + count);
    result.eigenvectors.resize(static_cast<std::size_t>(count));
    const double inv_sqrt_h = 1.0 / std::sqrt(h);
    for (int k = 0; k < count; ++k) {
        auto& xi = result.eigenvectors[static_cast<std::size_t>(k)];
        xi.resize(static_cast<std::size_t>(n));
        // eta is unit in l2; xi = eta / (sqrt(h) sqrt(w)) is unit in L2(w dt).
        for (int i = 0; i < n; ++i) {
            const double t = result.grid[static_cast<std::size_t>(i)];
            xi[static_cast<std::size_t>(i)] =
                solver.eigenvectors()(i, k) * inv_sqrt_h / std::sqrt(weight(problem.params, t));
        }
        std::size_t peak = 0;
        for (std::size_t i = 1; i < xi.size(); ++i) {
            if (std::abs(xi[i]) > std::abs(xi[peak])) {
                peak = i;
            }
        }
        if (xi[peak] < 0.0) {
            for (double& v : xi) {
                v = -v;
            }
        }
    }
    return result;
}

std::vector<double> eigenvalues_smallest(const SturmLiouvilleProblem& problem, int count) {
    if (count < 0 || count > problem.grid_size / 4) {
        throw std::invalid_argument("eigenvalues_smallest: count must lie in [0, grid_size/4]");
    }
    const auto solver = solve_tridiagonal(problem, false);
    return std::vector<double>(solver.eigenvalues().data(),
                               solver.eigenvalues().data() + count);
}

std::vector<double> eigenvalues_refined(const SpaceParams& params, const Profile& profile,
                                        int count, int grid_size, double eps) {
    auto lowest = [&](int n, double e) {
        return eigenvalues_smallest(SturmLiouvilleProblem::create(params, profile, n, e),
                                    count);
    };
    // Richardson over the O(h^2) grid error at a fixed wall offset e.
    auto in_grid = [&](double e) {
        const auto coarse = lowest(grid_size, e);
        const auto fine = lowest(2 * grid_size, e);
        std::vector<double> out(coarse.size());
        for (std::size_t i = 0; i < out.size(); ++i) {
            out[i] = (4.0 * fine[i] - coarse[i]) / 3.0;
        }
        return out;
    };
    const auto at_eps = in_grid(eps);
    const auto at_half = in_grid(0.5 * eps);
    std::vector<double> out(at_eps.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = 2.0 * at_half[i] - at_eps[i];  // removes the O(eps) wall term
    }
    return out;
}

double closed_spectrum(int n, int j) {
    if (n < 1 || n % 2 == 0) {
        throw std::invalid_argument("closed_spectrum: n must be a positive odd integer");
    }
    if (j < 0) {
        throw std::invalid_argument("closed_spectrum: j must be non-negative");
    }
    return 4.0 * j * (j + n + 2.0);
}

double zero_mode_residual(const SpaceParams& params, double rho, double t) {
    detail::require_interior(t);
    if (!std::isfinite(rho)) {
        throw std::invalid_argument("zero_mode_residual: rho must be finite");
    }
    const double s = std::sin(t);
    const double c = std::cos(t);
    const double s2 = std::sin(2.0 * t);
    const double c2 = std::cos(2.0 * t);
    const double den = rho * rho * s * s + c * c;

    // phi = d/drho arctan(rho tan t) = (sin 2t / 2) / den; derivatives by the
    // quotient rule against u = phi * den.
    const double u = 0.5 * s2;
    const double du = c2;
    const double ddu = -2.0 * s2;
    const double dden = (rho * rho - 1.0) * s2;
    const double ddden = 2.0 * (rho * rho - 1.0) * c2;
    const double phi = u / den;
    const double dphi = (du - phi * dden) / den;
    const double ddphi = (ddu - 2.0 * dphi * dden - phi * ddden) / den;

    // cos 2r and cos 4r of the background as rational functions of den, so
    // the lambda = 0 cancellation survives in floating point.
    const double cos2r = (c * c - rho * rho * s * s) / den;
    const double cos4r = 2.0 * cos2r * cos2r - 1.0;
    const double v = 2.0 * (params.n - params.p - 1.0) * cos2r / (s * s) -
                     2.0 * params.p * cos2r / (c * c) + 4.0 * cos4r / (s2 * s2);
    return ddphi + weight_log_derivative(params, t) * dphi - v * phi;
}

std::pair<int, int> index_nullity(const SpectrumResult& result) {
    int index = 0;
    int nullity = 0;
    for (const double value : result.eigenvalues) {
        if (value < -result.tol) {
            ++index;
        } else if (std::abs(value) <= result.tol) {
            ++nullity;
        }
    }
    return {index, nullity};
}

double line_transform_residual(int n, int rho_sign, int j, double x) {
    if (n < 1 || n % 2 == 0) {
        throw std::invalid_argument(
            "line_transform_residual: n must be a positive odd integer");
    }
    if (rho_sign != 1 && rho_sign != -1) {
        throw std::invalid_argument("line_transform_residual: rho_sign must be +1 or -1");
    }
    if (!(std::abs(x) <= 20.0)) {
        throw std::invalid_argument("line_transform_residual: require |x| <= 20");
    }
    const double alpha = 0.5 * (n + 1);
    const JacobiParams jp = JacobiParams::create(alpha, alpha, j);
    const double sech = 1.0 / std::cosh(x);
    const double tau = std::tanh(x);
    const double pj = jacobi_eval(jp, tau);
    const double dpj = jacobi_derivative(jp, tau);
    const double ddpj = jacobi_second_derivative(jp, tau);
    const double s3 = sech * sech * sech;

    const double xi = sech * pj;
    const double dxi = -sech * tau * pj + s3 * dpj;
    const double ddxi =
        sech * tau * tau * pj - s3 * pj - 4.0 * s3 * tau * dpj + s3 * sech * sech * ddpj;
    const double lambda = closed_spectrum(n, j);
    return ddxi - (n - 1.0) * tau * dxi - n * tau * tau * xi +
           (0.25 * lambda + 1.0) * sech * sech * xi;
}

}  // namespace cphm
