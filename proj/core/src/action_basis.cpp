#include "cphm/action_basis.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace cphm {

namespace {

using Cplx = std::complex<double>;

// Elementary matrix C_{jk} (1-based indices) in gl(n+1, C).
Eigen::MatrixXcd unit_matrix(int dim, int j, int k) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    m(j - 1, k - 1) = Cplx(1.0, 0.0);
    return m;
}

// E_{j,k} = C_{jk} - C_{kj}
Eigen::MatrixXcd e_matrix(int dim, int j, int k) {
    return unit_matrix(dim, j, k) - unit_matrix(dim, k, j);
}

// F_{j,k} = i C_{jk} + i C_{kj}
Eigen::MatrixXcd f_matrix(int dim, int j, int k) {
    return Cplx(0.0, 1.0) * (unit_matrix(dim, j, k) + unit_matrix(dim, k, j));
}

Eigen::VectorXd metric_m_diag(const SpaceParams& sp, double t) {
    const double c2 = std::cos(t) * std::cos(t);
    Eigen::VectorXd m = Eigen::VectorXd::Ones(sp.n);
    m(sp.p) = c2;  // the distinguished affine slot carries an extra cos^2 t
    return m;
}

}  // namespace

MetricBlock fubini_study_block(const SpaceParams& sp, double t) {
    detail::require_interior(t);
    const int n = sp.n;
    const double c2 = std::cos(t) * std::cos(t);
    const Eigen::VectorXd m = metric_m_diag(sp, t);
    Eigen::MatrixXd g = Eigen::MatrixXd::Zero(2 * n, 2 * n);
    for (int j = 0; j < n; ++j) {
        g(j, n + j) = 0.5 * c2 * m(j);
        g(n + j, j) = 0.5 * c2 * m(j);
    }
    return MetricBlock{std::move(g)};
}

Eigen::MatrixXd real_metric(const SpaceParams& sp, double t) {
    detail::require_interior(t);
    const int n = sp.n;
    const double c2 = std::cos(t) * std::cos(t);
    const Eigen::VectorXd m = metric_m_diag(sp, t);
    Eigen::MatrixXd g = Eigen::MatrixXd::Zero(2 * n, 2 * n);
    for (int j = 0; j < n; ++j) {
        g(j, j) = c2 * m(j);
        g(n + j, n + j) = c2 * m(j);
    }
    return g;
}

ActionBasis::ActionBasis(const SpaceParams& sp) : sp_(sp) {
    const int n = sp.n;
    const int p = sp.p;
    const int dim = n + 1;
    elements_.reserve(2 * n - 1);
    fields_.reserve(2 * n - 1);

    // N1: E_{1,k}, k = 2..p+1; action field -d/dx_{k-1}.
    for (int k = 2; k <= p + 1; ++k) {
        elements_.push_back(e_matrix(dim, 1, k));
        fields_.push_back(FieldDesc{k - 2, false, -1.0, false});
    }
    // N2: F_{1,k}, k = 2..p+1; action field +d/dy_{k-1}.
    for (int k = 2; k <= p + 1; ++k) {
        elements_.push_back(f_matrix(dim, 1, k));
        fields_.push_back(FieldDesc{k - 2, true, 1.0, false});
    }
    // N3: E_{p+2,k}, k = p+3..n+1; action field -tan t d/dx_{k-1}.
    for (int k = p + 3; k <= n + 1; ++k) {
        elements_.push_back(e_matrix(dim, p + 2, k));
        fields_.push_back(FieldDesc{k - 2, false, -1.0, true});
    }
    // N4: F_{p+2,k}, k = p+3..n+1; action field +tan t d/dy_{k-1}.
    for (int k = p + 3; k <= n + 1; ++k) {
        elements_.push_back(f_matrix(dim, p + 2, k));
        fields_.push_back(FieldDesc{k - 2, true, 1.0, true});
    }

    // D = lambda i diag(p(n-p), (p-n) x p, -(p+1)(n-p-1), (p+1) x (n-p-1))
    // with lambda^2 = 2 / [(p+1)(n-p)((p+1)(n-p-1) + (n-p)p)]; we store the
    // positive root (the sign affects neither Q-norms nor the Gram matrix).
    // Its action field is -eta tan t d/dy_{p+1}.
    const double bracket =
        static_cast<double>(p + 1) * (n - p - 1) + static_cast<double>(n - p) * p;
    Eigen::MatrixXcd d_mat = Eigen::MatrixXcd::Zero(dim, dim);
    if (bracket > 0.0) {
        lambda_ = std::sqrt(2.0 / ((p + 1.0) * (n - p) * bracket));
        Eigen::VectorXd diag(dim);
        diag(0) = static_cast<double>(p) * (n - p);
        diag.segment(1, p).setConstant(static_cast<double>(p - n));
        diag(p + 1) = -static_cast<double>(p + 1) * (n - p - 1);
        diag.segment(p + 2, n - p - 1).setConstant(static_cast<double>(p + 1));
        d_mat = (Cplx(0.0, 1.0) * lambda_) * diag.cast<Cplx>().asDiagonal().toDenseMatrix();
    } else {
        lambda_ = 0.0;  // degenerate (n, p) = (1, 0): D collapses to zero
    }
    elements_.push_back(std::move(d_mat));
    fields_.push_back(FieldDesc{p, true, -std::sqrt(eta_squared(sp)), true});
}

double ActionBasis::q_form(int i, int j) const {
    const Cplx tr = (elements_.at(i) * elements_.at(j)).trace();
    return -0.5 * tr.real();
}

Eigen::VectorXd ActionBasis::coordinate_field(int i, double t) const {
    detail::require_interior(t);
    const FieldDesc& fd = fields_.at(i);
    Eigen::VectorXd v = Eigen::VectorXd::Zero(2 * sp_.n);
    const double coeff = fd.coeff * (fd.times_tan ? std::tan(t) : 1.0);
    v(fd.is_y ? sp_.n + fd.axis : fd.axis) = coeff;
    return v;
}

Eigen::MatrixXd gram_oracle(const SpaceParams& sp, double t) {
    detail::require_interior(t);
    const ActionBasis basis(sp);
    const Eigen::MatrixXd g = real_metric(sp, t);
    const int m = basis.size();
    Eigen::MatrixXd fields(2 * sp.n, m);
    for (int i = 0; i < m; ++i) {
        fields.col(i) = basis.coordinate_field(i, t);
    }
    return fields.transpose() * g * fields;
}

}  // namespace cphm
