#pragma once

#include <vector>

#include <Eigen/Core>

#include "cphm/space.hpp"

namespace cphm {

// Fubini-Study metric at gamma(t) as a symmetric bilinear form on the
// complexified tangent space, in the frame (dz_1..dz_n, dzbar_1..dzbar_n)
// of the affine chart around gamma:
//
//     (cos^2 t / 2) * [[0, M], [M, 0]],   M = diag(1_p, cos^2 t, 1_{n-p-1}).
//
// All entries are real; the matrix is symmetric.
struct MetricBlock {
    Eigen::MatrixXd entries;  // 2n x 2n
};

MetricBlock fubini_study_block(const SpaceParams& sp, double t);

// The same metric in the real frame (dx_1..dx_n, dy_1..dy_n), obtained from
// the block above by substituting dx_j = dz_j + dzbar_j and
// dy_j = i(dz_j - dzbar_j):
//
//     diag(cos^2 t * M, cos^2 t * M).
//
// Everything downstream of this function is real arithmetic; a unit test
// recomputes it from fubini_study_block through the substitution.
Eigen::MatrixXd real_metric(const SpaceParams& sp, double t);

// Q-orthonormal basis (N1, N2, N3, N4, D) of the orthogonal complement of
// the principal isotropy algebra inside su(p+1) + su(n-p), realized as
// (n+1) x (n+1) skew-Hermitian traceless matrices, each N_i ordered by
// increasing column index.  Alongside each element the class knows the
// coordinates of its action field at gamma(t) in the real frame
// (dx_1..dx_n, dy_1..dy_n).
class ActionBasis {
  public:
    explicit ActionBasis(const SpaceParams& sp);

    int size() const noexcept { return static_cast<int>(elements_.size()); }
    const std::vector<Eigen::MatrixXcd>& elements() const noexcept { return elements_; }

    // Positive normalization root of the D-direction; 0 in the degenerate
    // case, where D is stored as the zero matrix.
    double lambda() const noexcept { return lambda_; }

    // Q(X_i, X_j) = -1/2 Tr(X_i X_j); real for skew-Hermitian arguments.
    double q_form(int i, int j) const;

    // Action-field coordinates of element i at gamma(t), length 2n, in the
    // frame (dx_1..dx_n, dy_1..dy_n).
    Eigen::VectorXd coordinate_field(int i, double t) const;

  private:
    struct FieldDesc {
        int axis = 0;           // 0-based affine coordinate index
        bool is_y = false;      // x-block or y-block of the real frame
        double coeff = 0.0;     // constant prefactor
        bool times_tan = false; // multiply by tan t
    };

    SpaceParams sp_;
    double lambda_ = 0.0;
    std::vector<Eigen::MatrixXcd> elements_;
    std::vector<FieldDesc> fields_;
};

// Gram matrix g(X_i*, X_j*) at gamma(t) over the ordered basis, assembled
// from the Lemma coordinate fields and the real form of the Fubini-Study
// block.  By construction this is the matrix of P_t in the basis, computed
// independently of the closed-form diagonal; size (2n-1) x (2n-1).
Eigen::MatrixXd gram_oracle(const SpaceParams& sp, double t);

}  // namespace cphm
