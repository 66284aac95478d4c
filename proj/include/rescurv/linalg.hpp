#pragma once

#include <Eigen/Dense>
#include <optional>

#include "rescurv/errors.hpp"
#include "rescurv/numerics.hpp"

namespace rescurv {

/// Dense real symmetric matrix. Symmetry is validated on construction
/// (max asymmetry <= symmetry_rel * max|entry|) and then enforced exactly
/// by averaging, so downstream kernels may assume M == M^T.
class SymMatrix {
public:
    SymMatrix() = default;
    explicit SymMatrix(Eigen::MatrixXd m);

    int order() const { return static_cast<int>(m_.rows()); }
    double operator()(int i, int j) const { return m_(i, j); }
    const Eigen::MatrixXd& mat() const { return m_; }

private:
    Eigen::MatrixXd m_;
};

struct Spectrum {
    Eigen::VectorXd eigenvalues;                 // ascending
    std::optional<Eigen::MatrixXd> eigenvectors; // orthonormal columns
};

/// Cholesky solve for symmetric positive definite systems.
/// Throws NotPositiveDefiniteError when the factorization meets a
/// nonpositive pivot.
Eigen::VectorXd solve_spd(const SymMatrix& m, const Eigen::VectorXd& b);

/// Full inverse of an SPD matrix: one factorization reused over identity
/// columns, plus one residual-correction sweep.
Eigen::MatrixXd inverse_spd(const SymMatrix& m);

/// Pivoted solve valid for symmetric indefinite (but nonsingular) systems.
/// Throws SingularMatrixError.
Eigen::VectorXd solve_symmetric(const SymMatrix& m, const Eigen::VectorXd& b);

/// Full symmetric eigendecomposition, eigenvalues ascending. Eigenvectors
/// only when requested. Throws NoConvergenceError on iteration cap.
Spectrum eig_symmetric(const SymMatrix& m, bool with_vectors = false);

} // namespace rescurv
