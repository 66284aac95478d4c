#include "rescurv/linalg.hpp"

#include <cmath>

namespace rescurv {

NumericsConfig& numerics() {
    static NumericsConfig cfg;
    return cfg;
}

SymMatrix::SymMatrix(Eigen::MatrixXd m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("SymMatrix: matrix is not square");
    const double scale = m.size() > 0 ? m.cwiseAbs().maxCoeff() : 0.0;
    const double asym = m.size() > 0 ? (m - m.transpose()).cwiseAbs().maxCoeff() : 0.0;
    if (asym > numerics().symmetry_rel * std::max(scale, 1.0))
        throw std::invalid_argument("SymMatrix: matrix is not symmetric");
    m_ = 0.5 * (m + m.transpose().eval());
}

namespace {

// One residual-correction sweep: x += solve(b - A x). Cheap relative to the
// factorization and tightens the forward error on ill-scaled systems.
template <class Factor>
Eigen::VectorXd refine(const Factor& f, const Eigen::MatrixXd& a,
                       const Eigen::VectorXd& b, Eigen::VectorXd x) {
    for (int pass = 0; pass < 2; ++pass) {
        Eigen::VectorXd r = b - a * x;
        x += f.solve(r);
    }
    return x;
}

} // namespace

Eigen::VectorXd solve_spd(const SymMatrix& m, const Eigen::VectorXd& b) {
    if (b.size() != m.order())
        throw std::invalid_argument("solve_spd: dimension mismatch");
    Eigen::LLT<Eigen::MatrixXd> llt(m.mat());
    if (llt.info() != Eigen::Success)
        throw NotPositiveDefiniteError("solve_spd: nonpositive pivot encountered");
    return refine(llt, m.mat(), b, llt.solve(b));
}

Eigen::MatrixXd inverse_spd(const SymMatrix& m) {
    const int n = m.order();
    Eigen::LLT<Eigen::MatrixXd> llt(m.mat());
    if (llt.info() != Eigen::Success)
        throw NotPositiveDefiniteError("inverse_spd: nonpositive pivot encountered");
    Eigen::MatrixXd x = llt.solve(Eigen::MatrixXd::Identity(n, n));
    // Residual correction at the matrix level, then symmetrize.
    x += llt.solve(Eigen::MatrixXd::Identity(n, n) - m.mat() * x);
    return 0.5 * (x + x.transpose().eval());
}

Eigen::VectorXd solve_symmetric(const SymMatrix& m, const Eigen::VectorXd& b) {
    if (b.size() != m.order())
        throw std::invalid_argument("solve_symmetric: dimension mismatch");
    Eigen::FullPivLU<Eigen::MatrixXd> lu(m.mat());
    if (!lu.isInvertible())
        throw SingularMatrixError("solve_symmetric: matrix is singular");
    return refine(lu, m.mat(), b, lu.solve(b));
}

Spectrum eig_symmetric(const SymMatrix& m, bool with_vectors) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(
        m.mat(), with_vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success)
        throw NoConvergenceError("eig_symmetric: iteration cap reached");
    Spectrum s;
    s.eigenvalues = es.eigenvalues();
    if (with_vectors) s.eigenvectors = es.eigenvectors();
    return s;
}

} // namespace rescurv
