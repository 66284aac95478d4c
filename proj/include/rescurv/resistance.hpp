#pragma once

#include "rescurv/graph.hpp"

namespace rescurv {

/// Gamma = L + J/n (positive definite for connected graphs), its inverse,
/// the resistance matrix Omega read off Gamma^-1, the Laplacian spectrum,
/// and the Kirchhoff index — everything downstream modules need for one
/// graph.
struct ResistanceData {
    SymMatrix gamma;
    SymMatrix gamma_inv;
    SymMatrix omega;
    Spectrum spectrum; // of L, eigenvalues only; may be skipped
    double kirchhoff = 0.0;

    bool has_spectrum() const { return spectrum.eigenvalues.size() > 0; }
};

/// Omega_ij = (Gamma^-1)_ii + (Gamma^-1)_jj - 2 (Gamma^-1)_ij.
/// `with_spectrum = false` skips the eigendecomposition of L for callers
/// that only need Omega.
ResistanceData resistance_matrix(const Graph& g, bool with_spectrum = true);

/// Kf(G) = sum of Omega over unordered vertex pairs.
double kirchhoff_index(const ResistanceData& rd);

/// |sum over edges of Omega - (n-1)|; callers assert <= foster_rel * n.
double foster_check(const Graph& g, const ResistanceData& rd);

/// |Kf - n * sum_{k>=2} 1/lambda_k|; callers assert <= mckay_rel * Kf.
/// Requires the spectrum.
double mckay_check(const ResistanceData& rd);

/// Row-major CSV of Omega, header = vertex labels.
std::string omega_csv(const Graph& g, const ResistanceData& rd);

} // namespace rescurv
