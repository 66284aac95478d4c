#pragma once

#include <optional>

#include "rescurv/resistance.hpp"

namespace rescurv {

enum class SignClass { Negative, Zero, Positive };

struct CurvatureResult {
    Eigen::VectorXd kappa;        // unique solution of Omega * kappa = 1
    double total = 0.0;           // sum of kappa = <1, Omega^-1 1>
    double kmin = 0.0;            // K, the lower curvature bound
    double kmax = 0.0;            // K_2, the upper curvature bound
    std::vector<SignClass> signs; // zero-band |kappa_i| <= zero_band
    bool constant = false;
    std::optional<double> constant_value;

    bool positively_curved() const;    // kmin > zero_band
    bool nonnegatively_curved() const; // kmin >= -zero_band
};

/// Solves Omega * kappa = 1 with the symmetric-indefinite kernel and
/// classifies the result. Residual is verified against the defining
/// contract ||Omega kappa - 1||_inf <= solve_rel * n.
CurvatureResult curvature(const ResistanceData& rd);

/// Devriendt-Lambiotte normalization kappa / total; sums to 1.
/// Throws ZeroTotalCurvatureError.
Eigen::VectorXd dl_curvature(const CurvatureResult& cr);

/// True iff max_i |kappa_i - mean| <= constancy_rel * max(1, |mean|).
/// When `rd` is supplied and the test passes, the equivalent
/// resistance-regularity condition (constant Omega row sums) is
/// cross-checked at the same tolerance.
bool is_constant(const CurvatureResult& cr, const ResistanceData* rd = nullptr);

/// {"kappa":[...], "total":..., "kmin":..., "kmax":..., "constant":...}
std::string curvature_json(const CurvatureResult& cr);

} // namespace rescurv
