#pragma once

namespace rescurv {

/// Global tolerance settings. Every tolerance that is part of a public
/// contract lives here so it can be adjusted in one place.
struct NumericsConfig {
    double symmetry_rel = 1e-12;  // max allowed asymmetry on SymMatrix input
    double solve_rel = 1e-9;      // linear-solve residual scale
    double eig_rel = 1e-9;        // eigenvalue accuracy on fixtures
    double foster_rel = 1e-9;     // Foster residual <= foster_rel * n
    double mckay_rel = 1e-8;      // McKay residual <= mckay_rel * Kf
    double zero_band = 1e-9;      // |kappa_i| below this classifies as zero
    double constancy_rel = 1e-8;  // constant-curvature detection
    double check_rel = 1e-9;      // theorem-check margin tolerance scale
};

NumericsConfig& numerics();

} // namespace rescurv
