#pragma once

#include "rescurv/curvature.hpp"

namespace rescurv {

/// One inequality or identity, evaluated with margins. Sign convention:
/// margin = rhs - lhs, nonnegative = pass (up to check_rel * scale slack).
/// Inapplicable checks carry a reason and no pass/fail.
struct CheckRecord {
    std::string name;
    bool applicable = true;
    std::string reason;
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;
    bool pass = false;
};

struct TheoremReport {
    std::vector<CheckRecord> checks;

    bool all_pass() const;
    int failed() const;
};

/// diam(G) <= ceil(sqrt(max_degree / kmin) * ln n); needs kmin > 0.
CheckRecord check_bonnet_myers(const Graph& g, const CurvatureResult& cr);
/// Base-2 log variant, reported for transparency (weaker bound).
CheckRecord check_bonnet_myers_log2(const Graph& g, const CurvatureResult& cr);

/// lambda_2 >= 2 * kmin; needs kmin > 0.
CheckRecord check_lichnerowicz(const ResistanceData& rd, const CurvatureResult& cr);

/// Two-sided commute pinching plus the refined total-curvature variants;
/// commute(x,y) = 2|E| * Omega_xy, exact. Four records.
std::vector<CheckRecord> check_commute_pinching(const Graph& g,
                                                const ResistanceData& rd,
                                                const CurvatureResult& cr);

/// n/(2 kmax) <= Kf(G) <= n/(2 kmin). Two records.
std::vector<CheckRecord> check_kirchhoff_bounds(const ResistanceData& rd,
                                                const CurvatureResult& cr);

/// min_a (Omega mu)_a <= 1/total <= max_b (Omega mu)_b for a probability
/// measure mu; needs nonnegative curvature (else inapplicable). Throws
/// BadMeasureError for malformed mu. Two records, `tag` suffixes the names.
std::vector<CheckRecord> check_minimax(const ResistanceData& rd,
                                       const CurvatureResult& cr,
                                       const Eigen::VectorXd& mu,
                                       const std::string& tag = "");

/// 1-toughness by brute force over all vertex subsets; needs kmin > 0 and
/// n <= 14 (inapplicable with reason otherwise).
CheckRecord check_toughness(const Graph& g, const CurvatureResult& cr);

/// Number of connected components of G - removed.
int count_components(const Graph& g, const std::vector<bool>& removed);

/// Wiener-type bound: sum of pairwise distances >= n/(2 kmax); needs
/// kmin >= 0 and kmax > 0.
CheckRecord check_distance_sum(const Graph& g, const CurvatureResult& cr);

/// Runs every applicable check plus the Foster/McKay identities, the
/// maximal-curvature ceiling and the constant-curvature floor.
TheoremReport verify_all(const Graph& g);

/// {"checks":[{name, applicable, ...}], "all_pass": ...}
std::string report_json(const TheoremReport& report);

} // namespace rescurv
