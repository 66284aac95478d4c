#include "rescurv/curvature.hpp"

#include <cmath>

#include <json.hpp>

namespace rescurv {

bool CurvatureResult::positively_curved() const {
    return kmin > numerics().zero_band;
}

bool CurvatureResult::nonnegatively_curved() const {
    return kmin >= -numerics().zero_band;
}

CurvatureResult curvature(const ResistanceData& rd) {
    const int n = rd.omega.order();
    const Eigen::VectorXd ones = Eigen::VectorXd::Ones(n);

    CurvatureResult cr;
    cr.kappa = solve_symmetric(rd.omega, ones);

    const double residual = (rd.omega.mat() * cr.kappa - ones).cwiseAbs().maxCoeff();
    if (residual > numerics().solve_rel * n)
        throw Error("curvature: defining-equation residual out of contract");

    cr.total = cr.kappa.sum();
    cr.kmin = cr.kappa.minCoeff();
    cr.kmax = cr.kappa.maxCoeff();

    const double band = numerics().zero_band;
    cr.signs.reserve(n);
    for (int i = 0; i < n; ++i) {
        double k = cr.kappa[i];
        cr.signs.push_back(std::abs(k) <= band ? SignClass::Zero
                           : k > 0.0           ? SignClass::Positive
                                               : SignClass::Negative);
    }

    cr.constant = is_constant(cr, &rd);
    if (cr.constant) cr.constant_value = cr.total / n;
    return cr;
}

Eigen::VectorXd dl_curvature(const CurvatureResult& cr) {
    const double floor = 1e-15 * std::max(1.0, cr.kappa.cwiseAbs().sum());
    if (std::abs(cr.total) <= floor)
        throw ZeroTotalCurvatureError("dl_curvature: total curvature is zero");
    return cr.kappa / cr.total;
}

bool is_constant(const CurvatureResult& cr, const ResistanceData* rd) {
    const int n = static_cast<int>(cr.kappa.size());
    const double mean = cr.total / n;
    const double tol = numerics().constancy_rel * std::max(1.0, std::abs(mean));
    if ((cr.kappa.array() - mean).abs().maxCoeff() > tol) return false;
    if (rd) {
        // Resistance-regularity: constant curvature iff constant Omega row sums.
        Eigen::VectorXd row_sums = rd->omega.mat().rowwise().sum();
        const double rs_mean = row_sums.mean();
        const double rs_tol = numerics().constancy_rel * std::max(1.0, std::abs(rs_mean));
        if ((row_sums.array() - rs_mean).abs().maxCoeff() > rs_tol) return false;
    }
    return true;
}

std::string curvature_json(const CurvatureResult& cr) {
    nlohmann::ordered_json j;
    j["kappa"] = std::vector<double>(cr.kappa.begin(), cr.kappa.end());
    j["total"] = cr.total;
    j["kmin"] = cr.kmin;
    j["kmax"] = cr.kmax;
    j["constant"] = cr.constant;
    return j.dump();
}

} // namespace rescurv
