#include "rescurv/resistance.hpp"

#include <cmath>
#include <cstdio>

namespace rescurv {

namespace {

// CSV field quoting per RFC 4180; plain tokens pass through untouched.
std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string format_double(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

} // namespace

ResistanceData resistance_matrix(const Graph& g, bool with_spectrum) {
    const int n = g.order();
    SymMatrix l = laplacian(g);

    ResistanceData rd;
    rd.gamma = SymMatrix(l.mat() + Eigen::MatrixXd::Constant(n, n, 1.0 / n));
    rd.gamma_inv = SymMatrix(inverse_spd(rd.gamma));

    const Eigen::MatrixXd& gi = rd.gamma_inv.mat();
    Eigen::VectorXd diag = gi.diagonal();
    Eigen::MatrixXd omega =
        diag.replicate(1, n) + diag.transpose().replicate(n, 1) - 2.0 * gi;
    omega.diagonal().setZero();
    rd.omega = SymMatrix(std::move(omega));

    if (with_spectrum) rd.spectrum = eig_symmetric(l);
    rd.kirchhoff = kirchhoff_index(rd);
    return rd;
}

double kirchhoff_index(const ResistanceData& rd) {
    const int n = rd.omega.order();
    double sum = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) sum += rd.omega(i, j);
    return sum;
}

double foster_check(const Graph& g, const ResistanceData& rd) {
    double edge_sum = 0.0;
    for (auto [u, v] : g.edges()) edge_sum += rd.omega(u, v);
    return std::abs(edge_sum - (g.order() - 1));
}

double mckay_check(const ResistanceData& rd) {
    if (!rd.has_spectrum())
        throw std::logic_error("mckay_check: ResistanceData has no spectrum");
    const auto& lambda = rd.spectrum.eigenvalues;
    const int n = static_cast<int>(lambda.size());
    double inv_sum = 0.0;
    for (int k = 1; k < n; ++k) inv_sum += 1.0 / lambda[k];
    return std::abs(rd.kirchhoff - n * inv_sum);
}

std::string omega_csv(const Graph& g, const ResistanceData& rd) {
    const int n = g.order();
    std::string out;
    for (int j = 0; j < n; ++j) {
        if (j) out += ',';
        out += csv_field(g.label(j));
    }
    out += '\n';
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (j) out += ',';
            out += format_double(rd.omega(i, j));
        }
        out += '\n';
    }
    return out;
}

} // namespace rescurv
