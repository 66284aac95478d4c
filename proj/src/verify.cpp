#include "rescurv/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <json.hpp>

namespace rescurv {

namespace {

CheckRecord record(std::string name, double lhs, double rhs) {
    CheckRecord r;
    r.name = std::move(name);
    r.lhs = lhs;
    r.rhs = rhs;
    r.margin = rhs - lhs;
    const double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
    r.pass = r.margin >= -numerics().check_rel * scale;
    return r;
}

CheckRecord inapplicable(std::string name, std::string reason) {
    CheckRecord r;
    r.name = std::move(name);
    r.applicable = false;
    r.reason = std::move(reason);
    return r;
}

CheckRecord bonnet_myers_impl(const Graph& g, const CurvatureResult& cr,
                              bool base2) {
    const std::string name = base2 ? "bonnet_myers_log2" : "bonnet_myers";
    if (!cr.positively_curved())
        return inapplicable(name, "curvature not strictly positive");
    const double n = g.order();
    const double log_n = base2 ? std::log2(n) : std::log(n);
    const double rhs = std::ceil(std::sqrt(g.max_degree() / cr.kmin) * log_n);
    return record(name, bfs_distances(g).diameter, rhs);
}

double total_measure_mass(const Eigen::VectorXd& mu) {
    double mass = 0.0;
    for (int i = 0; i < mu.size(); ++i) {
        if (mu[i] < -1e-12)
            throw BadMeasureError("check_minimax: measure has a negative entry");
        mass += mu[i];
    }
    return mass;
}

} // namespace

bool TheoremReport::all_pass() const { return failed() == 0; }

int TheoremReport::failed() const {
    int count = 0;
    for (const auto& c : checks)
        if (c.applicable && !c.pass) ++count;
    return count;
}

CheckRecord check_bonnet_myers(const Graph& g, const CurvatureResult& cr) {
    return bonnet_myers_impl(g, cr, false);
}

CheckRecord check_bonnet_myers_log2(const Graph& g, const CurvatureResult& cr) {
    return bonnet_myers_impl(g, cr, true);
}

CheckRecord check_lichnerowicz(const ResistanceData& rd, const CurvatureResult& cr) {
    if (!cr.positively_curved())
        return inapplicable("lichnerowicz", "curvature not strictly positive");
    const double lambda2 = rd.spectrum.eigenvalues[1];
    return record("lichnerowicz", 2.0 * cr.kmin, lambda2);
}

std::vector<CheckRecord> check_commute_pinching(const Graph& g,
                                                const ResistanceData& rd,
                                                const CurvatureResult& cr) {
    const char* names[] = {"commute_lower", "commute_upper", "commute_lower_avg",
                           "commute_upper_avg"};
    if (!cr.positively_curved()) {
        std::vector<CheckRecord> out;
        for (auto* name : names)
            out.push_back(inapplicable(name, "curvature not strictly positive"));
        return out;
    }

    const int n = g.order();
    const double volume = 2.0 * g.edge_count();
    // commute(x,y) = 2|E| Omega_xy; the lower bounds hold per starting
    // vertex, so the binding case is the vertex whose farthest commute
    // partner is nearest.
    double max_commute = 0.0;
    double min_eccentric_commute = std::numeric_limits<double>::infinity();
    for (int x = 0; x < n; ++x) {
        double row_max = 0.0;
        for (int y = 0; y < n; ++y)
            row_max = std::max(row_max, volume * rd.omega(x, y));
        max_commute = std::max(max_commute, row_max);
        min_eccentric_commute = std::min(min_eccentric_commute, row_max);
    }

    const double edge_per_vertex = static_cast<double>(g.edge_count()) / n;
    std::vector<CheckRecord> out;
    out.push_back(record(names[0], 2.0 / cr.kmax * edge_per_vertex,
                         min_eccentric_commute));
    out.push_back(record(names[1], max_commute, 4.0 / cr.kmin * edge_per_vertex));
    out.push_back(record(names[2], 2.0 * g.edge_count() / cr.total,
                         min_eccentric_commute));
    out.push_back(record(names[3], max_commute, 4.0 * g.edge_count() / cr.total));
    return out;
}

std::vector<CheckRecord> check_kirchhoff_bounds(const ResistanceData& rd,
                                                const CurvatureResult& cr) {
    if (!cr.positively_curved())
        return {inapplicable("kirchhoff_lower", "curvature not strictly positive"),
                inapplicable("kirchhoff_upper", "curvature not strictly positive")};
    const double n = rd.omega.order();
    return {record("kirchhoff_lower", n / (2.0 * cr.kmax), rd.kirchhoff),
            record("kirchhoff_upper", rd.kirchhoff, n / (2.0 * cr.kmin))};
}

std::vector<CheckRecord> check_minimax(const ResistanceData& rd,
                                       const CurvatureResult& cr,
                                       const Eigen::VectorXd& mu,
                                       const std::string& tag) {
    const std::string lower_name = tag.empty() ? "minimax_lower" : "minimax_lower_" + tag;
    const std::string upper_name = tag.empty() ? "minimax_upper" : "minimax_upper_" + tag;
    if (mu.size() != rd.omega.order())
        throw BadMeasureError("check_minimax: measure has wrong dimension");
    const double mass = total_measure_mass(mu);
    if (std::abs(mass - 1.0) > 1e-9)
        throw BadMeasureError("check_minimax: measure does not sum to 1");
    if (!cr.nonnegatively_curved())
        return {inapplicable(lower_name, "curvature has negative entries"),
                inapplicable(upper_name, "curvature has negative entries")};

    const Eigen::VectorXd averaged = rd.omega.mat() * mu;
    const double alpha = 1.0 / cr.total;
    return {record(lower_name, averaged.minCoeff(), alpha),
            record(upper_name, alpha, averaged.maxCoeff())};
}

int count_components(const Graph& g, const std::vector<bool>& removed) {
    const int n = g.order();
    std::vector<char> seen(n, 0);
    std::vector<int> stack;
    int components = 0;
    for (int s = 0; s < n; ++s) {
        if (removed[s] || seen[s]) continue;
        ++components;
        seen[s] = 1;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(v))
                if (!removed[w] && !seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
    }
    return components;
}

CheckRecord check_toughness(const Graph& g, const CurvatureResult& cr) {
    if (!cr.positively_curved())
        return inapplicable("toughness", "curvature not strictly positive");
    const int n = g.order();
    if (n > 14) return inapplicable("toughness", "n > 14, subset enumeration skipped");

    // Worst excess of components(G - S) over |S| across all nonempty proper
    // subsets; 1-tough means the excess never exceeds zero.
    int worst_excess = std::numeric_limits<int>::min();
    std::vector<bool> removed(n, false);
    for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
        int k = 0;
        for (int v = 0; v < n; ++v) {
            removed[v] = (mask >> v) & 1u;
            k += removed[v];
        }
        worst_excess = std::max(worst_excess, count_components(g, removed) - k);
    }
    return record("toughness", static_cast<double>(worst_excess), 0.0);
}

CheckRecord check_distance_sum(const Graph& g, const CurvatureResult& cr) {
    if (!cr.nonnegatively_curved() || cr.kmax <= numerics().zero_band)
        return inapplicable("distance_sum", "needs nonnegative curvature, kmax > 0");
    const auto table = bfs_distances(g);
    const int n = g.order();
    double wiener = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) wiener += table.dist[i][j];
    return record("distance_sum", n / (2.0 * cr.kmax), wiener);
}

TheoremReport verify_all(const Graph& g) {
    const ResistanceData rd = resistance_matrix(g);
    const CurvatureResult cr = curvature(rd);
    const int n = g.order();

    TheoremReport report;
    auto add = [&](CheckRecord r) { report.checks.push_back(std::move(r)); };

    add(record("foster", foster_check(g, rd), numerics().foster_rel * n));
    add(record("mckay", mckay_check(rd), numerics().mckay_rel * rd.kirchhoff));

    if (cr.positively_curved())
        add(record("curvature_ceiling", cr.kmin, n / (2.0 * (n - 1.0))));
    else
        add(inapplicable("curvature_ceiling", "curvature not strictly positive"));

    if (cr.constant)
        add(record("constant_curvature_floor", 1.0 / (static_cast<double>(n) * (n - 1)),
                   cr.total / n));
    else
        add(inapplicable("constant_curvature_floor", "curvature not constant"));

    add(check_bonnet_myers(g, cr));
    add(check_bonnet_myers_log2(g, cr));
    add(check_lichnerowicz(rd, cr));
    for (auto& r : check_commute_pinching(g, rd, cr)) add(std::move(r));
    for (auto& r : check_kirchhoff_bounds(rd, cr)) add(std::move(r));

    const Eigen::VectorXd uniform = Eigen::VectorXd::Constant(n, 1.0 / n);
    for (auto& r : check_minimax(rd, cr, uniform, "uniform")) add(std::move(r));
    if (cr.nonnegatively_curved() && cr.total > 0.0) {
        Eigen::VectorXd equilibrium = cr.kappa.cwiseMax(0.0);
        equilibrium /= equilibrium.sum();
        for (auto& r : check_minimax(rd, cr, equilibrium, "equilibrium"))
            add(std::move(r));
    } else {
        add(inapplicable("minimax_lower_equilibrium", "curvature has negative entries"));
        add(inapplicable("minimax_upper_equilibrium", "curvature has negative entries"));
    }

    add(check_toughness(g, cr));
    add(check_distance_sum(g, cr));
    return report;
}

std::string report_json(const TheoremReport& report) {
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const auto& c : report.checks) {
        nlohmann::ordered_json j;
        j["name"] = c.name;
        j["applicable"] = c.applicable;
        if (c.applicable) {
            j["lhs"] = c.lhs;
            j["rhs"] = c.rhs;
            j["margin"] = c.margin;
            j["pass"] = c.pass;
        } else {
            j["reason"] = c.reason;
        }
        checks.push_back(std::move(j));
    }
    nlohmann::ordered_json out;
    out["checks"] = std::move(checks);
    out["all_pass"] = report.all_pass();
    return out.dump(2);
}

} // namespace rescurv
