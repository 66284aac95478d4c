#include "rescurv/families.hpp"

#include <numeric>
#include <stdexcept>

namespace rescurv {

namespace {

Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
    return Graph::from_edges(n, std::move(edges));
}

Graph cycle_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
    return Graph::from_edges(n, std::move(edges));
}

Graph path_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    return Graph::from_edges(n, std::move(edges));
}

Graph hypercube_graph(int n) {
    const int order = 1 << n;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::string> labels;
    labels.reserve(order);
    for (int v = 0; v < order; ++v) {
        std::string bits(n, '0');
        for (int b = 0; b < n; ++b)
            if (v & (1 << (n - 1 - b))) bits[b] = '1';
        labels.push_back(std::move(bits));
        for (int b = 0; b < n; ++b) {
            int w = v ^ (1 << b);
            if (v < w) edges.push_back({v, w});
        }
    }
    return Graph::from_edges(order, std::move(edges), std::move(labels));
}

// Product of d cycles of length n: neighbors differ by +-1 mod n in one
// coordinate.
Graph torus_graph(int d, int n) {
    int order = 1;
    for (int i = 0; i < d; ++i) order *= n;

    auto coords = [&](int v) {
        std::vector<int> c(d);
        for (int i = 0; i < d; ++i) {
            c[i] = v % n;
            v /= n;
        }
        return c;
    };
    auto pack = [&](const std::vector<int>& c) {
        int v = 0;
        for (int i = d - 1; i >= 0; --i) v = v * n + c[i];
        return v;
    };

    std::vector<std::pair<int, int>> edges;
    std::vector<std::string> labels;
    labels.reserve(order);
    for (int v = 0; v < order; ++v) {
        auto c = coords(v);
        std::string label;
        for (int i = 0; i < d; ++i) {
            if (i) label += ',';
            label += std::to_string(c[i]);
        }
        labels.push_back(std::move(label));
        for (int i = 0; i < d; ++i) {
            auto fwd = c;
            fwd[i] = (c[i] + 1) % n;
            int w = pack(fwd);
            if (v < w)
                edges.push_back({v, w});
            else
                edges.push_back({w, v});
        }
    }
    // Each edge appears once: the +1 step from exactly one endpoint.
    return Graph::from_edges(order, std::move(edges), std::move(labels));
}

Graph petersen_graph() {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 5; ++i) {
        edges.push_back({i, (i + 1) % 5});          // outer pentagon
        edges.push_back({5 + i, 5 + (i + 2) % 5});  // inner pentagram
        edges.push_back({i, 5 + i});                // spokes
    }
    return Graph::from_edges(10, std::move(edges));
}

// Moebius ladder V_8: the 8-cycle plus its four diameters.
Graph wagner_graph() {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 8; ++i) edges.push_back({i, (i + 1) % 8});
    for (int i = 0; i < 4; ++i) edges.push_back({i, i + 4});
    return Graph::from_edges(8, std::move(edges));
}

// Two n-cycles (outer 0..n-1, inner n..2n-1) joined by a zigzag.
Graph antiprism_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
        edges.push_back({i, (i + 1) % n});
        edges.push_back({n + i, n + (i + 1) % n});
        edges.push_back({i, n + i});
        edges.push_back({(i + 1) % n, n + i});
    }
    return Graph::from_edges(2 * n, std::move(edges));
}

long long binomial(int n, int k) {
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

} // namespace

FamilySpec family_spec(const std::string& kind, const std::vector<int>& params) {
    auto want = [&](size_t count) {
        if (params.size() != count)
            throw BadParamsError("family " + kind + ": expected " +
                                 std::to_string(count) + " parameter(s), got " +
                                 std::to_string(params.size()));
    };
    FamilySpec spec{};
    if (kind == "complete") {
        want(1);
        spec = {FamilyKind::Complete, params[0], 0};
        if (spec.n < 2) throw BadParamsError("complete: need n >= 2");
    } else if (kind == "cycle") {
        want(1);
        spec = {FamilyKind::Cycle, params[0], 0};
        if (spec.n < 3) throw BadParamsError("cycle: need n >= 3");
    } else if (kind == "path") {
        want(1);
        spec = {FamilyKind::Path, params[0], 0};
        if (spec.n < 2) throw BadParamsError("path: need n >= 2");
    } else if (kind == "hypercube") {
        want(1);
        spec = {FamilyKind::Hypercube, params[0], 0};
        if (spec.n < 1 || spec.n > 20) throw BadParamsError("hypercube: need 1 <= n <= 20");
    } else if (kind == "torus") {
        want(2);
        spec = {FamilyKind::Torus, params[1], params[0]};
        if (spec.d < 2) throw BadParamsError("torus: need d >= 2");
        if (spec.n < 3) throw BadParamsError("torus: need n >= 3");
        double order = 1;
        for (int i = 0; i < spec.d; ++i) order *= spec.n;
        if (order > (1 << 20)) throw BadParamsError("torus: instance too large");
    } else if (kind == "petersen") {
        want(0);
        spec = {FamilyKind::Petersen, 0, 0};
    } else if (kind == "wagner") {
        want(0);
        spec = {FamilyKind::Wagner, 0, 0};
    } else if (kind == "antiprism") {
        want(1);
        spec = {FamilyKind::Antiprism, params[0], 0};
        if (spec.n < 3) throw BadParamsError("antiprism: need n >= 3");
    } else {
        throw BadParamsError("unknown family kind: " + kind);
    }
    return spec;
}

Graph generate(const FamilySpec& spec) {
    switch (spec.kind) {
    case FamilyKind::Complete:
        if (spec.n < 2) throw BadParamsError("complete: need n >= 2");
        return complete_graph(spec.n);
    case FamilyKind::Cycle:
        if (spec.n < 3) throw BadParamsError("cycle: need n >= 3");
        return cycle_graph(spec.n);
    case FamilyKind::Path:
        if (spec.n < 2) throw BadParamsError("path: need n >= 2");
        return path_graph(spec.n);
    case FamilyKind::Hypercube:
        if (spec.n < 1) throw BadParamsError("hypercube: need n >= 1");
        return hypercube_graph(spec.n);
    case FamilyKind::Torus:
        if (spec.d < 2 || spec.n < 3) throw BadParamsError("torus: need d >= 2, n >= 3");
        return torus_graph(spec.d, spec.n);
    case FamilyKind::Petersen:
        return petersen_graph();
    case FamilyKind::Wagner:
        return wagner_graph();
    case FamilyKind::Antiprism:
        if (spec.n < 3) throw BadParamsError("antiprism: need n >= 3");
        return antiprism_graph(spec.n);
    }
    throw BadParamsError("unknown family kind");
}

Rational::Rational(long long n, long long d) : num(n), den(d) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

Rational Rational::operator+(const Rational& o) const {
    return Rational(num * o.den + o.num * den, den * o.den);
}

Rational Rational::reciprocal() const {
    if (num == 0) throw std::invalid_argument("Rational: reciprocal of zero");
    return Rational(den, num);
}

CurvatureOracle oracle_curvature(const FamilySpec& spec) {
    CurvatureOracle oracle;
    switch (spec.kind) {
    case FamilyKind::Complete:
        oracle.exact = true;
        oracle.value = Rational(spec.n, 2 * (spec.n - 1));
        return oracle;
    case FamilyKind::Cycle:
        oracle.exact = true;
        oracle.value = Rational(6, static_cast<long long>(spec.n) * spec.n - 1);
        return oracle;
    case FamilyKind::Hypercube: {
        Rational inv_k(0, 1);
        for (int k = 1; k <= spec.n; ++k)
            inv_k = inv_k + Rational(binomial(spec.n, k), k);
        oracle.exact = true;
        oracle.value = inv_k.reciprocal();
        return oracle;
    }
    case FamilyKind::Torus:
        oracle.asymptotic = spec.d == 2 ? "Theta(1/(n^2 ln n))"
                                        : "Theta(1/n^" + std::to_string(spec.d) + ")";
        return oracle;
    case FamilyKind::Path:
    case FamilyKind::Petersen:
    case FamilyKind::Wagner:
    case FamilyKind::Antiprism:
        throw NoClosedFormError("oracle_curvature: no closed form for this family");
    }
    throw BadParamsError("unknown family kind");
}

} // namespace rescurv
