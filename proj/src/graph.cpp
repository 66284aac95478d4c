#include "rescurv/graph.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <istream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

namespace rescurv {

namespace {

bool connected(int n, const std::vector<std::vector<int>>& adj) {
    if (n == 0) return false;
    std::vector<char> seen(n, 0);
    std::deque<int> queue{0};
    seen[0] = 1;
    int reached = 1;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int w : adj[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                queue.push_back(w);
            }
    }
    return reached == n;
}

void validate_label(const std::string& label) {
    if (label.empty())
        throw std::invalid_argument("Graph: empty vertex label");
    for (char c : label)
        if (c == '#' || std::isspace(static_cast<unsigned char>(c)))
            throw std::invalid_argument("Graph: label contains '#' or whitespace: " +
                                        label);
}

} // namespace

Graph Graph::from_edges(int n, std::vector<std::pair<int, int>> edges,
                        std::vector<std::string> labels) {
    if (n <= 0) throw EmptyInputError("Graph: no vertices");
    Graph g;
    g.n_ = n;
    if (labels.empty()) {
        labels.reserve(n);
        for (int v = 0; v < n; ++v) labels.push_back(std::to_string(v));
    }
    if (static_cast<int>(labels.size()) != n)
        throw std::invalid_argument("Graph: label count does not match vertex count");
    std::set<std::string> unique_labels;
    for (const auto& l : labels) {
        validate_label(l);
        if (!unique_labels.insert(l).second)
            throw std::invalid_argument("Graph: duplicate label: " + l);
    }
    g.labels_ = std::move(labels);

    std::set<std::pair<int, int>> seen;
    for (auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("Graph: edge index out of range");
        if (u == v) throw SelfLoopError("Graph: self-loop at vertex " + g.labels_[u]);
        if (u > v) std::swap(u, v);
        if (!seen.insert({u, v}).second)
            throw DuplicateEdgeError("Graph: duplicate edge " + g.labels_[u] + " " +
                                     g.labels_[v]);
    }
    g.edges_.assign(seen.begin(), seen.end());

    g.adj_.assign(n, {});
    for (auto [u, v] : g.edges_) {
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (auto& nbrs : g.adj_) std::sort(nbrs.begin(), nbrs.end());

    if (!connected(n, g.adj_))
        throw DisconnectedError("Graph: input graph is not connected");
    return g;
}

int Graph::index_of(const std::string& label) const {
    for (int v = 0; v < n_; ++v)
        if (labels_[v] == label) return v;
    return -1;
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

bool Graph::adjacent(int u, int v) const {
    const auto& nbrs = adj_[u];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::string Graph::to_edge_list() const {
    std::string out;
    for (auto [u, v] : edges_) {
        out += labels_[u];
        out += ' ';
        out += labels_[v];
        out += '\n';
    }
    return out;
}

std::string Graph::to_json() const {
    nlohmann::ordered_json j;
    j["n"] = n_;
    j["labels"] = labels_;
    auto edges = nlohmann::ordered_json::array();
    for (auto [u, v] : edges_) edges.push_back({u, v});
    j["edges"] = std::move(edges);
    return j.dump();
}

Graph parse_edge_list(std::istream& in) {
    std::map<std::string, int> index;
    std::vector<std::string> labels;
    std::vector<std::pair<int, int>> edges;
    std::set<std::pair<int, int>> seen;

    auto intern = [&](const std::string& token) {
        auto [it, inserted] = index.try_emplace(token, static_cast<int>(labels.size()));
        if (inserted) labels.push_back(token);
        return it->second;
    };

    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string a, b, extra;
        if (!(ls >> a)) continue; // blank or comment-only line
        if (!(ls >> b) || (ls >> extra))
            throw MalformedLineError("expected exactly two vertex tokens", lineno);
        int u = intern(a);
        int v = intern(b);
        if (u == v) throw SelfLoopError("self-loop at vertex " + a, lineno);
        auto key = std::minmax(u, v);
        if (!seen.insert({key.first, key.second}).second)
            throw DuplicateEdgeError("duplicate edge " + a + " " + b, lineno);
        edges.push_back({u, v});
    }
    if (labels.empty()) throw EmptyInputError("edge list holds no edges");
    const int n = static_cast<int>(labels.size());
    return Graph::from_edges(n, std::move(edges), std::move(labels));
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

DistanceTable bfs_distances(const Graph& g) {
    const int n = g.order();
    DistanceTable t;
    t.dist.assign(n, std::vector<int>(n, -1));
    for (int s = 0; s < n; ++s) {
        auto& row = t.dist[s];
        row[s] = 0;
        std::deque<int> queue{s};
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (int w : g.neighbors(v))
                if (row[w] < 0) {
                    row[w] = row[v] + 1;
                    t.diameter = std::max(t.diameter, row[w]);
                    queue.push_back(w);
                }
        }
    }
    return t;
}

Bipartition is_bipartite(const Graph& g) {
    const int n = g.order();
    Bipartition b;
    std::vector<int> color(n, -1);
    color[0] = 0;
    std::deque<int> queue{0};
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int w : g.neighbors(v)) {
            if (color[w] < 0) {
                color[w] = 1 - color[v];
                queue.push_back(w);
            } else if (color[w] == color[v]) {
                return b; // odd cycle
            }
        }
    }
    b.bipartite = true;
    b.coloring = std::move(color);
    return b;
}

SymMatrix laplacian(const Graph& g) {
    const int n = g.order();
    Eigen::MatrixXd l = Eigen::MatrixXd::Zero(n, n);
    for (int v = 0; v < n; ++v) l(v, v) = g.degree(v);
    for (auto [u, v] : g.edges()) {
        l(u, v) = -1.0;
        l(v, u) = -1.0;
    }
    return SymMatrix(std::move(l));
}

} // namespace rescurv
