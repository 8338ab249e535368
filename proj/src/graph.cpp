#include "weakrep/graph.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace weakrep {

LabeledGraph::LabeledGraph(int vertex_count) : n_(vertex_count) {
    if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
}

void LabeledGraph::add_edge(int u, int v, EdgeLabel label) {
    if (u == v) throw std::invalid_argument("self-loop");
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw std::invalid_argument("vertex id out of range");
    if (u > v) std::swap(u, v);
    Edge e{u, v, label};
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e,
                               [](const Edge& a, const Edge& b) {
                                   return std::pair(a.u, a.v) < std::pair(b.u, b.v);
                               });
    if (it != edges_.end() && it->u == u && it->v == v)
        throw std::invalid_argument("parallel edge");
    edges_.insert(it, e);
}

bool LabeledGraph::has_edge(int u, int v) const { return label(u, v).has_value(); }

std::optional<EdgeLabel> LabeledGraph::label(int u, int v) const {
    if (u > v) std::swap(u, v);
    Edge key{u, v, EdgeLabel::Near};
    auto it = std::lower_bound(edges_.begin(), edges_.end(), key,
                               [](const Edge& a, const Edge& b) {
                                   return std::pair(a.u, a.v) < std::pair(b.u, b.v);
                               });
    if (it != edges_.end() && it->u == u && it->v == v) return it->label;
    return std::nullopt;
}

std::vector<std::vector<int>> LabeledGraph::adjacency() const {
    std::vector<std::vector<int>> adj(n_);
    for (const Edge& e : edges_) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    for (auto& a : adj) std::sort(a.begin(), a.end());
    return adj;
}

int LabeledGraph::degree(int v) const {
    int d = 0;
    for (const Edge& e : edges_)
        if (e.u == v || e.v == v) ++d;
    return d;
}

std::string serialize_graph(const LabeledGraph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges())
        out << e.u << ' ' << e.v << ' ' << label_char(e.label) << '\n';
    return out.str();
}

LabeledGraph parse_graph(const std::string& text) {
    std::istringstream in(text);
    int n = 0, m = 0;
    if (!(in >> n >> m)) throw std::invalid_argument("graph header: expected \"n m\"");
    LabeledGraph g(n);
    for (int i = 0; i < m; ++i) {
        int u, v;
        char l;
        if (!(in >> u >> v >> l))
            throw std::invalid_argument("graph edge line " + std::to_string(i + 1) +
                                        ": expected \"u v L\"");
        if (l != 'N' && l != 'F')
            throw std::invalid_argument("graph edge line " + std::to_string(i + 1) +
                                        ": label must be N or F");
        g.add_edge(u, v, l == 'N' ? EdgeLabel::Near : EdgeLabel::Far);
    }
    return g;
}

}  // namespace weakrep
