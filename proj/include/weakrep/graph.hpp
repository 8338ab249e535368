#pragma once

#include <optional>
#include <string>
#include <vector>

namespace weakrep {

enum class EdgeLabel { Near, Far };

inline char label_char(EdgeLabel l) { return l == EdgeLabel::Near ? 'N' : 'F'; }

struct Edge {
    int u;  // u < v
    int v;
    EdgeLabel label;

    friend bool operator==(const Edge&, const Edge&) = default;
};

// Simple undirected graph whose every edge carries a near/far label.
// Edges are stored canonically (u < v, sorted lexicographically), so
// equality is structural.
class LabeledGraph {
public:
    LabeledGraph() : n_(0) {}
    explicit LabeledGraph(int vertex_count);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }

    // Throws on self-loops, parallel edges, and out-of-range ids.
    void add_edge(int u, int v, EdgeLabel label);

    bool has_edge(int u, int v) const;
    std::optional<EdgeLabel> label(int u, int v) const;

    std::vector<std::vector<int>> adjacency() const;
    int degree(int v) const;

    friend bool operator==(const LabeledGraph&, const LabeledGraph&) = default;

private:
    int n_;
    std::vector<Edge> edges_;
};

// Text format: header "n m", then m lines "u v L" with L in {N,F},
// edges sorted lexicographically.
std::string serialize_graph(const LabeledGraph& g);
LabeledGraph parse_graph(const std::string& text);

}  // namespace weakrep
