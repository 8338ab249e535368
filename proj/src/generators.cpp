#include "weakrep/generators.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace weakrep {

LabeledGraph gen_wheel_hard(int n) {
    if (n < 4) throw std::invalid_argument("gen_wheel_hard: n must be >= 4");
    // v_i is id i-1; hub is v_1 = 0, rim cycle (v_2,...,v_n,v_2).
    LabeledGraph g(n);
    for (int i = 3; i <= n; ++i)
        g.add_edge(0, i - 1, i <= n - 1 ? EdgeLabel::Far : EdgeLabel::Near);
    g.add_edge(0, 1, EdgeLabel::Near);  // (v_1,v_2)
    for (int i = 2; i < n; ++i) g.add_edge(i - 1, i, EdgeLabel::Near);
    g.add_edge(1, n - 1, EdgeLabel::Far);  // (v_2,v_n)
    return g;
}

LabeledGraph gen_sungraph() {
    LabeledGraph g(6);
    g.add_edge(0, 1, EdgeLabel::Near);
    g.add_edge(1, 2, EdgeLabel::Near);
    g.add_edge(2, 0, EdgeLabel::Near);
    g.add_edge(3, 0, EdgeLabel::Near);
    g.add_edge(3, 1, EdgeLabel::Near);
    g.add_edge(4, 1, EdgeLabel::Near);
    g.add_edge(4, 2, EdgeLabel::Near);
    g.add_edge(5, 2, EdgeLabel::Near);
    g.add_edge(5, 0, EdgeLabel::Near);
    return g;
}

LabeledGraph gen_random_series_parallel(int n, unsigned seed) {
    if (n < 2) throw std::invalid_argument("gen_random_series_parallel: n must be >= 2");
    std::mt19937 rng(seed);
    // Grow from a single edge; each step adds one vertex, either subdividing
    // an edge (series) or attaching a new vertex to both endpoints of an edge
    // (parallel path of length 2). Both preserve series-parallelness.
    std::vector<std::pair<int, int>> edge_list{{0, 1}};
    int vertices = 2;
    while (vertices < n) {
        std::uniform_int_distribution<size_t> pick(0, edge_list.size() - 1);
        auto [u, v] = edge_list[pick(rng)];
        int x = vertices++;
        if (std::uniform_int_distribution<int>(0, 1)(rng) == 0) {
            // series: split (u,v) into (u,x),(x,v)
            auto it = std::find(edge_list.begin(), edge_list.end(), std::pair(u, v));
            edge_list.erase(it);
            edge_list.emplace_back(u, x);
            edge_list.emplace_back(x, v);
        } else {
            // parallel: duplicate (u,v) as the path (u,x,v)
            edge_list.emplace_back(u, x);
            edge_list.emplace_back(x, v);
        }
    }
    LabeledGraph g(n);
    for (auto [u, v] : edge_list) {
        auto l = std::uniform_int_distribution<int>(0, 1)(rng) ? EdgeLabel::Near
                                                               : EdgeLabel::Far;
        g.add_edge(u, v, l);
    }
    return g;
}

LabeledGraph np_reduction(const LabeledGraph& g) {
    const int n = g.vertex_count();
    LabeledGraph k(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            k.add_edge(u, v, g.has_edge(u, v) ? EdgeLabel::Near : EdgeLabel::Far);
    return k;
}

std::vector<LabeledGraph> girth4_candidates() {
    std::vector<LabeledGraph> out;

    // Two 4-cycles through a common vertex pair plus an apex adjacent to the
    // two "middle" vertices; 6 vertices, 8 edges, girth 4, planar.
    {
        LabeledGraph g(6);
        g.add_edge(0, 2, EdgeLabel::Near);
        g.add_edge(0, 4, EdgeLabel::Near);
        g.add_edge(1, 2, EdgeLabel::Near);
        g.add_edge(3, 4, EdgeLabel::Near);
        g.add_edge(1, 4, EdgeLabel::Near);
        g.add_edge(2, 3, EdgeLabel::Near);
        g.add_edge(2, 5, EdgeLabel::Near);
        g.add_edge(4, 5, EdgeLabel::Near);
        out.push_back(g);
    }
    // K_{2,3}: 5 vertices, 6 edges, girth 4, planar.
    {
        LabeledGraph g(5);
        for (int a : {0, 1})
            for (int b : {2, 3, 4}) g.add_edge(a, b, EdgeLabel::Near);
        out.push_back(g);
    }
    // Cube graph Q_3: 8 vertices, 12 edges, girth 4, planar.
    {
        LabeledGraph g(8);
        for (int v = 0; v < 8; ++v)
            for (int bit : {1, 2, 4})
                if (v < (v ^ bit)) g.add_edge(v, v ^ bit, EdgeLabel::Near);
        out.push_back(g);
    }
    // Bipartite planar quadrangulation on 4+4 vertices, 12 edges, girth 4;
    // found by sweeping edge-maximal triangle-free planar structures.
    {
        LabeledGraph g(8);
        for (auto [u, v] : {std::pair(0, 4), {0, 5}, {0, 6}, {0, 7}, {1, 4}, {1, 5},
                            {1, 6}, {1, 7}, {2, 4}, {2, 6}, {3, 4}, {3, 5}})
            g.add_edge(u, v, EdgeLabel::Near);
        out.push_back(g);
    }
    return out;
}

}  // namespace weakrep
