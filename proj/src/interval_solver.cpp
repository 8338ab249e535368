#include "weakrep/interval_solver.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace weakrep {

long long work_bound_bits(long long fallback) {
    if (const char* env = std::getenv("WEAKREP_WORK_BOUND")) {
        long long v = std::atoll(env);
        if (v > 0) return v;
    }
    return fallback;
}

namespace {

// Difference constraint x_to - x_from <= w, strict when eps = -1 (i.e. w - eps').
struct Constraint {
    int from;
    int to;
    long long w;
    int eps;  // 0 or -1
};

struct Dist {
    long long w;
    long long eps;
    bool operator<(const Dist& o) const {
        return w < o.w || (w == o.w && eps < o.eps);
    }
    Dist operator+(const Constraint& c) const { return {w + c.w, eps + c.eps}; }
};

// Bellman-Ford from a virtual source connected to all vertices with weight 0.
// Returns potentials, or nullopt when a negative (or zero-with-strict) cycle
// exists.
std::optional<std::vector<Dist>> feasible_potentials(int n,
                                                     const std::vector<Constraint>& cons) {
    std::vector<Dist> dist(n, {0, 0});
    for (int round = 0; round < n; ++round) {
        bool changed = false;
        for (const Constraint& c : cons) {
            Dist cand = dist[c.from] + c;
            if (cand < dist[c.to]) {
                dist[c.to] = cand;
                changed = true;
            }
        }
        if (!changed) return dist;
    }
    for (const Constraint& c : cons)
        if (dist[c.from] + c < dist[c.to]) return std::nullopt;
    return dist;
}

}  // namespace

IntervalDecision decide_interval(const LabeledGraph& g) {
    const int n = g.vertex_count();
    std::vector<Constraint> cons;
    std::vector<Edge> far;
    for (const Edge& e : g.edges()) {
        if (e.label == EdgeLabel::Near) {
            cons.push_back({e.u, e.v, 1, 0});
            cons.push_back({e.v, e.u, 1, 0});
        } else {
            far.push_back(e);
        }
    }
    // Branch on high-degree-sum far edges first; their orientations constrain
    // the most and fail fastest.
    std::sort(far.begin(), far.end(), [&](const Edge& a, const Edge& b) {
        int da = g.degree(a.u) + g.degree(a.v);
        int db = g.degree(b.u) + g.degree(b.v);
        if (da != db) return da > db;
        return std::pair(a.u, a.v) < std::pair(b.u, b.v);
    });

    std::optional<std::vector<Dist>> solution;
    auto search = [&](auto&& self, size_t i) -> bool {
        auto pot = feasible_potentials(n, cons);
        if (!pot) return false;
        if (i == far.size()) {
            solution = pot;
            return true;
        }
        const Edge& e = far[i];
        // x_u - x_v > 1  <=>  x_v - x_u <= -1 strict, and symmetrically.
        for (auto [lo, hi] : {std::pair(e.u, e.v), std::pair(e.v, e.u)}) {
            cons.push_back({hi, lo, -1, -1});
            if (self(self, i + 1)) return true;
            cons.pop_back();
        }
        return false;
    };

    if (!search(search, 0)) return {};

    IntervalRep rep;
    rep.diameter = Rat(1);
    Rat eps = n > 0 ? Rat(1, 2LL * n) : Rat(0);
    for (int v = 0; v < n; ++v)
        rep.coord[v] = Rat((*solution)[v].w) + Rat((*solution)[v].eps) * eps;
    if (!verify_interval(g, rep).ok)
        throw std::logic_error("decide_interval: witness failed re-verification");
    return {true, rep};
}

ThresholdColoring to_threshold_coloring(const LabeledGraph& g, const IntervalRep& rep) {
    long long scale = rep.diameter.den();
    for (auto& [v, c] : rep.coord) scale = std::lcm(scale, c.den());
    ThresholdColoring col;
    Rat t = rep.diameter * Rat(scale);
    col.threshold = t.num();
    long long mn = 0;
    bool first = true;
    std::map<int, long long> scaled;
    for (auto& [v, c] : rep.coord) {
        Rat s = c * Rat(scale);
        scaled[v] = s.num();
        if (first || s.num() < mn) mn = s.num();
        first = false;
    }
    for (auto& [v, s] : scaled) col.color[v] = s - mn + 1;
    col.range = 1;
    for (auto& [v, c] : col.color) col.range = std::max(col.range, c);
    if (!verify_interval(g, to_interval_rep(col)).ok)
        throw std::logic_error("to_threshold_coloring: scaled coloring failed verification");
    return col;
}

std::optional<ThresholdColoring> grid_oracle_interval(const LabeledGraph& g,
                                                      long long max_color,
                                                      long long work_bound) {
    if (max_color < 1) throw std::invalid_argument("grid_oracle_interval: max_color >= 1");
    const int n = g.vertex_count();
    long long bound = work_bound > 0 ? work_bound : work_bound_bits();
    if (double(n) * std::log2(double(max_color + 1)) > double(bound))
        throw std::runtime_error("grid_oracle_interval: instance exceeds work bound");

    // BFS order so each vertex (within a component) has a colored neighbor.
    auto adj = g.adjacency();
    std::vector<int> order;
    {
        std::vector<bool> seen(n, false);
        for (int s = 0; s < n; ++s) {
            if (seen[s]) continue;
            seen[s] = true;
            std::vector<int> q{s};
            for (size_t i = 0; i < q.size(); ++i) {
                order.push_back(q[i]);
                for (int w : adj[q[i]])
                    if (!seen[w]) {
                        seen[w] = true;
                        q.push_back(w);
                    }
            }
        }
    }

    std::vector<long long> color(n, -1);
    for (long long t = 0; t <= max_color; ++t) {
        auto assign = [&](auto&& self, size_t i) -> bool {
            if (i == order.size()) {
                // A valid coloring shifts so its minimum is 0; searching only
                // those keeps the sweep complete within the color range.
                long long mn = *std::min_element(color.begin(), color.end());
                return mn == 0;
            }
            int v = order[i];
            for (long long c = 0; c <= max_color; ++c) {
                bool ok = true;
                for (int w : adj[v]) {
                    if (color[w] < 0) continue;
                    bool near = std::llabs(c - color[w]) <= t;
                    if (near != (g.label(v, w) == EdgeLabel::Near)) {
                        ok = false;
                        break;
                    }
                }
                if (!ok) continue;
                color[v] = c;
                if (self(self, i + 1)) return true;
                color[v] = -1;
            }
            return false;
        };
        if (n == 0 || assign(assign, 0)) {
            ThresholdColoring col;
            col.threshold = t;
            col.range = max_color + 1;
            for (int v = 0; v < n; ++v) col.color[v] = color[v] + 1;
            return col;
        }
    }
    return std::nullopt;
}

std::vector<LabeledGraph> find_hard_labelings(const LabeledGraph& g, int max_edges) {
    const int m = g.edge_count();
    if (m > max_edges) throw std::invalid_argument("find_hard_labelings: too many edges");
    std::vector<LabeledGraph> hard;
    for (unsigned long long mask = 0; mask < (1ULL << m); ++mask) {
        LabeledGraph h(g.vertex_count());
        for (int i = 0; i < m; ++i) {
            const Edge& e = g.edges()[i];
            h.add_edge(e.u, e.v, (mask >> i & 1) ? EdgeLabel::Far : EdgeLabel::Near);
        }
        if (!decide_interval(h).sat) hard.push_back(std::move(h));
    }
    return hard;
}

}  // namespace weakrep
