#include "weakrep/graph_algorithms.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>

namespace weakrep {

namespace {

constexpr int kInf = std::numeric_limits<int>::max();

}  // namespace

std::optional<int> girth(const LabeledGraph& g) {
    const int n = g.vertex_count();
    auto adj = g.adjacency();
    int best = kInf;
    for (int s = 0; s < n; ++s) {
        std::vector<int> dist(n, kInf), parent(n, -1);
        std::queue<int> q;
        dist[s] = 0;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : adj[u]) {
                if (dist[v] == kInf) {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    q.push(v);
                } else if (parent[u] != v) {
                    // Closed walk through s; always contains a cycle no longer
                    // than dist[u] + dist[v] + 1, and the true girth is hit
                    // when s lies on a shortest cycle.
                    best = std::min(best, dist[u] + dist[v] + 1);
                }
            }
        }
    }
    if (best == kInf) return std::nullopt;
    return best;
}

std::optional<std::vector<ContractionStep>> find_degree2_contraction_sequence(
    const LabeledGraph& g) {
    const int n = g.vertex_count();
    std::vector<std::set<int>> adj(n);
    for (const Edge& e : g.edges()) {
        adj[e.u].insert(e.v);
        adj[e.v].insert(e.u);
    }
    std::vector<bool> alive(n, true);
    std::vector<ContractionStep> steps;
    for (;;) {
        int v = -1;
        for (int i = 0; i < n; ++i) {
            if (alive[i] && !adj[i].empty() && adj[i].size() <= 2) {
                v = i;
                break;
            }
        }
        if (v == -1) break;
        auto it = adj[v].begin();
        int u = *it;
        std::optional<int> w;
        if (adj[v].size() == 2) w = *std::next(it);
        steps.push_back({v, u, w});
        for (int x : adj[v]) adj[x].erase(v);
        adj[v].clear();
        alive[v] = false;
        if (w && !adj[u].count(*w)) {
            adj[u].insert(*w);
            adj[*w].insert(u);
        }
    }
    for (int i = 0; i < n; ++i)
        if (!adj[i].empty()) return std::nullopt;  // stuck: no degree-<=2 vertex left
    return steps;
}

namespace {

// Chords (a,b) and (c,d) cross iff their endpoints alternate on the cycle.
bool chords_cross(int pa, int pb, int pc, int pd) {
    if (pa > pb) std::swap(pa, pb);
    bool c_in = pa < pc && pc < pb;
    bool d_in = pa < pd && pd < pb;
    return c_in != d_in;
}

bool chords_noncrossing(const LabeledGraph& g, const std::vector<int>& cycle) {
    const int n = g.vertex_count();
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[cycle[i]] = i;
    std::vector<std::pair<int, int>> chords;
    for (const Edge& e : g.edges()) {
        int d = std::abs(pos[e.u] - pos[e.v]);
        if (d != 1 && d != n - 1) chords.emplace_back(pos[e.u], pos[e.v]);
    }
    for (size_t i = 0; i < chords.size(); ++i)
        for (size_t j = i + 1; j < chords.size(); ++j)
            if (chords_cross(chords[i].first, chords[i].second, chords[j].first,
                             chords[j].second))
                return false;
    return true;
}

}  // namespace

std::optional<OuterEmbedding> outer_embedding(const LabeledGraph& g) {
    const int n = g.vertex_count();
    if (n < 3) return std::nullopt;
    if (g.edge_count() > 2 * n - 3) return std::nullopt;  // outerplanar edge bound
    auto adj = g.adjacency();
    for (int v = 0; v < n; ++v)
        if (adj[v].size() < 2) return std::nullopt;

    std::vector<int> path{0};
    std::vector<bool> used(n, false);
    used[0] = true;
    std::optional<OuterEmbedding> found;
    std::function<bool()> extend = [&]() -> bool {
        if ((int)path.size() == n) {
            if (g.has_edge(path.back(), 0) && chords_noncrossing(g, path)) {
                found = OuterEmbedding{path};
                return true;
            }
            return false;
        }
        for (int w : adj[path.back()]) {
            if (used[w]) continue;
            used[w] = true;
            path.push_back(w);
            if (extend()) return true;
            path.pop_back();
            used[w] = false;
        }
        return false;
    };
    extend();
    if (found) {
        // Canonical direction: second vertex smaller than last.
        auto& c = found->outer_cycle;
        if (c[1] > c[n - 1]) std::reverse(c.begin() + 1, c.end());
    }
    return found;
}

namespace {

std::vector<int> canonical_cycle(std::vector<int> cyc) {
    auto mn = std::min_element(cyc.begin(), cyc.end());
    std::rotate(cyc.begin(), mn, cyc.end());
    if (cyc.size() > 2 && cyc[1] > cyc.back())
        std::reverse(cyc.begin() + 1, cyc.end());
    return cyc;
}

}  // namespace

std::vector<std::vector<int>> internal_faces(const LabeledGraph& g,
                                             const OuterEmbedding& emb) {
    const int n = g.vertex_count();
    const auto& cyc = emb.outer_cycle;
    if ((int)cyc.size() != n) throw std::invalid_argument("embedding: wrong cycle length");
    std::vector<int> pos(n, -1);
    for (int i = 0; i < n; ++i) {
        int v = cyc[i];
        if (v < 0 || v >= n || pos[v] != -1)
            throw std::invalid_argument("embedding: outer cycle is not a permutation");
        pos[v] = i;
    }
    for (int i = 0; i < n; ++i)
        if (!g.has_edge(cyc[i], cyc[(i + 1) % n]))
            throw std::invalid_argument("embedding: outer cycle edge missing from graph");
    if (!chords_noncrossing(g, cyc))
        throw std::invalid_argument("embedding: crossing chords");

    // Rotation system of the convex-position drawing: neighbors ordered by
    // cyclic position after v.
    auto adj = g.adjacency();
    std::vector<std::vector<int>> rot(n);
    for (int v = 0; v < n; ++v) {
        rot[v] = adj[v];
        std::sort(rot[v].begin(), rot[v].end(), [&](int a, int b) {
            return (pos[a] - pos[v] + n) % n < (pos[b] - pos[v] + n) % n;
        });
    }
    auto rot_index = [&](int v, int u) {
        for (size_t i = 0; i < rot[v].size(); ++i)
            if (rot[v][i] == u) return (int)i;
        throw std::logic_error("rotation lookup");
    };

    // Trace faces: next dart after (u -> v) leaves v toward the successor of u
    // in v's rotation.
    std::set<std::pair<int, int>> seen;
    std::vector<std::vector<int>> faces;
    for (const Edge& e : g.edges()) {
        for (auto [su, sv] : {std::pair(e.u, e.v), std::pair(e.v, e.u)}) {
            if (seen.count({su, sv})) continue;
            std::vector<int> face;
            int u = su, v = sv;
            do {
                seen.insert({u, v});
                face.push_back(u);
                int i = rot_index(v, u);
                int w = rot[v][(i + 1) % rot[v].size()];
                u = v;
                v = w;
            } while (!(u == su && v == sv));
            faces.push_back(std::move(face));
        }
    }

    // Drop the outer face: the traced face that walks the whole outer cycle.
    std::vector<int> outer_canon = canonical_cycle(cyc);
    int outer_idx = -1;
    for (size_t i = 0; i < faces.size(); ++i) {
        if ((int)faces[i].size() == n && canonical_cycle(faces[i]) == outer_canon) {
            outer_idx = (int)i;
            break;
        }
    }
    if (outer_idx == -1) throw std::invalid_argument("embedding: outer face not traced");
    faces.erase(faces.begin() + outer_idx);

    long long total = (long long)n;
    for (auto& f : faces) total += (long long)f.size();
    if (total != 2LL * g.edge_count())
        throw std::invalid_argument("embedding: face lengths inconsistent");

    // Weak dual must be a tree (acyclic and connected for connected input).
    std::map<std::pair<int, int>, std::vector<int>> by_edge;
    for (size_t i = 0; i < faces.size(); ++i) {
        const auto& f = faces[i];
        for (size_t j = 0; j < f.size(); ++j) {
            int a = f[j], b = f[(j + 1) % f.size()];
            if (a > b) std::swap(a, b);
            by_edge[{a, b}].push_back((int)i);
        }
    }
    int dual_edges = 0;
    for (auto& [e, fs] : by_edge) {
        if (fs.size() > 2) throw std::invalid_argument("embedding: edge on >2 internal faces");
        if (fs.size() == 2) ++dual_edges;
    }
    if (!faces.empty() && dual_edges > (int)faces.size() - 1)
        throw std::invalid_argument("embedding: weak dual has a cycle");

    for (auto& f : faces) f = canonical_cycle(f);
    std::sort(faces.begin(), faces.end());
    return faces;
}

DensityVerdict density_certificate(const LabeledGraph& g) {
    long long bound = (11LL * g.vertex_count()) / 4 - 6;
    return g.edge_count() > bound ? DensityVerdict::ExceedsBound
                                  : DensityVerdict::WithinBound;
}

Rat mad_bruteforce(const LabeledGraph& g) {
    const int n = g.vertex_count();
    if (n < 1) throw std::invalid_argument("mad: empty graph");
    if (n > 24) throw std::invalid_argument("mad_bruteforce: too many vertices");
    Rat best(0);
    for (unsigned long long mask = 1; mask < (1ULL << n); ++mask) {
        int verts = __builtin_popcountll(mask);
        int edges = 0;
        for (const Edge& e : g.edges())
            if ((mask >> e.u & 1) && (mask >> e.v & 1)) ++edges;
        Rat d(2LL * edges, verts);
        if (best < d) best = d;
    }
    return best;
}

namespace {

// Dinic max-flow on a small integer-capacity network.
struct FlowNet {
    struct Arc {
        int to;
        long long cap;
        int rev;
    };
    std::vector<std::vector<Arc>> arcs;
    explicit FlowNet(int n) : arcs(n) {}
    void add(int a, int b, long long cap) {
        arcs[a].push_back({b, cap, (int)arcs[b].size()});
        arcs[b].push_back({a, 0, (int)arcs[a].size() - 1});
    }
    long long maxflow(int s, int t) {
        long long flow = 0;
        for (;;) {
            std::vector<int> level(arcs.size(), -1);
            std::queue<int> q;
            level[s] = 0;
            q.push(s);
            while (!q.empty()) {
                int u = q.front();
                q.pop();
                for (auto& a : arcs[u])
                    if (a.cap > 0 && level[a.to] < 0) {
                        level[a.to] = level[u] + 1;
                        q.push(a.to);
                    }
            }
            if (level[t] < 0) return flow;
            std::vector<size_t> it(arcs.size(), 0);
            std::function<long long(int, long long)> dfs = [&](int u,
                                                               long long f) -> long long {
                if (u == t) return f;
                for (; it[u] < arcs[u].size(); ++it[u]) {
                    auto& a = arcs[u][it[u]];
                    if (a.cap > 0 && level[a.to] == level[u] + 1) {
                        long long d = dfs(a.to, std::min(f, a.cap));
                        if (d > 0) {
                            a.cap -= d;
                            arcs[a.to][a.rev].cap += d;
                            return d;
                        }
                    }
                }
                return 0;
            };
            long long f;
            while ((f = dfs(s, std::numeric_limits<long long>::max())) > 0) flow += f;
        }
    }
};

// Goldberg feasibility: exists H with |E(H)|/|V(H)| > a/b?
bool denser_subgraph_exists(const LabeledGraph& g, long long a, long long b) {
    const int n = g.vertex_count();
    const int m = g.edge_count();
    if (m == 0) return false;
    FlowNet net(2 + m + n);
    int s = 0, t = 1;
    for (int i = 0; i < m; ++i) {
        const Edge& e = g.edges()[i];
        net.add(s, 2 + i, b);
        net.add(2 + i, 2 + m + e.u, std::numeric_limits<long long>::max() / 4);
        net.add(2 + i, 2 + m + e.v, std::numeric_limits<long long>::max() / 4);
    }
    for (int v = 0; v < n; ++v) net.add(2 + m + v, t, a);
    return net.maxflow(s, t) < (long long)m * b;
}

}  // namespace

Rat mad(const LabeledGraph& g) {
    const int n = g.vertex_count();
    if (n < 1) throw std::invalid_argument("mad: empty graph");
    if (n < 10) return mad_bruteforce(g);
    const int m = g.edge_count();
    if (m == 0) return Rat(0);
    // Candidate densities e/v; pick the largest candidate c with no subgraph
    // strictly denser than c.
    std::set<Rat> cands;
    for (int v = 1; v <= n; ++v)
        for (int e = 0; e <= m; ++e) cands.insert(Rat(e, v));
    std::vector<Rat> sorted(cands.begin(), cands.end());
    size_t lo = 0, hi = sorted.size() - 1;
    // Invariant: density > sorted[hi] infeasible, density > sorted[lo-1] feasible.
    while (lo < hi) {
        size_t mid = (lo + hi) / 2;
        if (denser_subgraph_exists(g, sorted[mid].num(), sorted[mid].den()))
            lo = mid + 1;
        else
            hi = mid;
    }
    return Rat(2) * sorted[lo];
}

bool is_connected(const LabeledGraph& g) {
    const int n = g.vertex_count();
    if (n == 0) return true;
    auto adj = g.adjacency();
    std::vector<bool> vis(n, false);
    std::deque<int> q{0};
    vis[0] = true;
    int count = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        for (int v : adj[u])
            if (!vis[v]) {
                vis[v] = true;
                ++count;
                q.push_back(v);
            }
    }
    return count == n;
}

namespace {

struct BlockFinder {
    const std::vector<std::vector<int>>& adj;
    std::vector<int> disc, low;
    std::vector<std::pair<int, int>> stack;
    std::set<int> cuts;
    std::vector<std::pair<int, int>> bridge_list;
    std::vector<std::vector<std::pair<int, int>>> blocks;
    int timer = 0;

    explicit BlockFinder(const std::vector<std::vector<int>>& a)
        : adj(a), disc(a.size(), -1), low(a.size(), 0) {}

    void dfs(int u, int parent) {
        disc[u] = low[u] = timer++;
        int children = 0;
        for (int v : adj[u]) {
            if (v == parent) {
                parent = -2;  // skip the tree edge once (simple graph: no multiedges)
                continue;
            }
            if (disc[v] == -1) {
                ++children;
                stack.emplace_back(u, v);
                dfs(v, u);
                low[u] = std::min(low[u], low[v]);
                if (low[v] > disc[u]) bridge_list.emplace_back(std::min(u, v), std::max(u, v));
                if ((disc[u] == 0 && children > 1) || (disc[u] != 0 && low[v] >= disc[u]))
                    cuts.insert(u);
                if (low[v] >= disc[u]) {
                    std::vector<std::pair<int, int>> blk;
                    for (;;) {
                        auto e = stack.back();
                        stack.pop_back();
                        blk.push_back(e);
                        if (e == std::pair(u, v)) break;
                    }
                    blocks.push_back(std::move(blk));
                }
            } else if (disc[v] < disc[u]) {
                stack.emplace_back(u, v);
                low[u] = std::min(low[u], disc[v]);
            }
        }
    }

    void run() {
        for (int u = 0; u < (int)adj.size(); ++u)
            if (disc[u] == -1) {
                timer = 0;
                dfs(u, -1);
            }
    }
};

}  // namespace

std::vector<int> cut_vertices(const LabeledGraph& g) {
    auto adj = g.adjacency();
    BlockFinder finder(adj);
    finder.run();
    return {finder.cuts.begin(), finder.cuts.end()};
}

std::vector<std::pair<int, int>> bridges(const LabeledGraph& g) {
    auto adj = g.adjacency();
    BlockFinder finder(adj);
    finder.run();
    std::sort(finder.bridge_list.begin(), finder.bridge_list.end());
    return finder.bridge_list;
}

std::vector<std::vector<std::pair<int, int>>> biconnected_components(const LabeledGraph& g) {
    auto adj = g.adjacency();
    BlockFinder finder(adj);
    finder.run();
    return finder.blocks;
}

}  // namespace weakrep
