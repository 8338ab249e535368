#include "weakrep/interval_construct.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <queue>
#include <stdexcept>

namespace weakrep {

namespace {

std::vector<std::vector<int>> all_pairs_distance(const LabeledGraph& g) {
    const int n = g.vertex_count();
    auto adj = g.adjacency();
    std::vector<std::vector<int>> dist(n, std::vector<int>(n, std::numeric_limits<int>::max()));
    for (int s = 0; s < n; ++s) {
        dist[s][s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : adj[u])
                if (dist[s][v] == std::numeric_limits<int>::max()) {
                    dist[s][v] = dist[s][u] + 1;
                    q.push(v);
                }
        }
    }
    return dist;
}

void check_partition(const LabeledGraph& g, const Decomposition& dec) {
    for (int v : dec.iset)
        if (dec.fset.count(v))
            throw std::invalid_argument("decomposition: iset and fset overlap");
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!dec.iset.count(v) && !dec.fset.count(v))
            throw std::invalid_argument("decomposition: vertex not covered");
    for (int v : dec.iset)
        if (v < 0 || v >= g.vertex_count())
            throw std::invalid_argument("decomposition: iset vertex out of range");
    for (int v : dec.fset)
        if (v < 0 || v >= g.vertex_count())
            throw std::invalid_argument("decomposition: fset vertex out of range");
}

void check_forest(const LabeledGraph& g, const std::set<int>& fset) {
    std::map<int, int> parent;
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int v : fset) parent[v] = v;
    for (const Edge& e : g.edges()) {
        if (!fset.count(e.u) || !fset.count(e.v)) continue;
        int a = find(e.u), b = find(e.v);
        if (a == b) throw std::invalid_argument("decomposition: fset induces a cycle");
        parent[a] = b;
    }
}

}  // namespace

void check_decomposition(const LabeledGraph& g, const Decomposition& dec) {
    check_partition(g, dec);
    check_forest(g, dec.fset);
    auto dist = all_pairs_distance(g);
    for (int u : dec.iset)
        for (int v : dec.iset)
            if (u < v && dist[u][v] <= 2)
                throw std::invalid_argument("decomposition: iset not 2-independent");
}

std::vector<IPair> check_decomposition_relaxed(const LabeledGraph& g,
                                               const Decomposition& dec) {
    check_partition(g, dec);
    check_forest(g, dec.fset);
    auto adj = g.adjacency();
    for (int u : dec.iset)
        for (int v : dec.iset)
            if (u < v && g.has_edge(u, v))
                throw std::invalid_argument("decomposition: iset not independent");
    std::vector<IPair> pairs;
    std::map<int, int> mates;
    for (int u : dec.iset) {
        for (int v : dec.iset) {
            if (u >= v) continue;
            std::vector<int> common;
            for (int w : adj[u])
                if (g.has_edge(w, v)) common.push_back(w);
            if (common.empty()) continue;
            if (common.size() > 1)
                throw std::invalid_argument("decomposition: I-pair with multiple 2-paths");
            if (++mates[u] > 1 || ++mates[v] > 1)
                throw std::invalid_argument("decomposition: vertex in two I-pairs");
            pairs.push_back({u, v, common[0]});
        }
    }
    return pairs;
}

IntervalRep color_forest_2independent(const LabeledGraph& g, const Decomposition& dec) {
    check_decomposition(g, dec);
    auto adj = g.adjacency();
    IntervalRep rep;
    rep.diameter = Rat(1);
    for (int v : dec.iset) rep.coord[v] = Rat(0);

    auto iset_neighbor = [&](int v) -> std::optional<int> {
        for (int w : adj[v])
            if (dec.iset.count(w)) return w;  // at most one by 2-independence
        return std::nullopt;
    };
    auto satisfied = [&](long long a, long long b, EdgeLabel l) {
        long long gap = std::llabs(a - b);
        return (gap <= 1) == (l == EdgeLabel::Near);
    };

    std::map<int, long long> val;
    std::set<int> done;
    for (int root : dec.fset) {
        if (done.count(root)) continue;
        auto in = iset_neighbor(root);
        val[root] = (in && g.label(root, *in) == EdgeLabel::Far) ? 2 : 1;
        done.insert(root);
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int t = q.front();
            q.pop();
            for (int u : adj[t]) {
                if (!dec.fset.count(u) || done.count(u)) continue;
                auto v = iset_neighbor(u);
                long long x;
                if (v) {
                    x = g.label(u, *v) == EdgeLabel::Near ? 1 : 2;
                    if (!satisfied(x, val[t], *g.label(u, t))) x = -x;
                } else {
                    x = satisfied(1, val[t], *g.label(u, t)) ? 1 : -1;
                }
                if (!satisfied(x, val[t], *g.label(u, t)))
                    throw std::logic_error("forest coloring: tree edge unsatisfiable");
                val[u] = x;
                done.insert(u);
                q.push(u);
            }
        }
    }
    for (auto& [v, x] : val) rep.coord[v] = Rat(x);
    if (!verify_interval(g, rep).ok)
        throw std::invalid_argument("color_forest_2independent: invalid decomposition");
    return rep;
}

IntervalRep color_nearly_2independent(const LabeledGraph& g, const Decomposition& dec) {
    auto pairs = check_decomposition_relaxed(g, dec);

    // Drop one bad edge per I-pair: (min(u,v), mid).
    std::set<std::pair<int, int>> removed;
    for (const IPair& p : pairs) {
        int a = std::min(p.u, p.v);
        removed.insert({std::min(a, p.mid), std::max(a, p.mid)});
    }
    LabeledGraph reduced(g.vertex_count());
    for (const Edge& e : g.edges())
        if (!removed.count({e.u, e.v})) reduced.add_edge(e.u, e.v, e.label);

    IntervalRep base = color_forest_2independent(reduced, dec);

    // Stretch 0,±1,±2 to 0,±2,±5; the representation now lives at d = 3.
    IntervalRep rep;
    rep.diameter = Rat(3);
    for (auto& [v, c] : base.coord) {
        long long x = c.num();
        long long s = x == 0 ? 0 : (std::llabs(x) == 1 ? 2 : 5);
        rep.coord[v] = Rat(x < 0 ? -s : s);
    }

    // Local repair of each dropped bad edge.
    for (auto [x, y] : removed) {
        if (!dec.iset.count(x)) std::swap(x, y);  // x is the iset endpoint
        EdgeLabel l = *g.label(x, y);
        long long cy = rep.coord[y].num();
        long long gap = std::llabs(rep.coord[x].num() - cy);
        if ((gap <= 3) == (l == EdgeLabel::Near)) continue;
        if (l == EdgeLabel::Near) {
            // unsatisfied near edge: the mid sits at ±5
            rep.coord[x] = Rat(cy > 0 ? 1 : -1);
            rep.coord[y] = Rat(cy > 0 ? 4 : -4);
        } else {
            // unsatisfied far edge: the mid sits at ±2
            rep.coord[x] = Rat(cy > 0 ? -1 : 1);
            rep.coord[y] = Rat(cy > 0 ? 3 : -3);
        }
    }
    if (!verify_interval(g, rep).ok)
        throw std::invalid_argument("color_nearly_2independent: repair failed");
    return rep;
}

namespace {

// Union-find with rollback (no path compression).
struct RollbackDsu {
    std::vector<int> parent, size;
    std::vector<int> log;
    explicit RollbackDsu(int n) : parent(n), size(n, 1) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) const {
        while (parent[x] != x) x = parent[x];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (size[a] < size[b]) std::swap(a, b);
        parent[b] = a;
        size[a] += size[b];
        log.push_back(b);
        return true;
    }
    size_t mark() const { return log.size(); }
    void rollback(size_t m) {
        while (log.size() > m) {
            int b = log.back();
            log.pop_back();
            size[parent[b]] -= size[b];
            parent[b] = b;
        }
    }
};

}  // namespace

std::optional<Decomposition> decompose_forest_2independent(const LabeledGraph& g,
                                                           int max_exact) {
    const int n = g.vertex_count();
    if (n > max_exact)
        throw std::invalid_argument("decompose_forest_2independent: exceeds exact-mode bound");
    auto dist = all_pairs_distance(g);
    auto adj = g.adjacency();
    std::vector<int> side(n, -1);  // 0 = iset, 1 = fset
    RollbackDsu dsu(n);

    std::function<bool(int)> go = [&](int v) -> bool {
        if (v == n) return true;
        // try iset
        bool ok = true;
        for (int u = 0; u < v; ++u)
            if (side[u] == 0 && dist[u][v] <= 2) {
                ok = false;
                break;
            }
        if (ok) {
            side[v] = 0;
            if (go(v + 1)) return true;
            side[v] = -1;
        }
        // try fset
        size_t m = dsu.mark();
        ok = true;
        for (int u : adj[v]) {
            if (u < v && side[u] == 1 && !dsu.unite(u, v)) {
                ok = false;
                break;
            }
        }
        if (ok) {
            side[v] = 1;
            if (go(v + 1)) return true;
            side[v] = -1;
        }
        dsu.rollback(m);
        return false;
    };
    if (!go(0)) return std::nullopt;
    Decomposition dec;
    for (int v = 0; v < n; ++v) (side[v] == 0 ? dec.iset : dec.fset).insert(v);
    check_decomposition(g, dec);
    return dec;
}

std::vector<FaceAttachment> face_attachment_order(const LabeledGraph& g,
                                                  const OuterEmbedding& emb) {
    auto faces = internal_faces(g, emb);
    const size_t k = faces.size();
    if (k == 0) throw std::invalid_argument("face_attachment_order: no internal faces");

    auto face_edges = [&](const std::vector<int>& f) {
        std::vector<std::pair<int, int>> es;
        for (size_t i = 0; i < f.size(); ++i) {
            int a = f[i], b = f[(i + 1) % f.size()];
            es.emplace_back(std::min(a, b), std::max(a, b));
        }
        return es;
    };
    std::map<std::pair<int, int>, std::vector<int>> edge_faces;
    for (size_t i = 0; i < k; ++i)
        for (auto e : face_edges(faces[i])) edge_faces[e].push_back((int)i);
    std::map<int, int> vertex_count;
    for (const auto& f : faces)
        for (int v : f) ++vertex_count[v];

    std::vector<bool> alive(k, true);
    std::vector<FaceAttachment> peeled;
    size_t remaining = k;
    while (remaining > 1) {
        int pick = -1;
        std::pair<int, int> anchor_edge{-1, -1};
        for (size_t i = 0; i < k && pick < 0; ++i) {
            if (!alive[i]) continue;
            std::vector<std::pair<int, int>> shared;
            for (auto e : face_edges(faces[i])) {
                for (int j : edge_faces[e])
                    if (j != (int)i && alive[j]) {
                        shared.push_back(e);
                        break;
                    }
            }
            if (shared.size() != 1) continue;  // not a dual leaf
            bool exclusive = true;
            for (int v : faces[i])
                if (v != shared[0].first && v != shared[0].second && vertex_count[v] > 1) {
                    exclusive = false;
                    break;
                }
            if (!exclusive) continue;
            pick = (int)i;
            anchor_edge = shared[0];
        }
        if (pick < 0)
            throw std::invalid_argument("face_attachment_order: no peelable leaf face");

        // Orient the cycle anchor_a, new..., anchor_b with (b,a) the shared edge.
        const auto& f = faces[pick];
        int a = anchor_edge.first, b = anchor_edge.second;
        const size_t l = f.size();
        std::vector<int> oriented;
        for (size_t i = 0; i < l; ++i) {
            int p = f[i], q = f[(i + 1) % l];
            if ((p == a && q == b) || (p == b && q == a)) {
                if (p == b) {  // walk forward from a = q
                    for (size_t j = 0; j < l; ++j) oriented.push_back(f[(i + 1 + j) % l]);
                } else {  // walk backward from a = p
                    for (size_t j = 0; j < l; ++j) oriented.push_back(f[(i + l - j) % l]);
                }
                break;
            }
        }
        peeled.push_back({oriented, a, b});
        alive[pick] = false;
        --remaining;
        for (int v : f) --vertex_count[v];
    }

    std::vector<FaceAttachment> order;
    for (size_t i = 0; i < k; ++i)
        if (alive[i]) order.push_back({faces[i], -1, -1});
    for (auto it = peeled.rbegin(); it != peeled.rend(); ++it) order.push_back(*it);
    return order;
}

Decomposition decompose_girth5_outerplanar(const LabeledGraph& g,
                                           const OuterEmbedding& emb) {
    auto gi = girth(g);
    if (!gi || *gi < 5)
        throw std::invalid_argument("decompose_girth5_outerplanar: girth below 5");
    auto order = face_attachment_order(g, emb);

    Decomposition dec;
    for (size_t i = 0; i < order.size(); ++i) {
        const auto& att = order[i];
        if (att.anchor_a < 0) {
            dec.iset.insert(att.cycle[0]);
            for (size_t j = 1; j < att.cycle.size(); ++j) dec.fset.insert(att.cycle[j]);
        } else if (dec.iset.count(att.anchor_a) || dec.iset.count(att.anchor_b)) {
            for (size_t j = 1; j + 1 < att.cycle.size(); ++j) dec.fset.insert(att.cycle[j]);
        } else {
            // cycle = (v_1 = a, v_2, v_3, ..., v_l = b): v_3 joins the iset
            dec.iset.insert(att.cycle[2]);
            for (size_t j = 1; j + 1 < att.cycle.size(); ++j)
                if (j != 2) dec.fset.insert(att.cycle[j]);
        }
    }
    check_decomposition(g, dec);
    return dec;
}

namespace {

LabeledGraph with_extra_vertices(const LabeledGraph& g, int extra) {
    LabeledGraph h(g.vertex_count() + extra);
    for (const Edge& e : g.edges()) h.add_edge(e.u, e.v, e.label);
    return h;
}

// Neighbors of c that lie next to c on the outer boundary of its block. For an
// edge block this is the other endpoint; for a 2-connected block, the two
// outer-cycle neighbors. Attaching new squares only at boundary edges keeps
// the augmented graph outerplanar.
std::vector<int> boundary_neighbors(const LabeledGraph& g,
                                    const std::vector<std::pair<int, int>>& block, int c) {
    std::set<int> verts;
    for (auto [a, b] : block) {
        verts.insert(a);
        verts.insert(b);
    }
    if (verts.size() == 2) {
        for (int v : verts)
            if (v != c) return {v};
    }
    std::map<int, int> local;
    std::vector<int> back;
    for (int v : verts) {
        local[v] = (int)back.size();
        back.push_back(v);
    }
    LabeledGraph sub((int)verts.size());
    for (auto [a, b] : block) sub.add_edge(local[a], local[b], EdgeLabel::Near);
    auto emb = outer_embedding(sub);
    if (!emb)
        throw std::invalid_argument("augment_to_2connected: block not outerplanar");
    const auto& cyc = emb->outer_cycle;
    const size_t l = cyc.size();
    for (size_t i = 0; i < l; ++i)
        if (back[cyc[i]] == c)
            return {back[cyc[(i + l - 1) % l]], back[cyc[(i + 1) % l]]};
    throw std::logic_error("augment_to_2connected: cut vertex missing from block");
}

}  // namespace

LabeledGraph augment_to_2connected(const LabeledGraph& g) {
    if (!is_connected(g))
        throw std::invalid_argument("augment_to_2connected: input not connected");
    if (auto gi = girth(g); gi && *gi == 3)
        throw std::invalid_argument("augment_to_2connected: input has a triangle");
    if (g.vertex_count() < 2)
        throw std::invalid_argument("augment_to_2connected: need at least 2 vertices");

    LabeledGraph cur = g;
    if (cur.vertex_count() == 2) {
        // close a single edge into a 4-cycle
        cur = with_extra_vertices(cur, 2);
        int n = cur.vertex_count();
        cur.add_edge(0, n - 2, EdgeLabel::Near);
        cur.add_edge(n - 2, n - 1, EdgeLabel::Near);
        cur.add_edge(n - 1, 1, EdgeLabel::Near);
    }

    for (;;) {
        auto cuts = cut_vertices(cur);
        if (cuts.empty() && cur.vertex_count() >= 3) break;
        auto adj = cur.adjacency();

        // Bridge rule when both endpoints have another neighbor: close the
        // bridge into a square through boundary neighbors on either side.
        bool applied = false;
        for (auto [u, v] : bridges(cur)) {
            if (adj[u].size() < 2 || adj[v].size() < 2) continue;
            auto blocks = biconnected_components(cur);
            auto side_neighbor = [&](int c, int other) {
                for (const auto& blk : blocks) {
                    bool has_c = false, is_bridge_block = false;
                    for (auto [a, b] : blk) {
                        if (a == c || b == c) has_c = true;
                        if ((a == u && b == v) || (a == v && b == u))
                            is_bridge_block = true;
                    }
                    if (has_c && !is_bridge_block)
                        return boundary_neighbors(cur, blk, c).front();
                }
                (void)other;
                throw std::logic_error("augment_to_2connected: bridge endpoint block");
            };
            int up = side_neighbor(u, v);
            int vp = side_neighbor(v, u);
            cur.add_edge(up, vp, EdgeLabel::Near);
            applied = true;
            break;
        }
        if (applied) continue;

        // Cut-vertex rule: chain all blocks around the cut vertex, joining
        // boundary neighbors of consecutive blocks through new vertices.
        int c = cuts.front();
        auto blocks = biconnected_components(cur);
        std::vector<std::vector<int>> reps;
        for (const auto& blk : blocks) {
            bool has_c = false;
            for (auto [a, b] : blk)
                if (a == c || b == c) has_c = true;
            if (has_c) reps.push_back(boundary_neighbors(cur, blk, c));
        }
        if (reps.size() < 2)
            throw std::logic_error("augment_to_2connected: cut vertex without two blocks");
        int base = cur.vertex_count();
        cur = with_extra_vertices(cur, (int)reps.size() - 1);
        for (size_t i = 0; i + 1 < reps.size(); ++i) {
            int left = reps[i].back();
            int right = reps[i + 1].front();
            int x = base + (int)i;
            cur.add_edge(left, x, EdgeLabel::Near);
            cur.add_edge(x, right, EdgeLabel::Near);
        }
    }

    if (auto gi = girth(cur); gi && *gi == 3)
        throw std::logic_error("augment_to_2connected: augmentation created a triangle");
    if (!outer_embedding(cur))
        throw std::invalid_argument("augment_to_2connected: result not outerplanar");
    return cur;
}

Rat prop1_interior(const Rat& x, const Rat& y, EdgeLabel first, EdgeLabel second) {
    Rat d = y - x;
    Rat ad = d.abs();
    if (ad != Rat(2) && ad != Rat(3))
        throw std::invalid_argument("prop1_interior: |x-y| must be 2 or 3");
    long long mag = first == EdgeLabel::Near ? 2 : 3;
    bool same_sign = second == EdgeLabel::Near;
    long long sgn = (d > Rat(0)) == same_sign ? 1 : -1;
    return x + Rat(sgn * mag);
}

std::pair<long long, long long> prop2_assignment(EdgeLabel first, EdgeLabel second) {
    if (first == EdgeLabel::Near && second == EdgeLabel::Near) return {4, 2};
    if (first == EdgeLabel::Near) return {6, 2};
    if (second == EdgeLabel::Near) return {6, 4};
    return {6, 3};
}

std::vector<Rat> assign_path(const Rat& x, const Rat& y,
                             const std::vector<EdgeLabel>& labels) {
    const int n = (int)labels.size() + 1;
    if (n < 3) throw std::invalid_argument("assign_path: need at least 3 vertices");
    Rat span = (x - y).abs();
    if (n >= 4 && span > Rat(6))
        throw std::invalid_argument("assign_path: |x-y| > 6 for a path on >= 4 vertices");

    auto edge_ok = [](const Rat& a, const Rat& b, EdgeLabel l) {
        Rat gap = (a - b).abs();
        if (gap > Rat(6)) return false;
        return l == EdgeLabel::Near ? gap <= Rat(2) : gap > Rat(2);
    };

    if (n == 3 && x.is_integer() && y.is_integer() && (span == Rat(2) || span == Rat(3))) {
        Rat mid = prop1_interior(x, y, labels[0], labels[1]);
        return {x, mid, y};
    }

    long long lo = std::min(x, y).floor() - 6;
    long long hi = std::max(x, y).ceil() + 6;
    const int width = (int)(hi - lo + 1);
    const int interior = n - 2;
    // reach[i][c]: coordinate lo+c feasible for u_{i+2}; parent for the witness
    std::vector<std::vector<int>> parent(interior, std::vector<int>(width, -2));
    for (int c = 0; c < width; ++c)
        if (edge_ok(x, Rat(lo + c), labels[0])) parent[0][c] = -1;
    for (int i = 1; i < interior; ++i)
        for (int c = 0; c < width; ++c)
            for (int p = 0; p < width && parent[i][c] == -2; ++p)
                if (parent[i - 1][p] != -2 && edge_ok(Rat(lo + p), Rat(lo + c), labels[i]))
                    parent[i][c] = p;
    int last = -1;
    for (int c = 0; c < width; ++c)
        if (parent[interior - 1][c] != -2 && edge_ok(Rat(lo + c), y, labels[n - 2])) {
            last = c;
            break;
        }
    if (last < 0)
        throw std::runtime_error("assign_path: infeasible endpoint pair " + x.str() + "," +
                                 y.str());
    std::vector<Rat> coords(n);
    coords[0] = x;
    coords[n - 1] = y;
    for (int i = interior - 1; i >= 0; --i) {
        coords[i + 1] = Rat(lo + last);
        last = parent[i][last];
    }
    return coords;
}

namespace {

std::vector<std::vector<int>> connected_components(const LabeledGraph& g) {
    const int n = g.vertex_count();
    auto adj = g.adjacency();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < n; ++s) {
        if (comp[s] != -1) continue;
        comp[s] = (int)out.size();
        std::vector<int> verts{s};
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : adj[u])
                if (comp[v] == -1) {
                    comp[v] = comp[s];
                    verts.push_back(v);
                    q.push(v);
                }
        }
        std::sort(verts.begin(), verts.end());
        out.push_back(std::move(verts));
    }
    return out;
}

}  // namespace

IntervalRep represent_triangle_free_outerplanar(const LabeledGraph& g) {
    if (auto gi = girth(g); gi && *gi == 3)
        throw std::invalid_argument("represent_triangle_free_outerplanar: triangle found");

    IntervalRep rep;
    rep.diameter = Rat(2);
    for (const auto& comp : connected_components(g)) {
        if (comp.size() == 1) {
            rep.coord[comp[0]] = Rat(0);
            continue;
        }
        // local subgraph
        std::map<int, int> local;
        for (size_t i = 0; i < comp.size(); ++i) local[comp[i]] = (int)i;
        LabeledGraph sub((int)comp.size());
        for (const Edge& e : g.edges())
            if (local.count(e.u) && local.count(e.v))
                sub.add_edge(local[e.u], local[e.v], e.label);

        if (comp.size() == 2) {
            rep.coord[comp[0]] = Rat(0);
            rep.coord[comp[1]] =
                *sub.label(0, 1) == EdgeLabel::Near ? Rat(2) : Rat(3);
            continue;
        }

        LabeledGraph aug = augment_to_2connected(sub);
        auto emb = outer_embedding(aug);
        if (!emb)
            throw std::invalid_argument(
                "represent_triangle_free_outerplanar: component not outerplanar");
        auto order = face_attachment_order(aug, *emb);

        std::map<int, Rat> coord;
        for (const auto& att : order) {
            const auto& c = att.cycle;
            if (att.anchor_a < 0) {
                // base cycle: pin one edge, fill the rest as a path
                coord[c[0]] = Rat(0);
                coord[c[1]] = *aug.label(c[0], c[1]) == EdgeLabel::Near ? Rat(2) : Rat(3);
                std::vector<int> path(c.begin() + 1, c.end());
                path.push_back(c[0]);
                std::vector<EdgeLabel> labels;
                for (size_t j = 0; j + 1 < path.size(); ++j)
                    labels.push_back(*aug.label(path[j], path[j + 1]));
                auto coords = assign_path(coord[c[1]], Rat(0), labels);
                for (size_t j = 0; j < path.size(); ++j) coord[path[j]] = coords[j];
            } else {
                std::vector<EdgeLabel> labels;
                for (size_t j = 0; j + 1 < c.size(); ++j)
                    labels.push_back(*aug.label(c[j], c[j + 1]));
                auto coords = assign_path(coord.at(att.anchor_a), coord.at(att.anchor_b),
                                          labels);
                for (size_t j = 0; j < c.size(); ++j) coord[c[j]] = coords[j];
            }
        }
        for (size_t i = 0; i < comp.size(); ++i) rep.coord[comp[i]] = coord.at((int)i);
    }

    if (!verify_interval(g, rep).ok)
        throw std::logic_error("represent_triangle_free_outerplanar: verification failed");
    return rep;
}

}  // namespace weakrep
