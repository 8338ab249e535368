#include "weakrep/disk.hpp"

#include <array>
#include <cmath>
#include <cstdlib>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "weakrep/graph_algorithms.hpp"
#include "weakrep/interval_solver.hpp"

namespace weakrep {

DiskVerifyResult verify_disk(const LabeledGraph& g, const DiskRep& rep) {
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!rep.point.count(v))
            throw std::invalid_argument("verify_disk: missing point for vertex " +
                                        std::to_string(v));
    DiskVerifyResult r;
    const long long d2 = rep.diameter * rep.diameter;
    for (const Edge& e : g.edges()) {
        long long s = sqdist(rep.point.at(e.u), rep.point.at(e.v));
        bool bad = s == 0 || ((s <= d2) != (e.label == EdgeLabel::Near));
        if (bad) {
            r.ok = false;
            r.violations.emplace_back(e.u, e.v);
        }
    }
    return r;
}

LatticeIsometry LatticeIsometry::inverse() const {
    // Orthogonal integer matrix: inverse is the transpose; undo translation.
    LatticeIsometry inv;
    inv.m00 = m00;
    inv.m01 = m10;
    inv.m10 = m01;
    inv.m11 = m11;
    inv.t = {-(inv.m00 * t.x + inv.m01 * t.y), -(inv.m10 * t.x + inv.m11 * t.y)};
    return inv;
}

std::pair<LatticeIsometry, LatticePoint> canonicalize_pair(const LatticePoint& p_u,
                                                           const LatticePoint& p_w) {
    if (p_u == p_w) throw std::invalid_argument("canonicalize_pair: coincident points");
    static constexpr std::array<std::array<long long, 4>, 8> kSym = {{
        {1, 0, 0, 1},
        {0, 1, 1, 0},
        {-1, 0, 0, 1},
        {0, -1, 1, 0},
        {1, 0, 0, -1},
        {0, 1, -1, 0},
        {-1, 0, 0, -1},
        {0, -1, -1, 0},
    }};
    LatticePoint q = p_w - p_u;
    for (const auto& s : kSym) {
        LatticePoint r{s[0] * q.x + s[1] * q.y, s[2] * q.x + s[3] * q.y};
        if (0 <= r.y && r.y <= r.x) {
            LatticeIsometry iso;
            iso.m00 = s[0];
            iso.m01 = s[1];
            iso.m10 = s[2];
            iso.m11 = s[3];
            iso.t = {-(s[0] * p_u.x + s[1] * p_u.y), -(s[2] * p_u.x + s[3] * p_u.y)};
            return {iso, r};
        }
    }
    throw std::logic_error("canonicalize_pair: no symmetry found");
}

namespace {

struct Table1Key {
    long long a, b;
    bool near_uv, near_vw;
    bool operator<(const Table1Key& o) const {
        return std::tie(a, b, near_uv, near_vw) < std::tie(o.a, o.b, o.near_uv, o.near_vw);
    }
};

const std::map<Table1Key, LatticePoint>& table1() {
    static const std::map<Table1Key, LatticePoint> t = [] {
        std::map<Table1Key, LatticePoint> m;
        auto row = [&](long long a, long long b, bool nu, bool nv, long long x,
                       long long y) { m[{a, b, nu, nv}] = {x, y}; };
        // (N,N)
        row(1, 0, true, true, 2, 0);
        row(2, 0, true, true, 1, 0);
        row(3, 0, true, true, 2, 0);
        row(4, 0, true, true, 2, 0);
        row(1, 1, true, true, 2, 0);
        row(2, 1, true, true, 2, 0);
        row(3, 1, true, true, 2, 0);
        row(2, 2, true, true, 2, 0);
        // (N,F)
        row(1, 0, true, false, 0, 2);
        row(2, 0, true, false, 0, 1);
        row(3, 0, true, false, 0, 1);
        row(4, 0, true, false, 1, 0);
        row(1, 1, true, false, -1, 0);
        row(2, 1, true, false, -1, 0);
        row(3, 1, true, false, 1, 0);
        row(2, 2, true, false, 1, 0);
        // (F,F)
        row(1, 0, false, false, 2, 2);
        row(2, 0, false, false, 1, 2);
        row(3, 0, false, false, 2, 2);
        row(4, 0, false, false, 2, 2);
        row(1, 1, false, false, 0, 3);
        row(2, 1, false, false, 0, 3);
        row(3, 1, false, false, 1, 2);
        row(2, 2, false, false, 0, 3);
        return m;
    }();
    return t;
}

}  // namespace

LatticePoint place_vertex_table1(const LatticePoint& canonical_w, EdgeLabel label_uv,
                                 EdgeLabel label_vw) {
    if (label_uv == EdgeLabel::Far && label_vw == EdgeLabel::Near) {
        // Swap the roles of u and w, look up the (N,F) row around w, map back.
        auto [iso, canon] = canonicalize_pair(canonical_w, {0, 0});
        LatticePoint v = place_vertex_table1(canon, EdgeLabel::Near, EdgeLabel::Far);
        return iso.inverse().apply(v);
    }
    Table1Key key{canonical_w.x, canonical_w.y, label_uv == EdgeLabel::Near,
                  label_vw == EdgeLabel::Near};
    auto it = table1().find(key);
    if (it == table1().end())
        throw std::invalid_argument("place_vertex_table1: (a,b) outside table domain");
    return it->second;
}

DiskRep represent_degree2_contractible(const LabeledGraph& g) {
    auto seq = find_degree2_contraction_sequence(g);
    if (!seq)
        throw std::invalid_argument(
            "represent_degree2_contractible: graph is not degree-2 contractible");

    // Forward replay, recording per-step labels (synthetic bypass edges near).
    std::map<std::pair<int, int>, EdgeLabel> cur;
    for (const Edge& e : g.edges()) cur[{e.u, e.v}] = e.label;
    auto key = [](int a, int b) { return std::pair(std::min(a, b), std::max(a, b)); };

    struct StepInfo {
        EdgeLabel uv;
        std::optional<EdgeLabel> vw;
    };
    std::vector<StepInfo> info;
    for (const ContractionStep& s : *seq) {
        StepInfo si{cur.at(key(s.contracted, s.kept)), std::nullopt};
        if (s.other) si.vw = cur.at(key(s.contracted, *s.other));
        cur.erase(key(s.contracted, s.kept));
        if (s.other) {
            cur.erase(key(s.contracted, *s.other));
            if (!cur.count(key(s.kept, *s.other)))
                cur[key(s.kept, *s.other)] = EdgeLabel::Near;  // synthetic bypass
        }
        info.push_back(si);
    }

    // Reverse replay: every surviving vertex sits at the origin, then each
    // contracted vertex is reinserted next to its one or two neighbors.
    DiskRep rep;
    rep.diameter = 2;
    for (int v = 0; v < g.vertex_count(); ++v) rep.point[v] = {0, 0};
    for (int i = (int)seq->size() - 1; i >= 0; --i) {
        const ContractionStep& s = (*seq)[i];
        const StepInfo& si = info[i];
        if (!s.other) {
            LatticePoint off =
                si.uv == EdgeLabel::Near ? LatticePoint{2, 0} : LatticePoint{0, 3};
            rep.point[s.contracted] = rep.point[s.kept] + off;
        } else {
            auto [iso, canon] = canonicalize_pair(rep.point[s.kept], rep.point[*s.other]);
            LatticePoint v = place_vertex_table1(canon, si.uv, *si.vw);
            rep.point[s.contracted] = iso.inverse().apply(v);
        }
    }

    auto check = verify_disk(g, rep);
    if (!check.ok)
        throw std::logic_error("represent_degree2_contractible: verification failed");
    for (const Edge& e : g.edges())
        if (sqdist(rep.point[e.u], rep.point[e.v]) > 16)
            throw std::logic_error("represent_degree2_contractible: edge gap above 4");
    return rep;
}

std::optional<DiskRep> grid_disk_oracle(const LabeledGraph& g, long long radius,
                                        long long work_bound) {
    if (radius < 0) throw std::invalid_argument("grid_disk_oracle: negative radius");
    const int n = g.vertex_count();
    long long bound = work_bound > 0 ? work_bound : work_bound_bits();
    double bits = 2.0 * n * std::log2(2.0 * radius + 1.0);
    if (bits > double(bound))
        throw std::runtime_error("grid_disk_oracle: instance exceeds work bound");

    auto adj = g.adjacency();
    // BFS order per component so placements are constrained early.
    std::vector<int> order;
    std::vector<bool> first_of_component(n, false);
    {
        std::vector<bool> seen(n, false);
        for (int s = 0; s < n; ++s) {
            if (seen[s]) continue;
            seen[s] = true;
            first_of_component[s] = true;
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

    DiskRep rep;
    rep.diameter = 2;
    std::map<int, LatticePoint> placed;
    const long long d2 = rep.diameter * rep.diameter;
    auto assign = [&](auto&& self, size_t i) -> bool {
        if (i == order.size()) return true;
        int v = order[i];
        for (long long x = -radius; x <= radius; ++x) {
            for (long long y = -radius; y <= radius; ++y) {
                // Grid symmetry: the first vertex of a component can be
                // confined to the octant 0 <= y <= x.
                if (first_of_component[v] && !(0 <= y && y <= x)) continue;
                LatticePoint p{x, y};
                bool ok = true;
                for (int w : adj[v]) {
                    if (!placed.count(w)) continue;
                    long long s = sqdist(p, placed[w]);
                    if (s == 0 || ((s <= d2) != (g.label(v, w) == EdgeLabel::Near))) {
                        ok = false;
                        break;
                    }
                }
                if (!ok) continue;
                placed[v] = p;
                if (self(self, i + 1)) return true;
                placed.erase(v);
            }
        }
        return false;
    };
    if (!assign(assign, 0)) return std::nullopt;
    rep.point = placed;
    return rep;
}

}  // namespace weakrep
