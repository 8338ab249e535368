#pragma once

#include <map>
#include <optional>

#include "weakrep/graph.hpp"

namespace weakrep {

struct LatticePoint {
    long long x = 0;
    long long y = 0;
    friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
    friend LatticePoint operator+(const LatticePoint& a, const LatticePoint& b) {
        return {a.x + b.x, a.y + b.y};
    }
    friend LatticePoint operator-(const LatticePoint& a, const LatticePoint& b) {
        return {a.x - b.x, a.y - b.y};
    }
};

inline long long sqdist(const LatticePoint& a, const LatticePoint& b) {
    long long dx = a.x - b.x, dy = a.y - b.y;
    return dx * dx + dy * dy;
}

// 2D representation on the integer lattice with integer diameter (default 2).
struct DiskRep {
    std::map<int, LatticePoint> point;
    long long diameter = 2;
};

struct DiskVerifyResult {
    bool ok = true;
    std::vector<std::pair<int, int>> violations;
};

// Exact integer check: near iff squared distance <= d^2; adjacent vertices
// must occupy distinct points. Throws on a missing point.
DiskVerifyResult verify_disk(const LabeledGraph& g, const DiskRep& rep);

// One of the 8 lattice symmetries composed with a translation:
// p -> M*(p + pre), applied as map(p) = M*p + t.
struct LatticeIsometry {
    long long m00 = 1, m01 = 0, m10 = 0, m11 = 1;
    LatticePoint t;

    LatticePoint apply(const LatticePoint& p) const {
        return {m00 * p.x + m01 * p.y + t.x, m10 * p.x + m11 * p.y + t.y};
    }
    LatticeIsometry inverse() const;
};

// Isometry mapping p_u -> (0,0) and p_w -> (a,b) with 0 <= b <= a.
// Throws on coincident points.
std::pair<LatticeIsometry, LatticePoint> canonicalize_pair(const LatticePoint& p_u,
                                                           const LatticePoint& p_w);

// Placement table for reinserting a degree-2 vertex v between u at (0,0) and
// w at the canonical (a,b); covers (N,N), (N,F), (F,F) verbatim and (F,N) by
// swapping the roles of u and w. Throws when (a,b) is outside the table.
LatticePoint place_vertex_table1(const LatticePoint& canonical_w, EdgeLabel label_uv,
                                 EdgeLabel label_vw);

// Replays a degree-2 contraction sequence in reverse; synthetic bypass edges
// are labeled near. Output verifies at d = 2 with every edge gap <= 4.
// Throws if g is not degree-2 contractible.
DiskRep represent_degree2_contractible(const LabeledGraph& g);

// Exhaustive lattice search over [-radius, radius]^2. One-sided: a returned
// representation is definitive; nullopt is unknown-unsat. Throws when the
// search exceeds the work bound (bits; 0 = env/default).
std::optional<DiskRep> grid_disk_oracle(const LabeledGraph& g, long long radius,
                                        long long work_bound_bits = 0);

}  // namespace weakrep
