#include "weakrep/cube_lift.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <stdexcept>

namespace weakrep {

namespace {

// Overlap length of [a1, a1+s] and [a2, a2+s]; negative when separated.
Rat axis_overlap(const Rat& a1, const Rat& a2, const Rat& s) {
    Rat lo = std::max(a1, a2);
    Rat hi = std::min(a1 + s, a2 + s);
    return hi - lo;
}

struct Overlap {
    Rat x, y, z;
};

Overlap cube_overlap(const std::array<Rat, 3>& a, const std::array<Rat, 3>& b,
                     const Rat& s) {
    return {axis_overlap(a[0], b[0], s), axis_overlap(a[1], b[1], s),
            axis_overlap(a[2], b[2], s)};
}

// Positive-area shared boundary: touching in exactly one axis, overlapping in
// the other two.
bool in_contact(const Overlap& o) {
    int zero = 0, pos = 0;
    for (const Rat* r : {&o.x, &o.y, &o.z}) {
        if (*r == Rat(0)) ++zero;
        if (*r > Rat(0)) ++pos;
    }
    return zero == 1 && pos == 2;
}

bool interiors_overlap(const Overlap& o) {
    return o.x > Rat(0) && o.y > Rat(0) && o.z > Rat(0);
}

bool squares_touch(const std::pair<Rat, Rat>& a, const std::pair<Rat, Rat>& b,
                   const Rat& s) {
    Rat ox = axis_overlap(a.first - s / Rat(2), b.first - s / Rat(2), s);
    Rat oy = axis_overlap(a.second - s / Rat(2), b.second - s / Rat(2), s);
    return (ox == Rat(0) && oy > Rat(0)) || (oy == Rat(0) && ox > Rat(0));
}

}  // namespace

CubeScene lift_cubes(const LabeledGraph& g, const SquareContactRep& sq,
                     const ThresholdColoring& col, const Rat& eps) {
    if (!(Rat(0) < eps && eps < Rat(1)))
        throw std::invalid_argument("lift_cubes: eps must lie in (0,1)");
    if (sq.side != Rat(col.threshold) + eps)
        throw std::invalid_argument("lift_cubes: square side must equal t + eps");
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (!sq.center.count(v)) throw std::invalid_argument("lift_cubes: missing square");
        if (!col.color.count(v)) throw std::invalid_argument("lift_cubes: missing color");
    }
    if (!verify_interval(g, to_interval_rep(col)).ok)
        throw std::invalid_argument("lift_cubes: coloring is not a valid threshold coloring");
    for (const Edge& e : g.edges())
        if (!squares_touch(sq.center.at(e.u), sq.center.at(e.v), sq.side))
            throw std::invalid_argument("lift_cubes: edge without square contact");

    CubeScene scene;
    scene.side = sq.side;
    for (auto& [v, c] : sq.center) {
        Rat half = sq.side / Rat(2);
        scene.base[v] = {c.first - half, c.second - half, Rat(col.color.at(v))};
    }
    return scene;
}

VerifyResult verify_cube_contacts(const LabeledGraph& g, const CubeScene& scene,
                                  bool check_nonedges) {
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!scene.base.count(v))
            throw std::invalid_argument("verify_cube_contacts: missing cube for vertex " +
                                        std::to_string(v));
    VerifyResult r;
    const int n = g.vertex_count();
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            Overlap o = cube_overlap(scene.base.at(u), scene.base.at(v), scene.side);
            auto l = g.label(u, v);
            bool bad;
            if (interiors_overlap(o)) {
                bad = true;
            } else if (l.has_value()) {
                bad = in_contact(o) != (*l == EdgeLabel::Near);
            } else {
                bad = check_nonedges && in_contact(o);
            }
            if (bad) {
                r.ok = false;
                r.violations.emplace_back(u, v);
            }
        }
    }
    return r;
}

SquareContactRep gen_grid_strip_squares(int n, const Rat& side) {
    if (n < 0 || side <= Rat(0))
        throw std::invalid_argument("gen_grid_strip_squares: bad arguments");
    SquareContactRep sq;
    sq.side = side;
    Rat half = side / Rat(2);
    for (int i = 0; i < n; ++i) sq.center[i] = {Rat(i) * side + half, half};
    return sq;
}

std::string export_cube_scene_obj(const CubeScene& scene) {
    std::ostringstream out;
    int base_index = 1;
    for (auto& [v, b] : scene.base) {
        out << "# cube " << v << "\n";
        for (int dz = 0; dz <= 1; ++dz)
            for (int dy = 0; dy <= 1; ++dy)
                for (int dx = 0; dx <= 1; ++dx) {
                    Rat x = b[0] + (dx ? scene.side : Rat(0));
                    Rat y = b[1] + (dy ? scene.side : Rat(0));
                    Rat z = b[2] + (dz ? scene.side : Rat(0));
                    out << "v " << x.to_double() << ' ' << y.to_double() << ' '
                        << z.to_double() << "\n";
                }
        static const int faces[6][4] = {{0, 1, 3, 2}, {4, 6, 7, 5}, {0, 4, 5, 1},
                                        {2, 3, 7, 6}, {0, 2, 6, 4}, {1, 5, 7, 3}};
        for (auto& f : faces) {
            out << 'f';
            for (int k : f) out << ' ' << base_index + k;
            out << "\n";
        }
        base_index += 8;
    }
    return out.str();
}

}  // namespace weakrep
