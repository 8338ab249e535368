#pragma once

#include <array>
#include <map>
#include <string>

#include "weakrep/interval.hpp"

namespace weakrep {

// Axis-aligned unit squares in the plane, all with the same side length.
struct SquareContactRep {
    std::map<int, std::pair<Rat, Rat>> center;  // vertex -> (cx, cy)
    Rat side{1};
};

// Axis-aligned equal cubes given by base corner and shared side length.
struct CubeScene {
    std::map<int, std::array<Rat, 3>> base;  // vertex -> (x, y, z) base corner
    Rat side{1};
};

// Lift each square to a cube whose bottom face sits at z = c(v). Requires
// side = t + eps with 0 < eps < 1, a valid threshold coloring of g, and
// squares that realize every edge of g by a positive-length shared side.
CubeScene lift_cubes(const LabeledGraph& g, const SquareContactRep& sq,
                     const ThresholdColoring& col, const Rat& eps);

// Contact = shared boundary of positive area (corner/edge touching never
// counts). Near edges must be in contact, far edges must not; with
// check_nonedges (default), non-adjacent pairs must not be in contact either.
// Pairs with overlapping interiors are always violations.
VerifyResult verify_cube_contacts(const LabeledGraph& g, const CubeScene& scene,
                                  bool check_nonedges = true);

// Row of n squares touching side-to-side; contact graph is the path P_n.
SquareContactRep gen_grid_strip_squares(int n, const Rat& side);

// Plain-text triangle-free mesh (wavefront style v/f lines) for external viewers.
std::string export_cube_scene_obj(const CubeScene& scene);

}  // namespace weakrep
