#pragma once

#include <string>

#include "weakrep/cube_lift.hpp"
#include "weakrep/disk.hpp"
#include "weakrep/interval.hpp"
#include "weakrep/interval_construct.hpp"

namespace weakrep {

// JSON wire formats. Rationals travel as "p/q" strings ("p" when integral);
// all object keys are emitted sorted so serialization is deterministic.

std::string interval_rep_to_json(const IntervalRep& rep);
IntervalRep interval_rep_from_json(const std::string& text);

std::string unsat_json();  // {"result":"unsat"}

std::string disk_rep_to_json(const DiskRep& rep);
DiskRep disk_rep_from_json(const std::string& text);

std::string decomposition_to_json(const Decomposition& dec);
Decomposition decomposition_from_json(const std::string& text);

std::string threshold_coloring_to_json(const ThresholdColoring& col);
ThresholdColoring threshold_coloring_from_json(const std::string& text);

std::string square_rep_to_json(const SquareContactRep& sq);
SquareContactRep square_rep_from_json(const std::string& text);

std::string cube_scene_to_json(const CubeScene& scene);
CubeScene cube_scene_from_json(const std::string& text);

}  // namespace weakrep
