#pragma once

#include <string>

#include "weakrep/disk.hpp"
#include "weakrep/interval.hpp"

namespace weakrep {

// Deterministic SVG renderers. Both verify the representation first and throw
// std::invalid_argument when it does not realize the labeling. Near edges are
// drawn solid, far edges dashed. Coordinates are printed with fixed precision
// so output is byte-stable across runs.

// Intervals as horizontal segments of length d, one row per vertex.
std::string interval_rep_to_svg(const LabeledGraph& g, const IntervalRep& rep);

// Disks as circles of radius d/2 around the lattice points.
std::string disk_rep_to_svg(const LabeledGraph& g, const DiskRep& rep);

}  // namespace weakrep
