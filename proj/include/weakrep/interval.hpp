#pragma once

#include <map>
#include <vector>

#include "weakrep/graph.hpp"
#include "weakrep/rational.hpp"

namespace weakrep {

// 1D representation: interval centers I(v) and a common diameter d.
struct IntervalRep {
    std::map<int, Rat> coord;
    Rat diameter{1};
};

struct VerifyResult {
    bool ok = true;
    std::vector<std::pair<int, int>> violations;
};

// Near edge: |I(u)-I(v)| <= d; far edge: |I(u)-I(v)| > d (boundary counts as
// near). Throws if a vertex of g has no coordinate.
VerifyResult verify_interval(const LabeledGraph& g, const IntervalRep& rep);

// Integer coloring c: V -> {1..r} with threshold t: near iff |c(u)-c(v)| <= t.
struct ThresholdColoring {
    std::map<int, long long> color;
    long long range = 1;      // r
    long long threshold = 0;  // t
};

IntervalRep to_interval_rep(const ThresholdColoring& col);

}  // namespace weakrep
