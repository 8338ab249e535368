#pragma once

#include <optional>

#include "weakrep/interval.hpp"

namespace weakrep {

struct IntervalDecision {
    bool sat = false;
    std::optional<IntervalRep> witness;  // d = 1, rational coordinates
};

// Complete, exact decision of weak unit interval representability.
// Branches over far-edge orientations; each orientation is a difference
// constraint system with strict edges, decided by negative-cycle detection
// (a cycle is infeasible iff its weight is < 0, or = 0 with a strict edge).
// On SAT, shortest-path potentials with strict slack eps = 1/(2n) give the
// witness, which is re-verified before returning.
IntervalDecision decide_interval(const LabeledGraph& g);

// Rational witness -> integer threshold coloring (scale by the lcm of all
// denominators, shift so colors start at 1). Re-verified against g at
// diameter t; throws on failure.
ThresholdColoring to_threshold_coloring(const LabeledGraph& g, const IntervalRep& rep);

// Independent brute-force oracle: exhausts colorings V -> {0..max_color} and
// thresholds t in {0..max_color}. One-sided: SAT is definitive, failure is
// unknown-unsat. Throws when |V|*log2(max_color+1) exceeds the work bound
// (bits; 0 = use the WEAKREP_WORK_BOUND env var or the built-in default).
std::optional<ThresholdColoring> grid_oracle_interval(const LabeledGraph& g,
                                                      long long max_color,
                                                      long long work_bound_bits = 0);

// All labelings of g's edge set (labels of g ignored) for which
// decide_interval is UNSAT. Throws if |E| > max_edges.
std::vector<LabeledGraph> find_hard_labelings(const LabeledGraph& g, int max_edges = 20);

// Work bound plumbing: WEAKREP_WORK_BOUND env var, else the given default.
long long work_bound_bits(long long fallback = 64);

}  // namespace weakrep
