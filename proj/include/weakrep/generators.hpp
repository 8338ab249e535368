#pragma once

#include "weakrep/graph.hpp"

namespace weakrep {

// Wheel W_n (hub v_1 = id 0, rim v_2..v_n = ids 1..n-1) carrying the
// unrepresentable labeling: (v_2,v_n) far, hub spokes (v_1,v_i) far for
// 3 <= i <= n-1, everything else near. Requires n >= 4.
LabeledGraph gen_wheel_hard(int n);

// 3-sun: inner triangle {0,1,2}, outer vertices 3 (adj 0,1), 4 (adj 1,2),
// 5 (adj 2,0). Labels are a placeholder (all near); hard labelings are
// recovered by search.
LabeledGraph gen_sungraph();

// Deterministic-for-seed series-parallel graph on n >= 2 vertices built by
// random edge subdivisions and triangle attachments, labels uniform random.
LabeledGraph gen_random_series_parallel(int n, unsigned seed);

// Hardness-reduction transformer: complete graph K_n labeled near exactly on
// the edges of g (labels of g itself are ignored).
LabeledGraph np_reduction(const LabeledGraph& g);

// Candidate planar girth-4 structures (<= 8 vertices) for the impossibility
// search; labels are placeholders.
std::vector<LabeledGraph> girth4_candidates();

}  // namespace weakrep
