#pragma once

#include <optional>
#include <set>

#include "weakrep/graph_algorithms.hpp"
#include "weakrep/interval.hpp"

namespace weakrep {

// Vertex bipartition witnessing "2-independent set + forest" structure.
struct Decomposition {
    std::set<int> iset;
    std::set<int> fset;
};

// An I-pair: two iset vertices at distance exactly 2 joined by a unique
// 2-path through mid; the path's two edges are the bad edges.
struct IPair {
    int u;
    int v;
    int mid;
};

// Validity checks. Strict: iset pairwise graph distance > 2, G[fset] a forest,
// partition of V. Relaxed: iset independent with at most one distance-2 mate
// per vertex (unique 2-path); returns the I-pairs. Both throw on invalid input.
void check_decomposition(const LabeledGraph& g, const Decomposition& dec);
std::vector<IPair> check_decomposition_relaxed(const LabeledGraph& g,
                                               const Decomposition& dec);

// Rooted-BFS coloring over the fset forest; iset pinned at 0, forest values
// in {-2,-1,1,2}; valid at d = 1.
IntervalRep color_forest_2independent(const LabeledGraph& g, const Decomposition& dec);

// Nearly-2-independent variant: drop one bad edge per I-pair, color the rest,
// stretch {0,±1,±2} to {0,±2,±5}, then repair each dropped edge locally;
// valid at d = 3.
IntervalRep color_nearly_2independent(const LabeledGraph& g, const Decomposition& dec);

// Exact backtracking search for a (2-independent, forest) decomposition.
// Throws when |V| > max_exact.
std::optional<Decomposition> decompose_forest_2independent(const LabeledGraph& g,
                                                           int max_exact = 24);

// Face-peeling decomposition of a 2-connected girth->=5 outerplanar graph.
Decomposition decompose_girth5_outerplanar(const LabeledGraph& g,
                                           const OuterEmbedding& emb);

// 2-connected triangle-free outerplanar supergraph (bridge/cut-vertex
// augmentation rules; added edges labeled near). Restricting any
// representation of the output to V(g) represents g.
LabeledGraph augment_to_2connected(const LabeledGraph& g);

// Coordinates for the path u_1..u_n with I(u_1) = x, I(u_n) = y, integer
// interiors, every label satisfied at d = 2 and consecutive gaps <= 6.
// Complete DP over the integer grid; throws when the pair is infeasible.
std::vector<Rat> assign_path(const Rat& x, const Rat& y,
                             const std::vector<EdgeLabel>& labels);

// Hand-coded P_3 rules, kept as cross-check oracles for the DP.
// |x-y| in {2,3}: always feasible; returns the interior coordinate.
Rat prop1_interior(const Rat& x, const Rat& y, EdgeLabel first, EdgeLabel second);
// Returns the feasible (far endpoint, interior) pair for endpoints 0,4 or 0,6.
std::pair<long long, long long> prop2_assignment(EdgeLabel first, EdgeLabel second);

// Ear-peeling pipeline over the weak dual; valid at d = 2 with all adjacent
// gaps <= 6.
IntervalRep represent_triangle_free_outerplanar(const LabeledGraph& g);

// Peel order shared by the girth-5 and ear-peeling inductions: faces listed
// root first, each later face attached to the already-built subgraph along
// exactly one edge (anchor_a, anchor_b), its remaining vertices new.
struct FaceAttachment {
    std::vector<int> cycle;  // oriented anchor_a, new..., anchor_b
    int anchor_a = -1;       // -1 on the root face
    int anchor_b = -1;
};
std::vector<FaceAttachment> face_attachment_order(const LabeledGraph& g,
                                                  const OuterEmbedding& emb);

}  // namespace weakrep
