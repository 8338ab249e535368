#pragma once

#include <optional>
#include <vector>

#include "weakrep/graph.hpp"
#include "weakrep/rational.hpp"

namespace weakrep {

// Length of a shortest cycle; nullopt if acyclic.
std::optional<int> girth(const LabeledGraph& g);

struct ContractionStep {
    int contracted;            // the removed degree-<=2 vertex
    int kept;                  // the neighbor the edge was contracted into
    std::optional<int> other;  // second neighbor, if the vertex had degree 2
};

// Greedy degree-<=2 elimination witness: repeatedly contract an edge at a
// vertex of degree <= 2 (adding the bypass edge when missing) until every
// component is a single vertex. Returns nullopt when the greedy closure gets
// stuck.
std::optional<std::vector<ContractionStep>> find_degree2_contraction_sequence(
    const LabeledGraph& g);

struct OuterEmbedding {
    std::vector<int> outer_cycle;  // Hamiltonian cycle, all chords non-crossing
};

// Unique Hamiltonian outer cycle of a 2-connected outerplanar graph;
// nullopt if g is not outerplanar or not 2-connected.
std::optional<OuterEmbedding> outer_embedding(const LabeledGraph& g);

// All bounded faces of the outerplanar embedding, each as a vertex cycle.
// Throws if the embedding is inconsistent with g or the weak dual is not a tree.
std::vector<std::vector<int>> internal_faces(const LabeledGraph& g,
                                             const OuterEmbedding& emb);

// Exceeds the planar weak-unit-interval edge budget |E| <= floor(11|V|/4) - 6.
enum class DensityVerdict { WithinBound, ExceedsBound };
DensityVerdict density_certificate(const LabeledGraph& g);

// Exact maximum average degree: max over nonempty subgraphs of 2|E(H)|/|V(H)|.
Rat mad(const LabeledGraph& g);
// Independent subset-enumeration oracle, |V| <= ~20.
Rat mad_bruteforce(const LabeledGraph& g);

// Connectivity helpers.
bool is_connected(const LabeledGraph& g);
std::vector<int> cut_vertices(const LabeledGraph& g);
std::vector<std::pair<int, int>> bridges(const LabeledGraph& g);
// Biconnected components as edge-sets grouped by block.
std::vector<std::vector<std::pair<int, int>>> biconnected_components(const LabeledGraph& g);

}  // namespace weakrep
