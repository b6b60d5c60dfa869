#pragma once

#include <vector>

#include "kirchcert/graph.hpp"

namespace kirchcert {

// One representative per isomorphism class of simple connected graphs on
// exactly num_vertices labelled vertices (2 <= num_vertices <= 7).  The
// representative of each class is its minimal edge bitmask over all vertex
// relabellings, with edges of K_n in lexicographic order; the list is sorted
// by that mask, so the corpus and its order are deterministic.
std::vector<Graph> simple_connected_graphs(int num_vertices);

// Concatenation of simple_connected_graphs(v) for v in [min_vertices, max_vertices].
std::vector<Graph> simple_connected_corpus(int min_vertices, int max_vertices);

// Fixed list of small connected non-simple multigraphs (parallel edges and/or
// loops), used to exercise the degenerate side of the theory.
std::vector<Graph> multigraph_corpus();

}  // namespace kirchcert
