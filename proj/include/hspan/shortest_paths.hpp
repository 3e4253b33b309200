#pragma once

#include <optional>
#include <vector>

#include "hspan/hypergraph.hpp"

namespace hspan {

/// Shortest-path engine over hyperpaths: a step traverses one non-faulty
/// hyperedge between any two of its vertices at cost w(h). Equivalent to
/// Dijkstra on the associated multigraph with the faulty cliques removed.
///
/// Queries are read-only and safe to run concurrently on one Hypergraph.

/// delta_{H\F}(u, v); kInf when disconnected, 0 for u == v.
double shortest_distance(const Hypergraph& h, const FaultSet& faults, int u, int v);

/// Distances from `source` to every vertex under the fault set.
std::vector<double> shortest_distances_from(const Hypergraph& h,
                                            const FaultSet& faults, int source);

/// Witness path achieving shortest_distance, or nullopt iff disconnected.
std::optional<HyperPath> shortest_path(const Hypergraph& h, const FaultSet& faults,
                                       int u, int v);

/// n x n matrix of pairwise distances under the fault set (one Dijkstra per
/// vertex; the oracle-grade path, no incremental structure).
std::vector<std::vector<double>> all_pairs_distances(const Hypergraph& h,
                                                     const FaultSet& faults);

}  // namespace hspan
