#pragma once

#include <string>
#include <vector>

#include "hspan/hypergraph.hpp"

namespace hspan {

/// Clique expansion of a hypergraph. Every graph edge remembers the
/// hyperedge it came from, which is what makes lifting spanners back
/// possible. `simple` graphs keep only the lightest parallel edge per pair.
struct AssociatedGraph {
    struct Edge {
        int u = -1;  // u < v
        int v = -1;
        double weight = 1.0;
        int source_hyperedge_id = -1;
    };

    int n = 0;
    bool simple = false;
    std::vector<Edge> edges;
};

/// Replaces each hyperedge h by a clique: C(|h|,2) undirected edges of
/// weight w(h), each mapped back to h. Distances coincide with hyperpath
/// distances in the input.
AssociatedGraph expand_multigraph(const Hypergraph& h);

/// Keeps, per unordered vertex pair, the minimum-weight edge; ties break
/// toward the smallest source hyperedge id. Distance-preserving and
/// idempotent.
AssociatedGraph simplify(const AssociatedGraph& g);

/// Lifts a set of graph-edge indices (into g.edges) back to the
/// sub-hypergraph of `h` on their source hyperedges. Output preserves h's
/// edge order; parallel picks from one clique dedup to one hyperedge.
Hypergraph lift(const AssociatedGraph& g, const std::vector<int>& spanner_edges,
                const Hypergraph& h);

/// Edge-list text export, one `u v w src` row per edge.
std::string to_edge_list(const AssociatedGraph& g);

/// All-pairs distances in the associated graph (plain graph Dijkstra).
std::vector<std::vector<double>> graph_all_pairs(const AssociatedGraph& g);

}  // namespace hspan
