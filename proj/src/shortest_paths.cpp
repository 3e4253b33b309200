#include "hspan/shortest_paths.hpp"

#include <algorithm>
#include <queue>

namespace hspan {

namespace {

struct QueueEntry {
    double dist;
    int vertex;
    bool operator>(const QueueEntry& other) const {
        if (dist != other.dist) return dist > other.dist;
        return vertex > other.vertex;
    }
};

// Dijkstra iterating vertex -> incident hyperedges -> member vertices. A
// settled mark per hyperedge keeps each edge from being expanded twice,
// giving O((n + sum |h|) log n) per query. `target` = -1 runs to exhaustion;
// `cutoff` abandons labels beyond it (kInf disables).
struct DijkstraResult {
    std::vector<double> dist;
    std::vector<int> parent_edge;    // edge id used to reach the vertex
    std::vector<int> parent_vertex;  // predecessor vertex
};

DijkstraResult run_dijkstra(const Hypergraph& h, const FaultSet& faults,
                            int source, int target, double cutoff) {
    int n = h.num_vertices();
    DijkstraResult res;
    res.dist.assign(n, kInf);
    res.parent_edge.assign(n, -1);
    res.parent_vertex.assign(n, -1);
    std::vector<char> edge_settled(h.num_edges(), 0);
    std::priority_queue<QueueEntry, std::vector<QueueEntry>, std::greater<>> pq;
    res.dist[source] = 0.0;
    pq.push({0.0, source});
    while (!pq.empty()) {
        auto [d, x] = pq.top();
        pq.pop();
        if (d > res.dist[x]) continue;
        if (d > cutoff) break;
        if (x == target) break;
        for (int pos : h.incident_positions(x)) {
            if (edge_settled[pos]) continue;
            const Hyperedge& e = h.edge_at(pos);
            if (faults.contains(e.id)) continue;
            edge_settled[pos] = 1;
            double nd = d + e.weight;
            if (nd > cutoff) continue;
            for (int y : e.vertices) {
                if (nd < res.dist[y]) {
                    res.dist[y] = nd;
                    res.parent_edge[y] = e.id;
                    res.parent_vertex[y] = x;
                    pq.push({nd, y});
                }
            }
        }
    }
    return res;
}

}  // namespace

double shortest_distance(const Hypergraph& h, const FaultSet& faults, int u, int v) {
    if (u == v) return 0.0;
    auto res = run_dijkstra(h, faults, u, v, kInf);
    return res.dist[v];
}

std::vector<double> shortest_distances_from(const Hypergraph& h,
                                            const FaultSet& faults, int source) {
    return run_dijkstra(h, faults, source, -1, kInf).dist;
}

std::optional<HyperPath> shortest_path(const Hypergraph& h, const FaultSet& faults,
                                       int u, int v) {
    if (u == v) return HyperPath::trivial_at(u);
    auto res = run_dijkstra(h, faults, u, v, kInf);
    if (res.dist[v] == kInf) return std::nullopt;
    HyperPath path;
    path.start = u;
    path.end = v;
    for (int x = v; x != u; x = res.parent_vertex[x])
        path.edges.push_back(res.parent_edge[x]);
    std::reverse(path.edges.begin(), path.edges.end());
    return path;
}

std::vector<std::vector<double>> all_pairs_distances(const Hypergraph& h,
                                                     const FaultSet& faults) {
    std::vector<std::vector<double>> d;
    d.reserve(h.num_vertices());
    for (int v = 0; v < h.num_vertices(); ++v)
        d.push_back(shortest_distances_from(h, faults, v));
    return d;
}

}  // namespace hspan
