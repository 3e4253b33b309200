#include "hspan/baseline.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <set>

namespace hspan {

namespace {

using Adjacency = std::vector<std::vector<std::pair<int, int>>>;  // (to, edge idx)

}  // namespace

std::vector<int> greedy_spanner(const AssociatedGraph& g, int k, bool bounded) {
    if (!g.simple) throw ValidationError("greedy_spanner requires a simple graph");
    if (k < 1) throw ValidationError("greedy_spanner requires k >= 1");
    std::vector<int> order(g.edges.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const auto& ea = g.edges[a];
        const auto& eb = g.edges[b];
        if (ea.weight != eb.weight) return ea.weight < eb.weight;
        if (ea.u != eb.u) return ea.u < eb.u;
        if (ea.v != eb.v) return ea.v < eb.v;
        return ea.source_hyperedge_id < eb.source_hyperedge_id;
    });

    std::vector<std::vector<std::pair<int, double>>> adj(g.n);
    std::vector<int> selected;
    double stretch = 2.0 * k - 1.0;
    std::vector<double> dist(g.n, kInf);
    for (int idx : order) {
        const auto& e = g.edges[idx];
        double threshold = stretch * e.weight;
        double cutoff = bounded ? threshold : kInf;
        // Dijkstra from e.u in the current spanner.
        std::fill(dist.begin(), dist.end(), kInf);
        std::priority_queue<std::pair<double, int>,
                            std::vector<std::pair<double, int>>, std::greater<>>
            pq;
        dist[e.u] = 0.0;
        pq.push({0.0, e.u});
        while (!pq.empty()) {
            auto [d, x] = pq.top();
            pq.pop();
            if (d > dist[x]) continue;
            if (d > cutoff) break;
            if (x == e.v) break;
            for (auto [y, w] : adj[x])
                if (d + w < dist[y] && d + w <= cutoff) {
                    dist[y] = d + w;
                    pq.push({dist[y], y});
                }
        }
        if (dist[e.v] > threshold) {
            selected.push_back(idx);
            adj[e.u].push_back({e.v, e.weight});
            adj[e.v].push_back({e.u, e.weight});
        }
    }
    std::sort(selected.begin(), selected.end());
    return selected;
}

std::vector<int> additive2_spanner(const AssociatedGraph& g) {
    if (!g.simple) throw ValidationError("additive2_spanner requires a simple graph");
    for (const auto& e : g.edges)
        if (e.weight != g.edges.front().weight)
            throw NonUniformWeightsError(
                "additive2_spanner requires uniform edge weights");

    Adjacency adj(g.n);
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        const auto& e = g.edges[i];
        adj[e.u].push_back({e.v, static_cast<int>(i)});
        adj[e.v].push_back({e.u, static_cast<int>(i)});
    }
    for (auto& nbrs : adj) std::sort(nbrs.begin(), nbrs.end());

    int n = g.n;
    int threshold = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(n))));
    std::set<int> picked;
    std::vector<char> heavy(n, 0);
    for (int v = 0; v < n; ++v) {
        if (static_cast<int>(adj[v].size()) < threshold) {
            for (auto [y, idx] : adj[v]) picked.insert(idx);
        } else {
            heavy[v] = 1;
        }
    }

    // Greedy domination of the heavy vertices; each center contributes its
    // full BFS tree, which is what buys the +2 surplus.
    std::vector<char> dominated(n, 0);
    std::vector<int> centers;
    for (int v = 0; v < n; ++v) {
        if (!heavy[v] || dominated[v]) continue;
        centers.push_back(v);
        dominated[v] = 1;
        for (auto [y, idx] : adj[v]) dominated[y] = 1;
    }

    std::vector<int> bfs_order;
    std::vector<int> parent_edge(n);
    for (int c : centers) {
        std::fill(parent_edge.begin(), parent_edge.end(), -1);
        std::vector<char> seen(n, 0);
        std::queue<int> q;
        seen[c] = 1;
        q.push(c);
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            for (auto [y, idx] : adj[x]) {
                if (seen[y]) continue;
                seen[y] = 1;
                parent_edge[y] = idx;
                q.push(y);
            }
        }
        for (int v = 0; v < n; ++v)
            if (parent_edge[v] >= 0) picked.insert(parent_edge[v]);
    }
    return std::vector<int>(picked.begin(), picked.end());
}

Hypergraph lifted_greedy_hyperspanner(const Hypergraph& h, int k) {
    AssociatedGraph g = simplify(expand_multigraph(h));
    return lift(g, greedy_spanner(g, k), h);
}

Hypergraph peeloff_eft(const Hypergraph& h, int k, int f,
                       std::vector<std::vector<int>>* rounds) {
    if (k < 1 || f < 0) throw ValidationError("peeloff_eft requires k >= 1, f >= 0");
    if (rounds) rounds->clear();
    std::vector<int> remaining = h.edge_ids();
    std::vector<int> accumulated;
    for (int i = 0; i <= f && !remaining.empty(); ++i) {
        Hypergraph current = h.subhypergraph(remaining);
        Hypergraph extracted = lifted_greedy_hyperspanner(current, k);
        std::vector<int> ids = extracted.edge_ids();
        if (rounds) rounds->push_back(ids);
        std::vector<int> next;
        next.reserve(remaining.size());
        std::set<int> taken(ids.begin(), ids.end());
        for (int id : remaining)
            if (!taken.count(id)) next.push_back(id);
        remaining = std::move(next);
        accumulated.insert(accumulated.end(), ids.begin(), ids.end());
    }
    return h.subhypergraph(accumulated);
}

}  // namespace hspan
