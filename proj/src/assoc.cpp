#include "hspan/assoc.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>

namespace hspan {

AssociatedGraph expand_multigraph(const Hypergraph& h) {
    AssociatedGraph g;
    g.n = h.num_vertices();
    g.simple = false;
    for (const auto& e : h.edges()) {
        for (std::size_t i = 0; i < e.vertices.size(); ++i)
            for (std::size_t j = i + 1; j < e.vertices.size(); ++j)
                g.edges.push_back({e.vertices[i], e.vertices[j], e.weight, e.id});
    }
    return g;
}

AssociatedGraph simplify(const AssociatedGraph& g) {
    std::map<std::pair<int, int>, AssociatedGraph::Edge> best;
    for (const auto& e : g.edges) {
        auto key = std::make_pair(e.u, e.v);
        auto it = best.find(key);
        if (it == best.end()) {
            best.emplace(key, e);
            continue;
        }
        const auto& cur = it->second;
        if (e.weight < cur.weight ||
            (e.weight == cur.weight &&
             e.source_hyperedge_id < cur.source_hyperedge_id))
            it->second = e;
    }
    AssociatedGraph out;
    out.n = g.n;
    out.simple = true;
    out.edges.reserve(best.size());
    for (const auto& [key, e] : best) out.edges.push_back(e);
    return out;
}

Hypergraph lift(const AssociatedGraph& g, const std::vector<int>& spanner_edges,
                const Hypergraph& h) {
    std::vector<int> ids;
    ids.reserve(spanner_edges.size());
    for (int idx : spanner_edges) ids.push_back(g.edges[idx].source_hyperedge_id);
    return h.subhypergraph(ids);
}

std::string to_edge_list(const AssociatedGraph& g) {
    std::ostringstream out;
    for (const auto& e : g.edges)
        out << e.u << ' ' << e.v << ' ' << e.weight << ' '
            << e.source_hyperedge_id << '\n';
    return out.str();
}

std::vector<std::vector<double>> graph_all_pairs(const AssociatedGraph& g) {
    std::vector<std::vector<std::pair<int, double>>> adj(g.n);
    for (const auto& e : g.edges) {
        adj[e.u].push_back({e.v, e.weight});
        adj[e.v].push_back({e.u, e.weight});
    }
    std::vector<std::vector<double>> all;
    all.reserve(g.n);
    for (int s = 0; s < g.n; ++s) {
        std::vector<double> dist(g.n, kInf);
        std::priority_queue<std::pair<double, int>,
                            std::vector<std::pair<double, int>>, std::greater<>>
            pq;
        dist[s] = 0.0;
        pq.push({0.0, s});
        while (!pq.empty()) {
            auto [d, x] = pq.top();
            pq.pop();
            if (d > dist[x]) continue;
            for (auto [y, w] : adj[x])
                if (d + w < dist[y]) {
                    dist[y] = d + w;
                    pq.push({dist[y], y});
                }
        }
        all.push_back(std::move(dist));
    }
    return all;
}

}  // namespace hspan
