#include "hspan/instances.hpp"

#include <algorithm>
#include <queue>
#include <set>

#include "hspan/rng.hpp"

namespace hspan {

namespace {

// Number of distinct s-subsets of [n], capped to avoid overflow.
long long subset_count(int n, int s, long long cap) {
    if (s > n) return 0;
    long long c = 1;
    for (int i = 1; i <= s; ++i) {
        c = c * (n - s + i) / i;
        if (c > cap) return cap;
    }
    return c;
}

std::vector<int> random_subset(Rng& rng, int n, int s) {
    std::vector<int> verts = rng.sample_indices(n, s);
    std::sort(verts.begin(), verts.end());
    return verts;
}

}  // namespace

Hypergraph random_hypergraph(int n, int m, int r, int w_min, int w_max,
                             std::uint64_t seed, bool mixed_sizes) {
    if (r < 2 || r > n) throw ValidationError("random_hypergraph requires 2 <= r <= n");
    if (w_min < 1 || w_max < w_min)
        throw ValidationError("random_hypergraph requires 1 <= w_min <= w_max");
    long long capacity = 0;
    if (mixed_sizes) {
        for (int s = 2; s <= r; ++s) capacity += subset_count(n, s, 1LL << 40);
    } else {
        capacity = subset_count(n, r, 1LL << 40);
    }
    if (m > capacity)
        throw ValidationError("random_hypergraph: m = " + std::to_string(m) +
                              " exceeds the " + std::to_string(capacity) +
                              " distinct vertex sets available");
    Rng rng(seed);
    std::set<std::vector<int>> used;
    std::vector<std::vector<int>> sets;
    std::vector<double> weights;
    while (static_cast<int>(sets.size()) < m) {
        int s = mixed_sizes ? rng.uniform_int(2, r) : r;
        std::vector<int> verts = random_subset(rng, n, s);
        if (!used.insert(verts).second) continue;
        sets.push_back(std::move(verts));
        weights.push_back(static_cast<double>(rng.uniform_int(w_min, w_max)));
    }
    return Hypergraph(n, std::move(sets), std::move(weights));
}

int berge_girth(const Hypergraph& h) {
    long long total = 0;
    for (const auto& e : h.edges()) total += static_cast<long long>(e.vertices.size());
    if (total > 10000)
        throw ValidationError("berge_girth: instance too large for exact search");

    // Girth of the bipartite incidence graph equals twice the Berge girth:
    // node ids [0, n) are vertices, [n, n+m) are hyperedges.
    int n = h.num_vertices();
    int m = h.num_edges();
    int nodes = n + m;
    std::vector<std::vector<int>> adj(nodes);
    for (int pos = 0; pos < m; ++pos)
        for (int v : h.edge_at(pos).vertices) {
            adj[v].push_back(n + pos);
            adj[n + pos].push_back(v);
        }

    int best = kInfGirth;
    std::vector<int> dist(nodes), parent(nodes);
    for (int root = 0; root < nodes; ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        std::queue<int> q;
        dist[root] = 0;
        q.push(root);
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            if (best != kInfGirth && 2 * dist[x] >= best) break;
            for (int y : adj[x]) {
                if (y == parent[x]) continue;
                if (dist[y] < 0) {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    q.push(y);
                } else {
                    // Non-tree edge closes a cycle through the BFS tree.
                    best = std::min(best, dist[x] + dist[y] + 1);
                }
            }
        }
    }
    if (best == kInfGirth) return kInfGirth;
    return best / 2;
}

namespace {

// Incidence-graph distance between u and v avoiding nothing; used to test
// whether a new hyperedge on `verts` would close a Berge cycle shorter than
// girth_min. A cycle of length l through the new edge needs two of its
// vertices at incidence distance <= 2(l-1).
bool creates_short_cycle(const std::vector<std::vector<int>>& vertex_edges,
                         const std::vector<std::vector<int>>& edge_vertices,
                         const std::vector<int>& verts, int girth_min) {
    // New edge sharing >= 2 vertices with an existing edge is a 2-cycle.
    // Covered by the distance test below (incidence distance 2).
    int limit = 2 * (girth_min - 1) - 1;  // reject when dist < 2*(girth_min-1)
    for (std::size_t a = 0; a < verts.size(); ++a) {
        // BFS over the incidence structure from verts[a], bounded by limit.
        std::set<std::pair<int, int>> seen;  // (kind 0=vertex 1=edge, index)
        std::queue<std::pair<std::pair<int, int>, int>> q;
        seen.insert({0, verts[a]});
        q.push({{0, verts[a]}, 0});
        while (!q.empty()) {
            auto [node, d] = q.front();
            q.pop();
            if (d >= limit) continue;
            auto [kind, idx] = node;
            const auto& nbrs = kind == 0 ? vertex_edges[idx] : edge_vertices[idx];
            for (int nb : nbrs) {
                std::pair<int, int> next{1 - kind, nb};
                if (seen.count(next)) continue;
                seen.insert(next);
                if (next.first == 0)
                    for (std::size_t b = a + 1; b < verts.size(); ++b)
                        if (verts[b] == nb) return true;
                q.push({next, d + 1});
            }
        }
    }
    return false;
}

}  // namespace

Hypergraph high_girth_base(int n, int r, int girth_min, std::uint64_t seed,
                           int budget) {
    if (girth_min < 2) throw ValidationError("high_girth_base requires girth_min >= 2");
    Rng rng(seed);
    std::vector<std::vector<int>> vertex_edges(n);
    std::vector<std::vector<int>> edge_vertices;
    std::set<std::vector<int>> used;
    int rejections = 0;
    while (rejections < budget) {
        std::vector<int> verts = random_subset(rng, n, r);
        if (used.count(verts) ||
            creates_short_cycle(vertex_edges, edge_vertices, verts, girth_min)) {
            ++rejections;
            continue;
        }
        used.insert(verts);
        int idx = static_cast<int>(edge_vertices.size());
        edge_vertices.push_back(verts);
        for (int v : verts) vertex_edges[v].push_back(idx);
    }
    std::vector<std::vector<int>> sets(used.begin(), used.end());
    std::vector<double> weights(sets.size(), 1.0);
    Hypergraph out(n, std::move(sets), std::move(weights));
    return out;
}

LowerBoundFamily lowerbound_family(const Hypergraph& base, int f, int k) {
    if (f < 1 || k < 1) throw ValidationError("lowerbound_family requires f, k >= 1");
    int r = base.rank();
    for (const auto& e : base.edges()) {
        if (static_cast<int>(e.vertices.size()) != r)
            throw ValidationError("lowerbound_family requires an r-uniform base");
        if (e.weight != 1.0)
            throw ValidationError("lowerbound_family requires a unit-weight base");
    }
    int girth = berge_girth(base);
    if (girth < 2 * k + 2)
        throw ValidationError("lowerbound_family: base girth " +
                              std::to_string(girth) + " below required " +
                              std::to_string(2 * k + 2));

    // Largest t with t^r <= f, so every adversary set has t^r - 1 < f ids.
    int t = 1;
    while (true) {
        long long p = 1;
        bool over = false;
        for (int i = 0; i < r; ++i) {
            p *= (t + 1);
            if (p > f) { over = true; break; }
        }
        if (over) break;
        ++t;
    }

    int nb = base.num_vertices();
    auto copy_id = [t](int u, int i) { return u * t + i; };

    std::vector<std::vector<int>> sets;
    std::vector<double> weights;
    std::vector<std::vector<int>> groups;  // edge ids per base edge
    for (const auto& be : base.edges()) {
        std::vector<int> tuple(r, 0);
        std::vector<int> group;
        while (true) {
            std::vector<int> verts(r);
            for (int j = 0; j < r; ++j) verts[j] = copy_id(be.vertices[j], tuple[j]);
            group.push_back(static_cast<int>(sets.size()));
            sets.push_back(std::move(verts));
            weights.push_back(1.0);
            int pos = r - 1;
            while (pos >= 0 && tuple[pos] == t - 1) tuple[pos--] = 0;
            if (pos < 0) break;
            ++tuple[pos];
        }
        groups.push_back(std::move(group));
    }

    LowerBoundFamily fam;
    fam.t = t;
    fam.blowup = Hypergraph(nb * t, std::move(sets), std::move(weights));
    fam.adversary.assign(fam.blowup.num_edges(), {});
    for (const auto& group : groups)
        for (int id : group) {
            auto& faults = fam.adversary[id];
            faults.reserve(group.size() - 1);
            for (int other : group)
                if (other != id) faults.push_back(other);
        }
    return fam;
}

Hypergraph cycle_hypergraph(int n) {
    if (n < 3) throw ValidationError("cycle_hypergraph requires n >= 3");
    std::vector<std::vector<int>> sets;
    std::vector<double> weights(n, 1.0);
    for (int i = 0; i < n; ++i) {
        int j = (i + 1) % n;
        sets.push_back({std::min(i, j), std::max(i, j)});
    }
    return Hypergraph(n, std::move(sets), std::move(weights));
}

}  // namespace hspan
