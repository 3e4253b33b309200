#include "hspan/hypergraph.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace hspan {

bool Hyperedge::contains(int v) const {
    return std::binary_search(vertices.begin(), vertices.end(), v);
}

Hypergraph::Hypergraph(int n, std::vector<std::vector<int>> edge_vertex_sets,
                       std::vector<double> weights, bool allow_duplicates) {
    if (edge_vertex_sets.size() != weights.size())
        throw ValidationError("edge/weight count mismatch");
    n_ = n;
    allow_duplicates_ = allow_duplicates;
    edges_.reserve(edge_vertex_sets.size());
    for (std::size_t i = 0; i < edge_vertex_sets.size(); ++i) {
        Hyperedge e;
        e.id = static_cast<int>(i);
        e.vertices = std::move(edge_vertex_sets[i]);
        std::sort(e.vertices.begin(), e.vertices.end());
        e.weight = weights[i];
        edges_.push_back(std::move(e));
    }
    validate_and_index();
}

Hypergraph Hypergraph::with_edges(int n, std::vector<Hyperedge> edges,
                                  bool allow_duplicates) {
    Hypergraph h;
    h.n_ = n;
    h.allow_duplicates_ = allow_duplicates;
    h.edges_ = std::move(edges);
    for (auto& e : h.edges_) std::sort(e.vertices.begin(), e.vertices.end());
    h.validate_and_index();
    return h;
}

void Hypergraph::validate_and_index() {
    if (n_ < 0) throw ValidationError("negative vertex count");
    rank_ = 0;
    max_id_ = -1;
    std::map<std::pair<std::vector<int>, double>, int> seen;
    std::vector<char> id_used;
    for (const auto& e : edges_) {
        if (e.id < 0) throw ValidationError("negative edge id");
        if (e.vertices.size() < 2)
            throw ValidationError("hyperedge " + std::to_string(e.id) +
                                  " has fewer than 2 vertices");
        for (std::size_t j = 0; j < e.vertices.size(); ++j) {
            int v = e.vertices[j];
            if (v < 0 || v >= n_)
                throw ValidationError("hyperedge " + std::to_string(e.id) +
                                      " has vertex id " + std::to_string(v) +
                                      " out of range");
            if (j > 0 && e.vertices[j - 1] == v)
                throw ValidationError("hyperedge " + std::to_string(e.id) +
                                      " has repeated vertex " + std::to_string(v));
        }
        if (!(e.weight > 0.0))
            throw ValidationError("hyperedge " + std::to_string(e.id) +
                                  " has non-positive weight");
        if (static_cast<std::size_t>(id_used.size()) <= static_cast<std::size_t>(e.id))
            id_used.resize(e.id + 1, 0);
        if (id_used[e.id])
            throw ValidationError("duplicate edge id " + std::to_string(e.id));
        id_used[e.id] = 1;
        if (!allow_duplicates_) {
            auto key = std::make_pair(e.vertices, e.weight);
            auto [it, inserted] = seen.emplace(key, e.id);
            if (!inserted)
                throw ValidationError(
                    "hyperedges " + std::to_string(it->second) + " and " +
                    std::to_string(e.id) +
                    " have identical vertices and weight (multi-edge flag not set)");
        }
        rank_ = std::max(rank_, static_cast<int>(e.vertices.size()));
        max_id_ = std::max(max_id_, e.id);
    }
    for (std::size_t i = 1; i < edges_.size(); ++i)
        if (edges_[i - 1].id >= edges_[i].id)
            throw ValidationError("edges must be stored in ascending id order");
    incidence_.assign(n_, {});
    for (int pos = 0; pos < static_cast<int>(edges_.size()); ++pos)
        for (int v : edges_[pos].vertices) incidence_[v].push_back(pos);
}

int Hypergraph::position_of(int edge_id) const {
    // Edges are stored in ascending-id order for freshly built hypergraphs
    // and sub-hypergraphs alike, so binary search on id works.
    int lo = 0, hi = static_cast<int>(edges_.size()) - 1;
    while (lo <= hi) {
        int mid = (lo + hi) / 2;
        if (edges_[mid].id == edge_id) return mid;
        if (edges_[mid].id < edge_id)
            lo = mid + 1;
        else
            hi = mid - 1;
    }
    return -1;
}

const Hyperedge& Hypergraph::edge_by_id(int edge_id) const {
    int pos = position_of(edge_id);
    if (pos < 0)
        throw ValidationError("no edge with id " + std::to_string(edge_id));
    return edges_[pos];
}

Hypergraph Hypergraph::subhypergraph(const std::vector<int>& edge_ids) const {
    std::vector<int> ids = edge_ids;
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    std::vector<Hyperedge> kept;
    kept.reserve(ids.size());
    for (int id : ids) {
        int pos = position_of(id);
        if (pos < 0)
            throw ValidationError("subhypergraph: unknown edge id " +
                                  std::to_string(id));
        kept.push_back(edges_[pos]);
    }
    return with_edges(n_, std::move(kept), allow_duplicates_);
}

std::vector<int> Hypergraph::edge_ids() const {
    std::vector<int> ids;
    ids.reserve(edges_.size());
    for (const auto& e : edges_) ids.push_back(e.id);
    return ids;
}

bool Hypergraph::same_vertex_set_and_edges(const Hypergraph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
}

double HyperPath::weight(const Hypergraph& h) const {
    double w = 0.0;
    for (int id : edges) w += h.edge_by_id(id).weight;
    return w;
}

std::span<const int> HyperPath::head_vertices(const Hypergraph& h) const {
    if (edges.empty()) return std::span<const int>(&start, 1);
    const auto& verts = h.edge_by_id(edges.front()).vertices;
    return std::span<const int>(verts.data(), verts.size());
}

std::string HyperPath::validate(const Hypergraph& h) const {
    if (edges.empty()) {
        if (start != end) return "trivial path with start != end";
        if (start < 0 || start >= h.num_vertices()) return "vertex out of range";
        return {};
    }
    const Hyperedge* prev = nullptr;
    for (int id : edges) {
        if (!h.has_edge_id(id)) return "unknown edge id " + std::to_string(id);
        const Hyperedge& cur = h.edge_by_id(id);
        if (prev) {
            bool share = false;
            for (int v : cur.vertices)
                if (prev->contains(v)) { share = true; break; }
            if (!share)
                return "consecutive hyperedges " + std::to_string(prev->id) +
                       "," + std::to_string(id) + " share no vertex";
        }
        prev = &cur;
    }
    if (!h.edge_by_id(edges.front()).contains(start))
        return "start vertex not in first hyperedge";
    if (!h.edge_by_id(edges.back()).contains(end))
        return "end vertex not in last hyperedge";
    return {};
}

FaultSet::FaultSet(std::vector<int> ids) : ids_(std::move(ids)) {
    std::sort(ids_.begin(), ids_.end());
    auto dup = std::adjacent_find(ids_.begin(), ids_.end());
    if (dup != ids_.end())
        throw ValidationError("fault set contains duplicate id " +
                              std::to_string(*dup));
}

bool FaultSet::contains(int edge_id) const {
    return std::binary_search(ids_.begin(), ids_.end(), edge_id);
}

void FaultSet::check_against(const Hypergraph& h) const {
    for (int id : ids_)
        if (!h.has_edge_id(id))
            throw ValidationError("fault id " + std::to_string(id) +
                                  " not present in hypergraph");
}

std::string FaultSet::to_string() const {
    std::ostringstream out;
    out << "{";
    for (std::size_t i = 0; i < ids_.size(); ++i) {
        if (i) out << ",";
        out << ids_[i];
    }
    out << "}";
    return out.str();
}

}  // namespace hspan
