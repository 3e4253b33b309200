#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hspan {

constexpr double kInf = std::numeric_limits<double>::infinity();

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Construction-time violation of a structural invariant (bad vertex id,
/// non-positive weight, duplicate edge without the multi-edge flag, ...).
class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& msg) : Error(msg) {}
};

/// A hyperedge: a sorted set of >= 2 distinct vertex ids plus a positive
/// weight. `id` is stable: sub-hypergraphs keep the ids of their host, so a
/// fault set expressed as ids applies to host and spanner alike.
struct Hyperedge {
    int id = -1;
    std::vector<int> vertices;  // sorted ascending, distinct
    double weight = 1.0;

    bool contains(int v) const;
    bool operator==(const Hyperedge& other) const = default;
};

/// Immutable weighted hypergraph. Vertices are dense ids 0..n-1 (isolated
/// vertices are legal). Edges keep stable ids; `rank` is the maximum edge
/// size actually present.
class Hypergraph {
public:
    Hypergraph() = default;

    /// Builds a hypergraph from scratch; edge ids are assigned 0..m-1 in
    /// input order. Throws ValidationError on invariant violations.
    Hypergraph(int n, std::vector<std::vector<int>> edge_vertex_sets,
               std::vector<double> weights, bool allow_duplicates = false);

    /// Rebuilds from fully-specified edges (ids preserved). Used by
    /// subhypergraph(); validates the same invariants.
    static Hypergraph with_edges(int n, std::vector<Hyperedge> edges,
                                 bool allow_duplicates = false);

    int num_vertices() const { return n_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    int rank() const { return rank_; }
    int max_edge_id() const { return max_id_; }
    bool allows_duplicates() const { return allow_duplicates_; }

    const std::vector<Hyperedge>& edges() const { return edges_; }
    const Hyperedge& edge_at(int pos) const { return edges_[pos]; }

    /// Position of the edge with the given stable id, or -1.
    int position_of(int edge_id) const;
    bool has_edge_id(int edge_id) const { return position_of(edge_id) >= 0; }
    const Hyperedge& edge_by_id(int edge_id) const;

    /// Incident edge positions (not ids) per vertex.
    const std::vector<int>& incident_positions(int v) const { return incidence_[v]; }

    /// Sub-hypergraph on the given edge ids; vertex set and edge ids are
    /// preserved, edge order follows this hypergraph's order.
    Hypergraph subhypergraph(const std::vector<int>& edge_ids) const;

    /// All stable edge ids in stored order.
    std::vector<int> edge_ids() const;

    bool same_vertex_set_and_edges(const Hypergraph& other) const;

private:
    void validate_and_index();

    int n_ = 0;
    int rank_ = 0;
    int max_id_ = -1;
    bool allow_duplicates_ = false;
    std::vector<Hyperedge> edges_;
    std::vector<std::vector<int>> incidence_;
};

/// An ordered hyperedge sequence between two endpoint vertices. Consecutive
/// edges share at least one vertex; an empty sequence is the trivial path at
/// `start` (= `end`). The head is the first hyperedge, or the singleton
/// {start} for trivial paths.
struct HyperPath {
    std::vector<int> edges;  // stable edge ids, in travel order
    int start = -1;
    int end = -1;

    bool trivial() const { return edges.empty(); }

    static HyperPath trivial_at(int v) { return HyperPath{{}, v, v}; }

    double weight(const Hypergraph& h) const;
    int hop_count() const { return static_cast<int>(edges.size()); }

    /// Vertex set of the head: the first hyperedge's vertices, or {start}.
    std::span<const int> head_vertices(const Hypergraph& h) const;

    /// Checks the structural invariants against the host hypergraph.
    /// Returns an error message, or empty when valid.
    std::string validate(const Hypergraph& h) const;
};

/// A set of hyperedge ids to delete, |F| <= f. Ids must exist in the host.
class FaultSet {
public:
    FaultSet() = default;
    explicit FaultSet(std::vector<int> ids);

    static FaultSet empty() { return FaultSet(); }

    const std::vector<int>& ids() const { return ids_; }
    std::size_t size() const { return ids_.size(); }
    bool contains(int edge_id) const;

    /// Validates that every id names an edge of `h`.
    void check_against(const Hypergraph& h) const;

    std::string to_string() const;

private:
    std::vector<int> ids_;  // sorted, distinct
};

}  // namespace hspan
