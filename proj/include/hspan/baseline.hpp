#pragma once

#include <vector>

#include "hspan/assoc.hpp"
#include "hspan/hypergraph.hpp"

namespace hspan {

class NonUniformWeightsError : public Error {
public:
    explicit NonUniformWeightsError(const std::string& msg) : Error(msg) {}
};

/// Greedy (2k-1)-spanner on a simple associated graph: edges scanned by
/// (weight, (u,v), source id) ascending; an edge joins the spanner iff its
/// endpoints are currently more than (2k-1)*w(e) apart. Returns indices
/// into g.edges. `bounded` runs the distance queries with a (2k-1)*w(e)
/// cutoff; the output is identical either way.
std::vector<int> greedy_spanner(const AssociatedGraph& g, int k,
                                bool bounded = true);

/// +2-additive spanner of a simple uniform-weight graph: all edges of
/// low-degree vertices (< ceil(sqrt(n))), plus full shortest-path trees from
/// a greedy dominating set of the high-degree vertices. Surplus is 2*w0 for
/// common weight w0. Throws NonUniformWeightsError.
std::vector<int> additive2_spanner(const AssociatedGraph& g);

/// f-EFT (2k-1)-hyperspanner by peel-off: f+1 rounds, each extracting the
/// lifted greedy spanner of what is left. `rounds` (optional) receives the
/// pairwise-disjoint hyperedge id sets per round.
Hypergraph peeloff_eft(const Hypergraph& h, int k, int f,
                       std::vector<std::vector<int>>* rounds = nullptr);

/// Convenience: simplify(expand(h)) -> greedy -> lift, the fault-free
/// hyperspanner every peel-off round uses.
Hypergraph lifted_greedy_hyperspanner(const Hypergraph& h, int k);

}  // namespace hspan
