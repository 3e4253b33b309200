#pragma once

#include <cstdint>
#include <vector>

#include "hspan/hypergraph.hpp"

namespace hspan {

/// Seeded random hypergraph: m distinct vertex sets of size exactly r
/// (or mixed sizes in [2, r] with `mixed_sizes`), integer weights drawn
/// uniformly from [w_min, w_max]. Throws when m exceeds the number of
/// distinct candidate sets.
Hypergraph random_hypergraph(int n, int m, int r, int w_min, int w_max,
                             std::uint64_t seed, bool mixed_sizes = false);

/// Length of the shortest Berge cycle: distinct vertices v_1..v_l and
/// distinct hyperedges e_1..e_l with {v_i, v_{i+1 mod l}} in e_i. Returns
/// kInfGirth for Berge-acyclic inputs. Instances with sum |h| > 10^4 are
/// rejected as too large for the exact search.
constexpr int kInfGirth = std::numeric_limits<int>::max();
int berge_girth(const Hypergraph& h);

/// r-uniform unit-weight hypergraph with berge_girth >= girth_min, grown by
/// randomized greedy insertion with rejection; gives up after `budget`
/// rejected candidates. Makes no extremality claim.
Hypergraph high_girth_base(int n, int r, int girth_min, std::uint64_t seed,
                           int budget = 2000);

/// The blow-up family: each base vertex becomes t = floor(f^(1/r)) copies,
/// each base hyperedge becomes all t^r copy-combinations. AdversaryIndex
/// maps each edge of the blow-up to its t^r - 1 sibling copies (<= f).
struct LowerBoundFamily {
    Hypergraph blowup;
    int t = 1;
    /// adversary[pos] = fault ids for the edge at position pos (= id).
    std::vector<std::vector<int>> adversary;

    FaultSet fault_set_for(int edge_id) const {
        return FaultSet(adversary[edge_id]);
    }
};

/// Requires base r-uniform, unit weights, berge_girth(base) >= 2k+2
/// (checked). Throws ValidationError otherwise.
LowerBoundFamily lowerbound_family(const Hypergraph& base, int f, int k);

/// The cycle C_n as a 2-uniform unit-weight hypergraph (girth n); handy as
/// a lower-bound base.
Hypergraph cycle_hypergraph(int n);

}  // namespace hspan
