#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hspan/hypergraph.hpp"

namespace hspan {

/// Parse failure in a .hg or fault file; names the 1-based line number.
class ParseError : public Error {
public:
    enum class Kind {
        MalformedLine,
        VertexIdOutOfRange,
        NonPositiveWeight,
        EdgeTooSmall,
        RankExceeded,
    };

    ParseError(Kind kind, int line, const std::string& detail);

    Kind kind() const { return kind_; }
    int line() const { return line_; }

private:
    Kind kind_;
    int line_;
};

/// Text format (".hg"): first line `n m r`; then m lines `w v1 v2 ... vs`
/// with 2 <= s <= r. Lines starting with `#` are comments. Edge ids are
/// assigned 0..m-1 in order of appearance.
Hypergraph load(const std::string& path, bool allow_duplicates = true);
Hypergraph load_from_stream(std::istream& in, bool allow_duplicates = true);

/// Writes the stored edge order with vertices ascending; weights print as
/// integers when exactly integral, else shortest round-trip decimal.
void save(const Hypergraph& h, const std::string& path);
std::string to_hg_string(const Hypergraph& h);

/// Canonical form: edges sorted by (weight, vertex tuple), ids renumbered
/// 0..m-1 in the new order. save(canonicalize(h)) is the canonical file.
Hypergraph canonicalize(const Hypergraph& h);

std::string format_weight(double w);

/// Fault set file: one line of space-separated hyperedge ids.
FaultSet load_fault_set(const std::string& path);
void save_fault_set(const FaultSet& f, const std::string& path);

/// Adversary sidecar (".faults"): one `h_id: f_id f_id ...` row per edge.
void save_adversary_index(const std::vector<std::pair<int, std::vector<int>>>& rows,
                          const std::string& path);
std::vector<std::pair<int, std::vector<int>>> load_adversary_index(
    const std::string& path);

/// Matches every edge of `s` (a spanner reloaded from disk, ids lost) to an
/// edge of `h` with identical vertices and weight, in order, and returns the
/// matched ids in h. Throws ValidationError when s is not a sub-hypergraph.
std::vector<int> match_subhypergraph_ids(const Hypergraph& h, const Hypergraph& s);

}  // namespace hspan
