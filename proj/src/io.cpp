#include "hspan/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace hspan {

namespace {

std::string kind_name(ParseError::Kind k) {
    switch (k) {
        case ParseError::Kind::MalformedLine: return "MalformedLine";
        case ParseError::Kind::VertexIdOutOfRange: return "VertexIdOutOfRange";
        case ParseError::Kind::NonPositiveWeight: return "NonPositiveWeight";
        case ParseError::Kind::EdgeTooSmall: return "EdgeTooSmall";
        case ParseError::Kind::RankExceeded: return "RankExceeded";
    }
    return "ParseError";
}

bool is_comment_or_blank(const std::string& line) {
    for (char c : line) {
        if (c == '#') return true;
        if (!isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

ParseError::ParseError(Kind kind, int line, const std::string& detail)
    : Error(kind_name(kind) + " at line " + std::to_string(line) + ": " + detail),
      kind_(kind),
      line_(line) {}

Hypergraph load_from_stream(std::istream& in, bool allow_duplicates) {
    std::string line;
    int line_no = 0;
    auto next_content_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++line_no;
            if (!is_comment_or_blank(line)) return true;
        }
        return false;
    };

    if (!next_content_line())
        throw ParseError(ParseError::Kind::MalformedLine, line_no + 1,
                         "missing header");
    long long n, m, r;
    {
        std::istringstream hs(line);
        std::string extra;
        if (!(hs >> n >> m >> r) || (hs >> extra) || n < 0 || m < 0 || r < 0)
            throw ParseError(ParseError::Kind::MalformedLine, line_no,
                             "expected header `n m r`");
    }

    std::vector<std::vector<int>> edge_sets;
    std::vector<double> weights;
    edge_sets.reserve(m);
    weights.reserve(m);
    for (long long i = 0; i < m; ++i) {
        if (!next_content_line())
            throw ParseError(ParseError::Kind::MalformedLine, line_no + 1,
                             "expected " + std::to_string(m) + " edge lines, got " +
                                 std::to_string(i));
        std::istringstream es(line);
        double w;
        if (!(es >> w))
            throw ParseError(ParseError::Kind::MalformedLine, line_no,
                             "expected `w v1 v2 ...`");
        if (!(w > 0.0))
            throw ParseError(ParseError::Kind::NonPositiveWeight, line_no,
                             "weight " + format_weight(w));
        std::vector<int> verts;
        long long v;
        while (es >> v) {
            if (v < 0 || v >= n)
                throw ParseError(ParseError::Kind::VertexIdOutOfRange, line_no,
                                 "vertex " + std::to_string(v) + " with n = " +
                                     std::to_string(n));
            verts.push_back(static_cast<int>(v));
        }
        if (!es.eof())
            throw ParseError(ParseError::Kind::MalformedLine, line_no,
                             "non-integer vertex id");
        if (verts.size() < 2)
            throw ParseError(ParseError::Kind::EdgeTooSmall, line_no,
                             "hyperedge has " + std::to_string(verts.size()) +
                                 " vertices");
        if (static_cast<long long>(verts.size()) > r)
            throw ParseError(ParseError::Kind::RankExceeded, line_no,
                             "hyperedge size " + std::to_string(verts.size()) +
                                 " exceeds declared rank " + std::to_string(r));
        edge_sets.push_back(std::move(verts));
        weights.push_back(w);
    }
    return Hypergraph(static_cast<int>(n), std::move(edge_sets), std::move(weights),
                      allow_duplicates);
}

Hypergraph load(const std::string& path, bool allow_duplicates) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    return load_from_stream(in, allow_duplicates);
}

std::string format_weight(double w) {
    double r = std::round(w);
    if (r == w && std::abs(w) < 9.007199254740992e15) {
        long long i = static_cast<long long>(r);
        return std::to_string(i);
    }
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), w);
    return std::string(buf, res.ptr);
}

std::string to_hg_string(const Hypergraph& h) {
    std::ostringstream out;
    out << h.num_vertices() << ' ' << h.num_edges() << ' ' << h.rank() << '\n';
    for (const auto& e : h.edges()) {
        out << format_weight(e.weight);
        for (int v : e.vertices) out << ' ' << v;
        out << '\n';
    }
    return out.str();
}

void save(const Hypergraph& h, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    out << to_hg_string(h);
}

Hypergraph canonicalize(const Hypergraph& h) {
    std::vector<std::pair<std::pair<double, std::vector<int>>, int>> order;
    order.reserve(h.num_edges());
    for (int pos = 0; pos < h.num_edges(); ++pos) {
        const auto& e = h.edge_at(pos);
        order.push_back({{e.weight, e.vertices}, pos});
    }
    std::sort(order.begin(), order.end());
    std::vector<std::vector<int>> sets;
    std::vector<double> weights;
    sets.reserve(order.size());
    for (const auto& [key, pos] : order) {
        sets.push_back(h.edge_at(pos).vertices);
        weights.push_back(h.edge_at(pos).weight);
    }
    return Hypergraph(h.num_vertices(), std::move(sets), std::move(weights),
                      h.allows_duplicates());
}

FaultSet load_fault_set(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    std::vector<int> ids;
    long long id;
    while (in >> id) ids.push_back(static_cast<int>(id));
    if (!in.eof())
        throw ParseError(ParseError::Kind::MalformedLine, 1, "non-integer fault id");
    return FaultSet(std::move(ids));
}

void save_fault_set(const FaultSet& f, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    for (std::size_t i = 0; i < f.ids().size(); ++i) {
        if (i) out << ' ';
        out << f.ids()[i];
    }
    out << '\n';
}

void save_adversary_index(const std::vector<std::pair<int, std::vector<int>>>& rows,
                          const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    for (const auto& [h_id, f_ids] : rows) {
        out << h_id << ':';
        for (int f : f_ids) out << ' ' << f;
        out << '\n';
    }
}

std::vector<std::pair<int, std::vector<int>>> load_adversary_index(
    const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    std::vector<std::pair<int, std::vector<int>>> rows;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (is_comment_or_blank(line)) continue;
        auto colon = line.find(':');
        if (colon == std::string::npos)
            throw ParseError(ParseError::Kind::MalformedLine, line_no,
                             "expected `h_id: f_id ...`");
        int h_id = std::stoi(line.substr(0, colon));
        std::istringstream fs(line.substr(colon + 1));
        std::vector<int> f_ids;
        int f;
        while (fs >> f) f_ids.push_back(f);
        rows.push_back({h_id, std::move(f_ids)});
    }
    return rows;
}

std::vector<int> match_subhypergraph_ids(const Hypergraph& h, const Hypergraph& s) {
    if (h.num_vertices() != s.num_vertices())
        throw ValidationError("spanner vertex count differs from host");
    std::vector<int> ids;
    ids.reserve(s.num_edges());
    int hpos = 0;
    for (const auto& se : s.edges()) {
        while (hpos < h.num_edges() &&
               !(h.edge_at(hpos).vertices == se.vertices &&
                 h.edge_at(hpos).weight == se.weight))
            ++hpos;
        if (hpos == h.num_edges())
            throw ValidationError(
                "spanner edge not found in host (or out of order): id " +
                std::to_string(se.id));
        ids.push_back(h.edge_at(hpos).id);
        ++hpos;
    }
    return ids;
}

}  // namespace hspan
