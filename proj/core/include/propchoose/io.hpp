#ifndef PROPCHOOSE_IO_HPP
#define PROPCHOOSE_IO_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "propchoose/graph.hpp"
#include "propchoose/list_assignment.hpp"
#include "propchoose/prop_solver.hpp"

namespace propchoose {

inline constexpr const char* kToolVersion = "0.1.0";

// "K<n1>,<n2>,..." builds a complete multipartite graph; anything else is
// treated as the path of an edge-list file ("p <n>" header, "e <u> <v>"
// lines, 0-indexed). Parse failures throw invalid_argument.
Graph parse_graph_spec(const std::string& spec);
Graph read_edge_list(std::istream& in);

// Assignment file: header "k <k>", then one line per vertex
// "<vertex_index>: <c1> <c2> ... <ck>". Every vertex 0..n-1 must appear once.
ListAssignment read_assignment(std::istream& in);
void write_assignment(std::ostream& out, const ListAssignment& l);

// Coloring file: one line per vertex, "<vertex_index>: <color>".
Coloring read_coloring(std::istream& in);
void write_coloring(std::ostream& out, const Coloring& f);

// Raised when a new result contradicts a cached one for the same (graph, k).
struct CacheMismatchError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CacheRecord {
    std::string graph;
    int k = 0;
    std::string outcome; // choosable / not-choosable / undecided
    std::optional<std::uint64_t> witness_hash;
    std::uint64_t classes_checked = 0;
    std::int64_t elapsed_ms = 0;
    std::string version;
    std::string timestamp;

    std::string to_line() const;
    static CacheRecord from_line(const std::string& line);
};

// Append-only key=value line cache. Decided outcomes are permanent: a new
// record disagreeing with a cached decision for the same (graph, k) raises
// CacheMismatchError instead of being written.
class ResultCache {
public:
    explicit ResultCache(std::string path); // loads existing records, if any

    const std::string& path() const { return path_; }
    // Most recent decided record for (graph, k), if any.
    std::optional<CacheRecord> lookup(const std::string& graph, int k) const;
    // Consistency-checks against prior decided records, then appends.
    void record(CacheRecord r);

private:
    std::string path_;
    std::vector<CacheRecord> records_;
};

std::string utc_timestamp();

} // namespace propchoose

#endif
