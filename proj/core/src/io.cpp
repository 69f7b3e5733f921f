#include "propchoose/io.hpp"

#include <algorithm>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace propchoose {

namespace {

int parse_int(const std::string& s, const char* what) {
    try {
        std::size_t pos = 0;
        int value = std::stoi(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("");
        return value;
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string(what) + ": not an integer: '" + s + "'");
    }
}

} // namespace

Graph parse_graph_spec(const std::string& spec) {
    if (spec.empty()) throw std::invalid_argument("graph spec: empty");
    if (spec[0] == 'K' && spec.size() > 1 && std::isdigit(static_cast<unsigned char>(spec[1]))) {
        std::vector<int> parts;
        std::stringstream ss(spec.substr(1));
        std::string field;
        while (std::getline(ss, field, ','))
            parts.push_back(parse_int(field, "graph spec part size"));
        if (parts.empty()) throw std::invalid_argument("graph spec: no part sizes");
        return Graph::complete_multipartite(parts);
    }
    std::ifstream in(spec);
    if (!in) throw std::invalid_argument("graph spec: cannot open edge-list file '" + spec + "'");
    return read_edge_list(in);
}

Graph read_edge_list(std::istream& in) {
    int n = -1;
    std::vector<std::pair<int, int>> edges;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        lineno++;
        std::stringstream ss(line);
        std::string tag;
        if (!(ss >> tag) || tag[0] == '#') continue;
        if (tag == "p") {
            if (n >= 0) throw std::invalid_argument("edge list: duplicate 'p' header");
            if (!(ss >> n) || n < 0)
                throw std::invalid_argument("edge list: bad 'p' header at line " +
                                            std::to_string(lineno));
        } else if (tag == "e") {
            int u, v;
            if (n < 0) throw std::invalid_argument("edge list: 'e' before 'p' header");
            if (!(ss >> u >> v))
                throw std::invalid_argument("edge list: bad 'e' line at line " +
                                            std::to_string(lineno));
            edges.push_back({u, v});
        } else {
            throw std::invalid_argument("edge list: unknown tag '" + tag + "' at line " +
                                        std::to_string(lineno));
        }
    }
    if (n < 0) throw std::invalid_argument("edge list: missing 'p' header");
    return Graph::from_edges(n, edges);
}

ListAssignment read_assignment(std::istream& in) {
    std::string line;
    int k = -1;
    std::map<int, std::vector<int>> by_vertex;
    int lineno = 0;
    while (std::getline(in, line)) {
        lineno++;
        std::stringstream ss(line);
        std::string head;
        if (!(ss >> head) || head[0] == '#') continue;
        if (head == "k") {
            if (k >= 0) throw std::invalid_argument("assignment: duplicate 'k' header");
            if (!(ss >> k) || k < 1)
                throw std::invalid_argument("assignment: bad 'k' header at line " +
                                            std::to_string(lineno));
            continue;
        }
        if (k < 0) throw std::invalid_argument("assignment: vertex line before 'k' header");
        if (head.back() != ':')
            throw std::invalid_argument("assignment: expected '<vertex>:' at line " +
                                        std::to_string(lineno));
        int v = parse_int(head.substr(0, head.size() - 1), "assignment vertex index");
        if (by_vertex.count(v))
            throw std::invalid_argument("assignment: duplicate vertex " + std::to_string(v));
        std::vector<int> list;
        int c;
        while (ss >> c) list.push_back(c);
        if (static_cast<int>(list.size()) != k)
            throw std::invalid_argument("assignment: vertex " + std::to_string(v) + " has " +
                                        std::to_string(list.size()) + " colors, expected " +
                                        std::to_string(k));
        by_vertex[v] = std::move(list);
    }
    if (k < 0) throw std::invalid_argument("assignment: missing 'k' header");
    std::vector<std::vector<int>> lists;
    int expected = 0;
    for (auto& [v, list] : by_vertex) {
        if (v != expected++)
            throw std::invalid_argument("assignment: vertex indices must cover 0..n-1; missing " +
                                        std::to_string(expected - 1));
        lists.push_back(std::move(list));
    }
    return ListAssignment::from_lists(std::move(lists));
}

void write_assignment(std::ostream& out, const ListAssignment& l) {
    out << "k " << l.uniform_size() << "\n";
    for (int v = 0; v < l.vertex_count(); v++) {
        out << v << ":";
        for (int c : l.lists[v]) out << " " << c;
        out << "\n";
    }
}

Coloring read_coloring(std::istream& in) {
    std::string line;
    std::map<int, int> by_vertex;
    int lineno = 0;
    while (std::getline(in, line)) {
        lineno++;
        std::stringstream ss(line);
        std::string head;
        if (!(ss >> head) || head[0] == '#') continue;
        if (head.back() != ':')
            throw std::invalid_argument("coloring: expected '<vertex>:' at line " +
                                        std::to_string(lineno));
        int v = parse_int(head.substr(0, head.size() - 1), "coloring vertex index");
        int c;
        if (!(ss >> c))
            throw std::invalid_argument("coloring: missing color at line " +
                                        std::to_string(lineno));
        if (by_vertex.count(v))
            throw std::invalid_argument("coloring: duplicate vertex " + std::to_string(v));
        by_vertex[v] = c;
    }
    Coloring f;
    int expected = 0;
    for (auto [v, c] : by_vertex) {
        if (v != expected++)
            throw std::invalid_argument("coloring: vertex indices must cover 0..n-1; missing " +
                                        std::to_string(expected - 1));
        f.color.push_back(c);
    }
    return f;
}

void write_coloring(std::ostream& out, const Coloring& f) {
    for (std::size_t v = 0; v < f.color.size(); v++) out << v << ": " << f.color[v] << "\n";
}

std::string CacheRecord::to_line() const {
    std::ostringstream out;
    out << "graph=" << graph << " k=" << k << " outcome=" << outcome;
    if (witness_hash) {
        char buf[24];
        std::snprintf(buf, sizeof buf, "%016llx",
                      static_cast<unsigned long long>(*witness_hash));
        out << " witness=" << buf;
    }
    out << " classes=" << classes_checked << " elapsed_ms=" << elapsed_ms << " version=" << version
        << " timestamp=" << timestamp;
    return out.str();
}

CacheRecord CacheRecord::from_line(const std::string& line) {
    CacheRecord r;
    std::stringstream ss(line);
    std::string token;
    while (ss >> token) {
        auto eq = token.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("cache: malformed token '" + token + "'");
        std::string key = token.substr(0, eq), value = token.substr(eq + 1);
        if (key == "graph")
            r.graph = value;
        else if (key == "k")
            r.k = parse_int(value, "cache k");
        else if (key == "outcome")
            r.outcome = value;
        else if (key == "witness")
            r.witness_hash = std::stoull(value, nullptr, 16);
        else if (key == "classes")
            r.classes_checked = std::stoull(value);
        else if (key == "elapsed_ms")
            r.elapsed_ms = std::stoll(value);
        else if (key == "version")
            r.version = value;
        else if (key == "timestamp")
            r.timestamp = value;
        else
            throw std::invalid_argument("cache: unknown key '" + key + "'");
    }
    if (r.graph.empty() || r.outcome.empty())
        throw std::invalid_argument("cache: incomplete record '" + line + "'");
    return r;
}

ResultCache::ResultCache(std::string path) : path_(std::move(path)) {
    std::ifstream in(path_);
    if (!in) return;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        records_.push_back(CacheRecord::from_line(line));
    }
}

std::optional<CacheRecord> ResultCache::lookup(const std::string& graph, int k) const {
    std::optional<CacheRecord> found;
    for (const auto& r : records_)
        if (r.graph == graph && r.k == k && r.outcome != "undecided") found = r;
    return found;
}

void ResultCache::record(CacheRecord r) {
    if (r.outcome != "undecided") {
        for (const auto& old : records_) {
            if (old.graph != r.graph || old.k != r.k || old.outcome == "undecided") continue;
            if (old.outcome != r.outcome)
                throw CacheMismatchError("cache: outcome for " + r.graph + " k=" +
                                         std::to_string(r.k) + " was " + old.outcome +
                                         ", now " + r.outcome);
            if (old.witness_hash && r.witness_hash && *old.witness_hash != *r.witness_hash)
                throw CacheMismatchError("cache: witness hash for " + r.graph + " k=" +
                                         std::to_string(r.k) + " changed between runs");
        }
    }
    std::ofstream out(path_, std::ios::app);
    if (!out) throw std::runtime_error("cache: cannot open '" + path_ + "' for append");
    out << r.to_line() << "\n";
    records_.push_back(std::move(r));
}

std::string utc_timestamp() {
    std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

} // namespace propchoose
