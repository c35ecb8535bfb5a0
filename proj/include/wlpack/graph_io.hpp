#pragma once

// Edge-list file format:
//
//   n m [c]        header; c=1 means a color line follows the edges
//   u v            one edge per line, 0-based
//   ...
//   c0 c1 ... c(n-1)   only if c=1
//
// '#' starts a comment, blank lines are skipped, line endings are LF.
// parse(serialize(G)) == G for every valid graph.

#include <wlpack/graph.hpp>

#include <fstream>
#include <sstream>
#include <string>

namespace wlpack {

class parse_error : public std::runtime_error {
  public:
    parse_error(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

  private:
    int line_;
};

inline Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;

    auto next_line = [&](std::string& out) -> bool {
        while (std::getline(in, raw)) {
            lineno++;
            auto hash = raw.find('#');
            if (hash != std::string::npos) raw.erase(hash);
            std::istringstream probe(raw);
            std::string tok;
            if (probe >> tok) {
                out = raw;
                return true;
            }
        }
        return false;
    };

    std::string line;
    if (!next_line(line)) throw parse_error(lineno, "missing header");
    std::istringstream hdr(line);
    long long n = -1, m = -1, c = 0;
    std::string extra;
    if (!(hdr >> n >> m)) throw parse_error(lineno, "malformed header");
    if (!(hdr >> c)) c = 0;
    if (hdr >> extra) throw parse_error(lineno, "trailing tokens in header");
    if (n < 0 || m < 0 || (c != 0 && c != 1)) throw parse_error(lineno, "malformed header");

    std::vector<Edge> edges;
    for (long long i = 0; i < m; i++) {
        if (!next_line(line)) throw parse_error(lineno, "expected edge line");
        std::istringstream es(line);
        long long u, v;
        if (!(es >> u >> v) || (es >> extra)) throw parse_error(lineno, "malformed edge line");
        if (u < 0 || v < 0 || u >= n || v >= n) throw parse_error(lineno, "vertex out of range");
        if (u == v) throw parse_error(lineno, "self-loop");
        Edge e{(int)std::min(u, v), (int)std::max(u, v)};
        edges.push_back(e);
    }
    {
        auto sorted = edges;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw parse_error(lineno, "duplicate edge");
    }

    std::vector<int> colors;
    if (c == 1) {
        if (!next_line(line)) throw parse_error(lineno, "expected color line");
        std::istringstream cs(line);
        long long col;
        while (cs >> col) {
            if (col < 0) throw parse_error(lineno, "negative color");
            colors.push_back((int)col);
        }
        if ((long long)colors.size() != n) throw parse_error(lineno, "color line has wrong arity");
    }
    if (next_line(line)) throw parse_error(lineno, "unexpected trailing line");

    return Graph((int)n, std::move(edges), std::move(colors));
}

inline std::string serialize_graph(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << " " << g.edge_count();
    if (g.colored()) out << " 1";
    out << "\n";
    for (const auto& [u, v] : g.edges()) out << u << " " << v << "\n";
    if (g.colored()) {
        for (int v = 0; v < g.vertex_count(); v++) out << (v ? " " : "") << g.color(v);
        out << "\n";
    }
    return out.str();
}

// Debug export; vertex colors become fill colors. Not round-tripped.
inline std::string to_dot(const Graph& g, const std::string& name = "G") {
    static const char* fills[] = {"white",     "tomato", "skyblue", "palegreen",
                                  "gold",      "plum",   "orange",  "turquoise",
                                  "lightgray", "salmon"};
    std::ostringstream out;
    out << "graph " << name << " {\n  node [style=filled];\n";
    for (int v = 0; v < g.vertex_count(); v++)
        out << "  " << v << " [fillcolor=" << fills[g.color(v) % 10] << "];\n";
    for (const auto& [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

inline Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str());
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << content;
}

}  // namespace wlpack
