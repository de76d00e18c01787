#include "treesq/graph_io.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "treesq/errors.hpp"

namespace treesq {

namespace {

[[noreturn]] void parse_fail(int line, const std::string& msg) {
    throw InvalidInputError("line " + std::to_string(line) + ": " + msg);
}

// Next non-blank, non-comment line; returns false at EOF.
bool next_content_line(std::istream& in, std::string& out, int& lineno) {
    std::string line;
    while (std::getline(in, line)) {
        ++lineno;
        size_t i = line.find_first_not_of(" \t\r");
        if (i == std::string::npos || line[i] == '#') continue;
        out = line;
        return true;
    }
    return false;
}

} // namespace

Graph read_edge_list(std::istream& in) {
    int lineno = 0;
    std::string line;
    if (!next_content_line(in, line, lineno)) parse_fail(lineno + 1, "missing header line \"n m\"");
    int n = 0, m = 0;
    {
        std::istringstream ss(line);
        std::string extra;
        if (!(ss >> n >> m) || (ss >> extra)) parse_fail(lineno, "expected header \"n m\"");
        if (n < 1) parse_fail(lineno, "vertex count must be >= 1");
        if (m < 0) parse_fail(lineno, "edge count must be >= 0");
    }
    std::vector<Edge> edges;
    edges.reserve(static_cast<size_t>(m));
    for (int k = 0; k < m; ++k) {
        if (!next_content_line(in, line, lineno))
            parse_fail(lineno + 1, "expected " + std::to_string(m) + " edges, got " +
                                       std::to_string(k));
        std::istringstream ss(line);
        int u = 0, v = 0;
        std::string extra;
        if (!(ss >> u >> v) || (ss >> extra)) parse_fail(lineno, "expected edge line \"u v\"");
        if (u >= v) parse_fail(lineno, "edge endpoints must be ascending");
        if (u < 1 || v > n) parse_fail(lineno, "edge endpoint out of range 1..n");
        edges.emplace_back(u, v);
    }
    if (next_content_line(in, line, lineno)) parse_fail(lineno, "trailing content after last edge");
    try {
        return Graph::from_edges(n, edges);
    } catch (const InvalidInputError& e) {
        throw InvalidInputError(std::string("edge list: ") + e.what());
    }
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInputError("cannot open " + path);
    try {
        return read_edge_list(in);
    } catch (const InvalidInputError& e) {
        throw InvalidInputError(path + ": " + e.what());
    }
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void write_edge_list_file(const std::string& path, const Graph& g) {
    std::ofstream out(path);
    if (!out) throw InvalidInputError("cannot write " + path);
    write_edge_list(out, g);
}

void write_dot(std::ostream& out, const Graph& g) {
    out << "graph G {\n";
    for (int v = 1; v <= g.vertex_count(); ++v) out << "  " << v << ";\n";
    for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
}

} // namespace treesq
