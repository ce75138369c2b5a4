#include "disub/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "disub/errors.hpp"

namespace disub {

namespace {

struct LineReader {
    std::istringstream in;
    int line_no = 0;

    explicit LineReader(const std::string &text) : in(text) {}

    // Next non-comment, non-blank line; false at end of input.
    bool next(std::string &out) {
        std::string line;
        while (std::getline(in, line)) {
            ++line_no;
            if (line.empty() || line[0] == '#')
                continue;
            out = line;
            return true;
        }
        return false;
    }
};

} // namespace

Digraph parse_digraph(const std::string &text) {
    LineReader r(text);
    std::string line;
    if (!r.next(line))
        throw ParseError(r.line_no, "missing header");
    std::istringstream head(line);
    std::string p, kind;
    long long n, m;
    if (!(head >> p >> kind >> n >> m) || p != "p" || kind != "digraph" || n < 0 || m < 0)
        throw ParseError(r.line_no, "expected `p digraph <n> <m>`");
    std::vector<std::pair<int, int>> arcs;
    for (long long i = 0; i < m; ++i) {
        if (!r.next(line))
            throw ParseError(r.line_no, "fewer arc lines than declared");
        std::istringstream arc(line);
        std::string a;
        long long u, v;
        if (!(arc >> a >> u >> v) || a != "a")
            throw ParseError(r.line_no, "expected `a <u> <v>`");
        std::string trailing;
        if (arc >> trailing)
            throw ParseError(r.line_no, "trailing tokens on arc line");
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError(r.line_no, "arc endpoint out of range");
        if (u == v)
            throw ParseError(r.line_no, "loop arc");
        arcs.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (r.next(line))
        throw ParseError(r.line_no, "unexpected extra line");
    std::sort(arcs.begin(), arcs.end());
    if (std::adjacent_find(arcs.begin(), arcs.end()) != arcs.end())
        throw ParseError(0, "duplicate arc");
    return Digraph(static_cast<int>(n), arcs);
}

std::string format_digraph(const Digraph &d) {
    std::ostringstream out;
    out << "p digraph " << d.n() << " " << d.arc_count() << "\n";
    for (auto [u, v] : d.arcs())
        out << "a " << u << " " << v << "\n";
    return out.str();
}

UndirectedGraph parse_undirected(const std::string &text) {
    LineReader r(text);
    std::string line;
    if (!r.next(line))
        throw ParseError(r.line_no, "missing header");
    std::istringstream head(line);
    std::string p, kind;
    long long n, m;
    if (!(head >> p >> kind >> n >> m) || p != "p" || kind != "graph" || n < 0 || m < 0)
        throw ParseError(r.line_no, "expected `p graph <n> <m>`");
    UndirectedGraph g;
    g.n = static_cast<int>(n);
    for (long long i = 0; i < m; ++i) {
        if (!r.next(line))
            throw ParseError(r.line_no, "fewer edge lines than declared");
        std::istringstream edge(line);
        std::string e;
        long long u, v;
        if (!(edge >> e >> u >> v) || e != "e")
            throw ParseError(r.line_no, "expected `e <u> <v>`");
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw ParseError(r.line_no, "edge endpoint out of range");
        if (u >= v)
            throw ParseError(r.line_no, "edges must satisfy u < v");
        g.edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (r.next(line))
        throw ParseError(r.line_no, "unexpected extra line");
    std::sort(g.edges.begin(), g.edges.end());
    if (std::adjacent_find(g.edges.begin(), g.edges.end()) != g.edges.end())
        throw ParseError(0, "duplicate edge");
    return g;
}

std::string format_undirected(const UndirectedGraph &g) {
    std::ostringstream out;
    out << "p graph " << g.n << " " << g.edges.size() << "\n";
    for (auto [u, v] : g.edges)
        out << "e " << u << " " << v << "\n";
    return out.str();
}

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace disub
