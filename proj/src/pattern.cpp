#include "disub/pattern.hpp"

#include <algorithm>
#include <sstream>

#include "disub/errors.hpp"

namespace disub {

int PatternDigraph::arc_index(int u, int v) const {
    auto all = F.arcs();
    auto it = std::lower_bound(all.begin(), all.end(), std::make_pair(u, v));
    if (it == all.end() || *it != std::make_pair(u, v))
        return -1;
    return static_cast<int>(it - all.begin());
}

ConstraintMap parse_constraints(const std::string &text, const PatternDigraph &f) {
    ConstraintMap result;
    result.per_arc.assign(f.F.arc_count(), ArcConstraint{});
    std::vector<char> seen(f.F.arc_count(), 0);
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#')
            continue;
        std::istringstream ls(line);
        std::string c;
        long long u, v, r, q;
        if (!(ls >> c >> u >> v >> r >> q) || c != "c")
            throw ParseError(line_no, "expected `c <u> <v> <r> <q>`");
        std::string trailing;
        if (ls >> trailing)
            throw ParseError(line_no, "trailing tokens on constraint line");
        if (q < 1)
            throw ParseError(line_no, "modulus must be >= 1");
        int idx = f.arc_index(static_cast<int>(u), static_cast<int>(v));
        if (idx < 0)
            throw ParseError(line_no, "constraint for an arc not in the pattern");
        if (seen[idx])
            throw ParseError(line_no, "duplicate constraint for arc");
        seen[idx] = 1;
        result.per_arc[idx] = ArcConstraint{static_cast<int>(((r % q) + q) % q),
                                            static_cast<int>(q)};
    }
    for (int e = 0; e < f.F.arc_count(); ++e)
        if (!seen[e])
            throw ParseError(line_no, "missing constraint for a pattern arc");
    return result;
}

std::string format_constraints(const ConstraintMap &c, const PatternDigraph &f) {
    std::ostringstream out;
    auto arcs = f.arcs();
    for (std::size_t e = 0; e < arcs.size(); ++e)
        out << "c " << arcs[e].first << " " << arcs[e].second << " " << c.per_arc[e].r << " "
            << c.per_arc[e].q << "\n";
    return out.str();
}

} // namespace disub
