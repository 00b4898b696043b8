#include "imm/dot.hpp"

#include <fstream>
#include <sstream>

namespace imm {

std::string dot_string(const PosetRelation& c) {
    std::ostringstream os;
    os << "digraph poset {\n";
    os << "  rankdir=BT;\n";
    int m = c.universe.size();
    for (int i = 0; i < m; i++)
        os << "  n" << i << " [label=\"" << c.universe[i].str() << "\"];\n";
    for (int i = 0; i < m; i++)
        for (int j = 0; j < m; j++)
            if (i != j && c.leq[i][j]) os << "  n" << i << " -> n" << j << ";\n";
    os << "}\n";
    return os.str();
}

void emit_dot(const PosetRelation& c, const std::filesystem::path& out) {
    std::ofstream f(out, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open " + out.string() + " for writing");
    f << dot_string(c);
    f.flush();
    if (!f) throw std::runtime_error("write failed for " + out.string());
}

} // namespace imm
