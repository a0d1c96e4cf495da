#include "greenseq/dot.hpp"

#include <sstream>

namespace greenseq {

std::string emit_dot(const QuiverGraph& q, const std::optional<std::map<int, VertexColor>>& colors) {
    std::ostringstream out;
    out << "digraph quiver {\n";
    for (std::size_t v = 1; v <= q.vertex_count(); ++v) {
        out << "  " << v;
        if (colors) {
            const auto it = colors->find(static_cast<int>(v));
            if (it != colors->end()) {
                out << (it->second == VertexColor::Green ? " [style=filled, fillcolor=\"#4caf50\"]"
                                                         : " [style=filled, fillcolor=\"#e53935\"]");
            }
        }
        out << ";\n";
    }
    for (const Arrow& a : q.arrows()) {
        out << "  " << a.source << " -> " << a.target;
        if (a.weight > 1) out << " [label=\"" << to_string(a.weight) << "\"]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace greenseq
