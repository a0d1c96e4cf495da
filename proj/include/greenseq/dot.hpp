#pragma once

#include <map>
#include <optional>
#include <string>

#include "greenseq/quiver.hpp"

namespace greenseq {

enum class VertexColor { Green, Red };

// Graphviz digraph of the quiver. Vertices are declared in order, arrows are
// sorted, and arrows of weight > 1 carry a label, so equal inputs give
// byte-identical output.
std::string emit_dot(const QuiverGraph& q, const std::optional<std::map<int, VertexColor>>& colors = std::nullopt);

}  // namespace greenseq
