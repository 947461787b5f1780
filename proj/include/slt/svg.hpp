#pragma once

#include <iosfwd>

#include "slt/graph.hpp"
#include "slt/instance.hpp"

namespace slt {

/// Points as dots (source highlighted); tree edges as lines and Steiner vertices as
/// hollow circles when a tree is given.
void write_svg(std::ostream& out, const Instance& instance, const RootedTree* tree);

}  // namespace slt
