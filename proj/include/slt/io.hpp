#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "slt/graph.hpp"
#include "slt/instance.hpp"

namespace slt {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what);
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// slt-instance v1 / epsilon / source / points n / n lines "x y" (17 significant digits).
void write_instance(std::ostream& out, const Instance& instance);
Instance read_instance(std::istream& in);

/// slt-tree v1 / vertices m / m lines "id x y kind" / edges m-1 / m-1 lines "u v" / root id.
void write_tree(std::ostream& out, const RootedTree& tree);
RootedTree read_tree(std::istream& in);

void save_instance(const std::string& path, const Instance& instance);
Instance load_instance(const std::string& path);
void save_tree(const std::string& path, const RootedTree& tree);
RootedTree load_tree(const std::string& path);

std::string format_double(double v);

}  // namespace slt
