#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "slt/graph.hpp"
#include "slt/instance.hpp"

namespace slt {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

/// steiner, restricted, kry, abp, solomon or mst.
RootedTree run_algorithm(const std::string& algo, const Instance& instance, unsigned threads = 1);

/// Entry point of the command-line tool; args[0] is the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace slt
