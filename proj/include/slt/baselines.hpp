#pragma once

#include <cstddef>
#include <vector>

#include "slt/graph.hpp"
#include "slt/instance.hpp"

namespace slt {

/// Minimum spanning tree rooted at the source.
RootedTree mst_tree(const Instance& instance);

/// Light approximate shortest-path tree: depth-first walk of the MST that relaxes each
/// edge in both directions and links v directly to the source once d[v] exceeds
/// (1+eps) d(v,s). Returns the shortest-path tree of the MST plus the added links.
RootedTree kry_slt(const Instance& instance, double eps);

/// Depth-first preorder of the MST from the source (source first, children by ascending id).
std::vector<std::size_t> hamiltonian_path(const Instance& instance);

/// Splits the Hamiltonian path (source excluded) into maximal consecutive runs whose
/// weight stays <= factor * (min distance to the source within the run).
std::vector<std::vector<std::size_t>> break_path(const Instance& instance, const std::vector<std::size_t>& path,
                                                 double factor);

/// Subpaths with factor eps, each joined to the source through its closest vertex.
RootedTree abp_slt(const Instance& instance, double eps);

/// Weight bound of one merging gadget in multiples of its anchor distance.
inline constexpr double kGadgetFactor = 4.0;

/// Subpaths with factor sqrt(eps); each subpath reaches the source through a Steiner
/// gadget built by balanced pairwise merging.
RootedTree solomon_slt(const Instance& instance, double eps);

}  // namespace slt
