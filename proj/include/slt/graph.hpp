#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "slt/geom.hpp"
#include "slt/instance.hpp"

namespace slt {

inline constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

enum class VertexKind { input, steiner, source };

struct Vertex {
    Point2 pos;
    VertexKind kind = VertexKind::input;
    std::size_t label = npos;  ///< caller-defined reference, e.g. an index into a point list
};

/// Unordered vertex pair as (min, max).
inline std::pair<std::size_t, std::size_t> edge_key(std::size_t a, std::size_t b) {
    return a < b ? std::pair{a, b} : std::pair{b, a};
}

struct Edge {
    std::size_t u;
    std::size_t v;
    double weight;
};

/// Undirected geometric graph; edge weights are Euclidean lengths.
class GeoGraph {
public:
    std::size_t add_vertex(Point2 pos, VertexKind kind, std::size_t label = npos);
    void add_edge(std::size_t u, std::size_t v);

    std::size_t vertex_count() const { return vertices_.size(); }
    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }
    double total_weight() const;

private:
    std::vector<Vertex> vertices_;
    std::vector<Edge> edges_;
};

/// Tree stored by parent pointers. For trees over an instance, vertices
/// 0..n-1 are the instance points in order and Steiner vertices follow.
struct RootedTree {
    std::vector<Vertex> vertices;
    std::vector<std::size_t> parent;  ///< npos at the root
    std::vector<double> dist;         ///< tree distance to the root
    std::size_t root = 0;

    double weight() const;
    /// (parent, child) pairs ordered by child id.
    std::vector<std::pair<std::size_t, std::size_t>> edges() const;
};

/// Builds a rooted tree from an undirected edge list; throws unless the edges form a spanning tree.
RootedTree make_rooted_tree(std::vector<Vertex> vertices, std::span<const std::pair<std::size_t, std::size_t>> edges,
                            std::size_t root);

struct SpanningTree {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    double weight = 0.0;
};

/// Euclidean minimum spanning tree. Exact Prim for n <= 3000; larger inputs run
/// Kruskal on a k-nearest-neighbour candidate graph, doubling k until connected.
SpanningTree mst(std::span<const Point2> points);

/// O(n^2) Prim.
SpanningTree mst_exact(std::span<const Point2> points);

/// Dijkstra from root (binary heap). Equal-distance parents resolve to the lower id.
/// Throws std::runtime_error listing unreachable ids if the graph is disconnected.
RootedTree shortest_path_tree(const GeoGraph& graph, std::size_t root);

/// Repeatedly removes Steiner leaves, then renumbers surviving vertices in their original order.
RootedTree prune_steiner_leaves(const RootedTree& tree);

/// Replaces every non-root Steiner vertex with exactly one child by a direct edge from its
/// parent to that child. Weight and root distances never grow.
RootedTree splice_steiner_passes(const RootedTree& tree);

/// max over non-source points p of dist_T(p, s) / d(p, s).
double root_stretch(const RootedTree& tree, const Instance& instance);

/// w(T) / w(MST(points)).
double lightness(const RootedTree& tree, const Instance& instance);

/// Throws std::invalid_argument unless vertices 0..n-1 reproduce the instance points.
void check_covers_instance(const RootedTree& tree, const Instance& instance);

}  // namespace slt
