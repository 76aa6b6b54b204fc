#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "gaugeorbit/errors.hpp"

namespace gaugeorbit {

/// One oriented step along an edge: +1 forward (src -> dst), -1 reversed.
struct PathStep {
  std::string edge;
  int orientation = 1;
};

struct PathSpec {
  std::vector<PathStep> steps;
};

/// Finite directed multigraph with a base vertex. Self-loops and parallel
/// edges are allowed. Immutable after construction; edge ids are strings and
/// every deterministic ordering below is lexicographic in them.
class Graph {
 public:
  struct Edge {
    std::string id, src, dst;
  };

  Graph(std::vector<std::string> vertices, std::vector<Edge> edges, std::string base);

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::string& base() const { return base_; }

  bool has_vertex(const std::string& v) const { return vertex_index_.count(v) != 0; }
  const Edge* find_edge(const std::string& id) const;
  const Edge& edge(const std::string& id) const;  // throws InvalidPath if unknown

  /// Incident edge indices (either endpoint), sorted by edge id.
  const std::vector<int>& incident(const std::string& v) const;

 private:
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
  std::string base_;
  std::map<std::string, int> vertex_index_;
  std::map<std::string, int> edge_index_;
  std::map<std::string, std::vector<int>> incident_;
};

bool is_connected(const Graph& g);

/// Longest undirected shortest-path distance between any two vertices.
int diameter(const Graph& g);

/// Spanning tree grown breadth-first from the base, visiting each vertex's
/// incident edges in id order. Throws Disconnected.
std::set<std::string> maximal_tree(const Graph& g);

/// The unique tree path from the base to each vertex (empty for the base).
std::map<std::string, PathSpec> tree_paths(const Graph& g);

/// One loop per non-tree edge e, in id order:
///   (tree path base -> src(e)) . e . (tree path dst(e) -> base).
/// The loops freely generate the loop group at the base; their count is the
/// cycle rank |E| - |V| + 1.
struct FundamentalSystem {
  std::set<std::string> tree;
  std::vector<PathSpec> loops;
  std::vector<std::string> free_edge;  // loop index -> edge id
};

FundamentalSystem fundamental_system(const Graph& g);

/// Concatenation p1 . p2 (no endpoint check; holonomy validates chaining).
PathSpec concat(const PathSpec& p1, const PathSpec& p2);
PathSpec reversed(const PathSpec& p);

}  // namespace gaugeorbit
