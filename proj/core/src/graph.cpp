#include "gaugeorbit/graph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace gaugeorbit {

Graph::Graph(std::vector<std::string> vertices, std::vector<Edge> edges, std::string base)
    : vertices_(std::move(vertices)), edges_(std::move(edges)), base_(std::move(base)) {
  if (vertices_.empty()) throw std::invalid_argument("Graph: no vertices");
  for (int i = 0; i < static_cast<int>(vertices_.size()); ++i) {
    if (!vertex_index_.emplace(vertices_[i], i).second)
      throw std::invalid_argument("Graph: duplicate vertex " + vertices_[i]);
  }
  if (!has_vertex(base_)) throw std::invalid_argument("Graph: base vertex " + base_ + " missing");
  for (int i = 0; i < static_cast<int>(edges_.size()); ++i) {
    const Edge& e = edges_[i];
    if (!edge_index_.emplace(e.id, i).second)
      throw std::invalid_argument("Graph: duplicate edge id " + e.id);
    if (!has_vertex(e.src) || !has_vertex(e.dst))
      throw std::invalid_argument("Graph: edge " + e.id + " has unknown endpoint");
  }
  for (const auto& v : vertices_) incident_[v];  // ensure every vertex has an entry
  for (int i = 0; i < static_cast<int>(edges_.size()); ++i) {
    incident_[edges_[i].src].push_back(i);
    if (edges_[i].dst != edges_[i].src) incident_[edges_[i].dst].push_back(i);
  }
  for (auto& [v, ids] : incident_)
    std::sort(ids.begin(), ids.end(),
              [this](int a, int b) { return edges_[a].id < edges_[b].id; });
}

const Graph::Edge* Graph::find_edge(const std::string& id) const {
  const auto it = edge_index_.find(id);
  return it == edge_index_.end() ? nullptr : &edges_[it->second];
}

const Graph::Edge& Graph::edge(const std::string& id) const {
  const Edge* e = find_edge(id);
  if (!e) throw InvalidPath("unknown edge id: " + id);
  return *e;
}

const std::vector<int>& Graph::incident(const std::string& v) const {
  const auto it = incident_.find(v);
  if (it == incident_.end()) throw std::invalid_argument("unknown vertex: " + v);
  return it->second;
}

namespace {

// Breadth-first parents from the base; parent_edge[v] = -1 marks unvisited.
struct BfsTree {
  std::map<std::string, int> parent_edge;
  std::vector<std::string> order;
};

BfsTree bfs_from_base(const Graph& g) {
  BfsTree t;
  std::deque<std::string> queue;
  t.parent_edge[g.base()] = -2;  // root marker
  t.order.push_back(g.base());
  queue.push_back(g.base());
  while (!queue.empty()) {
    const std::string v = queue.front();
    queue.pop_front();
    for (int ei : g.incident(v)) {
      const auto& e = g.edges()[ei];
      const std::string& other = (e.src == v) ? e.dst : e.src;
      if (t.parent_edge.count(other)) continue;
      t.parent_edge[other] = ei;
      t.order.push_back(other);
      queue.push_back(other);
    }
  }
  return t;
}

}  // namespace

bool is_connected(const Graph& g) {
  return bfs_from_base(g).order.size() == g.vertices().size();
}

int diameter(const Graph& g) {
  if (!is_connected(g)) throw Disconnected("diameter: graph is not connected");
  int best = 0;
  for (const auto& start : g.vertices()) {
    std::map<std::string, int> depth{{start, 0}};
    std::deque<std::string> queue{start};
    while (!queue.empty()) {
      const std::string v = queue.front();
      queue.pop_front();
      for (int ei : g.incident(v)) {
        const auto& e = g.edges()[ei];
        const std::string& other = (e.src == v) ? e.dst : e.src;
        if (depth.count(other)) continue;
        depth[other] = depth[v] + 1;
        best = std::max(best, depth[other]);
        queue.push_back(other);
      }
    }
  }
  return best;
}

std::set<std::string> maximal_tree(const Graph& g) {
  const BfsTree t = bfs_from_base(g);
  if (t.order.size() != g.vertices().size())
    throw Disconnected("maximal_tree: graph is not connected");
  std::set<std::string> tree;
  for (const auto& [v, ei] : t.parent_edge)
    if (ei >= 0) tree.insert(g.edges()[ei].id);
  return tree;
}

std::map<std::string, PathSpec> tree_paths(const Graph& g) {
  const BfsTree t = bfs_from_base(g);
  if (t.order.size() != g.vertices().size())
    throw Disconnected("tree_paths: graph is not connected");
  std::map<std::string, PathSpec> paths;
  for (const std::string& v : t.order) {
    if (v == g.base()) {
      paths[v] = PathSpec{};
      continue;
    }
    const auto& e = g.edges()[t.parent_edge.at(v)];
    const bool forward = (e.dst == v);  // parent -> v along the edge direction?
    const std::string& parent = forward ? e.src : e.dst;
    PathSpec p = paths.at(parent);
    p.steps.push_back({e.id, forward ? 1 : -1});
    paths[v] = std::move(p);
  }
  return paths;
}

FundamentalSystem fundamental_system(const Graph& g) {
  FundamentalSystem fs;
  fs.tree = maximal_tree(g);
  const auto paths = tree_paths(g);

  std::vector<const Graph::Edge*> free;
  for (const auto& e : g.edges())
    if (!fs.tree.count(e.id)) free.push_back(&e);
  std::sort(free.begin(), free.end(),
            [](const Graph::Edge* a, const Graph::Edge* b) { return a->id < b->id; });

  for (const Graph::Edge* e : free) {
    PathSpec loop = paths.at(e->src);
    loop.steps.push_back({e->id, 1});
    PathSpec back = reversed(paths.at(e->dst));
    loop.steps.insert(loop.steps.end(), back.steps.begin(), back.steps.end());
    fs.loops.push_back(std::move(loop));
    fs.free_edge.push_back(e->id);
  }
  return fs;
}

PathSpec concat(const PathSpec& p1, const PathSpec& p2) {
  PathSpec out = p1;
  out.steps.insert(out.steps.end(), p2.steps.begin(), p2.steps.end());
  return out;
}

PathSpec reversed(const PathSpec& p) {
  PathSpec out;
  out.steps.reserve(p.steps.size());
  for (auto it = p.steps.rbegin(); it != p.steps.rend(); ++it)
    out.steps.push_back({it->edge, -it->orientation});
  return out;
}

}  // namespace gaugeorbit
