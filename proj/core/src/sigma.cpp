#include "trank/sigma.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace trank {

const char* to_string(SigmaVerdict v) {
  return v == SigmaVerdict::EvidenceConnected ? "evidence-connected" : "disconnected-at-radius";
}

namespace {

struct UnionFind {
  std::vector<int> parent;

  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }

  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }

  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }
};

}  // namespace

std::vector<int> connected_components(const CayleyBall& graph) {
  UnionFind uf(graph.vertices.size());
  for (const CayleyBall::Edge& e : graph.edges) uf.unite(e.from, e.to);
  std::vector<int> component(graph.vertices.size(), -1);
  int next_id = 0;
  for (std::size_t v = 0; v < graph.vertices.size(); ++v) {
    const int root = uf.find(static_cast<int>(v));
    if (component[static_cast<std::size_t>(root)] < 0)
      component[static_cast<std::size_t>(root)] = next_id++;
    component[v] = component[static_cast<std::size_t>(root)];
  }
  return component;
}

SigmaBallReport sigma_report(const Presentation& p, const Character& c, int radius,
                             const Oracle& o, std::size_t vertex_cap,
                             std::size_t witness_cap) {
  if (c.values.size() != p.generator_count())
    throw std::invalid_argument("character dimension does not match the generator count");
  if (c.is_zero()) throw std::invalid_argument("sigma report needs a nonzero character");

  const CayleyBall ball = cayley_ball(p, o, radius, vertex_cap);
  const CayleyBall sub = sigma_subgraph(ball, c);
  const std::vector<int> component = connected_components(sub);

  SigmaBallReport report;
  report.radius = radius;
  report.total_vertices = ball.vertices.size();
  report.sublevel_vertices = sub.vertices.size();
  report.components = component.empty()
                          ? 0
                          : static_cast<std::size_t>(
                                *std::max_element(component.begin(), component.end())) + 1;

  const int identity_component = component.empty() ? -1 : component[0];
  for (int comp : component) {
    if (comp == identity_component) ++report.identity_component_size;
  }
  std::vector<bool> represented(report.components, false);
  for (std::size_t v = 0; v < sub.vertices.size(); ++v) {
    const int comp = component[v];
    if (comp == identity_component || represented[static_cast<std::size_t>(comp)]) continue;
    represented[static_cast<std::size_t>(comp)] = true;
    if (report.witnesses.size() < witness_cap) report.witnesses.push_back(sub.vertices[v]);
  }
  report.verdict = report.components > 1 ? SigmaVerdict::DisconnectedAtRadius
                                         : SigmaVerdict::EvidenceConnected;
  return report;
}

}  // namespace trank
