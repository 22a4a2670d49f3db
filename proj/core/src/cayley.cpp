#include "trank/cayley.hpp"

#include <algorithm>

#include "trank/errors.hpp"

namespace trank {

CayleyBall cayley_ball(const Presentation& p, const Oracle& o, int radius,
                       std::size_t vertex_cap) {
  if (radius < 0) throw std::invalid_argument("radius must be nonnegative");
  CayleyBall ball;
  ball.radius = radius;
  ball.vertices.push_back(Word());
  ball.distance.push_back(0);
  ball.index.emplace(Word(), 0);

  std::vector<Word> layer{Word()};
  const int n = static_cast<int>(p.generator_count());
  for (int dist = 1; dist <= radius && !layer.empty(); ++dist) {
    std::vector<Word> next;
    for (const Word& v : layer) {
      for (int g = 0; g < n; ++g) {
        for (const long long e : {1LL, -1LL}) {
          Word u = o.normalize(multiply(v, Word::single(g, e)));
          if (ball.index.count(u) != 0) continue;
          ball.index.emplace(u, -1);  // reserve; id assigned after sorting
          next.push_back(std::move(u));
        }
      }
    }
    std::sort(next.begin(), next.end(), shortlex_less);
    for (Word& u : next) {
      if (ball.vertices.size() >= vertex_cap)
        throw CapError("Cayley ball exceeded the vertex cap");
      ball.index[u] = static_cast<int>(ball.vertices.size());
      ball.vertices.push_back(u);
      ball.distance.push_back(dist);
    }
    layer = std::move(next);
  }

  for (int v = 0; v < static_cast<int>(ball.vertices.size()); ++v) {
    for (int g = 0; g < n; ++g) {
      const Word u = o.normalize(multiply(ball.vertices[static_cast<std::size_t>(v)],
                                          Word::single(g, 1)));
      const int to = ball.find(u);
      if (to >= 0) ball.edges.push_back({v, g, to});
    }
  }
  return ball;
}

CayleyBall sigma_subgraph(const CayleyBall& ball, const Character& c) {
  CayleyBall sub;
  sub.radius = ball.radius;
  std::vector<int> remap(ball.vertices.size(), -1);
  for (std::size_t v = 0; v < ball.vertices.size(); ++v) {
    if (evaluate(c, ball.vertices[v]) > 0) continue;
    remap[v] = static_cast<int>(sub.vertices.size());
    sub.vertices.push_back(ball.vertices[v]);
    sub.distance.push_back(ball.distance[v]);
    sub.index.emplace(ball.vertices[v], remap[v]);
  }
  for (const CayleyBall::Edge& e : ball.edges) {
    const int from = remap[static_cast<std::size_t>(e.from)];
    const int to = remap[static_cast<std::size_t>(e.to)];
    if (from >= 0 && to >= 0) sub.edges.push_back({from, e.gen, to});
  }
  return sub;
}

}  // namespace trank
