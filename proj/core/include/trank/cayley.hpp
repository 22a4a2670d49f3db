#pragma once

#include <map>
#include <vector>

#include "trank/character.hpp"
#include "trank/oracle.hpp"

namespace trank {

/// Ball of the Cayley graph: vertices are canonical forms with their distance
/// from the identity, edges are right multiplications g -> g*s by positive
/// generators (both endpoints inside the ball). Vertex 0 is the identity;
/// discovery order is fixed by sorting each layer's canonical forms shortlex.
struct CayleyBall {
  int radius = 0;
  std::vector<Word> vertices;
  std::vector<int> distance;

  struct Edge {
    int from;
    int gen;
    int to;

    friend bool operator==(const Edge&, const Edge&) = default;
  };
  std::vector<Edge> edges;

  std::map<Word, int> index;

  int find(const Word& canonical) const {
    const auto it = index.find(canonical);
    return it == index.end() ? -1 : it->second;
  }
};

/// Breadth-first enumeration of all elements of word length <= radius.
/// Throws CapError when the ball would exceed vertex_cap vertices.
CayleyBall cayley_ball(const Presentation& p, const Oracle& o, int radius,
                       std::size_t vertex_cap = 200000);

/// Induced subgraph on the vertices with character value <= 0 (the identity
/// always qualifies). Distances are retained from the ball.
CayleyBall sigma_subgraph(const CayleyBall& ball, const Character& c);

}  // namespace trank
