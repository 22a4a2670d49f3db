#pragma once

#include <string>
#include <vector>

#include "trank/cayley.hpp"

namespace trank {

enum class SigmaVerdict { EvidenceConnected, DisconnectedAtRadius };

const char* to_string(SigmaVerdict v);

/// Connectivity evidence for the sub-level subgraph of a ball. Both verdicts
/// are heuristic: no finite radius certifies membership in Sigma or its
/// complement; certificates come from the ascending-HNN route instead.
struct SigmaBallReport {
  int radius = 0;
  std::size_t total_vertices = 0;
  std::size_t sublevel_vertices = 0;
  std::size_t components = 0;
  std::size_t identity_component_size = 0;
  std::vector<Word> witnesses;  // one representative per non-identity component
  SigmaVerdict verdict = SigmaVerdict::EvidenceConnected;
};

/// Connected component ids (0-based, by smallest contained vertex) for each
/// vertex of the graph.
std::vector<int> connected_components(const CayleyBall& graph);

SigmaBallReport sigma_report(const Presentation& p, const Character& c, int radius,
                             const Oracle& o, std::size_t vertex_cap = 200000,
                             std::size_t witness_cap = 10);

}  // namespace trank
