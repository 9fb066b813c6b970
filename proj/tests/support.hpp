#pragma once
//
// Graph corpora shared by the unit tests and the acceptance runner.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <utility>
#include <vector>

#include "stargenus/stargenus.hpp"

namespace stargenus::testing {

/// Calls fn on every graph obtained by pairing up all half-edges of vertices
/// with the given degrees (ids 0..n-1). Edges are numbered in pairing order.
inline void for_each_matching(const std::vector<int>& degrees, const std::function<void(const StarGraph&)>& fn) {
  std::vector<HalfEdge> halves;
  for (std::size_t v = 0; v < degrees.size(); ++v) {
    for (int s = 0; s < degrees[v]; ++s) halves.push_back({v, s});
  }
  std::vector<bool> used(halves.size(), false);
  std::vector<std::pair<HalfEdge, HalfEdge>> pairs;

  std::function<void()> rec = [&]() {
    std::size_t first = 0;
    while (first < halves.size() && used[first]) ++first;
    if (first == halves.size()) {
      StarGraph g;
      for (std::size_t v = 0; v < degrees.size(); ++v) g.add_vertex(v, degrees[v]);
      EdgeId id = 0;
      for (const auto& [a, b] : pairs) g.add_edge(id++, a, b);
      fn(g);
      return;
    }
    used[first] = true;
    for (std::size_t j = first + 1; j < halves.size(); ++j) {
      if (used[j]) continue;
      used[j] = true;
      pairs.emplace_back(halves[first], halves[j]);
      rec();
      pairs.pop_back();
      used[j] = false;
    }
    used[first] = false;
  };
  rec();
}

/// Every valid, connected, source-sink graph with one or two vertices.
inline std::vector<StarGraph> small_corpus() {
  std::vector<StarGraph> out;
  const std::vector<std::vector<int>> shapes = {{4}, {6}, {4, 4}, {4, 6}, {6, 4}, {6, 6}};
  for (const auto& shape : shapes) {
    for_each_matching(shape, [&](const StarGraph& g) {
      if (validate(g).empty() && find_source_sink_orientation(g)) out.push_back(g);
    });
  }
  return out;
}

/// Seeded random source-sink graphs with 1..max_vertices vertices of mixed degree.
inline std::vector<StarGraph> random_corpus(std::size_t count, std::size_t max_vertices, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<StarGraph> out;
  while (out.size() < count) {
    const std::size_t n = 1 + rng() % max_vertices;
    const std::size_t n4 = rng() % (n + 1);
    auto g = fixtures::random_graph(rng(), n4, n - n4, true);
    if (g) out.push_back(std::move(*g));
  }
  return out;
}

/// Random chord diagram with `chords` chords.
inline ChordDiagram random_diagram(std::mt19937_64& rng, std::size_t chords) {
  std::vector<std::size_t> points(2 * chords);
  for (std::size_t i = 0; i < points.size(); ++i) points[i] = i;
  for (std::size_t i = points.size(); i > 1; --i) std::swap(points[i - 1], points[rng() % i]);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < points.size(); i += 2) pairs.emplace_back(points[i], points[i + 1]);
  return chord_diagram_from_pairs(points.size(), pairs);
}

}  // namespace stargenus::testing
