#pragma once
//
// Named test graphs and seeded random generators.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "stargenus/graph.hpp"

namespace stargenus::fixtures {

namespace detail {

inline StarGraph single_vertex(int degree, const std::vector<std::pair<int, int>>& loops) {
  StarGraph g;
  g.add_vertex(0, degree);
  EdgeId id = 0;
  for (const auto& [s, t] : loops) g.add_edge(id++, {0, s}, {0, t});
  return g;
}

// Plain modulo draw; std distributions differ between standard libraries.
inline std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

template <typename T>
void shuffle(std::vector<T>& items, std::mt19937_64& rng) {
  for (std::size_t i = items.size(); i > 1; --i) std::swap(items[i - 1], items[draw(rng, i)]);
}

}  // namespace detail

/// One 4-vertex, loops at slots (0,1) and (2,3).
inline StarGraph g8() { return detail::single_vertex(4, {{0, 1}, {2, 3}}); }
/// One 4-vertex, loops at slots (0,2) and (1,3); not source-sink.
inline StarGraph gx() { return detail::single_vertex(4, {{0, 2}, {1, 3}}); }
inline StarGraph gt3f() { return detail::single_vertex(6, {{0, 1}, {2, 3}, {4, 5}}); }
inline StarGraph gt3c() { return detail::single_vertex(6, {{0, 3}, {1, 4}, {2, 5}}); }

/// Two 4-vertices u = 0, v = 1 joined by four edges.
inline StarGraph ghopf() {
  StarGraph g;
  g.add_vertex(0, 4);
  g.add_vertex(1, 4);
  g.add_edge(0, {0, 0}, {1, 2});
  g.add_edge(1, {1, 3}, {0, 1});
  g.add_edge(2, {0, 2}, {1, 0});
  g.add_edge(3, {1, 1}, {0, 3});
  return g;
}

/// k 4-vertices in a row, consecutive ones joined by two parallel edges,
/// with a loop closing each end. Planar, source-sink, 2k edges.
inline StarGraph chain(std::size_t k) {
  if (k == 0) throw std::invalid_argument("chain needs at least one vertex");
  StarGraph g;
  for (std::size_t i = 0; i < k; ++i) g.add_vertex(i, 4);
  EdgeId id = 0;
  g.add_edge(id++, {0, 1}, {0, 2});
  for (std::size_t i = 0; i + 1 < k; ++i) {
    g.add_edge(id++, {i, 0}, {i + 1, 1});
    g.add_edge(id++, {i, 3}, {i + 1, 2});
  }
  g.add_edge(id++, {k - 1, 0}, {k - 1, 3});
  return g;
}

/// Connected graph with n4 4-vertices (ids 0..n4-1) and n6 6-vertices after
/// them; nullopt when no vertex is requested. With `source_sink`, half-edges
/// are matched out-to-in under random vertex phases, so the result always
/// satisfies the source-sink condition.
inline std::optional<StarGraph> random_graph(std::uint64_t seed, std::size_t n4, std::size_t n6,
                                             bool source_sink = false) {
  if (n4 + n6 == 0) return std::nullopt;
  std::mt19937_64 rng(seed);
  StarGraph g;
  std::vector<int> degree;
  for (std::size_t i = 0; i < n4 + n6; ++i) {
    degree.push_back(i < n4 ? 4 : 6);
    g.add_vertex(i, degree.back());
  }

  std::vector<std::pair<HalfEdge, HalfEdge>> pairs;
  if (source_sink) {
    std::vector<HalfEdge> outs;
    std::vector<HalfEdge> ins;
    for (std::size_t v = 0; v < degree.size(); ++v) {
      const int phase = static_cast<int>(detail::draw(rng, 2));
      for (int s = 0; s < degree[v]; ++s) (((s + phase) & 1) == 0 ? outs : ins).push_back({v, s});
    }
    detail::shuffle(ins, rng);
    for (std::size_t i = 0; i < outs.size(); ++i) pairs.emplace_back(outs[i], ins[i]);
  } else {
    std::vector<HalfEdge> halves;
    for (std::size_t v = 0; v < degree.size(); ++v) {
      for (int s = 0; s < degree[v]; ++s) halves.push_back({v, s});
    }
    detail::shuffle(halves, rng);
    for (std::size_t i = 0; i + 1 < halves.size(); i += 2) pairs.emplace_back(halves[i], halves[i + 1]);
  }

  // Every vertex has even degree, so no edge is a bridge: swapping the far
  // ends of one edge from each of two components always joins them.
  while (true) {
    ::stargenus::detail::DisjointSets sets(degree.size());
    for (const auto& [a, b] : pairs) sets.unite(a.vertex, b.vertex);
    std::size_t other = pairs.size();
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (sets.find(pairs[i].first.vertex) != sets.find(0)) {
        other = i;
        break;
      }
    }
    if (other == pairs.size()) break;
    std::vector<std::size_t> home;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (sets.find(pairs[i].first.vertex) == sets.find(0)) home.push_back(i);
    }
    const std::size_t mine = home[detail::draw(rng, home.size())];
    std::swap(pairs[mine].second, pairs[other].second);
  }

  EdgeId id = 0;
  for (const auto& [a, b] : pairs) g.add_edge(id++, a, b);
  return g;
}

/// g8, gx, ghopf, gt3f, gt3c; throws std::invalid_argument otherwise.
inline StarGraph by_name(const std::string& name) {
  if (name == "g8") return g8();
  if (name == "gx") return gx();
  if (name == "ghopf") return ghopf();
  if (name == "gt3f") return gt3f();
  if (name == "gt3c") return gt3c();
  throw std::invalid_argument("unknown fixture '" + name + "'");
}

}  // namespace stargenus::fixtures
