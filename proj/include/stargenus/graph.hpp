#pragma once
//
// *-graphs: graphs whose half-edges at each vertex carry a cyclic order.
//
// Half-edges are addressed as (vertex, slot) with slot in [0, degree). Two
// half-edges at a vertex are adjacent when their slots differ by 1 modulo the
// degree and opposite when they differ by degree/2. Only degrees 4 and 6 are
// admitted.
//
// A source-sink orientation is encoded by one phase bit per vertex: slot s is
// outgoing iff (s + phase) is even. Each edge then forces the phases of its
// endpoints to be equal or different, so deciding the condition is a parity
// two-colouring problem.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "stargenus/errors.hpp"

namespace stargenus {

using VertexId = std::uint64_t;
using EdgeId = std::uint64_t;

struct HalfEdge {
  VertexId vertex = 0;
  int slot = 0;

  friend auto operator<=>(const HalfEdge&, const HalfEdge&) = default;
};

inline std::string to_string(const HalfEdge& h) {
  return std::to_string(h.vertex) + "." + std::to_string(h.slot);
}

struct Edge {
  HalfEdge a;
  HalfEdge b;

  bool is_loop() const { return a.vertex == b.vertex; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Angle at a vertex: the slots (first, first + 1 mod degree).
struct Angle {
  VertexId vertex = 0;
  int first = 0;
  int second = 0;

  /// Angles (0,1), (2,3), ... form class 0; (1,2), (3,4), ... form class 1.
  int angle_class() const { return first & 1; }
  friend bool operator==(const Angle&, const Angle&) = default;
};

inline int slot_distance(int degree, int s, int t) {
  const int d = ((s - t) % degree + degree) % degree;
  return std::min(d, degree - d);
}

inline bool slots_adjacent(int degree, int s, int t) { return slot_distance(degree, s, t) == 1; }
inline bool slots_opposite(int degree, int s, int t) {
  return slot_distance(degree, s, t) == degree / 2;
}

/// The angle spanned by two adjacent slots.
inline Angle angle_between(VertexId v, int degree, int s, int t) {
  if ((s + 1) % degree == t) return {v, s, t};
  return {v, t, s};
}

class StarGraph {
 public:
  StarGraph() = default;

  /// Throws std::invalid_argument on a duplicate id.
  void add_vertex(VertexId id, int degree) {
    if (!vertices_.emplace(id, degree).second) {
      throw std::invalid_argument("duplicate vertex id " + std::to_string(id));
    }
  }

  void add_edge(EdgeId id, HalfEdge a, HalfEdge b) {
    if (!edges_.emplace(id, Edge{a, b}).second) {
      throw std::invalid_argument("duplicate edge id " + std::to_string(id));
    }
  }

  const std::map<VertexId, int>& vertices() const { return vertices_; }
  const std::map<EdgeId, Edge>& edges() const { return edges_; }

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  int degree(VertexId v) const {
    auto it = vertices_.find(v);
    if (it == vertices_.end()) throw std::out_of_range("unknown vertex " + std::to_string(v));
    return it->second;
  }

  bool has_vertex(VertexId v) const { return vertices_.count(v) != 0; }

  friend bool operator==(const StarGraph&, const StarGraph&) = default;

 private:
  std::map<VertexId, int> vertices_;
  std::map<EdgeId, Edge> edges_;
};

enum class ViolationKind {
  empty,
  bad_degree,
  unknown_vertex,
  slot_out_of_range,
  slot_covered_twice,
  slot_uncovered,
  disconnected,
};

struct Violation {
  ViolationKind kind;
  std::string message;
};

namespace detail {

struct DisjointSets {
  explicit DisjointSets(std::size_t n) : parent(n), rank(n, 0) {
    std::iota(parent.begin(), parent.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (rank[a] < rank[b]) std::swap(a, b);
    parent[b] = a;
    if (rank[a] == rank[b]) ++rank[a];
    return true;
  }

  std::vector<std::size_t> parent;
  std::vector<std::uint8_t> rank;
};

// Union-find that also tracks the parity of each element relative to its root.
struct ParityDisjointSets {
  explicit ParityDisjointSets(std::size_t n) : parent(n), parity(n, 0) {
    std::iota(parent.begin(), parent.end(), std::size_t{0});
  }

  std::pair<std::size_t, std::uint8_t> find(std::size_t x) {
    std::uint8_t p = 0;
    std::size_t r = x;
    while (parent[r] != r) {
      p ^= parity[r];
      r = parent[r];
    }
    // compress, rewriting parities relative to the root
    std::uint8_t q = p;
    while (parent[x] != r && parent[x] != x) {
      const std::size_t next = parent[x];
      const std::uint8_t px = parity[x];
      parent[x] = r;
      parity[x] = q;
      q ^= px;
      x = next;
    }
    return {r, p};
  }

  /// Records parity(a) ^ parity(b) == relation; returns false on contradiction.
  bool relate(std::size_t a, std::size_t b, std::uint8_t relation) {
    auto [ra, pa] = find(a);
    auto [rb, pb] = find(b);
    if (ra == rb) return (pa ^ pb) == relation;
    parent[rb] = ra;
    parity[rb] = static_cast<std::uint8_t>(pa ^ pb ^ relation);
    return true;
  }

  std::vector<std::size_t> parent;
  std::vector<std::uint8_t> parity;
};

}  // namespace detail

/// Itemized list of invariant violations; empty iff the graph is valid.
inline std::vector<Violation> validate(const StarGraph& g) {
  std::vector<Violation> out;
  if (g.vertex_count() == 0) {
    out.push_back({ViolationKind::empty, "graph has no vertices"});
    return out;
  }
  for (const auto& [v, d] : g.vertices()) {
    if (d != 4 && d != 6) {
      out.push_back({ViolationKind::bad_degree,
                     "vertex " + std::to_string(v) + " has degree " + std::to_string(d) +
                         " (expected 4 or 6)"});
    }
  }
  std::map<HalfEdge, int> cover;
  for (const auto& [id, e] : g.edges()) {
    for (const HalfEdge& h : {e.a, e.b}) {
      auto it = g.vertices().find(h.vertex);
      if (it == g.vertices().end()) {
        out.push_back({ViolationKind::unknown_vertex, "edge " + std::to_string(id) +
                                                          " references unknown vertex " +
                                                          std::to_string(h.vertex)});
        continue;
      }
      if (h.slot < 0 || h.slot >= it->second) {
        out.push_back({ViolationKind::slot_out_of_range,
                       "edge " + std::to_string(id) + " slot " + to_string(h) + " out of range"});
        continue;
      }
      ++cover[h];
    }
  }
  for (const auto& [v, d] : g.vertices()) {
    if (d != 4 && d != 6) continue;
    for (int s = 0; s < d; ++s) {
      const HalfEdge h{v, s};
      auto it = cover.find(h);
      const int count = it == cover.end() ? 0 : it->second;
      if (count == 0) {
        out.push_back({ViolationKind::slot_uncovered, "slot " + to_string(h) + " never covered"});
      } else if (count > 1) {
        out.push_back({ViolationKind::slot_covered_twice, "slot " + to_string(h) + " covered twice"});
      }
    }
  }
  // connectivity over the edges that reference known vertices
  std::map<VertexId, std::size_t> index;
  for (const auto& [v, d] : g.vertices()) index.emplace(v, index.size());
  detail::DisjointSets sets(index.size());
  std::size_t components = index.size();
  for (const auto& [id, e] : g.edges()) {
    auto ia = index.find(e.a.vertex);
    auto ib = index.find(e.b.vertex);
    if (ia == index.end() || ib == index.end()) continue;
    if (sets.unite(ia->second, ib->second)) --components;
  }
  if (components > 1) out.push_back({ViolationKind::disconnected, "disconnected"});
  return out;
}

/// Dense view of a structurally valid graph: vertices, half-edges and edges
/// are numbered contiguously in ascending id order. Connectivity is not required.
class IndexedGraph {
 public:
  explicit IndexedGraph(const StarGraph& g) {
    std::vector<std::string> problems;
    for (const auto& v : validate(g)) {
      if (v.kind != ViolationKind::disconnected && v.kind != ViolationKind::empty) {
        problems.push_back(v.message);
      }
    }
    if (!problems.empty()) throw InvalidGraph(std::move(problems));

    vertex_ids_.reserve(g.vertex_count());
    offset_.reserve(g.vertex_count() + 1);
    offset_.push_back(0);
    for (const auto& [v, d] : g.vertices()) {
      vertex_ids_.push_back(v);
      offset_.push_back(offset_.back() + static_cast<std::size_t>(d));
    }
    const std::size_t halves = offset_.back();
    vertex_of_.resize(halves);
    for (std::size_t k = 0; k < vertex_ids_.size(); ++k) {
      for (std::size_t h = offset_[k]; h < offset_[k + 1]; ++h) vertex_of_[h] = k;
    }
    mate_.assign(halves, 0);
    edge_of_.assign(halves, 0);
    for (const auto& [id, e] : g.edges()) {
      const std::size_t ha = half_edge(e.a);
      const std::size_t hb = half_edge(e.b);
      edge_of_[ha] = edge_of_[hb] = edge_ids_.size();
      mate_[ha] = hb;
      mate_[hb] = ha;
      edge_ids_.push_back(id);
      ends_.emplace_back(ha, hb);
    }
  }

  std::size_t vertex_count() const { return vertex_ids_.size(); }
  std::size_t edge_count() const { return edge_ids_.size(); }
  std::size_t half_edge_count() const { return vertex_of_.size(); }

  VertexId vertex_id(std::size_t k) const { return vertex_ids_[k]; }
  EdgeId edge_id(std::size_t e) const { return edge_ids_[e]; }
  const std::vector<VertexId>& vertex_ids() const { return vertex_ids_; }

  std::size_t vertex_index(VertexId v) const {
    auto it = std::lower_bound(vertex_ids_.begin(), vertex_ids_.end(), v);
    if (it == vertex_ids_.end() || *it != v) {
      throw std::out_of_range("unknown vertex " + std::to_string(v));
    }
    return static_cast<std::size_t>(it - vertex_ids_.begin());
  }

  std::size_t edge_index(EdgeId id) const {
    auto it = std::lower_bound(edge_ids_.begin(), edge_ids_.end(), id);
    if (it == edge_ids_.end() || *it != id) {
      throw std::out_of_range("unknown edge " + std::to_string(id));
    }
    return static_cast<std::size_t>(it - edge_ids_.begin());
  }

  int degree(std::size_t k) const { return static_cast<int>(offset_[k + 1] - offset_[k]); }
  std::size_t half_edge(std::size_t k, int slot) const { return offset_[k] + static_cast<std::size_t>(slot); }
  std::size_t half_edge(const HalfEdge& h) const { return half_edge(vertex_index(h.vertex), h.slot); }

  std::size_t vertex_of(std::size_t h) const { return vertex_of_[h]; }
  int slot_of(std::size_t h) const { return static_cast<int>(h - offset_[vertex_of_[h]]); }
  std::size_t mate(std::size_t h) const { return mate_[h]; }
  std::size_t edge_of(std::size_t h) const { return edge_of_[h]; }
  std::pair<std::size_t, std::size_t> ends(std::size_t e) const { return ends_[e]; }

  HalfEdge ref(std::size_t h) const { return {vertex_ids_[vertex_of_[h]], slot_of(h)}; }

  /// Half-edge at the same vertex, `step` slots further round the cyclic order.
  std::size_t rotate(std::size_t h, int step) const {
    const std::size_t k = vertex_of_[h];
    const int d = degree(k);
    const int s = ((slot_of(h) + step) % d + d) % d;
    return half_edge(k, s);
  }

 private:
  std::vector<VertexId> vertex_ids_;
  std::vector<std::size_t> offset_;
  std::vector<std::size_t> vertex_of_;
  std::vector<std::size_t> mate_;
  std::vector<std::size_t> edge_of_;
  std::vector<EdgeId> edge_ids_;
  std::vector<std::pair<std::size_t, std::size_t>> ends_;
};

struct DirectedEdge {
  EdgeId id = 0;
  HalfEdge tail;
  HalfEdge head;

  friend bool operator==(const DirectedEdge&, const DirectedEdge&) = default;
};

/// Source-sink orientation: in/out status alternates around every vertex.
struct Orientation {
  std::map<VertexId, std::uint8_t> phase;
  std::map<EdgeId, DirectedEdge> direction;

  bool outgoing(const HalfEdge& h) const { return ((h.slot + phase.at(h.vertex)) & 1) == 0; }

  friend bool operator==(const Orientation&, const Orientation&) = default;
};

/// Required value of phase(a) ^ phase(b) for an edge so that one end is outgoing.
inline std::uint8_t phase_relation(const Edge& e) {
  return static_cast<std::uint8_t>(1 ^ ((e.a.slot ^ e.b.slot) & 1));
}

/// Returns the orientation with slot 0 of the lowest-id vertex (of each
/// component) outgoing, or nullopt if none alternates at every vertex.
/// Throws InvalidGraph on structurally invalid input.
inline std::optional<Orientation> find_source_sink_orientation(const StarGraph& g) {
  const IndexedGraph ig(g);
  detail::ParityDisjointSets sets(ig.vertex_count());
  for (const auto& [id, e] : g.edges()) {
    if (!sets.relate(ig.vertex_index(e.a.vertex), ig.vertex_index(e.b.vertex), phase_relation(e))) {
      return std::nullopt;
    }
  }
  Orientation o;
  std::map<std::size_t, std::uint8_t> flip;
  for (std::size_t k = 0; k < ig.vertex_count(); ++k) {
    auto [root, parity] = sets.find(k);
    auto it = flip.try_emplace(root, parity).first;
    o.phase.emplace(ig.vertex_id(k), static_cast<std::uint8_t>(parity ^ it->second));
  }
  for (const auto& [id, e] : g.edges()) {
    if (o.outgoing(e.a)) {
      o.direction.emplace(id, DirectedEdge{id, e.a, e.b});
    } else {
      o.direction.emplace(id, DirectedEdge{id, e.b, e.a});
    }
  }
  return o;
}

/// Checks that `o` alternates at every vertex and agrees with g's edges.
inline bool is_alternating(const StarGraph& g, const Orientation& o) {
  if (o.direction.size() != g.edge_count()) return false;
  for (const auto& [id, e] : g.edges()) {
    auto it = o.direction.find(id);
    if (it == o.direction.end()) return false;
    const DirectedEdge& d = it->second;
    const bool same = d.tail == e.a && d.head == e.b;
    const bool swapped = d.tail == e.b && d.head == e.a;
    if (!same && !swapped) return false;
    if (!o.outgoing(d.tail) || o.outgoing(d.head)) return false;
  }
  return true;
}

/// Parity double cover. Copy `layer` of vertex v gets id 2v + layer and phase
/// `layer`; every edge lifts to two edges joining equal layers when its
/// endpoints need equal phases and opposite layers otherwise. Lifted edge ids
/// are 2e + (layer of the lift's `a` end).
inline StarGraph double_cover(const StarGraph& g) {
  {
    std::vector<std::string> problems;
    for (const auto& v : validate(g)) problems.push_back(v.message);
    if (!problems.empty()) throw InvalidGraph(std::move(problems));
  }
  constexpr auto limit = std::numeric_limits<std::uint64_t>::max() / 2;
  StarGraph cover;
  for (const auto& [v, d] : g.vertices()) {
    if (v >= limit) throw std::overflow_error("vertex id too large for double cover");
    cover.add_vertex(2 * v, d);
    cover.add_vertex(2 * v + 1, d);
  }
  for (const auto& [id, e] : g.edges()) {
    if (id >= limit) throw std::overflow_error("edge id too large for double cover");
    const std::uint8_t rel = phase_relation(e);
    for (std::uint64_t layer = 0; layer < 2; ++layer) {
      cover.add_edge(2 * id + layer, HalfEdge{2 * e.a.vertex + layer, e.a.slot},
                     HalfEdge{2 * e.b.vertex + (layer ^ rel), e.b.slot});
    }
  }
  return cover;
}

/// Splits a structurally valid graph into its connected components.
inline std::vector<StarGraph> connected_components(const StarGraph& g) {
  const IndexedGraph ig(g);
  detail::DisjointSets sets(ig.vertex_count());
  for (std::size_t e = 0; e < ig.edge_count(); ++e) {
    auto [ha, hb] = ig.ends(e);
    sets.unite(ig.vertex_of(ha), ig.vertex_of(hb));
  }
  std::map<std::size_t, std::size_t> slot_of_root;
  std::vector<StarGraph> parts;
  for (std::size_t k = 0; k < ig.vertex_count(); ++k) {
    auto [it, fresh] = slot_of_root.try_emplace(sets.find(k), parts.size());
    if (fresh) parts.emplace_back();
    parts[it->second].add_vertex(ig.vertex_id(k), ig.degree(k));
  }
  for (const auto& [id, e] : g.edges()) {
    parts[slot_of_root.at(sets.find(ig.vertex_index(e.a.vertex)))].add_edge(id, e.a, e.b);
  }
  return parts;
}

}  // namespace stargenus
