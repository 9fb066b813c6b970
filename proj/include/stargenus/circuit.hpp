#pragma once
//
// Rotating-splitting Euler circuits.
//
// A transition system pairs, at every vertex, each incoming half-edge with an
// outgoing one. Following the pairings partitions the edges into directed
// cycles. Starting from the all-rotating system, cycles are merged one vertex
// at a time by switching that vertex to another admissible local structure
// until a single cycle (the circuit) remains.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "stargenus/errors.hpp"
#include "stargenus/graph.hpp"

namespace stargenus {

struct SlotPair {
  int in = 0;
  int out = 0;

  friend bool operator==(const SlotPair&, const SlotPair&) = default;
};

enum class LocalStructure { rotating, splitting, invalid };

/// rotating: every pair slot-adjacent. splitting: degree 6, exactly one pair
/// opposite and the other two adjacent.
inline LocalStructure classify_local(int degree, std::span<const SlotPair> pairs) {
  if (static_cast<int>(pairs.size()) * 2 != degree) return LocalStructure::invalid;
  int adjacent = 0;
  int opposite = 0;
  for (const auto& p : pairs) {
    if (slots_adjacent(degree, p.in, p.out)) {
      ++adjacent;
    } else if (slots_opposite(degree, p.in, p.out)) {
      ++opposite;
    }
  }
  if (adjacent * 2 == degree) return LocalStructure::rotating;
  if (degree == 6 && opposite == 1 && adjacent == 2) return LocalStructure::splitting;
  return LocalStructure::invalid;
}

struct TransitionSystem {
  /// next[v][s] is the outgoing slot paired with incoming slot s, or -1 when s is outgoing.
  std::map<VertexId, std::vector<int>> next;

  std::vector<SlotPair> pairs(VertexId v) const {
    std::vector<SlotPair> out;
    const auto& row = next.at(v);
    for (int s = 0; s < static_cast<int>(row.size()); ++s) {
      if (row[s] >= 0) out.push_back({s, row[s]});
    }
    return out;
  }

  friend bool operator==(const TransitionSystem&, const TransitionSystem&) = default;
};

/// The all-rotating system: incoming slot s continues out of slot s + 1.
inline TransitionSystem initial_transition_system(const StarGraph& g, const Orientation& o) {
  TransitionSystem ts;
  for (const auto& [v, d] : g.vertices()) {
    std::vector<int> row(static_cast<std::size_t>(d), -1);
    for (int s = 0; s < d; ++s) {
      if (!o.outgoing({v, s})) row[s] = (s + 1) % d;
    }
    ts.next.emplace(v, std::move(row));
  }
  return ts;
}

/// One pass of the circuit through a vertex: arrives along `arrive`, leaves along `depart`.
struct Visit {
  VertexId vertex = 0;
  int arrive = 0;
  int depart = 0;

  friend bool operator==(const Visit&, const Visit&) = default;
};

struct EulerCircuit {
  /// Directed edges in circuit order, starting with the lowest edge id.
  std::vector<DirectedEdge> edges;
  /// visits[k] is the vertex left along edges[k], entered along edges[k - 1].
  std::vector<Visit> visits;

  /// Circle positions of each vertex's visits, ascending.
  std::map<VertexId, std::vector<std::size_t>> positions() const {
    std::map<VertexId, std::vector<std::size_t>> out;
    for (std::size_t k = 0; k < visits.size(); ++k) out[visits[k].vertex].push_back(k);
    return out;
  }

  friend bool operator==(const EulerCircuit&, const EulerCircuit&) = default;
};

namespace detail {

// Dense transition tracer shared by cycle extraction and merging.
class Tracer {
 public:
  Tracer(const StarGraph& g, const Orientation& o, const TransitionSystem& ts) : graph_(g) {
    const std::size_t m = graph_.edge_count();
    tail_.resize(m);
    head_.resize(m);
    for (std::size_t e = 0; e < m; ++e) {
      const DirectedEdge& d = o.direction.at(graph_.edge_id(e));
      tail_[e] = graph_.half_edge(d.tail);
      head_[e] = graph_.half_edge(d.head);
    }
    trans_.assign(graph_.half_edge_count(), kNone);
    for (std::size_t k = 0; k < graph_.vertex_count(); ++k) {
      const auto& row = ts.next.at(graph_.vertex_id(k));
      for (int s = 0; s < graph_.degree(k); ++s) {
        if (row[s] >= 0) trans_[graph_.half_edge(k, s)] = graph_.half_edge(k, row[s]);
      }
    }
  }

  const IndexedGraph& graph() const { return graph_; }
  std::size_t tail(std::size_t e) const { return tail_[e]; }
  std::size_t head(std::size_t e) const { return head_[e]; }
  bool outgoing(std::size_t h) const { return tail_[graph_.edge_of(h)] == h; }

  std::size_t next_edge(std::size_t e) const { return graph_.edge_of(trans_[head_[e]]); }

  /// Labels every edge with its cycle; returns the number of cycles.
  std::size_t label_cycles(std::vector<std::size_t>& label) const {
    label.assign(graph_.edge_count(), kNone);
    std::size_t cycles = 0;
    for (std::size_t e = 0; e < graph_.edge_count(); ++e) {
      if (label[e] != kNone) continue;
      for (std::size_t f = e; label[f] == kNone; f = next_edge(f)) label[f] = cycles;
      ++cycles;
    }
    return cycles;
  }

  std::vector<std::size_t> cycle_from(std::size_t e) const {
    std::vector<std::size_t> out{e};
    for (std::size_t f = next_edge(e); f != e; f = next_edge(f)) out.push_back(f);
    return out;
  }

  std::size_t distinct_labels_at(std::size_t k, const std::vector<std::size_t>& label) const {
    std::vector<std::size_t> seen;
    for (int s = 0; s < graph_.degree(k); ++s) seen.push_back(label[graph_.edge_of(graph_.half_edge(k, s))]);
    std::sort(seen.begin(), seen.end());
    return static_cast<std::size_t>(std::unique(seen.begin(), seen.end()) - seen.begin());
  }

  // For each outgoing half-edge at vertex k: the incoming half-edge at k where
  // the walk starting along it first returns.
  std::map<std::size_t, std::size_t> strands_at(std::size_t k) const {
    std::map<std::size_t, std::size_t> strand;
    for (int s = 0; s < graph_.degree(k); ++s) {
      const std::size_t h = graph_.half_edge(k, s);
      if (!outgoing(h)) continue;
      std::size_t e = graph_.edge_of(h);
      while (graph_.vertex_of(head_[e]) != k) e = next_edge(e);
      strand.emplace(h, head_[e]);
    }
    return strand;
  }

  void set_transition(std::size_t in, std::size_t out) { trans_[in] = out; }
  std::size_t transition(std::size_t in) const { return trans_[in]; }

  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

 private:
  IndexedGraph graph_;
  std::vector<std::size_t> tail_;
  std::vector<std::size_t> head_;
  std::vector<std::size_t> trans_;
};

inline DirectedEdge directed(const Tracer& t, std::size_t e) {
  const IndexedGraph& g = t.graph();
  return {g.edge_id(e), g.ref(t.tail(e)), g.ref(t.head(e))};
}

}  // namespace detail

/// Edge partition induced by `ts`. Cycles are ordered by their lowest edge id
/// and each starts at its lowest edge id.
inline std::vector<std::vector<DirectedEdge>> cycles_of(const StarGraph& g, const Orientation& o,
                                                         const TransitionSystem& ts) {
  const detail::Tracer tracer(g, o, ts);
  std::vector<std::size_t> label;
  tracer.label_cycles(label);
  std::vector<std::vector<DirectedEdge>> out;
  std::vector<bool> started;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (label[e] < started.size() && started[label[e]]) continue;
    if (label[e] >= started.size()) started.resize(label[e] + 1, false);
    started[label[e]] = true;
    auto& cycle = out.emplace_back();
    for (std::size_t f : tracer.cycle_from(e)) cycle.push_back(detail::directed(tracer, f));
  }
  return out;
}

struct RsCircuit {
  TransitionSystem transitions;
  EulerCircuit circuit;
  /// Cycle count before the first merge and after each one.
  std::vector<std::size_t> cycle_counts;
};

namespace detail {

// All admissible bijections at a vertex, in lexicographic order of the images
// of the ascending incoming slots.
inline std::vector<std::vector<SlotPair>> admissible_structures(int degree, const std::vector<int>& ins,
                                                                std::vector<int> outs) {
  std::vector<std::vector<SlotPair>> out;
  std::sort(outs.begin(), outs.end());
  do {
    std::vector<SlotPair> pairs;
    for (std::size_t i = 0; i < ins.size(); ++i) pairs.push_back({ins[i], outs[i]});
    if (classify_local(degree, pairs) != LocalStructure::invalid) out.push_back(std::move(pairs));
  } while (std::next_permutation(outs.begin(), outs.end()));
  return out;
}

}  // namespace detail

/// Builds a rotating-splitting Euler circuit. Merges always happen at the
/// lowest-id vertex touched by two or more cycles, using the first admissible
/// local structure (canonical order) that lowers the cycle count.
/// Throws InvalidGraph for disconnected input and BrokenInvariant if no
/// admissible structure merges (unreachable under source-sink).
inline RsCircuit find_rs_circuit(const StarGraph& g, const Orientation& o) {
  if (!is_alternating(g, o)) throw std::invalid_argument("orientation does not alternate");
  RsCircuit result;
  result.transitions = initial_transition_system(g, o);
  detail::Tracer tracer(g, o, result.transitions);
  const IndexedGraph& ig = tracer.graph();
  if (ig.edge_count() == 0) throw InvalidGraph({"graph has no edges"});

  std::vector<std::size_t> label;
  std::size_t count = tracer.label_cycles(label);
  std::size_t fresh = count;
  result.cycle_counts.push_back(count);

  while (count > 1) {
    std::size_t k = 0;
    std::size_t before = 0;
    for (; k < ig.vertex_count(); ++k) {
      before = tracer.distinct_labels_at(k, label);
      if (before >= 2) break;
    }
    if (k == ig.vertex_count()) throw InvalidGraph({"disconnected"});

    const int d = ig.degree(k);
    const auto strand = tracer.strands_at(k);
    std::vector<int> ins;
    std::vector<int> outs;
    for (int s = 0; s < d; ++s) (tracer.outgoing(ig.half_edge(k, s)) ? outs : ins).push_back(s);

    std::optional<std::vector<SlotPair>> chosen;
    std::size_t after = 0;
    for (auto& candidate : detail::admissible_structures(d, ins, outs)) {
      std::map<std::size_t, std::size_t> map_in;
      for (const auto& p : candidate) map_in[ig.half_edge(k, p.in)] = ig.half_edge(k, p.out);
      std::set<std::size_t> visited;
      std::size_t cycles = 0;
      for (const auto& [start, unused] : map_in) {
        if (visited.count(start)) continue;
        ++cycles;
        for (std::size_t h = start; !visited.count(h); h = strand.at(map_in.at(h))) visited.insert(h);
      }
      if (cycles < before) {
        chosen = std::move(candidate);
        after = cycles;
        break;
      }
    }
    if (!chosen) {
      throw BrokenInvariant("no admissible local structure merges cycles at vertex " +
                            std::to_string(ig.vertex_id(k)));
    }

    auto& row = result.transitions.next.at(ig.vertex_id(k));
    for (const auto& p : *chosen) {
      row[p.in] = p.out;
      tracer.set_transition(ig.half_edge(k, p.in), ig.half_edge(k, p.out));
    }
    const std::size_t first_new = fresh;
    for (int s : outs) {
      const std::size_t e = ig.edge_of(ig.half_edge(k, s));
      if (label[e] >= first_new) continue;
      for (std::size_t f : tracer.cycle_from(e)) label[f] = fresh;
      ++fresh;
    }
    count = count - before + after;
    result.cycle_counts.push_back(count);
  }

  EulerCircuit& c = result.circuit;
  const auto order = tracer.cycle_from(0);
  for (std::size_t f : order) c.edges.push_back(detail::directed(tracer, f));
  const std::size_t m = order.size();
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t prev = order[(i + m - 1) % m];
    const std::size_t here = order[i];
    c.visits.push_back({ig.vertex_id(ig.vertex_of(tracer.tail(here))), ig.slot_of(tracer.head(prev)),
                        ig.slot_of(tracer.tail(here))});
  }
  return result;
}

/// Problems with a claimed rotating-splitting circuit; empty when it is one.
inline std::vector<std::string> check_rs_circuit(const StarGraph& g, const TransitionSystem& ts,
                                                 const EulerCircuit& c) {
  std::vector<std::string> problems;
  std::map<EdgeId, int> used;
  for (const auto& e : c.edges) ++used[e.id];
  for (const auto& [id, e] : g.edges()) {
    if (used[id] != 1) problems.push_back("edge " + std::to_string(id) + " used " + std::to_string(used[id]) + " times");
  }
  if (c.edges.size() != g.edge_count() || c.visits.size() != c.edges.size()) {
    problems.push_back("circuit length mismatch");
    return problems;
  }
  const std::size_t m = c.edges.size();
  for (std::size_t i = 0; i < m; ++i) {
    const DirectedEdge& prev = c.edges[(i + m - 1) % m];
    const DirectedEdge& here = c.edges[i];
    const Visit& v = c.visits[i];
    if (prev.head.vertex != here.tail.vertex || v.vertex != here.tail.vertex ||
        v.arrive != prev.head.slot || v.depart != here.tail.slot) {
      problems.push_back("broken chain at position " + std::to_string(i));
      continue;
    }
    if (ts.next.at(v.vertex)[v.arrive] != v.depart) {
      problems.push_back("transition mismatch at position " + std::to_string(i));
    }
  }
  for (const auto& [v, pos] : c.positions()) {
    const int d = g.degree(v);
    if (static_cast<int>(pos.size()) * 2 != d) {
      problems.push_back("vertex " + std::to_string(v) + " has " + std::to_string(pos.size()) + " visits");
    }
    const auto kind = classify_local(d, ts.pairs(v));
    if (kind == LocalStructure::invalid || (d == 4 && kind != LocalStructure::rotating)) {
      problems.push_back("vertex " + std::to_string(v) + " is neither rotating nor splitting");
    }
  }
  return problems;
}

enum class VertexKind { rotating4, rotating6_flat, rotating6_crossed, splitting6 };

struct VertexClass {
  VertexKind kind = VertexKind::rotating4;
  /// Circle position of the visit passing between opposite half-edges (splitting6 only).
  std::size_t principal = 0;

  friend bool operator==(const VertexClass&, const VertexClass&) = default;
};

inline std::string to_string(const VertexClass& c) {
  switch (c.kind) {
    case VertexKind::rotating4: return "rotating4";
    case VertexKind::rotating6_flat: return "rotating6-flat";
    case VertexKind::rotating6_crossed: return "rotating6-crossed";
    case VertexKind::splitting6: return "splitting6@" + std::to_string(c.principal);
  }
  return "?";
}

/// Rotating 6-vertices are flat when every arc between consecutive visits
/// leaves and returns on adjacent half-edges, crossed when on opposite ones.
/// Throws BrokenInvariant on mixed arcs or a vertex that is neither rotating
/// nor splitting.
inline std::map<VertexId, VertexClass> classify_vertices(const StarGraph& g, const EulerCircuit& c) {
  std::map<VertexId, VertexClass> out;
  for (const auto& [v, pos] : c.positions()) {
    const int d = g.degree(v);
    std::vector<SlotPair> pairs;
    for (std::size_t p : pos) pairs.push_back({c.visits[p].arrive, c.visits[p].depart});
    const auto kind = classify_local(d, pairs);
    if (kind == LocalStructure::invalid) {
      throw BrokenInvariant("vertex " + std::to_string(v) + " is neither rotating nor splitting");
    }
    if (d == 4) {
      if (kind != LocalStructure::rotating) throw BrokenInvariant("4-vertex must be rotating");
      out.emplace(v, VertexClass{VertexKind::rotating4, 0});
      continue;
    }
    if (kind == LocalStructure::splitting) {
      for (std::size_t p : pos) {
        if (slots_opposite(d, c.visits[p].arrive, c.visits[p].depart)) {
          out.emplace(v, VertexClass{VertexKind::splitting6, p});
        }
      }
      continue;
    }
    int flat = 0;
    int crossed = 0;
    for (std::size_t j = 0; j < pos.size(); ++j) {
      const int leave = c.visits[pos[j]].depart;
      const int back = c.visits[pos[(j + 1) % pos.size()]].arrive;
      if (slots_adjacent(d, leave, back)) ++flat;
      if (slots_opposite(d, leave, back)) ++crossed;
    }
    if (flat == 3) {
      out.emplace(v, VertexClass{VertexKind::rotating6_flat, 0});
    } else if (crossed == 3) {
      out.emplace(v, VertexClass{VertexKind::rotating6_crossed, 0});
    } else {
      throw BrokenInvariant("rotating 6-vertex " + std::to_string(v) + " is neither flat nor crossed");
    }
  }
  return out;
}

/// `circuit: e<i> ...` followed by one `class: <v> <kind>` line per vertex.
inline std::string format_circuit(const EulerCircuit& c, const std::map<VertexId, VertexClass>& classes) {
  std::ostringstream out;
  out << "circuit:";
  for (const auto& e : c.edges) out << " e" << e.id;
  out << '\n';
  for (const auto& [v, cls] : classes) out << "class: " << v << ' ' << to_string(cls) << '\n';
  return out.str();
}

}  // namespace stargenus
