#pragma once
//
// Brute-force genus by tracing the faces of every atom.
//
// An atom is fixed by one bit per vertex naming which angle class is white
// (bit 0: the angle at slots (0,1) is white). White faces run along the edge
// orientation, black faces against it: arriving at a half-edge, the face
// turns through the angle of its colour that contains that half-edge.
// Nothing here uses circuits, chord diagrams or matrices.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "stargenus/chords.hpp"
#include "stargenus/errors.hpp"
#include "stargenus/genus.hpp"
#include "stargenus/graph.hpp"
#include "stargenus/parallel.hpp"

namespace stargenus {

struct AtomColoring {
  /// Per vertex, the angle class that is white.
  std::map<VertexId, std::uint8_t> white_class;

  friend bool operator==(const AtomColoring&, const AtomColoring&) = default;
};

struct FaceCount {
  std::size_t white = 0;
  std::size_t black = 0;
  long long chi = 0;
  long long genus = 0;

  friend bool operator==(const FaceCount&, const FaceCount&) = default;
};

namespace detail {

class FaceTracer {
 public:
  FaceTracer(const StarGraph& g, const Orientation& o) : graph_(g) {
    tail_.resize(graph_.edge_count());
    head_.resize(graph_.edge_count());
    for (std::size_t e = 0; e < graph_.edge_count(); ++e) {
      const DirectedEdge& d = o.direction.at(graph_.edge_id(e));
      tail_[e] = graph_.half_edge(d.tail);
      head_[e] = graph_.half_edge(d.head);
    }
  }

  const IndexedGraph& graph() const { return graph_; }

  // white_class indexed densely by vertex
  FaceCount trace(const std::vector<std::uint8_t>& white_class) const {
    FaceCount f;
    f.white = count_cycles(white_class, true);
    f.black = count_cycles(white_class, false);
    f.chi = static_cast<long long>(graph_.vertex_count()) - static_cast<long long>(graph_.edge_count()) +
            static_cast<long long>(f.white + f.black);
    if (f.chi % 2 != 0) throw BrokenInvariant("odd Euler characteristic");
    f.genus = (2 - f.chi) / 2;
    if (f.genus < 0) throw BrokenInvariant("negative genus");
    return f;
  }

 private:
  // The face arrives at half-edge h and leaves along the other side of the
  // angle of colour `white` that contains h.
  std::size_t turn(std::size_t h, const std::vector<std::uint8_t>& white_class, bool white) const {
    const std::size_t k = graph_.vertex_of(h);
    const int s = graph_.slot_of(h);
    // angle (s, s+1) has class s & 1, angle (s-1, s) the other class
    const bool forward_is_white = (s & 1) == white_class[k];
    return graph_.rotate(h, forward_is_white == white ? 1 : -1);
  }

  std::size_t count_cycles(const std::vector<std::uint8_t>& white_class, bool white) const {
    const std::size_t m = graph_.edge_count();
    std::vector<bool> used(m, false);
    std::size_t cycles = 0;
    std::size_t covered = 0;
    for (std::size_t e = 0; e < m; ++e) {
      if (used[e]) continue;
      ++cycles;
      std::size_t f = e;
      while (!used[f]) {
        used[f] = true;
        ++covered;
        const std::size_t arrive = white ? head_[f] : tail_[f];
        const std::size_t leave = turn(arrive, white_class, white);
        const std::size_t next = graph_.edge_of(leave);
        // white faces leave along an outgoing half-edge, black ones along an incoming one
        if ((white ? tail_[next] : head_[next]) != leave) throw BrokenInvariant("face tracing left against the orientation");
        f = next;
      }
      if (f != e) throw BrokenInvariant("face tracing is not a permutation");
    }
    if (covered != m) throw BrokenInvariant("face tracing missed edges");
    return cycles;
  }

  IndexedGraph graph_;
  std::vector<std::size_t> tail_;
  std::vector<std::size_t> head_;
};

}  // namespace detail

/// Faces of the atom given by `coloring`. The orientation must alternate.
inline FaceCount trace_faces(const StarGraph& g, const Orientation& o, const AtomColoring& coloring) {
  if (!is_alternating(g, o)) throw std::invalid_argument("orientation does not alternate");
  const detail::FaceTracer tracer(g, o);
  std::vector<std::uint8_t> bits;
  for (VertexId v : tracer.graph().vertex_ids()) bits.push_back(coloring.white_class.at(v) & 1U);
  return tracer.trace(bits);
}

/// The atom corresponding to a permissible partition of an expanded diagram.
inline AtomColoring coloring_of_partition(const ChordDiagram& d, const PermissiblePartition& p) {
  AtomColoring c;
  for (const auto& g : d.groups) {
    const int white = p.side.at(g.vertex) == Side::white ? g.white_class : 1 - g.white_class;
    c.white_class.emplace(g.vertex, static_cast<std::uint8_t>(white));
  }
  return c;
}

inline constexpr std::size_t kDefaultOracleCap = 20;

struct OracleOptions {
  std::size_t cap = kDefaultOracleCap;
  unsigned threads = 0;
};

struct OracleResult {
  std::size_t n_vertices = 0;
  /// Chords the matrix route would use: one per 4-vertex, two per 6-vertex.
  std::size_t n_chords = 0;
  std::size_t min_genus = 0;
  /// Least coloring (lowest-id vertex most significant) reaching the minimum.
  AtomColoring witness;
  FaceCount faces;
};

/// Coloring number `index`: bit (n - 1 - k) is the white class of the k-th vertex.
inline AtomColoring coloring_at(const StarGraph& g, std::uint64_t index) {
  AtomColoring c;
  const std::size_t n = g.vertex_count();
  std::size_t k = 0;
  for (const auto& [v, d] : g.vertices()) {
    c.white_class.emplace(v, static_cast<std::uint8_t>((index >> (n - 1 - k)) & 1U));
    ++k;
  }
  return c;
}

/// Throws InvalidGraph, NotSourceSink, or OracleCapExceeded above `cap` vertices.
inline OracleResult oracle_min_genus(const StarGraph& g, const OracleOptions& options = {}) {
  {
    std::vector<std::string> problems;
    for (const auto& v : validate(g)) problems.push_back(v.message);
    if (!problems.empty()) throw InvalidGraph(std::move(problems));
  }
  const auto orientation = find_source_sink_orientation(g);
  if (!orientation) throw NotSourceSink();
  const std::size_t n = g.vertex_count();
  if (n > options.cap || n > kMaxPartitionBits) throw OracleCapExceeded(n, options.cap);

  const detail::FaceTracer tracer(g, *orientation);
  const std::uint64_t count = std::uint64_t{1} << n;
  struct Best {
    std::uint64_t index = 0;
    FaceCount faces;
    bool found = false;
  };
  const unsigned workers = static_cast<unsigned>(std::min<std::uint64_t>(resolve_threads(options.threads), count));
  std::vector<Best> best(std::max(1U, workers));
  parallel_chunks(count, workers, [&](unsigned chunk, std::uint64_t begin, std::uint64_t end) {
    Best local;
    std::vector<std::uint8_t> bits(n);
    for (std::uint64_t i = begin; i < end; ++i) {
      for (std::size_t k = 0; k < n; ++k) bits[k] = static_cast<std::uint8_t>((i >> (n - 1 - k)) & 1U);
      const FaceCount f = tracer.trace(bits);
      if (!local.found || f.genus < local.faces.genus) local = {i, f, true};
    }
    best[chunk] = local;
  });
  Best overall;
  for (const Best& b : best) {
    if (b.found && (!overall.found || b.faces.genus < overall.faces.genus)) overall = b;
  }

  OracleResult r;
  r.n_vertices = n;
  for (const auto& [v, d] : g.vertices()) r.n_chords += d == 4 ? 1 : 2;
  r.min_genus = static_cast<std::size_t>(overall.faces.genus);
  r.witness = coloring_at(g, overall.index);
  r.faces = overall.faces;
  return r;
}

struct PartitionCheck {
  std::uint64_t index = 0;
  std::size_t matrix_genus = 0;
  long long traced_genus = 0;
};

/// Genus of every permissible partition by both routes; the pipeline must carry its matrix.
inline std::vector<PartitionCheck> check_all_partitions(const Pipeline& p) {
  const detail::FaceTracer tracer(p.graph, p.orientation);
  std::vector<PartitionCheck> out;
  const std::uint64_t count = partition_count(p.expanded);
  for (std::uint64_t i = 0; i < count; ++i) {
    const PermissiblePartition part = partition_at(p.expanded, i);
    const AtomColoring c = coloring_of_partition(p.expanded, part);
    std::vector<std::uint8_t> bits;
    for (VertexId v : tracer.graph().vertex_ids()) bits.push_back(c.white_class.at(v));
    out.push_back({i, genus_of_partition(p.matrix, p.expanded, part).genus, tracer.trace(bits).genus});
  }
  return out;
}

}  // namespace stargenus
