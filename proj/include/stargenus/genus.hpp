#pragma once
//
// Minimal checkerboard genus by rank minimisation over permissible partitions.
//
// Every vertex contributes one free bit: the side (white or black) of its
// chord group. Triad chords share the bit, double-chord chords take opposite
// sides (the bit names the side of the p+ chord). For a partition with chord
// index sets I (white) and J (black) the atom has genus
// (rank M_I + rank M_J) / 2, where M is the intersection matrix.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "stargenus/chords.hpp"
#include "stargenus/circuit.hpp"
#include "stargenus/errors.hpp"
#include "stargenus/gf2.hpp"
#include "stargenus/graph.hpp"
#include "stargenus/parallel.hpp"

namespace stargenus {

enum class Side : std::uint8_t { white = 0, black = 1 };

inline Side opposite(Side s) { return s == Side::white ? Side::black : Side::white; }
inline const char* side_name(Side s) { return s == Side::white ? "W" : "B"; }

struct PermissiblePartition {
  std::map<VertexId, Side> side;

  friend bool operator==(const PermissiblePartition&, const PermissiblePartition&) = default;
};

/// Largest vertex count for which partitions can be indexed by a 64-bit word.
inline constexpr std::size_t kMaxPartitionBits = 62;

inline std::uint64_t partition_count(const ChordDiagram& d) {
  if (d.groups.size() > kMaxPartitionBits) {
    throw std::length_error("too many vertices to enumerate partitions: " + std::to_string(d.groups.size()));
  }
  return std::uint64_t{1} << d.groups.size();
}

/// Partition number `index` in ascending bit-vector order; the lowest-id
/// vertex is the most significant bit and 1 means black.
inline PermissiblePartition partition_at(const ChordDiagram& d, std::uint64_t index) {
  PermissiblePartition p;
  const std::size_t n = d.groups.size();
  for (std::size_t k = 0; k < n; ++k) {
    const bool black = (index >> (n - 1 - k)) & 1U;
    p.side.emplace(d.groups[k].vertex, black ? Side::black : Side::white);
  }
  return p;
}

inline std::uint64_t partition_index(const ChordDiagram& d, const PermissiblePartition& p) {
  std::uint64_t index = 0;
  for (const auto& g : d.groups) index = (index << 1) | (p.side.at(g.vertex) == Side::black ? 1U : 0U);
  return index;
}

inline std::vector<Side> chord_sides(const ChordDiagram& d, const PermissiblePartition& p) {
  std::vector<Side> out;
  out.reserve(d.chords.size());
  for (const auto& c : d.chords) {
    const Side s = p.side.at(d.groups[c.group].vertex);
    out.push_back(c.role == ChordRole::minus ? opposite(s) : s);
  }
  return out;
}

/// Triad chords on one side, double-chord chords on opposite sides.
inline bool is_permissible(const ChordDiagram& d, const std::vector<Side>& sides) {
  if (sides.size() != d.chords.size()) return false;
  for (const auto& g : d.groups) {
    if (g.chords.size() != 2) continue;
    const bool same = sides[g.chords[0]] == sides[g.chords[1]];
    if (g.kind == AttachmentKind::triad && !same) return false;
    if (g.kind == AttachmentKind::double_chord && same) return false;
  }
  return true;
}

template <typename Fn>
void for_each_permissible_partition(const ChordDiagram& d, Fn&& fn) {
  const std::uint64_t count = partition_count(d);
  for (std::uint64_t i = 0; i < count; ++i) fn(partition_at(d, i));
}

inline std::vector<PermissiblePartition> enumerate_permissible_partitions(const ChordDiagram& d) {
  std::vector<PermissiblePartition> out;
  for_each_permissible_partition(d, [&](PermissiblePartition p) { out.push_back(std::move(p)); });
  return out;
}

struct PartitionGenus {
  std::size_t rank_white = 0;
  std::size_t rank_black = 0;
  std::size_t genus = 0;

  friend bool operator==(const PartitionGenus&, const PartitionGenus&) = default;
};

namespace detail {

inline PartitionGenus genus_from_sides(const BitMatrix& m, const std::vector<Side>& sides) {
  std::vector<std::size_t> white;
  std::vector<std::size_t> black;
  for (std::size_t i = 0; i < sides.size(); ++i) (sides[i] == Side::white ? white : black).push_back(i);
  PartitionGenus g;
  g.rank_white = m.principal_submatrix(white).rank();
  g.rank_black = m.principal_submatrix(black).rank();
  if ((g.rank_white % 2) != 0 || (g.rank_black % 2) != 0) {
    throw BrokenInvariant("odd rank of an alternating matrix");
  }
  g.genus = (g.rank_white + g.rank_black) / 2;
  return g;
}

}  // namespace detail

/// Throws BrokenInvariant if a side has odd rank.
inline PartitionGenus genus_of_partition(const BitMatrix& m, const ChordDiagram& d, const PermissiblePartition& p) {
  if (m.size() != d.chords.size()) throw std::invalid_argument("matrix does not match diagram");
  return detail::genus_from_sides(m, chord_sides(d, p));
}

/// Every stage of the matrix route for one graph.
struct Pipeline {
  StarGraph graph;
  Orientation orientation;
  RsCircuit rs;
  std::map<VertexId, VertexClass> classes;
  StarChordDiagram star;
  ChordDiagram expanded;
  BitMatrix matrix;  // empty when built without it
};

/// Throws InvalidGraph (including disconnected or empty input) or NotSourceSink.
inline Pipeline build_pipeline(const StarGraph& g, bool with_matrix = true) {
  {
    std::vector<std::string> problems;
    for (const auto& v : validate(g)) problems.push_back(v.message);
    if (!problems.empty()) throw InvalidGraph(std::move(problems));
  }
  auto orientation = find_source_sink_orientation(g);
  if (!orientation) throw NotSourceSink();
  Pipeline p;
  p.graph = g;
  p.orientation = std::move(*orientation);
  p.rs = find_rs_circuit(g, p.orientation);
  p.classes = classify_vertices(g, p.rs.circuit);
  p.star = build_star_chord_diagram(g, p.rs.circuit, p.classes);
  p.expanded = expand(p.star);
  if (with_matrix) p.matrix = intersection_matrix(p.expanded);
  return p;
}

struct GenusResult {
  std::size_t n_vertices = 0;
  std::size_t n_chords = 0;
  std::size_t min_genus = 0;
  PermissiblePartition witness;
  std::size_t rank_white = 0;
  std::size_t rank_black = 0;
};

/// Exhaustive minimum over all 2^n partitions; ties go to the least index.
/// The result does not depend on `threads` (0 = all cores).
inline GenusResult min_genus(const Pipeline& p, unsigned threads = 0) {
  const ChordDiagram& d = p.expanded;
  if (p.matrix.size() != d.chords.size()) throw std::invalid_argument("pipeline built without matrix");
  const std::uint64_t count = partition_count(d);
  const std::size_t n = d.groups.size();

  struct Best {
    std::uint64_t index = 0;
    PartitionGenus genus;
    bool found = false;
  };
  const unsigned workers = static_cast<unsigned>(std::min<std::uint64_t>(resolve_threads(threads), count));
  std::vector<Best> best(std::max(1U, workers));
  parallel_chunks(count, workers, [&](unsigned chunk, std::uint64_t begin, std::uint64_t end) {
    Best local;
    std::vector<Side> sides(d.chords.size());
    for (std::uint64_t i = begin; i < end; ++i) {
      for (std::size_t c = 0; c < d.chords.size(); ++c) {
        const bool black = ((i >> (n - 1 - d.chords[c].group)) & 1U) != (d.chords[c].role == ChordRole::minus);
        sides[c] = black ? Side::black : Side::white;
      }
      const PartitionGenus g = detail::genus_from_sides(p.matrix, sides);
      if (!local.found || g.genus < local.genus.genus) local = {i, g, true};
    }
    best[chunk] = local;
  });

  Best overall;
  for (const Best& b : best) {
    if (b.found && (!overall.found || b.genus.genus < overall.genus.genus)) overall = b;
  }
  GenusResult r;
  r.n_vertices = p.graph.vertex_count();
  r.n_chords = d.chords.size();
  r.min_genus = overall.genus.genus;
  r.witness = partition_at(d, overall.index);
  r.rank_white = overall.genus.rank_white;
  r.rank_black = overall.genus.rank_black;
  return r;
}

inline GenusResult min_genus(const StarGraph& g, unsigned threads = 0) {
  return min_genus(build_pipeline(g), threads);
}

struct PlanarityResult {
  bool planar = false;
  /// Set when planar: a partition with no linked chords on either side.
  std::optional<PermissiblePartition> witness;
  /// Set when not planar: chord indices forming a cycle of side constraints
  /// with an odd number of "different side" relations.
  std::vector<std::size_t> conflict;
};

/// Propagates side constraints breadth-first from the lowest unassigned chord
/// (placed white): linked chords and double-chord partners go opposite, triad
/// partners go together. O(chords^2) linkedness tests.
inline PlanarityResult is_planar(const ChordDiagram& d) {
  constexpr std::uint8_t kUnset = 2;
  const std::size_t n = d.chords.size();
  std::vector<std::uint8_t> color(n, kUnset);
  std::vector<std::size_t> parent(n, n);
  std::deque<std::size_t> queue;

  auto certificate = [&](std::size_t a, std::size_t b) {
    std::vector<std::size_t> up_a;
    std::vector<bool> on_a(n, false);
    for (std::size_t x = a; x != n; x = parent[x]) {
      up_a.push_back(x);
      on_a[x] = true;
    }
    std::vector<std::size_t> up_b;
    std::size_t meet = b;
    while (!on_a[meet]) {
      up_b.push_back(meet);
      meet = parent[meet];
    }
    std::vector<std::size_t> cycle;
    for (std::size_t x : up_a) {
      cycle.push_back(x);
      if (x == meet) break;
    }
    cycle.insert(cycle.end(), up_b.rbegin(), up_b.rend());
    return cycle;
  };

  for (std::size_t start = 0; start < n; ++start) {
    if (color[start] != kUnset) continue;
    color[start] = 0;
    queue.push_back(start);
    while (!queue.empty()) {
      const std::size_t a = queue.front();
      queue.pop_front();
      auto visit = [&](std::size_t b, std::uint8_t relation) -> bool {
        const auto want = static_cast<std::uint8_t>(color[a] ^ relation);
        if (color[b] == kUnset) {
          color[b] = want;
          parent[b] = a;
          queue.push_back(b);
          return true;
        }
        return color[b] == want;
      };
      const ChordGroup& group = d.groups[d.chords[a].group];
      for (std::size_t b : group.chords) {
        if (b == a) continue;
        if (!visit(b, group.kind == AttachmentKind::triad ? 0 : 1)) {
          return {false, std::nullopt, certificate(a, b)};
        }
      }
      for (std::size_t b = 0; b < n; ++b) {
        if (b == a || !linked(d.chords[a], d.chords[b])) continue;
        if (!visit(b, 1)) return {false, std::nullopt, certificate(a, b)};
      }
    }
  }

  PermissiblePartition witness;
  for (const auto& group : d.groups) {
    for (std::size_t c : group.chords) {
      if (d.chords[c].role == ChordRole::minus) continue;
      witness.side.emplace(group.vertex, color[c] == 0 ? Side::white : Side::black);
      break;
    }
  }
  return {true, std::move(witness), {}};
}

inline PlanarityResult is_planar(const StarGraph& g) { return is_planar(build_pipeline(g, false).expanded); }

}  // namespace stargenus
