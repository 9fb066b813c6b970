#pragma once
//
// Chord diagrams on the circuit circle.
//
// Circle points are circuit visits, numbered by position. A 4-vertex
// contributes a chord between its two visits, a rotating 6-vertex a triad on
// its three visits, and a splitting 6-vertex a double chord whose principal
// point is the visit passing between opposite half-edges.
//
// Expansion splits one point of every triad and the principal point of every
// double chord into an adjacent pair (p-, p+), giving an ordinary chord
// diagram whose endpoints are renumbered by position.
//
// Each attachment also records `white_class`: the angle class at its vertex
// that is white in the atom where the attachment's chords (for a double
// chord, the chord at p+) lie on the white side of the circle. The chords of
// a rotating vertex lie in the region holding the angles the circuit does not
// turn through; the p+ chord of a splitting vertex lies between the principal
// strand and the next visit's strand.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "stargenus/circuit.hpp"
#include "stargenus/errors.hpp"
#include "stargenus/gf2.hpp"
#include "stargenus/graph.hpp"

namespace stargenus {

enum class TriadKind { flat, crossed };

struct ChordAttachment {
  VertexId vertex = 0;
  std::size_t p = 0;
  std::size_t q = 0;
  int white_class = 0;

  friend bool operator==(const ChordAttachment&, const ChordAttachment&) = default;
};

struct TriadAttachment {
  VertexId vertex = 0;
  std::size_t p = 0;
  std::size_t q = 0;
  std::size_t r = 0;
  TriadKind kind = TriadKind::flat;
  int white_class = 0;

  friend bool operator==(const TriadAttachment&, const TriadAttachment&) = default;
};

/// q and r follow the principal point in that order round the circle.
struct DoubleChordAttachment {
  VertexId vertex = 0;
  std::size_t principal = 0;
  std::size_t q = 0;
  std::size_t r = 0;
  int white_class = 0;

  friend bool operator==(const DoubleChordAttachment&, const DoubleChordAttachment&) = default;
};

using Attachment = std::variant<ChordAttachment, TriadAttachment, DoubleChordAttachment>;

struct StarChordDiagram {
  std::size_t circle_size = 0;
  /// Ordered by smallest circle point.
  std::vector<Attachment> attachments;

  friend bool operator==(const StarChordDiagram&, const StarChordDiagram&) = default;
};

inline VertexId attachment_vertex(const Attachment& a) {
  return std::visit([](const auto& x) { return x.vertex; }, a);
}

namespace detail {

inline std::size_t first_point(const Attachment& a) {
  return std::visit(
      [](const auto& x) -> std::size_t {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, DoubleChordAttachment>) {
          return std::min({x.principal, x.q, x.r});
        } else {
          return x.p;
        }
      },
      a);
}

inline int turned_class(VertexId v, int degree, const Visit& visit) {
  return angle_between(v, degree, visit.arrive, visit.depart).angle_class();
}

}  // namespace detail

inline StarChordDiagram build_star_chord_diagram(const StarGraph& g, const EulerCircuit& c,
                                                 const std::map<VertexId, VertexClass>& classes) {
  StarChordDiagram d;
  d.circle_size = c.visits.size();
  const std::size_t n = d.circle_size;
  for (const auto& [v, pos] : c.positions()) {
    const int degree = g.degree(v);
    const VertexClass& cls = classes.at(v);
    switch (cls.kind) {
      case VertexKind::rotating4: {
        if (pos.size() != 2) throw BrokenInvariant("4-vertex must have two visits");
        const int white = 1 - detail::turned_class(v, degree, c.visits[pos[0]]);
        d.attachments.emplace_back(ChordAttachment{v, pos[0], pos[1], white});
        break;
      }
      case VertexKind::rotating6_flat:
      case VertexKind::rotating6_crossed: {
        if (pos.size() != 3) throw BrokenInvariant("6-vertex must have three visits");
        const int white = 1 - detail::turned_class(v, degree, c.visits[pos[0]]);
        const TriadKind kind = cls.kind == VertexKind::rotating6_flat ? TriadKind::flat : TriadKind::crossed;
        d.attachments.emplace_back(TriadAttachment{v, pos[0], pos[1], pos[2], kind, white});
        break;
      }
      case VertexKind::splitting6: {
        if (pos.size() != 3) throw BrokenInvariant("6-vertex must have three visits");
        const std::size_t p = cls.principal;
        std::vector<std::size_t> others;
        for (std::size_t x : pos) {
          if (x != p) others.push_back(x);
        }
        std::sort(others.begin(), others.end(),
                  [&](std::size_t a, std::size_t b) { return (a + n - p) % n < (b + n - p) % n; });
        const int white = 1 - detail::turned_class(v, degree, c.visits[others[0]]);
        d.attachments.emplace_back(DoubleChordAttachment{v, p, others[0], others[1], white});
        break;
      }
    }
  }
  std::sort(d.attachments.begin(), d.attachments.end(),
            [](const Attachment& a, const Attachment& b) { return detail::first_point(a) < detail::first_point(b); });
  return d;
}

/// `circle: <k>` then `chord p q`, `triad p q r flat|crossed` or `dchord p* q r` lines.
inline std::string format_star_chord_diagram(const StarChordDiagram& d) {
  std::ostringstream out;
  out << "circle: " << d.circle_size << '\n';
  for (const auto& a : d.attachments) {
    if (const auto* c = std::get_if<ChordAttachment>(&a)) {
      out << "chord " << c->p << ' ' << c->q << '\n';
    } else if (const auto* t = std::get_if<TriadAttachment>(&a)) {
      out << "triad " << t->p << ' ' << t->q << ' ' << t->r << ' '
          << (t->kind == TriadKind::flat ? "flat" : "crossed") << '\n';
    } else if (const auto* dc = std::get_if<DoubleChordAttachment>(&a)) {
      out << "dchord " << dc->principal << "* " << dc->q << ' ' << dc->r << '\n';
    }
  }
  return out.str();
}

enum class AttachmentKind { chord, triad, double_chord };

/// Provenance of an expanded chord. For a double chord, `plus` is the chord at p+.
enum class ChordRole { single, triad, plus, minus };

struct Chord {
  std::size_t a = 0;  // a < b
  std::size_t b = 0;
  std::size_t group = 0;
  ChordRole role = ChordRole::single;

  friend bool operator==(const Chord&, const Chord&) = default;
};

/// The chords coming from one attachment (one vertex of the graph).
struct ChordGroup {
  VertexId vertex = 0;
  AttachmentKind kind = AttachmentKind::chord;
  std::vector<std::size_t> chords;
  int white_class = 0;

  friend bool operator==(const ChordGroup&, const ChordGroup&) = default;
};

struct ChordDiagram {
  /// Endpoints are 0 .. endpoints - 1 in circle order.
  std::size_t endpoints = 0;
  /// Ascending smallest endpoint; this order indexes the intersection matrix.
  std::vector<Chord> chords;
  /// Ascending vertex id.
  std::vector<ChordGroup> groups;

  friend bool operator==(const ChordDiagram&, const ChordDiagram&) = default;
};

namespace detail {

inline void finish_diagram(ChordDiagram& d, std::vector<ChordGroup> groups) {
  for (auto& c : d.chords) {
    if (c.a > c.b) std::swap(c.a, c.b);
  }
  std::vector<std::size_t> order(d.chords.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return d.chords[x].a < d.chords[y].a; });
  std::vector<Chord> sorted;
  for (std::size_t i : order) sorted.push_back(d.chords[i]);
  d.chords = std::move(sorted);

  std::vector<std::size_t> group_order(groups.size());
  for (std::size_t i = 0; i < group_order.size(); ++i) group_order[i] = i;
  std::sort(group_order.begin(), group_order.end(),
            [&](std::size_t x, std::size_t y) { return groups[x].vertex < groups[y].vertex; });
  std::vector<std::size_t> rank(groups.size());
  d.groups.clear();
  for (std::size_t i = 0; i < group_order.size(); ++i) {
    rank[group_order[i]] = i;
    d.groups.push_back(groups[group_order[i]]);
    d.groups.back().chords.clear();
  }
  for (std::size_t i = 0; i < d.chords.size(); ++i) {
    d.chords[i].group = rank[d.chords[i].group];
    d.groups[d.chords[i].group].chords.push_back(i);
  }
}

}  // namespace detail

/// Plain diagram on 2n endpoints; chord i forms its own group with vertex id i.
inline ChordDiagram chord_diagram_from_pairs(std::size_t endpoints,
                                             const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  std::vector<int> used(endpoints, 0);
  for (const auto& [x, y] : pairs) {
    if (x >= endpoints || y >= endpoints || x == y) throw std::invalid_argument("bad chord endpoint");
    ++used[x];
    ++used[y];
  }
  for (int u : used) {
    if (u != 1) throw std::invalid_argument("every endpoint must lie on exactly one chord");
  }
  ChordDiagram d;
  d.endpoints = endpoints;
  std::vector<ChordGroup> groups;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    d.chords.push_back({pairs[i].first, pairs[i].second, i, ChordRole::single});
    groups.push_back({static_cast<VertexId>(i), AttachmentKind::chord, {}, 0});
  }
  detail::finish_diagram(d, std::move(groups));
  return d;
}

/// Flat triad (p,q,r) -> (p+,q), (p-,r); crossed -> (p-,q), (p+,r) where p is
/// the triad's first point. Double chord -> (p+,q), (p-,r).
inline ChordDiagram expand(const StarChordDiagram& d) {
  std::vector<bool> split(d.circle_size, false);
  for (const auto& a : d.attachments) {
    if (const auto* t = std::get_if<TriadAttachment>(&a)) split[t->p] = true;
    if (const auto* dc = std::get_if<DoubleChordAttachment>(&a)) split[dc->principal] = true;
  }
  // position of the point (or of p-, with p+ right after it)
  std::vector<std::size_t> pos(d.circle_size);
  std::size_t next = 0;
  for (std::size_t p = 0; p < d.circle_size; ++p) {
    pos[p] = next;
    next += split[p] ? 2 : 1;
  }
  auto minus = [&](std::size_t p) { return pos[p]; };
  auto plus = [&](std::size_t p) { return pos[p] + 1; };

  ChordDiagram out;
  out.endpoints = next;
  std::vector<ChordGroup> groups;
  for (const auto& a : d.attachments) {
    const std::size_t g = groups.size();
    if (const auto* c = std::get_if<ChordAttachment>(&a)) {
      groups.push_back({c->vertex, AttachmentKind::chord, {}, c->white_class});
      out.chords.push_back({pos[c->p], pos[c->q], g, ChordRole::single});
    } else if (const auto* t = std::get_if<TriadAttachment>(&a)) {
      groups.push_back({t->vertex, AttachmentKind::triad, {}, t->white_class});
      if (t->kind == TriadKind::flat) {
        out.chords.push_back({plus(t->p), pos[t->q], g, ChordRole::triad});
        out.chords.push_back({minus(t->p), pos[t->r], g, ChordRole::triad});
      } else {
        out.chords.push_back({minus(t->p), pos[t->q], g, ChordRole::triad});
        out.chords.push_back({plus(t->p), pos[t->r], g, ChordRole::triad});
      }
    } else if (const auto* dc = std::get_if<DoubleChordAttachment>(&a)) {
      groups.push_back({dc->vertex, AttachmentKind::double_chord, {}, dc->white_class});
      out.chords.push_back({plus(dc->principal), pos[dc->q], g, ChordRole::plus});
      out.chords.push_back({minus(dc->principal), pos[dc->r], g, ChordRole::minus});
    }
  }
  detail::finish_diagram(out, std::move(groups));
  return out;
}

/// True iff the endpoints of the two chords interleave round the circle.
inline bool linked(const Chord& x, const Chord& y) {
  const bool a_inside = x.a < y.a && y.a < x.b;
  const bool b_inside = x.a < y.b && y.b < x.b;
  return a_inside != b_inside;
}

inline bool linked(const ChordDiagram& d, std::size_t i, std::size_t j) {
  return linked(d.chords.at(i), d.chords.at(j));
}

inline BitMatrix intersection_matrix(const ChordDiagram& d) {
  BitMatrix m(d.chords.size());
  for (std::size_t i = 0; i < d.chords.size(); ++i) {
    for (std::size_t j = i + 1; j < d.chords.size(); ++j) {
      if (linked(d.chords[i], d.chords[j])) {
        m.set(i, j, true);
        m.set(j, i, true);
      }
    }
  }
  return m;
}

/// Number of circles produced by surgery along the chords listed in `subset`
/// (indices into d.chords); endpoints of the other chords are ignored.
/// Each endpoint x has sides x- and x+; arcs join x+ to the next endpoint's
/// side "-", and a chord (x, y) joins x+ to y- and x- to y+.
inline std::size_t surgery(const ChordDiagram& d, const std::vector<std::size_t>& subset) {
  std::vector<std::size_t> points;
  for (std::size_t i : subset) {
    points.push_back(d.chords.at(i).a);
    points.push_back(d.chords.at(i).b);
  }
  if (points.empty()) return 1;
  std::sort(points.begin(), points.end());
  std::map<std::size_t, std::size_t> rank;
  for (std::size_t k = 0; k < points.size(); ++k) rank[points[k]] = k;

  const std::size_t n = points.size();
  auto minus = [](std::size_t k) { return 2 * k; };
  auto plus = [](std::size_t k) { return 2 * k + 1; };
  std::vector<std::size_t> arc(2 * n);
  std::vector<std::size_t> band(2 * n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t next = (k + 1) % n;
    arc[plus(k)] = minus(next);
    arc[minus(next)] = plus(k);
  }
  for (std::size_t i : subset) {
    const std::size_t x = rank.at(d.chords[i].a);
    const std::size_t y = rank.at(d.chords[i].b);
    band[plus(x)] = minus(y);
    band[minus(y)] = plus(x);
    band[minus(x)] = plus(y);
    band[plus(y)] = minus(x);
  }
  std::vector<bool> seen(2 * n, false);
  std::size_t circles = 0;
  for (std::size_t start = 0; start < 2 * n; ++start) {
    if (seen[start]) continue;
    ++circles;
    std::size_t node = start;
    do {
      seen[node] = true;
      const std::size_t across = band[node];
      seen[across] = true;
      node = arc[across];
    } while (node != start);
  }
  return circles;
}

inline std::size_t surgery(const ChordDiagram& d) {
  std::vector<std::size_t> all(d.chords.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return surgery(d, all);
}

}  // namespace stargenus
