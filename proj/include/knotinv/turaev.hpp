#ifndef KNOTINV_TURAEV_HPP
#define KNOTINV_TURAEV_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "knotinv/diagram.hpp"
#include "knotinv/error.hpp"
#include "knotinv/state_sum.hpp"
#include "knotinv/tangle.hpp"

namespace knotinv {

/// Genus of the Turaev surface of the diagram: (2 + c - s_A - s_B) / 2.
inline int turaev_genus(const Diagram& d) {
  const int twice = 2 + d.crossing_count() - s_A(d) - s_B(d);
  if (twice < 0 || twice % 2 != 0)
    throw InternalError("2 + c - s_A - s_B = " + std::to_string(twice) + " is not a nonnegative even number");
  return twice / 2;
}

/// Edges whose two ends are both over-passes or both under-passes.
inline std::vector<int> nonalternating_edges(const Diagram& d) {
  std::vector<int> out;
  for (int e = 1; e <= d.edge_count(); ++e) {
    const auto& ds = d.darts_of_edge(e);
    if (is_over_position(position_of(ds[0])) == is_over_position(position_of(ds[1]))) out.push_back(e);
  }
  return out;
}

inline bool is_alternating(const Diagram& d) { return nonalternating_edges(d).empty(); }

/// A marked point on a non-alternating edge; index 0 lies nearer the edge's
/// first dart in crossing order.
struct MarkedPoint {
  int edge = 0;
  int index = 0;
  friend bool operator==(const MarkedPoint&, const MarkedPoint&) = default;
};

struct DecompositionCurve {
  std::vector<MarkedPoint> points;  // cyclic
  std::vector<int> faces;           // face crossed between points[k] and points[k+1]
};

/// A maximal alternating region: crossings joined by alternating edges.
struct TangleRegion {
  std::vector<int> crossings;
  /// Darts of non-alternating edges at these crossings, in counterclockwise
  /// order around the region when `walkable`, otherwise in dart order.
  std::vector<int> boundary;
  std::vector<char> decorations;  // per boundary dart: '+' over, '-' under
  bool walkable = false;
  bool proper = false;
};

struct AltDecomposition {
  std::vector<int> nonalternating_edges;
  std::vector<DecompositionCurve> curves;
  std::vector<TangleRegion> tangles;
  std::vector<int> tangle_of_crossing;
};

namespace detail {

// Faces on either side of the edge leaving `dart`: the face through corner
// (i, p-1) runs along the edge away from the dart, the one through (i, p) towards it.
inline std::vector<std::pair<int, int>> face_point_sides(const Diagram& d, const FaceStructure& fs,
                                                         const std::vector<int>& point_base, int face) {
  // Returns (point id, side) in traversal order; side 0 = the face runs from dart 0 to dart 1.
  std::vector<std::pair<int, int>> out;
  for (int corner : fs.faces[face]) {
    const int i = crossing_of(corner);
    const int leave = dart_of(i, (position_of(corner) + 1) % 4);
    const int e = d.label_at(leave);
    if (point_base[e] < 0) continue;
    const bool forward = d.darts_of_edge(e)[0] == leave;
    if (forward) {
      out.emplace_back(point_base[e], 0);
      out.emplace_back(point_base[e] + 1, 0);
    } else {
      out.emplace_back(point_base[e] + 1, 1);
      out.emplace_back(point_base[e], 1);
    }
  }
  return out;
}

}  // namespace detail

/// Cuts the diagram along the curves through the marked points of its
/// non-alternating edges.
inline AltDecomposition alternating_decomposition(const Diagram& d) {
  const FaceStructure fs = validate(d);
  AltDecomposition out;
  out.nonalternating_edges = nonalternating_edges(d);
  const int c = d.crossing_count();

  std::vector<int> point_base(static_cast<std::size_t>(d.edge_count()) + 1, -1);
  std::vector<MarkedPoint> points;
  for (int e : out.nonalternating_edges) {
    point_base[e] = static_cast<int>(points.size());
    points.push_back({e, 0});
    points.push_back({e, 1});
  }

  // Each point has one side in each adjacent face; join consecutive point
  // sides in a face unless they are the two points of one edge on one side.
  const int n = static_cast<int>(points.size());
  struct Link {
    int point = -1, side = -1, face = -1;
  };
  std::vector<std::array<Link, 2>> link(static_cast<std::size_t>(n));
  for (int f = 0; f < fs.face_count(); ++f) {
    const auto seq = detail::face_point_sides(d, fs, point_base, f);
    const int m = static_cast<int>(seq.size());
    for (int k = 0; k < m; ++k) {
      const auto [p, side] = seq[k];
      const auto [q, qside] = seq[(k + 1) % m];
      if (points[p].edge == points[q].edge && side == qside) continue;
      link[p][side] = {q, qside, f};
      link[q][qside] = {p, side, f};
    }
  }
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  for (int start = 0; start < n; ++start) {
    if (used[start]) continue;
    DecompositionCurve curve;
    int p = start, side = 0;
    while (!used[p]) {
      used[p] = true;
      curve.points.push_back(points[p]);
      const Link to = link[p][1 - side];
      if (to.point < 0) throw InternalError("decomposition curve is not closed");
      curve.faces.push_back(to.face);
      side = to.side;
      p = to.point;
    }
    out.curves.push_back(std::move(curve));
  }

  UnionFind uf(static_cast<std::size_t>(std::max(c, 1)));
  for (int e = 1; e <= d.edge_count(); ++e) {
    if (point_base[e] >= 0) continue;
    const auto& ds = d.darts_of_edge(e);
    uf.unite(crossing_of(ds[0]), crossing_of(ds[1]));
  }
  out.tangle_of_crossing.assign(static_cast<std::size_t>(c), -1);
  std::map<int, int> region_of_root;
  for (int i = 0; i < c; ++i) {
    auto [it, fresh] = region_of_root.emplace(uf.find(i), static_cast<int>(out.tangles.size()));
    if (fresh) out.tangles.emplace_back();
    out.tangle_of_crossing[i] = it->second;
    out.tangles[it->second].crossings.push_back(i);
  }
  if (c == 0) out.tangles.emplace_back();
  for (auto& region : out.tangles) {
    std::vector<int> boundary;
    for (int i : region.crossings)
      for (int p = 0; p < 4; ++p)
        if (point_base[d.label_at(dart_of(i, p))] >= 0) boundary.push_back(dart_of(i, p));
    region.boundary = boundary;
    if (!boundary.empty()) {
      // Counterclockwise walk around the outside of the region.
      auto is_boundary = [&](int dart) { return point_base[d.label_at(dart)] >= 0; };
      auto next = [&](int dart) {
        for (int guard = 0; guard <= 4 * c; ++guard) {
          dart = dart_of(crossing_of(dart), (position_of(dart) + 1) % 4);
          if (is_boundary(dart)) return dart;
          dart = d.partner(dart);
        }
        throw InternalError("boundary walk did not terminate");
      };
      std::vector<int> order{boundary.front()};
      for (int dart = next(boundary.front()); dart != boundary.front() && order.size() <= boundary.size();
           dart = next(dart))
        order.push_back(dart);
      if (order.size() == boundary.size()) {
        region.boundary = order;
        region.walkable = true;
      }
    }
    for (int dart : region.boundary) region.decorations.push_back(is_over_position(position_of(dart)) ? '+' : '-');
    region.proper = region.walkable && region.boundary.size() == 4;
    for (std::size_t k = 0; region.proper && k < region.decorations.size(); ++k)
      if (region.decorations[k] == region.decorations[(k + 1) % region.decorations.size()]) region.proper = false;
  }
  return out;
}

/// Tangle cut out of a diagram; slot darts get fresh labels.
inline Tangle extract_tangle(const Diagram& d, const std::vector<int>& crossing_set, const std::array<int, 4>& slot_darts,
                             const OrientedDiagram* od = nullptr) {
  Tangle t;
  std::map<int, int> local;
  for (int k = 0; k < static_cast<int>(crossing_set.size()); ++k) local[crossing_set[k]] = k;
  t.source_crossings = crossing_set;
  for (int i : crossing_set) {
    t.crossings.push_back(d.crossing(i));
    if (od) t.incoming.push_back(od->incoming[i]);
  }
  const int fresh = d.edge_count();
  for (int s = 0; s < 4; ++s) {
    const int dart = slot_darts[s];
    t.crossings[local.at(crossing_of(dart))].ends[position_of(dart)] = fresh + 1 + s;
    t.slots[s] = fresh + 1 + s;
  }
  refresh(t);
  return t;
}

/// A diagram read as N(R_1 + ... + R_2k) with proper alternating tangles.
struct GenusOneStructure {
  int k = 0;
  std::vector<Tangle> tangles;                  // R_1 .. R_2k
  std::vector<std::array<int, 4>> slot_darts;   // ambient darts at NE, NW, SW, SE
};

struct Recognition {
  std::optional<GenusOneStructure> structure;
  std::string reason;  // why recognition failed
  bool recognized() const { return structure.has_value(); }
};

/// Recognises the ring normal form.  R_1 holds crossing 0; its NE end is the
/// first under-end in dart order, and going counterclockwise an odd tangle
/// reads NE -, NW +, SW -, SE + while an even tangle reads the opposite.
/// R_i's NE edge leads to R_{i+1}'s NW end and its SE edge to R_{i+1}'s SW end.
inline Recognition recognize_genus_one(const Diagram& d, const OrientedDiagram* od = nullptr) {
  Recognition r;
  const int g = turaev_genus(d);
  if (g != 1) {
    r.reason = "diagram Turaev genus is " + std::to_string(g);
    return r;
  }
  const AltDecomposition dec = alternating_decomposition(d);
  const int m = static_cast<int>(dec.tangles.size());
  if (m < 2 || m % 2 != 0) {
    r.reason = std::to_string(m) + " alternating tangles, expected an even number";
    return r;
  }
  if (static_cast<int>(dec.curves.size()) != m) {
    r.reason = std::to_string(dec.curves.size()) + " curves for " + std::to_string(m) + " tangles";
    return r;
  }
  for (int t = 0; t < m; ++t)
    if (!dec.tangles[t].proper) {
      r.reason = "tangle " + std::to_string(t) + " is not a proper alternating 2-tangle";
      return r;
    }

  auto ccw_index = [&](int t, int dart) {
    const auto& b = dec.tangles[t].boundary;
    return static_cast<int>(std::find(b.begin(), b.end(), dart) - b.begin());
  };
  auto slots_from_nw = [&](int t, int nw_dart) {
    const auto& b = dec.tangles[t].boundary;
    const int at = ccw_index(t, nw_dart);
    return std::array<int, 4>{b[(at + 3) % 4], b[at], b[(at + 1) % 4], b[(at + 2) % 4]};
  };

  const int first = dec.tangle_of_crossing[0];
  int ne = -1;
  for (int dart : dec.tangles[first].boundary)
    if (!is_over_position(position_of(dart)) && (ne < 0 || dart < ne)) ne = dart;
  std::array<int, 4> slots;
  {
    const auto& b = dec.tangles[first].boundary;
    const int at = ccw_index(first, ne);
    slots = {b[at], b[(at + 1) % 4], b[(at + 2) % 4], b[(at + 3) % 4]};
  }

  GenusOneStructure gs;
  std::vector<bool> seen(static_cast<std::size_t>(m), false);
  int current = first;
  for (int step = 0; step < m; ++step) {
    if (seen[current]) {
      r.reason = "tangles do not form a single ring";
      return r;
    }
    seen[current] = true;
    const char odd[4] = {'-', '+', '-', '+'};
    for (int s = 0; s < 4; ++s) {
      const char want = step % 2 == 0 ? odd[s] : (odd[s] == '+' ? '-' : '+');
      if ((is_over_position(position_of(slots[s])) ? '+' : '-') != want) {
        r.reason = "boundary decorations of tangle " + std::to_string(step + 1) + " do not match the ring pattern";
        return r;
      }
    }
    gs.slot_darts.push_back(slots);
    gs.tangles.push_back(extract_tangle(d, dec.tangles[current].crossings, slots, od));
    const int next_nw = d.partner(slots[NE]);
    const int next_sw = d.partner(slots[SE]);
    const int next = dec.tangle_of_crossing[crossing_of(next_nw)];
    if (dec.tangle_of_crossing[crossing_of(next_sw)] != next || next == current) {
      r.reason = "tangle " + std::to_string(step + 1) + " does not connect to a single neighbour";
      return r;
    }
    const auto next_slots = slots_from_nw(next, next_nw);
    if (next_slots[SW] != next_sw) {
      r.reason = "connecting strands of tangle " + std::to_string(step + 1) + " are twisted";
      return r;
    }
    current = next;
    slots = next_slots;
  }
  if (current != first || slots != gs.slot_darts.front()) {
    r.reason = "tangle ring does not close up";
    return r;
  }
  gs.k = m / 2;
  r.structure = std::move(gs);
  return r;
}

enum class OrientationType { numerator, denominator, both };

inline const char* orientation_name(OrientationType t) {
  return t == OrientationType::numerator ? "numerator" : t == OrientationType::denominator ? "denominator" : "both";
}

/// Whether every tangle's boundary directions extend over its numerator
/// closure, its denominator closure, or both.
inline OrientationType classify_orientation(const GenusOneStructure& gs, const OrientedDiagram& od) {
  bool all_n = true, all_d = true;
  for (const auto& slots : gs.slot_darts) {
    std::array<bool, 4> in{};
    for (int s = 0; s < 4; ++s) in[s] = od.is_incoming(slots[s]);
    all_n = all_n && numerator_compatible(in);
    all_d = all_d && denominator_compatible(in);
  }
  if (all_n && all_d) return OrientationType::both;
  if (all_n) return OrientationType::numerator;
  if (all_d) return OrientationType::denominator;
  throw InternalError("orientation matches neither the numerator nor the denominator closures");
}

}  // namespace knotinv

#endif  // KNOTINV_TURAEV_HPP
