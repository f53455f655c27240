#ifndef KNOTINV_TANGLE_HPP
#define KNOTINV_TANGLE_HPP

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "knotinv/diagram.hpp"
#include "knotinv/error.hpp"

namespace knotinv {

/// Boundary slots of a 2-tangle, in counterclockwise order.
enum Slot : int { NE = 0, NW = 1, SW = 2, SE = 3 };

inline const char* slot_name(int s) {
  static constexpr const char* names[] = {"NE", "NW", "SW", "SE"};
  return names[s];
}

/// A 2-tangle diagram.  Crossings use the PD convention; each slot label
/// appears once among the crossings (or twice among the slots for a strand
/// that meets no crossing) and every other label appears twice.
struct Tangle {
  std::vector<Crossing> crossings;
  std::array<int, 4> slots{};
  /// Per-crossing incoming flags; empty when the tangle carries no orientation.
  std::vector<std::array<bool, 4>> incoming;
  /// '+' when the slot strand first meets an over-crossing, '-' for under, '0' without crossings.
  std::array<char, 4> decorations{'0', '0', '0', '0'};
  bool proper = false;
  /// Crossing indices in the diagram the tangle was cut from.
  std::vector<int> source_crossings;

  int crossing_count() const { return static_cast<int>(crossings.size()); }
  bool oriented() const { return !crossings.empty() && incoming.size() == crossings.size(); }
};

namespace detail {

inline std::map<int, std::vector<int>> tangle_darts(const Tangle& t) {
  std::map<int, std::vector<int>> out;
  for (int i = 0; i < t.crossing_count(); ++i)
    for (int p = 0; p < 4; ++p) out[t.crossings[i].ends[p]].push_back(dart_of(i, p));
  return out;
}

inline int max_label(const Tangle& t) {
  int m = 0;
  for (const auto& x : t.crossings)
    for (int l : x.ends) m = std::max(m, l);
  for (int l : t.slots) m = std::max(m, l);
  return m;
}

inline void rename(Tangle& t, int from, int to) {
  for (auto& x : t.crossings)
    for (int& l : x.ends)
      if (l == from) l = to;
  for (int& l : t.slots)
    if (l == from) l = to;
}

}  // namespace detail

/// Recomputes decorations and the proper flag.  Proper means: crossings
/// joined by internal edges, four distinct slot ends on crossings, the
/// boundary walk visits the slots in counterclockwise order, and the
/// decorations alternate.
inline void refresh(Tangle& t) {
  const auto darts = detail::tangle_darts(t);
  std::array<int, 4> slot_dart{-1, -1, -1, -1};
  for (int s = 0; s < 4; ++s) {
    auto it = darts.find(t.slots[s]);
    if (it != darts.end() && it->second.size() == 1) slot_dart[s] = it->second[0];
    t.decorations[s] = slot_dart[s] < 0 ? '0' : is_over_position(position_of(slot_dart[s])) ? '+' : '-';
  }
  t.proper = false;
  if (t.crossings.empty() || std::count(slot_dart.begin(), slot_dart.end(), -1) > 0) return;
  UnionFind uf(t.crossings.size());
  int pieces = t.crossing_count();
  for (const auto& [label, ds] : darts) {
    if (ds.size() > 2) return;
    if (ds.size() == 2 && uf.unite(crossing_of(ds[0]), crossing_of(ds[1]))) --pieces;
  }
  if (pieces != 1) return;
  for (int s = 0; s < 4; ++s) {
    // Walk counterclockwise around the outside of the tangle to the next slot.
    int dart = slot_dart[s];
    for (int guard = 0; guard <= 4 * t.crossing_count(); ++guard) {
      dart = dart_of(crossing_of(dart), (position_of(dart) + 1) % 4);
      const auto& ds = darts.at(t.crossings[crossing_of(dart)].ends[position_of(dart)]);
      if (ds.size() == 1) break;
      dart = ds[0] == dart ? ds[1] : ds[0];
    }
    if (dart != slot_dart[(s + 1) % 4]) return;
    if (t.decorations[s] == t.decorations[(s + 1) % 4]) return;
  }
  t.proper = true;
}

/// Whether each slot strand points into the tangle; needs an oriented tangle.
inline std::array<bool, 4> slot_incoming(const Tangle& t) {
  if (!t.oriented()) throw PreconditionError("tangle carries no orientation");
  const auto darts = detail::tangle_darts(t);
  std::array<bool, 4> out{};
  for (int s = 0; s < 4; ++s) {
    auto it = darts.find(t.slots[s]);
    if (it == darts.end() || it->second.size() != 1) throw PreconditionError("slot strand meets no crossing");
    const int d = it->second[0];
    out[s] = t.incoming[crossing_of(d)][position_of(d)];
  }
  return out;
}

enum class Closure { numerator, denominator };

inline const char* closure_name(Closure c) { return c == Closure::numerator ? "numerator" : "denominator"; }

/// Numerator joins NE-NW and SW-SE; denominator joins NE-SE and NW-SW.
inline Diagram closure(const Tangle& t, Closure which) {
  const int top = detail::max_label(t);
  UnionFind uf(static_cast<std::size_t>(top) + 1);
  if (which == Closure::numerator) {
    uf.unite(t.slots[NE], t.slots[NW]);
    uf.unite(t.slots[SW], t.slots[SE]);
  } else {
    uf.unite(t.slots[NE], t.slots[SE]);
    uf.unite(t.slots[NW], t.slots[SW]);
  }
  std::vector<int> uses(static_cast<std::size_t>(top) + 1, 0);
  for (const auto& x : t.crossings)
    for (int l : x.ends) ++uses[uf.find(l)];
  int loops = 0;
  std::vector<bool> counted(static_cast<std::size_t>(top) + 1, false);
  for (int l : t.slots) {
    const int r = uf.find(l);
    if (uses[r] == 0 && !counted[r]) {
      counted[r] = true;
      ++loops;
    }
  }
  const std::string name = closure_name(which);
  if (t.crossings.empty()) {
    if (loops != 1) throw ValidationError(name + " closure is a split diagram of " + std::to_string(loops) + " circles");
    return Diagram::unknot();
  }
  if (loops > 0) throw ValidationError(name + " closure is split: it has a circle without crossings");
  std::vector<int> fresh(static_cast<std::size_t>(top) + 1, 0);
  int next = 0;
  std::vector<Crossing> xs = t.crossings;
  for (auto& x : xs)
    for (int& l : x.ends) {
      int& f = fresh[uf.find(l)];
      if (f == 0) f = ++next;
      l = f;
    }
  Diagram d;
  try {
    d = Diagram(std::move(xs));
  } catch (const ValidationError& e) {
    throw ValidationError(name + " closure is not a diagram: " + e.what());
  }
  validate(d);
  return d;
}

inline std::pair<Diagram, Diagram> closures(const Tangle& t) {
  return {closure(t, Closure::numerator), closure(t, Closure::denominator)};
}

/// Closure carrying the tangle's orientation; throws PreconditionError when
/// the closing arcs would join two heads or two tails.
inline OrientedDiagram oriented_closure(const Tangle& t, Closure which) {
  if (!t.oriented()) throw PreconditionError("tangle carries no orientation");
  const auto in = slot_incoming(t);
  const bool ok = which == Closure::numerator ? (in[NE] != in[NW] && in[SW] != in[SE])
                                              : (in[NE] != in[SE] && in[NW] != in[SW]);
  if (!ok)
    throw PreconditionError(std::string("tangle orientation does not extend over the ") + closure_name(which) + " closure");
  return orient_with(closure(t, which), t.incoming);
}

/// Closure compatibility of a tangle orientation.
inline bool numerator_compatible(const std::array<bool, 4>& in) { return in[NE] != in[NW] && in[SW] != in[SE]; }
inline bool denominator_compatible(const std::array<bool, 4>& in) { return in[NE] != in[SE] && in[NW] != in[SW]; }

// Builders.

/// The strand drawn from SW to NE over (slash) or under (backslash) the other.
enum class Twist { slash_over, backslash_over };

inline Tangle crossing_tangle(Twist type) {
  Tangle t;
  t.slots = {1, 2, 3, 4};
  // Ends sit at NE 45, NW 135, SW 225, SE 315 degrees.
  if (type == Twist::slash_over)
    t.crossings = {Crossing{{2, 3, 4, 1}}};  // under NW-SE
  else
    t.crossings = {Crossing{{3, 4, 1, 2}}};  // under SW-NE
  refresh(t);
  return t;
}

/// Crossingless tangle with arcs NE-NW and SW-SE.
inline Tangle zero_tangle() {
  Tangle t;
  t.slots = {1, 1, 2, 2};
  return t;
}

/// Crossingless tangle with arcs NE-SE and NW-SW.
inline Tangle infinity_tangle() {
  Tangle t;
  t.slots = {1, 2, 2, 1};
  return t;
}

namespace detail {

inline Tangle glue(const Tangle& a, Tangle b, std::array<std::pair<int, int>, 2> joins, std::array<int, 4> slot_from,
                   std::array<bool, 4> slot_in_b) {
  const int offset = max_label(a);
  for (auto& x : b.crossings)
    for (int& l : x.ends) l += offset;
  for (int& l : b.slots) l += offset;
  Tangle out;
  out.crossings = a.crossings;
  out.crossings.insert(out.crossings.end(), b.crossings.begin(), b.crossings.end());
  for (int s = 0; s < 4; ++s) out.slots[s] = slot_in_b[s] ? b.slots[slot_from[s]] : a.slots[slot_from[s]];
  for (const auto& [sa, sb] : joins) rename(out, b.slots[sb], a.slots[sa]);
  // A join can route a strand back to the boundary; keep labels compact.
  std::map<int, int> fresh;
  auto relabel = [&](int& l) { l = fresh.emplace(l, static_cast<int>(fresh.size()) + 1).first->second; };
  for (auto& x : out.crossings)
    for (int& l : x.ends) relabel(l);
  for (int& l : out.slots) relabel(l);
  refresh(out);
  return out;
}

}  // namespace detail

/// Horizontal sum: a's east side glued to b's west side.
inline Tangle add_east(const Tangle& a, const Tangle& b) {
  return detail::glue(a, b, {{{NE, NW}, {SE, SW}}}, {NE, NW, SW, SE}, {true, false, false, true});
}

/// Vertical sum: a's south side glued to b's north side.
inline Tangle add_south(const Tangle& a, const Tangle& b) {
  return detail::glue(a, b, {{{SW, NW}, {SE, NE}}}, {NE, NW, SW, SE}, {false, false, true, true});
}

/// A vertical column of |n| crossings (two strands twisted about a vertical axis).
inline Tangle vertical_twist(int n) {
  if (n == 0) return infinity_tangle();
  const Tangle one = crossing_tangle(n > 0 ? Twist::slash_over : Twist::backslash_over);
  Tangle t = one;
  for (int k = 1; k < std::abs(n); ++k) t = add_south(t, one);
  return t;
}

/// A horizontal row of |n| crossings.
inline Tangle horizontal_twist(int n) {
  if (n == 0) return zero_tangle();
  const Tangle one = crossing_tangle(n > 0 ? Twist::slash_over : Twist::backslash_over);
  Tangle t = one;
  for (int k = 1; k < std::abs(n); ++k) t = add_east(t, one);
  return t;
}

inline Tangle horizontal_sum(const std::vector<Tangle>& parts) {
  if (parts.empty()) throw PreconditionError("empty tangle sum");
  Tangle t = parts.front();
  for (std::size_t k = 1; k < parts.size(); ++k) t = add_east(t, parts[k]);
  return t;
}

/// Pretzel diagram: numerator closure of the sum of vertical twist columns.
inline Diagram pretzel(const std::vector<int>& twists) {
  std::vector<Tangle> cols;
  for (int n : twists) cols.push_back(vertical_twist(n));
  return closure(horizontal_sum(cols), Closure::numerator);
}

}  // namespace knotinv

#endif  // KNOTINV_TANGLE_HPP
