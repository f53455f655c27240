#ifndef KNOTINV_DIAGRAM_HPP
#define KNOTINV_DIAGRAM_HPP

#include <algorithm>
#include <array>
#include <cctype>
#include <cstddef>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "knotinv/error.hpp"

namespace knotinv {

// A dart is one end of an edge at a crossing: dart = 4 * crossing + position.
// A corner is the region between positions q and q+1 (mod 4) of a crossing and
// uses the same index scheme.
inline constexpr int dart_of(int crossing, int position) { return 4 * crossing + position; }
inline constexpr int crossing_of(int dart) { return dart / 4; }
inline constexpr int position_of(int dart) { return dart % 4; }
inline constexpr bool is_over_position(int position) { return position % 2 == 1; }

/// Disjoint-set forest over 0..n-1.
class UnionFind {
 public:
  explicit UnionFind(std::size_t n = 0) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  void reset(std::size_t n) {
    parent_.resize(n);
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  /// Returns true when the two sets were distinct.
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[std::max(a, b)] = std::min(a, b);
    return true;
  }

 private:
  std::vector<int> parent_;
};

/// One crossing: edge labels counterclockwise, starting at an under-strand
/// end.  Positions 0 and 2 are under, 1 and 3 over.
struct Crossing {
  std::array<int, 4> ends{};
  friend bool operator==(const Crossing&, const Crossing&) = default;
};

/// A PD-coded link diagram.  Immutable after construction.
class Diagram {
 public:
  Diagram() : free_loops_(1) {}

  /// Builds a diagram, checking that every label in 1..2c appears exactly twice.
  explicit Diagram(std::vector<Crossing> crossings, int free_loops = 0)
      : crossings_(std::move(crossings)), free_loops_(free_loops) {
    if (free_loops_ < 0) throw ValidationError("negative free loop count");
    if (crossings_.empty() && free_loops_ == 0) throw ValidationError("empty diagram");
    const int edges = edge_count();
    edge_darts_.assign(static_cast<std::size_t>(edges) + 1, {-1, -1});
    for (int i = 0; i < crossing_count(); ++i) {
      for (int p = 0; p < 4; ++p) {
        const int label = crossings_[i].ends[p];
        if (label < 1 || label > edges)
          throw ValidationError("edge label " + std::to_string(label) + " out of range 1.." +
                                std::to_string(edges));
        auto& slot = edge_darts_[label];
        if (slot[0] < 0) {
          slot[0] = dart_of(i, p);
        } else if (slot[1] < 0) {
          slot[1] = dart_of(i, p);
        } else {
          throw ValidationError("edge label " + std::to_string(label) + " used more than twice");
        }
      }
    }
    for (int e = 1; e <= edges; ++e)
      if (edge_darts_[e][1] < 0)
        throw ValidationError("edge label " + std::to_string(e) + " does not appear twice");
  }

  /// The crossingless unknot.
  static Diagram unknot() { return Diagram(); }

  const std::vector<Crossing>& crossings() const { return crossings_; }
  const Crossing& crossing(int i) const { return crossings_[i]; }
  int crossing_count() const { return static_cast<int>(crossings_.size()); }
  int edge_count() const { return 2 * crossing_count(); }
  int free_loops() const { return free_loops_; }
  int dart_count() const { return 4 * crossing_count(); }

  int label_at(int dart) const { return crossings_[crossing_of(dart)].ends[position_of(dart)]; }
  /// Both darts of an edge, in scan order.
  const std::array<int, 2>& darts_of_edge(int label) const { return edge_darts_[label]; }
  /// The dart at the far end of the edge leaving `dart`.
  int partner(int dart) const {
    const auto& d = edge_darts_[label_at(dart)];
    return d[0] == dart ? d[1] : d[0];
  }

  friend bool operator==(const Diagram& a, const Diagram& b) {
    return a.crossings_ == b.crossings_ && a.free_loops_ == b.free_loops_;
  }

 private:
  std::vector<Crossing> crossings_;
  int free_loops_ = 0;
  std::vector<std::array<int, 2>> edge_darts_;
};

namespace detail {

class PdScanner {
 public:
  explicit PdScanner(std::string_view text) : s_(text) {}

  void run(std::vector<Crossing>& out, int& loops) {
    skip_separators();
    while (pos_ < s_.size()) {
      token(out, loops);
      skip_separators();
    }
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("PD parse error at offset " + std::to_string(pos_) + ": " + what);
  }
  void skip_separators() {
    while (pos_ < s_.size() && (std::isspace(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == ','))
      ++pos_;
  }
  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  static bool is_open(char c) { return c == '[' || c == '(' || c == '{'; }
  static char closer(char c) { return c == '[' ? ']' : c == '(' ? ')' : '}'; }

  void token(std::vector<Crossing>& out, int& loops) {
    const char c = s_[pos_];
    if (c == 'X' || c == 'x') {
      ++pos_;
      skip_space();
      if (pos_ >= s_.size() || !is_open(s_[pos_])) fail("expected '[' or '(' after X");
      out.push_back(tuple());
    } else if (c == 'U' || c == 'u') {
      ++pos_;
      skip_space();
      if (pos_ < s_.size() && is_open(s_[pos_])) {
        const char close = closer(s_[pos_++]);
        skip_space();
        if (pos_ >= s_.size() || s_[pos_] != close) fail("U takes no arguments");
        ++pos_;
      }
      ++loops;
    } else if (c == 'P' && s_.substr(pos_, 2) == "PD") {
      pos_ += 2;
      skip_space();
      if (pos_ >= s_.size() || !is_open(s_[pos_])) fail("expected '[' after PD");
      list(out, loops);
    } else if (is_open(c)) {
      // Either a bare tuple or a list of tokens.
      std::size_t look = pos_ + 1;
      while (look < s_.size() && std::isspace(static_cast<unsigned char>(s_[look]))) ++look;
      if (look < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[look])) || s_[look] == '-'))
        out.push_back(tuple());
      else
        list(out, loops);
    } else {
      fail(std::string("unexpected character '") + c + "'");
    }
  }

  void list(std::vector<Crossing>& out, int& loops) {
    const char close = closer(s_[pos_++]);
    skip_separators();
    while (pos_ < s_.size() && s_[pos_] != close) {
      token(out, loops);
      skip_separators();
    }
    if (pos_ >= s_.size()) fail("unterminated list");
    ++pos_;
  }

  Crossing tuple() {
    const char close = closer(s_[pos_++]);
    std::vector<long> values;
    skip_space();
    while (true) {
      skip_space();
      if (pos_ >= s_.size()) fail("unterminated crossing");
      if (s_[pos_] == close) {
        ++pos_;
        break;
      }
      std::size_t start = pos_;
      if (s_[pos_] == '-' || s_[pos_] == '+') ++pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_ || (pos_ - start == 1 && !std::isdigit(static_cast<unsigned char>(s_[start]))))
        fail("expected an edge label");
      values.push_back(std::stol(std::string(s_.substr(start, pos_ - start))));
      skip_space();
      if (pos_ < s_.size() && s_[pos_] == ',') ++pos_;
    }
    if (values.size() != 4)
      fail("crossing has " + std::to_string(values.size()) + " labels, expected 4");
    Crossing x;
    for (int i = 0; i < 4; ++i) x.ends[i] = static_cast<int>(values[i]);
    return x;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses PD text: `X[a,b,c,d]` or `X(a,b,c,d)` tokens, bare tuples, nested
/// lists such as `PD[X[..], ..]` or `[[..],[..]]`, and `U` free loops.
/// Whitespace-only text is the crossingless unknot.
inline Diagram parse_pd(std::string_view text) {
  std::vector<Crossing> crossings;
  int loops = 0;
  detail::PdScanner(text).run(crossings, loops);
  if (crossings.empty() && loops == 0) return Diagram::unknot();
  const int edges = 2 * static_cast<int>(crossings.size());
  std::vector<int> seen(static_cast<std::size_t>(edges) + 1, 0);
  for (const auto& x : crossings) {
    for (int label : x.ends) {
      if (label < 1 || label > edges)
        throw ParseError("edge label " + std::to_string(label) + " out of range 1.." + std::to_string(edges));
      if (++seen[label] > 2) throw ParseError("edge label " + std::to_string(label) + " appears more than twice");
    }
  }
  for (int e = 1; e <= edges; ++e)
    if (seen[e] != 2) throw ParseError("edge label " + std::to_string(e) + " appears " + std::to_string(seen[e]) + " time(s)");
  return Diagram(std::move(crossings), loops);
}

/// Canonical text: `X[a,b,c,d]` tokens in crossing order, then one `U` per free loop.
inline std::string to_pd_string(const Diagram& d) {
  std::string out;
  for (const auto& x : d.crossings()) {
    if (!out.empty()) out += ' ';
    out += "X[" + std::to_string(x.ends[0]) + ',' + std::to_string(x.ends[1]) + ',' +
           std::to_string(x.ends[2]) + ',' + std::to_string(x.ends[3]) + ']';
  }
  if (d.crossing_count() > 0 || d.free_loops() != 1) {
    for (int i = 0; i < d.free_loops(); ++i) {
      if (!out.empty()) out += ' ';
      out += 'U';
    }
  }
  return out;
}

/// Faces of a validated diagram.  Each face is the cyclic list of corners it
/// touches; corner 4i+q lies between positions q and q+1 of crossing i.
struct FaceStructure {
  std::vector<std::vector<int>> faces;
  std::vector<int> face_of_corner;
  std::vector<bool> shaded;

  int face_count() const { return static_cast<int>(faces.size()); }
};

namespace detail {

// Face of corner (i, q) continues through dart q+1 to the far crossing.
inline int next_corner(const Diagram& d, int corner) {
  const int i = crossing_of(corner);
  const int leave = dart_of(i, (position_of(corner) + 1) % 4);
  return d.partner(leave);
}

}  // namespace detail

/// Traces faces from the rotation system and 2-colours them.  Throws
/// ValidationError unless the diagram is connected with Euler characteristic 2.
inline FaceStructure validate(const Diagram& d) {
  FaceStructure fs;
  const int c = d.crossing_count();
  if (c == 0) {
    if (d.free_loops() != 1) throw ValidationError("split diagram: " + std::to_string(d.free_loops()) + " disjoint circles");
    fs.faces = {{}, {}};
    fs.shaded = {false, true};
    return fs;
  }
  if (d.free_loops() > 0) throw ValidationError("split diagram: free loop beside crossings");

  UnionFind uf(static_cast<std::size_t>(c));
  int pieces = c;
  for (int e = 1; e <= d.edge_count(); ++e) {
    const auto& ds = d.darts_of_edge(e);
    if (uf.unite(crossing_of(ds[0]), crossing_of(ds[1]))) --pieces;
  }
  if (pieces != 1) throw ValidationError("split diagram: " + std::to_string(pieces) + " connected pieces");

  fs.face_of_corner.assign(static_cast<std::size_t>(4 * c), -1);
  for (int start = 0; start < 4 * c; ++start) {
    if (fs.face_of_corner[start] >= 0) continue;
    const int id = fs.face_count();
    fs.faces.emplace_back();
    int corner = start;
    do {
      fs.face_of_corner[corner] = id;
      fs.faces.back().push_back(corner);
      corner = detail::next_corner(d, corner);
    } while (corner != start);
  }
  const int chi = c - d.edge_count() + fs.face_count();
  if (chi != 2)
    throw ValidationError("not planar: Euler characteristic " + std::to_string(chi) + " (expected 2)");

  // Corners q and q+1 of a crossing sit on opposite sides of an edge.
  std::vector<int> colour(fs.faces.size(), -1);
  std::vector<int> stack{0};
  colour[0] = 0;
  std::vector<std::vector<int>> neighbours(fs.faces.size());
  for (int i = 0; i < c; ++i)
    for (int q = 0; q < 4; ++q) {
      const int f = fs.face_of_corner[dart_of(i, q)];
      const int g = fs.face_of_corner[dart_of(i, (q + 1) % 4)];
      neighbours[f].push_back(g);
      neighbours[g].push_back(f);
    }
  while (!stack.empty()) {
    const int f = stack.back();
    stack.pop_back();
    for (int g : neighbours[f]) {
      if (colour[g] < 0) {
        colour[g] = 1 - colour[f];
        stack.push_back(g);
      } else if (colour[g] == colour[f]) {
        throw ValidationError("faces admit no checkerboard colouring");
      }
    }
  }
  fs.shaded.resize(fs.faces.size());
  for (std::size_t f = 0; f < fs.faces.size(); ++f) fs.shaded[f] = colour[f] == 1;
  return fs;
}

/// Crossings met by one face at two different corners (nugatory crossings).
inline std::vector<int> nugatory_crossings(const Diagram& d, const FaceStructure& fs) {
  std::vector<int> out;
  for (int i = 0; i < d.crossing_count(); ++i) {
    std::array<int, 4> f{};
    for (int q = 0; q < 4; ++q) f[q] = fs.face_of_corner[dart_of(i, q)];
    std::sort(f.begin(), f.end());
    if (std::adjacent_find(f.begin(), f.end()) != f.end()) out.push_back(i);
  }
  return out;
}

inline bool is_reduced(const Diagram& d, const FaceStructure& fs) { return nugatory_crossings(d, fs).empty(); }

/// A diagram with a direction on every edge.  `incoming[i][p]` is true when
/// the edge at position p of crossing i points into crossing i.
struct OrientedDiagram {
  Diagram diagram;
  std::vector<std::array<bool, 4>> incoming;
  std::vector<int> component_of_edge;  // indexed by label; entry 0 unused
  int component_count = 1;

  bool is_incoming(int dart) const { return incoming[crossing_of(dart)][position_of(dart)]; }
  /// The dart an edge points into.
  int head(int label) const {
    const auto& ds = diagram.darts_of_edge(label);
    return is_incoming(ds[0]) ? ds[0] : ds[1];
  }
  int tail(int label) const {
    const auto& ds = diagram.darts_of_edge(label);
    return is_incoming(ds[0]) ? ds[1] : ds[0];
  }
};

namespace detail {

inline std::vector<int> strand_components(const Diagram& d, int& count) {
  const int edges = d.edge_count();
  UnionFind uf(static_cast<std::size_t>(edges) + 1);
  for (const auto& x : d.crossings()) {
    uf.unite(x.ends[0], x.ends[2]);
    uf.unite(x.ends[1], x.ends[3]);
  }
  std::vector<int> comp(static_cast<std::size_t>(edges) + 1, -1);
  std::vector<int> root_index(static_cast<std::size_t>(edges) + 1, -1);
  count = 0;
  for (int e = 1; e <= edges; ++e) {
    const int r = uf.find(e);
    if (root_index[r] < 0) root_index[r] = count++;
    comp[e] = root_index[r];
  }
  return comp;
}

}  // namespace detail

/// Orients a diagram with explicit per-dart directions, checking that every
/// edge has one head and every strand passes straight through each crossing.
inline OrientedDiagram orient_with(const Diagram& d, std::vector<std::array<bool, 4>> incoming) {
  if (static_cast<int>(incoming.size()) != d.crossing_count())
    throw PreconditionError("orientation size does not match crossing count");
  for (int i = 0; i < d.crossing_count(); ++i) {
    const auto& in = incoming[i];
    if (in[0] == in[2] || in[1] == in[3])
      throw PreconditionError("crossing " + std::to_string(i) + " does not have one incoming end per strand");
  }
  for (int e = 1; e <= d.edge_count(); ++e) {
    const auto& ds = d.darts_of_edge(e);
    if (incoming[crossing_of(ds[0])][position_of(ds[0])] == incoming[crossing_of(ds[1])][position_of(ds[1])])
      throw PreconditionError("edge " + std::to_string(e) + " is not coherently oriented");
  }
  OrientedDiagram od{d, std::move(incoming), {}, 0};
  int strands = 0;
  od.component_of_edge = detail::strand_components(d, strands);
  od.component_count = strands + d.free_loops();
  return od;
}

/// Deterministic orientation.  In each strand component the first
/// position-0 end (in crossing order) is incoming, matching the PD
/// convention; a component that never passes under is oriented so that its
/// lowest edge label enters the first crossing it appears at.
inline OrientedDiagram orient(const Diagram& d) {
  const int c = d.crossing_count();
  int strands = 0;
  const auto comp = detail::strand_components(d, strands);
  std::vector<int> start(static_cast<std::size_t>(strands), -1);
  for (int i = 0; i < c; ++i) {
    const int k = comp[d.crossing(i).ends[0]];
    if (start[k] < 0) start[k] = dart_of(i, 0);
  }
  for (std::size_t e = 1; e < comp.size(); ++e) {
    const int k = comp[e];
    if (start[k] < 0) start[k] = d.darts_of_edge(static_cast<int>(e))[0];
  }
  std::vector<std::array<bool, 4>> incoming(static_cast<std::size_t>(c), {false, false, false, false});
  for (int k = 0; k < strands; ++k) {
    int dart = start[k];
    do {
      incoming[crossing_of(dart)][position_of(dart)] = true;
      const int out = dart_of(crossing_of(dart), (position_of(dart) + 2) % 4);
      dart = d.partner(out);
    } while (dart != start[k]);
  }
  return orient_with(d, std::move(incoming));
}

/// The same diagram with one strand component running the other way.
inline OrientedDiagram reverse_component(const OrientedDiagram& od, int component) {
  auto in = od.incoming;
  for (int i = 0; i < od.diagram.crossing_count(); ++i)
    for (int p = 0; p < 4; ++p)
      if (od.component_of_edge[od.diagram.crossing(i).ends[p]] == component) in[i][p] = !in[i][p];
  return orient_with(od.diagram, std::move(in));
}

struct CrossingSigns {
  std::vector<int> signs;
  int c_plus = 0;
  int c_minus = 0;
  int writhe = 0;
};

/// Right-handed crossings are +1: with the under-strand entering at
/// position p, the over-strand enters at position p+3.
inline int crossing_sign(const OrientedDiagram& od, int i) {
  const auto& in = od.incoming[i];
  const int under_in = in[0] ? 0 : 2;
  const int over_in = in[1] ? 1 : 3;
  return over_in == (under_in + 3) % 4 ? +1 : -1;
}

inline CrossingSigns crossing_signs(const OrientedDiagram& od) {
  CrossingSigns cs;
  for (int i = 0; i < od.diagram.crossing_count(); ++i) {
    const int s = crossing_sign(od, i);
    cs.signs.push_back(s);
    (s > 0 ? cs.c_plus : cs.c_minus) += 1;
  }
  cs.writhe = cs.c_plus - cs.c_minus;
  return cs;
}

/// Swaps over and under everywhere by rotating each tuple one step.
inline Diagram mirror(const Diagram& d) {
  std::vector<Crossing> xs = d.crossings();
  for (auto& x : xs) std::rotate(x.ends.begin(), x.ends.begin() + 1, x.ends.end());
  if (xs.empty()) return d;
  return Diagram(std::move(xs), d.free_loops());
}

/// Mirror image carrying the same edge directions.
inline OrientedDiagram mirror(const OrientedDiagram& od) {
  auto in = od.incoming;
  for (auto& x : in) std::rotate(x.begin(), x.begin() + 1, x.end());
  return orient_with(mirror(od.diagram), std::move(in));
}

/// Relabels edges so labels are 1..2c in order of first appearance.
inline Diagram canonical_labels(const Diagram& d) {
  std::vector<int> map(static_cast<std::size_t>(d.edge_count()) + 1, 0);
  int next = 0;
  std::vector<Crossing> xs = d.crossings();
  for (auto& x : xs)
    for (int& label : x.ends) {
      if (map[label] == 0) map[label] = ++next;
      label = map[label];
    }
  if (xs.empty()) return d;
  return Diagram(std::move(xs), d.free_loops());
}

}  // namespace knotinv

#endif  // KNOTINV_DIAGRAM_HPP
