#ifndef KNOTINV_STATE_SUM_HPP
#define KNOTINV_STATE_SUM_HPP

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <set>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "knotinv/diagram.hpp"
#include "knotinv/error.hpp"
#include "knotinv/laurent.hpp"

namespace knotinv {

enum class Smoothing : std::uint8_t { A, B };

/// One smoothing choice per crossing.
using State = std::vector<Smoothing>;

inline State all_a_state(const Diagram& d) { return State(static_cast<std::size_t>(d.crossing_count()), Smoothing::A); }
inline State all_b_state(const Diagram& d) { return State(static_cast<std::size_t>(d.crossing_count()), Smoothing::B); }

namespace detail {

// Union-find over edge labels.  A joins ends (0,1) and (2,3); B joins (1,2) and (3,0).
inline void smooth_into(UnionFind& uf, const Crossing& x, Smoothing s) {
  if (s == Smoothing::A) {
    uf.unite(x.ends[0], x.ends[1]);
    uf.unite(x.ends[2], x.ends[3]);
  } else {
    uf.unite(x.ends[1], x.ends[2]);
    uf.unite(x.ends[3], x.ends[0]);
  }
}

inline int count_roots(UnionFind& uf, int edges) {
  int loops = 0;
  for (int e = 1; e <= edges; ++e)
    if (uf.find(e) == e) ++loops;
  return loops;
}

}  // namespace detail

/// Number of circles in the state s, free loops included.
inline int resolve_loops(const Diagram& d, const State& s) {
  if (static_cast<int>(s.size()) != d.crossing_count())
    throw PreconditionError("state has " + std::to_string(s.size()) + " entries for " +
                            std::to_string(d.crossing_count()) + " crossings");
  UnionFind uf(static_cast<std::size_t>(d.edge_count()) + 1);
  for (int i = 0; i < d.crossing_count(); ++i) detail::smooth_into(uf, d.crossing(i), s[i]);
  return detail::count_roots(uf, d.edge_count()) + d.free_loops();
}

inline int s_A(const Diagram& d) { return resolve_loops(d, all_a_state(d)); }
inline int s_B(const Diagram& d) { return resolve_loops(d, all_b_state(d)); }

/// Loops of a state as vertices, one edge per crossing joining the loops on
/// either side of its trace.
struct StateGraph {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;  // indexed by crossing, smaller vertex first
  int reduced_edge_count = 0;              // after collapsing parallel edges
  std::vector<int> loop_of_edge;           // diagram edge label -> vertex; entry 0 unused

  int edge_count() const { return static_cast<int>(edges.size()); }
  bool has_loop_edge() const {
    return std::any_of(edges.begin(), edges.end(), [](const auto& e) { return e.first == e.second; });
  }
};

inline StateGraph state_graph(const Diagram& d, const State& s) {
  if (static_cast<int>(s.size()) != d.crossing_count())
    throw PreconditionError("state length does not match crossing count");
  const int edges = d.edge_count();
  UnionFind uf(static_cast<std::size_t>(edges) + 1);
  for (int i = 0; i < d.crossing_count(); ++i) detail::smooth_into(uf, d.crossing(i), s[i]);
  StateGraph g;
  g.loop_of_edge.assign(static_cast<std::size_t>(edges) + 1, -1);
  std::vector<int> id(static_cast<std::size_t>(edges) + 1, -1);
  for (int e = 1; e <= edges; ++e) {
    const int r = uf.find(e);
    if (id[r] < 0) id[r] = g.vertex_count++;
    g.loop_of_edge[e] = id[r];
  }
  g.vertex_count += d.free_loops();
  // Under either smoothing, the trace runs between the arc through end 0 and the arc through end 2.
  std::set<std::pair<int, int>> distinct;
  for (const auto& x : d.crossings()) {
    int a = g.loop_of_edge[x.ends[0]];
    int b = g.loop_of_edge[x.ends[2]];
    if (a > b) std::swap(a, b);
    g.edges.emplace_back(a, b);
    distinct.emplace(a, b);
  }
  g.reduced_edge_count = static_cast<int>(distinct.size());
  return g;
}

inline StateGraph state_graph(const Diagram& d, Smoothing which) {
  return state_graph(d, which == Smoothing::A ? all_a_state(d) : all_b_state(d));
}

struct Adequacy {
  bool a_adequate = true;
  bool b_adequate = true;
};

inline Adequacy adequacy(const Diagram& d) {
  return {!state_graph(d, Smoothing::A).has_loop_edge(), !state_graph(d, Smoothing::B).has_loop_edge()};
}

struct BracketOptions {
  int max_crossings = 24;
  /// Worker count for the state loop; 0 picks one per hardware thread for large diagrams.
  unsigned threads = 0;
};

namespace detail {

// counts[a * stride + loops] = number of states with a A-smoothings and that many circles.
inline void tally_states(const Diagram& d, std::uint64_t begin, std::uint64_t end, std::vector<std::int64_t>& counts,
                         int stride) {
  const int c = d.crossing_count();
  const int edges = d.edge_count();
  UnionFind uf(static_cast<std::size_t>(edges) + 1);
  for (std::uint64_t mask = begin; mask < end; ++mask) {
    uf.reset(static_cast<std::size_t>(edges) + 1);
    int a_count = 0;
    for (int i = 0; i < c; ++i) {
      const bool a = (mask >> i) & 1U;
      a_count += a;
      smooth_into(uf, d.crossing(i), a ? Smoothing::A : Smoothing::B);
    }
    ++counts[static_cast<std::size_t>(a_count * stride + count_roots(uf, edges))];
  }
}

}  // namespace detail

/// Kauffman bracket, normalised so the crossingless unknot is 1.
inline LaurentPoly kauffman_bracket(const Diagram& d, const BracketOptions& opt = {}) {
  const int c = d.crossing_count();
  if (c > opt.max_crossings)
    throw LimitError("diagram has " + std::to_string(c) + " crossings; the state-sum limit is " +
                     std::to_string(opt.max_crossings));
  if (c > 62) throw LimitError("state sum supports at most 62 crossings");
  const LaurentPoly loop_value{Variable::A, {{2, -1}, {-2, -1}}};
  if (c == 0) return loop_value.pow(static_cast<unsigned>(std::max(0, d.free_loops() - 1)));
  const int stride = d.edge_count() + 2;
  const std::uint64_t total = std::uint64_t{1} << c;

  unsigned workers = opt.threads;
  if (workers == 0) workers = c >= 16 ? std::max(1U, std::thread::hardware_concurrency()) : 1U;
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, total));

  std::vector<std::vector<std::int64_t>> partial(workers,
                                                 std::vector<std::int64_t>(static_cast<std::size_t>((c + 1) * stride), 0));
  if (workers == 1) {
    detail::tally_states(d, 0, total, partial[0], stride);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t lo = total * w / workers;
      const std::uint64_t hi = total * (w + 1) / workers;
      pool.emplace_back([&, w, lo, hi] { detail::tally_states(d, lo, hi, partial[w], stride); });
    }
    for (auto& t : pool) t.join();
  }

  std::vector<LaurentPoly> loop_power{LaurentPoly::constant(Variable::A, 1)};
  LaurentPoly out(Variable::A);
  for (int a = 0; a <= c; ++a) {
    for (int loops = 1; loops < stride; ++loops) {
      std::int64_t n = 0;
      for (const auto& p : partial) n += p[static_cast<std::size_t>(a * stride + loops)];
      if (n == 0) continue;
      const int power = loops - 1 + d.free_loops();
      while (static_cast<int>(loop_power.size()) <= power) loop_power.push_back(loop_power.back() * loop_value);
      out += LaurentPoly::monomial(Variable::A, a - (c - a), n) * loop_power[power];
    }
  }
  return out;
}

/// Converts a normalised bracket into the Jones polynomial in half-powers of t
/// using A = t^{-1/4}.
inline LaurentPoly jones_from_bracket(const LaurentPoly& bracket, int writhe) {
  LaurentPoly f = bracket * LaurentPoly::monomial(Variable::A, -3 * writhe, writhe % 2 == 0 ? 1 : -1);
  LaurentPoly v(Variable::t_half);
  for (const auto& [e, coeff] : f.terms()) {
    if (e % 2 != 0) throw InternalError("odd A-exponent " + std::to_string(e) + " in normalised bracket");
    v.add_term(-e / 2, coeff);
  }
  return v;
}

inline LaurentPoly jones(const OrientedDiagram& od, const BracketOptions& opt = {}) {
  return jones_from_bracket(kauffman_bracket(od.diagram, opt), crossing_signs(od).writhe);
}

/// |V(-1)| evaluated at t^{1/2} = i.
inline std::int64_t determinant_from_jones(const LaurentPoly& v) {
  const Gaussian g = v.evaluate_at_i();
  if (g.re != 0 && g.im != 0)
    throw InternalError("Jones polynomial at t^{1/2} = i is not real or imaginary");
  return std::llabs(g.re != 0 ? g.re : g.im);
}

inline std::int64_t determinant(const OrientedDiagram& od, const BracketOptions& opt = {}) {
  return determinant_from_jones(jones(od, opt));
}

/// |det| of an integer matrix by fraction-free elimination.
inline std::int64_t abs_determinant(std::vector<std::vector<std::int64_t>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  using Wide = __int128;
  std::vector<std::vector<Wide>> a(n, std::vector<Wide>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
  Wide prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  Wide det = a[n - 1][n - 1] * sign;
  if (det < 0) det = -det;
  return static_cast<std::int64_t>(det);
}

/// Determinant from the Goeritz matrix on the unshaded faces.  A crossing
/// contributes +1 when its unshaded corners are A-corners, -1 otherwise.
inline std::int64_t goeritz_determinant(const Diagram& d, const FaceStructure& fs) {
  std::vector<int> index(fs.faces.size(), -1);
  int n = 0;
  for (std::size_t f = 0; f < fs.faces.size(); ++f)
    if (!fs.shaded[f]) index[f] = n++;
  std::vector<std::vector<std::int64_t>> g(static_cast<std::size_t>(n), std::vector<std::int64_t>(n, 0));
  for (int i = 0; i < d.crossing_count(); ++i) {
    const int q = fs.shaded[fs.face_of_corner[dart_of(i, 0)]] ? 1 : 0;
    const int eta = q == 1 ? 1 : -1;
    const int f = index[fs.face_of_corner[dart_of(i, q)]];
    const int h = index[fs.face_of_corner[dart_of(i, q + 2)]];
    if (f == h) continue;
    g[f][h] -= eta;
    g[h][f] -= eta;
  }
  for (int f = 0; f < n; ++f) {
    std::int64_t row = 0;
    for (int h = 0; h < n; ++h)
      if (h != f) row += g[f][h];
    g[f][f] = -row;
  }
  if (n > 0) {
    g.pop_back();
    for (auto& r : g) r.pop_back();
  }
  return abs_determinant(std::move(g));
}

/// Result of smoothing one crossing; `label_map` sends surviving old labels
/// to new ones (0 for labels absorbed into a free loop).
struct Smoothed {
  Diagram diagram;
  std::vector<int> label_map;
};

/// Removes crossing `i` by the given smoothing and relabels edges 1..2(c-1)
/// in order of first appearance.
inline Smoothed smooth_crossing(const Diagram& d, int i, Smoothing s) {
  const int edges = d.edge_count();
  UnionFind uf(static_cast<std::size_t>(edges) + 1);
  detail::smooth_into(uf, d.crossing(i), s);
  std::vector<int> remaining(static_cast<std::size_t>(edges) + 1, 0);
  for (int j = 0; j < d.crossing_count(); ++j)
    if (j != i)
      for (int label : d.crossing(j).ends) ++remaining[uf.find(label)];
  int loops = d.free_loops();
  for (int e = 1; e <= edges; ++e)
    if (uf.find(e) == e && remaining[e] == 0) ++loops;

  std::vector<int> class_label(static_cast<std::size_t>(edges) + 1, 0);
  std::vector<Crossing> xs;
  int next = 0;
  for (int j = 0; j < d.crossing_count(); ++j) {
    if (j == i) continue;
    Crossing x = d.crossing(j);
    for (int& label : x.ends) {
      int& fresh = class_label[uf.find(label)];
      if (fresh == 0) fresh = ++next;
      label = fresh;
    }
    xs.push_back(x);
  }
  Smoothed out{xs.empty() ? Diagram(std::vector<Crossing>{}, loops) : Diagram(std::move(xs), loops), {}};
  out.label_map.assign(static_cast<std::size_t>(edges) + 1, 0);
  for (int e = 1; e <= edges; ++e) out.label_map[e] = class_label[uf.find(e)];
  return out;
}

}  // namespace knotinv

#endif  // KNOTINV_STATE_SUM_HPP
