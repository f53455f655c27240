#ifndef KNOTINV_TESTS_ORACLES_HPP
#define KNOTINV_TESTS_ORACLES_HPP

// Reference computations written independently of the library: loops are
// counted by walking arcs instead of union-find, polynomials are plain maps,
// and the signature comes from a Goeritz form with a crossing correction.

#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace oracle {

using Tuple = std::array<int, 4>;
using Poly = std::map<int, std::int64_t>;

inline void add(Poly& p, int e, std::int64_t c) {
  p[e] += c;
  if (p[e] == 0) p.erase(e);
}

inline Poly mul(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) add(out, ea + eb, ca * cb);
  return out;
}

// Where the other end of each (crossing, position) lives.
inline std::map<std::pair<int, int>, std::pair<int, int>> gluing(const std::vector<Tuple>& pd) {
  std::map<int, std::vector<std::pair<int, int>>> by_label;
  for (int i = 0; i < static_cast<int>(pd.size()); ++i)
    for (int p = 0; p < 4; ++p) by_label[pd[i][p]].emplace_back(i, p);
  std::map<std::pair<int, int>, std::pair<int, int>> g;
  for (const auto& [label, ends] : by_label) {
    g[ends[0]] = ends[1];
    g[ends[1]] = ends[0];
  }
  return g;
}

// Circles of a state (bit i set = A at crossing i), found by walking.
inline int walk_loops(const std::vector<Tuple>& pd, std::uint64_t a_mask) {
  const auto g = gluing(pd);
  std::map<std::pair<int, int>, bool> seen;
  int loops = 0;
  for (int i = 0; i < static_cast<int>(pd.size()); ++i) {
    for (int p = 0; p < 4; ++p) {
      if (seen[{i, p}]) continue;
      ++loops;
      std::pair<int, int> at{i, p};
      while (!seen[at]) {
        seen[at] = true;
        const bool a = (a_mask >> at.first) & 1U;
        // A pairs positions 0-1 and 2-3, B pairs 1-2 and 3-0.
        const int q = a ? at.second ^ 1 : (at.second % 2 == 1 ? (at.second + 1) % 4 : (at.second + 3) % 4);
        std::pair<int, int> turn{at.first, q};
        seen[turn] = true;
        at = g.at(turn);
      }
    }
  }
  return loops;
}

inline Poly bracket(const std::vector<Tuple>& pd) {
  const int c = static_cast<int>(pd.size());
  const Poly d{{2, -1}, {-2, -1}};
  Poly total;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << c); ++mask) {
    const int a = __builtin_popcountll(mask);
    Poly term{{a - (c - a), 1}};
    const int loops = walk_loops(pd, mask);
    for (int k = 1; k < loops; ++k) term = mul(term, d);
    for (const auto& [e, coeff] : term) add(total, e, coeff);
  }
  return total;
}

// Jones polynomial in half-powers of t from the bracket and the writhe.
inline Poly jones(const std::vector<Tuple>& pd, int writhe) {
  Poly out;
  for (const auto& [e, coeff] : bracket(pd)) {
    const int shifted = e - 3 * writhe;
    add(out, -shifted / 2, writhe % 2 == 0 ? coeff : -coeff);
  }
  return out;
}

// Signature of a small symmetric matrix via cyclic Jacobi rotations.
inline int matrix_signature(std::vector<std::vector<double>> m) {
  const std::size_t n = m.size();
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) off += m[i][j] * m[i][j];
    if (off < 1e-20) break;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        if (std::fabs(m[p][q]) < 1e-15) continue;
        const double theta = (m[q][q] - m[p][p]) / (2 * m[p][q]);
        const double t = (theta >= 0 ? 1 : -1) / (std::fabs(theta) + std::sqrt(theta * theta + 1));
        const double c = 1 / std::sqrt(t * t + 1);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double mkp = m[k][p], mkq = m[k][q];
          m[k][p] = c * mkp - s * mkq;
          m[k][q] = s * mkp + c * mkq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double mpk = m[p][k], mqk = m[q][k];
          m[p][k] = c * mpk - s * mqk;
          m[q][k] = s * mpk + c * mqk;
        }
      }
  }
  int sig = 0;
  for (std::size_t i = 0; i < n; ++i) sig += m[i][i] > 1e-7 ? 1 : m[i][i] < -1e-7 ? -1 : 0;
  return sig;
}

// Goeritz signature with the type II crossing correction.  `incoming[i][p]`
// marks the ends pointing into crossing i.  `flip` swaps the colouring;
// the result must not depend on it.
inline int signature(const std::vector<Tuple>& pd, const std::vector<std::array<bool, 4>>& incoming, bool flip = false) {
  const int c = static_cast<int>(pd.size());
  if (c == 0) return 0;
  const auto g = gluing(pd);
  std::map<std::pair<int, int>, int> face;
  int faces = 0;
  for (int i = 0; i < c; ++i)
    for (int q = 0; q < 4; ++q) {
      if (face.count({i, q})) continue;
      std::pair<int, int> at{i, q};
      while (!face.count(at)) {
        face[at] = faces;
        at = g.at({at.first, (at.second + 1) % 4});
      }
      ++faces;
    }
  // Colour by flood fill across edges.
  std::vector<int> colour(static_cast<std::size_t>(faces), -1);
  colour[0] = flip ? 1 : 0;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < c; ++i)
      for (int q = 0; q < 4; ++q) {
        const int f = face[{i, q}], h = face[{i, (q + 1) % 4}];
        if (colour[f] >= 0 && colour[h] < 0) colour[h] = 1 - colour[f], changed = true;
        if (colour[h] >= 0 && colour[f] < 0) colour[f] = 1 - colour[h], changed = true;
      }
  }
  std::map<int, int> white;
  for (int f = 0; f < faces; ++f)
    if (colour[f] == 0) white.emplace(f, static_cast<int>(white.size()));
  const std::size_t n = white.size();
  std::vector<std::vector<double>> gm(n, std::vector<double>(n, 0));
  int mu = 0;
  for (int i = 0; i < c; ++i) {
    const int q = colour[face[{i, 0}]] == 1 ? 1 : 0;
    const int eta = q == 1 ? 1 : -1;
    const int f = white.at(face[{i, q}]), h = white.at(face[{i, q + 2}]);
    if (f != h) {
      gm[f][h] -= eta;
      gm[h][f] -= eta;
    }
    const int under_in = incoming[i][0] ? 0 : 2;
    const int over_out = incoming[i][1] ? 3 : 1;
    const int corner = (under_in + 1) % 4 == over_out ? under_in : over_out;
    if (colour[face[{i, corner}]] == 0) mu += eta;
  }
  for (std::size_t f = 0; f < n; ++f) {
    double row = 0;
    for (std::size_t h = 0; h < n; ++h)
      if (h != f) row += gm[f][h];
    gm[f][f] = -row;
  }
  gm.pop_back();
  for (auto& r : gm) r.pop_back();
  return mu - matrix_signature(gm);
}

}  // namespace oracle

#endif  // KNOTINV_TESTS_ORACLES_HPP
