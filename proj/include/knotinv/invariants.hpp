#ifndef KNOTINV_INVARIANTS_HPP
#define KNOTINV_INVARIANTS_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "knotinv/diagram.hpp"
#include "knotinv/error.hpp"
#include "knotinv/laurent.hpp"
#include "knotinv/state_sum.hpp"
#include "knotinv/tangle.hpp"
#include "knotinv/turaev.hpp"

namespace knotinv {

// Signatures.

enum class SignatureMethod { bounds, traczyk, genus_one, tangle_sum };

/// Wire names used in reports.
inline const char* method_name(SignatureMethod m) {
  switch (m) {
    case SignatureMethod::traczyk:
      return "traczyk";
    case SignatureMethod::genus_one:
      return "theorem1";
    case SignatureMethod::tangle_sum:
      return "theorem2";
    case SignatureMethod::bounds:
      break;
  }
  return "bounds";
}

struct SignatureReport {
  int lower = 0;
  int upper = 0;
  std::optional<int> exact;
  SignatureMethod method = SignatureMethod::bounds;
  std::int64_t det = 0;
  /// For knots: the exact value (or some value in [lower, upper] when there
  /// is none) is congruent to det - 1 mod 4.  Always true for links.
  bool mod4_ok = true;
  /// The two values sum - 1 and sum + 1 of a tangle-sum computation.
  std::vector<int> candidates;
};

namespace detail {

inline int mod4(std::int64_t x) { return static_cast<int>(((x % 4) + 4) % 4); }

inline bool congruent_mod4(std::int64_t sigma, std::int64_t det) { return mod4(sigma - (det - 1)) == 0; }

inline bool any_in_range_mod4(int lower, int upper, std::int64_t det) {
  for (int s = lower; s <= upper; ++s)
    if (s % 2 == 0 && congruent_mod4(s, det)) return true;
  return false;
}

}  // namespace detail

/// sigma = det - 1 (mod 4) for a knot with even signature and odd determinant.
inline bool giller_mod4_check(int sigma, std::int64_t det) {
  if (sigma % 2 != 0) throw PreconditionError("knot signature must be even, got " + std::to_string(sigma));
  if (det < 0 || det % 2 == 0) throw PreconditionError("knot determinant must be odd, got " + std::to_string(det));
  return detail::congruent_mod4(sigma, det);
}

/// Removes Reidemeister I kinks one at a time; edge directions and the signs
/// of the surviving crossings are kept.
inline OrientedDiagram remove_kinks(const OrientedDiagram& od) {
  OrientedDiagram cur = od;
  for (;;) {
    const Diagram& d = cur.diagram;
    int kink = -1;
    Smoothing keep = Smoothing::A;
    for (int i = 0; i < d.crossing_count() && kink < 0; ++i)
      for (int p = 0; p < 4; ++p)
        if (d.crossing(i).ends[p] == d.crossing(i).ends[(p + 1) % 4]) {
          kink = i;
          // Pair (p, p+1) is an A pair for even p; smooth the other way.
          keep = p % 2 == 0 ? Smoothing::B : Smoothing::A;
          break;
        }
    if (kink < 0) return cur;
    Smoothed s = smooth_crossing(d, kink, keep);
    if (s.diagram.crossing_count() == 0) return orient(Diagram::unknot());
    auto in = cur.incoming;
    in.erase(in.begin() + kink);
    cur = orient_with(s.diagram, std::move(in));
  }
}

/// Lower s_A - c_+ - 1 and upper -s_B + c_- + 1.  Their difference is twice
/// the Turaev genus of the diagram.
inline SignatureReport signature_bounds(const OrientedDiagram& od) {
  validate(od.diagram);
  const CrossingSigns cs = crossing_signs(od);
  SignatureReport r;
  r.lower = s_A(od.diagram) - cs.c_plus - 1;
  r.upper = -s_B(od.diagram) + cs.c_minus + 1;
  return r;
}

/// Signature of a connected alternating diagram.  Kinks are removed first.
inline int traczyk_signature(const OrientedDiagram& od) {
  validate(od.diagram);
  if (!is_alternating(od.diagram)) throw PreconditionError("diagram is not alternating");
  OrientedDiagram reduced = od;
  if (!is_reduced(od.diagram, validate(od.diagram))) reduced = remove_kinks(od);
  const CrossingSigns cs = crossing_signs(reduced);
  const int from_a = s_A(reduced.diagram) - cs.c_plus - 1;
  const int from_b = -s_B(reduced.diagram) + cs.c_minus + 1;
  if (from_a != from_b)
    throw InternalError("signature formulas disagree: " + std::to_string(from_a) + " vs " + std::to_string(from_b));
  return from_a;
}

/// Bounds plus the exact alternating-diagram value; `det` is the link determinant.
inline SignatureReport traczyk_report(const OrientedDiagram& od, std::int64_t det) {
  SignatureReport r = signature_bounds(od);
  r.method = SignatureMethod::traczyk;
  r.exact = traczyk_signature(od);
  r.det = det;
  if (od.component_count == 1) r.mod4_ok = giller_mod4_check(*r.exact, r.det);
  return r;
}

/// Bounds only; for a knot mod4_ok says whether some value in range passes
/// the mod 4 rule.
inline SignatureReport bounds_report(const OrientedDiagram& od, std::int64_t det) {
  SignatureReport r = signature_bounds(od);
  r.det = det;
  if (od.component_count == 1) r.mod4_ok = detail::any_in_range_mod4(r.lower, r.upper, det);
  return r;
}

/// Exact signature of a knot diagram of Turaev genus one: s_A - c_+ - 1 or
/// s_A - c_+ + 1, whichever is congruent to det - 1 mod 4.
inline SignatureReport genus_one_knot_signature(const OrientedDiagram& od, std::int64_t det) {
  if (od.component_count != 1)
    throw PreconditionError("diagram has " + std::to_string(od.component_count) + " components; a knot is required");
  const int g = turaev_genus(od.diagram);
  if (g != 1) throw PreconditionError("diagram Turaev genus is " + std::to_string(g) + ", not 1");
  SignatureReport r = signature_bounds(od);
  r.method = SignatureMethod::genus_one;
  r.det = det;
  const int m = s_A(od.diagram) - crossing_signs(od).c_plus;
  const bool low = giller_mod4_check(m - 1, r.det);
  const bool high = giller_mod4_check(m + 1, r.det);
  if (low == high) throw InternalError("mod 4 rule does not single out one of m - 1, m + 1 for m = " + std::to_string(m));
  r.exact = low ? m - 1 : m + 1;
  return r;
}

inline SignatureReport genus_one_knot_signature(const OrientedDiagram& od, const BracketOptions& opt = {}) {
  if (od.component_count != 1)
    throw PreconditionError("diagram has " + std::to_string(od.component_count) + " components; a knot is required");
  return genus_one_knot_signature(od, determinant(od, opt));
}

/// Signature from the closures of the tangles of a genus-one ring.  The
/// orientation chooses numerator or denominator closures; the sign of the
/// extra +-1 is fixed only for knots.
inline SignatureReport tangle_sum_signature(const GenusOneStructure& gs, const OrientedDiagram& od, std::int64_t det) {
  const OrientationType type = classify_orientation(gs, od);
  const Closure which = type == OrientationType::denominator ? Closure::denominator : Closure::numerator;
  int sum = 0;
  for (std::size_t i = 0; i < gs.tangles.size(); ++i) {
    Tangle t = gs.tangles[i];
    if (!t.oriented()) {
      t.incoming.clear();
      for (int c : t.source_crossings) t.incoming.push_back(od.incoming[c]);
    }
    sum += traczyk_signature(oriented_closure(t, which));
  }
  SignatureReport r = signature_bounds(od);
  r.method = SignatureMethod::tangle_sum;
  r.candidates = {sum - 1, sum + 1};
  r.det = det;
  if (od.component_count == 1) {
    const bool low = giller_mod4_check(sum - 1, r.det);
    const bool high = giller_mod4_check(sum + 1, r.det);
    if (low == high) throw InternalError("mod 4 rule does not single out a tangle-sum candidate");
    r.exact = low ? sum - 1 : sum + 1;
  }
  return r;
}

inline SignatureReport tangle_sum_signature(const GenusOneStructure& gs, const OrientedDiagram& od,
                                            const BracketOptions& opt = {}) {
  return tangle_sum_signature(gs, od, determinant(od, opt));
}

// Determinants.

/// |sum_i (-1)^i det N(R_i) prod_{j != i} det D(R_j)|.
inline std::int64_t conway_determinant(const GenusOneStructure& gs, const BracketOptions& opt = {}) {
  std::vector<std::int64_t> num, den;
  for (const Tangle& t : gs.tangles) {
    num.push_back(determinant(orient(closure(t, Closure::numerator)), opt));
    den.push_back(determinant(orient(closure(t, Closure::denominator)), opt));
  }
  __int128 total = 0;
  for (std::size_t i = 0; i < num.size(); ++i) {
    __int128 term = num[i];
    for (std::size_t j = 0; j < den.size(); ++j)
      if (j != i) term *= den[j];
    // Tangles are numbered from 1.
    total += (i % 2 == 0) ? -term : term;
  }
  if (total < 0) total = -total;
  return static_cast<std::int64_t>(total);
}

// Extreme bracket coefficients.

struct BracketTerm {
  int exponent = 0;
  std::int64_t coefficient = 0;
  friend bool operator==(const BracketTerm&, const BracketTerm&) = default;
};

struct ExtremeTerms {
  std::array<BracketTerm, 2> leading;   // highest, then next
  std::array<BracketTerm, 2> trailing;  // lowest, then next
};

/// First two and last two bracket terms of a reduced alternating diagram,
/// read off the reduced all-A and all-B state graphs.
inline ExtremeTerms dl_coefficients(const Diagram& d) {
  const FaceStructure fs = validate(d);
  const int c = d.crossing_count();
  if (c < 1) throw PreconditionError("diagram has no crossings");
  if (!is_alternating(d)) throw PreconditionError("diagram is not alternating");
  if (!is_reduced(d, fs)) throw PreconditionError("diagram has a nugatory crossing");
  const StateGraph ga = state_graph(d, Smoothing::A);
  const StateGraph gb = state_graph(d, Smoothing::B);
  const int v = ga.vertex_count, e = ga.reduced_edge_count;
  const int vb = gb.vertex_count, eb = gb.reduced_edge_count;
  auto sign = [](int k) -> std::int64_t { return k % 2 == 0 ? 1 : -1; };
  ExtremeTerms out;
  out.leading = {BracketTerm{c + 2 * v - 2, sign(v - 1)}, BracketTerm{c + 2 * v - 6, sign(v) * (e - v + 1)}};
  out.trailing = {BracketTerm{2 - c - 2 * vb, sign(vb - 1)}, BracketTerm{6 - c - 2 * vb, sign(vb) * (eb - vb + 1)}};
  return out;
}

// Almost alternating diagrams.

/// A diagram with one crossing (the dealternator) whose change makes it
/// alternating.  u1, u2 are the faces at the dealternator's A-corners and
/// v1, v2 those at its B-corners.  The rest of the diagram is the tangle R;
/// the A-smoothing of the dealternator gives D(R), the B-smoothing N(R).
struct AAMarkedDiagram {
  Diagram diagram;
  int dealternator = -1;
  int u1 = -1, u2 = -1, v1 = -1, v2 = -1;
  FaceStructure faces;
};

inline AAMarkedDiagram mark_almost_alternating(const Diagram& d, int dealternator) {
  AAMarkedDiagram aa;
  aa.faces = validate(d);
  if (dealternator < 0 || dealternator >= d.crossing_count())
    throw PreconditionError("dealternator " + std::to_string(dealternator) + " is not a crossing");
  if (is_alternating(d)) throw PreconditionError("diagram is already alternating");
  std::vector<Crossing> xs = d.crossings();
  auto& e = xs[dealternator].ends;
  std::rotate(e.begin(), e.begin() + 1, e.end());
  if (!is_alternating(Diagram(std::move(xs), d.free_loops())))
    throw PreconditionError("changing crossing " + std::to_string(dealternator) + " does not give an alternating diagram");
  aa.diagram = d;
  aa.dealternator = dealternator;
  const auto& fc = aa.faces.face_of_corner;
  aa.v1 = fc[dart_of(dealternator, 0)];
  aa.u1 = fc[dart_of(dealternator, 1)];
  aa.v2 = fc[dart_of(dealternator, 2)];
  aa.u2 = fc[dart_of(dealternator, 3)];
  return aa;
}

/// The tangle closures D(R) and N(R).
inline std::pair<Diagram, Diagram> aa_closures(const AAMarkedDiagram& aa) {
  return {smooth_crossing(aa.diagram, aa.dealternator, Smoothing::A).diagram,
          smooth_crossing(aa.diagram, aa.dealternator, Smoothing::B).diagram};
}

namespace detail {

inline void require_reduced_closures(const AAMarkedDiagram& aa) {
  const auto [dr, nr] = aa_closures(aa);
  for (const auto& [name, k] : {std::pair<const char*, const Diagram*>{"D(R)", &dr}, {"N(R)", &nr}}) {
    FaceStructure fs;
    try {
      fs = validate(*k);
    } catch (const ValidationError& e) {
      throw PreconditionError(std::string(name) + " is not a connected diagram: " + e.what());
    }
    if (!is_reduced(*k, fs)) throw PreconditionError(std::string(name) + " has a nugatory crossing");
  }
}

}  // namespace detail

struct Adjacency {
  int u = 0;
  int v = 0;
};

/// Faces other than u1, u2, v1, v2 that sit opposite u1 at some crossing and
/// opposite u2 at some crossing (and likewise for v1, v2).  These are the
/// common neighbours of u1 and u2 in the checkerboard graph.
inline Adjacency aa_adjacency(const AAMarkedDiagram& aa) {
  detail::require_reduced_closures(aa);
  const FaceStructure& fs = aa.faces;
  const int nf = fs.face_count();
  std::vector<std::set<int>> opposite(static_cast<std::size_t>(nf));
  for (int i = 0; i < aa.diagram.crossing_count(); ++i) {
    if (i == aa.dealternator) continue;
    for (int q = 0; q < 2; ++q) {
      const int f = fs.face_of_corner[dart_of(i, q)];
      const int g = fs.face_of_corner[dart_of(i, q + 2)];
      opposite[f].insert(g);
      opposite[g].insert(f);
    }
  }
  Adjacency out;
  for (int f = 0; f < nf; ++f) {
    if (f == aa.u1 || f == aa.u2 || f == aa.v1 || f == aa.v2) continue;
    if (opposite[f].count(aa.u1) && opposite[f].count(aa.u2)) ++out.u;
    if (opposite[f].count(aa.v1) && opposite[f].count(aa.v2)) ++out.v;
  }
  return out;
}

struct AAExtremes {
  BracketTerm top;     // (-1)^v (1 - adj_u) A^(c + 2v - 5)
  BracketTerm bottom;  // (-1)^(vb - 1) (1 - adj_v) A^(7 - c - 2vb)
  Adjacency adjacency;
  /// adj_u = adj_v = 1: the diagram simplifies to one with fewer crossings.
  bool reducible = false;
};

/// Predicted extreme bracket coefficients of an almost alternating diagram.
/// c counts the crossings of R, v and vb are s_A and s_B of D(R).
inline AAExtremes aa_extreme_coefficients(const AAMarkedDiagram& aa) {
  AAExtremes out;
  out.adjacency = aa_adjacency(aa);
  const Diagram dr = aa_closures(aa).first;
  const int c = aa.diagram.crossing_count() - 1;
  const int v = s_A(dr), vb = s_B(dr);
  auto sign = [](int k) -> std::int64_t { return k % 2 == 0 ? 1 : -1; };
  out.top = {c + 2 * v - 5, sign(v) * (1 - out.adjacency.u)};
  out.bottom = {7 - c - 2 * vb, sign(vb - 1) * (1 - out.adjacency.v)};
  out.reducible = out.adjacency.u == 1 && out.adjacency.v == 1;
  return out;
}

// Obstruction.

enum class Certificate { turaev_genus_at_least_2, dealternating_at_least_2, not_almost_alternating };

inline const char* certificate_name(Certificate c) {
  switch (c) {
    case Certificate::turaev_genus_at_least_2:
      return "turaev_genus>=2";
    case Certificate::dealternating_at_least_2:
      return "dealternating>=2";
    case Certificate::not_almost_alternating:
      break;
  }
  return "not_almost_alternating";
}

struct ObstructionVerdict {
  std::int64_t a_m = 0;
  std::int64_t a_M = 0;
  bool fires = false;
  std::vector<Certificate> implied;
};

/// Fires when both extreme Jones coefficients have absolute value at least 2.
/// A verdict that does not fire certifies nothing.
inline ObstructionVerdict jones_obstruction(const LaurentPoly& v) {
  if (v.is_zero()) throw PreconditionError("zero polynomial");
  ObstructionVerdict out;
  out.a_m = v.lowest_coefficient();
  out.a_M = v.highest_coefficient();
  out.fires = std::llabs(out.a_m) >= 2 && std::llabs(out.a_M) >= 2;
  if (out.fires)
    out.implied = {Certificate::not_almost_alternating, Certificate::turaev_genus_at_least_2,
                   Certificate::dealternating_at_least_2};
  return out;
}

}  // namespace knotinv

#endif  // KNOTINV_INVARIANTS_HPP
