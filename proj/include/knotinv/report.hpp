#ifndef KNOTINV_REPORT_HPP
#define KNOTINV_REPORT_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <type_traits>
#include <vector>

#include "json.hpp"
#include "knotinv/diagram.hpp"
#include "knotinv/error.hpp"
#include "knotinv/invariants.hpp"
#include "knotinv/laurent.hpp"
#include "knotinv/poly_text.hpp"
#include "knotinv/records.hpp"
#include "knotinv/state_sum.hpp"
#include "knotinv/turaev.hpp"

namespace knotinv {

using Json = nlohmann::ordered_json;

enum class Status { ok, skipped, error };

inline const char* status_name(Status s) {
  return s == Status::ok ? "ok" : s == Status::skipped ? "skipped" : "error";
}

template <class T>
struct Field {
  Status status = Status::skipped;
  std::optional<T> value;
  std::string message;

  void set(T v) {
    status = Status::ok;
    value = std::move(v);
  }
  void fail(std::string why) {
    status = Status::error;
    value.reset();
    message = std::move(why);
  }
  void skip(std::string why) {
    status = Status::skipped;
    value.reset();
    message = std::move(why);
  }
  bool ok() const { return status == Status::ok; }
};

/// Runs `compute` into `f`, turning library errors into an error status.
template <class T, class F>
void fill(Field<T>& f, F&& compute) {
  try {
    f.set(compute());
  } catch (const Error& e) {
    f.fail(e.what());
  }
}

struct RingTangle {
  std::vector<int> crossings;
  std::string decorations;
  bool proper = false;
  std::int64_t numerator_det = 0;
  std::int64_t denominator_det = 0;
};

struct DecompositionSummary {
  AltDecomposition decomposition;
  bool recognized = false;
  int k = 0;
  std::string reason;
  std::optional<OrientationType> orientation;
  std::vector<RingTangle> ring;
  std::optional<std::int64_t> conway_det;
  std::optional<SignatureReport> tangle_sum;
};

struct Report {
  std::string name;
  int line = 0;
  Status status = Status::ok;
  std::string error;
  int crossings = 0;
  int components = 0;
  Field<int> s_A, s_B, c_plus, c_minus, writhe, turaev_genus;
  Field<LaurentPoly> bracket, jones;
  Field<std::int64_t> det;
  Field<SignatureReport> signature;
  Field<DecompositionSummary> decomposition;
  Field<ObstructionVerdict> obstruction;
};

struct ReportOptions {
  BracketOptions bracket;
  bool decomposition = true;
};

namespace detail {

inline DecompositionSummary summarize_decomposition(const OrientedDiagram& od, std::optional<std::int64_t> det,
                                                    const BracketOptions& opt) {
  DecompositionSummary s;
  s.decomposition = alternating_decomposition(od.diagram);
  const Recognition r = recognize_genus_one(od.diagram, &od);
  s.recognized = r.recognized();
  s.reason = r.reason;
  if (!r.recognized()) return s;
  const GenusOneStructure& gs = *r.structure;
  s.k = gs.k;
  s.orientation = classify_orientation(gs, od);
  for (const Tangle& t : gs.tangles) {
    RingTangle rt;
    rt.crossings = t.source_crossings;
    rt.decorations = std::string(t.decorations.begin(), t.decorations.end());
    rt.proper = t.proper;
    rt.numerator_det = determinant(orient(closure(t, Closure::numerator)), opt);
    rt.denominator_det = determinant(orient(closure(t, Closure::denominator)), opt);
    s.ring.push_back(std::move(rt));
  }
  s.conway_det = conway_determinant(gs, opt);
  s.tangle_sum = tangle_sum_signature(gs, od, det ? *det : *s.conway_det);
  return s;
}

}  // namespace detail

/// Every invariant of one PD record.  A record that does not parse or is
/// not a connected diagram gets a record-level error and all fields in
/// error.
inline Report compute_report(const KnotRecord& rec, const ReportOptions& opt = {}) {
  Report rep;
  rep.name = rec.name;
  rep.line = rec.line;
  std::optional<OrientedDiagram> od;
  try {
    if (!rec.pd_text) throw PreconditionError("record has no PD code");
    const Diagram d = parse_pd(*rec.pd_text);
    validate(d);
    od = orient(d);
  } catch (const Error& e) {
    rep.status = Status::error;
    rep.error = e.what();
    const std::string why = "record rejected";
    for (Field<int>* f : {&rep.s_A, &rep.s_B, &rep.c_plus, &rep.c_minus, &rep.writhe, &rep.turaev_genus}) f->fail(why);
    rep.bracket.fail(why);
    rep.jones.fail(why);
    rep.det.fail(why);
    rep.signature.fail(why);
    rep.decomposition.fail(why);
    rep.obstruction.fail(why);
    return rep;
  }
  const Diagram& d = od->diagram;
  rep.crossings = d.crossing_count();
  rep.components = od->component_count;
  const CrossingSigns cs = crossing_signs(*od);
  rep.s_A.set(s_A(d));
  rep.s_B.set(s_B(d));
  rep.c_plus.set(cs.c_plus);
  rep.c_minus.set(cs.c_minus);
  rep.writhe.set(cs.writhe);
  rep.turaev_genus.set(turaev_genus(d));

  fill(rep.bracket, [&] { return kauffman_bracket(d, opt.bracket); });
  if (rep.bracket.ok()) {
    fill(rep.jones, [&] { return jones_from_bracket(*rep.bracket.value, cs.writhe); });
  } else {
    rep.jones.fail(rep.bracket.message);
  }
  if (rep.jones.ok()) {
    fill(rep.det, [&] { return determinant_from_jones(*rep.jones.value); });
    fill(rep.obstruction, [&] { return jones_obstruction(*rep.jones.value); });
  } else {
    rep.det.fail(rep.jones.message);
    rep.obstruction.skip("no Jones polynomial");
  }

  const std::optional<std::int64_t> det = rep.det.value;
  fill(rep.signature, [&] {
    // Without the state sum the Goeritz determinant stands in.
    const std::int64_t dt = det ? *det : goeritz_determinant(d, validate(d));
    if (is_alternating(d)) return traczyk_report(*od, dt);
    if (*rep.turaev_genus.value == 1 && od->component_count == 1) return genus_one_knot_signature(*od, dt);
    return bounds_report(*od, dt);
  });

  if (opt.decomposition)
    fill(rep.decomposition, [&] { return detail::summarize_decomposition(*od, det, opt.bracket); });
  else
    rep.decomposition.skip("not requested");
  return rep;
}

inline bool has_error(const Report& r) {
  if (r.status == Status::error) return true;
  const Status all[] = {r.s_A.status,    r.s_B.status,  r.c_plus.status,    r.c_minus.status,
                        r.writhe.status, r.turaev_genus.status, r.bracket.status, r.jones.status,
                        r.det.status,    r.signature.status,    r.decomposition.status};
  return std::find(std::begin(all), std::end(all), Status::error) != std::end(all);
}

/// Applies `work` to every item on up to `jobs` threads; results keep input order.
template <class In, class Out>
std::vector<Out> parallel_map(const std::vector<In>& items, unsigned jobs, const std::function<Out(const In&)>& work) {
  std::vector<Out> out(items.size());
  jobs = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(items.size())));
  if (jobs <= 1) {
    for (std::size_t i = 0; i < items.size(); ++i) out[i] = work(items[i]);
    return out;
  }
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < jobs; ++w)
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < items.size(); i += jobs) out[i] = work(items[i]);
    });
  for (auto& t : pool) t.join();
  return out;
}

// Obstruction records.

struct ObstructionResult {
  std::string name;
  int line = 0;
  Field<ObstructionVerdict> verdict;
  std::optional<LaurentPoly> jones;
};

/// Verdict for one record.  With a PD code the Jones polynomial is
/// recomputed; if a polynomial is also given, the two must agree exactly.
inline ObstructionResult obstruct_record(const KnotRecord& rec, const BracketOptions& opt = {}) {
  ObstructionResult out;
  out.name = rec.name;
  out.line = rec.line;
  try {
    std::optional<LaurentPoly> given, computed;
    if (rec.jones_text) given = parse_poly(*rec.jones_text);
    if (rec.pd_text) {
      const Diagram d = parse_pd(*rec.pd_text);
      validate(d);
      computed = jones(orient(d), opt);
    }
    if (given && computed && !(*given == *computed))
      throw ValidationError("Jones polynomial " + format_poly(*given) + " does not match " + format_poly(*computed) +
                            " computed from the PD code");
    out.jones = computed ? computed : given;
    if (!out.jones) throw PreconditionError("record has neither a Jones polynomial nor a PD code");
    out.verdict.set(jones_obstruction(*out.jones));
  } catch (const Error& e) {
    out.verdict.fail(e.what());
  }
  return out;
}

// JSON.

inline Json to_json(const LaurentPoly& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.ascending_terms()) terms.push_back(Json::array({e, c}));
  return Json{{"variable", p.variable() == Variable::A ? "A" : "t_half"}, {"terms", std::move(terms)}};
}

inline LaurentPoly poly_from_json(const Json& j) {
  try {
    const std::string var = j.at("variable").get<std::string>();
    if (var != "A" && var != "t_half") throw ParseError("unknown polynomial variable " + var);
    LaurentPoly p(var == "A" ? Variable::A : Variable::t_half);
    for (const auto& t : j.at("terms")) p.add_term(t.at(0).get<int>(), t.at(1).get<std::int64_t>());
    return p;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed polynomial JSON: ") + e.what());
  }
}

inline Json to_json(const SignatureReport& r) {
  Json j{{"lower", r.lower},
         {"upper", r.upper},
         {"exact", r.exact ? Json(*r.exact) : Json(nullptr)},
         {"method", method_name(r.method)},
         {"det", r.det},
         {"mod4_ok", r.mod4_ok}};
  if (!r.candidates.empty()) j["candidates"] = r.candidates;
  return j;
}

inline Json to_json(const ObstructionVerdict& v) {
  Json implied = Json::array();
  for (Certificate c : v.implied) implied.push_back(certificate_name(c));
  return Json{{"a_m", v.a_m}, {"a_M", v.a_M}, {"fires", v.fires}, {"implied", std::move(implied)}};
}

inline Json to_json(const AltDecomposition& dec) {
  Json curves = Json::array();
  for (const auto& c : dec.curves) {
    Json pts = Json::array();
    for (const auto& p : c.points) pts.push_back(Json::array({p.edge, p.index}));
    curves.push_back(Json{{"points", std::move(pts)}, {"faces", c.faces}});
  }
  Json tangles = Json::array();
  for (const auto& t : dec.tangles) {
    tangles.push_back(Json{{"crossings", t.crossings},
                           {"boundary", t.boundary},
                           {"decorations", std::string(t.decorations.begin(), t.decorations.end())},
                           {"proper", t.proper}});
  }
  return Json{{"nonalternating_edges", dec.nonalternating_edges}, {"curves", std::move(curves)}, {"tangles", std::move(tangles)}};
}

inline Json to_json(const DecompositionSummary& s) {
  Json j = to_json(s.decomposition);
  Json g{{"recognized", s.recognized}};
  if (s.recognized) {
    g["k"] = s.k;
    g["orientation"] = orientation_name(*s.orientation);
    Json ring = Json::array();
    for (const auto& t : s.ring)
      ring.push_back(Json{{"crossings", t.crossings},
                          {"decorations", t.decorations},
                          {"proper", t.proper},
                          {"numerator_det", t.numerator_det},
                          {"denominator_det", t.denominator_det}});
    g["tangles"] = std::move(ring);
    g["conway_det"] = *s.conway_det;
    g["tangle_sum_signature"] = to_json(*s.tangle_sum);
  } else {
    g["reason"] = s.reason;
  }
  j["genus_one"] = std::move(g);
  return j;
}

template <class T>
Json field_json(const Field<T>& f) {
  Json j{{"status", status_name(f.status)}};
  if (f.value) {
    if constexpr (std::is_arithmetic_v<T>)
      j["value"] = *f.value;
    else
      j["value"] = to_json(*f.value);
  }
  if (!f.ok() && !f.message.empty()) j["message"] = f.message;
  return j;
}

inline Json to_json(const Report& r) {
  Json j{{"name", r.name}, {"line", r.line}, {"status", status_name(r.status)}};
  if (r.status == Status::error) {
    j["error"] = r.error;
    return j;
  }
  j["crossings"] = r.crossings;
  j["components"] = r.components;
  j["s_A"] = field_json(r.s_A);
  j["s_B"] = field_json(r.s_B);
  j["c_plus"] = field_json(r.c_plus);
  j["c_minus"] = field_json(r.c_minus);
  j["writhe"] = field_json(r.writhe);
  j["turaev_genus"] = field_json(r.turaev_genus);
  j["bracket"] = field_json(r.bracket);
  j["jones"] = field_json(r.jones);
  j["det"] = field_json(r.det);
  j["signature"] = field_json(r.signature);
  j["decomposition"] = field_json(r.decomposition);
  j["obstruction"] = field_json(r.obstruction);
  return j;
}

inline Json to_json(const ObstructionResult& r) {
  Json j{{"name", r.name}, {"line", r.line}, {"status", status_name(r.verdict.status)}};
  if (r.jones) j["jones"] = to_json(*r.jones);
  if (r.verdict.ok())
    j["verdict"] = to_json(*r.verdict.value);
  else
    j["error"] = r.verdict.message;
  return j;
}

// Plain text.

namespace detail {

template <class T, class F>
std::string field_text(const Field<T>& f, F&& show) {
  if (f.ok()) return show(*f.value);
  return std::string(status_name(f.status)) + (f.message.empty() ? "" : " (" + f.message + ")");
}

inline std::string signature_text(const SignatureReport& s) {
  std::ostringstream out;
  if (s.exact)
    out << *s.exact << " [" << method_name(s.method) << "]";
  else if (!s.candidates.empty())
    out << s.candidates[0] << " or " << s.candidates[1] << " [" << method_name(s.method) << "]";
  else
    out << "between " << s.lower << " and " << s.upper;
  out << ", bounds [" << s.lower << ", " << s.upper << "]";
  if (!s.mod4_ok) out << ", mod 4 check FAILED";
  return out.str();
}

inline std::string verdict_text(const ObstructionVerdict& v) {
  std::string out = "a_m = " + std::to_string(v.a_m) + ", a_M = " + std::to_string(v.a_M);
  if (!v.fires) return out + ", does not fire";
  out += ", fires:";
  for (Certificate c : v.implied) out += std::string(" ") + certificate_name(c);
  return out;
}

inline std::string number_list(const std::vector<int>& xs) {
  std::string out;
  for (int x : xs) out += (out.empty() ? "" : " ") + std::to_string(x);
  return out;
}

}  // namespace detail

inline std::string to_text(const Report& r) {
  std::ostringstream out;
  out << r.name << "\n";
  if (r.status == Status::error) {
    out << "  error: " << r.error << "\n";
    return out.str();
  }
  auto num = [](auto x) { return std::to_string(x); };
  out << "  crossings: " << r.crossings << ", components: " << r.components << "\n";
  out << "  s_A: " << detail::field_text(r.s_A, num) << ", s_B: " << detail::field_text(r.s_B, num) << "\n";
  out << "  c+: " << detail::field_text(r.c_plus, num) << ", c-: " << detail::field_text(r.c_minus, num)
      << ", writhe: " << detail::field_text(r.writhe, num) << "\n";
  out << "  turaev genus: " << detail::field_text(r.turaev_genus, num) << "\n";
  out << "  bracket: " << detail::field_text(r.bracket, format_poly) << "\n";
  out << "  jones: " << detail::field_text(r.jones, format_poly) << "\n";
  out << "  det: " << detail::field_text(r.det, num) << "\n";
  out << "  signature: " << detail::field_text(r.signature, detail::signature_text) << "\n";
  out << "  decomposition: "
      << detail::field_text(r.decomposition,
                            [](const DecompositionSummary& s) {
                              std::string t = std::to_string(s.decomposition.curves.size()) + " curves, " +
                                              std::to_string(s.decomposition.tangles.size()) + " tangles";
                              if (s.recognized)
                                t += ", genus-one ring with k = " + std::to_string(s.k) + ", Conway det " +
                                     std::to_string(*s.conway_det);
                              return t;
                            })
      << "\n";
  out << "  obstruction: " << detail::field_text(r.obstruction, detail::verdict_text) << "\n";
  return out.str();
}

/// Human-readable dump of the decomposition of one record.
inline std::string decomposition_text(const Report& r) {
  std::ostringstream out;
  out << r.name << "\n";
  if (r.status == Status::error || !r.decomposition.ok()) {
    out << "  error: " << (r.status == Status::error ? r.error : r.decomposition.message) << "\n";
    return out.str();
  }
  const DecompositionSummary& s = *r.decomposition.value;
  const AltDecomposition& dec = s.decomposition;
  out << "  non-alternating edges: " << detail::number_list(dec.nonalternating_edges) << "\n";
  out << "  curves: " << dec.curves.size() << "\n";
  for (std::size_t i = 0; i < dec.curves.size(); ++i) {
    out << "    curve " << i + 1 << ":";
    for (const auto& p : dec.curves[i].points) out << " " << p.edge << "." << p.index;
    out << "\n";
  }
  out << "  tangles: " << dec.tangles.size() << "\n";
  for (std::size_t i = 0; i < dec.tangles.size(); ++i) {
    const auto& t = dec.tangles[i];
    out << "    tangle " << i + 1 << ": crossings " << detail::number_list(t.crossings);
    if (!t.decorations.empty()) out << ", decorations " << std::string(t.decorations.begin(), t.decorations.end());
    out << (t.proper ? ", proper" : "") << "\n";
  }
  if (!s.recognized) {
    out << "  genus-one ring: not recognized (" << s.reason << ")\n";
    return out.str();
  }
  out << "  genus-one ring: k = " << s.k << ", " << orientation_name(*s.orientation) << " orientation\n";
  for (std::size_t i = 0; i < s.ring.size(); ++i)
    out << "    R" << i + 1 << ": det N(R" << i + 1 << ") = " << s.ring[i].numerator_det << ", det D(R" << i + 1
        << ") = " << s.ring[i].denominator_det << "\n";
  out << "  Conway determinant: " << *s.conway_det << "\n";
  out << "  tangle-sum signature: " << detail::signature_text(*s.tangle_sum) << "\n";
  return out.str();
}

inline std::string to_text(const ObstructionResult& r) {
  if (!r.verdict.ok()) return r.name + ": error: " + r.verdict.message + "\n";
  return r.name + ": " + detail::verdict_text(*r.verdict.value) + "\n";
}

}  // namespace knotinv

#endif  // KNOTINV_REPORT_HPP
