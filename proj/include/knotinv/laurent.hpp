#ifndef KNOTINV_LAURENT_HPP
#define KNOTINV_LAURENT_HPP

#include <cstdint>
#include <cstdlib>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "knotinv/error.hpp"

namespace knotinv {

/// Formal variable of a Laurent polynomial.  For `t_half` every stored exponent
/// counts half-powers of t, so t^{3/2} is stored at exponent 3.
enum class Variable { A, t_half };

inline const char* variable_name(Variable v) { return v == Variable::A ? "A" : "t_half"; }

/// Gaussian integer re + im*i.
struct Gaussian {
  std::int64_t re = 0;
  std::int64_t im = 0;
  friend bool operator==(const Gaussian&, const Gaussian&) = default;
};

/// Sparse Laurent polynomial with integer coefficients.  Zero coefficients are
/// never stored, so two polynomials are equal iff their term maps are equal.
class LaurentPoly {
 public:
  using Terms = std::map<int, std::int64_t>;

  explicit LaurentPoly(Variable var = Variable::A) : var_(var) {}
  LaurentPoly(Variable var, std::initializer_list<std::pair<const int, std::int64_t>> terms)
      : var_(var) {
    for (const auto& [e, c] : terms) add_term(e, c);
  }

  static LaurentPoly constant(Variable var, std::int64_t c) {
    LaurentPoly p(var);
    p.add_term(0, c);
    return p;
  }
  static LaurentPoly monomial(Variable var, int exponent, std::int64_t c = 1) {
    LaurentPoly p(var);
    p.add_term(exponent, c);
    return p;
  }

  Variable variable() const { return var_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  int min_exponent() const {
    require_nonzero();
    return terms_.begin()->first;
  }
  int max_exponent() const {
    require_nonzero();
    return terms_.rbegin()->first;
  }
  std::int64_t lowest_coefficient() const {
    require_nonzero();
    return terms_.begin()->second;
  }
  std::int64_t highest_coefficient() const {
    require_nonzero();
    return terms_.rbegin()->second;
  }
  std::int64_t coefficient(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? 0 : it->second;
  }

  void add_term(int exponent, std::int64_t c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(exponent, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    check_same(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    check_same(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    a.check_same(b);
    LaurentPoly out(a.var_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
    return out;
  }
  LaurentPoly operator-() const {
    LaurentPoly out(var_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
  }

  LaurentPoly pow(unsigned n) const {
    LaurentPoly out = constant(var_, 1);
    for (unsigned i = 0; i < n; ++i) out = out * *this;
    return out;
  }

  /// Substitutes var -> var^{-1}.
  LaurentPoly negate_exponents() const {
    LaurentPoly out(var_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(-e, c);
    return out;
  }

  /// Multiplies every exponent by `factor` and relabels the variable.
  LaurentPoly rescale(int factor, Variable to) const {
    LaurentPoly out(to);
    for (const auto& [e, c] : terms_) out.add_term(e * factor, c);
    return out;
  }

  /// Evaluates at the point where one unit of exponent maps to i, i.e. A = i
  /// or t^{1/2} = i.  Exact in Gaussian integers.
  Gaussian evaluate_at_i() const {
    Gaussian g;
    for (const auto& [e, c] : terms_) {
      switch (((e % 4) + 4) % 4) {
        case 0: g.re += c; break;
        case 1: g.im += c; break;
        case 2: g.re -= c; break;
        case 3: g.im -= c; break;
      }
    }
    return g;
  }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.var_ == b.var_ && a.terms_ == b.terms_;
  }

  /// Canonical text, highest exponent first: `-1*A^5 + -1*A^-3 + 1*A^-7`.
  /// Half-integral powers of t print as `t^{k/2}`.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      if (!out.empty()) out += " + ";
      out += std::to_string(it->second);
      out += '*';
      out += var_ == Variable::A ? "A^" : "t^";
      out += exponent_text(it->first);
    }
    return out;
  }

  /// Ascending (exponent, coefficient) pairs, the JSON "terms" payload.
  std::vector<std::pair<int, std::int64_t>> ascending_terms() const {
    return {terms_.begin(), terms_.end()};
  }

 private:
  std::string exponent_text(int e) const {
    if (var_ == Variable::A) return std::to_string(e);
    if (e % 2 == 0) return std::to_string(e / 2);
    return "{" + std::to_string(e) + "/2}";
  }
  void check_same(const LaurentPoly& o) const {
    if (o.var_ != var_) throw PreconditionError("mixing Laurent polynomials in different variables");
  }
  void require_nonzero() const {
    if (terms_.empty()) throw PreconditionError("zero polynomial has no extreme terms");
  }

  Variable var_;
  Terms terms_;
};

}  // namespace knotinv

#endif  // KNOTINV_LAURENT_HPP
