#ifndef KNOTINV_POLY_TEXT_HPP
#define KNOTINV_POLY_TEXT_HPP

#include <cctype>
#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

#include "knotinv/error.hpp"
#include "knotinv/laurent.hpp"

namespace knotinv {

namespace detail {

class PolyScanner {
 public:
  explicit PolyScanner(std::string_view text) : text_(text) {}

  LaurentPoly parse() {
    LaurentPoly out(Variable::t_half);
    skip_space();
    if (done()) fail("empty polynomial");
    bool first = true;
    while (!done()) {
      int sign = 1;
      bool had_sign = false;
      while (!done() && (peek() == '+' || peek() == '-')) {
        if (take() == '-') sign = -sign;
        had_sign = true;
        skip_space();
      }
      if (!first && !had_sign) fail("expected '+' or '-'");
      first = false;
      const auto [exponent, coeff] = monomial();
      out.add_term(exponent, sign * coeff);
      skip_space();
    }
    return out;
  }

 private:
  // Returns (exponent in half-powers, coefficient).
  std::pair<int, std::int64_t> monomial() {
    std::int64_t coeff = 1;
    bool has_coeff = false;
    if (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = integer();
      has_coeff = true;
      skip_space();
      if (!done() && peek() == '*') {
        take();
        skip_space();
        if (done() || peek() != 't') fail("expected 't' after '*'");
      }
    }
    if (done() || peek() != 't') {
      if (!has_coeff) fail("expected a coefficient or 't'");
      return {0, coeff};
    }
    take();
    skip_space();
    if (done() || peek() != '^') return {2, coeff};
    take();
    skip_space();
    const bool braced = !done() && peek() == '{';
    if (braced) take();
    skip_space();
    int sign = 1;
    if (!done() && (peek() == '-' || peek() == '+')) sign = take() == '-' ? -1 : 1;
    skip_space();
    if (done() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an exponent");
    const std::int64_t num = integer();
    skip_space();
    int halves = 0;
    if (!done() && peek() == '/') {
      take();
      skip_space();
      if (done() || !std::isdigit(static_cast<unsigned char>(peek())) || integer() != 2)
        fail("only halves are allowed as fractional exponents");
      halves = static_cast<int>(sign * num);
    } else {
      halves = static_cast<int>(2 * sign * num);
    }
    skip_space();
    if (braced) {
      if (done() || peek() != '}') fail("expected '}'");
      take();
    }
    return {halves, coeff};
  }

  std::int64_t integer() {
    const std::size_t start = pos_;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, v);
    if (ec != std::errc{}) fail("integer out of range");
    (void)ptr;
    return v;
  }

  void skip_space() {
    while (!done() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  char take() { return text_[pos_++]; }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses a polynomial in t such as "-2t^{-8}+ 4t^{-7} - 2", "t + t^3 - t^4"
/// or "1*t^{3/2} + -1*t^{5/2}".  Repeated exponents are summed.
inline LaurentPoly parse_poly(std::string_view text) { return detail::PolyScanner(text).parse(); }

/// Conventional rendering, highest power last: "2t^2 - 3t^3 + 5t^4".
inline std::string format_poly(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  const char* var = p.variable() == Variable::A ? "A" : "t";
  std::string out;
  for (const auto& [e, c] : p.terms()) {
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    const std::int64_t mag = c < 0 ? -c : c;
    const int shown = p.variable() == Variable::A ? e : e / 2;
    const bool half = p.variable() == Variable::t_half && e % 2 != 0;
    if (mag != 1 || e == 0) out += std::to_string(mag);
    if (e == 0) continue;
    out += var;
    if (half)
      out += "^{" + std::to_string(e) + "/2}";
    else if (shown != 1)
      out += shown < 0 ? "^{" + std::to_string(shown) + "}" : "^" + std::to_string(shown);
  }
  return out;
}

}  // namespace knotinv

#endif  // KNOTINV_POLY_TEXT_HPP
