#include "monorder/polyterm.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>

namespace monorder {

void SparsePoly::add_term(const MultiIndex& exponents, const Coefficient& c) {
  require_same_length(exponents.size(), dimension_);
  // Boost 1.74 rational == int recurses forever under C++20, so compare
  // against Coefficient values throughout.
  if (c == Coefficient(0)) return;
  auto [it, inserted] = terms_.try_emplace(exponents, c);
  if (!inserted) {
    it->second += c;
    if (it->second == Coefficient(0)) terms_.erase(it);
  }
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, std::size_t d, PolyParseInfo* info)
      : text_(text), d_(d), info_(info), poly_(d) {}

  SparsePoly parse() {
    skip_ws();
    if (at_end()) fail("empty input");
    bool negative = false;
    if (auto s = sign()) negative = *s;
    term(negative);
    while (true) {
      skip_ws();
      if (at_end()) break;
      auto s = sign();
      if (!s) fail("expected '+' or '-'");
      term(*s);
    }
    return std::move(poly_);
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw PolyParseError(pos_, msg); }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  // Returns true for minus, false for plus, nothing if no sign here.
  std::optional<bool> sign() {
    skip_ws();
    if (peek() == '+') {
      ++pos_;
      return false;
    }
    if (peek() == '-') {
      ++pos_;
      return true;
    }
    if (text_.substr(pos_, 3) == "\xE2\x88\x92") {
      pos_ += 3;
      return true;
    }
    return std::nullopt;
  }

  std::int64_t number() {
    skip_ws();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a number");
    std::int64_t v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      const int digit = text_[pos_] - '0';
      if (v > (std::numeric_limits<std::int64_t>::max() - digit) / 10) fail("number too large");
      v = v * 10 + digit;
      ++pos_;
    }
    return v;
  }

  void term(bool negative) {
    skip_ws();
    Coefficient coef = 1;
    std::vector<Nat> exps(d_, 0);
    bool need_factor = true;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      const auto num = number();
      std::int64_t den = 1;
      skip_ws();
      if (peek() == '/') {
        ++pos_;
        const auto at = pos_;
        den = number();
        if (den == 0) throw PolyParseError(at, "zero denominator");
      }
      coef = Coefficient(num, den);
      skip_ws();
      if (peek() != '*') need_factor = false;
      else ++pos_;
    }
    while (need_factor) {
      factor(exps);
      skip_ws();
      if (peek() != '*') break;
      ++pos_;
    }
    poly_.add_term(MultiIndex(std::move(exps)), negative ? -coef : coef);
  }

  void factor(std::vector<Nat>& exps) {
    skip_ws();
    const auto start = pos_;
    std::size_t index = 0;
    const char c = peek();
    if (c == 'X' && std::isdigit(static_cast<unsigned char>(
                        pos_ + 1 < text_.size() ? text_[pos_ + 1] : '\0'))) {
      ++pos_;
      index = static_cast<std::size_t>(number());
    } else if (c == 'X' || c == 'Y' || c == 'Z') {
      ++pos_;
      if (d_ > 3) throw PolyParseError(start, "aliases X, Y, Z need dimension <= 3");
      index = static_cast<std::size_t>(c - 'X');
      if (info_) info_->used_aliases = true;
    } else {
      fail("expected a variable");
    }
    if (index >= d_) {
      throw PolyParseError(start, "variable index " + std::to_string(index) +
                                      " out of range for dimension " + std::to_string(d_));
    }
    Nat e = 1;
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      e = static_cast<Nat>(number());
    }
    exps[index] += e;
  }

  std::string_view text_;
  std::size_t d_;
  PolyParseInfo* info_;
  SparsePoly poly_;
  std::size_t pos_ = 0;
};

void write_rational(std::ostream& os, const Coefficient& c) {
  os << c.numerator();
  if (c.denominator() != 1) os << '/' << c.denominator();
}

}  // namespace

SparsePoly parse_poly(std::string_view text, std::size_t dimension, PolyParseInfo* info) {
  return PolyParser(text, dimension, info).parse();
}

std::string format_terms(const std::vector<Term>& terms, VariableStyle style) {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms) {
    Coefficient c = t.coefficient;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;

    std::vector<std::string> factors;
    for (std::size_t i = 0; i < t.exponents.size(); ++i) {
      const Nat e = t.exponents[i];
      if (e == 0) continue;
      std::string f = style == VariableStyle::xyz ? std::string(1, static_cast<char>('X' + i))
                                                  : "X" + std::to_string(i);
      if (e > 1) f += "^" + std::to_string(e);
      factors.push_back(std::move(f));
    }
    if (factors.empty()) {
      write_rational(os, c);
      continue;
    }
    if (c != Coefficient(1)) {
      write_rational(os, c);
      os << '*';
    }
    for (std::size_t i = 0; i < factors.size(); ++i) os << (i ? "*" : "") << factors[i];
  }
  return os.str();
}

std::vector<Term> sort_terms(const SparsePoly& p, const VectorRelation<Nat>& order) {
  std::vector<Term> out;
  out.reserve(p.size());
  for (const auto& [e, c] : p.terms()) out.push_back({e, c});
  std::stable_sort(out.begin(), out.end(),
                   [&](const Term& a, const Term& b) { return order(a.exponents, b.exponents); });
  return out;
}

std::optional<Term> leading_term(const SparsePoly& p, const VectorRelation<Nat>& order) {
  std::optional<Term> best;
  for (const auto& [e, c] : p.terms()) {
    if (!best || order(best->exponents, e)) best = Term{e, c};
  }
  return best;
}

SparsePoly multiply_by_monomial(const SparsePoly& p, const MultiIndex& gamma) {
  require_same_length(gamma.size(), p.dimension());
  SparsePoly out(p.dimension());
  for (const auto& [e, c] : p.terms()) {
    std::vector<Nat> shifted(e.begin(), e.end());
    for (std::size_t i = 0; i < shifted.size(); ++i) shifted[i] += gamma[i];
    out.add_term(MultiIndex(std::move(shifted)), c);
  }
  return out;
}

}  // namespace monorder
