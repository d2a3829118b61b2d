#pragma once

/**
 * @file polyterm.hpp
 * @brief Sparse multivariate polynomials with exact rational coefficients,
 * term sorting under a vector order, and leading terms.
 *
 * Text grammar (whitespace ignored):
 *
 *   poly   := [sign] term (sign term)*
 *   sign   := '+' | '-'            (U+2212 is accepted for '-')
 *   term   := coef ['*' factors] | factors
 *   coef   := digits ['/' digits]
 *   factors:= factor ('*' factor)*
 *   factor := var ['^' digits]
 *   var    := 'X' digits | 'X' | 'Y' | 'Z'
 *
 * X, Y, Z alias X0, X1, X2 and are only accepted when d <= 3.
 */

#include <boost/rational.hpp>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "monorder/family.hpp"
#include "monorder/lex.hpp"

namespace monorder {

using Coefficient = boost::rational<std::int64_t>;

struct Term {
  MultiIndex exponents;
  Coefficient coefficient;

  friend bool operator==(const Term&, const Term&) = default;
};

class SparsePoly {
 public:
  explicit SparsePoly(std::size_t dimension) : dimension_(dimension) {}

  std::size_t dimension() const { return dimension_; }
  const std::map<MultiIndex, Coefficient>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Adds c * X^exponents, merging like terms and dropping zeros.
  void add_term(const MultiIndex& exponents, const Coefficient& c);

  friend bool operator==(const SparsePoly&, const SparsePoly&) = default;

 private:
  std::size_t dimension_;
  std::map<MultiIndex, Coefficient> terms_;
};

class PolyParseError : public std::runtime_error {
 public:
  PolyParseError(std::size_t position, const std::string& what)
      : std::runtime_error("parse error at position " + std::to_string(position) + ": " + what),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

struct PolyParseInfo {
  bool used_aliases = false;
};

SparsePoly parse_poly(std::string_view text, std::size_t dimension,
                      PolyParseInfo* info = nullptr);

enum class VariableStyle { indexed, xyz };

/// Canonical text of a term sequence, e.g. "Z^3 - 2*X*Y + 1/2". Empty -> "0".
/// The xyz style requires dimension <= 3.
std::string format_terms(const std::vector<Term>& terms, VariableStyle style);

/// Terms ascending under a strict total order on exponent families.
std::vector<Term> sort_terms(const SparsePoly& p, const VectorRelation<Nat>& order);

/// Greatest term under the order; nothing for the zero polynomial.
std::optional<Term> leading_term(const SparsePoly& p, const VectorRelation<Nat>& order);

/// p * X^gamma.
SparsePoly multiply_by_monomial(const SparsePoly& p, const MultiIndex& gamma);

}  // namespace monorder
