#pragma once

/**
 * @file relation.hpp
 * @brief Binary relations as values, their basic operators, and brute-force
 * deciders for elementary and conjunctive properties over finite carriers.
 *
 * Every decider quantifies over the carrier exactly as the property is
 * stated; no shortcut is taken from one property to another, so the
 * equivalence lemmas between them can be checked independently.
 */

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace monorder {

/// A pure binary predicate plus the metadata combinators need.
///
/// `declared_reflexive` is only consulted where the empty family is compared
/// (lexicographic base case); it is not inferred from `apply`.
template <class T>
struct Relation {
  using value_type = T;
  using Predicate = std::function<bool(const T&, const T&)>;

  Predicate apply;
  bool declared_reflexive = false;
  std::string name;

  bool operator()(const T& x, const T& y) const { return apply(x, y); }
};

template <class T>
using Equality = std::function<bool(const T&, const T&)>;

/// Finite domain for exhaustive property checks.
template <class T>
class FiniteCarrier {
 public:
  explicit FiniteCarrier(std::vector<T> elements, Equality<T> eq = std::equal_to<T>{})
      : elements_(std::move(elements)), eq_(std::move(eq)) {
    for (std::size_t i = 0; i < elements_.size(); ++i) {
      for (std::size_t j = i + 1; j < elements_.size(); ++j) {
        if (eq_(elements_[i], elements_[j])) {
          throw std::invalid_argument("FiniteCarrier: duplicate element");
        }
      }
    }
  }

  const std::vector<T>& elements() const { return elements_; }
  const Equality<T>& eq() const { return eq_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }

 private:
  std::vector<T> elements_;
  Equality<T> eq_;
};

// ---------------------------------------------------------------------------
// Operators

template <class T>
Relation<T> converse(Relation<T> r) {
  auto name = "converse(" + r.name + ")";
  auto reflexive = r.declared_reflexive;
  return {[r = std::move(r)](const T& x, const T& y) { return r.apply(y, x); }, reflexive,
          std::move(name)};
}

/// Pointwise negation. The reflexivity flag of the result cannot be derived
/// in general and is supplied by the caller.
template <class T>
Relation<T> complementary(Relation<T> r, bool declared_reflexive) {
  auto name = "complementary(" + r.name + ")";
  return {[r = std::move(r)](const T& x, const T& y) { return !r.apply(x, y); },
          declared_reflexive, std::move(name)};
}

/// Reflexive closure: x = y or R x y.
template <class T>
Relation<T> or_equal(Relation<T> r, Equality<T> eq = std::equal_to<T>{}) {
  auto name = "or_equal(" + r.name + ")";
  return {[r = std::move(r), eq = std::move(eq)](const T& x, const T& y) {
            return eq(x, y) || r.apply(x, y);
          },
          true, std::move(name)};
}

template <class T>
Relation<T> union_of(Relation<T> a, Relation<T> b, bool declared_reflexive) {
  auto name = "union(" + a.name + ", " + b.name + ")";
  return {[a = std::move(a), b = std::move(b)](const T& x, const T& y) {
            return a.apply(x, y) || b.apply(x, y);
          },
          declared_reflexive, std::move(name)};
}

template <class T>
Relation<T> intersection_of(Relation<T> a, Relation<T> b, bool declared_reflexive) {
  auto name = "intersection(" + a.name + ", " + b.name + ")";
  return {[a = std::move(a), b = std::move(b)](const T& x, const T& y) {
            return a.apply(x, y) && b.apply(x, y);
          },
          declared_reflexive, std::move(name)};
}

// ---------------------------------------------------------------------------
// Property deciders
//
// `find_violation` returns the first counterexample in carrier order
// (1, 2 or 3 elements depending on the arity of the quantifier), or nothing
// if the property holds. The `is_*` forms are the boolean views.

enum class Property {
  transitive,
  negatively_transitive,
  reflexive,
  irreflexive,
  antisymmetric,
  asymmetric,
  connected,
  strongly_connected,
  trichotomous,
  total_order,
  strict_total_order,
  strict_weak_order,
  preorder,
  partial_order,
};

inline const char* to_string(Property p) {
  switch (p) {
    case Property::transitive: return "transitive";
    case Property::negatively_transitive: return "negatively_transitive";
    case Property::reflexive: return "reflexive";
    case Property::irreflexive: return "irreflexive";
    case Property::antisymmetric: return "antisymmetric";
    case Property::asymmetric: return "asymmetric";
    case Property::connected: return "connected";
    case Property::strongly_connected: return "strongly_connected";
    case Property::trichotomous: return "trichotomous";
    case Property::total_order: return "total_order";
    case Property::strict_total_order: return "strict_total_order";
    case Property::strict_weak_order: return "strict_weak_order";
    case Property::preorder: return "preorder";
    case Property::partial_order: return "partial_order";
  }
  return "?";
}

inline std::optional<Property> property_from_string(const std::string& s) {
  for (int i = 0; i <= static_cast<int>(Property::partial_order); ++i) {
    auto p = static_cast<Property>(i);
    if (s == to_string(p)) return p;
  }
  return std::nullopt;
}

/// The elementary properties a conjunctive property is defined from, in the
/// order they are stated. Elementary properties map to themselves.
inline std::vector<Property> conjuncts(Property p) {
  using P = Property;
  switch (p) {
    case P::total_order:
      return {P::transitive, P::reflexive, P::antisymmetric, P::strongly_connected,
              P::negatively_transitive, P::connected};
    case P::strict_total_order:
      return {P::transitive, P::irreflexive, P::asymmetric, P::connected,
              P::negatively_transitive, P::antisymmetric, P::trichotomous};
    case P::strict_weak_order:
      return {P::negatively_transitive, P::irreflexive, P::asymmetric, P::transitive,
              P::antisymmetric};
    case P::preorder:
      return {P::reflexive, P::transitive};
    case P::partial_order:
      return {P::reflexive, P::antisymmetric, P::transitive};
    default:
      return {p};
  }
}

inline bool is_elementary(Property p) {
  auto c = conjuncts(p);
  return c.size() == 1 && c.front() == p;
}

template <class T>
struct Violation {
  Property property;
  std::vector<T> witness;
};

namespace detail {

template <class T>
std::optional<std::vector<T>> elementary_violation(Property p, const Relation<T>& r,
                                                   const FiniteCarrier<T>& c) {
  const auto& xs = c.elements();
  const auto& eq = c.eq();
  using P = Property;
  switch (p) {
    case P::reflexive:
      for (const auto& x : xs)
        if (!r(x, x)) return std::vector<T>{x};
      return std::nullopt;
    case P::irreflexive:
      for (const auto& x : xs)
        if (r(x, x)) return std::vector<T>{x};
      return std::nullopt;
    default:
      break;
  }

  if (p == P::transitive || p == P::negatively_transitive) {
    const bool positive = p == P::transitive;
    for (const auto& x : xs)
      for (const auto& y : xs) {
        if (r(x, y) != positive) continue;
        for (const auto& z : xs) {
          if (r(y, z) == positive && r(x, z) != positive) return std::vector<T>{x, y, z};
        }
      }
    return std::nullopt;
  }

  for (const auto& x : xs)
    for (const auto& y : xs) {
      const bool xy = r(x, y);
      const bool yx = r(y, x);
      const bool same = eq(x, y);
      bool ok = true;
      switch (p) {
        case P::antisymmetric: ok = !(xy && yx) || same; break;
        case P::asymmetric: ok = !xy || !yx; break;
        case P::connected: ok = same || xy || yx; break;
        case P::strongly_connected: ok = xy || yx; break;
        case P::trichotomous:
          ok = (same && !xy && !yx) || (!same && xy && !yx) || (!same && yx && !xy);
          break;
        default: throw std::logic_error("elementary_violation: not elementary");
      }
      if (!ok) return std::vector<T>{x, y};
    }
  return std::nullopt;
}

}  // namespace detail

template <class T>
std::optional<Violation<T>> find_violation(Property p, const Relation<T>& r,
                                           const FiniteCarrier<T>& c) {
  for (auto e : conjuncts(p)) {
    if (auto w = detail::elementary_violation(e, r, c)) return Violation<T>{e, std::move(*w)};
  }
  return std::nullopt;
}

template <class T>
bool holds(Property p, const Relation<T>& r, const FiniteCarrier<T>& c) {
  return !find_violation(p, r, c).has_value();
}

template <class T>
bool is_transitive(const Relation<T>& r, const FiniteCarrier<T>& c) {
  return holds(Property::transitive, r, c);
}
template <class T>
bool is_negatively_transitive(const Relation<T>& r, const FiniteCarrier<T>& c) {
  return holds(Property::negatively_transitive, r, c);
}
template <class T>
bool is_reflexive(const Relation<T>& r, const FiniteCarrier<T>& c) {
  return holds(Property::reflexive, r, c);
}
template <class T>
bool is_irreflexive(const Relation<T>& r, const FiniteCarrier<T>& c) {
  return holds(Property::irreflexive, r, c);
}
template <class T>
bool is_antisymmetric(const Relation<T>& r, const FiniteCarrier<T>& c) {
  return holds(Property::antisymmetric, r, c);
}
template <class T>
bool is_asymmetric(const Relation<T>& r, const FiniteCarrier<T>& c) {
  return holds(Property::asymmetric, r, c);
}
template <class T>
bool is_connected(const Relation<T>& r, const FiniteCarrier<T>& c) {
  return holds(Property::connected, r, c);
}
template <class T>
bool is_strongly_connected(const Relation<T>& r, const FiniteCarrier<T>& c) {
  return holds(Property::strongly_connected, r, c);
}
template <class T>
bool is_trichotomous(const Relation<T>& r, const FiniteCarrier<T>& c) {
  return holds(Property::trichotomous, r, c);
}
template <class T>
bool is_total_order(const Relation<T>& r, const FiniteCarrier<T>& c) {
  return holds(Property::total_order, r, c);
}
template <class T>
bool is_strict_total_order(const Relation<T>& r, const FiniteCarrier<T>& c) {
  return holds(Property::strict_total_order, r, c);
}
template <class T>
bool is_strict_weak_order(const Relation<T>& r, const FiniteCarrier<T>& c) {
  return holds(Property::strict_weak_order, r, c);
}

/// Pointwise agreement of two relations on every pair of the carrier.
template <class T>
bool extensionally_equal(const Relation<T>& a, const Relation<T>& b, const FiniteCarrier<T>& c) {
  for (const auto& x : c.elements())
    for (const auto& y : c.elements())
      if (a(x, y) != b(x, y)) return false;
  return true;
}

}  // namespace monorder
