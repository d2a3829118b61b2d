#pragma once

/**
 * @file lex.hpp
 * @brief Lexicographic comparators on families: lex, colex, symlex, revlex.
 *
 * One definition covers strict and nonstrict scalar relations: items are
 * compared with R only when they differ (under the supplied equality), and
 * two families with no differing item are related iff R is declared
 * reflexive. The length-0 case is therefore "R is reflexive".
 */

#include <cstddef>
#include <functional>
#include <utility>

#include "monorder/family.hpp"
#include "monorder/relation.hpp"

namespace monorder {

template <class T>
using VectorRelation = Relation<Family<T>>;

/// Wraps a length-checked predicate into a VectorRelation.
template <class T, class F>
VectorRelation<T> make_vector_relation(F f, bool declared_reflexive, std::string name) {
  return {[f = std::move(f)](const Family<T>& x, const Family<T>& y) {
            require_same_length(x.size(), y.size());
            return f(x, y);
          },
          declared_reflexive, std::move(name)};
}

/// Literal recursion on the head item. Kept as the reference the iterative
/// comparators are tested against.
template <class T>
bool lex_recursive(const Relation<T>& r, const Equality<T>& eq, std::span<const T> x,
                   std::span<const T> y) {
  require_same_length(x.size(), y.size());
  if (x.empty()) return r.declared_reflexive;
  if (!eq(x[0], y[0])) return r(x[0], y[0]);
  return lex_recursive(r, eq, x.subspan(1), y.subspan(1));
}

/// Lexicographic order: the first differing item decides.
template <class T>
VectorRelation<T> lex(Relation<T> r, Equality<T> eq = std::equal_to<T>{}) {
  auto name = "lex(" + r.name + ")";
  const bool refl = r.declared_reflexive;
  return make_vector_relation<T>(
      [r = std::move(r), eq = std::move(eq)](const Family<T>& x, const Family<T>& y) {
        for (std::size_t i = 0; i < x.size(); ++i) {
          if (!eq(x[i], y[i])) return r(x[i], y[i]);
        }
        return r.declared_reflexive;
      },
      refl, std::move(name));
}

/// Compares the reversed families.
template <class T>
VectorRelation<T> reverse_rel(VectorRelation<T> rn) {
  auto name = "reverse(" + rn.name + ")";
  const bool refl = rn.declared_reflexive;
  return make_vector_relation<T>(
      [rn = std::move(rn)](const Family<T>& x, const Family<T>& y) {
        return rn(reverse_family(x), reverse_family(y));
      },
      refl, std::move(name));
}

/// Colexicographic order: the last differing item decides. Equivalent to
/// reverse_rel(lex(r)) without materializing the reversed families.
template <class T>
VectorRelation<T> colex(Relation<T> r, Equality<T> eq = std::equal_to<T>{}) {
  auto name = "colex(" + r.name + ")";
  const bool refl = r.declared_reflexive;
  return make_vector_relation<T>(
      [r = std::move(r), eq = std::move(eq)](const Family<T>& x, const Family<T>& y) {
        for (std::size_t i = x.size(); i > 0; --i) {
          if (!eq(x[i - 1], y[i - 1])) return r(x[i - 1], y[i - 1]);
        }
        return r.declared_reflexive;
      },
      refl, std::move(name));
}

template <class T>
VectorRelation<T> symlex(Relation<T> r, Equality<T> eq = std::equal_to<T>{}) {
  auto name = "symlex(" + r.name + ")";
  auto out = converse(lex(std::move(r), std::move(eq)));
  out.name = std::move(name);
  return out;
}

template <class T>
VectorRelation<T> revlex(Relation<T> r, Equality<T> eq = std::equal_to<T>{}) {
  auto name = "revlex(" + r.name + ")";
  auto out = converse(colex(std::move(r), std::move(eq)));
  out.name = std::move(name);
  return out;
}

}  // namespace monorder
