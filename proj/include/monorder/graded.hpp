#pragma once

/**
 * @file graded.hpp
 * @brief Abelian monoids, monomial-order deciders, and graded orders.
 *
 * `graded(M, R, Rn)` compares family sums with the scalar relation R and
 * breaks ties between equal sums with the vector relation Rn. The four named
 * graded orders are compositions of it with the lexicographic family.
 * Recursive characterizations are provided separately so they can be checked
 * against the compositions.
 */

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "monorder/family.hpp"
#include "monorder/lex.hpp"
#include "monorder/relation.hpp"

namespace monorder {

/// Commutative monoid: identity, associative-commutative operation, equality.
template <class G>
struct MonoidSpec {
  G identity{};
  std::function<G(const G&, const G&)> op;
  Equality<G> eq = std::equal_to<G>{};
};

inline MonoidSpec<Nat> nat_add_monoid() {
  return {0, [](Nat a, Nat b) { return a + b; }, std::equal_to<Nat>{}};
}

/// (N, max, 0): commutative but not cancellative.
inline MonoidSpec<Nat> nat_max_monoid() {
  return {0, [](Nat a, Nat b) { return a > b ? a : b; }, std::equal_to<Nat>{}};
}

/// Z/nZ under addition, elements represented by 0..n-1.
inline MonoidSpec<Nat> zmod_monoid(Nat n) {
  return {0, [n](Nat a, Nat b) { return (a + b) % n; }, std::equal_to<Nat>{}};
}

/// Checks associativity, commutativity and neutrality of the identity on
/// every tuple of the carrier. Results of `op` need not lie in the carrier.
template <class G>
bool satisfies_monoid_laws(const MonoidSpec<G>& m, const FiniteCarrier<G>& c) {
  for (const auto& x : c.elements()) {
    if (!m.eq(m.op(m.identity, x), x) || !m.eq(m.op(x, m.identity), x)) return false;
    for (const auto& y : c.elements()) {
      if (!m.eq(m.op(x, y), m.op(y, x))) return false;
      for (const auto& z : c.elements()) {
        if (!m.eq(m.op(m.op(x, y), z), m.op(x, m.op(y, z)))) return false;
      }
    }
  }
  return true;
}

template <class G>
G family_sum(std::span<const G> a, const MonoidSpec<G>& m) {
  G acc = m.identity;
  for (const auto& v : a) acc = m.op(acc, v);
  return acc;
}

template <class G>
G family_sum(const Family<G>& a, const MonoidSpec<G>& m) {
  return family_sum(a.items(), m);
}

/// Componentwise monoid operation on families of equal length.
template <class G>
Family<G> family_add(const Family<G>& a, const Family<G>& b, const MonoidSpec<G>& m) {
  require_same_length(a.size(), b.size());
  std::vector<G> out;
  out.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(m.op(a[i], b[i]));
  return Family<G>(std::move(out));
}

/// The product monoid on families of length `n`.
template <class G>
MonoidSpec<Family<G>> family_monoid(MonoidSpec<G> m, std::size_t n) {
  Family<G> zero(std::vector<G>(n, m.identity));
  auto eq = m.eq;
  return {std::move(zero),
          [m](const Family<G>& a, const Family<G>& b) { return family_add(a, b, m); },
          [eq](const Family<G>& a, const Family<G>& b) {
            if (a.size() != b.size()) return false;
            for (std::size_t i = 0; i < a.size(); ++i)
              if (!eq(a[i], b[i])) return false;
            return true;
          }};
}

template <class G>
Equality<Family<G>> family_equality(Equality<G> eq) {
  return [eq = std::move(eq)](const Family<G>& a, const Family<G>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (!eq(a[i], b[i])) return false;
    return true;
  };
}

// ---------------------------------------------------------------------------
// Graded operator

template <class G>
struct GradedSpec {
  MonoidSpec<G> monoid;
  Relation<G> scalar;
  VectorRelation<G> vector;
};

/// Different sums are compared by `scalar`; equal sums defer to `vector`.
/// Reflexivity follows the tie-breaking relation.
template <class G>
VectorRelation<G> graded(GradedSpec<G> spec) {
  auto name = "graded(" + spec.scalar.name + ", " + spec.vector.name + ")";
  const bool refl = spec.vector.declared_reflexive;
  return make_vector_relation<G>(
      [spec = std::move(spec)](const Family<G>& x, const Family<G>& y) {
        const G sx = family_sum(x, spec.monoid);
        const G sy = family_sum(y, spec.monoid);
        if (!spec.monoid.eq(sx, sy)) return spec.scalar(sx, sy);
        return spec.vector(x, y);
      },
      refl, std::move(name));
}

template <class G>
VectorRelation<G> graded(MonoidSpec<G> m, Relation<G> scalar, VectorRelation<G> vector) {
  return graded(GradedSpec<G>{std::move(m), std::move(scalar), std::move(vector)});
}

namespace detail {
template <class G>
VectorRelation<G> named(VectorRelation<G> r, std::string name) {
  r.name = std::move(name);
  return r;
}
}  // namespace detail

template <class G>
VectorRelation<G> grlex(Relation<G> r, MonoidSpec<G> m) {
  auto name = "grlex(" + r.name + ")";
  auto eq = m.eq;
  return detail::named(graded(std::move(m), r, lex(r, eq)), std::move(name));
}

template <class G>
VectorRelation<G> grcolex(Relation<G> r, MonoidSpec<G> m) {
  auto name = "grcolex(" + r.name + ")";
  auto eq = m.eq;
  return detail::named(graded(std::move(m), r, colex(r, eq)), std::move(name));
}

template <class G>
VectorRelation<G> grsymlex(Relation<G> r, MonoidSpec<G> m) {
  auto name = "grsymlex(" + r.name + ")";
  auto eq = m.eq;
  return detail::named(graded(std::move(m), r, symlex(r, eq)), std::move(name));
}

template <class G>
VectorRelation<G> grevlex(Relation<G> r, MonoidSpec<G> m) {
  auto name = "grevlex(" + r.name + ")";
  auto eq = m.eq;
  return detail::named(graded(std::move(m), r, revlex(r, eq)), std::move(name));
}

// ---------------------------------------------------------------------------
// Recursive characterizations.
//
// These hold when R is a monomial order and the monoid is cancellative. The
// length-0 base case returns R.declared_reflexive, like lex, which makes the
// simplified forms agree with the compositions for nonstrict R as well.

namespace detail {

enum class Peel { front, back };

// Equal sums: drop one end item and recurse. When the dropped items differ
// the remaining sums differ, and R on those sums decides.
template <class G>
bool graded_peel(const Relation<G>& r, const MonoidSpec<G>& m, Peel peel,
                 std::span<const G> x, std::span<const G> y) {
  if (x.empty()) return r.declared_reflexive;
  const G sx = family_sum(x, m);
  const G sy = family_sum(y, m);
  if (!m.eq(sx, sy)) return r(sx, sy);
  const std::size_t n = x.size() - 1;
  if (peel == Peel::front) return graded_peel(r, m, peel, x.subspan(1), y.subspan(1));
  return graded_peel(r, m, peel, x.first(n), y.first(n));
}

template <class G>
bool grsymlex_full_rec(const Relation<G>& r, const MonoidSpec<G>& m, std::span<const G> x,
                       std::span<const G> y) {
  if (x.empty()) return r.declared_reflexive;
  const G sx = family_sum(x, m);
  const G sy = family_sum(y, m);
  if (!m.eq(sx, sy)) return r(sx, sy);
  if (!m.eq(x[0], y[0])) return r(y[0], x[0]);
  return grsymlex_full_rec(r, m, x.subspan(1), y.subspan(1));
}

template <class G>
bool grlex_inline_rec(const Relation<G>& r, const MonoidSpec<G>& m, Peel peel,
                      std::span<const G> x, std::span<const G> y) {
  if (x.empty()) return false;
  const G sx = family_sum(x, m);
  const G sy = family_sum(y, m);
  if (!m.eq(sx, sy)) return r(sx, sy);
  const std::size_t n = x.size() - 1;
  const std::size_t k = peel == Peel::front ? 0 : n;
  if (r(x[k], y[k])) return true;
  if (!m.eq(x[k], y[k]) || n == 0) return false;
  if (peel == Peel::front) return grlex_inline_rec(r, m, peel, x.subspan(1), y.subspan(1));
  return grlex_inline_rec(r, m, peel, x.first(n), y.first(n));
}

}  // namespace detail

/// grsymlex by recursion on the tail: sums first, then the tails.
template <class G>
VectorRelation<G> grsymlex_rec(Relation<G> r, MonoidSpec<G> m) {
  auto name = "grsymlex_rec(" + r.name + ")";
  const bool refl = r.declared_reflexive;
  return make_vector_relation<G>(
      [r = std::move(r), m = std::move(m)](const Family<G>& x, const Family<G>& y) {
        return detail::graded_peel(r, m, detail::Peel::front, x.items(), y.items());
      },
      refl, std::move(name));
}

/// grevlex by recursion on the initial segment.
template <class G>
VectorRelation<G> grevlex_rec(Relation<G> r, MonoidSpec<G> m) {
  auto name = "grevlex_rec(" + r.name + ")";
  const bool refl = r.declared_reflexive;
  return make_vector_relation<G>(
      [r = std::move(r), m = std::move(m)](const Family<G>& x, const Family<G>& y) {
        return detail::graded_peel(r, m, detail::Peel::back, x.items(), y.items());
      },
      refl, std::move(name));
}

/// grsymlex with the explicit head comparison (reversed) before recursing on
/// the tail.
template <class G>
VectorRelation<G> grsymlex_full(Relation<G> r, MonoidSpec<G> m) {
  auto name = "grsymlex_full(" + r.name + ")";
  const bool refl = r.declared_reflexive;
  return make_vector_relation<G>(
      [r = std::move(r), m = std::move(m)](const Family<G>& x, const Family<G>& y) {
        return detail::grsymlex_full_rec(r, m, x.items(), y.items());
      },
      refl, std::move(name));
}

/// grlex with lex inlined: sums, then head items, then the tails.
/// Strict R only.
template <class G>
VectorRelation<G> grlex_inline(Relation<G> r, MonoidSpec<G> m) {
  auto name = "grlex_inline(" + r.name + ")";
  return make_vector_relation<G>(
      [r = std::move(r), m = std::move(m)](const Family<G>& x, const Family<G>& y) {
        return detail::grlex_inline_rec(r, m, detail::Peel::front, x.items(), y.items());
      },
      false, std::move(name));
}

/// grcolex with colex inlined: sums, then last items, then initial segments.
/// Strict R only.
template <class G>
VectorRelation<G> grcolex_inline(Relation<G> r, MonoidSpec<G> m) {
  auto name = "grcolex_inline(" + r.name + ")";
  return make_vector_relation<G>(
      [r = std::move(r), m = std::move(m)](const Family<G>& x, const Family<G>& y) {
        return detail::grlex_inline_rec(r, m, detail::Peel::back, x.items(), y.items());
      },
      false, std::move(name));
}

// ---------------------------------------------------------------------------
// Monomial-order deciders over finite carriers. `op` results may leave the
// carrier; the relation is then evaluated on them directly.

template <class G>
struct PlusCompatViolation {
  G x1, x2, shift;
};

template <class G>
std::optional<PlusCompatViolation<G>> find_plus_compat_violation(const Relation<G>& r,
                                                                 const MonoidSpec<G>& m,
                                                                 const FiniteCarrier<G>& c) {
  for (const auto& x1 : c.elements())
    for (const auto& x2 : c.elements()) {
      if (!r(x1, x2)) continue;
      for (const auto& x : c.elements()) {
        if (!r(m.op(x1, x), m.op(x2, x))) return PlusCompatViolation<G>{x1, x2, x};
      }
    }
  return std::nullopt;
}

template <class G>
bool is_plus_compat_r(const Relation<G>& r, const MonoidSpec<G>& m, const FiniteCarrier<G>& c) {
  return !find_plus_compat_violation(r, m, c).has_value();
}

/// Right cancellation: x1 + x = x2 + x implies x1 = x2.
template <class G>
bool is_plus_reg_r(const MonoidSpec<G>& m, const FiniteCarrier<G>& c) {
  for (const auto& x1 : c.elements())
    for (const auto& x2 : c.elements()) {
      if (m.eq(x1, x2)) continue;
      for (const auto& x : c.elements()) {
        if (m.eq(m.op(x1, x), m.op(x2, x))) return false;
      }
    }
  return true;
}

template <class G>
bool is_monomial_order(const Relation<G>& r, const MonoidSpec<G>& m, const FiniteCarrier<G>& c) {
  return is_strict_total_order(r, c) && is_plus_compat_r(r, m, c);
}

template <class G>
bool is_monomial_nonstrict_order(const Relation<G>& r, const MonoidSpec<G>& m,
                                 const FiniteCarrier<G>& c) {
  return is_total_order(r, c) && is_plus_compat_r(r, m, c);
}

/// R(0, x) for every nonzero x of the carrier.
template <class G>
bool zero_least_on_nonzero(const Relation<G>& r, const MonoidSpec<G>& m,
                           const FiniteCarrier<G>& c) {
  for (const auto& x : c.elements()) {
    if (!m.eq(x, m.identity) && !r(m.identity, x)) return false;
  }
  return true;
}

}  // namespace monorder
