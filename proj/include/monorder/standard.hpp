#pragma once

// Built-in scalar relations on naturals.

#include <optional>
#include <string>
#include <string_view>

#include "monorder/family.hpp"
#include "monorder/relation.hpp"

namespace monorder {

inline Relation<Nat> nat_lt() {
  return {[](Nat x, Nat y) { return x < y; }, false, "lt"};
}
inline Relation<Nat> nat_le() {
  return {[](Nat x, Nat y) { return x <= y; }, true, "le"};
}
inline Relation<Nat> nat_gt() {
  return {[](Nat x, Nat y) { return x > y; }, false, "gt"};
}
inline Relation<Nat> nat_ge() {
  return {[](Nat x, Nat y) { return x >= y; }, true, "ge"};
}
inline Relation<Nat> nat_eq() {
  return {[](Nat x, Nat y) { return x == y; }, true, "eq"};
}
inline Relation<Nat> nat_empty() {
  return {[](Nat, Nat) { return false; }, false, "empty"};
}

// 0 divides only 0.
inline Relation<Nat> nat_divides() {
  return {[](Nat x, Nat y) { return x == 0 ? y == 0 : y % x == 0; }, true, "divides"};
}

inline std::optional<Relation<Nat>> nat_relation_from_string(std::string_view s) {
  if (s == "lt") return nat_lt();
  if (s == "le") return nat_le();
  if (s == "gt") return nat_gt();
  if (s == "ge") return nat_ge();
  if (s == "eq") return nat_eq();
  if (s == "empty") return nat_empty();
  if (s == "divides") return nat_divides();
  return std::nullopt;
}

}  // namespace monorder
