#include "monorder/orders.hpp"

#include "monorder/graded.hpp"
#include "monorder/standard.hpp"

namespace monorder {

std::optional<Mode> mode_from_string(std::string_view s) {
  if (s == "strict") return Mode::strict;
  if (s == "nonstrict") return Mode::nonstrict;
  return std::nullopt;
}

const std::vector<std::string>& named_order_names() {
  static const std::vector<std::string> names{"lex",   "colex",   "symlex",   "revlex",
                                              "grlex", "grcolex", "grsymlex", "grevlex"};
  return names;
}

std::optional<VectorRelation<Nat>> named_order(std::string_view name, Mode mode) {
  auto r = mode == Mode::strict ? nat_lt() : nat_le();
  auto m = nat_add_monoid();
  if (name == "lex") return lex(r);
  if (name == "colex") return colex(r);
  if (name == "symlex") return symlex(r);
  if (name == "revlex") return revlex(r);
  if (name == "grlex") return grlex(r, m);
  if (name == "grcolex") return grcolex(r, m);
  if (name == "grsymlex") return grsymlex(r, m);
  if (name == "grevlex") return grevlex(r, m);
  return std::nullopt;
}

}  // namespace monorder
