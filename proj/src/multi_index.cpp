#include "monorder/multi_index.hpp"

#include <stdexcept>

namespace monorder {

std::string_view to_string(SliceScheme s) {
  switch (s) {
    case SliceScheme::lex: return "lex";
    case SliceScheme::colex: return "colex";
    case SliceScheme::symlex: return "symlex";
  }
  return "?";
}

std::optional<SliceScheme> scheme_for_graded_order(std::string_view order_name) {
  if (order_name == "grlex") return SliceScheme::lex;
  if (order_name == "grcolex") return SliceScheme::colex;
  if (order_name == "grsymlex") return SliceScheme::symlex;
  return std::nullopt;
}

namespace {

class SliceBuilder {
 public:
  SliceBuilder(std::size_t d, SliceScheme scheme, const MultiIndexSink& sink)
      : buf_(d, 0), scheme_(scheme), sink_(sink) {}

  bool run(Nat l) { return fill(buf_.size(), l); }

 private:
  // Fills the `remaining` free positions of buf_ with items summing to l.
  // Front-peeling schemes fill left to right, colex fills right to left.
  bool fill(std::size_t remaining, Nat l) {
    const std::size_t d = buf_.size();
    const std::size_t pos = scheme_ == SliceScheme::colex ? remaining - 1 : d - remaining;
    if (remaining == 1) {
      buf_[pos] = l;
      return sink_(MultiIndex(buf_));
    }
    for (Nat i = 0; i <= l; ++i) {
      Nat item = scheme_ == SliceScheme::symlex ? l - i : i;
      buf_[pos] = item;
      if (!fill(remaining - 1, l - item)) return false;
    }
    return true;
  }

  std::vector<Nat> buf_;
  SliceScheme scheme_;
  const MultiIndexSink& sink_;
};

void require_dimension(std::size_t d) {
  if (d == 0) throw std::invalid_argument("multi-index dimension must be at least 1");
}

}  // namespace

bool for_each_in_slice(std::size_t d, Nat l, SliceScheme scheme, const MultiIndexSink& sink) {
  require_dimension(d);
  return SliceBuilder(d, scheme, sink).run(l);
}

bool for_each_multi_index(std::size_t d, Nat k, SliceScheme scheme, const MultiIndexSink& sink) {
  require_dimension(d);
  for (Nat l = 0; l <= k; ++l) {
    if (!for_each_in_slice(d, l, scheme, sink)) return false;
  }
  return true;
}

MultiIndexList slice(std::size_t d, Nat l, SliceScheme scheme) {
  MultiIndexList out{d, scheme, {}};
  for_each_in_slice(d, l, scheme, [&](const MultiIndex& a) {
    out.entries.push_back(a);
    return true;
  });
  return out;
}

MultiIndexList multi_index_set(std::size_t d, Nat k, SliceScheme scheme) {
  MultiIndexList out{d, scheme, {}};
  for_each_multi_index(d, k, scheme, [&](const MultiIndex& a) {
    out.entries.push_back(a);
    return true;
  });
  return out;
}

}  // namespace monorder
