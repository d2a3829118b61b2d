#pragma once

/**
 * @file multi_index.hpp
 * @brief Multi-indices of bounded total degree, generated slice by slice.
 *
 * A slice C(d, l) holds the multi-indices of length d summing to l; the set
 * A(d, k) is the concatenation of the slices l = 0..k. Each slice is built
 * by recursion on one end item, and the recursion scheme fixes the order in
 * which entries come out:
 *
 *   lex      (i, C(d-1, l-i))    for i = 0..l   -> sorted by lex(<)
 *   colex    (C(d-1, l-i), i)    for i = 0..l   -> sorted by colex(<)
 *   symlex   (l-i, C(d-1, i))    for i = 0..l   -> sorted by symlex(<)
 *
 * so A(d, k) comes out sorted by grlex, grcolex or grsymlex respectively.
 * Entries are produced by recursion only, never by sorting.
 */

#include <cstddef>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "monorder/family.hpp"

namespace monorder {

enum class SliceScheme { lex, colex, symlex };

std::string_view to_string(SliceScheme s);

/// Scheme whose A(d, k) is sorted under the given graded order name
/// ("grlex", "grcolex", "grsymlex"), if any.
std::optional<SliceScheme> scheme_for_graded_order(std::string_view order_name);

/// Receives each multi-index in order; return false to stop the enumeration.
using MultiIndexSink = std::function<bool(const MultiIndex&)>;

/// Streams C(d, l). Returns false if the sink stopped early.
/// Throws std::invalid_argument for d = 0.
bool for_each_in_slice(std::size_t d, Nat l, SliceScheme scheme, const MultiIndexSink& sink);

/// Streams A(d, k) slice by slice. Returns false if the sink stopped early.
bool for_each_multi_index(std::size_t d, Nat k, SliceScheme scheme, const MultiIndexSink& sink);

struct MultiIndexList {
  std::size_t d = 0;
  SliceScheme scheme = SliceScheme::symlex;
  std::vector<MultiIndex> entries;
};

MultiIndexList slice(std::size_t d, Nat l, SliceScheme scheme);
MultiIndexList multi_index_set(std::size_t d, Nat k, SliceScheme scheme);

}  // namespace monorder
