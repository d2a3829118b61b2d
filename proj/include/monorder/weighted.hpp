#pragma once

/**
 * @file weighted.hpp
 * @brief Orders defined by a weight matrix.
 *
 * A d x m matrix W has columns w_0 .. w_{m-1}. Two vectors are compared by
 * their projections on w_0 under the strict ring order; equal projections
 * defer to the remaining columns, and when no column is left the vectors
 * are not related. Arithmetic is exact (integers by default, or any exact
 * ordered ring such as boost::rational).
 */

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "monorder/family.hpp"
#include "monorder/lex.hpp"
#include "monorder/relation.hpp"

namespace monorder {

using Integer = std::int64_t;

template <class K>
class WeightMatrix {
 public:
  WeightMatrix() = default;

  /// Row-major entries, rows x cols.
  WeightMatrix(std::size_t rows, std::size_t cols, std::vector<K> entries)
      : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) {
      throw std::invalid_argument("WeightMatrix: expected " + std::to_string(rows_ * cols_) +
                                  " entries, got " + std::to_string(entries_.size()));
    }
  }

  static WeightMatrix from_columns(std::size_t rows, const std::vector<std::vector<K>>& columns) {
    std::vector<K> e(rows * columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
      if (columns[j].size() != rows) throw std::invalid_argument("WeightMatrix: ragged column");
      for (std::size_t i = 0; i < rows; ++i) e[i * columns.size() + j] = columns[j][i];
    }
    return WeightMatrix(rows, columns.size(), std::move(e));
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const K& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  std::vector<K> column(std::size_t j) const {
    std::vector<K> c;
    c.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c.push_back(at(i, j));
    return c;
  }

  friend bool operator==(const WeightMatrix&, const WeightMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<K> entries_;
};

/// x . w_j
template <class K>
K project(const WeightMatrix<K>& w, std::size_t j, const Family<K>& x) {
  K acc{0};
  for (std::size_t i = 0; i < w.rows(); ++i) acc += x[i] * w.at(i, j);
  return acc;
}

template <class K>
bool weighted_lt(const WeightMatrix<K>& w, const Relation<K>& ring_lt, const Family<K>& x,
                 const Family<K>& y) {
  require_same_length(x.size(), w.rows());
  require_same_length(y.size(), w.rows());
  for (std::size_t j = 0; j < w.cols(); ++j) {
    const K px = project(w, j, x);
    const K py = project(w, j, y);
    if (px != py) return ring_lt(px, py);
  }
  return false;
}

template <class K>
Relation<K> ring_less() {
  return {[](const K& a, const K& b) { return a < b; }, false, "lt"};
}

/// The ones column followed by the columns of W.
template <class K>
WeightMatrix<K> with_ones_column(const WeightMatrix<K>& w) {
  std::vector<std::vector<K>> cols{std::vector<K>(w.rows(), K{1})};
  for (std::size_t j = 0; j < w.cols(); ++j) cols.push_back(w.column(j));
  return WeightMatrix<K>::from_columns(w.rows(), cols);
}

template <class K>
WeightMatrix<K> scale_column(const WeightMatrix<K>& w, std::size_t j, const K& s) {
  std::vector<std::vector<K>> cols;
  for (std::size_t c = 0; c < w.cols(); ++c) {
    auto col = w.column(c);
    if (c == j)
      for (auto& v : col) v *= s;
    cols.push_back(std::move(col));
  }
  return WeightMatrix<K>::from_columns(w.rows(), cols);
}

/// A distinct pair in [0, bound]^d related in neither direction, if any.
template <class K>
std::optional<std::pair<Family<K>, Family<K>>> find_incomparable(const WeightMatrix<K>& w,
                                                                 const Relation<K>& ring_lt,
                                                                 Nat bound) {
  std::vector<Family<K>> points;
  for (const auto& a : box(w.rows(), bound)) {
    std::vector<K> v;
    for (Nat c : a) v.push_back(static_cast<K>(c));
    points.emplace_back(std::move(v));
  }
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      if (!weighted_lt(w, ring_lt, points[i], points[j]) &&
          !weighted_lt(w, ring_lt, points[j], points[i]))
        return std::make_pair(points[i], points[j]);
    }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Integer matrices

using IntMatrix = WeightMatrix<Integer>;

/// The strict weighted order on multi-indices.
VectorRelation<Nat> weighted_order(IntMatrix w);

/// Fixture format: "d m" on the first line, then d rows of m integers.
IntMatrix parse_weight_matrix(std::istream& in);
IntMatrix load_weight_matrix(const std::filesystem::path& path);
std::string format_weight_matrix(const IntMatrix& w);

/// Square matrix encoding of a named order (lex, colex, symlex, revlex,
/// grlex, grcolex, grsymlex, grevlex). For d <= 3 the matrix is checked
/// against the combinator order on every pair of [0, 3]^d before it is
/// returned; a disagreement throws std::logic_error. Unknown names throw
/// std::invalid_argument.
IntMatrix matrix_for(std::string_view order_name, std::size_t d);

/// Pairs of [0, bound]^d on which the two relations disagree.
std::size_t count_disagreements(const VectorRelation<Nat>& a, const VectorRelation<Nat>& b,
                                std::size_t d, Nat bound);

}  // namespace monorder
