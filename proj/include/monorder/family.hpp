#pragma once

// Fixed-length homogeneous families (vectors of items indexed 0..n-1).

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace monorder {

/// Natural numbers: the item type of multi-indices and exponent vectors.
using Nat = std::uint64_t;

class LengthMismatch : public std::invalid_argument {
 public:
  LengthMismatch(std::size_t lhs, std::size_t rhs)
      : std::invalid_argument("family length mismatch: " + std::to_string(lhs) + " vs " +
                              std::to_string(rhs)) {}
};

template <class T>
class Family {
 public:
  using value_type = T;
  using const_iterator = typename std::vector<T>::const_iterator;

  Family() = default;
  Family(std::initializer_list<T> items) : items_(items) {}
  explicit Family(std::vector<T> items) : items_(std::move(items)) {}

  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  const T& operator[](std::size_t i) const { return items_[i]; }
  const_iterator begin() const { return items_.begin(); }
  const_iterator end() const { return items_.end(); }
  std::span<const T> items() const { return items_; }
  const std::vector<T>& vector() const { return items_; }

  // Structural ordering, for use as a container key only.
  friend bool operator==(const Family&, const Family&) = default;
  friend auto operator<=>(const Family&, const Family&) = default;

 private:
  std::vector<T> items_;
};

using MultiIndex = Family<Nat>;

template <class T>
std::optional<T> head(const Family<T>& a) {
  if (a.empty()) return std::nullopt;
  return a[0];
}

template <class T>
std::optional<T> last(const Family<T>& a) {
  if (a.empty()) return std::nullopt;
  return a[a.size() - 1];
}

/// Items 1..n-1.
template <class T>
std::optional<Family<T>> tail(const Family<T>& a) {
  if (a.empty()) return std::nullopt;
  return Family<T>(std::vector<T>(a.begin() + 1, a.end()));
}

/// Items 0..n-2.
template <class T>
std::optional<Family<T>> init(const Family<T>& a) {
  if (a.empty()) return std::nullopt;
  return Family<T>(std::vector<T>(a.begin(), a.end() - 1));
}

template <class T>
Family<T> reverse_family(const Family<T>& a) {
  std::vector<T> out(a.begin(), a.end());
  std::reverse(out.begin(), out.end());
  return Family<T>(std::move(out));
}

inline void require_same_length(std::size_t lhs, std::size_t rhs) {
  if (lhs != rhs) throw LengthMismatch(lhs, rhs);
}

/// All families of length `d` with items in [0, bound], in lexicographic
/// enumeration order (first coordinate slowest).
inline std::vector<MultiIndex> box(std::size_t d, Nat bound) {
  std::vector<MultiIndex> out;
  std::vector<Nat> cur(d, 0);
  while (true) {
    out.emplace_back(cur);
    std::size_t i = d;
    while (i > 0) {
      --i;
      if (cur[i] < bound) {
        ++cur[i];
        break;
      }
      cur[i] = 0;
      if (i == 0) return out;
    }
    if (d == 0) return out;
  }
}

template <class T>
std::ostream& operator<<(std::ostream& os, const Family<T>& a) {
  os << '(';
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) os << ", ";
    os << a[i];
  }
  return os << ')';
}

}  // namespace monorder
