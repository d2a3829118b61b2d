#include "monorder/weighted.hpp"

#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>

#include "monorder/orders.hpp"

namespace monorder {

VectorRelation<Nat> weighted_order(IntMatrix w) {
  return make_vector_relation<Nat>(
      [w = std::move(w), lt = ring_less<Integer>()](const MultiIndex& x, const MultiIndex& y) {
        std::vector<Integer> xi(x.begin(), x.end());
        std::vector<Integer> yi(y.begin(), y.end());
        return weighted_lt(w, lt, Family<Integer>(std::move(xi)), Family<Integer>(std::move(yi)));
      },
      false, "weighted");
}

IntMatrix parse_weight_matrix(std::istream& in) {
  long long d = -1;
  long long m = -1;
  if (!(in >> d >> m) || d < 1 || m < 0) {
    throw std::runtime_error("weight matrix: header must be \"d m\" with d >= 1, m >= 0");
  }
  std::vector<Integer> entries;
  entries.reserve(static_cast<std::size_t>(d * m));
  for (long long i = 0; i < d * m; ++i) {
    Integer v = 0;
    if (!(in >> v)) {
      throw std::runtime_error("weight matrix: expected " + std::to_string(d * m) +
                               " integers, read " + std::to_string(i));
    }
    entries.push_back(v);
  }
  std::string extra;
  if (in >> extra) throw std::runtime_error("weight matrix: trailing data \"" + extra + "\"");
  return IntMatrix(static_cast<std::size_t>(d), static_cast<std::size_t>(m), std::move(entries));
}

IntMatrix load_weight_matrix(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("weight matrix: cannot open " + path.string());
  return parse_weight_matrix(in);
}

std::string format_weight_matrix(const IntMatrix& w) {
  std::ostringstream os;
  os << w.rows() << ' ' << w.cols() << '\n';
  for (std::size_t i = 0; i < w.rows(); ++i) {
    for (std::size_t j = 0; j < w.cols(); ++j) os << (j ? " " : "") << w.at(i, j);
    os << '\n';
  }
  return os.str();
}

std::size_t count_disagreements(const VectorRelation<Nat>& a, const VectorRelation<Nat>& b,
                                std::size_t d, Nat bound) {
  const auto points = box(d, bound);
  std::size_t n = 0;
  for (const auto& x : points)
    for (const auto& y : points)
      if (a(x, y) != b(x, y)) ++n;
  return n;
}

namespace {

std::vector<Integer> unit(std::size_t d, std::size_t i, Integer sign) {
  std::vector<Integer> v(d, 0);
  v[i] = sign;
  return v;
}

// Unit columns e_first, ..., stepping forward or backward, `count` of them.
void append_units(std::vector<std::vector<Integer>>& cols, std::size_t d, std::size_t count,
                  bool from_back, Integer sign) {
  for (std::size_t k = 0; k < count; ++k) {
    cols.push_back(unit(d, from_back ? d - 1 - k : k, sign));
  }
}

}  // namespace

IntMatrix matrix_for(std::string_view order_name, std::size_t d) {
  if (d == 0) throw std::invalid_argument("matrix_for: dimension must be at least 1");
  struct Encoding {
    std::string_view name;
    bool graded;
    bool from_back;
    Integer sign;
  };
  static constexpr Encoding encodings[] = {
      {"lex", false, false, 1},     {"colex", false, true, 1},
      {"symlex", false, false, -1}, {"revlex", false, true, -1},
      {"grlex", true, false, 1},    {"grcolex", true, true, 1},
      {"grsymlex", true, false, -1}, {"grevlex", true, true, -1},
  };
  const Encoding* enc = nullptr;
  for (const auto& e : encodings)
    if (e.name == order_name) enc = &e;
  if (!enc) {
    throw std::invalid_argument("matrix_for: unknown order \"" + std::string(order_name) + "\"");
  }

  std::vector<std::vector<Integer>> cols;
  if (enc->graded) cols.emplace_back(d, 1);
  append_units(cols, d, enc->graded ? d - 1 : d, enc->from_back, enc->sign);
  auto w = IntMatrix::from_columns(d, cols);

  if (d <= 3) {
    auto reference = named_order(order_name);
    if (!reference ||
        count_disagreements(weighted_order(w), *reference, d, 3) != 0) {
      throw std::logic_error("matrix_for: encoding of " + std::string(order_name) +
                             " disagrees with the combinator order");
    }
  }
  return w;
}

}  // namespace monorder
