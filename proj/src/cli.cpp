#include "monorder/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <iterator>
#include <json.hpp>
#include <sstream>
#include <stdexcept>

#include "monorder/graded.hpp"
#include "monorder/multi_index.hpp"
#include "monorder/orders.hpp"
#include "monorder/polyterm.hpp"
#include "monorder/relation.hpp"
#include "monorder/standard.hpp"
#include "monorder/weighted.hpp"

namespace monorder::cli {
namespace {

// Raised for anything that maps to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ResolvedOrder {
  VectorRelation<Nat> relation;
  std::string name;
  bool weighted = false;
};

ResolvedOrder resolve_order(const std::string& spec, Mode mode) {
  constexpr std::string_view prefix = "weighted:";
  if (spec.rfind(prefix, 0) == 0) {
    IntMatrix w;
    try {
      w = load_weight_matrix(spec.substr(prefix.size()));
    } catch (const std::exception& e) {
      throw UsageError(e.what());
    }
    auto strict = weighted_order(std::move(w));
    if (mode == Mode::nonstrict) {
      return {or_equal(std::move(strict), family_equality<Nat>(std::equal_to<Nat>{})), spec, true};
    }
    return {std::move(strict), spec, true};
  }
  auto r = named_order(spec, mode);
  if (!r) throw UsageError("unknown order \"" + spec + "\"");
  return {std::move(*r), spec, false};
}

Mode parse_mode(const std::string& s) {
  auto m = mode_from_string(s);
  if (!m) throw UsageError("unknown mode \"" + s + "\" (expected strict or nonstrict)");
  return *m;
}

Nat parse_nat(std::string_view s, std::string_view what) {
  Nat v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size() || s.empty()) {
    throw UsageError("invalid " + std::string(what) + " \"" + std::string(s) + "\"");
  }
  return v;
}

MultiIndex parse_multi_index(const std::string& s) {
  std::vector<Nat> items;
  std::size_t start = 0;
  while (true) {
    auto comma = s.find(',', start);
    items.push_back(parse_nat(std::string_view(s).substr(start, comma - start), "multi-index"));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return MultiIndex(std::move(items));
}

// Strict part of a possibly nonstrict relation.
VectorRelation<Nat> strict_part(VectorRelation<Nat> r) {
  auto name = r.name;
  return {[r = std::move(r)](const MultiIndex& a, const MultiIndex& b) {
            return r(a, b) && !r(b, a);
          },
          false, std::move(name)};
}

Nat sum_of(const MultiIndex& a) {
  Nat s = 0;
  for (Nat v : a) s += v;
  return s;
}

// ---------------------------------------------------------------------------

struct EnumerateArgs {
  std::size_t d = 0;
  Nat k = 0;
  std::string order = "grsymlex";
  std::string format = "plain";
  bool allow_sort_fallback = false;
};

int cmd_enumerate(const EnumerateArgs& a, std::ostream& out, std::ostream& err) {
  if (a.d < 1) throw UsageError("--d must be at least 1");
  if (a.format != "plain" && a.format != "csv" && a.format != "jsonl") {
    throw UsageError("unknown format \"" + a.format + "\"");
  }

  std::size_t rank = 0;
  auto emit = [&](const MultiIndex& m) {
    const Nat sum = sum_of(m);
    if (a.format == "plain") {
      for (std::size_t i = 0; i < m.size(); ++i) out << (i ? "," : "") << m[i];
    } else if (a.format == "csv") {
      out << rank << ',' << sum;
      for (Nat v : m) out << ',' << v;
    } else {
      nlohmann::ordered_json j;
      j["index"] = m.vector();
      j["sum"] = sum;
      j["rank"] = rank;
      out << j.dump();
    }
    out << '\n';
    ++rank;
    return true;
  };

  auto write_header = [&] {
    if (a.format != "csv") return;
    out << "rank,sum";
    for (std::size_t i = 0; i < a.d; ++i) out << ",x" << i;
    out << '\n';
  };

  if (auto scheme = scheme_for_graded_order(a.order)) {
    write_header();
    for_each_multi_index(a.d, a.k, *scheme, emit);
    return kExitOk;
  }

  auto order = resolve_order(a.order, Mode::strict);
  if (!a.allow_sort_fallback) {
    err << "error: order \"" << a.order
        << "\" has no slice scheme; pass --allow-sort-fallback to sort instead\n";
    return kExitCapability;
  }
  std::vector<MultiIndex> all;
  for (auto& m : box(a.d, a.k))
    if (sum_of(m) <= a.k) all.push_back(std::move(m));
  try {
    std::stable_sort(all.begin(), all.end(), [&](const MultiIndex& x, const MultiIndex& y) {
      return order.relation(x, y);
    });
  } catch (const LengthMismatch& e) {
    throw UsageError(e.what());
  }
  err << "note: generated by sort fallback for order \"" << a.order << "\"\n";
  write_header();
  for (const auto& m : all) emit(m);
  return kExitOk;
}

struct CompareArgs {
  std::string order = "lex";
  std::string mode = "strict";
  std::string lhs;
  std::string rhs;
};

int cmd_compare(const CompareArgs& a, std::ostream& out) {
  auto order = resolve_order(a.order, parse_mode(a.mode));
  auto x = parse_multi_index(a.lhs);
  auto y = parse_multi_index(a.rhs);
  if (x.size() != y.size()) throw UsageError(LengthMismatch(x.size(), y.size()).what());
  bool xy = false;
  bool yx = false;
  try {
    xy = order.relation(x, y);
    yx = order.relation(y, x);
  } catch (const LengthMismatch& e) {
    throw UsageError(e.what());
  }
  if (x == y) out << "EQ\n";
  else if (xy && !yx) out << "LT\n";
  else if (yx && !xy) out << "GT\n";
  else out << "INCOMPARABLE\n";
  return kExitOk;
}

struct SortTermsArgs {
  std::size_t d = 3;
  std::string order = "grlex";
  std::string mode = "strict";
  std::string names = "auto";
  std::string input = "-";
};

int cmd_sort_terms(const SortTermsArgs& a, std::istream& in, std::ostream& out) {
  auto order = resolve_order(a.order, parse_mode(a.mode));
  std::string text;
  if (a.input == "-") {
    text.assign(std::istreambuf_iterator<char>(in), {});
  } else {
    std::ifstream f(a.input);
    if (!f) throw UsageError("cannot open " + a.input);
    text.assign(std::istreambuf_iterator<char>(f), {});
  }
  PolyParseInfo info;
  SparsePoly p(a.d);
  try {
    p = parse_poly(text, a.d, &info);
  } catch (const PolyParseError& e) {
    throw UsageError(e.what());
  }

  VariableStyle style = VariableStyle::indexed;
  if (a.names == "xyz" || (a.names == "auto" && info.used_aliases)) style = VariableStyle::xyz;
  else if (a.names != "indexed" && a.names != "auto") {
    throw UsageError("unknown --names \"" + a.names + "\"");
  }
  if (style == VariableStyle::xyz && a.d > 3) throw UsageError("xyz names need d <= 3");

  std::vector<Term> sorted;
  try {
    sorted = sort_terms(p, strict_part(order.relation));
  } catch (const LengthMismatch& e) {
    throw UsageError(e.what());
  }
  out << format_terms(sorted, style) << '\n';
  return kExitOk;
}

struct CheckArgs {
  std::string property;
  std::string relation;
  std::string carrier;
};

int cmd_check(const CheckArgs& a, std::ostream& out) {
  auto prop = property_from_string(a.property);
  if (!prop) throw UsageError("unknown property \"" + a.property + "\"");
  auto rel = nat_relation_from_string(a.relation);
  if (!rel) throw UsageError("unknown relation \"" + a.relation + "\"");
  auto dots = a.carrier.find("..");
  if (dots == std::string::npos) throw UsageError("carrier must look like LO..HI");
  const Nat lo = parse_nat(std::string_view(a.carrier).substr(0, dots), "carrier bound");
  const Nat hi = parse_nat(std::string_view(a.carrier).substr(dots + 2), "carrier bound");
  if (lo > hi) throw UsageError("empty carrier range " + a.carrier);

  std::vector<Nat> xs;
  for (Nat v = lo; v <= hi; ++v) xs.push_back(v);
  FiniteCarrier<Nat> carrier(std::move(xs));

  auto v = find_violation(*prop, *rel, carrier);
  if (!v) {
    out << "PASS " << a.property << ' ' << a.relation << ' ' << a.carrier << '\n';
    return kExitOk;
  }
  out << "FAIL " << a.property << ' ' << a.relation << ' ' << a.carrier << ": "
      << to_string(v->property) << " violated by " << Family<Nat>(v->witness) << '\n';
  return kExitFail;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Enumerate, compare and sort multi-indices and monomials under term orders",
               "order_cli"};
  app.require_subcommand(1);

  EnumerateArgs en;
  auto* enumerate = app.add_subcommand("enumerate", "List the multi-indices of sum <= k in order");
  enumerate->add_option("--d", en.d, "Dimension (>= 1)")->required();
  enumerate->add_option("--k", en.k, "Maximal total degree")->required();
  enumerate->add_option("--order", en.order, "Order name or weighted:FILE")->capture_default_str();
  enumerate->add_option("--format", en.format, "plain, csv or jsonl")->capture_default_str();
  enumerate->add_flag("--allow-sort-fallback", en.allow_sort_fallback,
                      "Sort the brute-force set when the order has no slice scheme");

  CompareArgs cmp;
  auto* compare = app.add_subcommand("compare", "Compare two multi-indices");
  compare->add_option("--order", cmp.order, "Order name or weighted:FILE")->capture_default_str();
  compare->add_option("--mode", cmp.mode, "strict or nonstrict")->capture_default_str();
  compare->add_option("lhs", cmp.lhs, "Comma-separated naturals")->required();
  compare->add_option("rhs", cmp.rhs, "Comma-separated naturals")->required();

  SortTermsArgs st;
  auto* sort = app.add_subcommand("sort-terms", "Print polynomial terms in ascending order");
  sort->add_option("--d", st.d, "Number of variables")->capture_default_str();
  sort->add_option("--order", st.order, "Order name or weighted:FILE")->capture_default_str();
  sort->add_option("--mode", st.mode, "strict or nonstrict")->capture_default_str();
  sort->add_option("--names", st.names, "auto, indexed or xyz")->capture_default_str();
  sort->add_option("input", st.input, "Input file, - for stdin")->capture_default_str();

  CheckArgs ck;
  auto* check = app.add_subcommand("check", "Decide a relation property on a range of naturals");
  check->add_option("--property", ck.property, "Property name")->required();
  check->add_option("--relation", ck.relation, "lt, le, gt, ge, eq, empty or divides")
      ->required();
  check->add_option("--carrier", ck.carrier, "Inclusive range LO..HI")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (enumerate->parsed()) return cmd_enumerate(en, out, err);
    if (compare->parsed()) return cmd_compare(cmp, out);
    if (sort->parsed()) return cmd_sort_terms(st, in, out);
    if (check->parsed()) return cmd_check(ck, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace monorder::cli
