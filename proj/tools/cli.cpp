#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <optional>
#include <ostream>
#include <stdexcept>

#include "blancmange/delta.hpp"
#include "blancmange/digitsum.hpp"
#include "blancmange/dyadic.hpp"
#include "blancmange/sdtree.hpp"
#include "blancmange/takagi.hpp"
#include "blancmange/verify.hpp"

namespace blancmange::cli {

namespace {

// Above this the literal cumulative sum is skipped by `cumsum`.
constexpr std::uint64_t kDirectCumsumLimit = std::uint64_t{1} << 30;

std::string decimal(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string den_text(const DyadicRational& v) { return to_string(uint128{1} << v.exp()); }

std::optional<std::uint64_t> parse_u64(const std::string& token) {
  std::uint64_t v = 0;
  const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc{} || end != token.data() + token.size()) return std::nullopt;
  return v;
}

int cmd_eval(std::uint64_t r, unsigned k, const std::string& route, std::ostream& out) {
  out << "x=" << r << "/2^" << k << '\n';
  if (route != "all") {
    for (TakagiRoute candidate : kAllTakagiRoutes) {
      if (route_name(candidate) != route) continue;
      const DyadicRational v = takagi(candidate, r, k);
      out << route << ' ' << v.to_string() << ' ' << decimal(v.to_double()) << '\n';
      return kExitOk;
    }
    throw std::invalid_argument("unknown route " + route);
  }
  std::optional<DyadicRational> first;
  bool agree = true;
  for (TakagiRoute candidate : kAllTakagiRoutes) {
    const DyadicRational v = takagi(candidate, r, k);
    out << route_name(candidate) << ' ' << v.to_string() << ' ' << decimal(v.to_double()) << '\n';
    if (!first) first = v;
    agree = agree && v == *first;
  }
  out << "verdict " << (agree ? "AGREE" : "DISAGREE") << '\n';
  return agree ? kExitOk : kExitIdentityFailure;
}

int cmd_delta(std::uint64_t n, const std::string& method, std::ostream& out) {
  std::uint64_t value = 0;
  if (method == "recursive") {
    value = delta_recursive(n);
  } else if (method == "closed") {
    value = delta_closed(n);
  } else if (method == "explicit") {
    value = delta_explicit(n);
  } else {
    value = count_labels(build_dnc_tree(n)).d_count;
  }
  out << value << '\n';
  return kExitOk;
}

int cmd_s1(std::uint64_t n, const std::string& method, std::ostream& out) {
  unsigned value = 0;
  if (method == "direct") {
    value = s1(n);
  } else if (method == "takagi") {
    value = s1_from_takagi(n);
  } else {
    value = s1_from_delta(n);
  }
  out << value << '\n';
  return kExitOk;
}

int cmd_cumsum(std::uint64_t n, std::ostream& out) {
  const CumsumForms forms = cumsum_forms(n);
  bool consistent = forms.a == forms.b && forms.b == forms.c;
  out << "n=" << n << '\n';
  if (n <= kDirectCumsumLimit) {
    const int128 direct = cumsum_direct(n);
    consistent = consistent && direct == forms.a;
    out << "direct=" << to_string(direct) << '\n';
  } else {
    out << "direct=skipped\n";
  }
  out << "a=" << to_string(forms.a) << '\n';
  out << "b=" << to_string(forms.b) << '\n';
  out << "c=" << to_string(forms.c) << '\n';
  const double trollope = cumsum_trollope(n);
  out << "trollope=" << decimal(trollope) << " deviation=" << decimal(trollope - static_cast<double>(forms.c)) << '\n';
  return consistent ? kExitOk : kExitIdentityFailure;
}

int cmd_dilation_csv(unsigned k, std::ostream& out) {
  if (k < 1 || k > kMaxCsvK) {
    throw std::range_error("dilation-csv needs 1 <= K <= " + std::to_string(kMaxCsvK));
  }
  out << "x,y_num,y_den,y_float\n";
  const std::uint64_t top = std::uint64_t{1} << k;
  for (std::uint64_t x = 0; x <= top; ++x) {
    const DyadicRational y = takagi_dilation(x, k);
    out << x << ',' << to_string(y.num()) << ',' << den_text(y) << ',' << decimal(y.to_double()) << '\n';
  }
  return kExitOk;
}

struct VerifyArgs {
  std::vector<std::string> ids;
  std::vector<std::string> positional;
  std::optional<std::uint64_t> lo;
  std::optional<std::uint64_t> hi;
  bool serial = false;
};

int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
  std::vector<std::string> names = args.ids;
  std::vector<std::uint64_t> numbers;
  for (const std::string& token : args.positional) {
    if (auto v = parse_u64(token)) {
      numbers.push_back(*v);
    } else {
      names.push_back(token);
    }
  }
  std::optional<std::uint64_t> lo = args.lo;
  std::optional<std::uint64_t> hi = args.hi;
  if (!numbers.empty()) {
    if (numbers.size() != 2 || lo || hi) throw std::invalid_argument("give the range once, as LO HI or --lo/--hi");
    lo = numbers[0];
    hi = numbers[1];
  }
  if (lo.has_value() != hi.has_value()) throw std::invalid_argument("--lo and --hi go together");

  std::vector<IdentityId> selected;
  bool expanded = names.empty();
  for (const std::string& name : names) {
    if (name == "all") {
      expanded = true;
    } else {
      selected.push_back(identity_from_name(name));
    }
  }
  if (expanded) {
    selected.clear();
    for (const IdentityInfo& info : list_identities()) selected.push_back(info.id);
  }
  const bool single = selected.size() == 1 && !expanded;
  const Execution execution = args.serial ? Execution::Serial : Execution::Parallel;

  std::size_t passed = 0;
  std::size_t ran = 0;
  for (IdentityId id : selected) {
    const IdentityInfo& info = identity_info(id);
    std::uint64_t from = info.default_lo;
    std::uint64_t to = info.default_hi;
    if (lo) {
      from = *lo;
      to = *hi;
      if (!single) {
        if (from == 0 || from > to) throw std::invalid_argument("empty range");
        if (info.unit == RangeUnit::K) {
          // An n-range spans the grids 2^k <= n <= 2^(k+1).
          from = std::max<std::uint64_t>(1, floor_log2(from));
          to = std::max<std::uint64_t>(from, floor_log2(to));
        }
        to = std::min(to, info.cap);
        if (from > to) {
          out << info.name << ' ' << unit_name(info.unit) << "=[" << from << ',' << to << "] SKIP outside cap\n";
          continue;
        }
      }
    }
    const IdentityReport report = verify_range(id, from, to, execution);
    out << format_report(report) << '\n';
    ++ran;
    if (report.passed) ++passed;
  }
  out << "summary " << passed << '/' << ran << " passed\n";
  if (passed != ran) err << (ran - passed) << " identity check(s) failed\n";
  return passed == ran ? kExitOk : kExitIdentityFailure;
}

int cmd_identities(std::ostream& out) {
  for (const IdentityInfo& info : list_identities()) {
    out << info.name << "  " << unit_name(info.unit) << "=[" << info.default_lo << ',' << info.default_hi
        << "] cap=" << info.cap << "  " << info.citation << '\n';
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Takagi function, D-node counts and binary digit sums", "blancmange"};
  app.require_subcommand(1);

  std::uint64_t r = 0;
  unsigned k = 0;
  std::uint64_t n = 0;
  std::string route = "all";
  std::string delta_method = "closed";
  std::string s1_method = "direct";
  VerifyArgs verify_args;
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;

  auto* eval = app.add_subcommand("eval", "Evaluate tau(R / 2^K) exactly");
  eval->add_option("R", r, "Numerator")->required();
  eval->add_option("K", k, "Exponent of the denominator")->required();
  eval->add_option("--route", route, "dilation|definition|closed|explicit|tent|all")
      ->check(CLI::IsMember({"dilation", "definition", "closed", "explicit", "tent", "all"}));

  auto* delta = app.add_subcommand("delta", "D-node count of the divide-and-conquer tree on N leaves");
  delta->add_option("N", n, "Leaf count")->required();
  delta->add_option("--method", delta_method, "recursive|closed|explicit|tree")
      ->check(CLI::IsMember({"recursive", "closed", "explicit", "tree"}));

  auto* weight = app.add_subcommand("s1", "Hamming weight of N");
  weight->add_option("N", n, "Integer")->required();
  weight->add_option("--method", s1_method, "direct|takagi|delta")
      ->check(CLI::IsMember({"direct", "takagi", "delta"}));

  auto* cumsum = app.add_subcommand("cumsum", "Cumulative digit sum S1(N) by every formula");
  cumsum->add_option("N", n, "Upper bound (exclusive)")->required();

  auto* verify = app.add_subcommand("verify", "Sweep identities over a range");
  verify->add_option("--id", verify_args.ids, "Identity name or 'all' (repeatable)");
  auto* lo_opt = verify->add_option("--lo", lo, "Range start");
  auto* hi_opt = verify->add_option("--hi", hi, "Range end (inclusive)");
  verify->add_flag("--serial", verify_args.serial, "Use the serial reference kernel");
  verify->add_option("args", verify_args.positional, "Identity names and/or LO HI");

  unsigned csv_k = 0;
  auto* csv = app.add_subcommand("dilation-csv", "Plot data y = delta(2^K + x) / 2^K for 0 <= x <= 2^K");
  csv->add_option("K", csv_k, "Exponent")->required();

  std::uint64_t dot_n = 0;
  auto* dot = app.add_subcommand("tree-dot", "Graphviz text for the divide-and-conquer tree on N leaves");
  dot->add_option("N", dot_n, "Leaf count")->required();

  auto* identities = app.add_subcommand("identities", "List the identity catalog");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (eval->parsed()) return cmd_eval(r, k, route, out);
    if (delta->parsed()) return cmd_delta(n, delta_method, out);
    if (weight->parsed()) return cmd_s1(n, s1_method, out);
    if (cumsum->parsed()) return cmd_cumsum(n, out);
    if (verify->parsed()) {
      if (lo_opt->count() > 0) verify_args.lo = lo;
      if (hi_opt->count() > 0) verify_args.hi = hi;
      return cmd_verify(verify_args, out, err);
    }
    if (csv->parsed()) return cmd_dilation_csv(csv_k, out);
    if (dot->parsed()) {
      out << export_dot(build_dnc_tree(dot_n));
      return kExitOk;
    }
    if (identities->parsed()) return cmd_identities(out);
  } catch (const InconsistencyError& e) {
    err << "inconsistency: " << e.what() << '\n';
    return kExitIdentityFailure;
  } catch (const std::logic_error& e) {
    // domain_error, invalid_argument, out_of_range
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::range_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  err << "error: no command\n";
  return kExitUsage;
}

}  // namespace blancmange::cli
