// Acceptance suite: one line per criterion, exit status 1 if any fails.
//   acceptance <path to blancmange binary> <path to dilation_k4.csv golden>

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "blancmange/delta.hpp"
#include "blancmange/digitsum.hpp"
#include "blancmange/sdtree.hpp"
#include "blancmange/takagi.hpp"
#include "blancmange/verify.hpp"

using namespace blancmange;

namespace {

std::uint64_t p2(unsigned k) { return std::uint64_t{1} << k; }

// Collects the first mismatch of a criterion.
struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& what) {
    if (ok) detail = what;
    ok = false;
  }
};

struct Criterion {
  const char* id;
  const char* title;
  double limit_s;  // 0: no stated limit
  std::function<void(Outcome&)> body;
};

std::string str(const DyadicRational& v) { return v.to_string(); }

void ac1(Outcome& o) {
  for (std::uint64_t n = 1; n <= p2(14) && o.ok; ++n) {
    const std::uint64_t tree = count_labels(build_dnc_tree(n)).d_count;
    const std::uint64_t rec = delta_recursive(n);
    const std::uint64_t closed = delta_closed(n);
    const std::uint64_t expl = delta_explicit(n);
    if (rec != tree || closed != tree || expl != tree) {
      o.fail("n=" + std::to_string(n) + " tree=" + std::to_string(tree) + " recursive=" + std::to_string(rec) +
             " closed=" + std::to_string(closed) + " explicit=" + std::to_string(expl));
    }
  }
}

void ac2(Outcome& o) {
  for (std::uint64_t n = 2; n <= p2(12) && o.ok; ++n) {
    const LevelProfile profile = level_d_counts(build_dnc_tree(n));
    const unsigned k = floor_log2(n);
    if (profile.d_counts.size() != k) o.fail("n=" + std::to_string(n) + " tree has D-nodes below depth k-1");
    for (unsigned i = 0; i < k && o.ok; ++i) {
      if (lambda_level(n, i) != profile.d_counts[i]) {
        o.fail("n=" + std::to_string(n) + " i=" + std::to_string(i) + " lambda=" + std::to_string(lambda_level(n, i)) +
               " tree=" + std::to_string(profile.d_counts[i]));
      }
    }
  }
}

void ac3(Outcome& o) {
  for (unsigned k = 1; k <= 12; ++k) {
    for (std::uint64_t r = 0; r <= p2(k) && o.ok; ++r) {
      const DyadicRational ref = takagi(TakagiRoute::Dilation, r, k);
      for (TakagiRoute route : kAllTakagiRoutes) {
        const DyadicRational v = takagi(route, r, k);
        if (v != ref) {
          o.fail("k=" + std::to_string(k) + " r=" + std::to_string(r) + " " + std::string(route_name(route)) + "=" +
                 str(v) + " dilation=" + str(ref));
        }
      }
    }
  }
}

void ac4(Outcome& o) {
  struct Spot {
    std::uint64_t r;
    unsigned k;
    DyadicRational want;
  };
  const Spot spots[] = {{1, 1, DyadicRational(1, 1)},
                        {1, 2, DyadicRational(1, 1)},
                        {1, 3, DyadicRational(3, 3)},
                        {3, 3, DyadicRational(5, 3)}};
  for (const Spot& s : spots) {
    for (TakagiRoute route : kAllTakagiRoutes) {
      const DyadicRational v = takagi(route, s.r, s.k);
      if (v != s.want) {
        o.fail("tau(" + std::to_string(s.r) + "/2^" + std::to_string(s.k) + ") " + std::string(route_name(route)) +
               "=" + str(v) + " expected " + str(s.want));
      }
    }
  }
  constexpr std::array<std::uint64_t, 16> deltas = {0, 0, 1, 0, 2, 2, 2, 0, 3, 4, 5, 4, 5, 4, 3, 0};
  for (std::uint64_t n = 1; n <= 16; ++n) {
    const std::uint64_t tree = count_labels(build_dnc_tree(n)).d_count;
    if (tree != deltas[n - 1] || delta_closed(n) != deltas[n - 1] || delta_recursive(n) != deltas[n - 1] ||
        delta_explicit(n) != deltas[n - 1]) {
      o.fail("delta(" + std::to_string(n) + ") expected " + std::to_string(deltas[n - 1]));
    }
  }
}

void ac5(Outcome& o) {
  for (std::uint64_t n = 3; n < p2(16) && o.ok; ++n) {
    if ((n & (n - 1)) == 0) continue;
    const NeighborIdentity id = check_neighbor_identity(n);
    if (!id.holds) o.fail("delta neighbor n=" + std::to_string(n) + " lhs=" + str(id.lhs) + " rhs=" + str(id.rhs));
  }
  for (unsigned k = 1; k <= 12; ++k) {
    for (std::uint64_t r = 1; r < p2(k) && o.ok; ++r) {
      const TakagiNeighbor id = check_takagi_neighbor(r, k);
      if (!id.holds) {
        o.fail("takagi neighbor k=" + std::to_string(k) + " r=" + std::to_string(r) + " lhs=" + str(id.lhs) +
               " rhs=" + str(id.rhs));
      }
    }
  }
}

void ac6(Outcome& o) {
  for (unsigned k = 1; k <= 12; ++k) {
    for (std::uint64_t r = 1; r < p2(k) && o.ok; ++r) {
      const BorosCheck b = boros_check(r, k);
      const bool equal = b.lhs == b.rhs;
      if (!(b.lhs <= b.rhs) || equal != (r % 2 == 1) || b.strict == equal) {
        o.fail("k=" + std::to_string(k) + " r=" + std::to_string(r) + " lhs=" + str(b.lhs) + " rhs=" + str(b.rhs));
      }
    }
  }
}

void ac7(Outcome& o) {
  constexpr std::uint64_t top = 1000000;
  for (std::uint64_t n = 1; n <= top && o.ok; ++n) {
    const unsigned direct = s1(n);
    const unsigned via_takagi = s1_from_takagi(n);
    const unsigned via_delta = s1_from_delta(n);
    if (via_takagi != direct || via_delta != direct) {
      o.fail("n=" + std::to_string(n) + " s1=" + std::to_string(direct) + " takagi=" + std::to_string(via_takagi) +
             " delta=" + std::to_string(via_delta));
    }
  }
  const IdentityReport lemmas = verify_range(IdentityId::S1Lemmas, 1, top);
  if (!lemmas.passed || lemmas.checked != top) o.fail(format_report(lemmas));
}

void ac8(Outcome& o) {
  constexpr std::uint64_t top = 1000000;
  const std::vector<std::uint64_t> direct = cumsum_direct_table(1, top);
  for (std::uint64_t n = 1; n <= top && o.ok; ++n) {
    const auto want = static_cast<int128>(direct[n - 1]);
    const CumsumForms f = cumsum_forms(n);
    if (f.a != want || f.b != want || f.c != want) {
      o.fail("n=" + std::to_string(n) + " direct=" + to_string(want) + " a=" + to_string(f.a) +
             " b=" + to_string(f.b) + " c=" + to_string(f.c));
    }
  }
  for (unsigned k = 0; k <= 20; ++k) {
    if (cumsum_powtwo(k) != cumsum_direct(p2(k))) o.fail("powtwo k=" + std::to_string(k));
  }
  for (std::uint64_t n = 2; n <= 100000 && o.ok; ++n) {
    const double want = static_cast<double>(direct[n - 1]);
    const double got = cumsum_trollope(n);
    if (!(std::fabs(got - want) <= 1e-9 * want)) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "trollope n=" << n << " got=" << got << " direct=" << want;
      o.fail(msg.str());
    }
  }
}

void ac9(Outcome& o) {
  for (unsigned k = 0; k <= 14; ++k) {
    for (std::uint64_t r = 0; r <= p2(k) && o.ok; ++r) {
      if (delta_closed(p2(k + 1) - r) != delta_closed(p2(k) + r)) {
        o.fail("delta symmetry k=" + std::to_string(k) + " r=" + std::to_string(r));
      }
    }
  }
  for (unsigned k = 1; k <= 12; ++k) {
    for (std::uint64_t r = 0; r <= p2(k) && o.ok; ++r) {
      const DyadicRational t = takagi_dilation(r, k);
      if (takagi_dilation(2 * r, k + 1) != t) o.fail("reduction k=" + std::to_string(k) + " r=" + std::to_string(r));
      if (takagi_dilation(p2(k) - r, k) != t) o.fail("reflection k=" + std::to_string(k) + " r=" + std::to_string(r));
    }
  }
}

struct Run {
  int status = -1;
  std::string out;
};

Run run_command(const std::string& command) {
  Run run;
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return run;
  std::array<char, 4096> buf;
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) run.out.append(buf.data(), got);
  const int raw = pclose(pipe);
  run.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return run;
}

std::string quote(const std::string& s) { return "'" + s + "'"; }

void ac10(Outcome& o, const std::string& binary, const std::string& golden_path) {
  std::ifstream in(golden_path, std::ios::binary);
  if (!in) {
    o.fail("cannot read " + golden_path);
    return;
  }
  std::ostringstream golden;
  golden << in.rdbuf();

  const Run first = run_command(quote(binary) + " dilation-csv 4");
  const Run second = run_command(quote(binary) + " dilation-csv 4");
  if (first.status != 0 || second.status != 0) o.fail("dilation-csv exited non-zero");
  if (first.out != second.out) o.fail("dilation-csv output differs between runs");
  if (first.out != golden.str()) o.fail("dilation-csv output differs from the golden file");

  const Run all = run_command(quote(binary) + " verify all 2>&1");
  if (all.status != 0) o.fail("verify all exited " + std::to_string(all.status) + ":\n" + all.out);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: acceptance <blancmange binary> <golden dilation_k4.csv>\n";
    return 2;
  }
  const std::string binary = argv[1];
  const std::string golden = argv[2];

  const std::vector<Criterion> criteria = {
      {"AC1", "delta formulas equal the tree D-count, n in [1, 2^14]", 30, ac1},
      {"AC2", "lambda_i equals the tree's depth-i D-count, n in [2, 2^12]", 30, ac2},
      {"AC3", "five Takagi routes agree exactly, k in [1, 12], r in [0, 2^k]", 10, ac3},
      {"AC4", "spot values of tau and delta(1..16)", 0, ac4},
      {"AC5", "delta and Takagi neighbor identities", 10, ac5},
      {"AC6", "Boros bound, equality exactly at odd r, k <= 12", 0, ac6},
      {"AC7", "s1 by three routes and the weight lemmas, n in [1, 10^6]", 30, ac7},
      {"AC8", "cumulative digit sums: three forms, powers of two, float formula", 60, ac8},
      {"AC9", "delta symmetry (k <= 14), Takagi reduction and reflection (k <= 12)", 0, ac9},
      {"AC10", "dilation-csv 4 deterministic and golden; verify all exits 0", 5,
       [&](Outcome& o) { ac10(o, binary, golden); }},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    Outcome outcome;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(outcome);
    } catch (const std::exception& e) {
      outcome.fail(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (outcome.ok && c.limit_s > 0 && seconds > c.limit_s) {
      outcome.fail("took " + std::to_string(seconds) + " s, limit " + std::to_string(c.limit_s) + " s");
    }
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2f s", seconds);
    std::cout << (outcome.ok ? "[PASS] " : "[FAIL] ") << c.id << "  " << c.title << "  (" << timing << ")\n";
    if (!outcome.ok) {
      std::cout << "       " << outcome.detail << '\n';
      ++failures;
    }
  }
  std::cout << (criteria.size() - failures) << '/' << criteria.size() << " criteria passed\n";
  return failures == 0 ? 0 : 1;
}
