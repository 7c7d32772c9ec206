#include "blancmange/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <functional>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "blancmange/delta.hpp"
#include "blancmange/digitsum.hpp"
#include "blancmange/dyadic.hpp"
#include "blancmange/sdtree.hpp"
#include "blancmange/sweep.hpp"
#include "blancmange/takagi.hpp"

namespace blancmange {

namespace {

constexpr std::uint64_t kFormulaCap = kMaxN - 1;
constexpr std::uint64_t kTableCap = std::uint64_t{1} << 24;
constexpr std::uint64_t kTrollopeCap = 100000;
constexpr std::uint64_t kGridCap = 24;
constexpr std::uint64_t kPowtwoCap = 30;
constexpr double kTrollopeTolerance = 1e-9;

constexpr std::uint64_t p2(unsigned k) { return std::uint64_t{1} << k; }

using Id = IdentityId;

constexpr std::array<IdentityInfo, 19> kCatalog = {{
    {Id::DeltaRecursiveVsClosed, "DELTA_RECURSIVE_VS_CLOSED",
     "Recursive, closed (level sum and signed) and explicit (suffix sum and popcount) forms of delta agree; "
     "delta(2m) = 2 delta(m), delta(2m+1) = delta(m) + delta(m+1) + 1",
     RangeUnit::N, 1, p2(16), kFormulaCap},
    {Id::DeltaVsTreeOracle, "DELTA_VS_TREE_ORACLE",
     "D-node count of the explicitly built divide-and-conquer tree equals every delta formula; "
     "S-nodes + D-nodes = n - 1",
     RangeUnit::N, 1, p2(12), SdTree::kOracleBound},
    {Id::DeltaSymmetry, "DELTA_SYMMETRY", "Symmetry lemma: delta(2^(k+1) - r) = delta(2^k + r) for 0 <= r <= 2^k",
     RangeUnit::N, 1, p2(16), kFormulaCap},
    {Id::DeltaNeighbor, "DELTA_NEIGHBOR",
     "Neighbor corollary: delta(n) = [delta(n-1) + delta(n+1)]/2 + 1 - rho1(r) for 0 < r < 2^k", RangeUnit::N, 1,
     p2(16), kFormulaCap},
    {Id::DeltaStep, "DELTA_STEP", "Step recurrence: delta(n+1) = delta(n) + floor(log2 n) - 2 s1(n) + 2", RangeUnit::N,
     1, p2(16), kFormulaCap},
    {Id::LambdaVsLevels, "LAMBDA_VS_LEVELS",
     "Per-level closed form: lambda_i(n) equals the tree's D-node count at depth i", RangeUnit::N, 1, p2(11),
     SdTree::kOracleBound},
    {Id::LambdaDiff, "LAMBDA_DIFF",
     "Lambda difference lemma: for odd r, 0 < i < k, lambda_i(n) - lambda_i(n-1) = +1 if n_i = 0, -1 if n_i = 1",
     RangeUnit::N, 1, p2(16), kFormulaCap},
    {Id::TakagiFiveWay, "TAKAGI_FIVE_WAY",
     "Dilation theorem tau(r/2^k) = delta(2^k+r)/2^k against the digit-count definition, the closed and explicit "
     "forms and the tent series, 0 <= r < 2^k",
     RangeUnit::K, 1, 12, kGridCap},
    {Id::TakagiNeighbor, "TAKAGI_NEIGHBOR",
     "Takagi neighbor theorem: tau(r/2^k) = [tau((r-1)/2^k) + tau((r+1)/2^k)]/2 + (1 - rho1(r))/2^k", RangeUnit::N,
     1, p2(13), kFormulaCap},
    {Id::TakagiStep, "TAKAGI_STEP", "Takagi step recurrence: tau((r+1)/2^k) = tau(r/2^k) + (k - 2 s1(n) + 2)/2^k",
     RangeUnit::N, 1, p2(13), kFormulaCap},
    {Id::TakagiReflection, "TAKAGI_REFLECTION", "Reflection: tau(r/2^k) = tau((2^k - r)/2^k)", RangeUnit::K, 1, 12,
     kGridCap},
    {Id::TakagiReduction, "TAKAGI_REDUCTION",
     "Reduction invariance: dilation, closed and explicit forms give tau(r/2^k) = tau(2r/2^(k+1))", RangeUnit::K, 1,
     12, kGridCap},
    {Id::Boros, "BOROS",
     "Boros inequality at x = (r-1)/2^k, y = (r+1)/2^k: tau((x+y)/2) <= [tau(x) + tau(y)]/2 + |x-y|/2, "
     "equality exactly for odd r",
     RangeUnit::N, 1, p2(13), kFormulaCap},
    {Id::S1Lemmas, "S1_LEMMAS",
     "Hamming weight lemmas: s1(n) = s1(r) + 1; n even => s1(n+1) = s1(n) + 1; n odd => s1(n-1) = s1(n) - 1; "
     "odd r < 2^(k-1) => s1(2^k - r) = 1 + k - s1(r)",
     RangeUnit::N, 1, p2(16), kFormulaCap},
    {Id::S1FromTakagi, "S1_FROM_TAKAGI",
     "Hamming weight from Takagi: s1(n) = 2^(k-1) [tau(r/2^k) - tau((r+1)/2^k)] + (k+2)/2", RangeUnit::N, 1, p2(16),
     kFormulaCap},
    {Id::S1FromDelta, "S1_FROM_DELTA",
     "Hamming weight from delta: s1(n) = [delta(n) - delta(n+1) + floor(log2 n)]/2 + 1", RangeUnit::N, 1, p2(16),
     kFormulaCap},
    {Id::S1ThreeForms, "S1_THREE_FORMS",
     "Three cumulative digit-sum forms: S1(n) = [nk + 2^k (2x - tau(x))]/2 = (nk + 2r - 2^k tau(r/2^k))/2 = "
     "(nk + 2r - delta(n))/2 = sum_{i<n} s1(i)",
     RangeUnit::N, 1, p2(16), kTableCap},
    {Id::S1Powtwo, "S1_POWTWO", "Power-of-two lemma: S1(2^k) = k 2^(k-1)", RangeUnit::K, 1, 20, kPowtwoCap},
    {Id::S1TrollopeFloat, "S1_TROLLOPE_FLOAT",
     "Trollope's formula: S1(n) = n log2(n)/2 + 2^(k-1) [2x - tau(x) - (1+x) log2(1+x)], relative error <= 1e-9",
     RangeUnit::N, 1, kTrollopeCap, kTrollopeCap},
}};

// Index space of one sweep.
struct Coord {
  std::uint64_t n = 0;  // n-ranges: the swept integer; grids: 2^k + r
  unsigned k = 0;
  std::uint64_t r = 0;
};

class Space {
 public:
  static Space integers(std::uint64_t lo, std::uint64_t hi) {
    Space s;
    s.lo_ = lo;
    s.size_ = hi - lo + 1;
    return s;
  }

  // Every k in [k_lo, k_hi] with r in [0, 2^k) or [0, 2^k].
  static Space grid(unsigned k_lo, unsigned k_hi, bool include_one) {
    Space s;
    s.grid_ = true;
    s.k_lo_ = k_lo;
    std::uint64_t offset = 0;
    for (unsigned k = k_lo; k <= k_hi; ++k) {
      s.offsets_.push_back(offset);
      offset += p2(k) + (include_one ? 1 : 0);
    }
    s.offsets_.push_back(offset);
    s.size_ = offset;
    return s;
  }

  std::uint64_t size() const { return size_; }

  Coord at(std::uint64_t index) const {
    Coord c;
    if (!grid_) {
      c.n = lo_ + index;
      if (c.n > 0) {
        c.k = floor_log2(c.n);
        c.r = c.n - p2(c.k);
      }
      return c;
    }
    const auto it = std::upper_bound(offsets_.begin(), offsets_.end(), index) - 1;
    c.k = k_lo_ + static_cast<unsigned>(it - offsets_.begin());
    c.r = index - *it;
    c.n = p2(c.k) + c.r;
    return c;
  }

 private:
  bool grid_ = false;
  std::uint64_t lo_ = 0;
  unsigned k_lo_ = 0;
  std::uint64_t size_ = 0;
  std::vector<std::uint64_t> offsets_;
};

// Fills detail (when given) with both sides and returns whether the instance holds.
using CheckFn = std::function<bool(const Coord&, InstanceFailure*)>;
using ValidFn = std::function<bool(const Coord&)>;

class IdentityInstances final : public InstanceSet {
 public:
  IdentityInstances(Space space, ValidFn valid, CheckFn check)
      : space_(std::move(space)), valid_(std::move(valid)), check_(std::move(check)) {}

  std::uint64_t size() const override { return space_.size(); }
  bool valid(std::uint64_t index) const override { return !valid_ || valid_(space_.at(index)); }
  bool holds(std::uint64_t index) const override { return check_(space_.at(index), nullptr); }

  InstanceFailure describe(std::uint64_t index) const {
    const Coord c = space_.at(index);
    InstanceFailure failure;
    failure.instance = grid_text(c);
    try {
      check_(c, &failure);
    } catch (const std::exception& e) {
      failure.lhs = "exception";
      failure.rhs = e.what();
    }
    return failure;
  }

  enum class Label { N, K, Grid };
  void set_label(Label label) { label_ = label; }

 private:
  std::string grid_text(const Coord& c) const {
    switch (label_) {
      case Label::Grid:
        return "k=" + std::to_string(c.k) + " r=" + std::to_string(c.r);
      case Label::K:
        return "k=" + std::to_string(c.n);
      case Label::N:
        break;
    }
    return "n=" + std::to_string(c.n);
  }

  Space space_;
  ValidFn valid_;
  CheckFn check_;
  Label label_ = Label::N;
};

// Records both sides and returns whether they are equal.
template <class T>
bool report_sides(InstanceFailure* detail, const T& lhs, const T& rhs, bool ok) {
  if (detail != nullptr) {
    if constexpr (std::is_same_v<T, DyadicRational>) {
      detail->lhs = lhs.to_string();
      detail->rhs = rhs.to_string();
    } else if constexpr (std::is_same_v<T, std::string>) {
      detail->lhs = lhs;
      detail->rhs = rhs;
    } else {
      detail->lhs = std::to_string(lhs);
      detail->rhs = std::to_string(rhs);
    }
  }
  return ok;
}

std::string join(std::initializer_list<std::pair<const char*, std::string>> parts) {
  std::string out;
  for (const auto& [key, value] : parts) {
    if (!out.empty()) out += ',';
    out += key;
    out += '=';
    out += value;
  }
  return out;
}

std::string str(std::uint64_t v) { return std::to_string(v); }
std::string str(int128 v) { return to_string(v); }
std::string str(const DyadicRational& v) { return v.to_string(); }

std::unique_ptr<IdentityInstances> delta_recursive_vs_closed(std::uint64_t lo, std::uint64_t hi) {
  auto check = [](const Coord& c, InstanceFailure* detail) {
    const std::uint64_t n = c.n;
    const std::uint64_t recursive = delta_recursive(n);
    const std::uint64_t levels = delta_closed_levels(n);
    const std::uint64_t signed_form = delta_closed_signed(n);
    const std::uint64_t suffix = delta_explicit_suffix(n);
    const std::uint64_t popcount = delta_explicit_popcount(n);
    std::uint64_t split = recursive;
    if (n >= 2) {
      const std::uint64_t m = n / 2;
      split = n % 2 == 0 ? 2 * delta_closed_levels(m) : delta_closed_levels(m) + delta_closed_levels(m + 1) + 1;
    }
    const bool ok = recursive == levels && levels == signed_form && signed_form == suffix && suffix == popcount &&
                    split == levels;
    return report_sides(detail, join({{"recursive", str(recursive)}}),
                        join({{"levels", str(levels)},
                              {"signed", str(signed_form)},
                              {"suffix", str(suffix)},
                              {"popcount", str(popcount)},
                              {"split", str(split)}}),
                        ok);
  };
  return std::make_unique<IdentityInstances>(Space::integers(lo, hi), nullptr, check);
}

std::unique_ptr<IdentityInstances> delta_vs_tree(std::uint64_t lo, std::uint64_t hi) {
  auto check = [](const Coord& c, InstanceFailure* detail) {
    const SdTree tree = build_dnc_tree(c.n);
    const LabelCounts counts = count_labels(tree);
    const bool shape = is_valid_dnc_tree(tree) && counts.s_count + counts.d_count == c.n - 1;
    const std::uint64_t recursive = delta_recursive(c.n);
    const std::uint64_t closed = delta_closed(c.n);
    const std::uint64_t explicit_form = delta_explicit(c.n);
    const bool ok = shape && counts.d_count == recursive && recursive == closed && closed == explicit_form;
    return report_sides(detail,
                        join({{"tree_d", str(counts.d_count)},
                              {"tree_s", str(counts.s_count)},
                              {"valid", shape ? "yes" : "no"}}),
                        join({{"recursive", str(recursive)}, {"closed", str(closed)}, {"explicit", str(explicit_form)}}),
                        ok);
  };
  return std::make_unique<IdentityInstances>(Space::integers(lo, hi), nullptr, check);
}

std::unique_ptr<IdentityInstances> delta_symmetry(std::uint64_t lo, std::uint64_t hi) {
  auto check = [](const Coord& c, InstanceFailure* detail) {
    const std::uint64_t lhs = delta_closed(p2(c.k + 1) - c.r);
    const std::uint64_t rhs = delta_closed(c.n);
    return report_sides(detail, lhs, rhs, lhs == rhs);
  };
  return std::make_unique<IdentityInstances>(Space::integers(lo, hi), nullptr, check);
}

std::unique_ptr<IdentityInstances> delta_neighbor(std::uint64_t lo, std::uint64_t hi) {
  auto valid = [](const Coord& c) { return c.r != 0; };
  auto check = [](const Coord& c, InstanceFailure* detail) {
    const NeighborIdentity id = check_neighbor_identity(c.n);
    return report_sides(detail, id.lhs, id.rhs, id.holds);
  };
  return std::make_unique<IdentityInstances>(Space::integers(lo, hi), valid, check);
}

std::unique_ptr<IdentityInstances> delta_step_identity(std::uint64_t lo, std::uint64_t hi) {
  auto check = [](const Coord& c, InstanceFailure* detail) {
    const int128 lhs = static_cast<int128>(delta_closed(c.n + 1)) - static_cast<int128>(delta_closed(c.n));
    const int128 rhs = delta_step(c.n);
    return report_sides(detail, str(lhs), str(rhs), lhs == rhs);
  };
  return std::make_unique<IdentityInstances>(Space::integers(lo, hi), nullptr, check);
}

std::unique_ptr<IdentityInstances> lambda_vs_levels(std::uint64_t lo, std::uint64_t hi) {
  auto valid = [](const Coord& c) { return c.n >= 2; };
  auto check = [](const Coord& c, InstanceFailure* detail) {
    const LevelProfile profile = level_d_counts(build_dnc_tree(c.n));
    std::vector<std::uint64_t> formula;
    for (unsigned i = 0; i < c.k; ++i) formula.push_back(lambda_level(c.n, i));
    const bool ok = profile.d_counts == formula;
    if (detail != nullptr) {
      auto list = [](const std::vector<std::uint64_t>& v) {
        std::string s = "[";
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
        return s + "]";
      };
      detail->lhs = list(formula);
      detail->rhs = list(profile.d_counts);
    }
    return ok;
  };
  return std::make_unique<IdentityInstances>(Space::integers(lo, hi), valid, check);
}

std::unique_ptr<IdentityInstances> lambda_diff(std::uint64_t lo, std::uint64_t hi) {
  auto valid = [](const Coord& c) { return c.r % 2 == 1; };
  auto check = [](const Coord& c, InstanceFailure* detail) {
    for (unsigned i = 1; i < c.k; ++i) {
      const int128 diff = static_cast<int128>(lambda_level(c.n, i)) - static_cast<int128>(lambda_level(c.n - 1, i));
      const int128 expected = ((c.n >> i) & 1u) == 0 ? 1 : -1;
      if (diff != expected) {
        return report_sides(detail, "i=" + std::to_string(i) + ":" + str(diff), str(expected), false);
      }
    }
    return true;
  };
  return std::make_unique<IdentityInstances>(Space::integers(lo, hi), valid, check);
}

std::unique_ptr<IdentityInstances> takagi_five_way(unsigned k_lo, unsigned k_hi) {
  auto check = [](const Coord& c, InstanceFailure* detail) {
    const DyadicRational dilation = takagi_dilation(c.r, c.k);
    const DyadicRational definition = takagi_definition_at(c.r, c.k);
    const DyadicRational closed = takagi_closed(c.r, c.k);
    const DyadicRational explicit_form = takagi_explicit(c.r, c.k);
    const DyadicRational tent = tent_series(DyadicRational(static_cast<int128>(c.r), c.k));
    const bool ok = dilation == definition && definition == closed && closed == explicit_form && explicit_form == tent;
    return report_sides(detail, join({{"dilation", str(dilation)}}),
                        join({{"definition", str(definition)},
                              {"closed", str(closed)},
                              {"explicit", str(explicit_form)},
                              {"tent", str(tent)}}),
                        ok);
  };
  auto set = std::make_unique<IdentityInstances>(Space::grid(k_lo, k_hi, false), nullptr, check);
  set->set_label(IdentityInstances::Label::Grid);
  return set;
}

std::unique_ptr<IdentityInstances> takagi_neighbor(std::uint64_t lo, std::uint64_t hi) {
  auto valid = [](const Coord& c) { return c.r != 0; };
  auto check = [](const Coord& c, InstanceFailure* detail) {
    const TakagiNeighbor id = check_takagi_neighbor(c.r, c.k);
    return report_sides(detail, id.lhs, id.rhs, id.holds);
  };
  return std::make_unique<IdentityInstances>(Space::integers(lo, hi), valid, check);
}

std::unique_ptr<IdentityInstances> takagi_step_identity(std::uint64_t lo, std::uint64_t hi) {
  auto check = [](const Coord& c, InstanceFailure* detail) {
    const DyadicRational stepped = takagi_step(c.r, c.k);
    const DyadicRational direct = tent_series(DyadicRational(static_cast<int128>(c.r + 1), c.k));
    return report_sides(detail, stepped, direct, stepped == direct);
  };
  return std::make_unique<IdentityInstances>(Space::integers(lo, hi), nullptr, check);
}

std::unique_ptr<IdentityInstances> takagi_reflection(unsigned k_lo, unsigned k_hi) {
  auto check = [](const Coord& c, InstanceFailure* detail) {
    const std::uint64_t mirror = p2(c.k) - c.r;
    const DyadicRational lhs = takagi_dilation(c.r, c.k);
    const DyadicRational rhs = takagi_dilation(mirror, c.k);
    const DyadicRational tent = tent_series(DyadicRational(static_cast<int128>(mirror), c.k));
    return report_sides(detail, lhs, rhs, lhs == rhs && rhs == tent);
  };
  auto set = std::make_unique<IdentityInstances>(Space::grid(k_lo, k_hi, true), nullptr, check);
  set->set_label(IdentityInstances::Label::Grid);
  return set;
}

std::unique_ptr<IdentityInstances> takagi_reduction(unsigned k_lo, unsigned k_hi) {
  auto check = [](const Coord& c, InstanceFailure* detail) {
    const DyadicRational coarse = takagi_dilation(c.r, c.k);
    const DyadicRational fine = takagi_dilation(2 * c.r, c.k + 1);
    const bool ok = coarse == fine && takagi_closed(c.r, c.k) == takagi_closed(2 * c.r, c.k + 1) &&
                    takagi_explicit(c.r, c.k) == takagi_explicit(2 * c.r, c.k + 1);
    return report_sides(detail, coarse, fine, ok);
  };
  auto set = std::make_unique<IdentityInstances>(Space::grid(k_lo, k_hi, true), nullptr, check);
  set->set_label(IdentityInstances::Label::Grid);
  return set;
}

std::unique_ptr<IdentityInstances> boros(std::uint64_t lo, std::uint64_t hi) {
  auto valid = [](const Coord& c) { return c.r != 0; };
  auto check = [](const Coord& c, InstanceFailure* detail) {
    const BorosCheck b = boros_check(c.r, c.k);
    const bool ok = b.lhs <= b.rhs && b.strict == (c.r % 2 == 0);
    if (detail != nullptr) {
      detail->lhs = b.lhs.to_string();
      detail->rhs = b.rhs.to_string() + (b.strict ? " (strict)" : " (equal)");
    }
    return ok;
  };
  return std::make_unique<IdentityInstances>(Space::integers(lo, hi), valid, check);
}

std::unique_ptr<IdentityInstances> s1_lemmas(std::uint64_t lo, std::uint64_t hi) {
  auto check = [](const Coord& c, InstanceFailure* detail) {
    const std::uint64_t n = c.n;
    auto fail = [&](const char* lemma, int128 lhs, int128 rhs) {
      return report_sides(detail, std::string(lemma) + ":" + str(lhs), str(rhs), false);
    };
    if (s1(n) != s1(c.r) + 1) return fail("addone", s1(n), s1(c.r) + 1);
    if (n % 2 == 0 && s1(n + 1) != s1(n) + 1) return fail("even", s1(n + 1), s1(n) + 1);
    if (n % 2 == 1 && s1(n - 1) + 1 != s1(n)) return fail("odd", s1(n - 1), int128{s1(n)} - 1);
    if (c.k >= 1 && c.r % 2 == 1 && c.r < p2(c.k - 1)) {
      const int128 lhs = s1(p2(c.k) - c.r);
      const int128 rhs = 1 + static_cast<int128>(c.k) - s1(c.r);
      if (lhs != rhs) return fail("complement", lhs, rhs);
    }
    return true;
  };
  return std::make_unique<IdentityInstances>(Space::integers(lo, hi), nullptr, check);
}

std::unique_ptr<IdentityInstances> s1_from_takagi_identity(std::uint64_t lo, std::uint64_t hi) {
  auto check = [](const Coord& c, InstanceFailure* detail) {
    const unsigned lhs = s1(c.n);
    const unsigned rhs = s1_from_takagi(c.n);
    return report_sides(detail, lhs, rhs, lhs == rhs);
  };
  return std::make_unique<IdentityInstances>(Space::integers(lo, hi), nullptr, check);
}

std::unique_ptr<IdentityInstances> s1_from_delta_identity(std::uint64_t lo, std::uint64_t hi) {
  auto check = [](const Coord& c, InstanceFailure* detail) {
    const unsigned lhs = s1(c.n);
    const unsigned rhs = s1_from_delta(c.n);
    return report_sides(detail, lhs, rhs, lhs == rhs);
  };
  return std::make_unique<IdentityInstances>(Space::integers(lo, hi), nullptr, check);
}

std::unique_ptr<IdentityInstances> s1_three_forms(std::uint64_t lo, std::uint64_t hi) {
  auto table = std::make_shared<const std::vector<std::uint64_t>>(cumsum_direct_table(lo, hi));
  auto check = [table, lo](const Coord& c, InstanceFailure* detail) {
    const int128 direct = (*table)[c.n - lo];
    const CumsumForms forms = cumsum_forms(c.n);
    const bool ok = forms.a == direct && forms.b == direct && forms.c == direct;
    return report_sides(detail, join({{"direct", str(direct)}}),
                        join({{"a", str(forms.a)}, {"b", str(forms.b)}, {"c", str(forms.c)}}), ok);
  };
  return std::make_unique<IdentityInstances>(Space::integers(lo, hi), nullptr, check);
}

std::unique_ptr<IdentityInstances> s1_powtwo(std::uint64_t lo, std::uint64_t hi) {
  auto check = [](const Coord& c, InstanceFailure* detail) {
    const auto k = static_cast<unsigned>(c.n);
    const int128 lhs = cumsum_powtwo(k);
    const int128 rhs = cumsum_direct(p2(k));
    return report_sides(detail, str(lhs), str(rhs), lhs == rhs);
  };
  auto set = std::make_unique<IdentityInstances>(Space::integers(lo, hi), nullptr, check);
  set->set_label(IdentityInstances::Label::K);
  return set;
}

std::unique_ptr<IdentityInstances> s1_trollope(std::uint64_t lo, std::uint64_t hi) {
  auto table = std::make_shared<const std::vector<std::uint64_t>>(cumsum_direct_table(lo, hi));
  auto valid = [](const Coord& c) { return c.n >= 2; };
  auto check = [table, lo](const Coord& c, InstanceFailure* detail) {
    const auto direct = static_cast<double>((*table)[c.n - lo]);
    const double estimate = cumsum_trollope(c.n);
    const bool ok = std::abs(estimate - direct) <= kTrollopeTolerance * std::max(1.0, direct);
    if (detail != nullptr) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.17g", estimate);
      detail->lhs = buf;
      std::snprintf(buf, sizeof buf, "%.17g", direct);
      detail->rhs = buf;
    }
    return ok;
  };
  return std::make_unique<IdentityInstances>(Space::integers(lo, hi), valid, check);
}

std::unique_ptr<IdentityInstances> make_instances(IdentityId id, std::uint64_t lo, std::uint64_t hi) {
  const auto klo = static_cast<unsigned>(lo);
  const auto khi = static_cast<unsigned>(hi);
  switch (id) {
    case Id::DeltaRecursiveVsClosed:
      return delta_recursive_vs_closed(lo, hi);
    case Id::DeltaVsTreeOracle:
      return delta_vs_tree(lo, hi);
    case Id::DeltaSymmetry:
      return delta_symmetry(lo, hi);
    case Id::DeltaNeighbor:
      return delta_neighbor(lo, hi);
    case Id::DeltaStep:
      return delta_step_identity(lo, hi);
    case Id::LambdaVsLevels:
      return lambda_vs_levels(lo, hi);
    case Id::LambdaDiff:
      return lambda_diff(lo, hi);
    case Id::TakagiFiveWay:
      return takagi_five_way(klo, khi);
    case Id::TakagiNeighbor:
      return takagi_neighbor(lo, hi);
    case Id::TakagiStep:
      return takagi_step_identity(lo, hi);
    case Id::TakagiReflection:
      return takagi_reflection(klo, khi);
    case Id::TakagiReduction:
      return takagi_reduction(klo, khi);
    case Id::Boros:
      return boros(lo, hi);
    case Id::S1Lemmas:
      return s1_lemmas(lo, hi);
    case Id::S1FromTakagi:
      return s1_from_takagi_identity(lo, hi);
    case Id::S1FromDelta:
      return s1_from_delta_identity(lo, hi);
    case Id::S1ThreeForms:
      return s1_three_forms(lo, hi);
    case Id::S1Powtwo:
      return s1_powtwo(lo, hi);
    case Id::S1TrollopeFloat:
      return s1_trollope(lo, hi);
  }
  throw std::domain_error("unknown identity id");
}

}  // namespace

std::span<const IdentityInfo> list_identities() { return kCatalog; }

const IdentityInfo& identity_info(IdentityId id) {
  const auto index = static_cast<std::size_t>(id);
  if (index >= kCatalog.size()) throw std::domain_error("unknown identity id");
  return kCatalog[index];
}

IdentityId identity_from_name(std::string_view name) {
  for (const IdentityInfo& info : kCatalog) {
    if (info.name == name) return info.id;
  }
  throw std::domain_error("unknown identity '" + std::string(name) + "'");
}

std::string_view unit_name(RangeUnit unit) { return unit == RangeUnit::N ? "n" : "k"; }

IdentityReport verify_range(IdentityId id, std::uint64_t lo, std::uint64_t hi, Execution execution) {
  const IdentityInfo& info = identity_info(id);
  if (lo == 0) throw std::invalid_argument("range must start at 1 or above");
  if (lo > hi) throw std::invalid_argument("empty range: lo > hi");
  if (hi > info.cap) {
    throw std::range_error(std::string(info.name) + " accepts " + std::string(unit_name(info.unit)) + " <= " +
                           std::to_string(info.cap));
  }

  const auto instances = make_instances(id, lo, hi);
  const SweepResult sweep = execution == Execution::Serial ? sweep_serial(*instances) : sweep_parallel(*instances);

  IdentityReport report;
  report.id = id;
  report.unit = info.unit;
  report.lo = lo;
  report.hi = hi;
  report.checked = sweep.checked;
  report.passed = !sweep.first_failure.has_value();
  if (sweep.first_failure) report.first_failure = instances->describe(*sweep.first_failure);
  return report;
}

std::string format_report(const IdentityReport& report) {
  std::ostringstream out;
  out << identity_info(report.id).name << ' ' << unit_name(report.unit) << "=[" << report.lo << ',' << report.hi
      << "] checked=" << report.checked << ' ' << (report.passed ? "PASS" : "FAIL");
  if (report.first_failure) {
    const InstanceFailure& f = *report.first_failure;
    out << " at " << f.instance << " lhs=" << f.lhs << " rhs=" << f.rhs;
  }
  return out.str();
}

}  // namespace blancmange
