#include "commtuple/delta.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "commtuple/parallel.hpp"

namespace commtuple {

DeltaSign sign_of(const BigInt& x) {
  const int s = sgn(x);
  return s < 0 ? DeltaSign::kNegative : (s > 0 ? DeltaSign::kPositive : DeltaSign::kZero);
}

char symbol(DeltaSign s) {
  switch (s) {
    case DeltaSign::kNegative:
      return '-';
    case DeltaSign::kZero:
      return '0';
    case DeltaSign::kPositive:
      return '+';
  }
  return '?';
}

std::string name(DeltaSign s) {
  switch (s) {
    case DeltaSign::kNegative:
      return "negative";
    case DeltaSign::kZero:
      return "zero";
    case DeltaSign::kPositive:
      return "positive";
  }
  return "?";
}

DeltaSign parse_sign(const std::string& text) {
  if (text == "negative" || text == "-") return DeltaSign::kNegative;
  if (text == "zero" || text == "0") return DeltaSign::kZero;
  if (text == "positive" || text == "+") return DeltaSign::kPositive;
  throw std::invalid_argument("unknown sign '" + text + "'");
}

namespace {

void require_pair(int a, int b) {
  if (a < 2 || b < 2) throw std::invalid_argument("delta: need a, b >= 2");
}

}  // namespace

BigInt delta(const CountTable& table, int a, int b) {
  require_pair(a, b);
  if (table.n_max() < a + b) throw std::out_of_range("delta: table too short for a + b");
  return table[a] * table[b] - table[a + b];
}

BigInt delta(int a, int b, int ell) {
  require_pair(a, b);
  if (ell < 1) throw std::invalid_argument("delta: need ell >= 1");
  return delta(CountTable(ell, a + b), a, b);
}

ExceptionReport scan_exceptions(int ell, int a_max) {
  if (ell < 2 || a_max < 2) throw std::invalid_argument("scan_exceptions: need ell, a_max >= 2");
  const CountTable table(ell, 2 * a_max);
  ExceptionReport report{ell, a_max, {}, {}};
  for (int a = 2; a <= a_max; ++a) {
    for (int b = a; b <= a_max; ++b) {
      switch (sign_of(delta(table, a, b))) {
        case DeltaSign::kZero:
          report.zero_pairs.emplace_back(a, b);
          break;
        case DeltaSign::kNegative:
          report.negative_pairs.emplace_back(a, b);
          break;
        case DeltaSign::kPositive:
          break;
      }
    }
  }
  return report;
}

std::vector<ExceptionReport> scan_exceptions(int ell_lo, int ell_hi, int a_max, int workers) {
  if (ell_hi < ell_lo) return {};
  std::vector<ExceptionReport> out(static_cast<std::size_t>(ell_hi - ell_lo + 1));
  parallel_for(out.size(), workers, [&](std::size_t i) {
    out[i] = scan_exceptions(ell_lo + static_cast<int>(i), a_max);
  });
  return out;
}

int empirical_positivity_threshold(const ExceptionReport& report) {
  int threshold = 2;
  for (const auto* set : {&report.zero_pairs, &report.negative_pairs}) {
    for (const auto& [small, large] : *set) threshold = std::max(threshold, small + 1);
  }
  return threshold;
}

std::string tag(BoundCase c) {
  switch (c) {
    case BoundCase::kBothZero:
      return "0-0";
    case BoundCase::kZeroOne:
      return "0-1";
    case BoundCase::kOneOne:
      return "1-1";
    case BoundCase::kZeroTwo:
      return "0-2";
    case BoundCase::kOneTwo:
      return "1-2";
    case BoundCase::kTwoTwo:
      return "2-2";
    case BoundCase::kZeroWithTwo:
      return "0-b2";
    case BoundCase::kTwoWithTwo:
      return "2-b2";
    case BoundCase::kZeroWithFour:
      return "0-b4";
    case BoundCase::kExplicitPair:
      return "explicit";
  }
  return "?";
}

BoundCase parse_bound_case(const std::string& text) {
  for (BoundCase c : kAllBoundCases) {
    if (tag(c) == text) return c;
  }
  throw std::invalid_argument("unknown bound case '" + text + "'");
}

namespace {

double log98(double x) { return std::log(x) / std::log(9.0 / 8.0); }

struct ExplicitPair {
  int a;
  int b;
  int ell_star;
  DeltaSign sign;
};

// Small pairs with a = 0 (mod 3), b in {2, 4}, plus (5, 2): each settled by
// its own comparison of leading terms, valid from a literal threshold.
constexpr ExplicitPair kExplicitPairs[] = {
    {3, 2, 7, DeltaSign::kNegative},   {3, 4, 20, DeltaSign::kNegative},
    {5, 2, 16, DeltaSign::kNegative},  {6, 2, 72, DeltaSign::kPositive},
    {6, 4, 52, DeltaSign::kPositive},  {9, 2, 97, DeltaSign::kPositive},
    {9, 4, 91, DeltaSign::kPositive},
};

// Bound for one orientation (a, b); nullopt when no case matches.
std::optional<std::pair<BoundCase, std::pair<double, DeltaSign>>> oriented_bound(int a, int b) {
  const int ra = a % 3;
  const int rb = b % 3;
  const double s = a + b;
  using R = std::pair<BoundCase, std::pair<double, DeltaSign>>;
  const auto pos = DeltaSign::kPositive;
  const auto neg = DeltaSign::kNegative;

  if (b == 2 && ra == 0 && a > 9) {
    return R{BoundCase::kZeroWithTwo,
             {1 + log98(72.0 / 17.0) + (a - 6) / 3.0 * log98(2.0 / 3.0 * (a - 6)) +
                  (a + 2) * log98(2),
              pos}};
  }
  if (b == 2 && ra == 2 && a > 5) {
    return R{BoundCase::kTwoWithTwo,
             {1 + (a - 2) / 3.0 * log98(2.0 / 3.0 * (a - 2)) + a * log98(a), neg}};
  }
  if (b == 4 && ra == 0 && a > 9) {
    return R{BoundCase::kZeroWithFour,
             {1 + log98(360.0 / 227.0) + (a - 6) / 3.0 * log98(2.0 / 3.0 * (a - 6)) +
                  (a + 4) * log98(2),
              pos}};
  }
  if (ra == 0 && rb == 0) {
    return R{BoundCase::kBothZero, {1 + s / 3.0 * log98(4.0 * s / 3.0), pos}};
  }
  if (ra == 0 && rb == 1 && b > 4) {
    return R{BoundCase::kZeroOne,
             {log98(7.0 / 6.0) + (s - 2) / 3.0 * log98(4) + (s - 4) / 3.0 * log98((s - 4) / 3.0),
              pos}};
  }
  if (ra == 1 && rb == 1 && b > 1) {
    return R{BoundCase::kOneOne,
             {-6 + 9 * s + (s / 2.0 + 2) / 3.0 * log98((s - 2) / 3.0), neg}};
  }
  if (ra == 0 && rb == 2 && b > 2) {
    return R{BoundCase::kZeroTwo,
             {1 + (s - 1) / 3.0 * log98(4) + (s - 2) / 3.0 * log98((s - 2) / 3.0), pos}};
  }
  if (ra == 1 && rb == 2 && a > 1) {
    return R{BoundCase::kOneTwo, {5 + 9 * s + (s / 2.0 + 4) / 3.0 * log98(s / 3.0), neg}};
  }
  if (ra == 2 && rb == 2 && a > 2 && b > 2) {
    return R{BoundCase::kTwoTwo,
             {1 + log98(7.0 / 6.0) + ((s - 4) / 3.0 + s) * log98(2), pos}};
  }
  return std::nullopt;
}

}  // namespace

std::optional<TheoremBound> theorem_bound(int a, int b) {
  require_pair(a, b);
  for (const auto& e : kExplicitPairs) {
    if ((e.a == a && e.b == b) || (e.a == b && e.b == a)) {
      return TheoremBound{e.ell_star, BoundCase::kExplicitPair, e.sign,
                          static_cast<double>(e.ell_star)};
    }
  }
  auto found = oriented_bound(a, b);
  if (!found) found = oriented_bound(b, a);
  if (!found) return std::nullopt;
  const double value = found->second.first;
  const int ell_star = std::max(2, static_cast<int>(std::ceil(value)) + 2);
  return TheoremBound{ell_star, found->first, found->second.second, value};
}

DeltaSign SignProfile::sign_at(int ell) const {
  if (ell < 2 || ell > ell_checked) throw std::out_of_range("sign_at: ell outside profile");
  int start = 2;
  for (const auto& run : runs) {
    if (ell < start + run.length) return run.sign;
    start += run.length;
  }
  throw std::logic_error("sign_at: runs do not cover ell_checked");
}

bool SignProfile::irregular() const {
  if (runs.size() == 1) return false;
  if (runs.size() > 2) return true;
  const DeltaSign first = runs.front().sign;
  return first == DeltaSign::kZero || first == final_sign();
}

std::string SignProfile::label() const {
  std::string out(1, symbol(final_sign()));
  out += std::to_string(stable_from);
  if (irregular()) out += '*';
  return out;
}

std::string SignProfile::runs_text() const {
  std::string out;
  for (const auto& run : runs) {
    if (!out.empty()) out += ',';
    out += symbol(run.sign);
    out += ':';
    out += std::to_string(run.length);
  }
  return out;
}

namespace {

int checked_range(const std::optional<TheoremBound>& bound, std::optional<int> override) {
  const int cap = override.value_or(0);
  return bound ? std::max(bound->ell_star, cap) : std::max(kEmpiricalCap, cap);
}

SignProfile build_profile(int a, int b, std::optional<int> override, TableBank& bank) {
  SignProfile profile;
  profile.a = a;
  profile.b = b;
  profile.bound = theorem_bound(a, b);
  profile.certificate =
      profile.bound ? Certificate::kTheoremBound : Certificate::kEmpiricalOnly;
  profile.ell_checked = checked_range(profile.bound, override);
  for (int ell = 2; ell <= profile.ell_checked; ++ell) {
    const DeltaSign s = sign_of(delta(*bank.get(ell, a + b), a, b));
    if (!profile.runs.empty() && profile.runs.back().sign == s) {
      ++profile.runs.back().length;
    } else {
      profile.runs.push_back({s, 1});
    }
  }
  profile.stable_from = profile.ell_checked - profile.runs.back().length + 1;
  return profile;
}

}  // namespace

SignProfile sign_profile(int a, int b, std::optional<int> ell_cap_override, TableBank* bank) {
  require_pair(a, b);
  if (bank) return build_profile(a, b, ell_cap_override, *bank);
  TableBank local;
  return build_profile(a, b, ell_cap_override, local);
}

std::vector<SignProfile> sign_profiles(int a_max, int workers,
                                       std::optional<int> ell_cap_override) {
  if (a_max < 2) throw std::invalid_argument("sign_profiles: need a_max >= 2");
  std::vector<Pair> pairs;
  int ell_max = 2;
  for (int a = 2; a <= a_max; ++a) {
    for (int b = a; b <= a_max; ++b) {
      pairs.emplace_back(a, b);
      ell_max = std::max(ell_max, checked_range(theorem_bound(a, b), ell_cap_override));
    }
  }
  TableBank bank;
  bank.prefetch(2, ell_max, 2 * a_max, workers);
  std::vector<SignProfile> out(pairs.size());
  parallel_for(pairs.size(), workers, [&](std::size_t i) {
    out[i] = build_profile(pairs[i].first, pairs[i].second, ell_cap_override, bank);
  });
  return out;
}

int witness_L(int a, int b) {
  if (a % 3 != 1 || b % 3 != 1 || b <= 1 || a <= 1) {
    throw std::invalid_argument("witness_L: need a = b = 1 (mod 3) with a, b > 1");
  }
  const double s = a + b;
  const double value = -6 + 9 * s + (s / 2.0 + 2) / 3.0 * log98((s - 2) / 3.0);
  return static_cast<int>(std::ceil(value));
}

DeltaSign almost_all_classification(int a, int b) {
  require_pair(a, b);
  const int ra = a % 3;
  const int rb = b % 3;
  if (ra == 0 || rb == 0) {
    const auto lo = std::min(a, b);
    const auto hi = std::max(a, b);
    const bool exceptional = (lo == 2 && hi == 3) || (lo == 3 && hi == 4);
    return exceptional ? DeltaSign::kNegative : DeltaSign::kPositive;
  }
  if (ra == 2 && rb == 2) return (a > 2 && b > 2) ? DeltaSign::kPositive : DeltaSign::kNegative;
  return DeltaSign::kNegative;
}

}  // namespace commtuple
