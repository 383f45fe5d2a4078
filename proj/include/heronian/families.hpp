#ifndef HERONIAN_FAMILIES_HPP
#define HERONIAN_FAMILIES_HPP

#include "amicability.hpp"
#include "error.hpp"
#include "numeric.hpp"
#include "parallelogram.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace heronian {

namespace detail {

// (F_n, F_{n+1}) by fast doubling.
inline std::pair<Natural, Natural> fib_pair(std::uint64_t n) {
  if (n == 0) return {Natural(0), Natural(1)};
  auto [a, b] = fib_pair(n / 2);
  Natural c = a * (2 * b - a);
  Natural d = a * a + b * b;
  if (n % 2 == 0) return {std::move(c), std::move(d)};
  Natural e = c + d;
  return {std::move(d), std::move(e)};
}

}  // namespace detail

/// F_0 = 0, F_1 = 1.
inline Natural fib(std::uint64_t n) { return detail::fib_pair(n).first; }

/// L_0 = 2, L_1 = 1, computed as F_{n-1} + F_{n+1} = 2F_{n+1} - F_n.
inline Natural lucas(std::uint64_t n) {
  auto [f, g] = detail::fib_pair(n);
  return 2 * g - f;
}

/// The rectangle H_n (base L_n, height 2F_n) and its companion C_n (base
/// F_{2n-2}, side F_{2n-1}, area 2F_{n+3}).
struct FamilyEntry {
  std::uint64_t n;
  Parallelogram h;
  Parallelogram c;
};

inline void require_family_index(std::uint64_t n) {
  if (n <= 3)
    throw Error(ErrorCode::IndexTooSmall, "family index must be at least 4, got " + std::to_string(n));
}

inline FamilyEntry family_pair(std::uint64_t n) {
  require_family_index(n);
  const Natural fn = fib(n);
  const Natural ln = lucas(n);
  Parallelogram h = Parallelogram::from_base_side_area(ln, 2 * fn, 2 * fn * ln);
  Parallelogram c = Parallelogram::from_base_side_area(fib(2 * n - 2), fib(2 * n - 1), 2 * fib(n + 3));
  return {n, std::move(h), std::move(c)};
}

struct FamilyChecks {
  bool pair = false;
  bool amicable_h = false;
  bool amicable_c = false;
  bool identity = false;
  bool existence_bound = false;

  bool all() const { return pair && amicable_h && amicable_c && identity && existence_bound; }
};

struct FamilyRow {
  FamilyEntry entry;
  FamilyChecks checks;
};

struct FamilyReport {
  std::vector<FamilyRow> rows;

  bool passed() const {
    return std::all_of(rows.begin(), rows.end(), [](const FamilyRow& r) { return r.checks.all(); });
  }
};

/// Re-derives every claim about H_n and C_n from fresh Fibonacci/Lucas values
/// instead of trusting the closed forms.
inline FamilyRow verify_family_index(std::uint64_t n) {
  FamilyRow row{family_pair(n), {}};
  const FamilyEntry& e = row.entry;
  row.checks.pair = verify_pair(e.h, e.c);
  row.checks.amicable_h = is_amicable(e.h);
  row.checks.amicable_c = is_amicable(e.c);
  row.checks.identity = fib(n) * lucas(n) == fib(2 * n);
  row.checks.existence_bound = 2 * fib(n + 3) <= fib(2 * n - 1) * fib(2 * n - 2);
  return row;
}

inline FamilyReport verify_family(std::uint64_t from, std::uint64_t to) {
  require_family_index(from);
  if (to < from)
    throw Error(ErrorCode::IndexTooSmall, "empty family range");
  FamilyReport report;
  for (std::uint64_t n = from; n <= to; ++n) report.rows.push_back(verify_family_index(n));
  return report;
}

}  // namespace heronian

#endif  // HERONIAN_FAMILIES_HPP
