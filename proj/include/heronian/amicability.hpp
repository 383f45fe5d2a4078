#ifndef HERONIAN_AMICABILITY_HPP
#define HERONIAN_AMICABILITY_HPP

#include "error.hpp"
#include "numeric.hpp"
#include "parallelogram.hpp"
#include "sweep.hpp"

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace heronian {

enum class VerdictReason { OddArea, BoundFail, Ok };

constexpr std::string_view to_string(VerdictReason reason) noexcept {
  switch (reason) {
    case VerdictReason::OddArea: return "ODD_AREA";
    case VerdictReason::BoundFail: return "BOUND_FAIL";
    case VerdictReason::Ok: return "OK";
  }
  return "UNKNOWN";
}

/// Amicability decision. amicable, reason == Ok and a present companion
/// always go together.
struct Verdict {
  bool amicable = false;
  VerdictReason reason = VerdictReason::OddArea;
  std::optional<Parallelogram> companion;
};

/// Two parallelograms whose areas and perimeters are swapped.
struct AmicablePair {
  Parallelogram first;
  Parallelogram second;
};

namespace detail {

inline void require_perimeter(const Natural& perimeter) {
  if (perimeter < 4 || !is_even(perimeter))
    throw Error(ErrorCode::InvalidPerimeter,
                "perimeter must be even and at least 4, got " + to_decimal(perimeter));
}

}  // namespace detail

/// Closed-form test on the invariants: area even and area^2 >= 16*perimeter.
/// This is (A/4)^2 >= P with the denominators cleared.
inline bool is_amicable_pair_of_invariants(const Natural& area, const Natural& perimeter) {
  detail::require_perimeter(perimeter);
  return is_even(area) && area * area >= 16 * perimeter;
}

inline VerdictReason classify(const Natural& area, const Natural& perimeter) {
  detail::require_perimeter(perimeter);
  if (!is_even(area)) return VerdictReason::OddArea;
  if (area * area < 16 * perimeter) return VerdictReason::BoundFail;
  return VerdictReason::Ok;
}

inline bool is_amicable(const Parallelogram& p) {
  return is_amicable_pair_of_invariants(p.area(), p.perimeter());
}

inline bool verify_pair(const Parallelogram& h, const Parallelogram& c) {
  return h.area() == c.perimeter() && c.area() == h.perimeter();
}

inline bool is_self_amicable(const Parallelogram& p) { return p.area() == p.perimeter(); }

/// Whether some Heronian parallelogram has this area and perimeter. For a
/// fixed half-perimeter the largest area is the most nearly square rectangle.
inline bool exists_heronian_with(const Natural& area, const Natural& perimeter) {
  if (perimeter < 4 || !is_even(perimeter) || area < 1) return false;
  const Natural quarter = perimeter / 4;
  const Natural quarter_up = (perimeter + 3) / 4;
  return area <= quarter * quarter_up;
}

/// The companion built from (area, perimeter) alone: base b nearest A/4 from
/// above, height P/b, side A/2 - b.
inline Parallelogram companion_for_invariants(const Natural& area, const Natural& perimeter) {
  switch (classify(area, perimeter)) {
    case VerdictReason::OddArea:
      throw Error(ErrorCode::NotAmicable, "ODD_AREA: area " + to_decimal(area) + " is odd");
    case VerdictReason::BoundFail:
      throw Error(ErrorCode::NotAmicable, "BOUND_FAIL: area^2 < 16*perimeter");
    case VerdictReason::Ok: break;
  }
  // A even, so A mod 4 is 0 or 2; in the second case A/4 + 1/2 = (A+2)/4.
  const Natural base = (area % 4 == 0) ? area / 4 : (area + 2) / 4;
  const Natural side = area / 2 - base;
  return Parallelogram::from_base_height_side(base, Rational(perimeter, base), side);
}

inline Parallelogram companion(const Parallelogram& p) {
  return companion_for_invariants(p.area(), p.perimeter());
}

inline Verdict decide_invariants(const Natural& area, const Natural& perimeter) {
  Verdict verdict;
  verdict.reason = classify(area, perimeter);
  verdict.amicable = verdict.reason == VerdictReason::Ok;
  if (verdict.amicable) verdict.companion = companion_for_invariants(area, perimeter);
  return verdict;
}

inline Verdict decide(const Parallelogram& p) { return decide_invariants(p.area(), p.perimeter()); }

/// Exhaustive companion search. Looks for an integer base b in [1, A/2 - 1]
/// whose side A/2 - b admits area P, i.e. b*(A/2 - b) >= P. Deliberately
/// does not use the closed form so the two can be checked against each other.
inline bool companion_exists_bruteforce(const Natural& area, const Natural& perimeter) {
  detail::require_perimeter(perimeter);
  // companion perimeter 2(b+u) is even, so it can never equal an odd area
  if (!is_even(area)) return false;
  const Natural half = area / 2;
  for (Natural b = 1; b < half; ++b)
    if (b * (half - b) >= perimeter) return true;
  return false;
}

/// Every base b giving a legal companion, ascending. Empty iff not amicable.
inline std::vector<Natural> all_companion_bases(const Parallelogram& p) {
  std::vector<Natural> bases;
  const Natural& a = p.area();
  if (!is_even(a)) return bases;
  const Natural half = a / 2;
  const Natural per = p.perimeter();
  for (Natural b = 1; b < half; ++b)
    if (b * (half - b) >= per) bases.push_back(b);
  return bases;
}

inline Parallelogram companion_with_base(const Parallelogram& p, const Natural& base) {
  const Natural half = p.area() / 2;
  if (!is_even(p.area()) || base < 1 || base >= half)
    throw Error(ErrorCode::NotAmicable, "no companion with base " + to_decimal(base));
  return Parallelogram::from_base_height_side(base, Rational(p.perimeter(), base), half - base);
}

struct GridMismatch {
  Natural area;
  Natural perimeter;
  bool predicate;
  bool oracle;
};

struct TheoremGridReport {
  std::uint64_t cells = 0;
  std::uint64_t agreements = 0;
  std::vector<GridMismatch> mismatches;
};

/// Closed form against the exhaustive search on every realizable (A, P) with
/// P <= max_perimeter. Rows are split by perimeter and merged in order.
inline TheoremGridReport verify_theorem_grid(const Natural& max_perimeter, unsigned threads = 1) {
  detail::require_perimeter(max_perimeter);
  const auto rows = static_cast<std::size_t>((max_perimeter - 2) / 2);
  auto partial = parallel_map(rows, threads, [](std::size_t i) {
    const Natural per(4 + 2 * i);
    const Natural max_area = (per / 4) * ((per + 3) / 4);
    TheoremGridReport r;
    for (Natural a = 1; a <= max_area; ++a) {
      const bool predicate = is_amicable_pair_of_invariants(a, per);
      const bool oracle = companion_exists_bruteforce(a, per);
      ++r.cells;
      if (predicate == oracle)
        ++r.agreements;
      else
        r.mismatches.push_back({a, per, predicate, oracle});
    }
    return r;
  });
  TheoremGridReport total;
  for (auto& r : partial) {
    total.cells += r.cells;
    total.agreements += r.agreements;
    for (auto& m : r.mismatches) total.mismatches.push_back(std::move(m));
  }
  return total;
}

}  // namespace heronian

#endif  // HERONIAN_AMICABILITY_HPP
