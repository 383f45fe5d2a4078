#ifndef HERONIAN_CENSUS_HPP
#define HERONIAN_CENSUS_HPP

#include "amicability.hpp"
#include "error.hpp"
#include "numeric.hpp"
#include "parallelogram.hpp"
#include "sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace heronian {

struct CensusRow {
  CanonicalKey key;
  Natural area;
  Natural perimeter;
  bool amicable = false;
  bool self_amicable = false;
};

inline CensusRow make_census_row(const Parallelogram& p) {
  return {p.canonical_key(), p.area(), p.perimeter(), is_amicable(p), is_self_amicable(p)};
}

/// Visits every canonical parallelogram (shorter side as base) with the given
/// perimeter, ordered by (shorter side, area).
template <typename Visitor>
void for_each_by_perimeter(const Natural& perimeter, Visitor&& visit) {
  detail::require_perimeter(perimeter);
  const Natural half = perimeter / 2;
  for (Natural a = 1; 2 * a <= half; ++a) {
    const Natural s = half - a;
    const Natural max_area = a * s;
    for (Natural area = 1; area <= max_area; ++area)
      visit(Parallelogram::from_base_side_area(a, s, area));
  }
}

inline std::vector<Parallelogram> enumerate_by_perimeter(const Natural& perimeter) {
  std::vector<Parallelogram> out;
  for_each_by_perimeter(perimeter, [&](Parallelogram p) { out.push_back(std::move(p)); });
  return out;
}

/// Visits every canonical parallelogram with exactly this area and perimeter
/// at most max_perimeter, ordered by (perimeter, shorter side).
template <typename Visitor>
void for_each_by_area(const Natural& area, const Natural& max_perimeter, Visitor&& visit) {
  detail::require_perimeter(max_perimeter);
  if (area < 1) throw Error(ErrorCode::ZeroDimension, "area must be positive");
  for (Natural per = 4; per <= max_perimeter; per += 2) {
    const Natural half = per / 2;
    for (Natural a = 1; 2 * a <= half; ++a) {
      const Natural s = half - a;
      if (area <= a * s) visit(Parallelogram::from_base_side_area(a, s, area));
    }
  }
}

inline std::vector<Parallelogram> enumerate_by_area(const Natural& area, const Natural& max_perimeter) {
  std::vector<Parallelogram> out;
  for_each_by_area(area, max_perimeter, [&](Parallelogram p) { out.push_back(std::move(p)); });
  return out;
}

struct PerimeterCount {
  Natural perimeter;
  std::uint64_t total = 0;
  std::uint64_t amicable = 0;
  std::uint64_t self_amicable = 0;
};

/// Per-perimeter tallies for every even perimeter from 4 to max_perimeter.
inline std::vector<PerimeterCount> count_amicable(const Natural& max_perimeter, unsigned threads = 1) {
  detail::require_perimeter(max_perimeter);
  const auto cells = static_cast<std::size_t>((max_perimeter - 2) / 2);
  return parallel_map(cells, threads, [](std::size_t i) {
    PerimeterCount row{Natural(4 + 2 * i)};
    for_each_by_perimeter(row.perimeter, [&](const Parallelogram& p) {
      ++row.total;
      if (is_amicable_pair_of_invariants(p.area(), row.perimeter)) ++row.amicable;
      if (is_self_amicable(p)) ++row.self_amicable;
    });
    return row;
  });
}

/// A parallelogram of area n that is not amicable. Odd n gives the n x 1
/// rectangle; even n gets a side long enough that n^2 < 16 * perimeter.
inline Parallelogram non_amicable_witness_area(const Natural& n) {
  if (n < 1) throw Error(ErrorCode::ZeroDimension, "area must be positive");
  if (!is_even(n)) return Parallelogram::from_base_side_area(n, 1, n);
  Natural side = n * n / 32 - n + 2;
  if (side < 1) side = 1;
  if (!(n * n < 32 * (n + side)))
    throw std::logic_error("witness side does not break the amicability bound");
  return Parallelogram::from_base_side_area(n, side, n);
}

/// The 1 x (P/2 - 1) parallelogram of area 1; odd area is never amicable.
inline Parallelogram non_amicable_witness_perimeter(const Natural& perimeter) {
  detail::require_perimeter(perimeter);
  return Parallelogram::from_base_side_area(1, perimeter / 2 - 1, 1);
}

/// The amicable parallelogram minimizing (perimeter, area, shorter side),
/// found by sweeping perimeters upward.
inline Parallelogram smallest_amicable() {
  for (Natural per = 4;; per += 2) {
    std::optional<Parallelogram> best;
    for_each_by_perimeter(per, [&](const Parallelogram& p) {
      if (!is_amicable(p)) return;
      if (!best || std::tie(p.area(), p.base()) < std::tie(best->area(), best->base())) best = p;
    });
    if (best) return *best;
  }
}

// --- amicable rectangles -------------------------------------------------

/// Rectangle sides with short_side <= long_side.
struct RectangleSides {
  std::int64_t short_side;
  std::int64_t long_side;

  friend auto operator<=>(const RectangleSides&, const RectangleSides&) = default;
};

/// Two rectangles with a*b = 2(c+d) and c*d = 2(a+b). distinct is false for
/// equable rectangles, which pair with themselves.
struct RectanglePair {
  RectangleSides first;
  RectangleSides second;
  bool distinct;

  friend bool operator==(const RectanglePair&, const RectanglePair&) = default;
};

struct RectangleCensus {
  std::vector<RectanglePair> distinct_pairs;
  std::vector<RectanglePair> self_pairs;
};

namespace detail {

inline bool is_rectangle_pair(RectangleSides x, RectangleSides y) {
  return x.short_side * x.long_side == 2 * (y.short_side + y.long_side) &&
         y.short_side * y.long_side == 2 * (x.short_side + x.long_side);
}

inline std::int64_t isqrt(std::int64_t n) {
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

// Records each unordered pair once, from the side with the smaller first
// rectangle.
inline void record_pair(RectangleCensus& census, RectangleSides x, RectangleSides y) {
  if (y < x) return;
  if (x == y)
    census.self_pairs.push_back({x, y, false});
  else
    census.distinct_pairs.push_back({x, y, true});
}

inline void sort_census(RectangleCensus& census) {
  auto by_sides = [](const RectanglePair& l, const RectanglePair& r) {
    return std::tie(l.first, l.second) < std::tie(r.first, r.second);
  };
  std::sort(census.distinct_pairs.begin(), census.distinct_pairs.end(), by_sides);
  std::sort(census.self_pairs.begin(), census.self_pairs.end(), by_sides);
}

}  // namespace detail

/// Exhausts every rectangle a <= b <= max_side. Its partner has c + d = ab/2
/// and cd = 2(a+b), so c and d are the roots of x^2 - (ab/2)x + 2(a+b).
///
/// Multiplying the two defining equations gives ab*cd = 4(a+b)(c+d) <= 16bd,
/// hence a*c <= 16 and every solution has b <= 4a + 2c^2 <= 4*16 + 2*16^2.
/// The default bound of 1000 therefore already covers all solutions.
inline RectangleCensus amicable_rectangle_pairs(std::int64_t max_side = 1000) {
  RectangleCensus census;
  for (std::int64_t a = 1; a <= max_side; ++a) {
    for (std::int64_t b = a; b <= max_side; ++b) {
      if ((a * b) % 2 != 0) continue;
      const std::int64_t sum = a * b / 2;
      const std::int64_t product = 2 * (a + b);
      const std::int64_t disc = sum * sum - 4 * product;
      if (disc < 0) continue;
      const std::int64_t root = detail::isqrt(disc);
      if (root * root != disc || (sum - root) % 2 != 0) continue;
      const RectangleSides partner{(sum - root) / 2, (sum + root) / 2};
      if (partner.short_side < 1 || partner.long_side > max_side) continue;
      detail::record_pair(census, {a, b}, partner);
    }
  }
  detail::sort_census(census);
  return census;
}

/// Same census from the a*c <= 16 bound directly. For fixed a and c the
/// equations are linear in b and d: b = (4a + 2c^2) / (ac - 4) and
/// d = ab/2 - c. ac <= 4 makes b non-positive.
inline RectangleCensus amicable_rectangle_pairs_bounded_product() {
  RectangleCensus census;
  for (std::int64_t a = 1; a <= 16; ++a) {
    for (std::int64_t c = 1; a * c <= 16; ++c) {
      const std::int64_t k = a * c - 4;
      if (k <= 0) continue;
      const std::int64_t numer = 4 * a + 2 * c * c;
      if (numer % k != 0) continue;
      const std::int64_t b = numer / k;
      if (b < a || (a * b) % 2 != 0) continue;
      const std::int64_t d = a * b / 2 - c;
      if (d < c) continue;
      const RectangleSides x{a, b}, y{c, d};
      if (detail::is_rectangle_pair(x, y)) detail::record_pair(census, x, y);
    }
  }
  detail::sort_census(census);
  return census;
}

inline Parallelogram as_parallelogram(RectangleSides r) {
  return Parallelogram::from_base_side_area(r.short_side, r.long_side, Natural(r.short_side) * r.long_side);
}

}  // namespace heronian

#endif  // HERONIAN_CENSUS_HPP
