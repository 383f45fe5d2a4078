#ifndef HERONIAN_PARALLELOGRAM_HPP
#define HERONIAN_PARALLELOGRAM_HPP

#include "error.hpp"
#include "numeric.hpp"

#include <compare>
#include <tuple>
#include <utility>

namespace heronian {

/// Geometric identity used for counting: unordered side pair plus area.
struct CanonicalKey {
  Natural shorter_side;
  Natural longer_side;
  Natural area;

  friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
  friend bool operator<(const CanonicalKey& l, const CanonicalKey& r) {
    return std::tie(l.shorter_side, l.longer_side, l.area) <
           std::tie(r.shorter_side, r.longer_side, r.area);
  }
};

/// A Heronian parallelogram described by base, side and area.
///
/// Any base b, side s and area 1 <= A <= b*s is realized by shearing the b x s
/// rectangle until its height is A/b, so the triple is all the Heronian data
/// there is. Shear direction and angles are not stored. Instances can only be
/// obtained through the checked factories below, so every value satisfies
/// 1 <= area <= base*side.
class Parallelogram {
 public:
  static Parallelogram from_base_side_area(const Natural& base, const Natural& side,
                                           const Natural& area);

  /// Height may be rational, but base*height must come out integral.
  static Parallelogram from_base_height_side(const Natural& base, const Rational& height,
                                             const Natural& side);

  const Natural& base() const noexcept { return base_; }
  const Natural& side() const noexcept { return side_; }
  const Natural& area() const noexcept { return area_; }

  Natural perimeter() const { return 2 * (base_ + side_); }
  Rational height() const { return Rational(area_, base_); }
  bool is_rectangle() const { return area_ == base_ * side_; }

  CanonicalKey canonical_key() const {
    if (side_ < base_) return {side_, base_, area_};
    return {base_, side_, area_};
  }

  friend bool operator==(const Parallelogram&, const Parallelogram&) = default;

 private:
  Parallelogram(Natural base, Natural side, Natural area)
      : base_(std::move(base)), side_(std::move(side)), area_(std::move(area)) {}

  Natural base_;
  Natural side_;
  Natural area_;
};

inline Parallelogram Parallelogram::from_base_side_area(const Natural& base, const Natural& side,
                                                        const Natural& area) {
  if (base <= 0 || side <= 0 || area <= 0)
    throw Error(ErrorCode::ZeroDimension, "base, side and area must be positive");
  if (area > base * side)
    throw Error(ErrorCode::AreaOutOfRange,
                "area " + to_decimal(area) + " exceeds base*side = " + to_decimal(base * side));
  return Parallelogram(base, side, area);
}

inline Parallelogram Parallelogram::from_base_height_side(const Natural& base,
                                                          const Rational& height,
                                                          const Natural& side) {
  if (base <= 0 || side <= 0 || height <= 0)
    throw Error(ErrorCode::ZeroDimension, "base, height and side must be positive");
  if (Rational(side) < height)
    throw Error(ErrorCode::SideTooShort, "side is shorter than the height");
  const Rational area = height * base;
  if (!is_integer(area))
    throw Error(ErrorCode::NonIntegerArea, "base*height is not an integer");
  return Parallelogram(base, side, numerator(area));
}

inline Natural area(const Parallelogram& p) { return p.area(); }
inline Natural perimeter(const Parallelogram& p) { return p.perimeter(); }
inline Rational height(const Parallelogram& p) { return p.height(); }
inline bool is_rectangle(const Parallelogram& p) { return p.is_rectangle(); }
inline CanonicalKey canonical_key(const Parallelogram& p) { return p.canonical_key(); }

}  // namespace heronian

#endif  // HERONIAN_PARALLELOGRAM_HPP
