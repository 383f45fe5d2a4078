#ifndef HERONIAN_NUMERIC_HPP
#define HERONIAN_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace heronian {

/// Arbitrary-precision integer. Lengths, areas and perimeters are always
/// non-negative; the constructors that accept them reject zero.
using Natural = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;

/// Exact fraction, kept in lowest terms with a positive denominator.
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                              boost::multiprecision::et_off>;

inline Natural numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Natural denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

inline Rational make_rational(const Natural& num, const Natural& den) { return Rational(num, den); }

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

inline bool is_even(const Natural& n) { return !bit_test(n, 0); }

inline std::string to_decimal(const Natural& n) { return n.str(); }

/// Parses a plain decimal string (digits only, no sign, no prefix).
inline std::optional<Natural> parse_natural(std::string_view text) {
  if (text.empty() || text.size() > 10000) return std::nullopt;
  for (char ch : text)
    if (ch < '0' || ch > '9') return std::nullopt;
  return Natural(std::string(text));
}

}  // namespace heronian

#endif  // HERONIAN_NUMERIC_HPP
