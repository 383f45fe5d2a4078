#ifndef HERONIAN_SERIALIZE_HPP
#define HERONIAN_SERIALIZE_HPP

#include "amicability.hpp"
#include "census.hpp"
#include "families.hpp"
#include "numeric.hpp"
#include "parallelogram.hpp"

#include <json.hpp>

#include <optional>
#include <ostream>
#include <string>

namespace heronian {

// Field order matters for byte-stable output, hence ordered_json throughout.
using Json = nlohmann::ordered_json;

inline Json to_json(const Parallelogram& p) {
  const Rational h = p.height();
  return Json{{"base", to_decimal(p.base())},
              {"side", to_decimal(p.side())},
              {"area", to_decimal(p.area())},
              {"height", Json{{"num", to_decimal(numerator(h))}, {"den", to_decimal(denominator(h))}}}};
}

/// Inverse of to_json. The height is recomputed by the constructor and must
/// agree with the serialized one.
inline std::optional<Parallelogram> parallelogram_from_json(const Json& j) {
  if (!j.is_object()) return std::nullopt;
  auto field = [&](const Json& obj, const char* name) -> std::optional<Natural> {
    if (!obj.contains(name) || !obj.at(name).is_string()) return std::nullopt;
    return parse_natural(obj.at(name).get<std::string>());
  };
  auto base = field(j, "base");
  auto side = field(j, "side");
  auto area = field(j, "area");
  if (!base || !side || !area || !j.contains("height")) return std::nullopt;
  auto num = field(j.at("height"), "num");
  auto den = field(j.at("height"), "den");
  if (!num || !den) return std::nullopt;
  try {
    auto p = Parallelogram::from_base_side_area(*base, *side, *area);
    const Rational h = p.height();
    if (numerator(h) != *num || denominator(h) != *den) return std::nullopt;
    return p;
  } catch (const Error&) {
    return std::nullopt;
  }
}

inline Json to_json(const Verdict& v) {
  return Json{{"amicable", v.amicable},
              {"reason", std::string(to_string(v.reason))},
              {"companion", v.companion ? to_json(*v.companion) : Json(nullptr)}};
}

inline Json to_json(const FamilyRow& row) {
  return Json{{"n", row.entry.n},
              {"h", to_json(row.entry.h)},
              {"c", to_json(row.entry.c)},
              {"checks", Json{{"pair", row.checks.pair},
                              {"amicable_h", row.checks.amicable_h},
                              {"amicable_c", row.checks.amicable_c},
                              {"identity", row.checks.identity},
                              {"existence_bound", row.checks.existence_bound}}}};
}

inline Json to_json(const CensusRow& row) {
  return Json{{"short_side", to_decimal(row.key.shorter_side)},
              {"long_side", to_decimal(row.key.longer_side)},
              {"area", to_decimal(row.area)},
              {"perimeter", to_decimal(row.perimeter)},
              {"amicable", row.amicable},
              {"self_amicable", row.self_amicable}};
}

inline Json to_json(RectangleSides r) { return Json::array({r.short_side, r.long_side}); }

inline Json to_json(const RectanglePair& pair) {
  return Json{{"first", to_json(pair.first)}, {"second", to_json(pair.second)}, {"distinct", pair.distinct}};
}

// --- CSV -------------------------------------------------------------------

inline constexpr const char* kCensusCsvHeader = "short_side,long_side,area,perimeter,amicable,self_amicable";

inline void write_csv_row(std::ostream& out, const CensusRow& row) {
  out << row.key.shorter_side << ',' << row.key.longer_side << ',' << row.area << ',' << row.perimeter
      << ',' << (row.amicable ? "true" : "false") << ',' << (row.self_amicable ? "true" : "false") << '\n';
}

}  // namespace heronian

#endif  // HERONIAN_SERIALIZE_HPP
