#ifndef HERONIAN_CLI_HPP
#define HERONIAN_CLI_HPP

#include "amicability.hpp"
#include "census.hpp"
#include "error.hpp"
#include "families.hpp"
#include "numeric.hpp"
#include "parallelogram.hpp"
#include "serialize.hpp"
#include "svg.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace heronian::cli {

enum ExitCode : int { kOk = 0, kInvalidInput = 1, kVerificationFailed = 2 };

/// Bad flag values. Reported on the error stream with exit code 1.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

inline Natural positive(const std::string& flag, const std::string& text) {
  auto value = parse_natural(text);
  if (!value || *value == 0) throw UsageError(flag + " must be a positive decimal integer, got '" + text + "'");
  return *value;
}

inline Natural even_perimeter(const std::string& flag, const std::string& text) {
  Natural p = positive(flag, text);
  if (p < 4 || !is_even(p)) throw UsageError(flag + " must be an even integer >= 4, got " + text);
  return p;
}

inline Parallelogram triple(const std::string& base, const std::string& side, const std::string& area) {
  return Parallelogram::from_base_side_area(positive("--base", base), positive("--side", side),
                                            positive("--area", area));
}

inline void print_json_line(std::ostream& out, const Json& j) { out << j.dump() << '\n'; }

}  // namespace detail

struct Options {
  unsigned threads = 0;

  struct {
    std::string base, side, area, perimeter;
  } check;
  struct {
    std::uint64_t from = 0, to = 0;
  } family;
  struct {
    std::string max_perimeter;
  } verify;
  struct {
    std::string perimeter;
    bool amicable_only = false;
    std::string format = "csv";
  } enumerate;
  struct {
    std::string max_perimeter;
    std::string format = "csv";
  } census;
  struct {
    std::int64_t max_side = 1000;
  } rectangles;
  struct {
    std::string area, perimeter;
  } witness;
  struct {
    std::string base, side, area, output;
    bool companion = false;
    int width = 640, height = 360, margin = 24;
  } render;
};

inline int cmd_check(const Options& o, std::ostream& out) {
  const auto& c = o.check;
  Verdict verdict;
  if (!c.base.empty() || !c.side.empty()) {
    if (c.base.empty() || c.side.empty() || c.area.empty() || !c.perimeter.empty())
      throw UsageError("check takes either --base --side --area or --area --perimeter");
    verdict = decide(detail::triple(c.base, c.side, c.area));
  } else {
    if (c.area.empty() || c.perimeter.empty())
      throw UsageError("check takes either --base --side --area or --area --perimeter");
    const Natural a = detail::positive("--area", c.area);
    const Natural p = detail::even_perimeter("--perimeter", c.perimeter);
    if (!exists_heronian_with(a, p))
      throw UsageError("no Heronian parallelogram has area " + c.area + " and perimeter " + c.perimeter);
    verdict = decide_invariants(a, p);
  }
  detail::print_json_line(out, to_json(verdict));
  return kOk;
}

inline int cmd_family(const Options& o, std::ostream& out) {
  if (o.family.from < 4) throw UsageError("--from must be at least 4");
  if (o.family.to < o.family.from) throw UsageError("--to must not be below --from");
  const std::size_t count = o.family.to - o.family.from + 1;
  auto rows = parallel_map(count, o.threads, [&](std::size_t i) { return verify_family_index(o.family.from + i); });
  bool ok = true;
  for (const auto& row : rows) {
    detail::print_json_line(out, to_json(row));
    ok = ok && row.checks.all();
  }
  return ok ? kOk : kVerificationFailed;
}

inline int cmd_verify(const Options& o, std::ostream& out) {
  const Natural max_p = detail::even_perimeter("--max-perimeter", o.verify.max_perimeter);
  const TheoremGridReport report = verify_theorem_grid(max_p, o.threads);
  Json mismatches = Json::array();
  for (const auto& m : report.mismatches)
    mismatches.push_back(Json{{"area", to_decimal(m.area)},
                              {"perimeter", to_decimal(m.perimeter)},
                              {"predicate", m.predicate},
                              {"oracle", m.oracle}});
  detail::print_json_line(out, Json{{"max_perimeter", to_decimal(max_p)},
                                    {"cells", report.cells},
                                    {"agreements", report.agreements},
                                    {"disagreements", report.mismatches.size()},
                                    {"mismatches", mismatches}});
  return report.mismatches.empty() ? kOk : kVerificationFailed;
}

inline void require_format(const std::string& format) {
  if (format != "csv" && format != "jsonl") throw UsageError("--format must be csv or jsonl");
}

inline int cmd_enumerate(const Options& o, std::ostream& out) {
  const auto& e = o.enumerate;
  require_format(e.format);
  const Natural per = detail::even_perimeter("--perimeter", e.perimeter);
  if (e.format == "csv") out << kCensusCsvHeader << '\n';
  for_each_by_perimeter(per, [&](const Parallelogram& p) {
    const CensusRow row = make_census_row(p);
    if (e.amicable_only && !row.amicable) return;
    if (e.format == "csv")
      write_csv_row(out, row);
    else
      detail::print_json_line(out, to_json(row));
  });
  return kOk;
}

inline int cmd_census(const Options& o, std::ostream& out) {
  require_format(o.census.format);
  const Natural max_p = detail::even_perimeter("--max-perimeter", o.census.max_perimeter);
  const auto table = count_amicable(max_p, o.threads);
  PerimeterCount sum;
  // amicable counts self-paired parallelograms; the last column leaves them out
  auto emit = [&](const std::string& label, const PerimeterCount& c) {
    const std::uint64_t excl = c.amicable - c.self_amicable;
    if (o.census.format == "csv")
      out << label << ',' << c.total << ',' << c.amicable << ',' << c.self_amicable << ',' << excl << '\n';
    else
      detail::print_json_line(out, Json{{"perimeter", label},
                                        {"total", c.total},
                                        {"amicable", c.amicable},
                                        {"self_amicable", c.self_amicable},
                                        {"amicable_excluding_self", excl}});
  };
  if (o.census.format == "csv") out << "perimeter,total,amicable,self_amicable,amicable_excluding_self\n";
  for (const auto& c : table) {
    emit(to_decimal(c.perimeter), c);
    sum.total += c.total;
    sum.amicable += c.amicable;
    sum.self_amicable += c.self_amicable;
  }
  emit("all", sum);
  return kOk;
}

inline int cmd_rectangles(const Options& o, std::ostream& out) {
  if (o.rectangles.max_side < 1) throw UsageError("--max-side must be positive");
  const RectangleCensus census = amicable_rectangle_pairs(o.rectangles.max_side);
  for (const auto& pair : census.distinct_pairs) detail::print_json_line(out, to_json(pair));
  for (const auto& pair : census.self_pairs) detail::print_json_line(out, to_json(pair));
  return kOk;
}

inline int cmd_witness(const Options& o, std::ostream& out) {
  const auto& w = o.witness;
  if (w.area.empty() == w.perimeter.empty()) throw UsageError("witness takes exactly one of --area or --perimeter");
  const Parallelogram p = w.area.empty()
                              ? non_amicable_witness_perimeter(detail::even_perimeter("--perimeter", w.perimeter))
                              : non_amicable_witness_area(detail::positive("--area", w.area));
  detail::print_json_line(out, to_json(p));
  return kOk;
}

inline int cmd_render(const Options& o, std::ostream& out) {
  const auto& r = o.render;
  if (r.width <= 2 * r.margin + 40 || r.height <= 2 * r.margin + 40 || r.margin < 0)
    throw UsageError("canvas too small for the requested margin");
  RenderSpec spec{detail::triple(r.base, r.side, r.area), r.companion, r.width, r.height, r.margin};
  if (spec.include_companion && !is_amicable(spec.parallelogram))
    throw UsageError("--companion requires an amicable parallelogram");
  const std::string svg = render_svg(spec);
  if (r.output.empty()) {
    out << svg;
  } else {
    std::ofstream file(r.output, std::ios::binary);
    if (!file) throw UsageError("cannot open " + r.output + " for writing");
    file << svg;
  }
  return kOk;
}

/// Runs one command line (without the program name). Returns the exit code.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Amicable Heronian parallelograms: verdicts, companions, families and censuses", "heronian"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--threads", o.threads, "Worker threads for sweeps (0 = hardware concurrency)");

  auto* check = app.add_subcommand("check", "Decide amicability and print the Verdict JSON");
  check->add_option("--base", o.check.base, "Base length");
  check->add_option("--side", o.check.side, "Side length");
  check->add_option("--area", o.check.area, "Area");
  check->add_option("--perimeter", o.check.perimeter, "Perimeter (with --area only)");

  auto* family = app.add_subcommand("family", "Verify the Fibonacci-Lucas family, one JSON line per index");
  family->add_option("--from", o.family.from, "First index (>= 4)")->required();
  family->add_option("--to", o.family.to, "Last index")->required();

  auto* verify = app.add_subcommand("verify", "Check the closed-form test against exhaustive search");
  verify->add_option("--max-perimeter", o.verify.max_perimeter, "Largest perimeter in the grid")->required();

  auto* enumerate = app.add_subcommand("enumerate", "List every parallelogram with a given perimeter");
  enumerate->add_option("--perimeter", o.enumerate.perimeter, "Perimeter")->required();
  enumerate->add_flag("--amicable-only", o.enumerate.amicable_only, "Only amicable rows");
  enumerate->add_option("--format", o.enumerate.format, "csv or jsonl");

  auto* census = app.add_subcommand("census", "Per-perimeter amicable counts");
  census->add_option("--max-perimeter", o.census.max_perimeter, "Largest perimeter")->required();
  census->add_option("--format", o.census.format, "csv or jsonl");

  auto* rectangles = app.add_subcommand("rectangles", "Amicable rectangle pairs, then equable rectangles");
  rectangles->add_option("--max-side", o.rectangles.max_side, "Search bound on side lengths");

  auto* witness = app.add_subcommand("witness", "A non-amicable parallelogram with given area or perimeter");
  witness->add_option("--area", o.witness.area, "Area");
  witness->add_option("--perimeter", o.witness.perimeter, "Perimeter");

  auto* render = app.add_subcommand("render", "Draw a parallelogram (and its companion) as SVG");
  render->add_option("--base", o.render.base, "Base length")->required();
  render->add_option("--side", o.render.side, "Side length")->required();
  render->add_option("--area", o.render.area, "Area")->required();
  render->add_option("-o,--output", o.render.output, "Output file (default: standard output)");
  render->add_flag("--companion", o.render.companion, "Draw the constructed companion alongside");
  render->add_option("--width", o.render.width, "Canvas width in pixels");
  render->add_option("--height", o.render.height, "Canvas height in pixels");
  render->add_option("--margin", o.render.margin, "Canvas margin in pixels");

  std::vector<std::string> argv_storage{"heronian"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalidInput;
  }

  try {
    if (*check) return cmd_check(o, out);
    if (*family) return cmd_family(o, out);
    if (*verify) return cmd_verify(o, out);
    if (*enumerate) return cmd_enumerate(o, out);
    if (*census) return cmd_census(o, out);
    if (*rectangles) return cmd_rectangles(o, out);
    if (*witness) return cmd_witness(o, out);
    if (*render) return cmd_render(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }
  return kInvalidInput;
}

}  // namespace heronian::cli

#endif  // HERONIAN_CLI_HPP
