#ifndef HERONIAN_TESTS_GOLDEN_HPP
#define HERONIAN_TESTS_GOLDEN_HPP

#include <heronian/cli.hpp>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace heronian::test_support {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

inline RunResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

inline std::string read_golden(const std::string& name) {
  std::ifstream in(std::string(HERONIAN_GOLDEN_DIR) + "/" + name, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct GoldenCase {
  std::string file;
  std::vector<std::string> args;
};

inline const std::vector<GoldenCase>& golden_cases() {
  static const std::vector<GoldenCase> cases{
      {"check_7_6_42.jsonl", {"check", "--base", "7", "--side", "6", "--area", "42"}},
      {"family_4_10.jsonl", {"family", "--from", "4", "--to", "10"}},
      {"enumerate_8.csv", {"enumerate", "--perimeter", "8"}},
      {"rectangles.jsonl", {"rectangles"}},
      {"render_8_13_26.svg", {"render", "--base", "8", "--side", "13", "--area", "26"}},
  };
  return cases;
}

}  // namespace heronian::test_support

#endif  // HERONIAN_TESTS_GOLDEN_HPP
