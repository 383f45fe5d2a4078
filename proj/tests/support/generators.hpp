#ifndef HERONIAN_TESTS_GENERATORS_HPP
#define HERONIAN_TESTS_GENERATORS_HPP

#include <heronian/parallelogram.hpp>

#include <cstdint>
#include <random>

namespace heronian::test_support {

/// Random legal (base, side, area) triples with sides up to max_side.
class ParallelogramGen {
 public:
  explicit ParallelogramGen(std::uint64_t seed, std::int64_t max_side = 500) : rng_(seed), max_side_(max_side) {}

  Parallelogram operator()() {
    std::uniform_int_distribution<std::int64_t> len(1, max_side_);
    const std::int64_t b = len(rng_), s = len(rng_);
    std::uniform_int_distribution<std::int64_t> area(1, b * s);
    return Parallelogram::from_base_side_area(b, s, area(rng_));
  }

  std::mt19937_64& rng() { return rng_; }

 private:
  std::mt19937_64 rng_;
  std::int64_t max_side_;
};

}  // namespace heronian::test_support

#endif  // HERONIAN_TESTS_GENERATORS_HPP
