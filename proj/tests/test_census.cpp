#include <heronian/census.hpp>

#include <gtest/gtest.h>

#include <set>

using namespace heronian;

namespace {

Parallelogram bsa(long b, long s, long a) { return Parallelogram::from_base_side_area(b, s, a); }

// Naive double loop over unordered side pairs with a + s = P/2.
std::uint64_t naive_count(long per) {
  std::uint64_t n = 0;
  for (long a = 1; a < per; ++a)
    for (long s = a; s < per; ++s)
      if (2 * (a + s) == per) n += static_cast<std::uint64_t>(a * s);
  return n;
}

}  // namespace

TEST(EnumerateByPerimeter, Examples) {
  const auto eight = enumerate_by_perimeter(8);
  ASSERT_EQ(eight.size(), 7u);
  EXPECT_EQ(eight.front(), bsa(1, 3, 1));
  EXPECT_EQ(eight.back(), bsa(2, 2, 4));

  const auto four = enumerate_by_perimeter(4);
  ASSERT_EQ(four.size(), 1u);
  EXPECT_EQ(four[0], bsa(1, 1, 1));

  std::vector<Parallelogram> amicable;
  for (const auto& p : enumerate_by_perimeter(16))
    if (is_amicable(p)) amicable.push_back(p);
  ASSERT_EQ(amicable.size(), 1u);
  EXPECT_EQ(amicable[0], bsa(4, 4, 16));

  EXPECT_THROW(enumerate_by_perimeter(7), Error);
}

TEST(EnumerateByPerimeter, CompleteCanonicalAndOrdered) {
  for (long per = 4; per <= 80; per += 2) {
    const auto all = enumerate_by_perimeter(per);
    EXPECT_EQ(all.size(), naive_count(per)) << per;
    std::set<CanonicalKey> keys;
    for (std::size_t i = 0; i < all.size(); ++i) {
      EXPECT_LE(all[i].base(), all[i].side());
      EXPECT_EQ(all[i].perimeter(), per);
      keys.insert(all[i].canonical_key());
      if (i > 0) {
        const auto& prev = all[i - 1];
        EXPECT_TRUE(std::tie(prev.base(), prev.area()) < std::tie(all[i].base(), all[i].area()));
      }
    }
    EXPECT_EQ(keys.size(), all.size());
  }
}

TEST(EnumerateByArea, Examples) {
  EXPECT_EQ(enumerate_by_area(1, 8), (std::vector<Parallelogram>{bsa(1, 1, 1), bsa(1, 2, 1), bsa(1, 3, 1), bsa(2, 2, 1)}));
  const auto p42 = enumerate_by_area(42, 26);
  EXPECT_NE(std::find(p42.begin(), p42.end(), bsa(6, 7, 42)), p42.end());
  EXPECT_TRUE(enumerate_by_area(5, 4).empty());
  EXPECT_THROW(enumerate_by_area(5, 9), Error);
}

TEST(CountAmicable, Examples) {
  const auto sixteen = count_amicable(16);
  std::uint64_t amicable = 0;
  for (const auto& row : sixteen) amicable += row.amicable;
  EXPECT_EQ(amicable, 1u);
  EXPECT_EQ(sixteen.back().perimeter, 16);
  EXPECT_EQ(sixteen.back().total, 50u);

  const auto four = count_amicable(4);
  ASSERT_EQ(four.size(), 1u);
  EXPECT_EQ(four[0].amicable, 0u);

  // (6,7,42) and (7,6,42) are one canonical entry; P = 26 has 35 amicable
  // entries, 4 of them self-amicable (oracle: direct Python sweep)
  const auto t26 = count_amicable(26);
  EXPECT_EQ(t26.back().perimeter, 26);
  EXPECT_EQ(t26.back().amicable, 35u);
  EXPECT_EQ(t26.back().self_amicable, 4u);
}

TEST(CountAmicable, IndependentOfThreadCount) {
  const auto a = count_amicable(60, 1);
  const auto b = count_amicable(60, 7);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].perimeter, b[i].perimeter);
    EXPECT_EQ(a[i].total, b[i].total);
    EXPECT_EQ(a[i].amicable, b[i].amicable);
    EXPECT_EQ(a[i].self_amicable, b[i].self_amicable);
  }
}

TEST(CensusRow, FlagsAgreeWithOracle) {
  for (long per = 4; per <= 60; per += 2) {
    for_each_by_perimeter(per, [&](const Parallelogram& p) {
      const auto row = make_census_row(p);
      EXPECT_EQ(row.amicable, companion_exists_bruteforce(row.area, row.perimeter));
      if (row.self_amicable) {
        EXPECT_TRUE(row.amicable);
      }
    });
  }
}

TEST(Witness, AreaExamples) {
  EXPECT_EQ(non_amicable_witness_area(1), bsa(1, 1, 1));
  const auto w42 = non_amicable_witness_area(42);
  EXPECT_EQ(w42, bsa(42, 15, 42));
  EXPECT_EQ(w42.perimeter(), 114);
  EXPECT_FALSE(companion_exists_bruteforce(42, 114));
  const auto w16 = non_amicable_witness_area(16);
  EXPECT_EQ(w16, bsa(16, 1, 16));
  EXPECT_EQ(w16.perimeter(), 34);
  EXPECT_EQ(non_amicable_witness_area(7), bsa(7, 1, 7));
  EXPECT_THROW(non_amicable_witness_area(0), Error);
}

TEST(Witness, PerimeterExamples) {
  EXPECT_EQ(non_amicable_witness_perimeter(4), bsa(1, 1, 1));
  EXPECT_EQ(non_amicable_witness_perimeter(26), bsa(1, 12, 1));
  try {
    non_amicable_witness_perimeter(5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidPerimeter);
  }
}

TEST(Rectangles, PairsAndEquables) {
  const auto census = amicable_rectangle_pairs();
  const std::vector<RectanglePair> distinct{
      {{1, 34}, {7, 10}, true}, {{1, 38}, {6, 13}, true}, {{1, 54}, {5, 22}, true},
      {{2, 10}, {4, 6}, true},  {{2, 13}, {3, 10}, true},
  };
  const std::vector<RectanglePair> equable{{{3, 6}, {3, 6}, false}, {{4, 4}, {4, 4}, false}};
  EXPECT_EQ(census.distinct_pairs, distinct);
  EXPECT_EQ(census.self_pairs, equable);

  const auto product = amicable_rectangle_pairs_bounded_product();
  EXPECT_EQ(product.distinct_pairs, distinct);
  EXPECT_EQ(product.self_pairs, equable);
}

TEST(Rectangles, EveryMemberIsAmicable) {
  const auto census = amicable_rectangle_pairs();
  for (const auto* list : {&census.distinct_pairs, &census.self_pairs}) {
    for (const auto& pair : *list) {
      const auto x = as_parallelogram(pair.first), y = as_parallelogram(pair.second);
      EXPECT_TRUE(verify_pair(x, y));
      EXPECT_TRUE(is_amicable(x));
      EXPECT_TRUE(is_amicable(y));
    }
  }
}

TEST(Rectangles, SmallBoundTruncates) {
  // (1,54) needs sides up to 54
  const auto census = amicable_rectangle_pairs(40);
  EXPECT_EQ(census.distinct_pairs.size(), 4u);
  EXPECT_EQ(census.self_pairs.size(), 2u);
}

TEST(SmallestAmicable, IsTheSelfPairedSquare) {
  const auto p = smallest_amicable();
  EXPECT_EQ(p, bsa(4, 4, 16));
  EXPECT_TRUE(is_self_amicable(p));
  EXPECT_EQ(companion(p), p);
}
