#include <doctest.h>

#include <algorithm>

#include "explab/errors.hpp"
#include "explab/quotient.hpp"

using namespace explab;

TEST_CASE("hom_image examples") {
  const auto ab = QuotientHom::abelianization(2);
  CHECK(ab.image(ReducedWord::parse("abAB")) == TargetElement{0, 0});
  CHECK(ab.in_kernel(ReducedWord::parse("abAB")));
  CHECK(ab.image(ReducedWord::parse("a")) == TargetElement{1, 0});
  CHECK_FALSE(ab.in_kernel(ReducedWord::parse("a")));
  const auto m2 = QuotientHom::parse("mod2", 2);
  CHECK(m2.image(ReducedWord::parse("ab")) == TargetElement{1});
  CHECK_FALSE(m2.in_kernel(ReducedWord::parse("ab")));
  CHECK(m2.in_kernel(ReducedWord::parse("aab")));
}

TEST_CASE("image is a homomorphism") {
  const auto phi = QuotientHom::parse("mod:5:2,3", 2);
  const auto x = ReducedWord::parse("abbA");
  const auto y = ReducedWord::parse("BaB");
  CHECK(phi.image(concat(x, y)) == phi.multiply(phi.image(x), phi.image(y)));
  const auto ab = QuotientHom::abelianization(3);
  CHECK(ab.image(ReducedWord::parse("acA")) == TargetElement{0, 0, 1});
  CHECK(ab.target_order() == 0);
  CHECK(phi.target_order() == 5);
}

TEST_CASE("finite targets are validated") {
  // S3 as permutations of {0,1,2}; index = position in this list.
  const std::vector<std::vector<int>> perms{{0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}, {1, 2, 0}, {2, 0, 1}};
  std::vector<std::vector<int>> table(6, std::vector<int>(6));
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 6; ++j) {
      std::vector<int> c(3);
      for (int x = 0; x < 3; ++x) c[x] = perms[i][perms[j][x]];
      table[i][j] = static_cast<int>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  }
  const auto s3 = QuotientHom::finite(2, table, 0, {1, 4});
  CHECK(s3.target_order() == 6);
  CHECK(s3.in_kernel(ReducedWord::parse("aa")));
  CHECK(s3.in_kernel(ReducedWord::parse("bbb")));
  CHECK_FALSE(s3.in_kernel(ReducedWord::parse("ab")));
  auto broken = table;
  broken[1][1] = 2;
  CHECK_THROWS_AS(QuotientHom::finite(2, broken, 0, {1, 4}), InvalidArgument);
  CHECK_THROWS_AS(QuotientHom::finite(2, table, 0, {1}), InvalidArgument);
}

TEST_CASE("parse") {
  CHECK(QuotientHom::parse("trivial", 2).in_kernel(ReducedWord::parse("ab")));
  CHECK(QuotientHom::parse("abelian", 2).label() == "abelian");
  CHECK(QuotientHom::parse("abelianization", 2).in_kernel(ReducedWord::parse("abAB")));
  CHECK_THROWS_AS(QuotientHom::parse("mod:0:1,1", 2), InvalidArgument);
  CHECK_THROWS_AS(QuotientHom::parse("mod:3:1", 2), InvalidArgument);
  CHECK_THROWS_AS(QuotientHom::parse("bogus", 2), InvalidArgument);
}
