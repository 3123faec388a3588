#include <doctest.h>

#include "avsocle/weyl.hpp"

using namespace avsocle;

namespace {

std::vector<std::vector<long long>> compositions_of(long long n) {
  std::vector<std::vector<long long>> out;
  std::vector<long long> cur;
  auto rec = [&](auto&& self, long long left) -> void {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (long long p = 1; p <= left; ++p) {
      cur.push_back(p);
      self(self, left - p);
      cur.pop_back();
    }
  };
  rec(rec, n);
  return out;
}

}  // namespace

TEST_CASE("longest_element") {
  CHECK(longest_element(1).images() == std::vector<int>{1});
  CHECK(longest_element(3).images() == std::vector<int>{3, 2, 1});
  CHECK(longest_element(4).images() == std::vector<int>{4, 3, 2, 1});
  CHECK_THROWS_AS(longest_element(0), invalid_input);
  for (long long n = 1; n <= 9; ++n) CHECK(is_involution(longest_element(n)));
}

TEST_CASE("parabolic_longest") {
  CHECK(parabolic_longest(Composition{{1, 1, 1}}) == Permutation::identity(3));
  CHECK(parabolic_longest(Composition{{3}}) == longest_element(3));
  CHECK(parabolic_longest(Composition{{2, 1}}).images() == std::vector<int>{2, 1, 3});
  for (long long n = 1; n <= 7; ++n)
    for (const auto& parts : compositions_of(n))
      CHECK(is_involution(parabolic_longest(Composition{std::vector<long long>(parts)})));
}

TEST_CASE("is_involution") {
  CHECK(is_involution(Permutation({2, 1, 3})));
  CHECK_FALSE(is_involution(Permutation({2, 3, 1})));
  CHECK(is_involution(Permutation({1})));
}

TEST_CASE("permutation composition applies the right factor first") {
  Permutation w0 = longest_element(3);
  Permutation wc = parabolic_longest(Composition{{2, 1}});
  CHECK((w0 * wc).images() == std::vector<int>{2, 3, 1});
}

TEST_CASE("assumption_a examples") {
  AssumptionA r1 = assumption_a(Composition{{2, 1, 2}});
  CHECK(r1.palindrome);
  CHECK(r1.involution);
  CHECK(r1.duflo);
  CHECK(r1.assumption_a);

  AssumptionA r2 = assumption_a(Composition{{2, 1}});
  CHECK_FALSE(r2.palindrome);
  CHECK_FALSE(r2.involution);
  CHECK_FALSE(r2.duflo);
  CHECK_FALSE(r2.assumption_a);

  AssumptionA r3 = assumption_a(Composition{{1, 1}});
  CHECK(r3.palindrome);
  CHECK(r3.involution);
  CHECK(r3.assumption_a);
}

TEST_CASE("palindrome iff w0*w_c is an involution, exhaustively to 8") {
  for (long long n = 1; n <= 8; ++n)
    for (const auto& parts : compositions_of(n)) {
      Composition c{std::vector<long long>(parts)};
      Permutation prod = longest_element(n) * parabolic_longest(c);
      CHECK(c.is_palindrome() == is_involution(prod));
    }
}

TEST_CASE("text forms") {
  CHECK(Permutation({3, 2, 1}).to_string() == "[3,2,1]");
  CHECK(Permutation::parse("[3,2,1]") == Permutation({3, 2, 1}));
  CHECK_THROWS_AS(Permutation::parse("3,2,1"), invalid_input);
  CHECK_THROWS_AS(Permutation({1, 1}), invalid_input);

  Composition c = Composition::parse("2,1,2");
  CHECK(c.parts() == std::vector<long long>{2, 1, 2});
  CHECK(c.to_string() == "2,1,2");
  CHECK(c.total() == 5);
  CHECK(Composition::parse("").size() == 0);
  CHECK_THROWS_AS(Composition::parse("2,0"), invalid_input);
  CHECK_THROWS_AS(Composition::parse("2,x"), invalid_input);
}
