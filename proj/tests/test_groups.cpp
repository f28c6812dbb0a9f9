#include <doctest.h>

#include <set>

#include "brauer_cover/error.hpp"
#include "brauer_cover/groups.hpp"
#include "support.hpp"

using namespace brauer_cover;

namespace {

GroupElement word(const GroupSpec& g, const char* w) { return g.parse_word(w); }

}  // namespace

TEST_CASE("identity elements") {
  CHECK(GroupSpec::cyclic(6).identity() == GroupElement({0}));
  CHECK(GroupSpec::abelian({{"a", kInfiniteOrder}, {"b", kInfiniteOrder}}).identity() == GroupElement({0, 0}));
  CHECK(oracle::s3().identity() == GroupElement({0, 1, 2}));
}

TEST_CASE("multiply") {
  const auto c6 = GroupSpec::cyclic(6);
  CHECK(c6.multiply(word(c6, "a^3"), word(c6, "a^2")) == word(c6, "a^5"));

  const auto s3 = oracle::s3();
  const auto a = s3.generator("a");
  const auto b = s3.generator("b");
  CHECK(s3.multiply(a, s3.multiply(b, a)) == b);
  CHECK(s3.is_identity(s3.power(a, 3)));
  CHECK(s3.is_identity(s3.power(b, 2)));

  const auto z = GroupSpec::cyclic(kInfiniteOrder);
  CHECK(z.multiply(word(z, "a^2"), word(z, "a^-1")) == word(z, "a"));
}

TEST_CASE("permutation product applies the right factor first") {
  const auto s3 = oracle::s3();
  // (a*b)(0) = a(b(0)) = a(1) = 2
  CHECK(s3.multiply(s3.generator("a"), s3.generator("b")) == GroupElement({2, 1, 0}));
  CHECK(word(s3, "a*b") == GroupElement({2, 1, 0}));
}

TEST_CASE("inverse") {
  const auto c6 = GroupSpec::cyclic(6);
  CHECK(c6.inverse(word(c6, "a^2")) == word(c6, "a^4"));
  const auto z = GroupSpec::cyclic(kInfiniteOrder);
  CHECK(z.inverse(word(z, "a^3")) == word(z, "a^-3"));
  const auto s3 = oracle::s3();
  CHECK(s3.inverse(GroupElement({1, 2, 0})) == GroupElement({2, 0, 1}));
}

TEST_CASE("element order") {
  const auto c6 = GroupSpec::cyclic(6);
  CHECK(c6.element_order(word(c6, "a^3")) == 2);
  CHECK(c6.element_order(c6.identity()) == 1);
  CHECK(oracle::s3().element_order(oracle::s3().identity()) == 1);
  const auto z = GroupSpec::cyclic(kInfiniteOrder);
  CHECK_FALSE(z.element_order(word(z, "a")).has_value());
  CHECK(z.element_order(z.identity()) == 1);
}

TEST_CASE("enumerate") {
  const auto c2 = GroupSpec::cyclic(2);
  CHECK(c2.enumerate() == std::vector<GroupElement>{c2.identity(), c2.generator("a")});
  CHECK(GroupSpec::abelian({{"a", 2}, {"b", 2}}).enumerate().size() == 4);
  CHECK(oracle::s3().enumerate().size() == 6);
  CHECK(oracle::s3().order() == 6);
  CHECK(GroupSpec::trivial().enumerate().size() == 1);
  CHECK_THROWS_AS(GroupSpec::cyclic(kInfiniteOrder).enumerate(), Error);
  CHECK_FALSE(GroupSpec::cyclic(kInfiniteOrder).order().has_value());
}

TEST_CASE("parse words") {
  const auto z = GroupSpec::cyclic(kInfiniteOrder);
  CHECK(word(z, "a^-1") == GroupElement({-1}));
  const auto c6 = GroupSpec::cyclic(6);
  CHECK(word(c6, "a^3*a^4") == word(c6, "a"));
  CHECK(word(c6, "1") == c6.identity());
  const auto s3 = oracle::s3();
  CHECK(word(s3, "a*b") == s3.multiply(s3.generator("a"), s3.generator("b")));
}

TEST_CASE("malformed words and bad groups") {
  const auto c6 = GroupSpec::cyclic(6);
  auto code = [&](const char* w) {
    try {
      c6.parse_word(w);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::MalformedInput;
  };
  CHECK(code("b") == ErrorCode::UnknownGenerator);
  CHECK(code("a^") == ErrorCode::MalformedWord);
  CHECK(code("a**a") == ErrorCode::MalformedWord);
  CHECK(code("") == ErrorCode::MalformedWord);
  CHECK_THROWS_AS(GroupSpec::abelian({{"a", 2}, {"a", 3}}), Error);
  CHECK_THROWS_AS(GroupSpec::abelian({{"a", -1}}), Error);
  CHECK_THROWS_AS(GroupSpec::permutation(3, {{"a", {0, 0, 1}}}), Error);
  CHECK_THROWS_AS(c6.check_element(GroupElement({0, 0})), Error);
}

TEST_CASE("group axioms hold exhaustively on small groups") {
  auto groups = oracle::small_groups();
  groups.push_back(oracle::s3());
  groups.push_back(GroupSpec::abelian({{"a", 4}, {"b", 2}, {"c", 3}}));
  for (const auto& g : groups) {
    const auto elements = g.enumerate();
    const std::set<GroupElement> all(elements.begin(), elements.end());
    REQUIRE(all.size() == elements.size());
    CHECK(all.contains(g.identity()));
    for (const auto& x : elements) {
      CHECK(g.multiply(x, g.identity()) == x);
      CHECK(g.multiply(g.identity(), x) == x);
      CHECK(g.is_identity(g.multiply(x, g.inverse(x))));
      CHECK(all.contains(g.inverse(x)));
      CHECK(g.parse_word(g.format_word(x)) == x);
      const auto order = g.element_order(x);
      REQUIRE(order.has_value());
      CHECK(elements.size() % static_cast<std::size_t>(*order) == 0);
      for (const auto& y : elements) {
        CHECK(all.contains(g.multiply(x, y)));
        for (const auto& z : elements) {
          CHECK(g.multiply(g.multiply(x, y), z) == g.multiply(x, g.multiply(y, z)));
        }
      }
    }
  }
}

TEST_CASE("group axioms on random elements of Z x Z") {
  const auto zz = GroupSpec::abelian({{"a", kInfiniteOrder}, {"b", kInfiniteOrder}});
  oracle::Rng rng(oracle::seed_from_env(7));
  std::uniform_int_distribution<std::int64_t> pick(-20, 20);
  auto random = [&] { return GroupElement({pick(rng), pick(rng)}); };
  for (int i = 0; i < 200; ++i) {
    const auto x = random(), y = random(), z = random();
    CHECK(zz.multiply(zz.multiply(x, y), z) == zz.multiply(x, zz.multiply(y, z)));
    CHECK(zz.is_identity(zz.multiply(zz.inverse(x), x)));
    CHECK(zz.parse_word(zz.format_word(x)) == x);
    CHECK(zz.power(x, 3) == zz.multiply(x, zz.multiply(x, x)));
  }
}
