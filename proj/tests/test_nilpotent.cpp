#include <doctest.h>

#include <random>

#include "sanovcat/magnus.hpp"
#include "sanovcat/nilpotent.hpp"

using namespace sanovcat;
using n4::Element;

namespace {

Element vec(std::array<std::int64_t, 8> a) {
  Element e;
  e.a = a;
  return e;
}

const n4::Collector& col() { return n4::default_collector(); }

}  // namespace

TEST_CASE("basis commutators") {
  CHECK(n4::basis_commutator(2, 1) == Element::letter(3));
  CHECK(n4::basis_commutator(5, 2) == Element::letter(8));
  CHECK(n4::basis_commutator(4, 1) == Element::letter(8));
  CHECK(n4::basis_commutator(6, 3).is_identity());
  CHECK(n4::basis_commutator(4, 3).is_identity());
  CHECK_THROWS_AS(n4::basis_commutator(1, 2), std::invalid_argument);
  // Every table entry agrees with the commutator computed by the arithmetic.
  for (int j = 2; j <= n4::kLetters; ++j)
    for (int i = 1; i < j; ++i)
      CHECK(col().comm(Element::letter(j), Element::letter(i)) == n4::basis_commutator(j, i));
}

TEST_CASE("collect examples") {
  CHECK(col().collect({{2, 1}, {1, 1}}) == vec({1, 1, 1, 0, 0, 0, 0, 0}));
  CHECK(col().collect({{1, 1}, {1, -1}}).is_identity());
  CHECK(col().collect({{2, 1}, {2, 1}, {1, 1}}) == vec({1, 2, 2, 1, 0, 0, 0, 0}));
  CHECK(col().collect({}).is_identity());
}

TEST_CASE("collection formula for (xy)^4") {
  const Element want = vec({4, 4, 6, 14, 4, 1, 11, 11});
  Element xy = col().mul(Element::letter(1), Element::letter(2));
  CHECK(col().pow(xy, 4) == want);
  CHECK(col().mul(col().mul(xy, xy), col().mul(xy, xy)) == want);
  n4::LetterWord w;
  for (int k = 0; k < 4; ++k) w.insert(w.end(), {{1, 1}, {2, 1}});
  CHECK(col().collect(w, n4::Strategy::leftmost) == want);
  CHECK(col().collect(w, n4::Strategy::rightmost) == want);
}

TEST_CASE("mul and inv") {
  const Element x = Element::letter(1), y = Element::letter(2);
  CHECK(col().mul(y, x) == vec({1, 1, 1, 0, 0, 0, 0, 0}));
  CHECK(col().mul(Element{}, x) == x);
  CHECK(col().inv(x) == vec({-1, 0, 0, 0, 0, 0, 0, 0}));
  CHECK(col().inv(Element{}).is_identity());
  // Oracle value: the series inverse of x y C3 pulls back to x^-1 y^-1.
  Element g = n4::eval("x y C3");
  CHECK(col().inv(g) == vec({-1, -1, 0, 0, 0, 0, 0, 0}));
  CHECK(col().mul(g, col().inv(g)).is_identity());
}

TEST_CASE("evaluation examples") {
  CHECK(n4::eval("(y,x)") == Element::letter(3));
  CHECK(n4::eval("(y,x,y,x)") == Element::letter(8));
  CHECK(n4::eval("(y,x,x,y)") == Element::letter(8));
  CHECK(n4::eval("(x,y,x)") == Element::letter(5, -1));
}

TEST_CASE("strategy independence on random words") {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 10000; ++k) {
    n4::LetterWord w;
    for (int i = 0, n = static_cast<int>(rng() % 21); i < n; ++i)
      w.push_back({static_cast<int>(rng() % 8) + 1, rng() % 2 ? 1 : -1});
    Element m;
    for (auto l : w) m = col().mul(m, Element::letter(l.index, l.sign));
    auto left = col().collect(w, n4::Strategy::leftmost);
    auto right = col().collect(w, n4::Strategy::rightmost);
    REQUIRE(left == right);
    REQUIRE(left == m);
  }
}

TEST_CASE("normal form words collect to themselves") {
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<int> d(-3, 3);
  for (int k = 0; k < 2000; ++k) {
    Element g;
    for (auto& a : g.a) a = d(rng);
    REQUIRE(col().collect(n4::to_word(g)) == g);
  }
}

TEST_CASE("group laws and torsion freeness") {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<int> d(-3, 3);
  auto draw = [&] {
    Element g;
    for (auto& a : g.a) a = d(rng);
    return g;
  };
  for (int k = 0; k < 3000; ++k) {
    Element a = draw(), b = draw(), c = draw();
    REQUIRE(col().mul(col().mul(a, b), c) == col().mul(a, col().mul(b, c)));
    REQUIRE(col().mul(a, col().inv(a)).is_identity());
    REQUIRE(col().mul(col().inv(a), a).is_identity());
    REQUIRE(col().pow(a, -2) == col().inv(col().pow(a, 2)));
    if (!a.is_identity())
      for (int e = 1; e <= 12; ++e) REQUIRE_FALSE(col().pow(a, e).is_identity());
  }
}

TEST_CASE("overflow guard") {
  Element big;
  big[1] = n4::kCoordinateLimit - 1;
  CHECK_THROWS_AS(col().mul(big, big), std::overflow_error);
}

TEST_CASE("identity checks report") {
  auto rep = n4::verify_identities(5, 500);
  for (const auto& c : rep.checks) {
    INFO(c.name);
    CHECK(c.passed);
  }
  CHECK(rep.find("n4.collect_formula") != nullptr);
  auto coll = n4::verify_collection(5, 500);
  CHECK(coll.all_passed());
}

TEST_CASE("tampered table is caught by the oracle") {
  auto base = n4::shirshov_table();
  base[5][2] = Element::letter(7);  // (C5, y) should be C8
  n4::Collector broken(base);
  auto rep = magnus::oracle_check(broken, 2000, 3, 9);
  CHECK_FALSE(rep.all_passed());
  const Check* mul = rep.find("magnus.multiplicative");
  REQUIRE(mul != nullptr);
  CHECK_FALSE(mul->passed);
  CHECK_FALSE(mul->witnesses.empty());
}

TEST_CASE("table validation") {
  auto base = n4::shirshov_table();
  base[3][1] = Element::letter(1);  // not in gamma_2
  CHECK_THROWS_AS(n4::Collector{base}, std::invalid_argument);
}
