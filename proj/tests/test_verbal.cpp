#include <doctest.h>

#include <algorithm>

#include "sanovcat/verbal.hpp"

using namespace sanovcat;
using namespace sanovcat::verbal;
using theta::kC3;
using theta::kC4;
using theta::kC5;
using theta::kIdentity;
using theta::kOrder;
using theta::kX;
using theta::kY;

namespace {

const theta::Group& G() { return theta::group(); }

Index xy() { return G().mul(kX, kY); }

}  // namespace

TEST_CASE("word evaluation") {
  // At the generators a word evaluates to itself.
  for (int w = 0; w < kOrder; ++w) REQUIRE(evaluate_word(static_cast<Index>(w), kX, kY) == w);
  // x y C3 = y x.
  for (int g = 0; g < kOrder; g += 7)
    for (int h = 0; h < kOrder; h += 5)
      REQUIRE(evaluate_word(kX + kY + kC3, static_cast<Index>(g), static_cast<Index>(h)) ==
              G().mul(static_cast<Index>(h), static_cast<Index>(g)));
}

TEST_CASE("tables of the standard systems") {
  const VerbalGroupTable t0(standard_system(0));
  CHECK(t0.table() == G().table());
  const VerbalGroupTable t1(standard_system(1));
  for (int g = 0; g < kOrder; g += 3)
    for (int h = 0; h < kOrder; h += 11)
      REQUIRE(t1.mul(static_cast<Index>(g), static_cast<Index>(h)) ==
              G().mul(static_cast<Index>(h), static_cast<Index>(g)));
  const VerbalGroupTable t2(standard_system(2));
  CHECK(t2.mul(kX, kY) == G().mul(xy(), G().pow(kC3, 2)));
  CHECK(t2.has_unit());
  CHECK(t2.identity() == kIdentity);
  CHECK(t2.has_inverses());
  CHECK(t2.inv(kX) == G().inv(kX));
}

TEST_CASE("word systems") {
  CHECK(to_string(standard_system(2)) == "{1, x^3, x*y*C3^2}");
  CHECK(standard_alpha(standard_system(3)) == 3);
  CHECK_FALSE(standard_alpha(WordSystem{3, static_cast<Index>(kX + kY + kC4)}).has_value());
  CHECK_FALSE(standard_alpha(WordSystem{1, static_cast<Index>(kX + kY)}).has_value());
}

TEST_CASE("stage filters") {
  auto s1 = stage1_unit_filter();
  REQUIRE(s1.size() == 64);
  for (Index w : s1) {
    auto a = theta::coordinates(w);
    CHECK(a[0] == 1);
    CHECK(a[1] == 1);
  }
  CHECK(std::find(s1.begin(), s1.end(), static_cast<Index>(kX + kY)) != s1.end());
  CHECK(std::find(s1.begin(), s1.end(), static_cast<Index>(2 * kX + kY)) == s1.end());

  auto r = stage2_congruence_filter(s1);
  std::vector<Index> want;
  for (int a = 0; a < 4; ++a) want.push_back(standard_system(a).product);
  CHECK(r.stage2 == want);
  CHECK(std::find(r.stage2.begin(), r.stage2.end(), static_cast<Index>(kX + kY + kC4)) == r.stage2.end());
  CHECK(std::find(r.stage2.begin(), r.stage2.end(), static_cast<Index>(kX + kY + kC5)) == r.stage2.end());
  // Neither equation alone cuts the family down to four.
  CHECK(r.pass_2x == 16);
  CHECK(r.pass_2y == 16);
  CHECK(r.only_2x == 12);
  CHECK(r.only_2y == 12);
}

TEST_CASE("applicability") {
  for (int a = 0; a < 4; ++a) {
    auto cert = full_applicability(standard_system(a), a == 0 ? 0 : 2'000'000, 7);
    INFO("W" << a << ": " << cert.witness);
    CHECK(cert.applicable());
    CHECK(cert.inverse_exponents == std::vector<int>{3});
    CHECK(cert.series_sizes == std::vector<std::size_t>{1024, 64, 32, 8, 1});
  }
  auto bad = full_applicability(WordSystem{3, static_cast<Index>(kX + kY + kC3 + kC4)});
  CHECK_FALSE(bad.applicable());
  CHECK(bad.unit_law);
  CHECK_FALSE(bad.generator_equations);
  CHECK(bad.witness.rfind("x o (x o y)", 0) == 0);

  auto no_unit = full_applicability(WordSystem{3, static_cast<Index>(2 * kX + kY)});
  CHECK_FALSE(no_unit.unit_law);
  CHECK_FALSE(no_unit.witness.empty());

  auto wrong_inverse = full_applicability(WordSystem{1, static_cast<Index>(kX + kY)});
  CHECK_FALSE(wrong_inverse.inverse_law);
}

TEST_CASE("s maps") {
  const VerbalGroupTable t0(standard_system(0));
  CHECK(build_s_iso(t0).image == GroupMap::identity().image);

  const VerbalGroupTable t1(standard_system(1));
  auto s1 = build_s_iso(t1);
  CHECK(s1(xy()) == G().mul(kY, kX));
  CHECK(s1(kX) == kX);
  CHECK(s1(kY) == kY);

  const VerbalGroupTable t2(standard_system(2));
  auto s2 = build_s_iso(t2);
  CHECK(s2(xy()) == G().mul(xy(), G().pow(kC3, 2)));

  for (const auto* t : {&t0, &t1, &t2}) {
    auto forced = forced_s_map(*t);
    REQUIRE(forced.has_value());
    CHECK(forced->image == build_s_map(*t).image);
  }
  // s_1 is an involution.
  for (int g = 0; g < kOrder; ++g) REQUIRE(s1(s1(static_cast<Index>(g))) == g);
}

TEST_CASE("closed forms") {
  auto rep = verify_an2_closed_forms();
  CHECK(rep.checks.size() == 20);
  for (const auto& c : rep.checks) {
    INFO(c.name << (c.witnesses.empty() ? "" : c.witnesses.front()));
    CHECK(c.passed);
  }
  CHECK(theta::eval("(y,x^2)") == theta::eval("C3^2 C5"));
  CHECK(theta::eval("(y^2,x,x,x)") == kIdentity);
  CHECK(theta::eval("(x y,x,x,x)") == theta::kC6);
}

TEST_CASE("operation identities") {
  auto rep = verify_operation_identities(2000, 3);
  for (const auto& c : rep.checks) {
    INFO(c.name);
    CHECK(c.passed);
  }
}

TEST_CASE("search report") {
  auto rep = search_words(Stage::generators);
  CHECK(rep.checks.size() == 2);
  CHECK(rep.all_passed());
}
