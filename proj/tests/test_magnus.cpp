#include <doctest.h>

#include "sanovcat/magnus.hpp"

using namespace sanovcat;
using magnus::Series;

namespace {

Series poly(std::initializer_list<std::pair<int, std::int64_t>> terms) {
  Series s;
  for (auto [i, v] : terms) s.c[static_cast<std::size_t>(i)] = v;
  return s;
}

int X(int len) { return magnus::monomial_index(len, 0); }  // X^len

}  // namespace

TEST_CASE("monomial indexing") {
  CHECK(magnus::monomial_index(0, 0) == 0);
  CHECK(magnus::monomial_name(magnus::monomial_index(2, 0b10)) == "YX");
  CHECK(magnus::monomial_index(4, 15) == magnus::kMonomials - 1);
  for (int i = 0; i < magnus::kMonomials; ++i)
    CHECK(magnus::monomial_length(i) == static_cast<int>(magnus::monomial_name(i) == "1" ? 0 : magnus::monomial_name(i).size()));
}

TEST_CASE("series products") {
  const int XY = magnus::monomial_index(2, 0b01);
  CHECK(magnus::series_mul(Series::x(), Series::y()) == poly({{0, 1}, {1, 1}, {2, 1}, {XY, 1}}));
  CHECK(magnus::series_mul(Series::x(), Series::one()) == Series::x());
  Series geo = poly({{0, 1}, {X(1), -1}, {X(2), 1}, {X(3), -1}, {X(4), 1}});
  CHECK(magnus::series_mul(Series::x(), geo) == Series::one());
  CHECK(magnus::series_inv(Series::one()) == Series::one());
  CHECK(magnus::series_inv(Series::x()) == geo);
  CHECK_THROWS_AS(magnus::series_inv(Series{}), std::invalid_argument);
}

TEST_CASE("embedding") {
  CHECK(magnus::magnus_embed(n4::Element::letter(1)) == Series::x());
  CHECK(magnus::magnus_embed(n4::Element{}) == Series::one());
  // C3 = (y,x): degree-2 part YX - XY.
  Series c3 = magnus::magnus_embed(n4::Element::letter(3));
  CHECK(c3.c[magnus::monomial_index(2, 0b10)] == 1);
  CHECK(c3.c[magnus::monomial_index(2, 0b01)] == -1);
  CHECK(c3.c[magnus::monomial_index(2, 0b00)] == 0);
  CHECK(c3.c[magnus::monomial_index(2, 0b11)] == 0);
  for (int i = 1; i < 3; ++i) CHECK(c3.c[static_cast<std::size_t>(i)] == 0);
  // C8 starts in degree 4.
  Series c8 = magnus::magnus_embed(n4::Element::letter(8));
  for (int i = 1; i < magnus::monomial_index(4, 0); ++i) CHECK(c8.c[static_cast<std::size_t>(i)] == 0);
  bool has_degree4 = false;
  for (int i = magnus::monomial_index(4, 0); i < magnus::kMonomials; ++i) has_degree4 |= c8.c[static_cast<std::size_t>(i)] != 0;
  CHECK(has_degree4);
  // The basis images come from series commutators alone.
  const auto& img = magnus::basis_images();
  CHECK(img[3] == magnus::series_comm(Series::y(), Series::x()));
  CHECK(img[8] == magnus::series_comm(magnus::series_comm(magnus::series_comm(Series::y(), Series::x()), Series::y()), Series::x()));
}

TEST_CASE("oracle agreement") {
  auto rep = magnus::oracle_check(n4::default_collector(), 20000, 3, 3);
  CHECK(rep.all_passed());
  auto one = magnus::oracle_check(n4::default_collector(), 1, 0, 0);
  CHECK(one.all_passed());
}

TEST_CASE("injectivity on [-2,2]^8") {
  auto c = magnus::injectivity_check(2);
  CHECK(c.passed);
  CHECK(c.counts["elements"] == 390625);
  CHECK(c.counts["collisions"] == 0);
}
