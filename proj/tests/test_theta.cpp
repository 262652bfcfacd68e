#include <doctest.h>

#include <sstream>

#include "sanovcat/theta.hpp"

using namespace sanovcat;
using namespace sanovcat::theta;

TEST_CASE("reduce examples") {
  CHECK(reduce(n4::Element::letter(8)) == from_coordinates({0, 0, 2, 0, 0, 1, 1}));
  CHECK(reduce(n4::Element::letter(8)) == kC8);
  CHECK(reduce(n4::Element{}) == kIdentity);
  CHECK(reduce(n4::Element::letter(1, 5)) == kX);
  CHECK(reduce(n4::Element::letter(1, -1)) == 3 * kX);
}

TEST_CASE("coordinates round trip") {
  for (int k = 0; k < kOrder; ++k) {
    auto g = static_cast<Index>(k);
    REQUIRE(from_coordinates(coordinates(g)) == g);
    REQUIRE(reduce(lift(g)) == g);
  }
  CHECK(name(kIdentity) == "1");
  CHECK(name(kX + kY + 2 * kC3) == "x*y*C3^2");
}

TEST_CASE("arithmetic examples") {
  const auto& g = group();
  CHECK(g.mul(kY, kX) == kX + kY + kC3);
  CHECK(g.comm(kC4, kX) == from_coordinates({0, 0, 2, 0, 0, 1, 1}));
  CHECK(g.comm(kC4, kX) == reduce(n4::default_collector().comm(lift(kC4), lift(kX))));
  for (int k = 0; k < kOrder; ++k) REQUIRE(g.pow(static_cast<Index>(k), 4) == kIdentity);
  CHECK(eval("(y,x,x,y)") == kC8);
  CHECK(eval("x^4 y^-4") == kIdentity);
  // x^4 conjugated by y collapses.
  auto r = n4::default_collector();
  auto conj = r.mul(r.mul(r.inv(n4::Element::letter(2)), n4::Element::letter(1, 4)), n4::Element::letter(2));
  CHECK(reduce(conj) == kIdentity);
}

TEST_CASE("series and center") {
  const auto& g = group();
  auto chain = lower_central_series(g);
  REQUIRE(chain.size() == 5);
  CHECK(chain[0].size() == 1024);
  CHECK(chain[1].size() == 64);
  CHECK(chain[2].size() == 32);
  CHECK(chain[3].size() == 8);
  CHECK(chain[4].size() == 1);
  // gamma_2 is generated by C3..C7; gamma_4 by C3^2, C6, C7.
  CHECK(generated_subgroup(g, {kC3, kC4, kC5, kC6, kC7}) == chain[1]);
  CHECK(generated_subgroup(g, {2 * kC3, kC6, kC7}) == chain[3]);
  CHECK(generated_subgroup(g, {kX, kY}).size() == 1024);
  auto z = center(g);
  CHECK(z == chain[3]);
}

TEST_CASE("reports") {
  const auto& g = group();
  SUBCASE("membership") {
    auto rep = verify_theta_membership(g);
    for (const auto& c : rep.checks) {
      INFO(c.name);
      CHECK(c.passed);
    }
  }
  SUBCASE("well definedness") {
    auto rep = well_definedness_check(5000, 4, g);
    for (const auto& c : rep.checks) {
      INFO(c.name);
      CHECK(c.passed);
    }
  }
  SUBCASE("lemmas, sampled") {
    auto rep = verify_lemma_suite(200000, 4, g);
    for (const auto& c : rep.checks) {
      INFO(c.name);
      CHECK(c.passed);
    }
  }
  SUBCASE("relators") {
    auto rep = verify_relations_are_consequences();
    CHECK(rep.checks.size() == 7);
    CHECK(rep.all_passed());
  }
}

TEST_CASE("a wrong quotient is noticed") {
  // Dropping the C8 correction from reduce breaks the homomorphism property;
  // the same index arithmetic without it must fail somewhere.
  const auto& col = n4::default_collector();
  bool differs = false;
  for (int a = 0; a < kOrder && !differs; ++a) {
    auto p = col.mul(lift(static_cast<Index>(a)), lift(kY));
    n4::Element q = p;
    q[8] = 0;
    differs = reduce(p) != reduce(q);
  }
  CHECK(differs);
}

TEST_CASE("table export") {
  const auto& g = group();
  std::stringstream raw;
  export_table(raw, g, TableFormat::raw);
  CHECK(raw.str().size() == 8 + 2u * kOrder * kOrder);
  CHECK(raw.str().substr(0, 7) == "THETA4G");
  CHECK(import_raw_table(raw) == g.table());

  std::stringstream csv;
  export_table(csv, g, TableFormat::csv);
  std::string first;
  std::getline(csv, first);
  CHECK(first.substr(0, 8) == "0,1,2,3,");
  int lines = 1;
  for (std::string l; std::getline(csv, l);) ++lines;
  CHECK(lines == kOrder);

  std::stringstream bad("NOTMAGIC");
  CHECK_THROWS_AS(import_raw_table(bad), std::runtime_error);
}
