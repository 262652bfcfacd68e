#include <doctest.h>

#include "sanovcat/autcat.hpp"

using namespace sanovcat;
using namespace sanovcat::autcat;
using theta::kIdentity;
using theta::kOrder;
using theta::kX;
using theta::kY;

namespace {

const std::vector<StrongAutomorphism>& autos() {
  static const auto a = discover(1'000'000, 5);
  return a;
}

}  // namespace

TEST_CASE("composition") {
  const auto& a = autos();
  REQUIRE(a.size() == 4);
  CHECK(compose(a[2], a[1]) == verbal::standard_system(3));
  CHECK(compose(a[1], a[1]) == verbal::standard_system(0));
  for (int k = 0; k < 4; ++k) {
    CHECK(compose(a[0], a[k]) == a[k].system);
    CHECK(compose(a[k], a[0]) == a[k].system);
  }
}

TEST_CASE("the group of the four automorphisms") {
  auto t = cayley_table(autos());
  CHECK(classify(t) == "Klein four");
  for (int k = 0; k < 4; ++k) CHECK(t[k][k] == 0);
  CayleyTable cyclic{};
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) cyclic[a][b] = (a + b) % 4;
  CHECK(classify(cyclic) == "cyclic of order 4");
  CayleyTable broken = cyclic;
  broken[1][1] = 1;
  CHECK(classify(broken) == "not a group of order 4");
}

TEST_CASE("inner tests") {
  auto v0 = inner_test(verbal::standard_system(0));
  CHECK(v0.inner);
  CHECK(v0.exponent == 1);

  auto v1 = inner_test(verbal::standard_system(1));
  CHECK(v1.inner);
  CHECK(v1.exponent == 3);

  const auto& G = theta::group();
  auto v2 = inner_test(verbal::standard_system(2));
  CHECK_FALSE(v2.inner);
  CHECK(v2.image_on_x[2] == std::vector<theta::Index>{kIdentity, G.pow(kX, 2)});
  CHECK_FALSE(v2.bijective[0]);
  CHECK_FALSE(v2.bijective[2]);
  CHECK(v2.at_generators[1].first == G.mul(G.mul(kX, kY), G.pow(theta::kC3, 2)));
  CHECK(v2.at_generators[1].second == G.mul(kX, kY));
  CHECK(v2.rejections.size() == 4);

  CHECK_FALSE(inner_test(verbal::standard_system(3)).inner);
}

TEST_CASE("endomorphisms") {
  const auto& G = theta::group();
  // psi(x) = y, psi(y) = x swaps the generators; applied twice it is the identity.
  for (int g = 0; g < kOrder; ++g) {
    auto gi = static_cast<theta::Index>(g);
    REQUIRE(endomorphism(kY, kX, endomorphism(kY, kX, gi)) == gi);
  }
  CHECK(endomorphism(kX, kY, theta::kC8) == theta::kC8);
  CHECK(endomorphism(kIdentity, kY, theta::kC3) == kIdentity);
  auto u = G.mul(kX, kY);
  for (int g = 0; g < kOrder; g += 13)
    for (int h = 0; h < kOrder; h += 17) {
      auto a = static_cast<theta::Index>(g), b = static_cast<theta::Index>(h);
      REQUIRE(endomorphism(u, kX, G.mul(a, b)) == G.mul(endomorphism(u, kX, a), endomorphism(u, kX, b)));
    }
}

TEST_CASE("quotient report") {
  auto r = quotient_report(4, 1, 500'000);
  for (const auto& c : r.checks.checks) {
    INFO(c.name);
    CHECK(c.passed);
  }
  CHECK(r.order_s == 4);
  CHECK(r.order_inner == 2);
  CHECK(r.order_quotient == 2);
  CHECK(r.type == "Klein four");
  CHECK(r.inner == std::array<bool, 4>{true, true, false, false});
}
