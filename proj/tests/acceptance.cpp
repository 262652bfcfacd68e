// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.
// Everything is exact; the only tolerances are the wall-clock limits below.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "sanovcat/autcat.hpp"
#include "sanovcat/magnus.hpp"
#include "sanovcat/nilpotent.hpp"
#include "sanovcat/theta.hpp"
#include "sanovcat/verbal.hpp"

using namespace sanovcat;

namespace {

constexpr std::uint64_t kSeed = 42;

// Wall-clock limits in seconds.
constexpr double kLimit1 = 1;
constexpr double kLimit2 = 60;
constexpr double kLimit3 = 60;
constexpr double kLimit4 = 15 * 60;
constexpr double kLimit5 = 60;
constexpr double kLimit6 = 60;
constexpr double kLimit7 = 10 * 60;
constexpr double kLimit8 = 10 * 60;

constexpr std::size_t kOraclePairs = 100000;
constexpr std::size_t kStrategyWords = 10000;
constexpr std::size_t kBoxSamples = 100000;

struct Outcome {
  bool ok = true;
  std::string why;
  void need(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      why = what;
    }
  }
  // Every check of the report must pass; names are required to be present.
  void need(const Report& r, const std::vector<std::string>& names) {
    for (const auto& n : names) need(r.find(n) != nullptr, "missing check " + n);
    for (const auto& c : r.checks)
      need(c.passed, c.name + (c.witnesses.empty() ? "" : ": " + c.witnesses.front()));
  }
};

int failures = 0;

void criterion(int n, const std::string& title, double limit, const std::function<void(Outcome&)>& body) {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.need(false, std::string("exception: ") + e.what());
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2fs", secs);
  o.need(secs <= limit, std::string("took ") + buf + ", limit " + std::to_string(static_cast<int>(limit)) + "s");
  if (!o.ok) ++failures;
  std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << n << ": " << title << " (" << buf << ")";
  if (!o.ok) std::cout << " -- " << o.why;
  std::cout << std::endl;
}

}  // namespace

int main() {
  criterion(1, "(xy)^4 collects to (4,4,6,14,4,1,11,11)", kLimit1, [](Outcome& o) {
    const auto& col = n4::default_collector();
    n4::LetterWord w;
    for (int k = 0; k < 4; ++k) w.insert(w.end(), {{1, 1}, {2, 1}});
    const std::array<std::int64_t, 8> want{4, 4, 6, 14, 4, 1, 11, 11};
    o.need(col.collect(w).a == want, "collect gave " + n4::coords(col.collect(w)));
    o.need(col.pow(col.mul(n4::Element::letter(1), n4::Element::letter(2)), 4).a == want, "pow disagrees");
    o.need(n4::eval("x^4 y^4 (y,x)^6 (y,x,y)^14 (y,x,y,y)^11 (y,x,x)^4 (y,x,x,y)^11 (y,x,x,x)").a == want,
           "the commutator form disagrees");
  });

  criterion(2, "collection agrees with the series oracle on 1e5 pairs in [-3,3]^8", kLimit2, [](Outcome& o) {
    auto r = magnus::oracle_check(n4::default_collector(), kOraclePairs, 3, kSeed);
    o.need(r, {"magnus.multiplicative", "magnus.inverse"});
    const Check* m = r.find("magnus.multiplicative");
    o.need(m && m->counts.value("pairs", std::size_t{0}) >= kOraclePairs, "fewer pairs than required");
  });

  criterion(3, "the group G: order, basis orders, exponent 4, metabelian, class 4, series", kLimit3, [](Outcome& o) {
    const auto& g = theta::group();
    auto r = theta::verify_theta_membership(g);
    o.need(r, {"theta.basis_orders", "theta.exponent4", "theta.associative",
               "theta.lower_central_series", "theta.metabelian", "theta.class4"});
    o.need(theta::kOrder == 1024, "order");
    const theta::Index basis[] = {theta::kX, theta::kY, theta::kC3, theta::kC4, theta::kC5, theta::kC6, theta::kC7};
    std::vector<int> orders;
    for (auto b : basis) orders.push_back(g.order(b));
    o.need(orders == std::vector<int>{4, 4, 4, 2, 2, 2, 2}, "basis orders");
    auto chain = theta::lower_central_series(g);
    std::vector<std::size_t> sizes;
    for (const auto& s : chain) sizes.push_back(s.size());
    o.need(sizes == std::vector<std::size_t>{1024, 64, 32, 8, 1}, "series sizes");
    // gamma_2 must also come out as the closure of all commutators.
    std::vector<theta::Index> all;
    for (int k = 0; k < theta::kOrder; ++k) all.push_back(static_cast<theta::Index>(k));
    o.need(theta::commutator_subgroup(g, all, all) == chain[1], "gamma_2 differs from the closure");
  });

  criterion(4, "word search: 64 then 4 survivors xyC3^a, all applicable with exhaustive associativity", kLimit4,
            [](Outcome& o) {
              auto s1 = verbal::stage1_unit_filter();
              o.need(s1.size() == 64, "stage 1 left " + std::to_string(s1.size()));
              auto s2 = verbal::stage2_congruence_filter(s1);
              std::vector<theta::Index> want;
              for (int a = 0; a < 4; ++a) want.push_back(verbal::standard_system(a).product);
              o.need(s2.stage2 == want, "stage 2 survivors differ");
              for (int a = 0; a < 4; ++a) {
                auto cert = verbal::full_applicability(verbal::standard_system(a), 0, kSeed);
                o.need(cert.applicable(), "W" + std::to_string(a) + ": " + cert.witness);
              }
            });

  criterion(5, "four closed forms and sixteen intermediate formulas", kLimit5, [](Outcome& o) {
    auto r = verbal::verify_an2_closed_forms();
    o.need(r.checks.size() == 20, "expected 20 formulas, got " + std::to_string(r.checks.size()));
    o.need(r, {});
  });

  criterion(6, "automorphisms: composition, group of order 4, inner exactly W0 and W1, |A/Y| = 2", kLimit6,
            [](Outcome& o) {
              auto autos = autcat::discover(0, kSeed);
              o.need(autcat::compose(autos[2], autos[1]) == verbal::standard_system(3), "compose(W2,W1) != W3");
              auto rep = autcat::quotient_report(16, kSeed);
              o.need(rep.checks, {"autcat.compose", "autcat.group", "autcat.inner_test.W0", "autcat.naturality",
                                  "autcat.quotient"});
              o.need(rep.order_s == 4, "|S| != 4");
              o.need(rep.inner == std::array<bool, 4>{true, true, false, false}, "inner set differs");
              o.need(rep.order_quotient == 2, "|A/Y| = " + std::to_string(rep.order_quotient));
              const auto& G = theta::group();
              const theta::Index xy = G.mul(theta::kX, theta::kY);
              // c_2 collapses <x> onto {1, x^2}.
              auto w2 = autcat::inner_test(verbal::standard_system(2));
              auto img = w2.image_on_x[2];
              std::sort(img.begin(), img.end());
              img.erase(std::unique(img.begin(), img.end()), img.end());
              o.need(img == std::vector<theta::Index>{theta::kIdentity, G.pow(theta::kX, 2)}, "image of c2 on <x>");
              // c_1 on W2: x o y = xy(y,x)^2 but c_1(xy) = xy.
              auto [lhs, rhs] = w2.at_generators[1];
              o.need(lhs == G.mul(xy, G.pow(theta::kC3, 2)) && rhs == xy, "c1 witness on W2");
              o.need(!autcat::inner_test(verbal::standard_system(3)).inner, "W3 accepted as inner");
            });

  criterion(7, "lemma suite, exhaustive", kLimit7, [](Outcome& o) {
    auto r = theta::verify_lemma_suite(0, kSeed);
    o.need(r, {"lemma.gamma2_commutative", "lemma.gamma3_exponent2", "lemma.gamma2_squares_in_gamma4",
               "lemma.fourth_power_gamma2", "lemma.sq_inverse_left", "lemma.sq_inverse_right", "lemma.sq_left",
               "lemma.sq_right"});
    for (const auto* n : {"lemma.sq_left", "lemma.sq_right"}) {
      const Check* c = r.find(n);
      o.need(c && c->counts.value("mode", "") == "exhaustive", std::string(n) + " was not exhaustive");
    }
  });

  criterion(8, "strategy independence on 1e4 words; reduce on all canonical pairs and 1e5 box samples", kLimit8,
            [](Outcome& o) {
              auto r = n4::verify_collection(kSeed, kStrategyWords);
              o.need(r, {"n4.strategy_independence"});
              auto w = theta::well_definedness_check(kBoxSamples, kSeed);
              o.need(w, {"theta.index_bijection", "theta.canonical_pairs_naive", "theta.box_homomorphism"});
            });

  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
