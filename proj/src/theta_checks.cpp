#include <algorithm>
#include <random>

#include "sanovcat/parallel.hpp"
#include "sanovcat/theta.hpp"
#include "triples.hpp"

namespace sanovcat::theta {

namespace {

std::vector<Index> all_elements() {
  std::vector<Index> v(kOrder);
  for (int k = 0; k < kOrder; ++k) v[k] = static_cast<Index>(k);
  return v;
}

std::vector<char> membership(const std::vector<Index>& s) {
  std::vector<char> m(kOrder, 0);
  for (Index g : s) m[g] = 1;
  return m;
}

n4::Element draw_box(std::mt19937_64& rng, int box) {
  std::uniform_int_distribution<int> d(-box, box);
  n4::Element g;
  for (auto& v : g.a) v = d(rng);
  return g;
}

}  // namespace

Report well_definedness_check(std::size_t samples, std::uint64_t seed, const Group& g) {
  Report rep;
  rep.add(timed_check("theta.index_bijection", "packed coordinates index the 1024 elements once",
                      [&](Check& c) {
    std::vector<char> hit(kOrder, 0);
    for (int k = 0; k < kOrder; ++k) {
      Index r = reduce(lift(static_cast<Index>(k)));
      c.expect(r == k, "reduce(lift(" + std::to_string(k) + ")) = " + std::to_string(r));
      hit[r] = 1;
    }
    c.counts["distinct"] = std::count(hit.begin(), hit.end(), 1);
  }));

  rep.add(timed_check("theta.canonical_pairs_naive", "all canonical lift pairs re-collected by the rewriting collector",
                      [&](Check& c) {
    const auto& col = n4::default_collector();
    auto parts = parallel_chunks<std::vector<std::string>>(kOrder, [&](std::size_t lo, std::size_t hi) {
      std::vector<std::string> bad;
      for (std::size_t a = lo; a < hi; ++a) {
        n4::LetterWord wa = n4::to_word(lift(static_cast<Index>(a)));
        for (int b = 0; b < kOrder; ++b) {
          n4::LetterWord w = wa;
          for (auto l : n4::to_word(lift(static_cast<Index>(b)))) w.push_back(l);
          Index got = reduce(col.collect(w));
          Index want = g.mul(static_cast<Index>(a), static_cast<Index>(b));
          if (got != want && bad.size() < Check::kMaxWitnesses)
            bad.push_back(name(static_cast<Index>(a)) + " * " + name(static_cast<Index>(b)) +
                          ": collected " + name(got) + ", table " + name(want));
        }
      }
      return bad;
    });
    for (auto& p : parts)
      for (auto& w : p) c.fail(std::move(w));
    c.counts["pairs"] = kOrder * kOrder;
  }));

  rep.add(timed_check("theta.box_homomorphism", "reduce is multiplicative on sampled N4 pairs",
                      [&](Check& c) {
    std::mt19937_64 rng(seed);
    const auto& col = n4::default_collector();
    for (std::size_t k = 0; k < samples; ++k) {
      n4::Element u = draw_box(rng, 3), v = draw_box(rng, 3);
      Index lhs = reduce(col.mul(u, v));
      Index rhs = g.mul(reduce(u), reduce(v));
      if (lhs != rhs) c.fail("u=" + n4::coords(u) + " v=" + n4::coords(v));
    }
    c.counts["pairs"] = samples;
  }));

  rep.add(timed_check("theta.relators_vanish", "generators of R and their conjugates map to 1",
                      [&](Check& c) {
    const auto& col = n4::default_collector();
    const char* relators[] = {"x^4", "y^4", "C4^2", "C5^2", "C6^2", "C7^2", "C8^2", "C3^2 C6 C7 C8"};
    std::mt19937_64 rng(seed + 1);
    std::size_t conjugates = 0;
    for (const char* text : relators) {
      n4::Element r = n4::eval(text);
      c.expect(reduce(r) == kIdentity, std::string(text) + " does not vanish");
      for (int k = 0; k < 200; ++k) {
        n4::Element h = draw_box(rng, 3);
        n4::Element conj = col.mul(col.mul(col.inv(h), r), h);
        ++conjugates;
        c.expect(reduce(conj) == kIdentity,
                 std::string(text) + " conjugated by " + n4::coords(h) + " does not vanish");
      }
    }
    c.counts["conjugates"] = conjugates;
  }));
  return rep;
}

Report verify_theta_membership(const Group& g) {
  Report rep;
  const auto all = all_elements();

  rep.add(timed_check("theta.basis_orders", "C1, C2, C3 have order 4 and C4..C7 order 2", [&](Check& c) {
    const Index basis[] = {kX, kY, kC3, kC4, kC5, kC6, kC7};
    const int want[] = {4, 4, 4, 2, 2, 2, 2};
    for (int i = 0; i < 7; ++i) {
      int got = g.order(basis[i]);
      c.counts["C" + std::to_string(i + 1)] = got;
      c.expect(got == want[i], "|C" + std::to_string(i + 1) + "| = " + std::to_string(got));
    }
  }));

  rep.add(timed_check("theta.exponent4", "g^4 = 1 for every element", [&](Check& c) {
    std::map<int, int> hist;
    for (Index a : all) {
      if (g.pow(a, 4) != kIdentity) c.fail(name(a) + " has fourth power " + name(g.pow(a, 4)));
      ++hist[g.order(a)];
    }
    for (auto [o, n] : hist) c.counts["order_" + std::to_string(o)] = n;
    c.counts["elements"] = kOrder;
  }));

  rep.add(timed_check("theta.associative", "product table is associative on all triples", [&](Check& c) {
    const auto& t = g.table();
    scan_triples(c, 0, 0, "associativity", [&](Index a, Index b, Index cc) {
      return t[t[a * kOrder + b] * kOrder + cc] == t[a * kOrder + t[b * kOrder + cc]];
    });
  }));

  auto chain = lower_central_series(g);
  rep.add(timed_check("theta.lower_central_series", "gamma_{i+1} = (gamma_i, G) by closure", [&](Check& c) {
    const std::size_t want[] = {1024, 64, 32, 8, 1};
    for (std::size_t i = 0; i < chain.size(); ++i) {
      c.counts["gamma" + std::to_string(i + 1)] = chain[i].size();
      c.expect(chain[i].size() == want[i], "|gamma" + std::to_string(i + 1) + "| = " +
                                                std::to_string(chain[i].size()));
      if (i > 0) {
        auto up = membership(chain[i - 1]);
        for (Index h : chain[i]) c.expect(up[h], "gamma" + std::to_string(i + 1) + " not nested");
      }
    }
    // Independent descriptions by generators.
    auto gamma2 = generated_subgroup(g, {kC3, kC4, kC5, kC6, kC7});
    auto gamma3 = generated_subgroup(g, {g.pow(kC3, 2), kC4, kC5, kC6, kC7});
    auto gamma4 = generated_subgroup(g, {g.pow(kC3, 2), kC6, kC7});
    c.expect(chain[1] == gamma2, "gamma2 differs from <C3..C7>");
    c.expect(chain[2] == gamma3, "gamma3 differs from <C3^2, C4..C7>");
    c.expect(chain[3] == gamma4, "gamma4 differs from <C3^2, C6, C7>");
    auto c4_to_c7 = generated_subgroup(g, {kC4, kC5, kC6, kC7});
    c.counts["size_C4_to_C7"] = c4_to_c7.size();
    c.note("<C4..C7> has " + std::to_string(c4_to_c7.size()) +
           " elements; with C8 = C3^2 C6 C7 the subgroup gamma3 also holds C3^2");
  }));

  rep.add(timed_check("theta.metabelian", "gamma_2 is abelian on all 64^2 pairs", [&](Check& c) {
    std::size_t pairs = 0;
    for (Index a : chain[1])
      for (Index b : chain[1]) {
        ++pairs;
        if (g.comm(a, b) != kIdentity) c.fail("(" + name(a) + ", " + name(b) + ") != 1");
      }
    c.counts["pairs"] = pairs;
  }));

  rep.add(timed_check("theta.class4", "gamma_5 is trivial and five-fold commutators vanish", [&](Check& c) {
    c.expect(chain[4].size() == 1, "gamma5 is not trivial");
    // (g1,...,g5) over gamma4 x G already covers every left-normed 5-fold commutator.
    for (Index a : chain[3])
      for (Index b : all)
        if (g.comm(a, b) != kIdentity) c.fail("(" + name(a) + ", " + name(b) + ") != 1");
  }));

  rep.add(timed_check("theta.gamma4_central", "gamma_4 lies in the center", [&](Check& c) {
    auto z = center(g);
    auto zm = membership(z);
    for (Index h : chain[3]) c.expect(zm[h], name(h) + " is not central");
    c.counts["center"] = z.size();
  }));

  rep.add(timed_check("theta.v_alpha", "v(a1,a2) vanishes for 0 <= a1, a2 <= 3", [&](Check& c) {
    Equation v = parse_equation("(Y,X)^2 (Y,X,Y,Y) (Y,X,X,Y) (Y,X,X,X)");
    for (int a1 = 0; a1 < 4; ++a1)
      for (int a2 = 0; a2 < 4; ++a2) {
        std::map<std::string, Index> b{{"X", g.pow(kX, a1)}, {"Y", g.pow(kY, a2)}};
        Index got = eval(v.lhs, b, g);
        c.expect(got == kIdentity,
                 "v(" + std::to_string(a1) + "," + std::to_string(a2) + ") = " + name(got));
      }
    c.counts["pairs"] = 16;
  }));
  return rep;
}

Report verify_lemma_suite(std::size_t sample, std::uint64_t seed, const Group& g) {
  Report rep;
  auto chain = lower_central_series(g);
  const auto& gamma2 = chain[1];
  const auto& gamma3 = chain[2];
  auto in_gamma4 = membership(chain[3]);

  rep.add(timed_check("lemma.gamma2_commutative", "gamma_2 is a commutative group", [&](Check& c) {
    for (Index a : gamma2)
      for (Index b : gamma2)
        if (g.mul(a, b) != g.mul(b, a)) c.fail(name(a) + " and " + name(b) + " do not commute");
    c.counts["pairs"] = gamma2.size() * gamma2.size();
  }));

  rep.add(timed_check("lemma.gamma3_exponent2", "gamma_3 has exponent 2", [&](Check& c) {
    for (Index h : gamma3) c.expect(g.pow(h, 2) == kIdentity, name(h) + " squared is " + name(g.pow(h, 2)));
    c.counts["elements"] = gamma3.size();
  }));

  rep.add(timed_check("lemma.gamma2_squares_in_gamma4", "h^2 lies in gamma_4 for h in gamma_2", [&](Check& c) {
    for (Index h : gamma2) c.expect(in_gamma4[g.pow(h, 2)], name(h) + " squared is outside gamma4");
    c.counts["elements"] = gamma2.size();
  }));

  // Squared commutators, reused by the four identities below.
  std::vector<Index> sqc(static_cast<std::size_t>(kOrder) * kOrder);
  for (int a = 0; a < kOrder; ++a)
    for (int b = 0; b < kOrder; ++b)
      sqc[a * kOrder + b] = g.pow(g.comm(static_cast<Index>(a), static_cast<Index>(b)), 2);
  auto sq = [&](Index a, Index b) { return sqc[a * kOrder + b]; };

  const char* scope = "identities of G = F(x,y); three-variable identities are necessary-condition evidence";
  rep.add(timed_check("lemma.sq_left", "(ab,c)^2 = (a,c)^2 (b,c)^2", [&](Check& c) {
    scan_triples(c, sample, seed, "(ab,c)^2", [&](Index a, Index b, Index cc) {
      return sq(g.mul(a, b), cc) == g.mul(sq(a, cc), sq(b, cc));
    });
    c.counts["scope"] = scope;
  }));
  rep.add(timed_check("lemma.sq_right", "(a,bc)^2 = (a,c)^2 (a,b)^2", [&](Check& c) {
    scan_triples(c, sample, seed + 1, "(a,bc)^2", [&](Index a, Index b, Index cc) {
      return sq(a, g.mul(b, cc)) == g.mul(sq(a, cc), sq(a, b));
    });
    c.counts["scope"] = scope;
  }));

  rep.add(timed_check("lemma.sq_inverse_left", "(a^-1,b)^2 = (a,b)^2", [&](Check& c) {
    for (int a = 0; a < kOrder; ++a)
      for (int b = 0; b < kOrder; ++b) {
        auto ai = static_cast<Index>(a), bi = static_cast<Index>(b);
        if (sq(g.inv(ai), bi) != sq(ai, bi)) c.fail("a=" + name(ai) + " b=" + name(bi));
      }
    c.counts["pairs"] = kOrder * kOrder;
  }));
  rep.add(timed_check("lemma.sq_inverse_right", "(a,b^-1)^2 = (a,b)^2", [&](Check& c) {
    for (int a = 0; a < kOrder; ++a)
      for (int b = 0; b < kOrder; ++b) {
        auto ai = static_cast<Index>(a), bi = static_cast<Index>(b);
        if (sq(ai, g.inv(bi)) != sq(ai, bi)) c.fail("a=" + name(ai) + " b=" + name(bi));
      }
    c.counts["pairs"] = kOrder * kOrder;
  }));

  rep.add(timed_check("lemma.fourth_power_gamma2", "(gh)^4 = g^4 for h in gamma_2", [&](Check& c) {
    for (int a = 0; a < kOrder; ++a)
      for (Index h : gamma2) {
        auto ai = static_cast<Index>(a);
        if (g.pow(g.mul(ai, h), 4) != g.pow(ai, 4)) c.fail("g=" + name(ai) + " h=" + name(h));
      }
    c.counts["pairs"] = kOrder * gamma2.size();
  }));
  return rep;
}

}  // namespace sanovcat::theta
