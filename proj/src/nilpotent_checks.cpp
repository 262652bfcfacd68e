#include <random>

#include "sanovcat/nilpotent.hpp"

namespace sanovcat::n4 {

namespace {

struct Identity {
  std::string name;
  std::string ref;
  std::string text;
};

// Variables named g* range over the whole group; l* over gamma_k, where k is
// the per-identity minimum weight.
Element sample(std::mt19937_64& rng, int min_weight, int bound) {
  std::uniform_int_distribution<int> d(-bound, bound);
  Element g;
  for (int i = 1; i <= kLetters; ++i)
    if (kWeight[i] >= min_weight) g[i] = d(rng);
  return g;
}

Check sampled_identity(const Identity& id, int l_weight, std::mt19937_64& rng,
                       std::size_t samples) {
  return timed_check(id.name, id.ref, [&](Check& c) {
    Equation eq = parse_equation(id.text);
    auto vars = free_variables(eq.lhs);
    for (const auto& v : free_variables(eq.rhs)) vars.insert(v);
    std::size_t failures = 0;
    for (std::size_t s = 0; s < samples; ++s) {
      std::map<std::string, Element> b;
      for (const auto& v : vars) b[v] = sample(rng, v[0] == 'l' ? l_weight : 1, 3);
      Element lhs = eval(eq.lhs, b);
      Element rhs = eval(eq.rhs, b);
      if (lhs != rhs) {
        ++failures;
        std::string w = id.text + " at";
        for (const auto& [k, e] : b) w += " " + k + "=" + coords(e);
        c.fail(w);
      }
    }
    c.counts["samples"] = samples;
    c.counts["failures"] = failures;
  });
}

Check generator_identity(const Identity& id) {
  return timed_check(id.name, id.ref, [&](Check& c) {
    Equation eq = parse_equation(id.text);
    Element lhs = eval(eq.lhs);
    Element rhs = eval(eq.rhs);
    c.counts["lhs"] = coords(lhs);
    c.counts["rhs"] = coords(rhs);
    c.expect(lhs == rhs, id.text + ": lhs " + to_string(lhs) + " != rhs " + to_string(rhs));
  });
}

}  // namespace

Report verify_identities(std::uint64_t seed, std::size_t samples) {
  Report r;
  r.add(timed_check("n4.collect_formula", "fourth power of xy collected in N4(x,y)", [](Check& c) {
    Element got = default_collector().pow(eval("x*y"), 4);
    Element want;
    want.a = {4, 4, 6, 14, 4, 1, 11, 11};
    c.counts["vector"] = coords(got);
    c.expect(got == want, "(xy)^4 collected to " + coords(got));
  }));

  const Identity at_generators[] = {
      {"n4.collect_formula_word", "fourth power of xy against the commutator word",
       "(x y)^4 = x^4 y^4 (y,x)^6 (y,x,y)^14 (y,x,y,y)^11 (y,x,x)^4 (y,x,x,y)^11 (y,x,x,x)"},
      {"n4.C8_two_forms", "both weight-4 commutators with two x and two y agree",
       "(y,x,y,x) = (y,x,x,y)"},
      {"n4.C8_is_basis", "C8 names the weight-4 commutator with two x and two y",
       "(y,x,y,x) = C8"},
      {"n4.xyx_inverse", "(x,y,x) is the inverse of C5", "(x,y,x) = C5^-1"},
      {"n4.y2x", "moving x in front of y^2", "y^2 x = x y^2 (y,x)^2 (y,x,y)"},
      {"n4.xy_cubed", "third power of xy",
       "(x y)^3 = x^3 y^3 (y,x)^3 (y,x,y)^5 (y,x,x) (y,x,y,y)^2 (y,x,x,y)^2"},
      {"n4.xyx3y3", "the product x y x^3 y^3",
       "x y x^3 y^3 = x^4 y^4 (y,x)^3 (y,x,y)^9 (y,x,y,y)^9 (y,x,x)^3 (y,x,x,y)^9 (y,x,x,x)"},
  };
  for (const auto& id : at_generators) r.add(generator_identity(id));

  std::mt19937_64 rng(seed);
  struct Restricted {
    Identity id;
    int l_weight;
  };
  const Restricted restricted[] = {
      {{"n4.left_distributive", "(ab,c) expanded by conjugation", "(g1 g2, g3) = g2^-1 (g1,g3) g2 (g2,g3)"}, 1},
      {{"n4.left_distributive_expanded", "(ab,c) expanded with a triple commutator",
        "(g1 g2, g3) = (g1,g3) (g1,g3,g2) (g2,g3)"}, 1},
      {{"n4.right_distributive", "(a,bc) expanded by conjugation", "(g1, g2 g3) = (g1,g3) g3^-1 (g1,g2) g3"}, 1},
      {{"n4.right_distributive_expanded", "(a,bc) expanded with a triple commutator",
        "(g1, g2 g3) = (g1,g3) (g1,g2) (g1,g2,g3)"}, 1},
      {{"n4.inverse_rule", "(a^-1,b) as a conjugate", "(g1^-1, g2) = g1 (g2,g1) g1^-1"}, 1},
      {{"n4.inverse_rule_expanded", "(a^-1,b) expanded", "(g1^-1, g2) = (g1,g2)^-1 (g2,g1,g1^-1)"}, 1},
      {{"n4.gamma4_absorbed", "gamma_4 factors drop out of a commutator", "(g1 l1, g2 l2) = (g1,g2)"}, 4},
      {{"n4.gamma2_left_linear", "commutator is multiplicative in a gamma_2 left argument",
        "(l1 l2, g1) = (l1,g1) (l2,g1)"}, 2},
      {{"n4.gamma2_right_linear", "commutator is multiplicative in a gamma_2 right argument",
        "(g1, l1 l2) = (g1,l2) (g1,l1)"}, 2},
      {{"n4.gamma3_absorbed", "gamma_3 factors drop out of a triple commutator",
        "(g1 l1, g2 l2, g3 l3) = (g1,g2,g3)"}, 3},
      {{"n4.gamma2_absorbed", "gamma_2 factors drop out of a weight-4 commutator",
        "(g1 l1, g2 l2, g3 l3, g4 l4) = (g1,g2,g3,g4)"}, 2},
      {{"n4.weight4_linear_1", "weight-4 commutators are multiplicative in argument 1",
        "(g1 g5, g2, g3, g4) = (g1,g2,g3,g4) (g5,g2,g3,g4)"}, 1},
      {{"n4.weight4_linear_2", "weight-4 commutators are multiplicative in argument 2",
        "(g1, g2 g5, g3, g4) = (g1,g2,g3,g4) (g1,g5,g3,g4)"}, 1},
      {{"n4.weight4_linear_3", "weight-4 commutators are multiplicative in argument 3",
        "(g1, g2, g3 g5, g4) = (g1,g2,g3,g4) (g1,g2,g5,g4)"}, 1},
      {{"n4.weight4_linear_4", "weight-4 commutators are multiplicative in argument 4",
        "(g1, g2, g3, g4 g5) = (g1,g2,g3,g4) (g1,g2,g3,g5)"}, 1},
      {{"n4.gamma4_central", "gamma_4 lies in the center", "(l1, g1) = 1"}, 4},
      {{"n4.gamma2_abelian", "gamma_2 is abelian", "(l1, l2) = 1"}, 2},
  };
  for (const auto& [id, w] : restricted) r.add(sampled_identity(id, w, rng, samples));
  return r;
}

Report verify_collection(std::uint64_t seed, std::size_t words) {
  Report r;
  const auto& col = default_collector();
  r.add(timed_check("n4.strategy_independence", "leftmost and rightmost rewriting agree with the closed form",
                    [&](Check& c) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> len(1, 24), letter(1, kLetters), sign(0, 1);
    std::size_t letters = 0;
    for (std::size_t k = 0; k < words; ++k) {
      LetterWord w(static_cast<std::size_t>(len(rng)));
      Element want;
      for (auto& l : w) {
        l = {letter(rng), sign(rng) ? 1 : -1};
        want = col.mul(want, Element::letter(l.index, l.sign));
      }
      letters += w.size();
      Element left = col.collect(w, Strategy::leftmost);
      Element right = col.collect(w, Strategy::rightmost);
      if (left != want || right != want)
        c.fail("word " + std::to_string(k) + ": leftmost " + coords(left) + ", rightmost " +
               coords(right) + ", closed form " + coords(want));
    }
    c.counts["words"] = words;
    c.counts["letters"] = letters;
  }));
  r.add(timed_check("n4.torsion_free", "g^k != 1 for g != 1 and 1 <= k <= 8, sampled", [&](Check& c) {
    std::mt19937_64 rng(seed + 1);
    for (std::size_t k = 0; k < words; ++k) {
      Element g = sample(rng, 1, 3);
      if (g.is_identity()) continue;
      for (int e = 1; e <= 8; ++e)
        c.expect(!col.pow(g, e).is_identity(), coords(g) + "^" + std::to_string(e) + " = 1");
    }
    c.counts["samples"] = words;
  }));
  return r;
}

}  // namespace sanovcat::n4
