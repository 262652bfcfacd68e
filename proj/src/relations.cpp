// Each extra generator of R written as a product of fourth powers in N4(x,y).
//
// K(a,b) = b^-4 a^-4 (ab)^4 is a product of three fourth powers and lies in
// the abelian subgroup gamma_2, as do the fourth powers P_i = C_i^4 for
// i >= 3. So every certificate below is an integer combination of K and P
// terms, and combining them in any order gives the same element.

#include <map>

#include "sanovcat/theta.hpp"

namespace sanovcat::theta {

namespace {

using Combo = std::map<std::string, int>;

Combo operator+(Combo a, const Combo& b) {
  for (const auto& [k, v] : b) a[k] += v;
  return a;
}

Combo operator*(int s, Combo a) {
  for (auto& [k, v] : a) v *= s;
  return a;
}

Combo operator-(const Combo& a, const Combo& b) { return a + (-1) * b; }

Combo term(const std::string& name) { return {{name, 1}}; }

std::string describe(const Combo& c) {
  std::string out;
  for (const auto& [k, v] : c) {
    if (v == 0) continue;
    if (!out.empty()) out += " ";
    out += k + (v == 1 ? "" : "^" + std::to_string(v));
  }
  return out.empty() ? "1" : out;
}

}  // namespace

Report verify_relations_are_consequences(const n4::Collector& col) {
  Report rep;
  std::map<std::string, n4::Element> terms;
  auto k_term = [&](const std::string& a, const std::string& b) {
    n4::Element ea = n4::eval(parse_expr(a), n4::standard_binding(), col);
    n4::Element eb = n4::eval(parse_expr(b), n4::standard_binding(), col);
    return col.mul(col.mul(col.pow(eb, -4), col.pow(ea, -4)), col.pow(col.mul(ea, eb), 4));
  };
  const std::pair<std::string, std::pair<const char*, const char*>> ks[] = {
      {"K1", {"x", "y"}},           {"K2", {"y", "x"}},       {"K3", {"(y,x)", "x"}},
      {"K4", {"y", "(y,x)"}},       {"K5", {"x", "(y,x,x)"}}, {"K6", {"(y,x,y)", "y"}},
  };
  for (const auto& [label, ab] : ks) terms[label] = k_term(ab.first, ab.second);
  for (int i = 3; i <= n4::kLetters; ++i)
    terms["P" + std::to_string(i)] = col.pow(n4::Element::letter(i), 4);

  rep.add(timed_check("relations.K_xy", "b^-4 a^-4 (ab)^4 at (x,y) is the tail of the (xy)^4 formula",
                      [&](Check& c) {
    n4::Element want;
    want.a = {0, 0, 6, 14, 4, 1, 11, 11};
    c.counts["K1"] = n4::coords(terms["K1"]);
    c.expect(terms["K1"] == want, "K(x,y) = " + n4::coords(terms["K1"]));
    for (const auto& [label, ab] : ks) {
      const auto& e = terms[label];
      c.counts[label] = n4::coords(e);
      c.expect(e[1] == 0 && e[2] == 0, label + " is not in gamma2");
    }
  }));

  const Combo p3 = term("P3"), p4 = term("P4"), p5 = term("P5"), p6 = term("P6"), p7 = term("P7"),
              p8 = term("P8");
  const Combo c4 = term("K4") - p4 - p7;
  const Combo c6 = term("K5") - p6;
  const Combo c7 = term("K6") + 2 * p7;
  const Combo c5 = (-1) * term("K3") - term("K5") - p5 - 2 * p6;
  const Combo c8 = term("K1") - term("K2") - 3 * p3 - 4 * p4 - c4 - 4 * p5 - c5 - 3 * p6 - 3 * p7 -
                   5 * p8;
  const Combo top = term("K1") - p3 - 3 * p4 - c4 - p5 - 2 * p7 - c7 - 2 * p8 - c8;

  const std::pair<const char*, Combo> certificates[] = {
      {"C4^2", c4}, {"C5^2", c5}, {"C6^2", c6}, {"C7^2", c7}, {"C8^2", c8}, {"C3^2 C6 C7 C8", top},
  };
  for (const auto& [target, combo] : certificates) {
    rep.add(timed_check(std::string("relations.") + target, "relator as a product of fourth powers",
                        [&](Check& c) {
      n4::Element got;
      for (const auto& [k, v] : combo)
        if (v != 0) got = col.mul(got, col.pow(terms.at(k), v));
      n4::Element want = n4::eval(parse_expr(target), n4::standard_binding(), col);
      c.counts["certificate"] = describe(combo);
      c.counts["value"] = n4::coords(got);
      c.expect(got == want, std::string(target) + ": certificate gives " + n4::coords(got));
    }));
  }
  return rep;
}

}  // namespace sanovcat::theta
