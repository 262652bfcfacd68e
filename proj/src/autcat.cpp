#include "sanovcat/autcat.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "sanovcat/parallel.hpp"

namespace sanovcat::autcat {

using theta::kIdentity;
using theta::kOrder;
using theta::kX;
using theta::kY;
using theta::name;

std::vector<StrongAutomorphism> discover(std::size_t assoc_sample, std::uint64_t seed,
                                         const theta::Group& G) {
  std::vector<StrongAutomorphism> out;
  for (int a = 0; a < 4; ++a) {
    auto w = verbal::standard_system(a);
    auto cert = verbal::full_applicability(w, assoc_sample, seed, G);
    if (!cert.applicable() || !cert.s)
      throw std::runtime_error("W" + std::to_string(a) + " rejected: " + cert.witness);
    out.push_back({a, w, std::move(*cert.s)});
  }
  return out;
}

verbal::WordSystem compose(const StrongAutomorphism& beta, const StrongAutomorphism& alpha) {
  auto ss = [&](Index g) { return beta.s(alpha.s(g)); };
  const Index xy = kX + kY;
  const Index x_inv = 3 * kX;
  if (ss(kIdentity) != kIdentity) throw std::runtime_error("composed unit word is not 1");
  const Index inv = ss(x_inv);
  if (inv >= 4) throw std::runtime_error("composed inverse word " + name(inv) + " is not a power of x");
  verbal::WordSystem w{inv, ss(xy)};
  if (!verbal::standard_alpha(w))
    throw std::runtime_error("composition gives " + verbal::to_string(w) +
                             ", outside the discovered systems");
  return w;
}

CayleyTable cayley_table(const std::vector<StrongAutomorphism>& autos) {
  CayleyTable t{};
  for (int b = 0; b < 4; ++b)
    for (int a = 0; a < 4; ++a) t[b][a] = *verbal::standard_alpha(compose(autos[b], autos[a]));
  return t;
}

std::string classify(const CayleyTable& t) {
  int e = -1;
  for (int k = 0; k < 4 && e < 0; ++k) {
    bool unit = true;
    for (int a = 0; a < 4; ++a) unit = unit && t[k][a] == a && t[a][k] == a;
    if (unit) e = k;
  }
  if (e < 0) return "not a group of order 4";
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        if (t[t[a][b]][c] != t[a][t[b][c]]) return "not a group of order 4";
  int max_order = 1;
  for (int a = 0; a < 4; ++a) {
    int n = 1;
    for (int p = a; p != e && n <= 4; p = t[p][a]) ++n;
    if (n > 4) return "not a group of order 4";
    max_order = std::max(max_order, n);
  }
  return max_order == 4 ? "cyclic of order 4" : "Klein four";
}

InnerVerdict inner_test(const verbal::WordSystem& w, const theta::Group& G) {
  const verbal::VerbalGroupTable t(w, G);
  InnerVerdict v;
  for (int i = 0; i < 4; ++i) {
    auto c = [&](Index g) { return G.pow(g, i); };
    std::vector<char> hit(kOrder, 0);
    bool bij = true;
    for (int g = 0; g < kOrder; ++g) {
      Index img = c(static_cast<Index>(g));
      if (hit[img]) bij = false;
      hit[img] = 1;
    }
    v.bijective[i] = bij;
    std::set<Index> on_x;
    for (int k = 0; k < 4; ++k) on_x.insert(c(G.pow(kX, k)));
    v.image_on_x[i].assign(on_x.begin(), on_x.end());
    v.at_generators[i] = {t.mul(c(kX), c(kY)), c(G.mul(kX, kY))};

    const std::string ci = "c_" + std::to_string(i);
    if (!bij) {
      std::string img;
      for (Index g : v.image_on_x[i]) img += (img.empty() ? "" : ", ") + name(g);
      v.rejections.push_back(ci + " is not a bijection; its image on <x> is {" + img + "}");
      continue;
    }
    if (v.at_generators[i].first != v.at_generators[i].second) {
      v.rejections.push_back(ci + "(x) o " + ci + "(y) = " + name(v.at_generators[i].first) +
                             " but " + ci + "(xy) = " + name(v.at_generators[i].second));
      continue;
    }
    auto bad = parallel_chunks<std::optional<std::pair<Index, Index>>>(
        kOrder, [&](std::size_t lo, std::size_t hi) -> std::optional<std::pair<Index, Index>> {
          for (std::size_t g = lo; g < hi; ++g)
            for (int h = 0; h < kOrder; ++h) {
              auto a = static_cast<Index>(g);
              auto b = static_cast<Index>(h);
              if (c(G.mul(a, b)) != t.mul(c(a), c(b))) return std::pair{a, b};
            }
          return std::nullopt;
        });
    auto first = std::find_if(bad.begin(), bad.end(), [](const auto& b) { return b.has_value(); });
    if (first != bad.end()) {
      auto [a, b] = **first;
      v.rejections.push_back(ci + " fails c(gh) = c(g) o c(h) at g=" + name(a) + " h=" + name(b));
      continue;
    }
    if (!v.exponent) v.exponent = i;
  }
  v.inner = v.exponent.has_value();
  return v;
}

Index endomorphism(Index u, Index v, Index g, const theta::Group& G) {
  return verbal::evaluate_word(g, u, v, G);
}

AutReport quotient_report(std::size_t naturality_samples, std::uint64_t seed,
                          std::size_t assoc_sample, const theta::Group& G) {
  AutReport out;
  Report& rep = out.checks;
  std::vector<StrongAutomorphism> autos;
  const std::string scope = "inner verdicts certified on F(x,y); rejections need no rank bound";

  rep.add(timed_check("autcat.discover", "W_0..W_3 certified with their s-maps", [&](Check& c) {
    autos = discover(assoc_sample, seed, G);
    c.counts["systems"] = autos.size();
    c.counts["associativity_mode"] = assoc_sample == 0 ? "exhaustive" : "sampled";
  }));
  const bool have = autos.size() == 4;

  rep.add(timed_check("autcat.compose", "s_beta s_alpha (xy) names the composite", [&](Check& c) {
    if (!have) return c.fail("automorphisms unavailable");
    out.table = cayley_table(autos);
    auto rows = nlohmann::json::array();
    for (int b = 0; b < 4; ++b) {
      std::vector<int> row(out.table[b].begin(), out.table[b].end());
      rows.push_back(row);
    }
    c.counts["table"] = rows;
    c.counts["W2_W1"] = verbal::to_string(compose(autos[2], autos[1]));
    c.expect(out.table[2][1] == 3, "Phi_2 Phi_1 = Phi_" + std::to_string(out.table[2][1]));
    c.expect(out.table[1][1] == 0, "Phi_1 Phi_1 = Phi_" + std::to_string(out.table[1][1]));
    for (int a = 0; a < 4; ++a)
      c.expect(out.table[0][a] == a && out.table[a][0] == a, "Phi_0 is not a unit at " + std::to_string(a));
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        for (int d = 0; d < 4; ++d)
          c.expect(out.table[out.table[a][b]][d] == out.table[a][out.table[b][d]],
                   "composition not associative at " + std::to_string(a) + std::to_string(b) +
                       std::to_string(d));
  }));

  rep.add(timed_check("autcat.group", "the four automorphisms form a group of order 4", [&](Check& c) {
    if (!have) return c.fail("automorphisms unavailable");
    out.type = classify(out.table);
    std::set<int> elements;
    for (const auto& row : out.table) elements.insert(row.begin(), row.end());
    out.order_s = elements.size();
    c.counts["order"] = out.order_s;
    c.counts["type"] = out.type;
    c.expect(out.order_s == 4, "order " + std::to_string(out.order_s));
    c.expect(out.type == "Klein four", "type: " + out.type);
  }));

  const Index xy = G.mul(kX, kY);
  const Index xy_c3sq = G.mul(xy, G.pow(theta::kC3, 2));
  for (int a = 0; a < 4; ++a) {
    const bool want_inner = a <= 1;
    rep.add(timed_check("autcat.inner_test.W" + std::to_string(a),
                        want_inner ? "some power map c is an isomorphism G -> (G, o)"
                                   : "no power map is an isomorphism G -> (G, o)",
                        [&](Check& c) {
      auto v = inner_test(verbal::standard_system(a), G);
      out.inner[a] = v.inner;
      c.counts["verdict"] = v.inner ? "inner (rank-2 certified)" : "not inner";
      c.counts["bijective"] = v.bijective;
      if (v.exponent) c.counts["exponent"] = *v.exponent;
      for (const auto& r : v.rejections) c.note(r);
      c.expect(v.inner == want_inner, v.inner ? "accepted" : "rejected");
      if (a == 0) c.expect(v.exponent == 1, "W0 is not inner through c_1");
      if (a == 1) c.expect(v.exponent == 3, "W1 is not inner through c_3");
      if (a == 2) {
        c.expect(v.image_on_x[2] == std::vector<Index>{kIdentity, G.pow(kX, 2)},
                 "image of c_2 on <x> is not {1, x^2}");
        c.expect(v.at_generators[1].first == xy_c3sq && v.at_generators[1].second == xy,
                 "c_1 at (x,y) gives " + name(v.at_generators[1].first) + " vs " +
                     name(v.at_generators[1].second));
      }
    }));
  }

  rep.add(timed_check("autcat.naturality", "c(psi(a)) = psi(c(a)) for sampled endomorphisms psi",
                      [&](Check& c) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> d(0, kOrder - 1);
    std::size_t evaluations = 0;
    for (std::size_t k = 0; k < naturality_samples; ++k) {
      const auto u = static_cast<Index>(d(rng)), v = static_cast<Index>(d(rng));
      std::vector<Index> psi(kOrder);
      for (int g = 0; g < kOrder; ++g) psi[g] = endomorphism(u, v, static_cast<Index>(g), G);
      for (int j = 0; j < 64; ++j) {
        const auto g = static_cast<Index>(d(rng)), h = static_cast<Index>(d(rng));
        c.expect(psi[G.mul(g, h)] == G.mul(psi[g], psi[h]),
                 "psi(x)=" + name(u) + " psi(y)=" + name(v) + " is not a homomorphism");
      }
      for (int i = 0; i < 4; ++i)
        for (int g = 0; g < kOrder; ++g) {
          ++evaluations;
          const auto gi = static_cast<Index>(g);
          c.expect(G.pow(psi[gi], i) == psi[G.pow(gi, i)],
                   "c_" + std::to_string(i) + " at " + name(gi) + ", psi(x)=" + name(u));
        }
    }
    c.counts["endomorphisms"] = naturality_samples;
    c.counts["evaluations"] = evaluations;
  }));

  rep.add(timed_check("autcat.normality", "Phi_a Phi_1 Phi_a^-1 is inner for every a", [&](Check& c) {
    if (!have) return c.fail("automorphisms unavailable");
    for (int a = 0; a < 4; ++a) {
      int a_inv = -1;
      for (int b = 0; b < 4; ++b)
        if (out.table[a][b] == 0) a_inv = b;
      if (a_inv < 0) {
        c.fail("Phi_" + std::to_string(a) + " has no inverse");
        continue;
      }
      int conj = out.table[a][out.table[1][a_inv]];
      c.counts["conjugate_" + std::to_string(a)] = conj;
      c.expect(conj == 0 || conj == 1, "conjugate of Phi_1 by Phi_" + std::to_string(a) + " is Phi_" +
                                            std::to_string(conj));
    }
    c.counts["Phi_3_Phi_1"] = out.table[3][1];
    c.expect(out.table[3][1] == 2, "Phi_3 Phi_1 != Phi_2");
  }));

  rep.add(timed_check("autcat.quotient", "order of the quotient by inner automorphisms",
                      [&](Check& c) {
    if (!have) return c.fail("automorphisms unavailable");
    std::vector<int> inner;
    for (int a = 0; a < 4; ++a)
      if (out.inner[a]) inner.push_back(a);
    out.order_inner = inner.size();
    const bool closed = std::all_of(inner.begin(), inner.end(), [&](int a) {
      return std::all_of(inner.begin(), inner.end(), [&](int b) {
        return std::find(inner.begin(), inner.end(), out.table[a][b]) != inner.end();
      });
    });
    c.expect(closed, "inner automorphisms are not closed under composition");
    c.expect(out.order_inner > 0 && out.order_s % out.order_inner == 0,
             std::to_string(out.order_inner) + " does not divide " + std::to_string(out.order_s));
    out.order_quotient = out.order_inner ? out.order_s / out.order_inner : 0;
    c.counts["order_S"] = out.order_s;
    c.counts["inner"] = inner;
    c.counts["order_inner"] = out.order_inner;
    c.counts["order_quotient"] = out.order_quotient;
    c.counts["scope"] = scope;
    c.expect(inner == std::vector<int>{0, 1}, "inner set " + nlohmann::json(inner).dump());
    c.expect(out.order_quotient == 2, "quotient order " + std::to_string(out.order_quotient));
  }));
  return out;
}

}  // namespace sanovcat::autcat
