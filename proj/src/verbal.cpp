#include "sanovcat/verbal.hpp"

#include <algorithm>
#include <stdexcept>

#include "sanovcat/parallel.hpp"
#include "triples.hpp"

namespace sanovcat::verbal {

using theta::kIdentity;
using theta::kOrder;
using theta::kX;
using theta::kY;
using theta::name;

namespace {

Index small_pow(const theta::Group& G, Index g, int k) {
  Index r = kIdentity;
  for (int i = 0; i < k; ++i) r = G.mul(r, g);
  return r;
}

std::string label(const WordSystem& w) {
  if (auto a = standard_alpha(w)) return "W" + std::to_string(*a);
  return name(w.product);
}

}  // namespace

WordSystem standard_system(int alpha) {
  alpha = ((alpha % 4) + 4) % 4;
  return {3, static_cast<Index>(kX + kY + theta::kC3 * alpha)};
}

std::optional<int> standard_alpha(const WordSystem& w) {
  for (int a = 0; a < 4; ++a)
    if (w == standard_system(a)) return a;
  return std::nullopt;
}

std::string to_string(const WordSystem& w) {
  std::string inv = w.inverse_exponent == 0 ? "1"
                    : w.inverse_exponent == 1 ? "x"
                                              : "x^" + std::to_string(w.inverse_exponent);
  return "{1, " + inv + ", " + name(w.product) + "}";
}

Index evaluate_word(Index w, Index g, Index h, const theta::Group& G) {
  const auto a = theta::coordinates(w);
  const Index c3 = G.comm(h, g);
  const Index c4 = G.comm(c3, h);
  const Index c5 = G.comm(c3, g);
  const Index c6 = G.comm(c5, g);
  const Index c7 = G.comm(c4, h);
  const Index base[7] = {g, h, c3, c4, c5, c6, c7};
  Index r = kIdentity;
  for (int i = 0; i < 7; ++i) r = G.mul(r, small_pow(G, base[i], a[static_cast<std::size_t>(i)]));
  return r;
}

VerbalGroupTable::VerbalGroupTable(const WordSystem& w, const theta::Group& G)
    : system_(w), table_(static_cast<std::size_t>(kOrder) * kOrder), inv_(kOrder, kIdentity) {
  parallel_for(kOrder, [&](std::size_t b, std::size_t e) {
    for (std::size_t g = b; g < e; ++g)
      for (std::size_t h = 0; h < kOrder; ++h)
        table_[g * kOrder + h] =
            evaluate_word(w.product, static_cast<Index>(g), static_cast<Index>(h), G);
  });
  for (int e = 0; e < kOrder && !unit_; ++e) {
    bool ok = true;
    for (int g = 0; g < kOrder && ok; ++g)
      ok = mul(static_cast<Index>(e), static_cast<Index>(g)) == g &&
           mul(static_cast<Index>(g), static_cast<Index>(e)) == g;
    if (ok) unit_ = static_cast<Index>(e);
  }
  if (!unit_) return;
  has_inverses_ = true;
  for (int g = 0; g < kOrder && has_inverses_; ++g) {
    bool found = false;
    for (int h = 0; h < kOrder && !found; ++h)
      if (mul(static_cast<Index>(g), static_cast<Index>(h)) == *unit_ &&
          mul(static_cast<Index>(h), static_cast<Index>(g)) == *unit_) {
        inv_[g] = static_cast<Index>(h);
        found = true;
      }
    has_inverses_ = found;
  }
}

Index VerbalGroupTable::comm(Index g, Index h) const {
  return mul(mul(mul(inv(g), inv(h)), g), h);
}

Index VerbalGroupTable::pow(Index g, std::int64_t k) const { return group_power(*this, g, k); }

bool GroupMap::bijective() const {
  std::vector<char> hit(kOrder, 0);
  for (Index v : image) {
    if (hit[v]) return false;
    hit[v] = 1;
  }
  return image.size() == static_cast<std::size_t>(kOrder);
}

GroupMap GroupMap::identity(std::string label) {
  GroupMap m{std::move(label), std::vector<Index>(kOrder)};
  for (int k = 0; k < kOrder; ++k) m.image[k] = static_cast<Index>(k);
  return m;
}

GroupMap build_s_map(const VerbalGroupTable& t) {
  Index s[7];
  s[0] = kX;
  s[1] = kY;
  s[2] = t.comm(kY, kX);
  s[3] = t.comm(s[2], kY);
  s[4] = t.comm(s[2], kX);
  s[5] = t.comm(s[4], kX);
  s[6] = t.comm(s[3], kY);
  GroupMap m{"s_" + label(t.system()), std::vector<Index>(kOrder)};
  for (int g = 0; g < kOrder; ++g) {
    const auto a = theta::coordinates(static_cast<Index>(g));
    Index r = t.identity();
    for (int i = 0; i < 7; ++i) r = t.mul(r, t.pow(s[i], a[static_cast<std::size_t>(i)]));
    m.image[g] = r;
  }
  return m;
}

GroupMap build_s_iso(const VerbalGroupTable& t, const theta::Group& G) {
  GroupMap s = build_s_map(t);
  if (!s.bijective()) throw std::runtime_error(s.label + " is not a bijection");
  auto bad = parallel_chunks<std::optional<std::pair<Index, Index>>>(
      kOrder, [&](std::size_t lo, std::size_t hi) -> std::optional<std::pair<Index, Index>> {
        for (std::size_t g = lo; g < hi; ++g)
          for (int h = 0; h < kOrder; ++h) {
            auto gi = static_cast<Index>(g);
            auto hi2 = static_cast<Index>(h);
            if (s(G.mul(gi, hi2)) != t.mul(s(gi), s(hi2))) return std::pair{gi, hi2};
          }
        return std::nullopt;
      });
  for (const auto& b : bad)
    if (b)
      throw std::runtime_error(s.label + "(gh) != " + s.label + "(g) o " + s.label + "(h) at g=" +
                               name(b->first) + " h=" + name(b->second));
  return s;
}

std::optional<GroupMap> forced_s_map(const VerbalGroupTable& t, const theta::Group& G) {
  std::vector<int> value(kOrder, -1);
  std::vector<Index> queue{kIdentity};
  value[kIdentity] = t.identity();
  for (std::size_t k = 0; k < queue.size(); ++k) {
    Index g = queue[k];
    for (Index gen : {kX, kY}) {
      Index n = G.mul(g, gen);
      int v = t.mul(static_cast<Index>(value[g]), gen);
      if (value[n] < 0) {
        value[n] = v;
        queue.push_back(n);
      } else if (value[n] != v) {
        return std::nullopt;
      }
    }
  }
  if (queue.size() != static_cast<std::size_t>(kOrder)) return std::nullopt;
  GroupMap m{"forced_" + label(t.system()), std::vector<Index>(kOrder)};
  for (int g = 0; g < kOrder; ++g) m.image[g] = static_cast<Index>(value[g]);
  return m;
}

namespace {

struct GeneratorEquations {
  Index xxy_left, xxy_right, xyy_left, xyy_right;
  bool ok_2x() const { return xxy_left == xxy_right; }
  bool ok_2y() const { return xyy_left == xyy_right; }
};

GeneratorEquations generator_equations(Index w, const theta::Group& G) {
  const Index xy = evaluate_word(w, kX, kY, G);
  const Index xx = evaluate_word(w, kX, kX, G);
  const Index yy = evaluate_word(w, kY, kY, G);
  return {evaluate_word(w, kX, xy, G), evaluate_word(w, xx, kY, G), evaluate_word(w, kX, yy, G),
          evaluate_word(w, xy, kY, G)};
}

}  // namespace

ApplicabilityCertificate full_applicability(const WordSystem& w, std::size_t assoc_sample,
                                            std::uint64_t seed, const theta::Group& G) {
  ApplicabilityCertificate cert;
  cert.system = w;
  const VerbalGroupTable t(w, G);

  cert.unit_law = t.has_unit() && t.identity() == kIdentity;
  if (!cert.unit_law) {
    for (int g = 0; g < kOrder && cert.witness.empty(); ++g) {
      auto gi = static_cast<Index>(g);
      if (t.mul(gi, kIdentity) != gi)
        cert.witness = name(gi) + " o 1 = " + name(t.mul(gi, kIdentity));
      else if (t.mul(kIdentity, gi) != gi)
        cert.witness = "1 o " + name(gi) + " = " + name(t.mul(kIdentity, gi));
    }
    return cert;
  }

  const auto eq = generator_equations(w.product, G);
  cert.generator_equations = eq.ok_2x() && eq.ok_2y();
  if (!eq.ok_2x()) {
    cert.witness = "x o (x o y) = " + name(eq.xxy_left) + " but (x o x) o y = " + name(eq.xxy_right);
    return cert;
  }
  if (!eq.ok_2y()) {
    cert.witness = "x o (y o y) = " + name(eq.xyy_left) + " but (x o y) o y = " + name(eq.xyy_right);
    return cert;
  }

  if (t.has_inverses())
    for (int i = 0; i < 4; ++i) {
      bool ok = true;
      for (int g = 0; g < kOrder && ok; ++g)
        ok = t.inv(static_cast<Index>(g)) == G.pow(static_cast<Index>(g), i);
      if (ok) cert.inverse_exponents.push_back(i);
    }
  cert.inverse_law = t.has_inverses() &&
                     std::find(cert.inverse_exponents.begin(), cert.inverse_exponents.end(),
                               ((w.inverse_exponent % 4) + 4) % 4) != cert.inverse_exponents.end();
  if (!cert.inverse_law) {
    cert.witness = t.has_inverses() ? "the o-inverse is not g^" + std::to_string(w.inverse_exponent)
                                    : "some element has no two-sided o-inverse";
    return cert;
  }

  Check assoc;
  const auto& tab = t.table();
  theta::scan_triples(assoc, assoc_sample, seed, "o-associativity", [&](Index a, Index b, Index c) {
    return tab[tab[a * kOrder + b] * kOrder + c] == tab[a * kOrder + tab[b * kOrder + c]];
  });
  cert.associative = assoc.passed;
  if (!cert.associative) {
    cert.witness = assoc.witnesses.front();
    return cert;
  }

  cert.exponent4 = true;
  for (int g = 0; g < kOrder && cert.exponent4; ++g)
    if (t.pow(static_cast<Index>(g), 4) != kIdentity) {
      cert.exponent4 = false;
      cert.witness = name(static_cast<Index>(g)) + " has o-fourth power " +
                     name(t.pow(static_cast<Index>(g), 4));
    }
  if (!cert.exponent4) return cert;

  const auto chain = theta::lower_central_series(t);
  for (const auto& c : chain) cert.series_sizes.push_back(c.size());
  cert.metabelian = theta::commutator_subgroup(t, chain[1], chain[1]).size() == 1;
  if (!cert.metabelian) {
    cert.witness = "o-commutator subgroup is not abelian";
    return cert;
  }
  cert.class4 = chain[4].size() == 1;
  if (!cert.class4) {
    cert.witness = "fifth o-lower central term has " + std::to_string(chain[4].size()) + " elements";
    return cert;
  }

  cert.generated = theta::generated_subgroup(t, {kX, kY}).size() == static_cast<std::size_t>(kOrder);
  if (!cert.generated) {
    cert.witness = "x, y do not o-generate G";
    return cert;
  }

  try {
    GroupMap s = build_s_iso(t, G);
    auto forced = forced_s_map(t, G);
    cert.s_iso = forced && forced->image == s.image;
    if (!cert.s_iso) cert.witness = "s is not the map forced by s(gx) = s(g) o x, s(gy) = s(g) o y";
    cert.s = std::move(s);
  } catch (const std::exception& e) {
    cert.witness = e.what();
  }
  return cert;
}

std::vector<Index> stage1_unit_filter(const theta::Group& G) {
  auto parts = parallel_chunks<std::vector<Index>>(kOrder, [&](std::size_t lo, std::size_t hi) {
    std::vector<Index> keep;
    for (std::size_t w = lo; w < hi; ++w) {
      auto wi = static_cast<Index>(w);
      bool ok = true;
      for (int g = 0; g < kOrder && ok; ++g) {
        auto gi = static_cast<Index>(g);
        ok = evaluate_word(wi, gi, kIdentity, G) == gi && evaluate_word(wi, kIdentity, gi, G) == gi;
      }
      if (ok) keep.push_back(wi);
    }
    return keep;
  });
  std::vector<Index> out;
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

SearchResult stage2_congruence_filter(const std::vector<Index>& survivors, const theta::Group& G) {
  SearchResult r;
  r.stage1 = survivors;
  for (Index w : survivors) {
    const auto eq = generator_equations(w, G);
    r.pass_2x += eq.ok_2x();
    r.pass_2y += eq.ok_2y();
    r.only_2x += eq.ok_2x() && !eq.ok_2y();
    r.only_2y += eq.ok_2y() && !eq.ok_2x();
    if (eq.ok_2x() && eq.ok_2y()) r.stage2.push_back(w);
  }
  return r;
}

namespace {

nlohmann::json names(const std::vector<Index>& v) {
  auto a = nlohmann::json::array();
  for (Index g : v) a.push_back(name(g));
  return a;
}

void fill_certificate(Check& c, const ApplicabilityCertificate& cert) {
  c.counts["system"] = to_string(cert.system);
  c.counts["unit_law"] = cert.unit_law;
  c.counts["generator_equations"] = cert.generator_equations;
  c.counts["inverse_law"] = cert.inverse_law;
  c.counts["inverse_exponents"] = cert.inverse_exponents;
  c.counts["associative"] = cert.associative;
  c.counts["exponent4"] = cert.exponent4;
  c.counts["metabelian"] = cert.metabelian;
  c.counts["class4"] = cert.class4;
  c.counts["generated"] = cert.generated;
  c.counts["s_iso"] = cert.s_iso;
  c.counts["series_sizes"] = cert.series_sizes;
  c.counts["scope"] = "rank 2: laws checked on F(x,y) only";
  if (!cert.applicable()) c.fail(label(cert.system) + " rejected: " + cert.witness);
}

std::vector<Index> standard_products() {
  std::vector<Index> v;
  for (int a = 0; a < 4; ++a) v.push_back(standard_system(a).product);
  return v;
}

}  // namespace

Report applicability_report(const WordSystem& w, std::size_t assoc_sample, std::uint64_t seed,
                            const theta::Group& G) {
  Report rep;
  rep.add(timed_check("verbal.applicable." + label(w),
                      "(G, o) is a group of the variety generated by x, y, with s fixing x and y",
                      [&](Check& c) {
    auto cert = full_applicability(w, assoc_sample, seed, G);
    c.counts["associativity_mode"] = assoc_sample == 0 ? "exhaustive" : "sampled";
    fill_certificate(c, cert);
  }));
  return rep;
}

Report search_words(Stage stage, std::size_t assoc_sample, std::uint64_t seed,
                    const theta::Group& G) {
  Report rep;
  std::vector<Index> s1;
  rep.add(timed_check("verbal.stage1", "w(g,1) = g and w(1,h) = h over all 1024 candidates",
                      [&](Check& c) {
    s1 = stage1_unit_filter(G);
    c.counts["candidates"] = kOrder;
    c.counts["survivors"] = s1.size();
    c.expect(s1.size() == 64, std::to_string(s1.size()) + " survivors");
    for (Index w : s1) {
      auto a = theta::coordinates(w);
      c.expect(a[0] == 1 && a[1] == 1, name(w) + " survives without the form x y ...");
    }
    const Index x2y = 2 * kX + kY;
    c.expect(std::find(s1.begin(), s1.end(), x2y) == s1.end(), "x^2*y survives");
  }));
  if (stage == Stage::unit) return rep;

  SearchResult s2;
  rep.add(timed_check("verbal.stage2", "x o (x o y) = (x o x) o y and x o (y o y) = (x o y) o y",
                      [&](Check& c) {
    s2 = stage2_congruence_filter(s1, G);
    c.counts["candidates"] = s1.size();
    c.counts["survivors"] = s2.stage2.size();
    c.counts["survivor_words"] = names(s2.stage2);
    c.counts["pass_xxy"] = s2.pass_2x;
    c.counts["pass_xyy"] = s2.pass_2y;
    c.counts["only_xxy"] = s2.only_2x;
    c.counts["only_xyy"] = s2.only_2y;
    c.counts["single_equation_suffices"] = s2.pass_2x == s2.stage2.size() ||
                                           s2.pass_2y == s2.stage2.size();
    c.expect(s2.stage2 == standard_products(),
             "survivors are " + names(s2.stage2).dump() + ", not x*y*C3^a");
    for (Index w : {static_cast<Index>(kX + kY + theta::kC4), static_cast<Index>(kX + kY + theta::kC5)})
      c.expect(std::find(s2.stage2.begin(), s2.stage2.end(), w) == s2.stage2.end(),
               name(w) + " survives");
  }));
  if (stage == Stage::generators) return rep;

  std::vector<ApplicabilityCertificate> certs;
  for (Index w : s2.stage2) {
    WordSystem sys{3, w};
    rep.add(timed_check("verbal.applicable." + label(sys),
                        "(G, o) is a group of the variety generated by x, y, with s fixing x and y",
                        [&](Check& c) {
      auto cert = full_applicability(sys, assoc_sample, seed, G);
      c.counts["associativity_mode"] = assoc_sample == 0 ? "exhaustive" : "sampled";
      fill_certificate(c, cert);
      certs.push_back(std::move(cert));
    }));
  }

  rep.add(timed_check("verbal.inverse_forced", "the o-inverse of every surviving system is g^-1",
                      [&](Check& c) {
    c.expect(certs.size() == 4, std::to_string(certs.size()) + " certificates");
    for (const auto& cert : certs) {
      c.counts[label(cert.system)] = cert.inverse_exponents;
      c.expect(cert.inverse_exponents == std::vector<int>{3},
               label(cert.system) + ": inverse exponents " +
                   nlohmann::json(cert.inverse_exponents).dump());
    }
  }));

  rep.add(timed_check("verbal.s_values", "s(xy) under W1 and W2", [&](Check& c) {
    const Index xy = G.mul(kX, kY), yx = G.mul(kY, kX);
    const Index xyc2 = G.mul(xy, G.pow(theta::kC3, 2));
    const std::pair<int, Index> want[] = {{0, xy}, {1, yx}, {2, xyc2}};
    for (auto [alpha, value] : want) {
      const ApplicabilityCertificate* cert = nullptr;
      for (const auto& k : certs)
        if (standard_alpha(k.system) == alpha) cert = &k;
      if (!cert || !cert->s) {
        c.fail("no s-map for W" + std::to_string(alpha));
        continue;
      }
      Index got = (*cert->s)(xy);
      c.counts["W" + std::to_string(alpha)] = name(got);
      c.expect(got == value, "s_W" + std::to_string(alpha) + "(xy) = " + name(got));
      if (alpha == 0) c.expect(cert->s->image == GroupMap::identity().image, "s_W0 is not the identity");
    }
  }));

  rep.add(timed_check("verbal.rejection_witness", "x y C3 C4 passes the unit filter and is rejected",
                      [&](Check& c) {
    WordSystem bad{3, static_cast<Index>(kX + kY + theta::kC3 + theta::kC4)};
    c.expect(std::find(s1.begin(), s1.end(), bad.product) != s1.end(), "x*y*C3*C4 fails stage 1");
    auto cert = full_applicability(bad, assoc_sample, seed, G);
    c.counts["witness"] = cert.witness;
    c.expect(!cert.applicable(), "x*y*C3*C4 certified applicable");
    c.expect(cert.unit_law && !cert.generator_equations,
             "rejected for the wrong reason: " + cert.witness);
    c.expect(cert.witness.rfind("x o (x o y)", 0) == 0, "witness is not the x o (x o y) equation");
  }));
  return rep;
}

Report verify_operation_identities(std::size_t sample, std::uint64_t seed, const theta::Group& G) {
  Report rep;
  const VerbalGroupTable t1(standard_system(1), G);
  const VerbalGroupTable t2(standard_system(2), G);

  auto all_pairs = [&](Check& c, auto pred, const std::string& what) {
    auto parts = parallel_chunks<std::vector<std::string>>(kOrder, [&](std::size_t lo, std::size_t hi) {
      std::vector<std::string> bad;
      for (std::size_t a = lo; a < hi; ++a)
        for (int b = 0; b < kOrder; ++b)
          if (!pred(static_cast<Index>(a), static_cast<Index>(b)) && bad.size() < Check::kMaxWitnesses)
            bad.push_back(what + " fails at a=" + name(static_cast<Index>(a)) +
                          " b=" + name(static_cast<Index>(b)));
      return bad;
    });
    for (auto& p : parts)
      for (auto& w : p) c.fail(std::move(w));
    c.counts["pairs"] = kOrder * kOrder;
  };

  rep.add(timed_check("ops.w1_commutator", "(a,b)_1 = (b^-1, a^-1) on all pairs", [&](Check& c) {
    all_pairs(c, [&](Index a, Index b) { return t1.comm(a, b) == G.comm(G.inv(b), G.inv(a)); },
              "(a,b)_1 = (b^-1,a^-1)");
  }));
  rep.add(timed_check("ops.w2_commutator", "(a,b)_2 = (a,b) on all pairs", [&](Check& c) {
    all_pairs(c, [&](Index a, Index b) { return t2.comm(a, b) == G.comm(a, b); }, "(a,b)_2 = (a,b)");
  }));
  rep.add(timed_check("ops.w2_gamma4", "a o_2 b = ab for b in gamma_4", [&](Check& c) {
    auto g4 = theta::lower_central_series(G)[3];
    for (int a = 0; a < kOrder; ++a)
      for (Index b : g4)
        if (t2.mul(static_cast<Index>(a), b) != G.mul(static_cast<Index>(a), b))
          c.fail("a=" + name(static_cast<Index>(a)) + " b=" + name(b));
    c.counts["pairs"] = kOrder * g4.size();
  }));

  rep.add(timed_check("ops.w2_products", "both bracketings of a o_2 b o_2 c in closed form",
                      [&](Check& c) {
    const std::size_t n = kOrder;
    // sq_t[b * n + c] = (c,b)^2, so the inner loop over c reads rows.
    std::vector<Index> sq_t(n * n);
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t cc = 0; cc < n; ++cc)
        sq_t[b * n + cc] = G.pow(G.comm(static_cast<Index>(cc), static_cast<Index>(b)), 2);
    const auto& m = G.table();
    const auto& o = t2.table();
    struct Part {
      std::uint64_t failures = 0;
      std::vector<std::string> witnesses;
    };
    auto parts = parallel_chunks<Part>(n, [&](std::size_t lo, std::size_t hi) {
      Part p;
      for (std::size_t a = lo; a < hi; ++a)
        for (std::size_t b = 0; b < n; ++b) {
          const Index* ab = &m[m[a * n + b] * n];
          const Index* oab = &o[o[a * n + b] * n];
          const Index* sb = &sq_t[b * n];
          const Index* sa = &sq_t[a * n];
          const Index sba = sq_t[a * n + b];
          for (std::size_t cc = 0; cc < n; ++cc) {
            const Index left = m[m[ab[cc] * n + sba] * n + m[sb[cc] * n + sa[cc]]];
            const Index right = m[m[ab[cc] * n + sb[cc]] * n + m[sba * n + sa[cc]]];
            const bool ok_l = oab[cc] == left;
            const bool ok_r = o[a * n + o[b * n + cc]] == right;
            if (ok_l && ok_r) continue;
            ++p.failures;
            if (p.witnesses.size() < Check::kMaxWitnesses)
              p.witnesses.push_back(std::string(ok_l ? "a o (b o c)" : "(a o b) o c") +
                                    " closed form fails at a=" + name(static_cast<Index>(a)) +
                                    " b=" + name(static_cast<Index>(b)) +
                                    " c=" + name(static_cast<Index>(cc)));
          }
        }
      return p;
    });
    std::uint64_t failures = 0;
    for (auto& p : parts) {
      failures += p.failures;
      for (auto& w : p.witnesses) c.fail(std::move(w));
    }
    c.counts["forms"] = {"(a o b) o c = abc (b,a)^2 (c,b)^2 (c,a)^2",
                         "a o (b o c) = abc (c,b)^2 (b,a)^2 (c,a)^2"};
    c.counts["triples"] = std::uint64_t{n} * n * n;
    c.counts["failures"] = failures;
  }));

  rep.add(timed_check("ops.many_variable", "metabelian and class-4 identities under o_1 and o_2, sampled",
                      [&](Check& c) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> d(0, kOrder - 1);
    auto draw = [&] { return static_cast<Index>(d(rng)); };
    auto left_normed = [](const auto& ops, const Index* v, int n) {
      Index r = v[0];
      for (int i = 1; i < n; ++i) r = ops.comm(r, v[i]);
      return r;
    };
    std::size_t failures = 0;
    for (std::size_t k = 0; k < sample; ++k) {
      Index v[5], vi[5];
      for (int i = 0; i < 5; ++i) {
        v[i] = draw();
        vi[i] = G.inv(v[i]);
      }
      // (...((a1,a2)_1,...),an)_1 = ((a1^-1,...),an^-1)^-1
      for (int n = 2; n <= 5; ++n)
        if (left_normed(t1, v, n) != G.inv(left_normed(G, vi, n))) {
          ++failures;
          c.fail("o_1 commutator of length " + std::to_string(n) + " at a1=" + name(v[0]));
        }
      const Index m1 = t1.comm(t1.comm(v[0], v[1]), t1.comm(v[2], v[3]));
      const Index m2 = t2.comm(t2.comm(v[0], v[1]), t2.comm(v[2], v[3]));
      if (m1 != kIdentity || m2 != kIdentity) {
        ++failures;
        c.fail("o-metabelian identity fails at a1=" + name(v[0]));
      }
      if (left_normed(t2, v, 5) != kIdentity) {
        ++failures;
        c.fail("o_2 commutator of length 5 nontrivial at a1=" + name(v[0]));
      }
    }
    c.counts["samples"] = sample;
    c.counts["failures"] = failures;
    c.counts["scope"] = "evaluated in F(x,y); identities in more than two variables are sampled";
  }));
  return rep;
}

}  // namespace sanovcat::verbal
