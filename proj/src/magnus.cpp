#include "sanovcat/magnus.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "sanovcat/parallel.hpp"

namespace sanovcat::magnus {

namespace {

struct Term {
  std::uint8_t i, j, out;
};

// All index pairs whose product survives truncation.
const std::vector<Term>& product_terms() {
  static const std::vector<Term> terms = [] {
    std::vector<Term> t;
    for (int li = 0; li <= kDegree; ++li)
      for (int lj = 0; li + lj <= kDegree; ++lj)
        for (int bi = 0; bi < (1 << li); ++bi)
          for (int bj = 0; bj < (1 << lj); ++bj)
            t.push_back({static_cast<std::uint8_t>(monomial_index(li, bi)),
                         static_cast<std::uint8_t>(monomial_index(lj, bj)),
                         static_cast<std::uint8_t>(monomial_index(li + lj, (bi << lj) | bj))});
    return t;
  }();
  return terms;
}

}  // namespace

int monomial_index(int length, int bits) { return (1 << length) - 1 + bits; }

int monomial_length(int index) {
  int l = 0;
  while (index >= (1 << (l + 1)) - 1) ++l;
  return l;
}

std::string monomial_name(int index) {
  int l = monomial_length(index);
  if (l == 0) return "1";
  int bits = index - ((1 << l) - 1);
  std::string s;
  for (int k = l - 1; k >= 0; --k) s += (bits >> k) & 1 ? 'Y' : 'X';
  return s;
}

Series Series::one() {
  Series s;
  s.c[0] = 1;
  return s;
}

Series Series::x() {
  Series s = one();
  s.c[monomial_index(1, 0)] = 1;
  return s;
}

Series Series::y() {
  Series s = one();
  s.c[monomial_index(1, 1)] = 1;
  return s;
}

std::string to_string(const Series& s) {
  std::string out;
  for (int i = 0; i < kMonomials; ++i) {
    auto v = s.c[i];
    if (v == 0) continue;
    if (!out.empty()) out += v < 0 ? " - " : " + ";
    else if (v < 0) out += "-";
    auto mag = v < 0 ? -v : v;
    if (i == 0)
      out += std::to_string(mag);
    else
      out += (mag == 1 ? "" : std::to_string(mag)) + monomial_name(i);
  }
  return out.empty() ? "0" : out;
}

Series series_mul(const Series& s, const Series& t) {
  Series r;
  for (const auto& term : product_terms()) r.c[term.out] += s.c[term.i] * t.c[term.j];
  return r;
}

Series series_inv(const Series& s) {
  if (s.c[0] != 1) throw std::invalid_argument("series_inv needs constant coefficient 1");
  Series u = s;
  u.c[0] = 0;
  // 1 - u + u^2 - u^3 + u^4
  Series r = Series::one();
  Series p = Series::one();
  for (int k = 1; k <= kDegree; ++k) {
    p = series_mul(p, u);
    for (int i = 0; i < kMonomials; ++i) r.c[i] += (k % 2 ? -1 : 1) * p.c[i];
  }
  return r;
}

Series series_pow(const Series& s, std::int64_t k) {
  struct Ops {
    using value_type = Series;
    Series identity() const { return Series::one(); }
    Series mul(const Series& a, const Series& b) const { return series_mul(a, b); }
    Series inv(const Series& a) const { return series_inv(a); }
  };
  return group_power(Ops{}, s, k);
}

Series series_comm(const Series& a, const Series& b) {
  return series_mul(series_mul(series_inv(a), series_inv(b)), series_mul(a, b));
}

const std::array<Series, n4::kLetters + 1>& basis_images() {
  static const auto images = [] {
    std::array<Series, n4::kLetters + 1> e{};
    e[0] = Series::one();
    e[1] = Series::x();
    e[2] = Series::y();
    e[3] = series_comm(e[2], e[1]);  // (y,x)
    e[4] = series_comm(e[3], e[2]);  // (y,x,y)
    e[5] = series_comm(e[3], e[1]);  // (y,x,x)
    e[6] = series_comm(e[5], e[1]);  // (y,x,x,x)
    e[7] = series_comm(e[4], e[2]);  // (y,x,y,y)
    e[8] = series_comm(e[4], e[1]);  // (y,x,y,x)
    return e;
  }();
  return images;
}

Series magnus_embed(const n4::Element& a) {
  const auto& e = basis_images();
  Series r = Series::one();
  for (int i = 1; i <= n4::kLetters; ++i)
    if (a[i] != 0) r = series_mul(r, series_pow(e[i], a[i]));
  return r;
}

Report oracle_check(const n4::Collector& col, std::size_t n, int box, std::uint64_t seed) {
  Report rep;
  auto draw = [box](std::mt19937_64& rng) {
    std::uniform_int_distribution<int> d(-box, box);
    n4::Element g;
    for (auto& v : g.a) v = d(rng);
    return g;
  };

  rep.add(timed_check("magnus.multiplicative", "collection product against series product",
                      [&](Check& c) {
    // Pairs are pre-drawn serially so the sample does not depend on threads.
    std::mt19937_64 rng(seed);
    std::vector<std::pair<n4::Element, n4::Element>> pairs(n);
    for (auto& p : pairs) p = {draw(rng), draw(rng)};
    auto parts = parallel_chunks<std::vector<std::string>>(n, [&](std::size_t b, std::size_t e) {
      std::vector<std::string> bad;
      for (std::size_t k = b; k < e && bad.size() < Check::kMaxWitnesses; ++k) {
        const auto& [u, v] = pairs[k];
        if (magnus_embed(col.mul(u, v)) != series_mul(magnus_embed(u), magnus_embed(v)))
          bad.push_back("u=" + n4::coords(u) + " v=" + n4::coords(v) + " uv=" +
                        n4::coords(col.mul(u, v)));
      }
      return bad;
    });
    for (auto& part : parts)
      for (auto& w : part) c.fail(std::move(w));
    c.counts["pairs"] = n;
    c.counts["box"] = box;
  }));

  rep.add(timed_check("magnus.inverse", "collection inverse against series inverse", [&](Check& c) {
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    std::size_t m = std::min<std::size_t>(n, 10000);
    for (std::size_t k = 0; k < m; ++k) {
      n4::Element u = draw(rng);
      if (magnus_embed(col.inv(u)) != series_inv(magnus_embed(u)))
        c.fail("u=" + n4::coords(u) + " inv=" + n4::coords(col.inv(u)));
    }
    c.expect(magnus_embed(col.identity()) == Series::one(), "identity does not embed to 1");
    c.counts["elements"] = m;
  }));
  return rep;
}

Check injectivity_check(int box) {
  return timed_check("magnus.injective", "distinct normal forms have distinct series", [&](Check& c) {
    const std::int64_t side = 2 * box + 1;
    std::int64_t total = 1;
    for (int i = 0; i < n4::kLetters; ++i) total *= side;
    auto decode = [&](std::int64_t idx) {
      n4::Element g;
      for (auto& v : g.a) {
        v = idx % side - box;
        idx /= side;
      }
      return g;
    };
    std::vector<Series> images(static_cast<std::size_t>(total));
    parallel_for(images.size(), [&](std::size_t b, std::size_t e) {
      for (std::size_t k = b; k < e; ++k) images[k] = magnus_embed(decode(static_cast<std::int64_t>(k)));
    });
    std::vector<std::uint32_t> order(images.size());
    for (std::uint32_t k = 0; k < order.size(); ++k) order[k] = k;
    std::sort(order.begin(), order.end(),
              [&](std::uint32_t a, std::uint32_t b) { return images[a].c < images[b].c; });
    std::size_t collisions = 0;
    for (std::size_t k = 1; k < order.size(); ++k)
      if (images[order[k]] == images[order[k - 1]]) {
        ++collisions;
        c.fail(n4::coords(decode(order[k - 1])) + " and " + n4::coords(decode(order[k])) +
               " share an image");
      }
    c.counts["elements"] = total;
    c.counts["collisions"] = collisions;
  });
}

}  // namespace sanovcat::magnus
