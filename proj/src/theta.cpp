#include "sanovcat/theta.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <stdexcept>

#include "sanovcat/parallel.hpp"

namespace sanovcat::theta {

namespace {

constexpr std::array<int, 7> kModulus{4, 4, 4, 2, 2, 2, 2};
constexpr std::array<int, 7> kStride{1, 4, 16, 64, 128, 256, 512};
constexpr char kMagic[8] = {'T', 'H', 'E', 'T', 'A', '4', 'G', '\0'};

int mod(std::int64_t v, int m) {
  auto r = static_cast<int>(v % m);
  return r < 0 ? r + m : r;
}

}  // namespace

std::array<int, 7> coordinates(Index g) {
  std::array<int, 7> a{};
  for (std::size_t i = 0; i < 7; ++i) a[i] = (g / kStride[i]) % kModulus[i];
  return a;
}

Index from_coordinates(const std::array<int, 7>& a) {
  int idx = 0;
  for (std::size_t i = 0; i < 7; ++i) idx += mod(a[i], kModulus[i]) * kStride[i];
  return static_cast<Index>(idx);
}

Index reduce(const n4::Element& a) {
  return from_coordinates({mod(a[1], 4), mod(a[2], 4), mod(a[3] + 2 * a[8], 4), mod(a[4], 2),
                           mod(a[5], 2), mod(a[6] + a[8], 2), mod(a[7] + a[8], 2)});
}

n4::Element lift(Index g) {
  auto a = coordinates(g);
  n4::Element e;
  for (int i = 0; i < 7; ++i) e[i + 1] = a[static_cast<std::size_t>(i)];
  return e;
}

std::string name(Index g) { return n4::to_string(lift(g)); }

Group::Group(const n4::Collector& c)
    : mul_(static_cast<std::size_t>(kOrder) * kOrder),
      inv_(kOrder),
      comm_(static_cast<std::size_t>(kOrder) * kOrder) {
  std::vector<n4::Element> lifts(kOrder);
  for (int g = 0; g < kOrder; ++g) lifts[g] = lift(static_cast<Index>(g));
  parallel_for(kOrder, [&](std::size_t b, std::size_t e) {
    for (std::size_t g = b; g < e; ++g)
      for (std::size_t h = 0; h < kOrder; ++h) mul_[g * kOrder + h] = reduce(c.mul(lifts[g], lifts[h]));
  });
  for (int g = 0; g < kOrder; ++g) {
    inv_[g] = reduce(c.inv(lifts[g]));
    if (mul(static_cast<Index>(g), inv_[g]) != kIdentity)
      throw std::logic_error("inverse table inconsistent with the product table");
  }
  parallel_for(kOrder, [&](std::size_t b, std::size_t e) {
    for (std::size_t g = b; g < e; ++g)
      for (std::size_t h = 0; h < kOrder; ++h) {
        auto gi = static_cast<Index>(g);
        auto hi = static_cast<Index>(h);
        comm_[g * kOrder + h] = mul(mul(inv_[gi], inv_[hi]), mul(gi, hi));
      }
  });
}

Index Group::pow(Index g, std::int64_t k) const { return group_power(*this, g, k); }

int Group::order(Index g) const {
  int n = 1;
  for (Index p = g; p != kIdentity; p = mul(p, g)) ++n;
  return n;
}

const Group& group() {
  static const Group g;
  return g;
}

std::map<std::string, Index> standard_binding() {
  std::map<std::string, Index> b;
  for (const auto& [k, v] : n4::standard_binding()) b[k] = reduce(v);
  return b;
}

Index eval(const GroupExpr& e, const std::map<std::string, Index>& binding, const Group& g) {
  return evaluate(e, binding, g);
}

Index eval(std::string_view text) {
  static const auto binding = standard_binding();
  return eval(parse_expr(text), binding);
}

std::vector<Index> center(const Group& g) {
  std::vector<Index> z;
  for (int a = 0; a < kOrder; ++a) {
    bool central = true;
    for (int b = 0; b < kOrder && central; ++b)
      central = g.mul(static_cast<Index>(a), static_cast<Index>(b)) ==
                g.mul(static_cast<Index>(b), static_cast<Index>(a));
    if (central) z.push_back(static_cast<Index>(a));
  }
  return z;
}

void export_table(std::ostream& os, const Group& g, TableFormat format) {
  const auto& t = g.table();
  if (format == TableFormat::raw) {
    os.write(kMagic, sizeof kMagic);
    std::vector<char> buf(t.size() * 2);
    for (std::size_t k = 0; k < t.size(); ++k) {
      buf[2 * k] = static_cast<char>(t[k] & 0xff);
      buf[2 * k + 1] = static_cast<char>(t[k] >> 8);
    }
    os.write(buf.data(), static_cast<std::streamsize>(buf.size()));
    return;
  }
  for (int a = 0; a < kOrder; ++a) {
    for (int b = 0; b < kOrder; ++b) {
      if (b) os << ',';
      os << t[static_cast<std::size_t>(a) * kOrder + b];
    }
    os << '\n';
  }
}

std::vector<Index> import_raw_table(std::istream& is) {
  char magic[8];
  if (!is.read(magic, 8) || !std::equal(magic, magic + 8, kMagic))
    throw std::runtime_error("not a raw THETA4G table");
  std::vector<char> buf(static_cast<std::size_t>(kOrder) * kOrder * 2);
  if (!is.read(buf.data(), static_cast<std::streamsize>(buf.size())))
    throw std::runtime_error("truncated THETA4G table");
  std::vector<Index> t(buf.size() / 2);
  for (std::size_t k = 0; k < t.size(); ++k)
    t[k] = static_cast<Index>(static_cast<unsigned char>(buf[2 * k]) |
                              (static_cast<unsigned char>(buf[2 * k + 1]) << 8));
  return t;
}

}  // namespace sanovcat::theta
