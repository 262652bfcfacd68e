#pragma once

// G = N4(x,y)/R, the 1024-element relatively free group on x, y of the
// variety of metabelian groups of exponent 4 and class at most 4. R is the
// normal closure of x^4, y^4, C4^2, ..., C8^2 and C3^2 C6 C7 C8.
//
// Elements carry the normal form x^a1 y^a2 C3^a3 C4^a4 C5^a5 C6^a6 C7^a7 with
// a1..a3 mod 4 and a4..a7 mod 2, packed as
//   a1 + 4 a2 + 16 a3 + 64 a4 + 128 a5 + 256 a6 + 512 a7.

#include <algorithm>
#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "sanovcat/expr.hpp"
#include "sanovcat/nilpotent.hpp"
#include "sanovcat/report.hpp"

namespace sanovcat::theta {

inline constexpr int kOrder = 1024;
using Index = std::uint16_t;

inline constexpr Index kIdentity = 0;
inline constexpr Index kX = 1;
inline constexpr Index kY = 4;
inline constexpr Index kC3 = 16;
inline constexpr Index kC4 = 64;
inline constexpr Index kC5 = 128;
inline constexpr Index kC6 = 256;
inline constexpr Index kC7 = 512;
/// Image of C8, which R identifies with C3^2 C6 C7.
inline constexpr Index kC8 = 32 + 256 + 512;

/// (a1, ..., a7) of an index.
std::array<int, 7> coordinates(Index g);
Index from_coordinates(const std::array<int, 7>& a);

/// Quotient map N4(x,y) -> G.
Index reduce(const n4::Element& a);
/// Canonical representative: coordinates in [0,4)^3 x [0,2)^4 and a8 = 0.
n4::Element lift(Index g);

/// "x*y*C3^2", "1" for the identity.
std::string name(Index g);

class Group {
 public:
  using value_type = Index;

  /// Multiplication table from reduce(n4_mul(lift(g), lift(h))); inverse and
  /// commutator tables derived from it.
  explicit Group(const n4::Collector& c = n4::default_collector());

  Index identity() const { return kIdentity; }
  Index mul(Index g, Index h) const { return mul_[g * kOrder + h]; }
  Index inv(Index g) const { return inv_[g]; }
  Index comm(Index g, Index h) const { return comm_[g * kOrder + h]; }
  Index pow(Index g, std::int64_t k) const;
  int order(Index g) const;

  /// Row-major kOrder x kOrder product table.
  const std::vector<Index>& table() const { return mul_; }

 private:
  std::vector<Index> mul_;
  std::vector<Index> inv_;
  std::vector<Index> comm_;
};

/// Shared instance over the default collector.
const Group& group();

/// x, y and C1..C8 bound to their images.
std::map<std::string, Index> standard_binding();
Index eval(const GroupExpr& e, const std::map<std::string, Index>& binding,
           const Group& g = group());
Index eval(std::string_view text);

/// Subgroup generated by gens, sorted. Ops needs identity() and mul().
template <class Ops>
std::vector<Index> generated_subgroup(const Ops& g, const std::vector<Index>& gens) {
  std::vector<char> seen(kOrder, 0);
  std::vector<Index> out{g.identity()};
  seen[g.identity()] = 1;
  for (std::size_t k = 0; k < out.size(); ++k)
    for (Index s : gens) {
      Index p = g.mul(out[k], s);
      if (!seen[p]) {
        seen[p] = 1;
        out.push_back(p);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

/// The subgroup generated by (a,b) for a in A, b in B. Ops also needs comm().
template <class Ops>
std::vector<Index> commutator_subgroup(const Ops& g, const std::vector<Index>& a,
                                       const std::vector<Index>& b) {
  std::vector<char> seen(kOrder, 0);
  std::vector<Index> gens;
  for (Index u : a)
    for (Index v : b) {
      Index c = g.comm(u, v);
      if (!seen[c]) {
        seen[c] = 1;
        gens.push_back(c);
      }
    }
  return generated_subgroup(g, gens);
}

/// gamma_1, ..., gamma_5.
using SubgroupChain = std::vector<std::vector<Index>>;
template <class Ops>
SubgroupChain lower_central_series(const Ops& g) {
  std::vector<Index> all(kOrder);
  for (int k = 0; k < kOrder; ++k) all[k] = static_cast<Index>(k);
  SubgroupChain chain{all};
  for (int i = 1; i < 5; ++i) chain.push_back(commutator_subgroup(g, chain.back(), all));
  return chain;
}

std::vector<Index> center(const Group& g);

enum class TableFormat { raw, csv };
/// raw: 8-byte magic "THETA4G\0" then kOrder^2 little-endian uint16 entries,
/// row-major. csv: kOrder lines of kOrder comma-separated indices.
void export_table(std::ostream& os, const Group& g, TableFormat format);
/// Reads the raw format back; throws std::runtime_error on a bad header.
std::vector<Index> import_raw_table(std::istream& is);

/// Homomorphism checks for reduce: naive-collector products of all canonical
/// lift pairs, sampled box pairs, and the generators of R mapping to 1.
Report well_definedness_check(std::size_t samples, std::uint64_t seed,
                              const Group& g = group());
/// Order, exponent, metabelian, series, center and associativity checks.
Report verify_theta_membership(const Group& g = group());
/// The gamma-subgroup lemmas and the squared-commutator identities. With
/// sample == 0 the triple identities run over all kOrder^3 triples.
Report verify_lemma_suite(std::size_t sample, std::uint64_t seed, const Group& g = group());
/// Each generator of R beyond x^4, y^4 as an explicit product of fourth powers
/// in N4(x,y), checked by collection.
Report verify_relations_are_consequences(const n4::Collector& c = n4::default_collector());

}  // namespace sanovcat::theta
