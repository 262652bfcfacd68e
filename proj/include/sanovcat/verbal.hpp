#pragma once

// Verbal operations on G. A word system is {1, x^i, w(x,y)}; the operation
// g o h = w(g,h) is evaluated in G through the normal form of w,
//
//   w(g,h) = g^a1 h^a2 c3^a3 c4^a4 c5^a5 c6^a6 c7^a7,
//   c3 = (h,g), c4 = (c3,h), c5 = (c3,g), c6 = (c5,g), c7 = (c4,h),
//
// which is the image of the normal form under x -> g, y -> h.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sanovcat/report.hpp"
#include "sanovcat/theta.hpp"

namespace sanovcat::verbal {

using theta::Index;

struct WordSystem {
  /// w_{-1}(x) = x^inverse_exponent.
  int inverse_exponent = 3;
  /// w.(x,y) as an element of G = F(x,y).
  Index product = theta::kX + theta::kY;

  friend bool operator==(const WordSystem&, const WordSystem&) = default;
};

/// W_alpha: w.(x,y) = x y C3^alpha, w_{-1}(x) = x^-1.
WordSystem standard_system(int alpha);
/// alpha if w is one of W_0..W_3, otherwise nullopt.
std::optional<int> standard_alpha(const WordSystem& w);
/// "{1, x^3, x*y*C3^2}".
std::string to_string(const WordSystem& w);

/// w(g,h) computed in G.
Index evaluate_word(Index w, Index g, Index h, const theta::Group& G = theta::group());

/// The 1024 x 1024 table of o_W together with the derived unit and inverse.
/// identity(), inv() and comm() are meaningful only when has_unit() and
/// has_inverses() hold; they make the table usable with the generic subgroup
/// closures and the expression evaluator.
class VerbalGroupTable {
 public:
  using value_type = Index;

  explicit VerbalGroupTable(const WordSystem& w, const theta::Group& G = theta::group());

  const WordSystem& system() const { return system_; }
  Index mul(Index g, Index h) const { return table_[g * theta::kOrder + h]; }
  const std::vector<Index>& table() const { return table_; }

  bool has_unit() const { return unit_.has_value(); }
  Index identity() const { return unit_.value_or(theta::kIdentity); }
  bool has_inverses() const { return has_inverses_; }
  Index inv(Index g) const { return inv_[g]; }
  Index comm(Index g, Index h) const;
  Index pow(Index g, std::int64_t k) const;

 private:
  WordSystem system_;
  std::vector<Index> table_;
  std::optional<Index> unit_;
  std::vector<Index> inv_;
  bool has_inverses_ = false;
};

/// A self-map of the element indices.
struct GroupMap {
  std::string label;
  std::vector<Index> image;

  Index operator()(Index g) const { return image[g]; }
  bool bijective() const;
  static GroupMap identity(std::string label = "id");
};

/// Outcome of the applicability checks, in the order they run.
struct ApplicabilityCertificate {
  WordSystem system;
  bool unit_law = false;
  bool generator_equations = false;
  bool inverse_law = false;
  bool associative = false;
  bool exponent4 = false;
  bool metabelian = false;
  bool class4 = false;
  bool generated = false;
  bool s_iso = false;
  /// First failing law, empty when applicable.
  std::string witness;
  /// Exponents i with g^i the o-inverse of g for every g.
  std::vector<int> inverse_exponents;
  std::vector<std::size_t> series_sizes;
  std::optional<GroupMap> s;

  bool applicable() const {
    return unit_law && generator_equations && inverse_law && associative && exponent4 &&
           metabelian && class4 && generated && s_iso;
  }
};

/// All laws of the variety checked on (G, o_W), then s built and verified.
/// With assoc_sample > 0 associativity is checked on that many random triples
/// instead of all 1024^3.
ApplicabilityCertificate full_applicability(const WordSystem& w, std::size_t assoc_sample = 0,
                                            std::uint64_t seed = 0,
                                            const theta::Group& G = theta::group());

/// s(x) = x, s(y) = y, s(Ci) = Ci's commutator word evaluated under o, and
/// s(g) = s(C1)^{o a1} o ... o s(C7)^{o a7}. Precondition: t has a unit and
/// inverses. Does not verify anything.
GroupMap build_s_map(const VerbalGroupTable& t);
/// build_s_map plus the exhaustive bijectivity and homomorphism checks.
/// Throws std::runtime_error when either fails.
GroupMap build_s_iso(const VerbalGroupTable& t, const theta::Group& G = theta::group());
/// The unique map with s(1) = unit, s(g x) = s(g) o x, s(g y) = s(g) o y,
/// found by walking the Cayley graph of G on {x, y}. nullopt if the walk
/// reaches some g along two paths with different values.
std::optional<GroupMap> forced_s_map(const VerbalGroupTable& t,
                                     const theta::Group& G = theta::group());

struct SearchResult {
  std::vector<Index> stage1;
  std::vector<Index> stage2;
  /// Stage-1 survivors passing only the x o (x o y) equation, only the
  /// y-equation, or both (== stage2).
  std::size_t only_2x = 0;
  std::size_t only_2y = 0;
  std::size_t pass_2x = 0;
  std::size_t pass_2y = 0;
};

/// Keeps the w with w(g,1) = g and w(1,h) = h for all g, h.
std::vector<Index> stage1_unit_filter(const theta::Group& G = theta::group());
/// Keeps the candidates with x o (x o y) = (x o x) o y and
/// x o (y o y) = (x o y) o y.
SearchResult stage2_congruence_filter(const std::vector<Index>& survivors,
                                      const theta::Group& G = theta::group());

enum class Stage { unit, generators, full };

/// The staged search over all 1024 candidate words, as a report. With
/// Stage::full every stage-2 survivor is certified by full_applicability.
Report search_words(Stage stage, std::size_t assoc_sample = 0, std::uint64_t seed = 0,
                    const theta::Group& G = theta::group());

/// The certificate of a single system as a report, one check per law.
Report applicability_report(const WordSystem& w, std::size_t assoc_sample = 0,
                            std::uint64_t seed = 0, const theta::Group& G = theta::group());

/// Closed forms for x o (x o y), (x o x) o y, (x o y) o y, x o (y o y) and
/// the commutators entering them, checked over their candidate families.
Report verify_an2_closed_forms(const theta::Group& G = theta::group());

/// Commutator and associativity identities of o_1 and o_2 on G: exhaustive
/// over pairs and over triples, sampled for the four- and five-variable
/// identities.
Report verify_operation_identities(std::size_t sample, std::uint64_t seed,
                                   const theta::Group& G = theta::group());

}  // namespace sanovcat::verbal
