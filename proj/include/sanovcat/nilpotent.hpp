#pragma once

// The free nilpotent group N4(x,y) of class 4 and rank 2.
//
// Elements are stored in the normal form
//   x^a1 y^a2 C3^a3 C4^a4 C5^a5 C6^a6 C7^a7 C8^a8
// over the basic commutators
//   C1 = x, C2 = y, C3 = (y,x), C4 = (y,x,y), C5 = (y,x,x),
//   C6 = (y,x,x,x), C7 = (y,x,y,y), C8 = (y,x,y,x) = (y,x,x,y)
// of weights 1,1,2,3,3,4,4,4. The subgroup generated by C3..C8 is abelian,
// which both multiplication paths below rely on.

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "sanovcat/expr.hpp"
#include "sanovcat/report.hpp"

namespace sanovcat::n4 {

inline constexpr int kLetters = 8;
/// kWeight[i] is the weight of C_i; index 0 is unused.
inline constexpr std::array<int, kLetters + 1> kWeight{0, 1, 1, 2, 3, 3, 4, 4, 4};
/// Coordinates must stay strictly below this in absolute value.
inline constexpr std::int64_t kCoordinateLimit = std::int64_t{1} << 30;

struct Element {
  std::array<std::int64_t, kLetters> a{};

  /// C_i^e, with i in 1..8.
  static Element letter(int i, std::int64_t e = 1);
  std::int64_t& operator[](int i) { return a[static_cast<std::size_t>(i - 1)]; }
  std::int64_t operator[](int i) const { return a[static_cast<std::size_t>(i - 1)]; }
  bool is_identity() const;
  friend bool operator==(const Element&, const Element&) = default;
  friend auto operator<=>(const Element&, const Element&) = default;
};

/// "x^4*y^4*C3^6..." using the basis names; "1" for the identity.
std::string to_string(const Element& g);
/// "(4,4,6,14,4,1,11,11)".
std::string coords(const Element& g);

struct SignedLetter {
  int index;  // 1..8
  int sign;   // +1 or -1
  friend bool operator==(const SignedLetter&, const SignedLetter&) = default;
};
using LetterWord = std::vector<SignedLetter>;

/// Expands a normal form into its letter word, e.g. x^2 C3^-1 -> [x+, x+, C3-].
LetterWord to_word(const Element& g);

enum class Strategy { leftmost, rightmost };

/// base[j][i] = (C_j, C_i) for j > i; other entries unused.
using BaseTable = std::array<std::array<Element, kLetters + 1>, kLetters + 1>;

/// The commutator table of the basis above.
BaseTable shirshov_table();

/// (C_j, C_i) for j > i. Throws std::invalid_argument otherwise.
Element basis_commutator(int j, int i);

/// Arithmetic driven by a base commutator table. Built from shirshov_table()
/// it is exact arithmetic in N4(x,y); built from a tampered table it is the
/// mutation fixture the oracle tests must catch.
class Collector {
 public:
  using value_type = Element;

  /// Throws std::invalid_argument if some entry has a nonzero x or y
  /// coordinate or does not raise weight.
  explicit Collector(const BaseTable& base);

  /// Naive rewriting: repeatedly swaps an adjacent out-of-order pair
  /// u^e v^d (u > v) into v^d u^e (u^e, v^d) and cancels u^e u^-e. Central
  /// letters C6..C8 are moved straight to the tail, which is a sequence of
  /// swaps with trivial commutators. Throws std::runtime_error after
  /// step_limit rewrites.
  Element collect(const LetterWord& w, Strategy s = Strategy::leftmost,
                  std::uint64_t step_limit = 100'000'000) const;

  /// (C_u^e, C_v^d) for u > v, e,d in {+1,-1}.
  const Element& signed_commutator(int u, int e, int v, int d) const;

  Element identity() const { return {}; }
  /// Closed-form collection from the left. Throws std::overflow_error when a
  /// coordinate of the result leaves the guard range.
  Element mul(const Element& a, const Element& b) const;
  Element inv(const Element& a) const;
  Element pow(const Element& a, std::int64_t k) const;
  Element comm(const Element& a, const Element& b) const;

  const BaseTable& base() const { return base_; }

 private:
  using Gamma = std::array<std::int64_t, 6>;  // coordinates 3..8
  using Nil = std::array<Gamma, 6>;           // column j is the image of C_{j+3}

  Element times_x(const Element& r, std::int64_t n) const;
  Element times_y(const Element& r, std::int64_t n) const;
  void build_signed_table();

  BaseTable base_;
  Nil nx_{};  // h -> (h, x) on the abelian part
  Nil ny_{};  // h -> (h, y)
  Gamma c3_{};
  // signed_[u][v][e][d] with e,d = 0 for +1, 1 for -1
  std::array<std::array<std::array<std::array<Element, 2>, 2>, kLetters + 1>, kLetters + 1>
      signed_{};
};

const Collector& default_collector();

/// x, y and C1..C8 bound to the basis elements.
std::map<std::string, Element> standard_binding();

Element eval(const GroupExpr& e, const std::map<std::string, Element>& binding,
             const Collector& c = default_collector());
/// Evaluates at standard_binding().
Element eval(const GroupExpr& e);
Element eval(std::string_view text);

/// Collection identities at the free generators plus sampled checks of the
/// restricted-quantifier identities over the gamma_k coordinate subspaces.
Report verify_identities(std::uint64_t seed, std::size_t samples);
/// Naive rewriting under both strategies against the closed form on random
/// words, and a sampled torsion-freeness check.
Report verify_collection(std::uint64_t seed, std::size_t words);

}  // namespace sanovcat::n4
