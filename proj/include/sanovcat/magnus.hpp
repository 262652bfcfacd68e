#pragma once

// Independent model of N4(x,y): x -> 1+X, y -> 1+Y inside the integer
// noncommutative polynomials in X, Y truncated above degree 4. The kernel of
// this map on the free group is gamma_5, so it is faithful on N4(x,y).

#include <array>
#include <cstdint>
#include <string>

#include "sanovcat/nilpotent.hpp"
#include "sanovcat/report.hpp"

namespace sanovcat::magnus {

inline constexpr int kDegree = 4;
inline constexpr int kMonomials = 31;  // 1 + 2 + 4 + 8 + 16

/// Monomials in length-then-lex order with X < Y: a word of length L whose
/// letters read as bits (X=0, Y=1, first letter most significant) sits at
/// index 2^L - 1 + bits.
int monomial_index(int length, int bits);
int monomial_length(int index);
std::string monomial_name(int index);  // "1", "X", "YX", ...

struct Series {
  std::array<std::int64_t, kMonomials> c{};

  static Series one();
  static Series x();  // 1 + X
  static Series y();  // 1 + Y
  friend bool operator==(const Series&, const Series&) = default;
};

std::string to_string(const Series& s);

Series series_mul(const Series& s, const Series& t);
/// Throws std::invalid_argument unless the constant coefficient is 1.
Series series_inv(const Series& s);
Series series_pow(const Series& s, std::int64_t k);
Series series_comm(const Series& a, const Series& b);

/// Images of C1..C8 built from series commutators directly (no collector).
const std::array<Series, n4::kLetters + 1>& basis_images();

Series magnus_embed(const n4::Element& a);

/// Multiplicativity on n random pairs from [-box, box]^8 plus inverse and
/// identity spot checks, all against `c`.
Report oracle_check(const n4::Collector& c, std::size_t n, int box, std::uint64_t seed);

/// Distinct elements of [-box, box]^8 have distinct images.
Check injectivity_check(int box);

}  // namespace sanovcat::magnus
