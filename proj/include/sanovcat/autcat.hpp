#pragma once

// Strongly stable automorphisms Phi_0..Phi_3 through their word systems
// W_alpha = {1, x^-1, x y C3^alpha}: composition, the group they form, and
// which of them are inner.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "sanovcat/report.hpp"
#include "sanovcat/verbal.hpp"

namespace sanovcat::autcat {

using theta::Index;

struct StrongAutomorphism {
  int alpha = 0;
  verbal::WordSystem system;
  verbal::GroupMap s;
};

/// Certifies W_0..W_3 and keeps their s-maps. Throws std::runtime_error if
/// any of them is rejected.
std::vector<StrongAutomorphism> discover(std::size_t assoc_sample = 0, std::uint64_t seed = 0,
                                         const theta::Group& G = theta::group());

/// The word system of Phi_beta Phi_alpha: w.(x,y) = s_beta(s_alpha(xy)),
/// w_{-1}(x) = s_beta(s_alpha(x^-1)). Throws std::runtime_error if the result
/// is not one of W_0..W_3 or its unit word is not 1.
verbal::WordSystem compose(const StrongAutomorphism& beta, const StrongAutomorphism& alpha);

using CayleyTable = std::array<std::array<int, 4>, 4>;
/// table[b][a] = index of Phi_b Phi_a.
CayleyTable cayley_table(const std::vector<StrongAutomorphism>& autos);
/// "cyclic of order 4", "Klein four" or "not a group of order 4".
std::string classify(const CayleyTable& t);

struct InnerVerdict {
  bool inner = false;
  /// The exponent i with c(g) = g^i an isomorphism G -> (G, o), if any.
  std::optional<int> exponent;
  /// One line per rejected exponent.
  std::vector<std::string> rejections;
  /// c_i(x) o c_i(y) and c_i(xy) for each i.
  std::array<std::pair<Index, Index>, 4> at_generators{};
  std::array<bool, 4> bijective{};
  /// Image of c_i restricted to <x>.
  std::array<std::vector<Index>, 4> image_on_x{};
};

/// Tests the four power maps g -> g^i against o_W over all pairs.
InnerVerdict inner_test(const verbal::WordSystem& w, const theta::Group& G = theta::group());

/// psi(g) for the endomorphism x -> u, y -> v of G.
Index endomorphism(Index u, Index v, Index g, const theta::Group& G = theta::group());

struct AutReport {
  CayleyTable table{};
  std::string type;
  std::array<bool, 4> inner{};
  std::size_t order_s = 0;
  std::size_t order_inner = 0;
  std::size_t order_quotient = 0;
  Report checks;
};

/// The full automorphism layer: composition, the group of the four
/// automorphisms, the inner tests with witnesses, naturality of the power
/// maps under sampled endomorphisms, and the order of the quotient.
AutReport quotient_report(std::size_t naturality_samples, std::uint64_t seed,
                          std::size_t assoc_sample = 0, const theta::Group& G = theta::group());

}  // namespace sanovcat::autcat
