#pragma once

// Group-theoretic expressions: products, inverses, integer powers and
// left-normed commutators over named variables.
//
// Surface syntax (also the CLI's --expr / --word format):
//
//   expr    := term ( ['*'] term )*          juxtaposition is a product
//   term    := atom ( '^' exponent )*        postfix, left associative
//   exponent:= '-1'                          -> Inverse
//            | ['-'] digits                  -> Power
//            | '(' ['-'] digits ')'          -> Power (always, even for -1)
//   atom    := identifier | '1' | '(' expr ( ',' expr )* ')'
//
// An identifier is one letter followed by digits, '_' or '\'' characters, so
// "xyC3" reads as x*y*C3. A parenthesised list with two or more entries is the
// left-normed commutator (a,b,c) = ((a,b),c) with (a,b) = a^-1 b^-1 a b.

#include <concepts>
#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sanovcat {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position);
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class UnboundVariable : public std::invalid_argument {
 public:
  explicit UnboundVariable(const std::string& name)
      : std::invalid_argument("unbound variable '" + name + "'"), name_(name) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

/// Immutable expression tree. Copies share structure.
///
/// Invariants enforced by the factories: a Product has at least two factors
/// and a Commutator at least two arguments.
class GroupExpr {
 public:
  enum class Kind { identity, var, product, inverse, power, commutator };

  GroupExpr();  // identity

  static GroupExpr identity();
  static GroupExpr var(std::string name);
  /// Zero factors give the identity, one factor gives the factor itself.
  static GroupExpr product(std::vector<GroupExpr> factors);
  static GroupExpr inverse(GroupExpr e);
  static GroupExpr power(GroupExpr e, std::int64_t exponent);
  /// Throws std::invalid_argument for fewer than two arguments.
  static GroupExpr commutator(std::vector<GroupExpr> args);

  Kind kind() const noexcept;
  const std::string& name() const noexcept;
  std::int64_t exponent() const noexcept;
  std::span<const GroupExpr> children() const noexcept;

  friend bool operator==(const GroupExpr& a, const GroupExpr& b);

 private:
  struct Node;
  explicit GroupExpr(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

GroupExpr parse_expr(std::string_view text);

/// Canonical printer; parse_expr(to_string(e)) == e.
std::string to_string(const GroupExpr& e);

/// Simultaneous substitution; unmapped variables are left alone.
GroupExpr substitute(const GroupExpr& e,
                     const std::map<std::string, GroupExpr>& sigma);

std::set<std::string> free_variables(const GroupExpr& e);

/// A concrete group the evaluator can run in.
template <class Ops>
concept GroupOps = requires(const Ops& ops, const typename Ops::value_type& a) {
  { ops.identity() } -> std::convertible_to<typename Ops::value_type>;
  { ops.mul(a, a) } -> std::convertible_to<typename Ops::value_type>;
  { ops.inv(a) } -> std::convertible_to<typename Ops::value_type>;
};

template <class Ops>
typename Ops::value_type group_power(const Ops& ops, typename Ops::value_type base,
                                     std::int64_t k) {
  using V = typename Ops::value_type;
  if (k < 0) {
    base = ops.inv(base);
    k = -k;
  }
  V acc = ops.identity();
  while (k > 0) {
    if (k & 1) acc = ops.mul(acc, base);
    k >>= 1;
    if (k > 0) base = ops.mul(base, base);
  }
  return acc;
}

template <class Ops>
typename Ops::value_type group_commutator(const Ops& ops,
                                          const typename Ops::value_type& a,
                                          const typename Ops::value_type& b) {
  return ops.mul(ops.mul(ops.inv(a), ops.inv(b)), ops.mul(a, b));
}

/// Structural evaluation homomorphism. Throws UnboundVariable.
template <GroupOps Ops>
typename Ops::value_type evaluate(
    const GroupExpr& e,
    const std::map<std::string, typename Ops::value_type>& binding,
    const Ops& ops) {
  using V = typename Ops::value_type;
  switch (e.kind()) {
    case GroupExpr::Kind::identity:
      return ops.identity();
    case GroupExpr::Kind::var: {
      auto it = binding.find(e.name());
      if (it == binding.end()) throw UnboundVariable(e.name());
      return it->second;
    }
    case GroupExpr::Kind::product: {
      V acc = ops.identity();
      for (const auto& f : e.children()) acc = ops.mul(acc, evaluate(f, binding, ops));
      return acc;
    }
    case GroupExpr::Kind::inverse:
      return ops.inv(evaluate(e.children()[0], binding, ops));
    case GroupExpr::Kind::power:
      return group_power(ops, evaluate(e.children()[0], binding, ops), e.exponent());
    case GroupExpr::Kind::commutator: {
      auto args = e.children();
      V acc = evaluate(args[0], binding, ops);
      for (std::size_t i = 1; i < args.size(); ++i)
        acc = group_commutator(ops, acc, evaluate(args[i], binding, ops));
      return acc;
    }
  }
  return ops.identity();
}

/// An identity "lhs = rhs" split at the single top-level '='.
struct Equation {
  GroupExpr lhs;
  GroupExpr rhs;
};

/// Parses "lhs = rhs"; text without '=' is read as "text = 1".
Equation parse_equation(std::string_view text);

}  // namespace sanovcat
