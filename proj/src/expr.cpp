#include "sanovcat/expr.hpp"

#include <cctype>
#include <charconv>
#include <limits>

namespace sanovcat {

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::runtime_error("parse error at " + std::to_string(position) + ": " + message),
      position_(position) {}

struct GroupExpr::Node {
  Kind kind = Kind::identity;
  std::string name;
  std::int64_t exponent = 0;
  std::vector<GroupExpr> children;
};

GroupExpr::GroupExpr() : GroupExpr(identity()) {}

GroupExpr::GroupExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

GroupExpr GroupExpr::identity() {
  static const auto node = std::make_shared<const Node>();
  return GroupExpr(node);
}

GroupExpr GroupExpr::var(std::string name) {
  if (name.empty()) throw std::invalid_argument("empty variable name");
  auto n = std::make_shared<Node>();
  n->kind = Kind::var;
  n->name = std::move(name);
  return GroupExpr(std::move(n));
}

GroupExpr GroupExpr::product(std::vector<GroupExpr> factors) {
  if (factors.empty()) return identity();
  if (factors.size() == 1) return factors.front();
  auto n = std::make_shared<Node>();
  n->kind = Kind::product;
  n->children = std::move(factors);
  return GroupExpr(std::move(n));
}

GroupExpr GroupExpr::inverse(GroupExpr e) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::inverse;
  n->children.push_back(std::move(e));
  return GroupExpr(std::move(n));
}

GroupExpr GroupExpr::power(GroupExpr e, std::int64_t exponent) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::power;
  n->exponent = exponent;
  n->children.push_back(std::move(e));
  return GroupExpr(std::move(n));
}

GroupExpr GroupExpr::commutator(std::vector<GroupExpr> args) {
  if (args.size() < 2) throw std::invalid_argument("commutator needs at least two arguments");
  auto n = std::make_shared<Node>();
  n->kind = Kind::commutator;
  n->children = std::move(args);
  return GroupExpr(std::move(n));
}

GroupExpr::Kind GroupExpr::kind() const noexcept { return node_->kind; }
const std::string& GroupExpr::name() const noexcept { return node_->name; }
std::int64_t GroupExpr::exponent() const noexcept { return node_->exponent; }
std::span<const GroupExpr> GroupExpr::children() const noexcept { return node_->children; }

bool operator==(const GroupExpr& a, const GroupExpr& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  return x.kind == y.kind && x.name == y.name && x.exponent == y.exponent &&
         x.children == y.children;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, std::size_t offset) : text_(text), offset_(offset) {}

  GroupExpr parse_all() {
    GroupExpr e = parse_product();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, offset_ + pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool starts_atom() {
    skip_space();
    if (pos_ >= text_.size()) return false;
    char c = text_[pos_];
    return c == '(' || c == '1' || std::isalpha(static_cast<unsigned char>(c));
  }

  GroupExpr parse_product() {
    std::vector<GroupExpr> factors;
    if (!starts_atom()) fail("expected an expression");
    factors.push_back(parse_term());
    while (true) {
      if (peek('*')) {
        ++pos_;
        if (!starts_atom()) fail("expected an expression after '*'");
        factors.push_back(parse_term());
      } else if (starts_atom()) {
        factors.push_back(parse_term());
      } else {
        break;
      }
    }
    return GroupExpr::product(std::move(factors));
  }

  GroupExpr parse_term() {
    GroupExpr e = parse_atom();
    while (peek('^')) {
      ++pos_;
      skip_space();
      if (peek('(')) {
        ++pos_;
        std::int64_t k = parse_integer();
        if (!peek(')')) fail("expected ')' closing the exponent");
        ++pos_;
        e = GroupExpr::power(std::move(e), k);
      } else {
        std::int64_t k = parse_integer();
        e = k == -1 ? GroupExpr::inverse(std::move(e)) : GroupExpr::power(std::move(e), k);
      }
    }
    return e;
  }

  std::int64_t parse_integer() {
    skip_space();
    std::size_t start = pos_;
    bool negative = false;
    if (pos_ < text_.size() && text_[pos_] == '-') {
      negative = true;
      ++pos_;
    }
    std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == digits) {
      pos_ = start;
      fail("expected an integer exponent");
    }
    std::uint64_t magnitude = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + digits, text_.data() + pos_, magnitude);
    (void)ptr;
    if (ec != std::errc() ||
        magnitude > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
      pos_ = start;
      fail("exponent out of range");
    }
    auto value = static_cast<std::int64_t>(magnitude);
    return negative ? -value : value;
  }

  GroupExpr parse_atom() {
    skip_space();
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      std::vector<GroupExpr> items;
      items.push_back(parse_product());
      while (peek(',')) {
        ++pos_;
        items.push_back(parse_product());
      }
      if (!peek(')')) fail("expected ')' or ','");
      ++pos_;
      if (items.size() == 1) return items.front();
      return GroupExpr::commutator(std::move(items));
    }
    if (c == '1') {
      ++pos_;
      if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        fail("only the literal 1 is allowed as a number");
      return GroupExpr::identity();
    }
    std::size_t start = pos_;
    ++pos_;
    while (pos_ < text_.size()) {
      char d = text_[pos_];
      if (std::isdigit(static_cast<unsigned char>(d)) || d == '_' || d == '\'')
        ++pos_;
      else
        break;
    }
    return GroupExpr::var(std::string(text_.substr(start, pos_ - start)));
  }

  std::string_view text_;
  std::size_t offset_;
  std::size_t pos_ = 0;
};

void print(const GroupExpr& e, std::string& out);

// Atoms are the only things allowed directly in front of '^'.
void print_atom(const GroupExpr& e, std::string& out) {
  switch (e.kind()) {
    case GroupExpr::Kind::identity:
    case GroupExpr::Kind::var:
    case GroupExpr::Kind::commutator:
    case GroupExpr::Kind::power:
    case GroupExpr::Kind::inverse:
      print(e, out);
      return;
    case GroupExpr::Kind::product:
      out += '(';
      print(e, out);
      out += ')';
      return;
  }
}

void print(const GroupExpr& e, std::string& out) {
  switch (e.kind()) {
    case GroupExpr::Kind::identity:
      out += '1';
      return;
    case GroupExpr::Kind::var:
      out += e.name();
      return;
    case GroupExpr::Kind::product: {
      bool first = true;
      for (const auto& f : e.children()) {
        if (!first) out += '*';
        first = false;
        print_atom(f, out);
      }
      return;
    }
    case GroupExpr::Kind::inverse:
      print_atom(e.children()[0], out);
      out += "^-1";
      return;
    case GroupExpr::Kind::power:
      print_atom(e.children()[0], out);
      if (e.exponent() == -1)
        out += "^(-1)";
      else
        out += '^' + std::to_string(e.exponent());
      return;
    case GroupExpr::Kind::commutator: {
      out += '(';
      bool first = true;
      for (const auto& a : e.children()) {
        if (!first) out += ',';
        first = false;
        print(a, out);
      }
      out += ')';
      return;
    }
  }
}

void collect_vars(const GroupExpr& e, std::set<std::string>& out) {
  if (e.kind() == GroupExpr::Kind::var) out.insert(e.name());
  for (const auto& c : e.children()) collect_vars(c, out);
}

}  // namespace

GroupExpr parse_expr(std::string_view text) { return Parser(text, 0).parse_all(); }

std::string to_string(const GroupExpr& e) {
  std::string out;
  print(e, out);
  return out;
}

GroupExpr substitute(const GroupExpr& e, const std::map<std::string, GroupExpr>& sigma) {
  switch (e.kind()) {
    case GroupExpr::Kind::identity:
      return e;
    case GroupExpr::Kind::var: {
      auto it = sigma.find(e.name());
      return it == sigma.end() ? e : it->second;
    }
    case GroupExpr::Kind::inverse:
      return GroupExpr::inverse(substitute(e.children()[0], sigma));
    case GroupExpr::Kind::power:
      return GroupExpr::power(substitute(e.children()[0], sigma), e.exponent());
    case GroupExpr::Kind::product:
    case GroupExpr::Kind::commutator: {
      std::vector<GroupExpr> kids;
      kids.reserve(e.children().size());
      for (const auto& c : e.children()) kids.push_back(substitute(c, sigma));
      return e.kind() == GroupExpr::Kind::product ? GroupExpr::product(std::move(kids))
                                                  : GroupExpr::commutator(std::move(kids));
    }
  }
  return e;
}

std::set<std::string> free_variables(const GroupExpr& e) {
  std::set<std::string> out;
  collect_vars(e, out);
  return out;
}

Equation parse_equation(std::string_view text) {
  auto eq = text.find('=');
  if (eq == std::string_view::npos) return {parse_expr(text), GroupExpr::identity()};
  if (auto second = text.find('=', eq + 1); second != std::string_view::npos)
    throw ParseError("more than one '=' in equation", second);
  GroupExpr lhs = Parser(text.substr(0, eq), 0).parse_all();
  GroupExpr rhs = Parser(text.substr(eq + 1), eq + 1).parse_all();
  return {std::move(lhs), std::move(rhs)};
}

}  // namespace sanovcat
