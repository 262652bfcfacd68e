#include "sanovcat/nilpotent.hpp"

#include <sstream>
#include <stdexcept>

namespace sanovcat::n4 {

namespace {

__extension__ typedef __int128 wide;

wide checked_mul(wide a, wide b) {
  wide r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("N4 coordinate overflow");
  return r;
}

wide checked_add(wide a, wide b) {
  wide r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("N4 coordinate overflow");
  return r;
}

// Binomial coefficients as polynomials in n, valid for negative n too.
wide binom2(wide n) { return checked_mul(n, n - 1) / 2; }
wide binom3(wide n) { return checked_mul(checked_mul(n, n - 1), n - 2) / 6; }

std::int64_t narrow(wide v) {
  if (v >= kCoordinateLimit || v <= -kCoordinateLimit)
    throw std::overflow_error("N4 coordinate leaves the guard range |a_i| < 2^30");
  return static_cast<std::int64_t>(v);
}

int lowest_weight(const Element& e) {
  int w = 99;
  for (int k = 1; k <= kLetters; ++k)
    if (e[k] != 0) w = std::min(w, kWeight[k]);
  return w;
}

const char* letter_name(int i) {
  static const char* names[] = {"", "x", "y", "C3", "C4", "C5", "C6", "C7", "C8"};
  return names[i];
}

}  // namespace

Element Element::letter(int i, std::int64_t e) {
  if (i < 1 || i > kLetters) throw std::out_of_range("basis index must be in 1..8");
  Element g;
  g[i] = e;
  return g;
}

bool Element::is_identity() const {
  for (auto v : a)
    if (v != 0) return false;
  return true;
}

std::string to_string(const Element& g) {
  std::string out;
  for (int i = 1; i <= kLetters; ++i) {
    if (g[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += letter_name(i);
    if (g[i] != 1) out += (g[i] < 0 ? "^(" + std::to_string(g[i]) + ")" : "^" + std::to_string(g[i]));
  }
  return out.empty() ? "1" : out;
}

std::string coords(const Element& g) {
  std::ostringstream os;
  os << '(';
  for (int i = 1; i <= kLetters; ++i) os << (i > 1 ? "," : "") << g[i];
  os << ')';
  return os.str();
}

LetterWord to_word(const Element& g) {
  LetterWord w;
  for (int i = 1; i <= kLetters; ++i) {
    int s = g[i] < 0 ? -1 : 1;
    for (std::int64_t k = 0; k < g[i] * s; ++k) w.push_back({i, s});
  }
  return w;
}

BaseTable shirshov_table() {
  BaseTable t{};
  t[2][1] = Element::letter(3);
  t[3][1] = Element::letter(5);
  t[3][2] = Element::letter(4);
  t[4][1] = Element::letter(8);
  t[4][2] = Element::letter(7);
  t[5][1] = Element::letter(6);
  t[5][2] = Element::letter(8);
  return t;
}

Element basis_commutator(int j, int i) {
  if (i < 1 || j > kLetters || j <= i)
    throw std::invalid_argument("basis_commutator(j, i) needs 1 <= i < j <= 8");
  static const BaseTable table = shirshov_table();
  return table[j][i];
}

Collector::Collector(const BaseTable& base) : base_(base) {
  for (int j = 2; j <= kLetters; ++j) {
    for (int i = 1; i < j; ++i) {
      const Element& e = base_[j][i];
      if (e.is_identity()) continue;
      if (e[1] != 0 || e[2] != 0)
        throw std::invalid_argument("commutator table entry outside the derived subgroup");
      if (lowest_weight(e) < kWeight[j] + kWeight[i])
        throw std::invalid_argument("commutator table entry does not raise weight");
    }
  }
  for (int j = 3; j <= kLetters; ++j)
    for (int r = 3; r <= kLetters; ++r) {
      nx_[j - 3][r - 3] = base_[j][1][r];
      ny_[j - 3][r - 3] = base_[j][2][r];
    }
  for (int r = 3; r <= kLetters; ++r) c3_[r - 3] = base_[2][1][r];
  build_signed_table();
}

void Collector::build_signed_table() {
  // Entries are filled by decreasing weight sum, so every rewrite inside the
  // collections below only touches entries that are already final.
  for (int total = 2 * kWeight[kLetters]; total >= 2; --total) {
    for (int u = 2; u <= kLetters; ++u) {
      for (int v = 1; v < u; ++v) {
        if (kWeight[u] + kWeight[v] != total) continue;
        const Element& c = base_[u][v];
        Element neg_c;
        for (int k = 1; k <= kLetters; ++k) neg_c[k] = -c[k];
        signed_[u][v][0][0] = c;
        // (a^-1, b) = a c^-1 a^-1
        LetterWord w1{{u, 1}};
        for (auto l : to_word(neg_c)) w1.push_back(l);
        w1.push_back({u, -1});
        Element d = collect(w1);
        signed_[u][v][1][0] = d;
        // (a, b^-1) = b c^-1 b^-1
        LetterWord w2{{v, 1}};
        for (auto l : to_word(neg_c)) w2.push_back(l);
        w2.push_back({v, -1});
        signed_[u][v][0][1] = collect(w2);
        // (a^-1, b^-1) = b d^-1 b^-1 with d = (a^-1, b)
        Element neg_d;
        for (int k = 1; k <= kLetters; ++k) neg_d[k] = -d[k];
        LetterWord w3{{v, 1}};
        for (auto l : to_word(neg_d)) w3.push_back(l);
        w3.push_back({v, -1});
        signed_[u][v][1][1] = collect(w3);
      }
    }
  }
}

const Element& Collector::signed_commutator(int u, int e, int v, int d) const {
  if (v < 1 || u > kLetters || u <= v)
    throw std::invalid_argument("signed_commutator(u, e, v, d) needs 1 <= v < u <= 8");
  return signed_[u][v][e < 0 ? 1 : 0][d < 0 ? 1 : 0];
}

Element Collector::collect(const LetterWord& input, Strategy strategy,
                           std::uint64_t step_limit) const {
  auto central = [](int index) { return kWeight[index] == 4; };
  Element tail;
  LetterWord w;
  w.reserve(input.size() * 2);
  for (auto l : input) {
    if (l.index < 1 || l.index > kLetters || (l.sign != 1 && l.sign != -1))
      throw std::invalid_argument("malformed signed letter");
    if (central(l.index))
      tail[l.index] += l.sign;
    else
      w.push_back(l);
  }

  auto bad = [&](std::size_t i) {
    const auto& p = w[i];
    const auto& q = w[i + 1];
    return p.index > q.index || (p.index == q.index && p.sign != q.sign);
  };

  std::uint64_t steps = 0;
  // Leftmost: everything before `cursor` is already in order.
  // Rightmost: everything after `cursor + 1` is already in order.
  std::size_t cursor = strategy == Strategy::leftmost ? 0 : (w.size() >= 2 ? w.size() - 2 : 0);
  while (w.size() >= 2) {
    std::size_t i;
    bool found = false;
    if (strategy == Strategy::leftmost) {
      for (i = cursor; i + 1 < w.size(); ++i)
        if (bad(i)) {
          found = true;
          break;
        }
    } else {
      i = std::min(cursor, w.size() - 2);
      for (;; --i) {
        if (bad(i)) {
          found = true;
          break;
        }
        if (i == 0) break;
      }
    }
    if (!found) break;
    if (++steps > step_limit) throw std::runtime_error("collection step limit exceeded");

    SignedLetter p = w[i];
    SignedLetter q = w[i + 1];
    if (p.index == q.index) {
      w.erase(w.begin() + static_cast<std::ptrdiff_t>(i), w.begin() + static_cast<std::ptrdiff_t>(i + 2));
      if (strategy == Strategy::leftmost)
        cursor = i == 0 ? 0 : i - 1;
      else
        cursor = i + 1;  // the pair straddling the gap is the new right edge
      continue;
    }
    const Element& c = signed_commutator(p.index, p.sign, q.index, q.sign);
    LetterWord inserted;
    for (int k = 1; k <= kLetters; ++k) {
      if (c[k] == 0) continue;
      if (central(k)) {
        tail[k] += c[k];
        continue;
      }
      int s = c[k] < 0 ? -1 : 1;
      for (std::int64_t m = 0; m < c[k] * s; ++m) inserted.push_back({k, s});
    }
    w[i] = q;
    w[i + 1] = p;
    w.insert(w.begin() + static_cast<std::ptrdiff_t>(i + 2), inserted.begin(), inserted.end());
    if (strategy == Strategy::leftmost)
      cursor = i == 0 ? 0 : i - 1;
    else
      cursor = i + 1 + inserted.size();
  }

  Element out = tail;
  for (auto l : w) out[l.index] += l.sign;
  return out;
}

namespace {

using WideGamma = std::array<wide, 6>;

template <class Nil>
WideGamma nil_apply(const Nil& n, const WideGamma& g) {
  WideGamma r{};
  for (std::size_t j = 0; j < 6; ++j) {
    if (g[j] == 0) continue;
    for (std::size_t k = 0; k < 6; ++k)
      if (n[j][k] != 0) r[k] = checked_add(r[k], checked_mul(n[j][k], g[j]));
  }
  return r;
}

// (a I + b N + c N^2) g; N^3 = 0 because N raises weight.
template <class Nil>
WideGamma poly(const Nil& n, wide a, wide b, wide c, const WideGamma& g) {
  WideGamma ng = nil_apply(n, g);
  WideGamma nng = nil_apply(n, ng);
  WideGamma r{};
  for (std::size_t k = 0; k < 6; ++k)
    r[k] = checked_add(checked_add(checked_mul(a, g[k]), checked_mul(b, ng[k])),
                       checked_mul(c, nng[k]));
  return r;
}

WideGamma gamma_of(const Element& e) {
  WideGamma g{};
  for (int k = 3; k <= kLetters; ++k) g[k - 3] = e[k];
  return g;
}

}  // namespace

// r * x^n = x^(a1+n) (y (y,x^n))^a2 Gamma^(x^n), expanded with
//   (y,x^n)        = (n + C(n,2) Nx + C(n,3) Nx^2) C3
//   (y d)^m        = y^m (m + C(m,2) Ny + C(m,3) Ny^2) d
//   Gamma^(x^n)    = (1 + n Nx + C(n,2) Nx^2) Gamma
Element Collector::times_x(const Element& r, std::int64_t n) const {
  if (n == 0) return r;
  WideGamma c3{};
  for (std::size_t k = 0; k < 6; ++k) c3[k] = c3_[k];
  WideGamma d = poly(nx_, n, binom2(n), binom3(n), c3);
  const wide m = r[2];
  WideGamma yd = poly(ny_, m, binom2(m), binom3(m), d);
  WideGamma conj = poly(nx_, 1, n, binom2(n), gamma_of(r));
  Element out;
  out[1] = narrow(checked_add(r[1], n));
  out[2] = r[2];
  for (int k = 3; k <= kLetters; ++k) out[k] = narrow(checked_add(yd[k - 3], conj[k - 3]));
  return out;
}

// r * y^n = x^a1 y^(a2+n) Gamma^(y^n)
Element Collector::times_y(const Element& r, std::int64_t n) const {
  if (n == 0) return r;
  WideGamma conj = poly(ny_, 1, n, binom2(n), gamma_of(r));
  Element out;
  out[1] = r[1];
  out[2] = narrow(checked_add(r[2], n));
  for (int k = 3; k <= kLetters; ++k) out[k] = narrow(conj[k - 3]);
  return out;
}

Element Collector::mul(const Element& a, const Element& b) const {
  Element r = times_y(times_x(a, b[1]), b[2]);
  for (int k = 3; k <= kLetters; ++k) r[k] = narrow(checked_add(r[k], b[k]));
  return r;
}

Element Collector::inv(const Element& a) const {
  Element r;
  for (int k = 3; k <= kLetters; ++k) r[k] = -a[k];
  return times_x(times_y(r, -a[2]), -a[1]);
}

Element Collector::pow(const Element& a, std::int64_t k) const { return group_power(*this, a, k); }

Element Collector::comm(const Element& a, const Element& b) const {
  return group_commutator(*this, a, b);
}

const Collector& default_collector() {
  static const Collector c(shirshov_table());
  return c;
}

std::map<std::string, Element> standard_binding() {
  std::map<std::string, Element> b;
  b["x"] = Element::letter(1);
  b["y"] = Element::letter(2);
  for (int i = 1; i <= kLetters; ++i) b["C" + std::to_string(i)] = Element::letter(i);
  return b;
}

Element eval(const GroupExpr& e, const std::map<std::string, Element>& binding,
             const Collector& c) {
  return evaluate(e, binding, c);
}

Element eval(const GroupExpr& e) {
  static const auto binding = standard_binding();
  return eval(e, binding);
}

Element eval(std::string_view text) { return eval(parse_expr(text)); }

}  // namespace sanovcat::n4
