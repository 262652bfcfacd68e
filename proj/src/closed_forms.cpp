// Closed forms for the two generator equations over the candidate families
//   x y C3^a3 C4^a4 C5^a5 C6^a6 C7^a7   (x-equation, 64 words)
//   x y C3^a3 C5^a5 C6^a6               (y-equation, 16 words)
// and for the commutators appearing in their expansion. C8 is read in G,
// where it equals C3^2 C6 C7.

#include <array>
#include <functional>

#include "sanovcat/verbal.hpp"

namespace sanovcat::verbal {

namespace {

using Alpha = std::array<int, 8>;  // a[3]..a[7]; a[0..2] unused

std::string p(const char* letter, int e) {
  return std::string(letter) + "^" + std::to_string(e);
}

struct Formula {
  std::string name;
  std::string ref;
  /// Direct value in G for the word w with parameters a.
  std::function<Index(Index w, const Alpha& a)> direct;
  /// Asserted value, as an expression in x, y, C3..C8 and w.
  std::function<std::string(const Alpha& a)> closed;
};

std::vector<Alpha> family(bool x_family) {
  std::vector<Alpha> out;
  for (int a3 = 0; a3 < 4; ++a3)
    for (int bits = 0; bits < 16; ++bits) {
      Alpha a{};
      a[3] = a3;
      if (x_family) {
        a[4] = bits & 1;
        a[5] = (bits >> 1) & 1;
        a[6] = (bits >> 2) & 1;
        a[7] = (bits >> 3) & 1;
      } else {
        if (bits >= 4) continue;
        a[5] = bits & 1;
        a[6] = (bits >> 1) & 1;
      }
      out.push_back(a);
    }
  return out;
}

Index word_of(const Alpha& a) {
  return theta::from_coordinates({1, 1, a[3], a[4], a[5], a[6], a[7]});
}

}  // namespace

Report verify_an2_closed_forms(const theta::Group& G) {
  using theta::kX;
  using theta::kY;
  const auto binding0 = theta::standard_binding();

  auto expr = [&](const char* text) {
    auto e = parse_expr(text);
    return [&G, &binding0, e](Index w, const Alpha&) {
      auto b = binding0;
      b["w"] = w;
      return theta::eval(e, b, G);
    };
  };
  auto fixed = [](const char* text) { return [s = std::string(text)](const Alpha&) { return s; }; };

  const std::vector<Formula> x_forms = {
      {"closed.x(xy)", "x o (x o y) for w = x y C3^a3 C4^a4 C5^a5 C6^a6 C7^a7",
       [&](Index w, const Alpha&) { return evaluate_word(w, kX, w, G); },
       [](const Alpha& a) {
         return "x^2 y " + p("C3", 2 * a[3]) + " " + p("C5", a[3] * a[3] + a[4]) + " " +
                p("C6", a[3] * a[4] + a[7]) + " " + p("C8", a[4]);
       }},
      {"closed.(xx)y", "(x o x) o y for the same family",
       [&](Index w, const Alpha&) { return evaluate_word(w, evaluate_word(w, kX, kX, G), kY, G); },
       [](const Alpha& a) {
         return "x^2 y " + p("C3", 2 * a[3]) + " " + p("C5", a[3]) + " " + p("C8", a[4]);
       }},
      {"closed.L3", "(w,x)", expr("(w,x)"),
       [](const Alpha& a) { return "C3 " + p("C5", a[3]) + " " + p("C8", a[4]) + " " + p("C6", a[5]); }},
      {"closed.L4", "(w,x,w)", expr("(w,x,w)"),
       [](const Alpha& a) { return "C4 C5 " + p("C6", a[3]) + " " + p("C8", a[3] + 1); }},
      {"closed.L5", "(w,x,x)", expr("(w,x,x)"), [](const Alpha& a) { return "C5 " + p("C6", a[3]); }},
      {"closed.L6", "(w,x,x,x)", expr("(w,x,x,x)"), fixed("C6")},
      {"closed.L7", "(w,x,w,w)", expr("(w,x,w,w)"), fixed("C6 C7")},
      {"closed.S3", "(y,x^2)", expr("(y,x^2)"), fixed("C3^2 C5")},
      {"closed.S4", "(y,x^2,y)", expr("(y,x^2,y)"), fixed("C8")},
      {"closed.S5", "(y,x^2,x^2)", expr("(y,x^2,x^2)"), fixed("1")},
      {"closed.S6", "(y,x^2,x^2,x^2)", expr("(y,x^2,x^2,x^2)"), fixed("1")},
      {"closed.S7", "(y,x^2,y,y)", expr("(y,x^2,y,y)"), fixed("1")},
  };
  const std::vector<Formula> y_forms = {
      {"closed.(xy)y", "(x o y) o y for w = x y C3^a3 C5^a5 C6^a6",
       [&](Index w, const Alpha&) { return evaluate_word(w, w, kY, G); },
       [](const Alpha& a) {
         return "x y^2 " + p("C3", 2 * a[3]) + " " + p("C4", a[3] * a[3] + a[5]) + " " +
                p("C7", a[3] * a[5] + a[5] + a[6]) + " " + p("C8", a[5]);
       }},
      {"closed.x(yy)", "x o (y o y) for the same family",
       [&](Index w, const Alpha&) { return evaluate_word(w, kX, evaluate_word(w, kY, kY, G), G); },
       [](const Alpha& a) {
         return "x y^2 " + p("C3", 2 * a[3]) + " " + p("C4", a[3]) + " " + p("C8", a[5]);
       }},
      {"closed.Q3", "(y,w)", expr("(y,w)"),
       [](const Alpha& a) { return "C3 " + p("C4", a[3] + 1) + " " + p("C8", a[5]); }},
      {"closed.Q5", "(y,w,w)", expr("(y,w,w)"),
       [](const Alpha& a) { return "C4 C5 " + p("C7", a[3] + 1) + " " + p("C8", a[3]); }},
      {"closed.Q6", "(y,w,w,w)", expr("(y,w,w,w)"), fixed("C6 C7")},
      {"closed.U3", "(y^2,x)", expr("(y^2,x)"), fixed("C3^2 C4")},
      {"closed.U5", "(y^2,x,x)", expr("(y^2,x,x)"), fixed("C8")},
      {"closed.U6", "(y^2,x,x,x)", expr("(y^2,x,x,x)"), fixed("1")},
  };

  Report rep;
  for (bool xf : {true, false}) {
    const auto params = family(xf);
    for (const auto& f : xf ? x_forms : y_forms) {
      rep.add(timed_check(f.name, f.ref, [&](Check& c) {
        for (const auto& a : params) {
          Index w = word_of(a);
          auto b = binding0;
          b["w"] = w;
          std::string text = f.closed(a);
          Index want = theta::eval(parse_expr(text), b, G);
          Index got = f.direct(w, a);
          c.expect(got == want, "w=" + theta::name(w) + ": direct " + theta::name(got) +
                                    ", closed form " + text + " = " + theta::name(want));
        }
        c.counts["family"] = params.size();
      }));
    }
  }
  return rep;
}

}  // namespace sanovcat::verbal
