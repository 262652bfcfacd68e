#include "sanovcat/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>

#include "sanovcat/autcat.hpp"
#include "sanovcat/magnus.hpp"
#include "sanovcat/nilpotent.hpp"
#include "sanovcat/parallel.hpp"
#include "sanovcat/theta.hpp"
#include "sanovcat/verbal.hpp"

namespace sanovcat::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// --expr: an equation is checked, a bare expression is just evaluated.
template <class Eval, class Show>
Check expr_check(const std::string& group, const std::string& text, Eval eval, Show show) {
  return timed_check("expr." + group, "user expression evaluated in " + group, [&](Check& c) {
    c.counts["input"] = text;
    if (text.find('=') != std::string::npos) {
      Equation eq = parse_equation(text);
      auto lhs = eval(eq.lhs), rhs = eval(eq.rhs);
      c.counts["lhs"] = show(lhs);
      c.counts["rhs"] = show(rhs);
      c.expect(lhs == rhs, "lhs " + show(lhs) + " != rhs " + show(rhs));
    } else {
      c.counts["value"] = show(eval(parse_expr(text)));
    }
  });
}

Report verify_n4(const RunConfig& cfg) {
  Report r = n4::verify_identities(cfg.seed, cfg.identity_samples);
  r.append(n4::verify_collection(cfg.seed, cfg.collection_words));
  if (cfg.oracle_samples > 0) {
    r.append(magnus::oracle_check(n4::default_collector(), cfg.oracle_samples, 3, cfg.seed));
    r.add(magnus::injectivity_check(1));
  }
  if (!cfg.expr.empty())
    r.add(expr_check("N4", cfg.expr, [](const GroupExpr& e) { return n4::eval(e); },
                     [](const n4::Element& g) { return n4::to_string(g); }));
  return r;
}

Check theta_expr(const RunConfig& cfg) {
  return expr_check("G", cfg.expr, [](const GroupExpr& e) { return theta::eval(e, theta::standard_binding()); },
                    [](theta::Index g) { return theta::name(g); });
}

Report build_theta(const RunConfig& cfg) {
  Report r;
  r.add(timed_check("theta.build", "product table of G with its series", [&](Check& c) {
    const auto& g = theta::group();
    const auto& t = g.table();
    bool latin = true;
    for (int a = 0; a < theta::kOrder && latin; ++a) {
      std::vector<char> row(theta::kOrder, 0), col(theta::kOrder, 0);
      for (int b = 0; b < theta::kOrder; ++b) {
        row[t[a * theta::kOrder + b]] = 1;
        col[t[b * theta::kOrder + a]] = 1;
      }
      latin = std::count(row.begin(), row.end(), 1) == theta::kOrder &&
              std::count(col.begin(), col.end(), 1) == theta::kOrder;
    }
    c.expect(latin, "product table is not a Latin square");
    c.counts["order"] = theta::kOrder;
    auto chain = theta::lower_central_series(g);
    std::vector<std::size_t> sizes;
    for (const auto& s : chain) sizes.push_back(s.size());
    c.counts["series_sizes"] = sizes;
    c.expect(sizes == std::vector<std::size_t>{1024, 64, 32, 8, 1},
             "series sizes " + nlohmann::json(sizes).dump());
    const theta::Index basis[] = {theta::kX, theta::kY, theta::kC3, theta::kC4,
                                  theta::kC5, theta::kC6, theta::kC7};
    std::vector<int> orders;
    for (auto b : basis) orders.push_back(g.order(b));
    c.counts["basis_orders"] = orders;
    c.expect(orders == std::vector<int>{4, 4, 4, 2, 2, 2, 2}, "basis orders " + nlohmann::json(orders).dump());
    if (!cfg.export_path.empty()) {
      std::ofstream os(cfg.export_path, std::ios::binary);
      if (!os) throw std::runtime_error("cannot write " + cfg.export_path);
      theta::export_table(os, g, cfg.format == "csv" ? theta::TableFormat::csv : theta::TableFormat::raw);
      c.counts["export"] = cfg.export_path;
      c.counts["format"] = cfg.format;
    }
  }));
  if (!cfg.expr.empty()) r.add(theta_expr(cfg));
  return r;
}

Report verify_theta(const RunConfig& cfg) {
  Report r = theta::well_definedness_check(cfg.box_samples, cfg.seed);
  r.append(theta::verify_theta_membership());
  r.append(theta::verify_relations_are_consequences());
  if (!cfg.expr.empty()) r.add(theta_expr(cfg));
  return r;
}

Report verify_lemmas(const RunConfig& cfg) {
  Report r = theta::verify_lemma_suite(cfg.sample, cfg.seed);
  r.append(verbal::verify_operation_identities(cfg.identity_samples, cfg.seed));
  return r;
}

verbal::Stage parse_stage(const std::string& s) {
  if (s == "1") return verbal::Stage::unit;
  if (s == "2") return verbal::Stage::generators;
  if (s == "full") return verbal::Stage::full;
  throw UsageError("--stage must be 1, 2 or full");
}

Report search_words(const RunConfig& cfg) {
  const auto stage = parse_stage(cfg.stage);
  Report r = verbal::search_words(stage, cfg.sample, cfg.seed);
  if (stage != verbal::Stage::unit) r.append(verbal::verify_an2_closed_forms());
  return r;
}

Report check_applicable(const RunConfig& cfg) {
  verbal::WordSystem w;
  if (cfg.alpha && !cfg.word.empty()) throw UsageError("give --alpha or --word, not both");
  if (cfg.alpha) {
    w = verbal::standard_system(*cfg.alpha);
  } else if (!cfg.word.empty()) {
    w.product = theta::eval(parse_expr(cfg.word), theta::standard_binding());
  } else {
    throw UsageError("check-applicable needs --alpha or --word");
  }
  return verbal::applicability_report(w, cfg.sample, cfg.seed);
}

Report automorphisms(const RunConfig& cfg, std::size_t* quotient) {
  auto rep = autcat::quotient_report(cfg.naturality_samples, cfg.seed, cfg.sample);
  if (quotient) *quotient = rep.order_quotient;
  return rep.checks;
}

}  // namespace

nlohmann::json config_json(const RunConfig& c) {
  nlohmann::json j = {{"seed", c.seed},
                      {"sample", c.sample},
                      {"oracle_samples", c.oracle_samples},
                      {"identity_samples", c.identity_samples},
                      {"collection_words", c.collection_words},
                      {"box_samples", c.box_samples},
                      {"naturality_samples", c.naturality_samples},
                      {"stage", c.stage},
                      {"format", c.format}};
  if (c.alpha) j["alpha"] = *c.alpha;
  if (!c.word.empty()) j["word"] = c.word;
  if (!c.expr.empty()) j["expr"] = c.expr;
  if (!c.export_path.empty()) j["export"] = c.export_path;
  return j;
}

nlohmann::json report_json(const RunConfig& c, const Report& r) {
  return {{"command", c.command}, {"config", config_json(c)}, {"checks", to_json(r)}};
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (std::find(kCommands.begin(), kCommands.end(), cfg.command) == kCommands.end()) {
    err << "unknown command: " << cfg.command << '\n';
    return 2;
  }
  if (cfg.format != "raw" && cfg.format != "csv") {
    err << "--format must be raw or csv\n";
    return 2;
  }
  set_thread_count(cfg.threads);

  Report rep;
  std::optional<std::size_t> quotient;
  try {
    const auto& cmd = cfg.command;
    if (!cfg.expr.empty()) parse_equation(cfg.expr);
    if (cmd == "verify-n4") rep = verify_n4(cfg);
    if (cmd == "build-theta") rep = build_theta(cfg);
    if (cmd == "verify-theta") rep = verify_theta(cfg);
    if (cmd == "verify-lemmas") rep = verify_lemmas(cfg);
    if (cmd == "search-words") rep = search_words(cfg);
    if (cmd == "check-applicable") rep = check_applicable(cfg);
    if (cmd == "automorphism-report") {
      std::size_t q = 0;
      rep = automorphisms(cfg, &q);
      quotient = q;
    }
    if (cmd == "all") {
      RunConfig quiet = cfg;
      quiet.expr.clear();
      quiet.export_path.clear();
      rep = verify_n4(quiet);
      rep.append(build_theta(cfg));
      rep.append(verify_theta(quiet));
      rep.append(verify_lemmas(quiet));
      quiet.stage = "full";
      rep.append(search_words(quiet));
      std::size_t q = 0;
      rep.append(automorphisms(quiet, &q));
      quotient = q;
    }
  } catch (const UsageError& e) {
    err << e.what() << '\n';
    return 2;
  } catch (const ParseError& e) {
    err << "bad expression: " << e.what() << '\n';
    return 2;
  } catch (const UnboundVariable& e) {
    err << "bad expression: " << e.what() << '\n';
    return 2;
  }

  print_summary(out, rep);
  if (!cfg.json_path.empty()) {
    std::ofstream os(cfg.json_path);
    if (!os) {
      err << "cannot write " << cfg.json_path << '\n';
      return 2;
    }
    os << report_json(cfg, rep).dump(2) << '\n';
  }
  for (const auto& c : rep.checks)
    if (!c.passed) {
      err << "first failure: " << c.name;
      if (!c.witnesses.empty()) err << ": " << c.witnesses.front();
      err << '\n';
      break;
    }
  if (const Check* b = rep.find("theta.build"); b && cfg.command == "build-theta")
    out << "|G| = " << b->counts.value("order", 0) << '\n';
  if (quotient) out << "order of A/Y = " << *quotient << '\n';
  return rep.all_passed() ? 0 : 1;
}

}  // namespace sanovcat::cli
