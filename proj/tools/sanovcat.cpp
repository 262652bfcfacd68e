#include <iostream>

#include <CLI11.hpp>

#include "sanovcat/cli.hpp"

int main(int argc, char** argv) {
  using sanovcat::cli::RunConfig;
  RunConfig cfg;
  CLI::App app{"Verification pipeline for the free group of rank 2 of the variety of metabelian "
               "groups of exponent 4 and class at most 4, its verbal operations and the "
               "automorphisms they induce"};
  app.add_option("command", cfg.command, "Command to run")
      ->required()
      ->check(CLI::IsMember(sanovcat::cli::kCommands));
  app.add_option("--seed", cfg.seed, "Seed for every sampled check")->envname("SANOVCAT_SEED");
  app.add_option("--threads", cfg.threads, "Worker threads, 0 for all cores")
      ->envname("SANOVCAT_THREADS");
  app.add_option("--sample", cfg.sample, "Random triples per triple scan, 0 for exhaustive")
      ->envname("SANOVCAT_SAMPLE");
  app.add_option("--oracle-samples", cfg.oracle_samples, "Pairs checked against the series oracle")
      ->envname("SANOVCAT_ORACLE_SAMPLES");
  app.add_option("--identity-samples", cfg.identity_samples, "Samples per sampled identity")
      ->envname("SANOVCAT_IDENTITY_SAMPLES");
  app.add_option("--collection-words", cfg.collection_words, "Random words for the rewriting check")
      ->envname("SANOVCAT_COLLECTION_WORDS");
  app.add_option("--box-samples", cfg.box_samples, "N4 pairs for the quotient-map check")
      ->envname("SANOVCAT_BOX_SAMPLES");
  app.add_option("--naturality-samples", cfg.naturality_samples, "Endomorphisms for the naturality check")
      ->envname("SANOVCAT_NATURALITY_SAMPLES");
  app.add_option("--stage", cfg.stage, "search-words depth: 1, 2 or full")
      ->check(CLI::IsMember({"1", "2", "full"}))
      ->envname("SANOVCAT_STAGE");
  auto* alpha = app.add_option("--alpha", "check-applicable: the system x y C3^alpha");
  app.add_option("--word", cfg.word, "check-applicable: product word as an expression in x, y");
  app.add_option("--expr", cfg.expr, "Expression or equation to evaluate")->envname("SANOVCAT_EXPR");
  app.add_option("--json,--report", cfg.json_path, "Write the JSON report here")
      ->envname("SANOVCAT_JSON");
  app.add_option("--export", cfg.export_path, "build-theta: write the product table here")
      ->envname("SANOVCAT_EXPORT");
  app.add_option("--format", cfg.format, "Table format: raw or csv")
      ->check(CLI::IsMember({"raw", "csv"}))
      ->envname("SANOVCAT_FORMAT");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  if (alpha->count() > 0) cfg.alpha = alpha->as<int>();
  return sanovcat::cli::run(cfg, std::cout, std::cerr);
}
