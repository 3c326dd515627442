#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "nulldecomp/cli/commands.hpp"
#include "nulldecomp/cli/report.hpp"

#ifndef NULLDECOMP_FIXTURE_DIR
#define NULLDECOMP_FIXTURE_DIR "fixtures"
#endif

namespace {

void add_corpus_options(CLI::App* cmd, nulldecomp::cli::VerifyOptions& opts, std::string& kind) {
  cmd->add_option("--kind", kind, "tree, unicyclic or cycle")
      ->check(CLI::IsMember({"tree", "unicyclic", "cycle"}))
      ->default_val("tree");
  cmd->add_option("--count", opts.count, "number of instances")->default_val(100);
  cmd->add_option("--min-n", opts.min_n, "smallest order")->default_val(3);
  cmd->add_option("--max-n", opts.max_n, "largest order")->default_val(16);
  cmd->add_option("--seed", opts.seed, "base seed")->default_val(1);
}

}  // namespace

int main(int argc, char** argv) {
  using namespace nulldecomp::cli;

  CLI::App app{"Null decomposition of trees and unicyclic graphs"};
  app.require_subcommand(1);

  AnalyzeOptions analyze;
  auto* a = app.add_subcommand("analyze", "JSON report for one graph");
  a->add_option("--format", analyze.format, "edges or g6")->check(CLI::IsMember({"edges", "g6"}))->default_val("edges");
  a->add_flag("--verify", analyze.verify, "compare formulas against brute-force oracles");
  a->add_option("--dot", analyze.dot, "write a role-annotated Graphviz file");
  a->add_option("path", analyze.path, "input file (stdin when omitted)");

  VerifyOptions verify;
  std::string verify_kind;
  auto* v = app.add_subcommand("verify", "random formula-vs-oracle sweep");
  add_corpus_options(v, verify, verify_kind);
  v->add_option("--threads", verify.threads, "worker threads")->default_val(std::max(1u, std::thread::hardware_concurrency()));

  std::string fixture_dir = NULLDECOMP_FIXTURE_DIR;
  auto* f = app.add_subcommand("fixtures", "replay the recorded worked examples");
  f->add_option("--dir", fixture_dir, "fixture directory")->default_val(fixture_dir);

  GenerateOptions generate;
  std::string generate_kind;
  auto* g = app.add_subcommand("generate", "print a random corpus");
  add_corpus_options(g, generate.corpus, generate_kind);
  g->add_option("--format", generate.format, "g6 or edges")->check(CLI::IsMember({"g6", "edges"}))->default_val("g6");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kParseFailure;
  }

  try {
    if (a->parsed()) return cmd_analyze(analyze, std::cout, std::cerr);
    if (v->parsed()) {
      verify.kind = parse_kind(verify_kind);
      return cmd_verify(verify, std::cout, std::cerr);
    }
    if (f->parsed()) return cmd_fixtures(fixture_dir, std::cout, std::cerr);
    generate.corpus.kind = parse_kind(generate_kind);
    return cmd_generate(generate, std::cout);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kMismatch;
  }
}
