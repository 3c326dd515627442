#include "nulldecomp/cli/commands.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "nulldecomp/cli/fixtures.hpp"
#include "nulldecomp/cli/report.hpp"
#include "nulldecomp/graph_io.hpp"
#include "nulldecomp/oracles.hpp"

namespace nulldecomp::cli {

int cmd_analyze(const AnalyzeOptions& opts, std::ostream& out, std::ostream& err) {
  std::string text;
  std::string input = opts.path;
  if (opts.path.empty() || opts.path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
    input = "<stdin>";
  } else {
    std::ifstream in(opts.path, std::ios::binary);
    if (!in) {
      err << "error: cannot open " << opts.path << "\n";
      return kParseFailure;
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }

  Graph g;
  try {
    if (opts.format == "g6") {
      std::string line = text.substr(0, text.find('\n'));
      if (!line.empty() && line.back() == '\r') line.pop_back();
      g = parse_graph6(line);
    } else {
      g = parse_edge_list(text);
    }
  } catch (const Error& e) {
    err << input << ": " << e.what() << "\n";
    return kParseFailure;
  }

  Report report;
  try {
    report = build_report(g, input, opts.verify);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotUnicyclic && e.code() != ErrorCode::EmptyGraph) throw;
    err << input << ": unsupported shape: " << e.what() << "\n";
    return kUnsupportedShape;
  }

  out << report.json.dump(2) << "\n";
  if (!opts.dot.empty()) {
    std::ofstream dot(opts.dot, std::ios::binary);
    if (!dot) {
      err << "error: cannot write " << opts.dot << "\n";
      return kParseFailure;
    }
    dot << export_dot(g, report.roles);
  }
  return report.mismatch ? kMismatch : kOk;
}

int cmd_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err) {
  if (opts.max_n > oracles::size_limit()) {
    err << "error: --max-n " << opts.max_n << " exceeds the oracle limit " << oracles::size_limit()
        << " (raise NULLDECOMP_MAX_N)\n";
    return kParseFailure;
  }
  const VerifySummary summary = run_verify(opts);
  print_summary(out, summary);
  return summary.ok() ? kOk : kMismatch;
}

int cmd_fixtures(const std::filesystem::path& dir, std::ostream& out, std::ostream& err) {
  try {
    const FixtureResult result = run_fixtures(dir);
    print_fixtures(out, result);
    return result.ok() ? kOk : kMismatch;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kParseFailure;
  }
}

int cmd_generate(const GenerateOptions& opts, std::ostream& out) {
  for (std::size_t i = 0; i < opts.corpus.count; ++i) {
    const Graph g = make_instance(opts.corpus, i);
    if (opts.format == "edges") {
      out << (i ? "\n" : "") << to_edge_list(g);
    } else {
      out << to_graph6(g) << "\n";
    }
  }
  return kOk;
}

}  // namespace nulldecomp::cli
