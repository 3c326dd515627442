#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace nulldecomp::cli {

struct FixtureRow {
  std::string fixture;
  std::string key;
  std::string expected;
  std::string got;
  bool ok = true;
};

struct FixtureResult {
  std::size_t fixtures = 0;
  std::vector<FixtureRow> rows;

  bool ok() const;
};

/// Analyzes every `*.edges` file in `dir` with oracle verification and
/// compares the report against `<stem>.expect.json` when present.
///
/// Recognised expectation keys: shape, nullity, singular, supp, core,
/// s_forest, n_vertices, eg, alpha, nu, type, witness, pendant_supp (cycle
/// vertex -> support of its pendant tree) and parts (matched to report
/// parts by vertex set; supp, core and n_vertices compared when given).
/// Sets compare as sets of labels.
FixtureResult run_fixtures(const std::filesystem::path& dir);

/// One line per fixture, then an expected-vs-got table of every diff.
void print_fixtures(std::ostream& out, const FixtureResult& result);

}  // namespace nulldecomp::cli
