#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "nulldecomp/graph.hpp"

namespace nulldecomp::cli {

enum class Kind { Tree, Unicyclic, Cycle };

/// Throws std::invalid_argument on anything but tree, unicyclic or cycle.
Kind parse_kind(const std::string& text);

struct Check {
  std::string invariant;
  bool ok = true;
  std::string detail;
};

using Checks = std::vector<Check>;

/// Tree invariants: formulas against oracles, EG = Supp, support
/// independence, core exclusion, N-vertex flexibility, exact kernel,
/// perfect matching vs nullity, alpha + nu = n, Berge, certificates.
Checks check_tree(const Graph& tree);

/// Unicyclic invariants: formulas against oracles, singularity verdict,
/// nullity composition, type witness vs the EG oracle, neighbour-support
/// property for Type II, witness independence, exact kernel, Berge,
/// certificates.
Checks check_unicyclic(const Graph& g);

/// Cycle law plus formulas against oracles.
Checks check_cycle(const Graph& c);

struct VerifyOptions {
  Kind kind = Kind::Tree;
  std::size_t count = 100;
  std::size_t min_n = 3;
  std::size_t max_n = 16;
  std::uint64_t seed = 1;
  std::size_t threads = 1;
};

/// Instance `index` of a run. Cycles step through min_n..max_n in order;
/// unicyclic instances alternate between Type I (even index) and Type II
/// (odd index) by rejection sampling; Type I instances have at least 4
/// vertices.
Graph make_instance(const VerifyOptions& opts, std::size_t index);

struct Failure {
  std::size_t index = 0;
  std::string invariant;
  std::string detail;
  std::string graph;  // edge list
};

struct VerifySummary {
  std::size_t instances = 0;
  /// invariant -> (passed, checked)
  std::map<std::string, std::pair<std::size_t, std::size_t>> tallies;
  /// Corpus composition, e.g. "type I", "singular".
  std::map<std::string, std::size_t> coverage;
  std::vector<Failure> failures;  // sorted by index

  bool ok() const { return failures.empty(); }
};

VerifySummary run_verify(const VerifyOptions& opts);

void print_summary(std::ostream& out, const VerifySummary& summary);

}  // namespace nulldecomp::cli
