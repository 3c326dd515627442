#include "nulldecomp/cli/verify.hpp"

#include <algorithm>
#include <atomic>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "nulldecomp/graph_io.hpp"
#include "nulldecomp/linalg.hpp"
#include "nulldecomp/oracles.hpp"
#include "nulldecomp/random_graphs.hpp"
#include "nulldecomp/tree_decomp.hpp"
#include "nulldecomp/unicyclic.hpp"

namespace nulldecomp::cli {

namespace {

std::string pair_text(std::size_t formula, std::size_t oracle) {
  return "formula " + std::to_string(formula) + ", oracle " + std::to_string(oracle);
}

void expect_equal(Checks& out, const std::string& name, std::size_t formula, std::size_t oracle) {
  out.push_back({name, formula == oracle, formula == oracle ? "" : pair_text(formula, oracle)});
}

std::string set_text(const VertexSet& vs) {
  std::string s = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? "," : "") + std::to_string(vs[i]);
  return s + "}";
}

// A*x = 0 recomputed from the edge list, independent of the matrix code.
Check kernel_audit(const Graph& g) {
  const NullBasis basis = kernel_basis(adjacency_matrix(g));
  for (std::size_t k = 0; k < basis.vectors.size(); ++k) {
    const RationalVector& x = basis.vectors[k];
    if (x.size() != g.order()) return {"exactness", false, "basis vector of wrong length"};
    if (std::all_of(x.begin(), x.end(), [](const Rational& q) { return q == 0; })) {
      return {"exactness", false, "zero basis vector"};
    }
    for (VertexId v = 0; v < g.order(); ++v) {
      Rational sum = 0;
      for (VertexId w : g.neighbors(v)) sum += x[w];
      if (sum != 0) {
        return {"exactness", false, "(A x)_" + std::to_string(v) + " = " + sum.get_str() + " for basis vector " +
                                        std::to_string(k)};
      }
    }
  }
  return {"exactness", true, ""};
}

std::size_t mis_size(const Graph& g) { return oracles::max_independent_set(g).size; }

// alpha of g with v forced in: 1 + alpha(g - N[v]).
std::size_t alpha_with(const Graph& g, VertexId v) {
  VertexSet closed(g.neighbors(v).begin(), g.neighbors(v).end());
  closed.push_back(v);
  return 1 + mis_size(remove_vertices(g, make_vertex_set(std::move(closed))).graph);
}

std::size_t alpha_without(const Graph& g, VertexId v) { return mis_size(remove_vertices(g, {v}).graph); }

Check certificate_check(const Graph& g, const VertexSet& is, std::size_t alpha, const Matching& m, std::size_t nu) {
  if (!is_independent_set(g, is)) return {"certificates", false, "independent set has an internal edge"};
  if (is.size() != alpha) return {"certificates", false, "independent set size " + pair_text(alpha, is.size())};
  if (!is_valid_matching(g, m)) return {"certificates", false, "matching is not valid"};
  if (m.size() != nu) return {"certificates", false, "matching size " + pair_text(nu, m.size())};
  return {"certificates", true, ""};
}

Check berge_check(const Graph& g, const Matching& m) {
  if (auto path = oracles::find_augmenting_path(g, m)) {
    return {"berge", false, "augmenting path " + set_text(*path)};
  }
  return {"berge", true, ""};
}

}  // namespace

Kind parse_kind(const std::string& text) {
  if (text == "tree") return Kind::Tree;
  if (text == "unicyclic") return Kind::Unicyclic;
  if (text == "cycle") return Kind::Cycle;
  throw std::invalid_argument("unknown kind '" + text + "'");
}

Checks check_tree(const Graph& t) {
  Checks out;
  const NullDecomposition d = decompose(t);
  const std::size_t n = t.order();
  const std::size_t alpha = mis_size(t);
  const Matching max_m = oracles::max_matching(t);
  const std::size_t nu = max_m.size();
  const std::size_t eta = nullity(t);

  expect_equal(out, "alpha", tree_alpha(d), alpha);
  expect_equal(out, "nu", tree_nu(d), nu);

  const VertexSet eg = oracles::eg_set(t);
  out.push_back({"eg_equals_supp", eg == d.supp, eg == d.supp ? "" : "EG " + set_text(eg) + ", Supp " + set_text(d.supp)});
  out.push_back({"supp_independent", is_independent_set(t, d.supp), set_text(d.supp)});

  Check core{"core_exclusion", true, ""};
  for (VertexId c : d.core) {
    if (alpha_with(t, c) >= alpha) core = {"core_exclusion", false, "core vertex " + std::to_string(c) + " lies in a maximum independent set"};
  }
  out.push_back(core);

  Check flex{"n_vertex_flexibility", true, ""};
  for (VertexId v : d.n_forest) {
    if (alpha_with(t, v) != alpha) flex = {"n_vertex_flexibility", false, "no maximum independent set contains " + std::to_string(v)};
    if (alpha_without(t, v) != alpha) flex = {"n_vertex_flexibility", false, "every maximum independent set contains " + std::to_string(v)};
  }
  out.push_back(flex);

  out.push_back(kernel_audit(t));
  expect_equal(out, "nullity_vs_matching", eta, n - 2 * nu);

  const bool pm = oracles::has_perfect_matching(t);
  const bool saturating = 2 * nu == n;
  out.push_back({"perfect_matching_triangle", pm == saturating && saturating == (eta == 0),
                 "greedy " + std::to_string(pm) + ", oracle " + std::to_string(saturating) + ", nullity " + std::to_string(eta)});
  expect_equal(out, "alpha_plus_nu", alpha + nu, n);

  Check mismatched{"mismatched_vs_matched", true, ""};
  if (is_tree(t)) {
    for (VertexId v = 0; v < n; ++v) {
      if (oracles::mismatched_in(t, v) == root_is_matched(t, v)) {
        mismatched = {"mismatched_vs_matched", false, "vertex " + std::to_string(v)};
      }
    }
  }
  out.push_back(mismatched);

  const VertexSet is = decomposition_independent_set(t, d);
  const Matching m = decomposition_matching(t, d);
  Check berge = berge_check(t, max_m);
  if (berge.ok) berge = berge_check(t, m);
  out.push_back(berge);
  out.push_back(certificate_check(t, is, alpha, m, nu));

  for (Check& c : out) {
    if (c.ok) c.detail.clear();
  }
  return out;
}

Checks check_unicyclic(const Graph& g) {
  Checks out;
  const UnicyclicAnalysis a = analyze(g);
  const std::size_t eta = nullity(g);
  const std::size_t alpha = mis_size(g);
  const std::size_t nu = oracles::max_matching(g).size();

  expect_equal(out, "alpha", a.alpha, alpha);
  expect_equal(out, "nu", a.nu, nu);
  const SingularityVerdict sv = is_singular(g);
  out.push_back({"singular", sv.singular == (eta > 0),
                 "verdict " + std::to_string(sv.singular) + " (" + std::string(to_string(sv.reason)) + "), nullity " + std::to_string(eta)});
  expect_equal(out, "nullity_composition", unicyclic_nullity(g), eta);

  // Type from the EG oracle on each pendant tree.
  const CycleInfo cycle = find_cycle(g);
  std::vector<VertexId> oracle_matched;
  for (const PendantTree& p : pendant_trees(g, cycle)) {
    if (!oracles::mismatched_in(p.tree.graph, p.local_root())) oracle_matched.push_back(p.root);
  }
  std::sort(oracle_matched.begin(), oracle_matched.end());
  const TypeVerdict tv = classify_type(g);
  const bool type_ok = oracle_matched.empty() ? tv.kind == UnicyclicType::TypeII
                                              : tv.kind == UnicyclicType::TypeI && tv.witness == oracle_matched.front();
  out.push_back({"type_witness", type_ok && matched_cycle_vertices(g) == oracle_matched,
                 "oracle matched roots " + set_text(oracle_matched)});

  Check neighbour{"neighbour_support", true, ""};
  if (tv.kind == UnicyclicType::TypeII) {
    const Subgraph forest = remove_vertices(g, cycle.vertices);
    const VertexSet supp = forest.lift(support(forest.graph));
    for (VertexId v : cycle.vertices) {
      for (VertexId u : g.neighbors(v)) {
        if (cycle.contains(u)) continue;
        if (std::binary_search(supp.begin(), supp.end(), u)) {
          neighbour = {"neighbour_support", false, "neighbour " + std::to_string(u) + " of " + std::to_string(v) + " is in Supp(G - C)"};
        }
      }
    }
  }
  out.push_back(neighbour);

  Check witness{"witness_independence", true, ""};
  for (VertexId w : oracle_matched) {
    const std::size_t aw = alpha_type1(g, w);
    const std::size_t nw = nu_type1(g, w);
    const bool sw = is_singular(g, w).singular;
    if (aw != alpha || nw != nu || sw != (eta > 0)) {
      witness = {"witness_independence", false, "witness " + std::to_string(w) + ": alpha " + std::to_string(aw) +
                                                    ", nu " + std::to_string(nw) + ", singular " + std::to_string(sw)};
    }
  }
  out.push_back(witness);

  Check exact = kernel_audit(g);
  for (const PartDecomposition& p : a.parts) {
    if (!exact.ok) break;
    exact = kernel_audit(induced_subgraph(g, p.vertices).graph);
  }
  out.push_back(exact);

  out.push_back(berge_check(g, a.matching));
  out.push_back(certificate_check(g, a.independent_set, alpha, a.matching, nu));

  for (Check& c : out) {
    if (c.ok) c.detail.clear();
  }
  return out;
}

Checks check_cycle(const Graph& c) {
  Checks out;
  const std::size_t n = c.order();
  const bool four = n % 4 == 0;
  const std::size_t eta = nullity(c);
  const SingularityVerdict sv = is_singular(c);
  out.push_back({"cycle_law", sv.singular == four && eta == (four ? 2u : 0u),
                 "n " + std::to_string(n) + ", verdict " + std::to_string(sv.singular) + ", nullity " + std::to_string(eta)});
  const UnicyclicAnalysis a = analyze(c);
  expect_equal(out, "alpha", a.alpha, mis_size(c));
  expect_equal(out, "nu", a.nu, oracles::max_matching(c).size());
  out.push_back(kernel_audit(c));
  out.push_back(certificate_check(c, a.independent_set, n / 2, a.matching, n / 2));
  for (Check& ch : out) {
    if (ch.ok) ch.detail.clear();
  }
  return out;
}

Graph make_instance(const VerifyOptions& opts, std::size_t index) {
  const std::size_t lo = opts.kind == Kind::Tree ? std::max<std::size_t>(opts.min_n, 1) : std::max<std::size_t>(opts.min_n, 3);
  const std::size_t hi = std::max(lo, opts.max_n);
  if (opts.kind == Kind::Cycle) return cycle_graph(lo + index % (hi - lo + 1));

  Rng rng = instance_rng(opts.seed, index);
  if (opts.kind == Kind::Tree) return random_tree(rng, std::uniform_int_distribution<std::size_t>(lo, hi)(rng));

  // The triangle is the only unicyclic graph on 3 vertices and is Type II.
  const UnicyclicType want = index % 2 == 0 ? UnicyclicType::TypeI : UnicyclicType::TypeII;
  const std::size_t n = std::uniform_int_distribution<std::size_t>(want == UnicyclicType::TypeI ? std::max<std::size_t>(lo, 4) : lo,
                                                                   std::max<std::size_t>(hi, 4))(rng);
  return random_unicyclic(rng, n, [want](const Graph& g) { return classify_type(g).kind == want; });
}

VerifySummary run_verify(const VerifyOptions& opts) {
  struct Outcome {
    Checks checks;
    std::vector<std::string> coverage;
    std::string graph;
  };
  std::vector<Outcome> outcomes(opts.count);

  auto work = [&](std::size_t i) {
    Outcome& o = outcomes[i];
    try {
      const Graph g = make_instance(opts, i);
      o.graph = to_edge_list(g);
      switch (opts.kind) {
        case Kind::Tree: o.checks = check_tree(g); break;
        case Kind::Unicyclic: o.checks = check_unicyclic(g); break;
        case Kind::Cycle: o.checks = check_cycle(g); break;
      }
      if (opts.kind != Kind::Tree) {
        o.coverage.push_back(classify_type(g).kind == UnicyclicType::TypeI ? "type I" : "type II");
      }
      o.coverage.push_back(nullity(g) > 0 ? "singular" : "nonsingular");
    } catch (const std::exception& e) {
      o.checks.push_back({"exception", false, e.what()});
    }
  };

  const std::size_t threads = std::max<std::size_t>(1, std::min(opts.threads, opts.count));
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < opts.count; i = next++) work(i);
    });
  }
  for (std::thread& t : pool) t.join();

  VerifySummary s;
  s.instances = opts.count;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    for (const Check& c : outcomes[i].checks) {
      auto& [passed, checked] = s.tallies[c.invariant];
      ++checked;
      if (c.ok) {
        ++passed;
      } else {
        s.failures.push_back({i, c.invariant, c.detail, outcomes[i].graph});
      }
    }
    for (const std::string& label : outcomes[i].coverage) ++s.coverage[label];
  }
  return s;
}

void print_summary(std::ostream& out, const VerifySummary& s) {
  out << "instances: " << s.instances << "\n";
  for (const auto& [name, tally] : s.tallies) {
    out << name << ": " << tally.first << "/" << tally.second << (tally.first == tally.second ? " ok" : " FAILED") << "\n";
  }
  if (!s.coverage.empty()) {
    out << "coverage:";
    bool first = true;
    for (const auto& [label, count] : s.coverage) {
      out << (first ? " " : ", ") << label << " " << count;
      first = false;
    }
    out << "\n";
  }
  for (const Failure& f : s.failures) {
    out << "\ncounterexample #" << f.index << " (" << f.invariant << "): " << f.detail << "\n" << f.graph;
  }
}

}  // namespace nulldecomp::cli
