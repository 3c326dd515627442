#include "nulldecomp/cli/report.hpp"

#include <stdexcept>

#include "nulldecomp/linalg.hpp"
#include "nulldecomp/oracles.hpp"
#include "nulldecomp/tree_decomp.hpp"
#include "nulldecomp/unicyclic.hpp"

namespace nulldecomp::cli {

using Json = nlohmann::ordered_json;

namespace {

Json matching_json(const Graph& g, const Matching& m) {
  Json out = Json::array();
  for (const Edge& e : m.edges) out.push_back(Json::array({label(g, e.u), label(g, e.v)}));
  return out;
}

Json compare(Report& r, std::size_t formula, std::size_t oracle) {
  const bool ok = formula == oracle;
  r.mismatch |= !ok;
  return Json{{"formula", formula}, {"oracle", oracle}, {"ok", ok}};
}

Json compare_flag(Report& r, bool formula, bool oracle) {
  const bool ok = formula == oracle;
  r.mismatch |= !ok;
  return Json{{"formula", formula}, {"oracle", oracle}, {"ok", ok}};
}

void assign_roles(Report& r, const NullDecomposition& d) {
  for (VertexId v : d.supp) r.roles[v] = VertexRole::Support;
  for (VertexId v : d.core) r.roles[v] = VertexRole::Core;
  for (VertexId v : d.n_forest) r.roles[v] = VertexRole::NVertex;
}

void put_decomposition(Json& j, const Graph& g, const NullDecomposition& d) {
  j["supp"] = labels(g, d.supp);
  j["core"] = labels(g, d.core);
  j["s_forest"] = labels(g, d.s_forest);
  j["n_vertices"] = labels(g, d.n_forest);
}

void verify_common(Report& r, Json& v, const Graph& g, std::size_t alpha, std::size_t nu, const Matching& m) {
  v["alpha"] = compare(r, alpha, oracles::max_independent_set(g).size);
  v["nu"] = compare(r, nu, oracles::max_matching(g).size());
  const bool berge = !oracles::find_augmenting_path(g, m).has_value();
  r.mismatch |= !berge;
  v["no_augmenting_path"] = berge;
}

void forest_report(Report& r, const Graph& g, bool verify) {
  Json& j = r.json;
  const NullDecomposition d = decompose(g);
  const std::size_t eta = nullity(g);
  const std::size_t alpha = tree_alpha(d);
  const std::size_t nu = tree_nu(d);
  const VertexSet is = decomposition_independent_set(g, d);
  const Matching m = decomposition_matching(g, d);
  if (is.size() != alpha || !is_independent_set(g, is)) throw std::logic_error("independent set certificate invalid");
  if (m.size() != nu || !is_valid_matching(g, m)) throw std::logic_error("matching certificate invalid");

  j["nullity"] = eta;
  j["singular"] = eta > 0;
  put_decomposition(j, g, d);
  j["alpha"] = alpha;
  j["nu"] = nu;
  j["independent_set"] = labels(g, is);
  j["matching"] = matching_json(g, m);
  assign_roles(r, d);

  if (!verify) return;
  Json v;
  try {
    verify_common(r, v, g, alpha, nu, m);
    const VertexSet eg = oracles::eg_set(g);
    const bool eg_ok = eg == d.supp;
    r.mismatch |= !eg_ok;
    v["eg_equals_supp"] = Json{{"eg", labels(g, eg)}, {"ok", eg_ok}};
    v["singular"] = compare_flag(r, eta > 0, !oracles::has_perfect_matching(g));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::TooLarge) throw;
    v = Json{{"skipped", e.what()}};
  }
  v["mismatch"] = r.mismatch;
  j["verify"] = v;
}

void unicyclic_report(Report& r, const Graph& g, bool verify) {
  Json& j = r.json;
  const UnicyclicAnalysis a = analyze(g);
  const std::size_t eta = nullity(g);

  j["pure_cycle"] = a.pure_cycle;
  Json cycle = Json::array();
  for (VertexId v : a.cycle.vertices) cycle.push_back(label(g, v));
  j["cycle"] = cycle;
  j["type"] = to_string(a.type.kind);
  j["witness"] = a.type.witness ? label(g, *a.type.witness) : Json(nullptr);
  j["nullity"] = eta;
  j["composed_nullity"] = a.nullity;
  j["singular"] = a.singularity.singular;
  j["singularity_reason"] = to_string(a.singularity.reason);
  j["alpha"] = a.alpha;
  j["nu"] = a.nu;
  j["independent_set"] = labels(g, a.independent_set);
  j["matching"] = matching_json(g, a.matching);

  Json pendants = Json::array();
  for (const PendantSummary& p : a.pendants) {
    pendants.push_back(Json{{"root", label(g, p.root)},
                            {"vertices", labels(g, p.vertices)},
                            {"supp", labels(g, p.supp)},
                            {"root_matched", p.root_matched}});
  }
  j["pendant_trees"] = pendants;

  Json parts = Json::array();
  for (const PartDecomposition& p : a.parts) {
    Json part{{"kind", to_string(p.kind)}, {"anchor", label(g, p.anchor)}, {"vertices", labels(g, p.vertices)}};
    put_decomposition(part, g, p.decomposition);
    parts.push_back(part);
    assign_roles(r, p.decomposition);
  }
  j["parts"] = parts;

  if (!verify) return;
  Json v;
  v["nullity"] = compare(r, a.nullity, eta);
  v["singular"] = compare_flag(r, a.singularity.singular, eta > 0);
  try {
    verify_common(r, v, g, a.alpha, a.nu, a.matching);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::TooLarge) throw;
    v["skipped"] = e.what();
  }
  v["mismatch"] = r.mismatch;
  j["verify"] = v;
}

}  // namespace

Json label(const Graph& g, VertexId v) {
  if (g.has_names()) return g.name(v);
  return v;
}

Json labels(const Graph& g, const VertexSet& vs) {
  Json out = Json::array();
  for (VertexId v : vs) out.push_back(label(g, v));
  return out;
}

Report build_report(const Graph& g, const std::string& input, bool verify) {
  const Shape shape = classify_shape(g);
  if (shape == Shape::Other) throw Error(ErrorCode::NotUnicyclic, "graph is neither a forest nor unicyclic");

  Report r;
  Json& j = r.json;
  j["input"] = input;
  j["n"] = g.order();
  j["m"] = g.size();
  j["shape"] = to_string(shape);
  if (g.has_names()) j["names"] = g.names();

  if (shape == Shape::Tree || shape == Shape::Forest) {
    forest_report(r, g, verify);
  } else {
    unicyclic_report(r, g, verify);
  }
  return r;
}

}  // namespace nulldecomp::cli
