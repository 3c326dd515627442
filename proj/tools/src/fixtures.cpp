#include "nulldecomp/cli/fixtures.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "nulldecomp/cli/report.hpp"
#include "nulldecomp/graph_io.hpp"

namespace nulldecomp::cli {

using Json = nlohmann::ordered_json;

namespace {

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string as_text(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

std::set<std::string> as_set(const Json& j) {
  std::set<std::string> out;
  if (j.is_array()) {
    for (const Json& e : j) out.insert(as_text(e));
  }
  return out;
}

std::string set_text(const std::set<std::string>& s) {
  std::string out = "{";
  bool first = true;
  for (const std::string& e : s) {
    out += (first ? "" : ",") + e;
    first = false;
  }
  return out + "}";
}

class Comparer {
 public:
  Comparer(FixtureResult& result, std::string fixture) : result_(result), fixture_(std::move(fixture)) {}

  void value(const std::string& key, const Json& expected, const Json& got) {
    add(key, as_text(expected), got.is_null() && !expected.is_null() ? "(missing)" : as_text(got), expected == got);
  }

  void set(const std::string& key, const Json& expected, const Json& got) {
    const auto e = as_set(expected);
    const auto g = as_set(got);
    add(key, set_text(e), got.is_array() ? set_text(g) : "(missing)", got.is_array() && e == g);
  }

  void add(const std::string& key, std::string expected, std::string got, bool ok) {
    result_.rows.push_back({fixture_, key, std::move(expected), std::move(got), ok});
  }

 private:
  FixtureResult& result_;
  std::string fixture_;
};

Json lookup(const Json& j, const std::string& key) {
  auto it = j.find(key);
  return it == j.end() ? Json(nullptr) : *it;
}

void compare_parts(Comparer& cmp, const Json& expected, const Json& report) {
  const Json parts = lookup(report, "parts");
  for (std::size_t i = 0; i < expected.size(); ++i) {
    const Json& want = expected[i];
    const auto vertices = as_set(want["vertices"]);
    const std::string key = "parts" + set_text(vertices);
    const Json* found = nullptr;
    if (parts.is_array()) {
      for (const Json& p : parts) {
        if (as_set(p["vertices"]) == vertices) found = &p;
      }
    }
    if (!found) {
      cmp.add(key, "present", "(missing)", false);
      continue;
    }
    for (const char* field : {"supp", "core", "n_vertices"}) {
      if (want.contains(field)) cmp.set(key + "." + field, want[field], (*found)[field]);
    }
  }
}

void compare_pendants(Comparer& cmp, const Json& expected, const Json& report) {
  const Json pendants = lookup(report, "pendant_trees");
  for (const auto& [root, supp] : expected.items()) {
    Json got(nullptr);
    if (pendants.is_array()) {
      for (const Json& p : pendants) {
        if (as_text(p["root"]) == root) got = p["supp"];
      }
    }
    cmp.set("pendant_supp[" + root + "]", supp, got);
  }
}

void run_one(FixtureResult& result, const std::filesystem::path& edges) {
  const std::string name = edges.stem().string();
  Comparer cmp(result, name);
  ++result.fixtures;

  Report report;
  try {
    report = build_report(parse_edge_list(read_file(edges)), edges.filename().string(), true);
  } catch (const std::exception& e) {
    cmp.add("analyze", "report", e.what(), false);
    return;
  }
  const Json& r = report.json;
  const Json verify = lookup(r, "verify");
  cmp.add("verify", "consistent", report.mismatch ? "mismatch" : "consistent", !report.mismatch);
  if (verify.contains("skipped")) cmp.add("verify", "run", "skipped", false);

  auto expect_path = edges;
  expect_path.replace_extension(".expect.json");
  if (!std::filesystem::exists(expect_path)) return;
  const Json expected = Json::parse(read_file(expect_path));

  for (const auto& [key, want] : expected.items()) {
    if (key == "parts") {
      compare_parts(cmp, want, r);
    } else if (key == "pendant_supp") {
      compare_pendants(cmp, want, r);
    } else if (key == "eg") {
      Json got = verify.contains("eg_equals_supp") ? verify["eg_equals_supp"]["eg"] : Json(nullptr);
      cmp.set(key, want, got);
    } else if (want.is_array()) {
      cmp.set(key, want, lookup(r, key));
    } else {
      cmp.value(key, want, lookup(r, key));
    }
  }
}

}  // namespace

bool FixtureResult::ok() const {
  return std::all_of(rows.begin(), rows.end(), [](const FixtureRow& r) { return r.ok; });
}

FixtureResult run_fixtures(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) throw std::runtime_error("fixture directory not found: " + dir.string());
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.path().extension() == ".edges") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  FixtureResult result;
  for (const auto& f : files) run_one(result, f);
  return result;
}

void print_fixtures(std::ostream& out, const FixtureResult& result) {
  std::map<std::string, std::pair<std::size_t, std::size_t>> per;
  for (const FixtureRow& r : result.rows) {
    auto& [passed, total] = per[r.fixture];
    ++total;
    passed += r.ok;
  }
  for (const auto& [name, t] : per) {
    out << (t.first == t.second ? "ok    " : "FAIL  ") << name << " (" << t.first << "/" << t.second << " checks)\n";
  }
  if (result.ok()) {
    out << result.fixtures << " fixtures passed\n";
    return;
  }
  out << "\n" << std::left << std::setw(28) << "fixture" << std::setw(28) << "key" << std::setw(32) << "expected" << "got\n";
  for (const FixtureRow& r : result.rows) {
    if (r.ok) continue;
    out << std::setw(28) << r.fixture << std::setw(28) << r.key << std::setw(32) << r.expected << r.got << "\n";
  }
}

}  // namespace nulldecomp::cli
