#include "kkit/io.hpp"

#include <fstream>
#include <stdexcept>

namespace kkit::io {
namespace {

[[noreturn]] void bad(const std::string& field, const std::string& why) {
  throw std::invalid_argument("field '" + field + "': " + why);
}

const json& require(const json& j, const std::string& key) {
  if (!j.is_object()) bad(key, "expected an enclosing JSON object");
  auto it = j.find(key);
  if (it == j.end()) bad(key, "missing");
  return *it;
}

int as_int(const json& j, const std::string& field) {
  if (!j.is_number_integer()) bad(field, "expected an integer");
  return j.get<int>();
}

std::vector<int> int_list(const json& j, const std::string& field) {
  if (!j.is_array()) bad(field, "expected an array");
  std::vector<int> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(as_int(j[i], field + "[" + std::to_string(i) + "]"));
  return out;
}

}  // namespace

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open input file '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("malformed JSON in '" + path + "': " + e.what());
  }
}

json to_json(const Hypergraph& h) {
  json edges = json::array();
  for (VertexMask e : h.edges()) edges.push_back(vertices_of(e));
  return {{"n", h.vertex_count()}, {"edges", edges}};
}

Hypergraph hypergraph_from_json(const json& j) {
  const int n = as_int(require(j, "n"), "n");
  const json& edges = require(j, "edges");
  if (!edges.is_array()) bad("edges", "expected an array of vertex lists");
  std::vector<std::vector<int>> lists;
  for (std::size_t i = 0; i < edges.size(); ++i) lists.push_back(int_list(edges[i], "edges[" + std::to_string(i) + "]"));
  try {
    return Hypergraph::from_lists(n, lists);
  } catch (const std::invalid_argument& e) {
    bad("edges", e.what());
  }
}

json to_json(const SignedVector& x) {
  return {{"p", x.order()}, {"x", std::vector<int>(x.entries().begin(), x.entries().end())}};
}

SignedVector signed_vector_from_json(const json& j) {
  const int p = as_int(require(j, "p"), "p");
  const auto x = int_list(require(j, "x"), "x");
  std::vector<std::uint8_t> entries;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] < 0 || x[i] > p) bad("x[" + std::to_string(i) + "]", "must lie in [0, p]");
    entries.push_back(static_cast<std::uint8_t>(x[i]));
  }
  try {
    return SignedVector(p, std::move(entries));
  } catch (const std::invalid_argument& e) {
    bad("p", e.what());
  }
}

json to_json(const ColorFrequencyMap& tau) {
  json table = json::object();
  for (const auto& [id, v] : tau.table()) table[std::to_string(id)] = v;
  return {{"r", tau.bound()}, {"default", tau.default_value()}, {"table", table}};
}

ColorFrequencyMap tau_from_json(const json& j) {
  const int r = as_int(require(j, "r"), "r");
  const int def = as_int(require(j, "default"), "default");
  std::map<ColorId, int> table;
  if (j.contains("table")) {
    const json& t = j.at("table");
    if (!t.is_object()) bad("table", "expected an object of color id -> value");
    for (const auto& [key, value] : t.items()) {
      std::size_t used = 0;
      long id = -1;
      try {
        id = std::stol(key, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != key.size() || id < 1) bad("table", "key '" + key + "' is not a positive color id");
      table[static_cast<ColorId>(id)] = as_int(value, "table." + key);
    }
  }
  try {
    return ColorFrequencyMap(r, def, std::move(table));
  } catch (const std::invalid_argument& e) {
    bad("table", e.what());
  }
}

json to_json(const EdgeColoring& c) {
  return {{"colors", std::vector<ColorId>(c.colors().begin(), c.colors().end())}};
}

EdgeColoring coloring_from_json(const json& j, const Hypergraph& target) {
  const auto colors = int_list(require(j, "colors"), "colors");
  std::vector<ColorId> ids;
  for (std::size_t i = 0; i < colors.size(); ++i) {
    if (colors[i] < 1) bad("colors[" + std::to_string(i) + "]", "color ids start at 1");
    ids.push_back(static_cast<ColorId>(colors[i]));
  }
  try {
    return EdgeColoring(target, std::move(ids));
  } catch (const std::invalid_argument& e) {
    bad("colors", e.what());
  }
}

json correspondence_table(const KneserHypergraph& kg) {
  json out = json::array();
  for (std::size_t i = 0; i < kg.source_edges.size(); ++i)
    out.push_back({{"vertex", i + 1}, {"edge", vertices_of(kg.source_edges[i])}});
  return out;
}

json to_json(const LambdaMap& lambda) {
  json entries = json::array();
  const SignedSpace& space = lambda.space();
  for (std::size_t code = 1; code < space.size(); ++code) {
    const LambdaValue v = lambda.at(code);
    const SignedVector x = space.decode(code);
    entries.push_back({{"x", std::vector<int>(x.entries().begin(), x.entries().end())}, {"l1", v.sign}, {"l2", v.level}});
  }
  return {{"n", lambda.dimension()},
          {"p", lambda.order()},
          {"m", lambda.levels()},
          {"gamma", std::vector<int>(lambda.gamma().begin(), lambda.gamma().end())},
          {"entries", entries}};
}

LambdaMap lambda_from_json(const json& j) {
  const int n = as_int(require(j, "n"), "n");
  const int p = as_int(require(j, "p"), "p");
  const int m = as_int(require(j, "m"), "m");
  const auto gamma = int_list(require(j, "gamma"), "gamma");
  if (static_cast<int>(gamma.size()) != m) bad("gamma", "has " + std::to_string(gamma.size()) + " entries, m = " + std::to_string(m));
  LambdaMap lambda = [&] {
    try {
      return LambdaMap(n, p, gamma);
    } catch (const std::invalid_argument& e) {
      bad("gamma", e.what());
    }
  }();
  const json& entries = require(j, "entries");
  if (!entries.is_array()) bad("entries", "expected an array");
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const std::string where = "entries[" + std::to_string(i) + "]";
    const auto x = int_list(require(entries[i], "x"), where + ".x");
    if (static_cast<int>(x.size()) != n) bad(where + ".x", "length differs from n");
    std::vector<std::uint8_t> digits;
    for (int d : x) {
      if (d < 0 || d > p) bad(where + ".x", "entries must lie in [0, p]");
      digits.push_back(static_cast<std::uint8_t>(d));
    }
    const LambdaValue v{as_int(require(entries[i], "l1"), where + ".l1"), as_int(require(entries[i], "l2"), where + ".l2")};
    try {
      lambda.set(SignedVector(p, digits), v);
    } catch (const std::invalid_argument& e) {
      bad(where, e.what());
    }
  }
  return lambda;
}

json to_json(const HypothesisReport& report) {
  json levels = json::array();
  for (const auto& l : report.levels)
    levels.push_back({{"level", l.level}, {"gamma", l.gamma}, {"max_distinct", l.max_distinct}, {"ok", l.ok}});
  json out = {{"total", report.total},
              {"equivariant", report.equivariant},
              {"levels", levels},
              {"sum_gamma", report.sum_gamma},
              {"n", report.n},
              {"conclusion_holds", report.conclusion_holds},
              {"hypotheses_hold", report.hypotheses_hold}};
  if (report.equivariance_witness)
    out["equivariance_witness"] = {{"x", to_json(report.equivariance_witness->x)["x"]},
                                   {"j", report.equivariance_witness->j}};
  return out;
}

json to_json(const RamseyInstance& instance) {
  return {{"r", instance.uniformity()}, {"s", std::vector<int>(instance.sizes().begin(), instance.sizes().end())}};
}

json to_json(const RamseySearchReport& report) {
  json out = {{"instance", to_json(report.instance)}, {"formula", report.formula}, {"status", report.status}};
  out["verified_false_at"] = report.verified_false_at ? json(*report.verified_false_at) : json(nullptr);
  out["verified_true_at"] = report.verified_true_at ? json(*report.verified_true_at) : json(nullptr);
  out["exact"] = report.exact ? json(*report.exact) : json(nullptr);
  if (report.witness) {
    out["witness"] = {{"n", report.witness->target().vertex_count()}, {"colors", to_json(*report.witness)["colors"]}};
  }
  out["nodes"] = report.nodes;
  return out;
}

json to_json(const Partition& partition) {
  json blocks = json::array();
  for (VertexMask b : partition.blocks) blocks.push_back(vertices_of(b));
  return {{"ground", partition.ground}, {"blocks", blocks}};
}

json to_json(const VertexOrdering& sigma) { return std::vector<int>(sigma.map().begin(), sigma.map().end()); }

json to_json(const ExtendedNat& v) {
  if (v.is_infinite()) return "inf";
  return v.value();
}

}  // namespace kkit::io
