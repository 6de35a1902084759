// JSON (de)serialization for modules, algebras, and G-set actions, plus the
// CSV emitter for cover-count tables. Matrix entries are exact rationals
// rendered as "p" or "p/q" strings; sectors and group elements are keyed by
// element name, so files stay readable and diffable.
#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "gfrob/algebra.hpp"
#include "gfrob/cover.hpp"
#include "gfrob/gmodule.hpp"
#include "gfrob/group.hpp"
#include "gfrob/models.hpp"

namespace gfrob {

using nlohmann::json;

inline json rat_to_json(const Rat& r) { return r.str(); }

inline Rat rat_from_json(const json& j) {
  if (j.is_number_integer()) return Rat(j.get<long long>());
  if (j.is_string()) return Rat::parse(j.get<std::string>());
  throw parse_error("rational entries must be integers or \"p/q\" strings");
}

inline json mat_to_json(const RatMat& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(rat_to_json(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline RatMat mat_from_json(const json& j, int rows, int cols) {
  if (!j.is_array() || int(j.size()) != rows)
    throw parse_error("matrix row count mismatch");
  RatMat m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    const json& row = j[size_t(i)];
    if (!row.is_array() || int(row.size()) != cols)
      throw parse_error("matrix column count mismatch");
    for (int c = 0; c < cols; ++c) m.at(i, c) = rat_from_json(row[size_t(c)]);
  }
  return m;
}

inline std::map<std::string, int> element_index(const FiniteGroup& G) {
  std::map<std::string, int> idx;
  for (int g = 0; g < G.order(); ++g) idx[G.name(g)] = g;
  return idx;
}

inline int element_from_name(const FiniteGroup& G, const std::map<std::string, int>& idx,
                             const std::string& name) {
  auto it = idx.find(name);
  if (it == idx.end()) throw parse_error("unknown element name: " + name + " in " + G.spec());
  return it->second;
}

// ---------------------------------------------------------------------------
// Module files: group spec, sector dimensions, generator action blocks (the
// rest of the action is rebuilt by composing along words), metric blocks.

inline json module_to_json(const GGradedModule& M) {
  const FiniteGroup& G = *M.group;
  json j;
  j["group"] = G.spec();
  json sectors = json::object();
  for (int m = 0; m < G.order(); ++m)
    if (M.dim(m) > 0) sectors[G.name(m)] = M.dim(m);
  j["sectors"] = std::move(sectors);
  json action = json::object();
  for (int g : G.generators()) {
    json per = json::object();
    for (int m = 0; m < G.order(); ++m)
      if (M.dim(m) > 0 && M.dim(G.conj(m, g)) > 0)
        per[G.name(m)] = mat_to_json(M.action[size_t(g)][size_t(m)]);
    action[G.name(g)] = std::move(per);
  }
  j["action"] = std::move(action);
  json metric = json::object();
  for (int m = 0; m < G.order(); ++m)
    if (M.dim(m) > 0) metric[G.name(m)] = mat_to_json(M.metric[size_t(m)]);
  j["metric"] = std::move(metric);
  return j;
}

inline GGradedModule module_from_json(const json& j, int cap = kDefaultGroupCap) {
  if (!j.contains("group") || !j["group"].is_string())
    throw parse_error("module file needs a \"group\" spec string");
  GroupPtr Gp = build_group(j["group"].get<std::string>(), cap);
  const FiniteGroup& G = *Gp;
  auto idx = element_index(G);

  std::vector<int> dims(size_t(G.order()), 0);
  if (j.contains("sectors")) {
    for (const auto& [name, val] : j["sectors"].items()) {
      int m = element_from_name(G, idx, name);
      if (!val.is_number_integer() || val.get<int>() < 0)
        throw parse_error("sector dimensions must be nonnegative integers");
      dims[size_t(m)] = val.get<int>();
    }
  }

  std::map<int, std::vector<RatMat>> gen_blocks;
  if (!j.contains("action") || !j["action"].is_object())
    throw parse_error("module file needs an \"action\" object");
  for (const auto& [gname, per] : j["action"].items()) {
    int g = element_from_name(G, idx, gname);
    std::vector<RatMat> blocks(size_t(G.order()));
    for (int m = 0; m < G.order(); ++m)
      blocks[size_t(m)] = RatMat(dims[size_t(G.conj(m, g))], dims[size_t(m)]);
    for (const auto& [mname, mat] : per.items()) {
      int m = element_from_name(G, idx, mname);
      blocks[size_t(m)] = mat_from_json(mat, dims[size_t(G.conj(m, g))], dims[size_t(m)]);
    }
    gen_blocks[g] = std::move(blocks);
  }

  std::vector<std::vector<RatMat>> action = complete_action(G, dims, gen_blocks);

  auto metric = std::vector<RatMat>(size_t(G.order()));
  for (int m = 0; m < G.order(); ++m)
    metric[size_t(m)] = RatMat(dims[size_t(m)], dims[size_t(G.inv(m))]);
  if (!j.contains("metric") || !j["metric"].is_object())
    throw parse_error("module file needs a \"metric\" object");
  for (const auto& [mname, mat] : j["metric"].items()) {
    int m = element_from_name(G, idx, mname);
    metric[size_t(m)] = mat_from_json(mat, dims[size_t(m)], dims[size_t(G.inv(m))]);
  }

  return make_module(Gp, std::move(dims), std::move(action), std::move(metric));
}

// ---------------------------------------------------------------------------
// Algebra files: a module plus multiplication blocks and the unit.

inline json algebra_to_json(const GFrobeniusAlgebra& A) {
  const FiniteGroup& G = A.group();
  json j = module_to_json(A.mod);
  json mult = json::object();
  for (int m1 = 0; m1 < G.order(); ++m1) {
    if (A.mod.dim(m1) == 0) continue;
    json per = json::object();
    for (int m2 = 0; m2 < G.order(); ++m2) {
      if (A.mod.dim(m2) == 0 || A.mod.dim(G.mul(m1, m2)) == 0) continue;
      per[G.name(m2)] = mat_to_json(A.mult[size_t(m1)][size_t(m2)]);
    }
    mult[G.name(m1)] = std::move(per);
  }
  j["mult"] = std::move(mult);
  json unit = json::object();
  int e = G.identity();
  json coords = json::array();
  for (int p = 0; p < A.mod.dim(e); ++p)
    coords.push_back(rat_to_json(A.unit[size_t(A.mod.offset(e) + p)]));
  unit[G.name(e)] = std::move(coords);
  j["unit"] = std::move(unit);
  return j;
}

inline GFrobeniusAlgebra algebra_from_json(const json& j, int cap = kDefaultGroupCap) {
  GFrobeniusAlgebra A;
  A.mod = module_from_json(j, cap);
  const FiniteGroup& G = *A.mod.group;
  auto idx = element_index(G);
  A.mult.assign(size_t(G.order()), std::vector<RatMat>(size_t(G.order())));
  for (int m1 = 0; m1 < G.order(); ++m1)
    for (int m2 = 0; m2 < G.order(); ++m2)
      A.mult[size_t(m1)][size_t(m2)] =
          RatMat(A.mod.dim(m1) * A.mod.dim(m2), A.mod.dim(G.mul(m1, m2)));
  if (!j.contains("mult") || !j["mult"].is_object())
    throw parse_error("algebra file needs a \"mult\" object");
  for (const auto& [n1, per] : j["mult"].items()) {
    int m1 = element_from_name(G, idx, n1);
    for (const auto& [n2, mat] : per.items()) {
      int m2 = element_from_name(G, idx, n2);
      A.mult[size_t(m1)][size_t(m2)] =
          mat_from_json(mat, A.mod.dim(m1) * A.mod.dim(m2), A.mod.dim(G.mul(m1, m2)));
    }
  }
  A.unit = A.mod.zero();
  if (!j.contains("unit") || !j["unit"].is_object())
    throw parse_error("algebra file needs a \"unit\" object");
  for (const auto& [name, coords] : j["unit"].items()) {
    int m = element_from_name(G, idx, name);
    if (!coords.is_array() || int(coords.size()) != A.mod.dim(m))
      throw parse_error("unit coordinate count mismatch");
    for (int p = 0; p < A.mod.dim(m); ++p)
      A.unit[size_t(A.mod.offset(m) + p)] = rat_from_json(coords[size_t(p)]);
  }
  return A;
}

// ---------------------------------------------------------------------------
// G-set action files: point count plus generator images (0-based).

inline json gset_to_json(const FiniteGSet& X) {
  const FiniteGroup& G = *X.group;
  json j;
  j["group"] = G.spec();
  j["points"] = X.npoints;
  json action = json::object();
  for (int g : G.generators()) action[G.name(g)] = X.act[size_t(g)];
  j["action"] = std::move(action);
  return j;
}

inline FiniteGSet gset_from_json(const json& j, int cap = kDefaultGroupCap) {
  if (!j.contains("group") || !j.contains("points") || !j.contains("action"))
    throw parse_error("action file needs \"group\", \"points\", \"action\"");
  GroupPtr Gp = build_group(j["group"].get<std::string>(), cap);
  auto idx = element_index(*Gp);
  int npoints = j["points"].get<int>();
  if (npoints < 0) throw parse_error("point count must be nonnegative");
  std::map<int, std::vector<int>> gen_images;
  for (const auto& [name, images] : j["action"].items()) {
    int g = element_from_name(*Gp, idx, name);
    if (!images.is_array() || int(images.size()) != npoints)
      throw parse_error("image list for " + name + " must have one entry per point");
    gen_images[g] = images.get<std::vector<int>>();
  }
  try {
    return gset_from_generator_images(Gp, npoints, gen_images);
  } catch (const std::invalid_argument& e) {
    throw parse_error(e.what());
  }
}

// ---------------------------------------------------------------------------
// Reports

inline json axiom_report_to_json(const AxiomReport& rep) {
  json checks = json::array();
  for (const auto& c : rep.checks) {
    json e;
    e["id"] = c.id;
    e["name"] = c.name;
    e["pass"] = c.pass;
    if (!c.pass) e["witness"] = c.witness;
    checks.push_back(std::move(e));
  }
  json j;
  j["all_pass"] = rep.all_pass();
  j["checks"] = std::move(checks);
  return j;
}

// CSV rows: genus, point count, class representatives joined by ';',
// numerator, denominator.
inline std::string omega_table_csv(const FiniteGroup& G, const ConjClassTable& cc,
                                   const OmegaTable& table) {
  std::string out = "genus,points,classes,numerator,denominator\n";
  for (const OmegaRow& row : table.rows) {
    out += std::to_string(row.genus);
    out += ',';
    out += std::to_string(row.classes.size());
    out += ',';
    for (size_t i = 0; i < row.classes.size(); ++i) {
      if (i) out += ';';
      out += G.name(cc.reps[size_t(row.classes[i])]);
    }
    out += ',';
    out += std::to_string(row.value.num());
    out += ',';
    out += std::to_string(row.value.den());
    out += '\n';
  }
  return out;
}

}  // namespace gfrob
