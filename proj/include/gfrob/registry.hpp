// Named built-in groups and models for the command line.
//
// Group references: an alias (Z2, Z3, Z4, Z6, Z2xZ2, V4, S3, S4, S5, D4, Q8)
// or a raw group spec string ("cyclic 4", "perm 4: (1 2), (3 4)", ...).
//
// Model references:
//   groupring:<group>          group ring with conjugation action
//   fgset:<group>-natural      fixed-point model of the defining action
//   fgset:point:<group>        fixed-point model of the one-point action
//   fgset:regular:<group>      fixed-point model of right translation
//   trivial:<k>:<group>        functions on k points, trivial action
//   path to a JSON algebra file (anything containing '/' or '.')
#pragma once

#include <fstream>
#include <map>
#include <sstream>
#include <string>

#include "gfrob/algebra.hpp"
#include "gfrob/group.hpp"
#include "gfrob/io.hpp"
#include "gfrob/models.hpp"

namespace gfrob {

inline std::string group_spec_for(const std::string& ref) {
  static const std::map<std::string, std::string> aliases = {
      {"Z2", "cyclic 2"},         {"Z3", "cyclic 3"},
      {"Z4", "cyclic 4"},         {"Z6", "cyclic 6"},
      {"Z2xZ2", "perm 4: (1 2), (3 4)"},
      {"V4", "perm 4: (1 2), (3 4)"},
      {"S3", "symmetric 3"},      {"S4", "symmetric 4"},
      {"S5", "symmetric 5"},      {"D4", "dihedral 4"},
      {"Q8", "quaternion8"},
  };
  auto it = aliases.find(ref);
  return it == aliases.end() ? ref : it->second;
}

inline GroupPtr build_group_ref(const std::string& ref, int cap = kDefaultGroupCap) {
  return build_group(group_spec_for(ref), cap);
}

// Right translation of the group on itself.
inline FiniteGSet regular_gset(const GroupPtr& Gp) {
  const FiniteGroup& G = *Gp;
  FiniteGSet X;
  X.group = Gp;
  X.npoints = G.order();
  X.act.assign(size_t(G.order()), std::vector<int>(size_t(G.order())));
  for (int g = 0; g < G.order(); ++g)
    for (int x = 0; x < G.order(); ++x) X.act[size_t(g)][size_t(x)] = G.mul(x, g);
  return X;
}

inline GFrobeniusAlgebra build_model_ref(const std::string& ref, int cap = kDefaultGroupCap) {
  auto starts_with = [](const std::string& s, const std::string& p) {
    return s.size() >= p.size() && s.compare(0, p.size(), p) == 0;
  };
  if (starts_with(ref, "groupring:"))
    return group_ring(build_group_ref(ref.substr(10), cap));
  if (starts_with(ref, "fgset:")) {
    std::string rest = ref.substr(6);
    if (starts_with(rest, "point:"))
      return fg_finite_gset(point_gset(build_group_ref(rest.substr(6), cap))).alg;
    if (starts_with(rest, "regular:"))
      return fg_finite_gset(regular_gset(build_group_ref(rest.substr(8), cap))).alg;
    const std::string suffix = "-natural";
    if (rest.size() > suffix.size() &&
        rest.compare(rest.size() - suffix.size(), suffix.size(), suffix) == 0)
      return fg_finite_gset(
                 natural_gset(build_group_ref(rest.substr(0, rest.size() - suffix.size()), cap)))
          .alg;
    throw parse_error("unknown action model reference: " + ref);
  }
  if (starts_with(ref, "trivial:")) {
    std::string rest = ref.substr(8);
    size_t colon = rest.find(':');
    if (colon == std::string::npos)
      throw parse_error("trivial model reference needs trivial:<k>:<group>");
    int k = 0;
    try {
      size_t used = 0;
      k = std::stoi(rest.substr(0, colon), &used);
      if (used != colon || k < 0) throw std::invalid_argument("");
    } catch (...) {
      throw parse_error("bad point count in model reference: " + ref);
    }
    return trivial_action_model(functions_algebra(k), build_group_ref(rest.substr(colon + 1), cap));
  }
  if (ref.find('/') != std::string::npos || ref.find('.') != std::string::npos) {
    std::ifstream in(ref);
    if (!in) throw parse_error("cannot open model file: " + ref);
    json j;
    try {
      in >> j;
    } catch (const std::exception& e) {
      throw parse_error("bad JSON in " + ref + ": " + e.what());
    }
    return algebra_from_json(j, cap);
  }
  throw parse_error("unknown model reference: " + ref);
}

}  // namespace gfrob
