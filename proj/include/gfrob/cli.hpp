// Command line front end. All logic lives behind run_cli so tests can drive
// it in-process; tools/gfrob.cpp is a thin wrapper.
//
//   gfrob group    --group <ref>                  conjugacy/section report
//   gfrob omega    --group <ref> [--max-genus G] [--max-points N] [--format csv|json]
//   gfrob check    --model <ref>                  axiom report, exit 1 on failure
//   gfrob quotient --model <ref>                  coinvariant quotient report
//
// Exit codes: 0 success, 1 a verification failed, 2 bad input.
#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gfrob/algebra.hpp"
#include "gfrob/cover.hpp"
#include "gfrob/group.hpp"
#include "gfrob/io.hpp"
#include "gfrob/registry.hpp"

namespace gfrob {

namespace cli_detail {

inline int cmd_group(const std::string& ref, int cap, std::ostream& out) {
  GroupPtr Gp = build_group_ref(ref, cap);
  const FiniteGroup& G = *Gp;
  ConjClassTable cc = conjugacy_data(G);
  json j;
  j["spec"] = G.spec();
  j["order"] = G.order();
  json elems = json::array();
  for (int g = 0; g < G.order(); ++g) elems.push_back(G.name(g));
  j["elements"] = std::move(elems);
  json classes = json::array();
  for (int c = 0; c < cc.num_classes(); ++c) {
    json e;
    e["representative"] = G.name(cc.reps[size_t(c)]);
    e["size"] = cc.sizes[size_t(c)];
    e["centralizer_order"] = cc.centralizer_orders[size_t(c)];
    e["inverse_class"] = cc.inverse_class[size_t(c)];
    classes.push_back(std::move(e));
  }
  j["classes"] = std::move(classes);
  ClassFunction t1 = commutator_distribution(G, cc);
  json dist = json::array();
  for (const Rat& v : t1) dist.push_back(rat_to_json(v));
  j["commutator_distribution"] = std::move(dist);
  InvolutiveSection sec = involutive_section(G, cc);
  json s;
  s["exists"] = sec.exists;
  if (sec.exists) {
    json picks = json::array();
    for (int g : sec.section) picks.push_back(G.name(g));
    s["section"] = std::move(picks);
  } else {
    s["witness_class"] = sec.witness_class;
  }
  j["involutive_section"] = std::move(s);
  out << j.dump(2) << "\n";
  return 0;
}

inline int cmd_omega(const std::string& ref, int max_genus, int max_points,
                     const std::string& format, int cap, std::ostream& out) {
  GroupPtr Gp = build_group_ref(ref, cap);
  const FiniteGroup& G = *Gp;
  ConjClassTable cc = conjugacy_data(G);
  ClassAlgebra ca = class_algebra(G, cc);
  OmegaTable table = omega_table(G, cc, ca, max_genus, max_points);

  // self-check every row against a gluing move where one applies
  int checked = 0, failed = 0;
  for (const OmegaRow& row : table.rows) {
    if (row.classes.size() >= 2) {
      GluingCheck t = gluing_tree_check(G, cc, ca, row.genus, row.classes, {0}, 0);
      ++checked;
      if (!t.pass) ++failed;
    }
    if (row.genus >= 1) {
      GluingCheck l = gluing_loop_check(G, cc, ca, row.genus, row.classes);
      ++checked;
      if (!l.pass) ++failed;
    }
  }

  if (format == "csv") {
    out << omega_table_csv(G, cc, table);
    out << "# gluing-checks: " << checked << " run, " << failed << " failed\n";
  } else if (format == "json") {
    json j;
    j["group"] = G.spec();
    json rows = json::array();
    for (const OmegaRow& row : table.rows) {
      json r;
      r["genus"] = row.genus;
      r["points"] = int(row.classes.size());
      json cls = json::array();
      for (int c : row.classes) cls.push_back(G.name(cc.reps[size_t(c)]));
      r["classes"] = std::move(cls);
      r["value"] = rat_to_json(row.value);
      rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
    j["gluing_checks"] = json{{"run", checked}, {"failed", failed}};
    out << j.dump(2) << "\n";
  } else {
    throw parse_error("unknown format: " + format);
  }
  return failed == 0 ? 0 : 1;
}

inline int cmd_check(const std::string& ref, int cap, std::ostream& out) {
  GFrobeniusAlgebra A = build_model_ref(ref, cap);
  AxiomReport rep = check_all(A);
  json j = axiom_report_to_json(rep);
  j["model"] = ref;
  out << j.dump(2) << "\n";
  return rep.all_pass() ? 0 : 1;
}

inline int cmd_quotient(const std::string& ref, int cap, std::ostream& out, std::ostream& err) {
  GFrobeniusAlgebra A = build_model_ref(ref, cap);
  AxiomReport rep = check_all(A);
  if (!rep.all_pass()) {
    err << "model fails verification; refusing to build the quotient\n";
    return 1;
  }
  CoinvariantAlgebra Q = coinvariant_algebra(A);
  KRescaledQuotient R = k_rescaling(Q);
  const FiniteGroup& G = *Q.group;
  json j;
  j["model"] = ref;
  j["dimension"] = Q.alg.dim;
  json classes = json::array();
  for (int i = 0; i < Q.alg.dim; ++i)
    classes.push_back(G.name(Q.classes.reps[size_t(Q.basis.class_of[size_t(i)])]));
  j["classes"] = std::move(classes);
  j["k"] = R.k_of_basis;
  json unit = json::array();
  for (const Rat& v : Q.alg.unit) unit.push_back(rat_to_json(v));
  j["unit"] = std::move(unit);
  j["eta_tilde"] = mat_to_json(Q.alg.metric);
  int d = Q.alg.dim;
  json mult = json::array();
  for (int i = 0; i < d; ++i) {
    json plane = json::array();
    for (int jx = 0; jx < d; ++jx) {
      json line = json::array();
      for (int k = 0; k < d; ++k) line.push_back(rat_to_json(Q.alg.mult.at(i * d + jx, k)));
      plane.push_back(std::move(line));
    }
    mult.push_back(std::move(plane));
  }
  j["mult"] = std::move(mult);
  j["closed"] = Q.closed;
  j["mu_scaling_ok"] = Q.mu_scaling_ok;
  json kr;
  kr["eta"] = mat_to_json(R.eta_prime);
  kr["phi_pullback_ok"] = R.phi_pullback_ok;
  kr["unit_fixed"] = R.unit_fixed;
  j["k_rescaled"] = std::move(kr);
  out << j.dump(2) << "\n";
  bool ok = Q.closed && Q.mu_scaling_ok && R.phi_pullback_ok && R.unit_fixed;
  return ok ? 0 : 1;
}

}  // namespace cli_detail

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact computations with group-graded Frobenius structures"};
  app.require_subcommand(1);

  std::string group_ref, model_ref, format = "csv";
  int cap = kDefaultGroupCap;
  int max_genus = 1, max_points = 3;

  CLI::App* group_cmd = app.add_subcommand("group", "conjugacy classes and section report");
  group_cmd->add_option("--group", group_ref, "group alias or spec")->required();
  group_cmd->add_option("--cap", cap, "largest allowed group order");

  CLI::App* omega_cmd = app.add_subcommand("omega", "cover-count table with gluing self-checks");
  omega_cmd->add_option("--group", group_ref, "group alias or spec")->required();
  omega_cmd->add_option("--max-genus", max_genus, "largest genus")->check(CLI::NonNegativeNumber);
  omega_cmd->add_option("--max-points", max_points, "largest number of marked points")
      ->check(CLI::PositiveNumber);
  omega_cmd->add_option("--format", format, "csv or json");
  omega_cmd->add_option("--cap", cap, "largest allowed group order");

  CLI::App* check_cmd = app.add_subcommand("check", "verify the defining laws of a model");
  check_cmd->add_option("--model", model_ref, "model reference or JSON file")->required();
  check_cmd->add_option("--cap", cap, "largest allowed group order");

  CLI::App* quot_cmd = app.add_subcommand("quotient", "coinvariant quotient with rescalings");
  quot_cmd->add_option("--model", model_ref, "model reference or JSON file")->required();
  quot_cmd->add_option("--cap", cap, "largest allowed group order");

  std::vector<const char*> argv;
  argv.push_back("gfrob");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(int(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (group_cmd->parsed()) return cli_detail::cmd_group(group_ref, cap, out);
    if (omega_cmd->parsed())
      return cli_detail::cmd_omega(group_ref, max_genus, max_points, format, cap, out);
    if (check_cmd->parsed()) return cli_detail::cmd_check(model_ref, cap, out);
    if (quot_cmd->parsed()) return cli_detail::cmd_quotient(model_ref, cap, out, err);
  } catch (const parse_error& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const size_error& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "no subcommand\n";
  return 2;
}

}  // namespace gfrob
