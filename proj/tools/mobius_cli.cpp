// Command-line front end: constructs configurations, reports their
// invariants, decides isomorphism, computes automorphism groups and runs the
// verification suite. Machine output is JSON on stdout; --pretty adds a
// human-oriented summary on stderr. Exit codes: 0 success, 1 a verified
// property failed, 2 bad input.

#include <fstream>
#include <iostream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "mobius/analysis.hpp"
#include "mobius/autgrp.hpp"
#include "mobius/json_io.hpp"
#include "mobius/levi.hpp"
#include "mobius/oracle.hpp"
#include "mobius/perm.hpp"
#include "mobius/verify.hpp"

namespace {

using json = nlohmann::json;
using mobius::config::MobiusPair;

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw mobius::error("cannot open " + path + " for writing");
  out << text;
}

MobiusPair build_from(int n, const std::string& perm_text) {
  return mobius::config::build(n, mobius::perm::parse_permutation(perm_text, n));
}

int cmd_build(int n, const std::string& perm_text, const std::string& dot_path,
              const std::string& json_path) {
  const MobiusPair M = build_from(n, perm_text);
  const json j = mobius::io::to_json(M);
  if (!dot_path.empty())
    write_file(dot_path, mobius::levi::export_dot(mobius::levi::levi_graph(M)));
  if (!json_path.empty()) write_file(json_path, j.dump(2) + "\n");
  emit(j);
  return 0;
}

int cmd_export(int n, const std::string& perm_text, const std::string& dot_path) {
  const MobiusPair M = build_from(n, perm_text);
  const std::string dot = mobius::levi::export_dot(mobius::levi::levi_graph(M));
  if (dot_path.empty())
    std::cout << dot;
  else
    write_file(dot_path, dot);
  return 0;
}

int cmd_info(int n, const std::string& perm_text, int threads, bool pretty) {
  const MobiusPair M = build_from(n, perm_text);
  json j;
  j["n"] = n;
  j["phi"] = mobius::perm::to_cycle_string(M.phi());
  j["intersection_profile"] = mobius::io::to_json(mobius::analysis::intersection_profile(M));
  const auto decs = mobius::oracle::enumerate_decompositions(M, threads);
  j["decompositions"] = decs.size();
  json subpairs = json::object();
  for (int k = 3; k < n; ++k)
    subpairs[std::to_string(k)] = mobius::analysis::subpair_sets(M, k);
  j["subpair_sets"] = subpairs;
  j["block_cycles"] = mobius::oracle::find_block_cycles(M);
  emit(j);
  if (pretty)
    std::cerr << "M_(" << n << "," << j["phi"].get<std::string>() << "): "
              << decs.size() << " decomposition(s), block cycles "
              << j["block_cycles"].dump() << "\n";
  return 0;
}

int cmd_iso(int n, const std::string& p1, const std::string& p2, int threads) {
  const MobiusPair M1 = build_from(n, p1);
  const MobiusPair M2 = build_from(n, p2);
  const auto alpha = mobius::perm::are_conjugate(M1.phi(), M2.phi());
  const auto witness = mobius::analysis::isomorphic(M1, M2);
  const auto oracle_maps = mobius::oracle::find_isomorphisms(M1, M2, std::size_t{1}, threads);
  json j;
  j["conjugate"] = alpha.has_value();
  j["alpha"] = alpha ? json(mobius::perm::to_cycle_string(*alpha)) : json(nullptr);
  j["isomorphic"] = witness.has_value();
  j["oracle_isomorphic"] = !oracle_maps.empty();
  j["agree"] = witness.has_value() == !oracle_maps.empty();
  j["witness"] = witness ? mobius::io::to_json(*witness, n) : json(nullptr);
  emit(j);
  return 0;
}

int cmd_aut(int n, const std::string& perm_text, int threads, bool pretty) {
  const MobiusPair M = build_from(n, perm_text);
  const auto report = mobius::autgrp::aut_report(M, threads);
  emit(mobius::io::to_json(report));
  if (pretty)
    std::cerr << "Aut(M_(" << n << "," << report.phi << ")): oracle " << report.oracle_order
              << ", structured " << report.structured_order << ", claimed "
              << (report.paper_claimed_order ? std::to_string(*report.paper_claimed_order)
                                             : std::string("-"))
              << "\n";
  return 0;
}

int cmd_classes(int n) {
  json reps = json::array();
  for (const auto& rep : mobius::perm::conjugacy_class_reps(n))
    reps.push_back(mobius::perm::to_cycle_string(rep));
  emit(json{{"n", n},
            {"p", mobius::perm::partition_count(n).value.str()},
            {"reps", reps}});
  return 0;
}

int cmd_recognize(const std::string& path) {
  json input;
  if (path == "-") {
    input = json::parse(std::cin);
  } else {
    std::ifstream in(path);
    if (!in) throw mobius::error("cannot open " + path);
    input = json::parse(in);
  }
  const auto raw = mobius::io::raw_from_json(input);
  const auto result = mobius::analysis::recognize(raw);
  if (result)
    emit(json{{"recognized", true}, {"result", mobius::io::to_json(*result)}});
  else
    emit(json{{"recognized", false}});
  return 0;
}

int cmd_verify(int max_n, int threads, bool extended, bool pretty) {
  mobius::verify::VerifyOptions opts;
  opts.max_n = max_n;
  opts.threads = threads;
  opts.extended_n7 = extended;
  const auto results = mobius::verify::run_all(opts);
  emit(mobius::verify::report_json(results));
  bool all = true;
  for (const auto& r : results) {
    if (pretty)
      std::cerr << (r.pass ? "PASS" : "FAIL") << " criterion " << r.id << ": " << r.name
                << "\n";
    all = all && r.pass;
  }
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"generalized Mobius configurations: construction and verification"};
  app.require_subcommand(1);

  int n = 0, max_n = 6;
  int threads = 1;
  std::string perm_text, perm_text2, dot_path, json_path, input_path;
  bool pretty = false, extended = false;

  auto add_common = [&](CLI::App* cmd, bool with_perm = true) {
    cmd->add_option("-n", n, "number of simplex vertices")->required();
    if (with_perm)
      cmd->add_option("-p,--perm", perm_text, "permutation (cycle or image form)")
          ->required();
  };

  auto* build = app.add_subcommand("build", "construct a configuration");
  add_common(build);
  build->add_option("--dot", dot_path, "write the Levi graph as DOT");
  build->add_option("--json", json_path, "write the configuration JSON");

  auto* exp = app.add_subcommand("export", "write the Levi graph in DOT format");
  add_common(exp);
  exp->add_option("--dot", dot_path, "output path (stdout when omitted)");

  auto* info = app.add_subcommand("info", "intersection profile, decompositions, subpairs");
  add_common(info);
  info->add_option("--threads", threads, "worker threads");
  info->add_flag("--pretty", pretty, "human summary on stderr");

  auto* iso = app.add_subcommand("iso", "decide isomorphism of two configurations");
  iso->add_option("-n", n, "number of simplex vertices")->required();
  iso->add_option("--p1", perm_text, "first permutation")->required();
  iso->add_option("--p2", perm_text2, "second permutation")->required();
  iso->add_option("--threads", threads, "worker threads");

  auto* aut = app.add_subcommand("aut", "automorphism group report");
  add_common(aut);
  aut->add_option("--threads", threads, "worker threads");
  aut->add_flag("--pretty", pretty, "human summary on stderr");

  auto* classes = app.add_subcommand("classes", "conjugacy class representatives");
  classes->add_option("-n", n, "degree")->required();

  auto* recognize = app.add_subcommand("recognize", "identify a raw incidence structure");
  recognize->add_option("--in", input_path, "JSON file ('-' for stdin)")->required();

  auto* verify = app.add_subcommand("verify", "run the verification suite");
  verify->add_option("--max-n", max_n, "largest n exercised (default 6)");
  verify->add_option("--threads", threads, "worker threads");
  verify->add_flag("--extended", extended, "include the n=7 completeness run");
  verify->add_flag("--pretty", pretty, "per-criterion lines on stderr");

  CLI11_PARSE(app, argc, argv);

  try {
    if (build->parsed()) return cmd_build(n, perm_text, dot_path, json_path);
    if (exp->parsed()) return cmd_export(n, perm_text, dot_path);
    if (info->parsed()) return cmd_info(n, perm_text, threads, pretty);
    if (iso->parsed()) return cmd_iso(n, perm_text, perm_text2, threads);
    if (aut->parsed()) return cmd_aut(n, perm_text, threads, pretty);
    if (classes->parsed()) return cmd_classes(n);
    if (recognize->parsed()) return cmd_recognize(input_path);
    if (verify->parsed()) return cmd_verify(max_n, threads, extended, pretty);
  } catch (const mobius::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
