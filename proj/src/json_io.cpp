#include "mobius/json_io.hpp"

#include <algorithm>

namespace mobius::io {

using config::ElementId;
using config::MobiusPair;

json to_json(const MobiusPair& M) {
  const int n = M.n();
  json blocks = json::object();
  for (int b = 0; b < 2 * n; ++b) {
    std::vector<std::string> names;
    M.block_points(b).for_each(
        [&](int p) { names.push_back(config::name(config::point_from_id(p, n))); });
    std::sort(names.begin(), names.end());
    blocks[config::name(config::block_from_id(b, n))] = names;
  }
  return json{{"n", n}, {"phi", M.phi().images()}, {"blocks", blocks}};
}

MobiusPair mobius_from_json(const json& j) {
  if (!j.contains("n") || !j.contains("phi"))
    throw parse_error("configuration JSON needs \"n\" and \"phi\"");
  const int n = j.at("n").get<int>();
  auto phi = perm::Permutation::from_images(j.at("phi").get<std::vector<int>>());
  MobiusPair M = config::build(n, phi);
  if (j.contains("blocks")) {
    const json expect = to_json(M).at("blocks");
    if (j.at("blocks") != expect)
      throw parse_error("configuration JSON blocks do not match the construction");
  }
  return M;
}

json to_json(const oracle::IsoMap& f, int n) {
  json points = json::object(), blocks = json::object();
  for (int p = 0; p < 2 * n; ++p)
    points[config::name(config::point_from_id(p, n))] =
        config::name(config::point_from_id(f.point_map[p], n));
  for (int b = 0; b < 2 * n; ++b)
    blocks[config::name(config::block_from_id(b, n))] =
        config::name(config::block_from_id(f.block_map[b], n));
  return json{{"points", points}, {"blocks", blocks}};
}

json to_json(const oracle::DecompositionPair& d, int n) {
  auto names_of = [&](const std::vector<int>& ids, bool block) {
    std::vector<std::string> out;
    for (int id : ids)
      out.push_back(config::name(block ? config::block_from_id(id, n)
                                       : config::point_from_id(id, n)));
    return out;
  };
  return json{{"first", {{"points", names_of(d.p_points, false)},
                         {"blocks", names_of(d.p_blocks, true)}}},
              {"second", {{"points", names_of(d.q_points, false)},
                          {"blocks", names_of(d.q_blocks, true)}}}};
}

json to_json(const autgrp::AutReport& r) {
  json j{{"n", r.n},
         {"phi", r.phi},
         {"oracle_order", r.oracle_order},
         {"structured_order", r.structured_order},
         {"extended_order", r.extended_order},
         {"structured_equals_oracle", r.structured_equals_oracle},
         {"extended_equals_oracle", r.extended_equals_oracle},
         {"paper_matches_oracle", r.paper_matches_oracle},
         {"generators", r.generator_names}};
  if (r.paper_claimed_order)
    j["paper_claimed_order"] = *r.paper_claimed_order;
  else
    j["paper_claimed_order"] = nullptr;
  return j;
}

json to_json(const analysis::IntersectionProfile& p) {
  json sizes = json::object();
  for (const auto& [size, count] : p.size_counts) sizes[std::to_string(size)] = count;
  return json{{"n", p.n},
              {"sizes", sizes},
              {"same_side_pairs", p.same_side_pairs},
              {"ab_cases", {{"disjoint", p.ab_case_disjoint},
                            {"one", p.ab_case_one},
                            {"two", p.ab_case_two}}}};
}

json to_json(const analysis::RecognizeResult& r) {
  return json{{"n", r.n},
              {"cycle_type", r.cycle_type},
              {"point_labels", r.point_labels},
              {"block_labels", r.block_labels}};
}

json to_json(const analysis::RawStructure& s) {
  return json{{"points", s.points}, {"blocks", s.blocks}};
}

analysis::RawStructure raw_from_json(const json& j) {
  if (!j.contains("points") || !j.contains("blocks"))
    throw parse_error("raw structure JSON needs \"points\" and \"blocks\"");
  analysis::RawStructure s;
  s.points = j.at("points").get<std::vector<std::string>>();
  s.blocks = j.at("blocks").get<std::vector<std::vector<std::string>>>();
  return s;
}

}  // namespace mobius::io
