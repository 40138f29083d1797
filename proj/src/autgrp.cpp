#include "mobius/autgrp.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace mobius::autgrp {

using config::Coord;
using config::ElementId;
using config::MobiusPair;
using perm::CycleDecomposition;

namespace {

StructuredAut blank(const CycleDecomposition& cd, StructuredAut::Kind kind) {
  StructuredAut s;
  s.kind = kind;
  s.shift.resize(cd.classes());
  s.alpha.resize(cd.classes());
  for (int t = 0; t < cd.classes(); ++t) {
    s.shift[t].assign(cd.multiplicities[t], 0);
    s.alpha[t].resize(cd.multiplicities[t]);
    for (int k = 0; k < cd.multiplicities[t]; ++k) s.alpha[t][k] = k;
  }
  return s;
}

}  // namespace

StructuredAut identity_f(const CycleDecomposition& cd) {
  return blank(cd, StructuredAut::Kind::F);
}

StructuredAut g_zero(const CycleDecomposition& cd) {
  return blank(cd, StructuredAut::Kind::G);
}

Coord apply_f(const CycleDecomposition& cd, const StructuredAut& s, const Coord& c) {
  if (s.kind != StructuredAut::Kind::F) throw error("apply_f requires a kind-F map");
  const int t = c.t - 1, k = c.k - 1;
  const int nu = cd.lengths[t];
  return {c.t, s.alpha[t][k] + 1, (c.i + s.shift[t][k]) % nu, c.eps};
}

Coord apply_g(const CycleDecomposition& cd, const StructuredAut& s, const Coord& c) {
  if (s.kind != StructuredAut::Kind::G) throw error("apply_g requires a kind-G map");
  const int t = c.t - 1, k = c.k - 1;
  const int nu = cd.lengths[t];
  const int delta = c.eps > 0 ? s.shift[t][k] - 1 : s.shift[t][k];
  return {c.t, s.alpha[t][k] + 1, ((c.i + delta) % nu + nu) % nu, -c.eps};
}

Coord apply(const CycleDecomposition& cd, const StructuredAut& s, const Coord& c) {
  return s.kind == StructuredAut::Kind::F ? apply_f(cd, s, c) : apply_g(cd, s, c);
}

oracle::IsoMap to_iso_map(const MobiusPair& M, const StructuredAut& s) {
  const int n = M.n();
  oracle::IsoMap f{std::vector<int>(2 * n), std::vector<int>(2 * n)};
  for (int id = 0; id < 4 * n; ++id) {
    const ElementId e = config::from_eid(id, n);
    const ElementId img = element_of(M, apply(M.cycles(), s, coord_of(M, e)));
    if (config::is_point(e.kind))
      f.point_map[config::point_id(e, n)] = config::point_id(img, n);
    else
      f.block_map[config::block_id(e, n)] = config::block_id(img, n);
  }
  return f;
}

std::vector<StructuredAut> structured_automorphisms(const MobiusPair& M) {
  const CycleDecomposition& cd = M.cycles();

  std::vector<std::vector<std::vector<int>>> alphas(cd.classes());
  for (int t = 0; t < cd.classes(); ++t) {
    std::vector<int> p(cd.multiplicities[t]);
    for (int k = 0; k < cd.multiplicities[t]; ++k) p[k] = k;
    do alphas[t].push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
  }

  std::vector<StructuredAut> out;
  for (auto kind : {StructuredAut::Kind::F, StructuredAut::Kind::G}) {
    StructuredAut s = blank(cd, kind);
    std::vector<std::size_t> alpha_idx(cd.classes(), 0);
    for (;;) {
      for (int t = 0; t < cd.classes(); ++t) s.alpha[t] = alphas[t][alpha_idx[t]];
      for (;;) {
        oracle::IsoMap iso = to_iso_map(M, s);
        if (!oracle::is_isomorphism(M, M, iso))
          throw error("internal: structured map failed incidence verification");
        out.push_back(s);
        // odometer over shifts, slot (t,k) with modulus nu_t
        int t = cd.classes() - 1, k = -1;
        for (; t >= 0; --t) {
          for (k = cd.multiplicities[t] - 1; k >= 0; --k) {
            if (++s.shift[t][k] < cd.lengths[t]) goto next_shift;
            s.shift[t][k] = 0;
          }
        }
        break;
      next_shift:;
      }
      int t = cd.classes() - 1;
      for (; t >= 0; --t) {
        if (++alpha_idx[t] < alphas[t].size()) break;
        alpha_idx[t] = 0;
      }
      if (t < 0) break;
    }
  }
  return out;
}

namespace {

// Point images of the two tabulated maps, in the order a1..a4, b1..b4.
// Block images are induced from the point action.
constexpr const char* kTildePoints[8] = {"b1", "b2", "a4", "a3", "a1", "a2", "b3", "b4"};
constexpr const char* kHatPoints[8] = {"a2", "a1", "b3", "b4", "b1", "b2", "a3", "a4"};

oracle::IsoMap table_map(const MobiusPair& M, const char* const points[8]) {
  const int n = M.n();
  oracle::IsoMap f{std::vector<int>(2 * n, -1), std::vector<int>(2 * n, -1)};
  for (int p = 0; p < 2 * n; ++p)
    f.point_map[p] = config::point_id(config::parse_element(points[p]), n);
  for (int b = 0; b < 2 * n; ++b) {
    Bits image(2 * n);
    M.block_points(b).for_each([&](int p) { image.set(f.point_map[p]); });
    int target = -1;
    for (int c = 0; c < 2 * n; ++c)
      if (M.block_points(c) == image) target = c;
    if (target < 0) throw error("internal: tabulated map does not send blocks to blocks");
    f.block_map[b] = target;
  }
  return f;
}

}  // namespace

std::vector<NamedMap> special_maps_n4(const MobiusPair& M) {
  if (M.n() != 4) return {};
  const std::vector<int>& im = M.phi().images();
  const char* const* points = nullptr;
  std::string name;
  if (im == std::vector<int>{1, 2, 4, 3}) {
    points = kTildePoints;
    name = "f~";
  } else if (im == std::vector<int>{2, 1, 4, 3}) {
    points = kHatPoints;
    name = "f^";
  } else {
    return {};
  }
  oracle::IsoMap f = table_map(M, points);
  if (!oracle::is_isomorphism(M, M, f))
    throw error("internal: tabulated map failed incidence verification");
  const auto defining = oracle::defining_decomposition(M);
  const auto moved = oracle::apply_iso(defining, f);
  if (moved == defining)
    throw error("internal: tabulated map fixes the defining simplex pair");
  const auto all = oracle::enumerate_decompositions(M);
  if (!std::count(all.begin(), all.end(), moved))
    throw error("internal: tabulated map image is not a decomposition");
  return {{name, std::move(f)}};
}

std::uint64_t claimed_order(int n, const CycleDecomposition& cd) {
  if (n == 3) return 12;
  const std::vector<int> type = cd.cycle_type();
  if (n == 4) {
    if (type == std::vector<int>{1, 1, 1, 1}) return 192;
    if (type == std::vector<int>{1, 1, 2}) return 16;
    if (type == std::vector<int>{2, 2}) return 64;
  }
  std::uint64_t order = 1;
  for (int t = 0; t < cd.classes(); ++t) {
    for (int k = 0; k < cd.multiplicities[t]; ++k)
      order *= 2ull * cd.lengths[t];
    for (int k = 2; k <= cd.multiplicities[t]; ++k) order *= k;
  }
  return order;
}

std::vector<oracle::IsoMap> generated_closure(std::vector<oracle::IsoMap> gens, int n) {
  std::set<oracle::IsoMap> group;
  group.insert(oracle::identity_iso(n));
  for (auto& g : gens) group.insert(g);
  std::vector<oracle::IsoMap> frontier(group.begin(), group.end());
  while (!frontier.empty()) {
    std::vector<oracle::IsoMap> fresh;
    for (const auto& f : frontier)
      for (const auto& g : gens) {
        auto h = oracle::compose(f, g);
        if (group.insert(h).second) fresh.push_back(std::move(h));
      }
    frontier = std::move(fresh);
  }
  return {group.begin(), group.end()};
}

AutReport aut_report(const MobiusPair& M, int threads) {
  AutReport r;
  r.n = M.n();
  r.phi = perm::to_cycle_string(M.phi());

  const auto autos = oracle::automorphisms(M, threads);
  r.oracle_order = autos.size();

  const auto structured = structured_automorphisms(M);
  std::vector<oracle::IsoMap> structured_isos;
  structured_isos.reserve(structured.size());
  for (const auto& s : structured) structured_isos.push_back(to_iso_map(M, s));
  std::sort(structured_isos.begin(), structured_isos.end());
  r.structured_order = structured_isos.size();

  for (const auto& f : structured_isos)
    if (!std::binary_search(autos.begin(), autos.end(), f))
      throw error("internal: structured map missing from the oracle group");
  if (r.oracle_order % r.structured_order != 0)
    throw error("internal: structured order does not divide the oracle order");

  r.structured_equals_oracle =
      structured_isos.size() == autos.size() &&
      std::equal(structured_isos.begin(), structured_isos.end(), autos.begin());

  const auto special = special_maps_n4(M);
  if (special.empty()) {
    r.extended_order = r.structured_order;
    r.extended_equals_oracle = r.structured_equals_oracle;
  } else {
    std::vector<oracle::IsoMap> gens = structured_isos;
    for (const auto& nm : special) gens.push_back(nm.map);
    const auto extended = generated_closure(std::move(gens), M.n());
    r.extended_order = extended.size();
    r.extended_equals_oracle =
        extended.size() == autos.size() &&
        std::equal(extended.begin(), extended.end(), autos.begin());
  }

  r.paper_claimed_order = claimed_order(M.n(), M.cycles());
  r.paper_matches_oracle = *r.paper_claimed_order == r.oracle_order;

  r.generator_names.push_back("g0");
  const auto& cd = M.cycles();
  for (int t = 0; t < cd.classes(); ++t) {
    if (cd.lengths[t] > 1)
      r.generator_names.push_back("f(shift t" + std::to_string(t + 1) + " k1)");
    for (int k = 1; k < cd.multiplicities[t]; ++k)
      r.generator_names.push_back("f(swap t" + std::to_string(t + 1) + " k" +
                                  std::to_string(k) + "," + std::to_string(k + 1) + ")");
  }
  for (const auto& nm : special) r.generator_names.push_back(nm.name);
  return r;
}

}  // namespace mobius::autgrp
