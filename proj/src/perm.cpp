#include "mobius/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace mobius::perm {

Permutation::Permutation(int n) {
  if (n < 1) throw error("permutation degree must be at least 1, got " + std::to_string(n));
  images_.resize(n);
  std::iota(images_.begin(), images_.end(), 1);
}

Permutation Permutation::from_images(std::vector<int> images) {
  const int n = static_cast<int>(images.size());
  if (n < 1) throw error("permutation degree must be at least 1");
  std::vector<char> seen(n + 1, 0);
  for (int v : images) {
    if (v < 1 || v > n)
      throw error("element " + std::to_string(v) + " out of range 1.." + std::to_string(n));
    if (seen[v]) throw error("duplicate element " + std::to_string(v));
    seen[v] = 1;
  }
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 1; i <= degree(); ++i) inv[images_[i - 1] - 1] = i;
  Permutation p;
  p.images_ = std::move(inv);
  return p;
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= degree(); ++i)
    if (images_[i - 1] != i) return false;
  return true;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree())
    throw error("degree mismatch: " + std::to_string(a.degree()) + " vs " +
                std::to_string(b.degree()));
  std::vector<int> im(a.degree());
  for (int i = 1; i <= a.degree(); ++i) im[i - 1] = a(b(i));
  Permutation p;
  p.images_ = std::move(im);
  return p;
}

std::vector<int> CycleDecomposition::cycle_type() const {
  std::vector<int> type;
  for (int t = 0; t < classes(); ++t)
    type.insert(type.end(), multiplicities[t], lengths[t]);
  return type;
}

namespace {

std::vector<std::vector<int>> raw_cycles(const Permutation& p) {
  const int n = p.degree();
  std::vector<char> visited(n + 1, 0);
  std::vector<std::vector<int>> cycles;
  for (int i = 1; i <= n; ++i) {
    if (visited[i]) continue;
    std::vector<int> cyc;
    int j = i;
    do {
      visited[j] = 1;
      cyc.push_back(j);
      j = p(j);
    } while (j != i);
    cycles.push_back(std::move(cyc));
  }
  // Walking from the smallest unvisited element anchors every cycle at its
  // minimum; order cycles shortest first, then by anchor.
  std::sort(cycles.begin(), cycles.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.front() < b.front();
  });
  return cycles;
}

int parse_int_token(const std::string& tok, int n) {
  std::size_t pos = 0;
  int v = 0;
  try {
    v = std::stoi(tok, &pos);
  } catch (const std::exception&) {
    throw parse_error("malformed permutation: unexpected token '" + tok + "'");
  }
  if (pos != tok.size())
    throw parse_error("malformed permutation: unexpected token '" + tok + "'");
  if (v < 1 || v > n)
    throw parse_error("element " + tok + " out of range 1.." + std::to_string(n));
  return v;
}

Permutation parse_cycle_form(const std::string& text, int n) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 1);
  std::vector<char> seen(n + 1, 0);

  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(')
      throw parse_error(std::string("malformed permutation: expected '(' at '") + text[i] + "'");
    ++i;
    std::vector<int> cyc;
    for (;;) {
      skip_ws();
      if (i >= text.size()) throw parse_error("malformed permutation: unclosed cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      std::size_t start = i;
      while (i < text.size() && text[i] != ')' && text[i] != ',' &&
             !std::isspace(static_cast<unsigned char>(text[i])))
        ++i;
      std::string tok = text.substr(start, i - start);
      if (i < text.size() && text[i] == ',') ++i;
      int v = parse_int_token(tok, n);
      if (seen[v]) throw parse_error("duplicate element " + std::to_string(v));
      seen[v] = 1;
      cyc.push_back(v);
    }
    if (cyc.empty()) throw parse_error("malformed permutation: empty cycle");
    for (std::size_t j = 0; j < cyc.size(); ++j)
      images[cyc[j] - 1] = cyc[(j + 1) % cyc.size()];
    skip_ws();
  }
  return Permutation::from_images(std::move(images));
}

Permutation parse_image_form(const std::string& text, int n) {
  std::istringstream in(text);
  std::vector<int> images;
  std::string tok;
  while (in >> tok) images.push_back(parse_int_token(tok, n));
  if (static_cast<int>(images.size()) != n)
    throw parse_error("expected " + std::to_string(n) + " images, got " +
                      std::to_string(images.size()));
  try {
    return Permutation::from_images(std::move(images));
  } catch (const error& e) {
    throw parse_error(e.what());
  }
}

}  // namespace

Permutation parse_permutation(const std::string& text, int n) {
  if (n < 1) throw parse_error("degree must be at least 1, got " + std::to_string(n));
  if (text.find_first_not_of(" \t\r\n") == std::string::npos)
    throw parse_error("empty permutation");
  if (text.find('(') != std::string::npos) return parse_cycle_form(text, n);
  return parse_image_form(text, n);
}

std::string to_cycle_string(const Permutation& p) {
  std::string out;
  for (const auto& cyc : raw_cycles(p)) {
    out += '(';
    for (std::size_t j = 0; j < cyc.size(); ++j) {
      if (j) out += ' ';
      out += std::to_string(cyc[j]);
    }
    out += ')';
  }
  return out;
}

CycleDecomposition cycle_decomposition(const Permutation& p) {
  CycleDecomposition cd;
  cd.n = p.degree();
  auto cycles = raw_cycles(p);
  for (auto& cyc : cycles) {
    const int len = static_cast<int>(cyc.size());
    if (cd.lengths.empty() || cd.lengths.back() != len) {
      cd.lengths.push_back(len);
      cd.multiplicities.push_back(0);
      cd.domains.emplace_back();
    }
    ++cd.multiplicities.back();
    cd.domains.back().push_back(std::move(cyc));
  }
  cd.offsets.resize(cd.classes());
  int base = 0;
  for (int t = 0; t < cd.classes(); ++t) {
    for (int k = 0; k < cd.multiplicities[t]; ++k)
      cd.offsets[t].push_back(base + k * cd.lengths[t] + 1);
    base += cd.multiplicities[t] * cd.lengths[t];
  }
  return cd;
}

Permutation canonical_rep(std::vector<int> cycle_lengths) {
  if (cycle_lengths.empty()) throw error("empty cycle-length multiset");
  std::sort(cycle_lengths.begin(), cycle_lengths.end());
  if (cycle_lengths.front() < 1) throw error("cycle lengths must be positive");
  const int n = std::accumulate(cycle_lengths.begin(), cycle_lengths.end(), 0);
  std::vector<int> images(n);
  int pos = 1;
  for (int len : cycle_lengths) {
    for (int j = 0; j < len - 1; ++j) images[pos + j - 1] = pos + j + 1;
    images[pos + len - 2] = pos;
    pos += len;
  }
  return Permutation::from_images(std::move(images));
}

Permutation conjugate(const Permutation& p, const Permutation& a) {
  if (p.degree() != a.degree())
    throw error("degree mismatch: " + std::to_string(p.degree()) + " vs " +
                std::to_string(a.degree()));
  std::vector<int> im(p.degree());
  for (int i = 1; i <= p.degree(); ++i) im[a(i) - 1] = a(p(i));
  return Permutation::from_images(std::move(im));
}

std::optional<Permutation> are_conjugate(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw error("degree mismatch: " + std::to_string(p.degree()) + " vs " +
                std::to_string(q.degree()));
  auto cp = raw_cycles(p);
  auto cq = raw_cycles(q);
  if (cp.size() != cq.size()) return std::nullopt;
  for (std::size_t c = 0; c < cp.size(); ++c)
    if (cp[c].size() != cq[c].size()) return std::nullopt;
  std::vector<int> im(p.degree());
  for (std::size_t c = 0; c < cp.size(); ++c)
    for (std::size_t j = 0; j < cp[c].size(); ++j) im[cp[c][j] - 1] = cq[c][j];
  return Permutation::from_images(std::move(im));
}

std::uint64_t centralizer_order(const Permutation& p) {
  auto cd = cycle_decomposition(p);
  std::uint64_t order = 1;
  for (int t = 0; t < cd.classes(); ++t) {
    for (int k = 0; k < cd.multiplicities[t]; ++k)
      order *= static_cast<std::uint64_t>(cd.lengths[t]);
    for (int k = 2; k <= cd.multiplicities[t]; ++k)
      order *= static_cast<std::uint64_t>(k);
  }
  return order;
}

std::vector<std::vector<int>> invariant_subsets(const Permutation& p, int size) {
  if (size < 0 || size > p.degree())
    throw error("subset size " + std::to_string(size) + " out of range 0.." +
                std::to_string(p.degree()));
  auto cd = cycle_decomposition(p);
  std::vector<std::vector<int>> doms;
  for (const auto& per_len : cd.domains)
    for (const auto& d : per_len) doms.push_back(d);

  std::vector<std::vector<int>> out;
  std::vector<int> chosen;
  auto rec = [&](auto&& self, std::size_t idx, int remaining) -> void {
    if (remaining == 0) {
      std::vector<int> set = chosen;
      std::sort(set.begin(), set.end());
      out.push_back(std::move(set));
      return;
    }
    if (idx == doms.size()) return;
    self(self, idx + 1, remaining);
    if (static_cast<int>(doms[idx].size()) <= remaining) {
      chosen.insert(chosen.end(), doms[idx].begin(), doms[idx].end());
      self(self, idx + 1, remaining - static_cast<int>(doms[idx].size()));
      chosen.resize(chosen.size() - doms[idx].size());
    }
  };
  rec(rec, 0, size);
  std::sort(out.begin(), out.end());
  return out;
}

PartitionCount partition_count(int n) {
  if (n < 1) throw error("partition count needs n >= 1, got " + std::to_string(n));
  std::vector<BigInt> dp(n + 1);
  dp[0] = 1;
  for (int m = 1; m <= n; ++m) {
    BigInt acc = 0;
    for (int k = 1;; ++k) {
      const long g1 = static_cast<long>(k) * (3L * k - 1) / 2;
      const long g2 = static_cast<long>(k) * (3L * k + 1) / 2;
      if (g1 > m && g2 > m) break;
      BigInt term = 0;
      if (g1 <= m) term += dp[m - g1];
      if (g2 <= m) term += dp[m - g2];
      if (k % 2 == 1)
        acc += term;
      else
        acc -= term;
    }
    dp[m] = acc;
  }
  return {n, dp[n]};
}

std::vector<std::vector<int>> partitions_of(int n) {
  if (n < 1) throw error("partitions need n >= 1, got " + std::to_string(n));
  std::vector<std::vector<int>> out;
  std::vector<int> parts;
  auto rec = [&](auto&& self, int min_part, int remaining) -> void {
    if (remaining == 0) {
      out.push_back(parts);
      return;
    }
    for (int part = min_part; part <= remaining; ++part) {
      parts.push_back(part);
      self(self, part, remaining - part);
      parts.pop_back();
    }
  };
  rec(rec, 1, n);
  return out;
}

std::vector<Permutation> conjugacy_class_reps(int n) {
  std::vector<Permutation> reps;
  for (auto& parts : partitions_of(n)) reps.push_back(canonical_rep(parts));
  return reps;
}

}  // namespace mobius::perm
