#include "resonance/decomposition.hpp"

#include <algorithm>
#include <set>

namespace resonance {

namespace {

std::vector<uint32_t> codes_of(const Vec& w) {
  std::vector<uint32_t> c;
  c.reserve(w.size());
  for (Fe x : w) c.push_back(x.code);
  return c;
}

std::set<std::vector<uint32_t>> code_set(const std::vector<Vec>& pts) {
  std::set<std::vector<uint32_t>> s;
  for (const auto& w : pts) s.insert(codes_of(w));
  return s;
}

}  // namespace

Decomposition decompose(const Matroid& m, const FieldPtr& f, int k,
                        uint64_t cap_points, uint64_t cap_structures) {
  Decomposition dec;
  for (const auto& ns : enumerate_neighborly(m, cap_structures)) {
    KSpaces ks = k_spaces(m, f, ns);
    if (ks.k.rows() == 0) continue;
    Constituent c;
    c.gamma = ns;
    c.dim_k = ks.k.rows();
    c.dim_k0 = ks.k0.rows();
    c.points = v_stratum(m, f, ns, k, cap_points);
    if (c.points.empty()) continue;
    c.proj_dim = Matrix::from_rows(f, c.points).rank() - 1;
    dec.all.push_back(std::move(c));
  }

  std::vector<std::set<std::vector<uint32_t>>> sets;
  sets.reserve(dec.all.size());
  for (const auto& c : dec.all) sets.push_back(code_set(c.points));
  for (size_t i = 0; i < dec.all.size(); ++i) {
    bool dominated = false;
    for (size_t j = 0; j < dec.all.size() && !dominated; ++j) {
      if (i == j) continue;
      if (std::includes(sets[j].begin(), sets[j].end(), sets[i].begin(),
                        sets[i].end()))
        dominated = sets[j] != sets[i] || j < i;
    }
    if (!dominated) dec.constituents.push_back(dec.all[i]);
  }
  return dec;
}

VerifyReport verify_decomposition(const Matroid& m, const FieldPtr& f, int k,
                                  uint64_t cap_points, uint64_t cap_structures,
                                  const ScanResult* precomputed) {
  VerifyReport rep;
  ScanResult local;
  const ScanResult* scan = precomputed;
  if (!scan) {
    local = resonance_scan(m, f, cap_points);
    scan = &local;
  }

  std::set<std::vector<uint32_t>> stratum_set;
  for (const auto& pt : stratum(*scan, k)) stratum_set.insert(codes_of(pt.w));
  rep.stratum_size = stratum_set.size();

  std::set<std::vector<uint32_t>> union_set;
  for (const auto& ns : enumerate_neighborly(m, cap_structures)) {
    auto pts = v_stratum(m, f, ns, k, cap_points);
    if (pts.empty()) continue;
    ++rep.structures;
    for (const auto& w : pts) union_set.insert(codes_of(w));
  }
  rep.union_size = union_set.size();

  auto back_to_vec = [&](const std::vector<uint32_t>& c) {
    Vec w;
    w.reserve(c.size());
    for (uint32_t x : c) w.push_back(Fe{x});
    return w;
  };
  for (const auto& c : stratum_set)
    if (!union_set.count(c)) rep.missing.push_back(back_to_vec(c));
  for (const auto& c : union_set)
    if (!stratum_set.count(c)) rep.extra.push_back(back_to_vec(c));
  rep.ok = rep.missing.empty() && rep.extra.empty();
  return rep;
}

}  // namespace resonance
