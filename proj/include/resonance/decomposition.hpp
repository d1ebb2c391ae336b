#pragma once

#include <cstdint>
#include <vector>

#include "resonance/neighborly.hpp"
#include "resonance/os_algebra.hpp"

namespace resonance {

// One constituent of the degree-one resonance stratum: the structure, the
// dimensions of its kernel spaces, and its point set V = v_stratum(.., k)
// as sorted canonical ambient representatives.
struct Constituent {
  NeighborlyStructure gamma;
  int dim_k = 0;
  int dim_k0 = 0;
  std::vector<Vec> points;
  int proj_dim = -1;  // projective dimension of the span of the points
};

// Constituents over every enumerated structure. "all" keeps each structure
// whose point set is nonempty; "constituents" keeps the maximal ones under
// point-set inclusion (ties broken by keeping the earlier structure in
// enumeration order).
struct Decomposition {
  std::vector<Constituent> constituents;
  std::vector<Constituent> all;
};

Decomposition decompose(const Matroid& m, const FieldPtr& f, int k = 1,
                        uint64_t cap_points = 10000000,
                        uint64_t cap_structures = 10000000);

// Compares the scan stratum {la : dim Z(la) >= k+1} with the union of
// v_stratum over every enumerated structure, as point sets.
struct VerifyReport {
  size_t stratum_size = 0;
  size_t union_size = 0;
  size_t structures = 0;  // enumerated structures contributing points
  bool ok = false;
  std::vector<Vec> missing;  // stratum points in no V(gamma)
  std::vector<Vec> extra;    // union points outside the stratum
};

VerifyReport verify_decomposition(const Matroid& m, const FieldPtr& f,
                                  int k = 1, uint64_t cap_points = 10000000,
                                  uint64_t cap_structures = 10000000,
                                  const ScanResult* precomputed = nullptr);

}  // namespace resonance
