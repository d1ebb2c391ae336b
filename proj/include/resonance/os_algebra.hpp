#pragma once

#include <string>
#include <vector>

#include "resonance/matrix.hpp"
#include "resonance/matroid.hpp"
#include "resonance/neighborly.hpp"

namespace resonance {

// Degree-two component of the graded algebra attached to the line data of
// m: the quotient of the span of products a_i a_j (i < j) by the line
// relations. A basis is indexed by pairs (X, x_j): one slot per line X
// (trivial pairs included) and per non-leading member x_j of X; the product
// a_i a_j for i < j inside X rewrites as a_{x1} a_j - a_{x1} a_i.
class Degree2Basis {
 public:
  explicit Degree2Basis(const Matroid& m);

  int n() const { return n_; }
  int dim() const { return static_cast<int>(slots_.size()); }
  // all_lines(m): nontrivial lines sorted, then trivial pairs ascending.
  const std::vector<std::vector<int>>& lines() const { return lines_; }

  struct Slot {
    int line;  // index into lines()
    int j;     // member index within the line, >= 1 (0 is the leader)
  };
  const std::vector<Slot>& slots() const { return slots_; }
  std::string slot_label(int s) const;  // e.g. "a1*a3"

  struct Term {
    int slot;
    int sign;  // +1 or -1
  };
  // Expansion of a_i a_j (1 <= i < j <= n) in the slot basis.
  const std::vector<Term>& rewrite(int i, int j) const;

 private:
  int n_ = 0;
  std::vector<std::vector<int>> lines_;
  std::vector<Slot> slots_;
  std::vector<std::vector<Term>> rw_;  // by pair index
  int pair_index(int i, int j) const { return (i - 1) * n_ + (j - 1); }
};

// Product a_la * a_eta = sum_{i<j} (la_i eta_j - la_j eta_i) a_i a_j in slot
// coordinates.
Vec multiply(const Degree2Basis& b, const FieldPtr& f, const Vec& la,
             const Vec& eta);

// Matrix of eta -> a_la * a_eta, dim() x n. Row (X, x_j) equals
// la(X) * e_{x_j} - la_{x_j} * 1_X, where la(X) is the sum of la over X;
// this closed form agrees with multiply() and is what the scan uses.
Matrix multiplication_matrix(const Degree2Basis& b, const FieldPtr& f,
                             const Vec& la);

// Kernel of multiplication by a_la, as basis rows; its dimension minus one
// is the depth of la (la itself is always in the kernel when la sums to
// zero... in general dim >= 1 for la != 0 iff la*la = 0).
Matrix z_of(const Degree2Basis& b, const FieldPtr& f, const Vec& la);
int depth_of(const Degree2Basis& b, const FieldPtr& f, const Vec& la);

// Full projective scan: canonical representatives la with dim Z(la) >= 2,
// in enumeration order (same order as projective_points). cap bounds the
// number of projective points visited.
struct ResonancePoint {
  Vec w;
  int zdim;
};
struct ScanResult {
  FieldPtr f;
  std::vector<ResonancePoint> points;
};
ScanResult resonance_scan(const Matroid& m, const FieldPtr& f,
                          uint64_t cap = 10000000);
// Reference implementation on the generic Matrix path (no byte kernels);
// must agree with resonance_scan exactly.
ScanResult resonance_scan_generic(const Matroid& m, const FieldPtr& f,
                                  uint64_t cap = 10000000);
// Points of the scan with dim Z >= k+1.
std::vector<ResonancePoint> stratum(const ScanResult& scan, int k);

// Partition structure of a resonant pair: cones are the common zeros, and
// i, j are co-blocked iff la_i eta_j - la_j eta_i = 0. Requires
// multiply(la, eta) == 0 with la, eta projectively independent.
NeighborlyStructure gamma_of_pair(const Matroid& m, const FieldPtr& f,
                                  const Vec& la, const Vec& eta);
// Partition structure of a single weight with dim Z(la) >= 2: cones are the
// coordinates vanishing on la and on all of Z(la); i, j are co-blocked iff
// the (i,j) minor vanishes for every eta in Z(la).
NeighborlyStructure gamma_lambda(const Matroid& m, const FieldPtr& f,
                                 const Vec& la);

// Searches the degree-d extension of f for mu in Z(la) with
// gamma_of_pair(la, mu) == gamma_lambda(la). If no partner exists at degree
// d, throws std::domain_error naming the smallest sufficient degree (probed
// up to max_degree).
struct GenericPartner {
  FieldPtr ext;
  Embedding emb;  // f into ext
  Vec la_ext;
  Vec mu;
};
GenericPartner generic_partner(const Matroid& m, const FieldPtr& f,
                               const Vec& la, uint32_t degree,
                               uint32_t max_degree = 12);

}  // namespace resonance
