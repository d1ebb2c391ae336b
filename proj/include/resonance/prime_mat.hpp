#pragma once

#include <cstdint>
#include <vector>

#include "resonance/gf_kernels.hpp"

namespace resonance {

// Incremental row-echelon rank over a prime field GF(p), p <= 251, built on
// the byte kernels. Designed for hot loops: construct once, then reset() and
// feed() rows without allocating. Rows are byte vectors of length stride()
// (cols rounded up to 16) with entries reduced mod p.
class Eliminator {
 public:
  Eliminator(uint8_t p, int cols);

  uint8_t p() const { return p_; }
  int cols() const { return cols_; }
  int stride() const { return stride_; }
  int rank() const { return static_cast<int>(pivcol_.size()); }

  void reset() { pivcol_.clear(); }

  // Reduces r in place against the current pivot rows. If a nonzero entry
  // remains, normalizes r and installs it as a new pivot. Returns the rank
  // after the update. Pivot columns are the leading columns of the reduced
  // rows, so the result equals Gaussian-elimination rank for any feed order.
  int feed(uint8_t* r);

 private:
  uint8_t p_;
  uint16_t magic_;
  int cols_, stride_;
  std::vector<uint8_t> pivrows_;  // cols x stride, normalized pivot rows
  std::vector<int> pivcol_;
  std::vector<uint8_t> inv_;  // multiplicative inverses mod p
  const gfk::Ops* ops_;
};

}  // namespace resonance
