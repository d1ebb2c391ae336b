#include "resonance/prime_mat.hpp"

#include <cstring>
#include <stdexcept>

namespace resonance {

Eliminator::Eliminator(uint8_t p, int cols)
    : p_(p), magic_(gfk::barrett_magic(p)), cols_(cols),
      stride_((cols + 15) & ~15), ops_(&gfk::active_ops()) {
  if (p < 2) throw std::invalid_argument("Eliminator: p must be prime >= 2");
  pivrows_.assign(static_cast<size_t>(cols_) * stride_, 0);
  pivcol_.reserve(cols_);
  inv_.assign(p, 0);
  for (uint32_t a = 1; a < p; ++a)
    for (uint32_t b = 1; b < p; ++b)
      if (a * b % p == 1) inv_[a] = static_cast<uint8_t>(b);
}

int Eliminator::feed(uint8_t* r) {
  for (size_t k = 0; k < pivcol_.size(); ++k) {
    uint8_t c = r[pivcol_[k]];
    if (c == 0) continue;
    // r -= c * pivrow_k, i.e. r += (p - c) * pivrow_k.
    ops_->axpy(r, pivrows_.data() + k * stride_, static_cast<uint8_t>(p_ - c),
               stride_, p_, magic_);
  }
  int lead = -1;
  for (int c = 0; c < cols_; ++c)
    if (r[c] != 0) {
      lead = c;
      break;
    }
  if (lead < 0) return rank();
  uint8_t s = inv_[r[lead]];
  if (s != 1) ops_->scale(r, s, stride_, p_, magic_);
  std::memcpy(pivrows_.data() + pivcol_.size() * stride_, r, stride_);
  pivcol_.push_back(lead);
  return rank();
}

}  // namespace resonance
