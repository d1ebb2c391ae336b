#pragma once

#include <cstddef>
#include <cstdint>

namespace resonance {
namespace gfk {

// Byte-vector kernels for arithmetic mod a prime p <= 251. Inputs must be
// reduced (entries < p) and c < p; outputs are reduced. Reduction uses the
// Barrett constant from barrett_magic(p): with M = floor(2^16/p) + 1 and
// qhat = mulhi_u16(x * M), x - qhat*p lands in [-p, p), which one
// conditional add fixes; exact for all x < 2^16, and the largest x the
// kernels form is (p-1)^2 + (p-1) < 2^16.
struct Ops {
  // dst[i] = (dst[i] + c * src[i]) mod p
  void (*axpy)(uint8_t* dst, const uint8_t* src, uint8_t c, size_t len,
               uint8_t p, uint16_t magic);
  // dst[i] = (c * dst[i]) mod p
  void (*scale)(uint8_t* dst, uint8_t c, size_t len, uint8_t p,
                uint16_t magic);
  const char* name;
};

uint16_t barrett_magic(uint8_t p);

// Portable reference implementation.
const Ops& scalar_ops();
// Best implementation for this machine, chosen once at runtime: AVX2 on
// x86-64 when the CPU supports it, NEON on aarch64, scalar otherwise.
const Ops& active_ops();
// All implementations compiled into this build (for equivalence tests).
const Ops* const* available_ops(size_t* count);

}  // namespace gfk
}  // namespace resonance
