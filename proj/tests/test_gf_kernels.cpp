#include <cstring>
#include <random>
#include <vector>

#include "doctest.h"
#include "resonance/gf_kernels.hpp"
#include "resonance/matrix.hpp"
#include "resonance/prime_mat.hpp"

using namespace resonance;

namespace {

// Oracle: plain 32-bit modular arithmetic, no Barrett tricks.
void axpy_oracle(std::vector<uint8_t>& dst, const std::vector<uint8_t>& src,
                 uint8_t c, uint8_t p) {
  for (size_t i = 0; i < dst.size(); ++i)
    dst[i] = static_cast<uint8_t>((dst[i] + uint32_t(c) * src[i]) % p);
}

void scale_oracle(std::vector<uint8_t>& dst, uint8_t c, uint8_t p) {
  for (size_t i = 0; i < dst.size(); ++i)
    dst[i] = static_cast<uint8_t>(uint32_t(c) * dst[i] % p);
}

}  // namespace

TEST_CASE("barrett magic reduces every representable product") {
  for (uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 31u, 61u, 127u, 193u, 251u}) {
    uint16_t magic = gfk::barrett_magic(static_cast<uint8_t>(p));
    uint32_t maxval = (p - 1) * (p - 1) + (p - 1);
    REQUIRE(maxval < (1u << 16));
    for (uint32_t x = 0; x <= maxval; ++x) {
      uint16_t qhat = static_cast<uint16_t>((x * magic) >> 16);
      uint16_t r = static_cast<uint16_t>(x - uint32_t(qhat) * p);
      uint16_t rp = static_cast<uint16_t>(r + p);
      uint16_t red = std::min(r, rp);  // matches the kernels' min-select
      if (red != x % p) {
        CAPTURE(p);
        CAPTURE(x);
        REQUIRE(red == x % p);
      }
    }
  }
}

TEST_CASE("every compiled kernel agrees with the oracle") {
  size_t count = 0;
  const gfk::Ops* const* impls = gfk::available_ops(&count);
  REQUIRE(count >= 1);
  std::mt19937 rng(4242);
  std::vector<size_t> lengths = {0, 1, 3, 15, 16, 17, 31, 32, 33, 100, 257};
  for (uint8_t p : {2, 3, 5, 7, 11, 13, 127, 251}) {
    uint16_t magic = gfk::barrett_magic(p);
    std::uniform_int_distribution<uint32_t> d(0, p - 1);
    for (size_t len : lengths) {
      std::vector<uint8_t> base(len), src(len);
      for (auto& x : base) x = static_cast<uint8_t>(d(rng));
      for (auto& x : src) x = static_cast<uint8_t>(d(rng));
      for (uint32_t cv = 0; cv < p; cv += (p > 16 ? 37 : 1)) {
        uint8_t c = static_cast<uint8_t>(cv % p);
        std::vector<uint8_t> want = base;
        axpy_oracle(want, src, c, p);
        for (size_t i = 0; i < count; ++i) {
          std::vector<uint8_t> got = base;
          impls[i]->axpy(got.data(), src.data(), c, len, p, magic);
          CAPTURE(impls[i]->name);
          CAPTURE(int(p));
          CAPTURE(len);
          CHECK(got == want);
        }
        want = base;
        scale_oracle(want, c, p);
        for (size_t i = 0; i < count; ++i) {
          std::vector<uint8_t> got = base;
          impls[i]->scale(got.data(), c, len, p, magic);
          CHECK(got == want);
        }
      }
    }
    // saturated inputs: worst-case formed value (p-1)^2 + (p-1)
    std::vector<uint8_t> sat(64, static_cast<uint8_t>(p - 1));
    std::vector<uint8_t> want = sat;
    axpy_oracle(want, sat, static_cast<uint8_t>(p - 1), p);
    for (size_t i = 0; i < count; ++i) {
      std::vector<uint8_t> got = sat;
      impls[i]->axpy(got.data(), sat.data(), static_cast<uint8_t>(p - 1), 64, p,
                     magic);
      CHECK(got == want);
    }
  }
}

TEST_CASE("active ops is one of the available ops") {
  size_t count = 0;
  const gfk::Ops* const* impls = gfk::available_ops(&count);
  const gfk::Ops& act = gfk::active_ops();
  bool found = false;
  for (size_t i = 0; i < count; ++i)
    if (impls[i] == &act) found = true;
  CHECK(found);
  CHECK(gfk::scalar_ops().axpy != nullptr);
}

TEST_CASE("eliminator rank matches the generic matrix rank") {
  std::mt19937 rng(987);
  for (uint8_t p : {2, 3, 5, 7, 251}) {
    FieldPtr f = Field::make(p);
    std::uniform_int_distribution<uint32_t> d(0, p - 1);
    for (int trial = 0; trial < 20; ++trial) {
      int rows = 1 + static_cast<int>(rng() % 8);
      int cols = 1 + static_cast<int>(rng() % 8);
      Matrix m(f, rows, cols);
      Eliminator el(p, cols);
      std::vector<uint8_t> buf(el.stride());
      for (int r = 0; r < rows; ++r) {
        std::memset(buf.data(), 0, buf.size());
        for (int c = 0; c < cols; ++c) {
          uint32_t v = d(rng);
          m.set(r, c, f->fe(v));
          buf[c] = static_cast<uint8_t>(v);
        }
        el.feed(buf.data());
      }
      CAPTURE(int(p));
      CHECK(el.rank() == m.rank());
      // feeding the same rows again must not raise the rank
      int before = el.rank();
      for (int r = 0; r < rows; ++r) {
        std::memset(buf.data(), 0, buf.size());
        for (int c = 0; c < cols; ++c) buf[c] = static_cast<uint8_t>(m.get(r, c).code);
        el.feed(buf.data());
      }
      CHECK(el.rank() == before);
      el.reset();
      CHECK(el.rank() == 0);
    }
  }
}
