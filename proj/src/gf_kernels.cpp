#include "resonance/gf_kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#define GFK_X86 1
#include <immintrin.h>
#elif defined(__aarch64__)
#define GFK_NEON 1
#include <arm_neon.h>
#endif

namespace resonance {
namespace gfk {

uint16_t barrett_magic(uint8_t p) {
  return static_cast<uint16_t>(65536u / p + 1);
}

namespace {

void axpy_scalar(uint8_t* dst, const uint8_t* src, uint8_t c, size_t len,
                 uint8_t p, uint16_t) {
  for (size_t i = 0; i < len; ++i)
    dst[i] = static_cast<uint8_t>(
        (dst[i] + static_cast<unsigned>(c) * src[i]) % p);
}

void scale_scalar(uint8_t* dst, uint8_t c, size_t len, uint8_t p, uint16_t) {
  for (size_t i = 0; i < len; ++i)
    dst[i] = static_cast<uint8_t>((static_cast<unsigned>(c) * dst[i]) % p);
}

const Ops kScalar = {axpy_scalar, scale_scalar, "scalar"};

#if GFK_X86

__attribute__((target("avx2"))) inline __m256i reduce16_avx2(__m256i x,
                                                             __m256i vp,
                                                             __m256i vm) {
  __m256i qhat = _mm256_mulhi_epu16(x, vm);
  __m256i r = _mm256_sub_epi16(x, _mm256_mullo_epi16(qhat, vp));
  // r in [-p, p) as a signed value; min over unsigned picks the reduced rep.
  return _mm256_min_epu16(r, _mm256_add_epi16(r, vp));
}

__attribute__((target("avx2"))) void axpy_avx2(uint8_t* dst,
                                               const uint8_t* src, uint8_t c,
                                               size_t len, uint8_t p,
                                               uint16_t magic) {
  const __m256i vc = _mm256_set1_epi16(c);
  const __m256i vp = _mm256_set1_epi16(p);
  const __m256i vm = _mm256_set1_epi16(static_cast<short>(magic));
  size_t i = 0;
  for (; i + 16 <= len; i += 16) {
    __m256i s = _mm256_cvtepu8_epi16(
        _mm_loadu_si128(reinterpret_cast<const __m128i*>(src + i)));
    __m256i d = _mm256_cvtepu8_epi16(
        _mm_loadu_si128(reinterpret_cast<const __m128i*>(dst + i)));
    __m256i x = _mm256_add_epi16(d, _mm256_mullo_epi16(s, vc));
    __m256i r = reduce16_avx2(x, vp, vm);
    __m128i packed = _mm_packus_epi16(_mm256_castsi256_si128(r),
                                      _mm256_extracti128_si256(r, 1));
    _mm_storeu_si128(reinterpret_cast<__m128i*>(dst + i), packed);
  }
  if (i < len) axpy_scalar(dst + i, src + i, c, len - i, p, magic);
}

__attribute__((target("avx2"))) void scale_avx2(uint8_t* dst, uint8_t c,
                                                size_t len, uint8_t p,
                                                uint16_t magic) {
  const __m256i vc = _mm256_set1_epi16(c);
  const __m256i vp = _mm256_set1_epi16(p);
  const __m256i vm = _mm256_set1_epi16(static_cast<short>(magic));
  size_t i = 0;
  for (; i + 16 <= len; i += 16) {
    __m256i d = _mm256_cvtepu8_epi16(
        _mm_loadu_si128(reinterpret_cast<const __m128i*>(dst + i)));
    __m256i r = reduce16_avx2(_mm256_mullo_epi16(d, vc), vp, vm);
    __m128i packed = _mm_packus_epi16(_mm256_castsi256_si128(r),
                                      _mm256_extracti128_si256(r, 1));
    _mm_storeu_si128(reinterpret_cast<__m128i*>(dst + i), packed);
  }
  if (i < len) scale_scalar(dst + i, c, len - i, p, magic);
}

const Ops kAvx2 = {axpy_avx2, scale_avx2, "avx2"};

#endif  // GFK_X86

#if GFK_NEON

inline uint16x8_t reduce16_neon(uint16x8_t x, uint16x8_t vp, uint16x8_t vm) {
  uint32x4_t lo = vmull_u16(vget_low_u16(x), vget_low_u16(vm));
  uint32x4_t hi = vmull_u16(vget_high_u16(x), vget_high_u16(vm));
  uint16x8_t qhat = vcombine_u16(vshrn_n_u32(lo, 16), vshrn_n_u32(hi, 16));
  uint16x8_t r = vsubq_u16(x, vmulq_u16(qhat, vp));
  return vminq_u16(r, vaddq_u16(r, vp));
}

void axpy_neon(uint8_t* dst, const uint8_t* src, uint8_t c, size_t len,
               uint8_t p, uint16_t magic) {
  const uint16x8_t vc = vdupq_n_u16(c);
  const uint16x8_t vp = vdupq_n_u16(p);
  const uint16x8_t vm = vdupq_n_u16(magic);
  size_t i = 0;
  for (; i + 8 <= len; i += 8) {
    uint16x8_t s = vmovl_u8(vld1_u8(src + i));
    uint16x8_t d = vmovl_u8(vld1_u8(dst + i));
    uint16x8_t x = vmlaq_u16(d, s, vc);
    vst1_u8(dst + i, vmovn_u16(reduce16_neon(x, vp, vm)));
  }
  if (i < len) axpy_scalar(dst + i, src + i, c, len - i, p, magic);
}

void scale_neon(uint8_t* dst, uint8_t c, size_t len, uint8_t p,
                uint16_t magic) {
  const uint16x8_t vc = vdupq_n_u16(c);
  const uint16x8_t vp = vdupq_n_u16(p);
  const uint16x8_t vm = vdupq_n_u16(magic);
  size_t i = 0;
  for (; i + 8 <= len; i += 8) {
    uint16x8_t d = vmovl_u8(vld1_u8(dst + i));
    vst1_u8(dst + i, vmovn_u16(reduce16_neon(vmulq_u16(d, vc), vp, vm)));
  }
  if (i < len) scale_scalar(dst + i, c, len - i, p, magic);
}

const Ops kNeon = {axpy_neon, scale_neon, "neon"};

#endif  // GFK_NEON

const Ops* pick_active() {
#if GFK_X86
  if (__builtin_cpu_supports("avx2")) return &kAvx2;
#elif GFK_NEON
  return &kNeon;
#endif
  return &kScalar;
}

}  // namespace

const Ops& scalar_ops() { return kScalar; }

const Ops& active_ops() {
  static const Ops* active = pick_active();
  return *active;
}

const Ops* const* available_ops(size_t* count) {
  static const Ops* all[] = {
    &kScalar,
#if GFK_X86
    &kAvx2,
#endif
#if GFK_NEON
    &kNeon,
#endif
  };
  *count = sizeof(all) / sizeof(all[0]);
#if GFK_X86
  if (!__builtin_cpu_supports("avx2")) *count = 1;
#endif
  return all;
}

}  // namespace gfk
}  // namespace resonance
