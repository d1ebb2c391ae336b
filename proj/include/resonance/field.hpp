#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace resonance {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

// Element of a finite field GF(p^e), stored as the base-p digit packing of
// its polynomial residue: code = c0 + c1*p + ... + c_{e-1}*p^(e-1), where the
// residue is c0 + c1*g + ... with g the class of x modulo the field modulus.
struct Fe {
  uint32_t code = 0;
  constexpr Fe() = default;
  constexpr explicit Fe(uint32_t c) : code(c) {}
  friend constexpr bool operator==(Fe a, Fe b) { return a.code == b.code; }
  friend constexpr bool operator!=(Fe a, Fe b) { return a.code != b.code; }
  friend constexpr bool operator<(Fe a, Fe b) { return a.code < b.code; }
};

// Thrown when an operation would exceed a configured enumeration cap.
// required_cap reports the cap that would have been sufficient.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(const std::string& what, uint64_t required)
      : std::runtime_error(what), required_cap(required) {}
  uint64_t required_cap;
};

// Immutable finite field GF(p^e). For e >= 2 the modulus is the
// lexicographically smallest monic irreducible polynomial of degree e over
// GF(p): candidates are ordered by the base-p packed value of their
// non-leading coefficients, ascending. Construct via make(); share via
// FieldPtr. All operations are const and thread-safe after construction.
class Field {
 public:
  // p prime; e >= 1; p^e <= 2^20 for e >= 2, p < 2^31 for e == 1.
  static FieldPtr make(uint32_t p, uint32_t e = 1);
  // Parses "p" or "p^e".
  static FieldPtr parse_spec(const std::string& spec);

  uint32_t p() const { return p_; }
  uint32_t e() const { return e_; }
  uint64_t q() const { return q_; }
  bool prime_field() const { return e_ == 1; }
  std::string spec() const;  // "p" or "p^e"

  // Monic modulus; coefficient i multiplies x^i; size e+1. For e == 1 this
  // is {0, 1} (arithmetic is plain mod p).
  const std::vector<uint32_t>& modulus() const { return mod_; }

  Fe zero() const { return Fe(0); }
  Fe one() const { return Fe(1); }
  Fe gen() const;                  // class of x; requires e >= 2
  Fe fe(uint64_t code) const;      // validated
  Fe from_int(int64_t v) const;    // constant embedding of v mod p

  Fe add(Fe a, Fe b) const;
  Fe sub(Fe a, Fe b) const;
  Fe neg(Fe a) const;
  Fe mul(Fe a, Fe b) const;
  Fe inv(Fe a) const;
  Fe div(Fe a, Fe b) const { return mul(a, inv(b)); }
  Fe pow(Fe a, uint64_t n) const;
  Fe frobenius(Fe a) const { return pow(a, p_); }

  bool same(const Field& o) const { return p_ == o.p_ && e_ == o.e_; }

  // Prime fields print as decimal; extension fields as polynomials in g with
  // terms in descending degree, e.g. "g+1", "2*g^2". parse() accepts the
  // same forms plus optional '-' signs and whitespace.
  std::string to_string(Fe a) const;
  Fe parse(const std::string& s) const;

 private:
  Field() = default;
  uint32_t p_ = 0, e_ = 0;
  uint64_t q_ = 0;
  std::vector<uint32_t> mod_;
  std::vector<uint32_t> exp_, log_;  // multiplicative tables, e >= 2 only
  uint32_t digit(Fe a, uint32_t i) const;
};

// Embedding of a subfield into an extension: to.e() must be a multiple of
// from.e() (and characteristics equal). gen() of the source maps to the
// smallest root (by code) of the source modulus in the target.
struct Embedding {
  FieldPtr from, to;
  std::vector<Fe> pow_img;  // images of gen()^0 .. gen()^(e-1)
  Fe map(Fe a) const;
};
Embedding make_embedding(const FieldPtr& from, const FieldPtr& to);

}  // namespace resonance
