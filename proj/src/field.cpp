#include "resonance/field.hpp"

#include <algorithm>
#include <cctype>

namespace resonance {
namespace {

constexpr uint64_t kExtCap = 1u << 20;  // max q for extension fields

bool is_prime_u32(uint32_t p) {
  if (p < 2) return false;
  for (uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

uint32_t mod_inverse(uint32_t a, uint32_t p) {
  // Extended Euclid on integers; p prime, 0 < a < p.
  int64_t t = 0, nt = 1, r = p, nr = a;
  while (nr != 0) {
    int64_t qq = r / nr;
    std::swap(t -= qq * nt, nt);
    std::swap(r -= qq * nr, nr);
  }
  return static_cast<uint32_t>(t < 0 ? t + p : t);
}

// Dense polynomials over GF(p), little-endian coefficient vectors.
using Poly = std::vector<uint32_t>;

void ptrim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int pdeg(const Poly& a) { return static_cast<int>(a.size()) - 1; }

Poly psub(const Poly& a, const Poly& b, uint32_t p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < r.size(); ++i) {
    uint32_t x = i < a.size() ? a[i] : 0;
    uint32_t y = i < b.size() ? b[i] : 0;
    r[i] = (x + p - y) % p;
  }
  ptrim(r);
  return r;
}

// Remainder of a modulo monic f.
Poly pmod(Poly a, const Poly& f, uint32_t p) {
  ptrim(a);
  int df = pdeg(f);
  while (pdeg(a) >= df) {
    uint32_t c = a.back();
    int shift = pdeg(a) - df;
    if (c != 0) {
      for (int i = 0; i <= df; ++i) {
        uint64_t sub = static_cast<uint64_t>(c) * f[i] % p;
        a[i + shift] = static_cast<uint32_t>((a[i + shift] + p - sub) % p);
      }
    }
    a.pop_back();
    ptrim(a);
  }
  return a;
}

Poly pmulmod(const Poly& a, const Poly& b, const Poly& f, uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = static_cast<uint32_t>(
          (r[i + j] + static_cast<uint64_t>(a[i]) * b[j]) % p);
  }
  return pmod(std::move(r), f, p);
}

Poly ppowmod(Poly base, uint64_t n, const Poly& f, uint32_t p) {
  Poly r = {1};
  base = pmod(std::move(base), f, p);
  while (n) {
    if (n & 1) r = pmulmod(r, base, f, p);
    base = pmulmod(base, base, f, p);
    n >>= 1;
  }
  return r;
}

Poly pgcd(Poly a, Poly b, uint32_t p) {
  ptrim(a);
  ptrim(b);
  while (!b.empty()) {
    // Normalize b monic so pmod applies.
    uint32_t lead = b.back();
    if (lead != 1) {
      uint32_t li = mod_inverse(lead, p);
      for (auto& c : b) c = static_cast<uint32_t>(static_cast<uint64_t>(c) * li % p);
    }
    Poly r = pmod(std::move(a), b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::vector<uint64_t> prime_factors(uint64_t n) {
  std::vector<uint64_t> fs;
  for (uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      fs.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) fs.push_back(n);
  return fs;
}

// Irreducibility over GF(p) of monic f of degree e, via iterated Frobenius:
// f is irreducible iff x^(p^e) == x (mod f) and, for every prime r | e,
// gcd(x^(p^(e/r)) - x, f) is constant.
bool irreducible(const Poly& f, uint32_t p) {
  int e = pdeg(f);
  if (e < 1) return false;
  if (e == 1) return true;
  Poly x = {0, 1};
  std::vector<Poly> frob(e + 1);  // frob[k] = x^(p^k) mod f
  frob[0] = x;
  for (int k = 1; k <= e; ++k) frob[k] = ppowmod(frob[k - 1], p, f, p);
  if (frob[e] != x) return false;
  for (uint64_t r : prime_factors(e)) {
    Poly d = pgcd(psub(frob[e / r], x, p), f, p);
    if (pdeg(d) > 0) return false;
  }
  return true;
}

}  // namespace

uint32_t Field::digit(Fe a, uint32_t i) const {
  uint32_t c = a.code;
  for (uint32_t k = 0; k < i; ++k) c /= p_;
  return c % p_;
}

FieldPtr Field::make(uint32_t p, uint32_t e) {
  if (!is_prime_u32(p)) throw std::invalid_argument("field characteristic must be prime: " + std::to_string(p));
  if (e < 1) throw std::invalid_argument("field extension degree must be >= 1");
  if (p >= (1u << 31)) throw std::invalid_argument("prime too large");
  auto f = std::shared_ptr<Field>(new Field());
  f->p_ = p;
  f->e_ = e;
  if (e == 1) {
    f->q_ = p;
    f->mod_ = {0, 1};
    return f;
  }
  uint64_t q = 1;
  for (uint32_t i = 0; i < e; ++i) {
    q *= p;
    if (q > kExtCap) throw std::invalid_argument("extension field too large (q > 2^20)");
  }
  f->q_ = q;

  // Smallest monic irreducible: scan non-leading coefficient packings in
  // ascending base-p value.
  Poly mod;
  for (uint64_t v = 0; v < q; ++v) {
    Poly cand(e + 1, 0);
    uint64_t t = v;
    for (uint32_t i = 0; i < e; ++i) {
      cand[i] = static_cast<uint32_t>(t % p);
      t /= p;
    }
    cand[e] = 1;
    if (irreducible(cand, p)) {
      mod = cand;
      break;
    }
  }
  f->mod_ = std::vector<uint32_t>(mod.begin(), mod.end());

  // Multiplicative tables over a primitive element (smallest code).
  auto code_of = [&](const Poly& a) {
    uint64_t c = 0, w = 1;
    for (uint32_t i = 0; i < e; ++i) {
      c += (i < a.size() ? a[i] : 0) * w;
      w *= p;
    }
    return static_cast<uint32_t>(c);
  };
  auto poly_of = [&](uint32_t code) {
    Poly a(e, 0);
    for (uint32_t i = 0; i < e; ++i) {
      a[i] = code % p;
      code /= p;
    }
    ptrim(a);
    return a;
  };
  auto factors = prime_factors(q - 1);
  uint32_t gcode = 0;
  for (uint32_t c = 2; c < q && gcode == 0; ++c) {
    Poly a = poly_of(c);
    bool primitive = true;
    for (uint64_t r : factors) {
      Poly t = ppowmod(a, (q - 1) / r, mod, p);
      if (t == Poly{1}) {
        primitive = false;
        break;
      }
    }
    if (primitive) gcode = c;
  }
  if (gcode == 0) throw std::logic_error("no primitive element found");
  f->exp_.assign(q - 1, 0);
  f->log_.assign(q, 0);
  Poly g = poly_of(gcode), acc = {1};
  for (uint64_t i = 0; i < q - 1; ++i) {
    uint32_t c = code_of(acc);
    f->exp_[i] = c;
    f->log_[c] = static_cast<uint32_t>(i);
    acc = pmulmod(acc, g, mod, p);
  }
  if (acc != Poly{1}) throw std::logic_error("primitive element order mismatch");
  return f;
}

FieldPtr Field::parse_spec(const std::string& spec) {
  size_t caret = spec.find('^');
  try {
    if (caret == std::string::npos) {
      size_t pos = 0;
      unsigned long p = std::stoul(spec, &pos);
      if (pos != spec.size()) throw std::invalid_argument("");
      return make(static_cast<uint32_t>(p));
    }
    size_t pos = 0;
    unsigned long p = std::stoul(spec.substr(0, caret), &pos);
    if (pos != caret) throw std::invalid_argument("");
    std::string rest = spec.substr(caret + 1);
    unsigned long e = std::stoul(rest, &pos);
    if (pos != rest.size()) throw std::invalid_argument("");
    return make(static_cast<uint32_t>(p), static_cast<uint32_t>(e));
  } catch (const std::logic_error&) {
    throw std::invalid_argument("bad field spec: " + spec +
                                " (expected p or p^e)");
  }
}

std::string Field::spec() const {
  return e_ == 1 ? std::to_string(p_)
                 : std::to_string(p_) + "^" + std::to_string(e_);
}

Fe Field::gen() const {
  if (e_ < 2) throw std::logic_error("gen() requires an extension field");
  return Fe(p_);
}

Fe Field::fe(uint64_t code) const {
  if (code >= q_) throw std::invalid_argument("element code out of range");
  return Fe(static_cast<uint32_t>(code));
}

Fe Field::from_int(int64_t v) const {
  int64_t r = v % static_cast<int64_t>(p_);
  if (r < 0) r += p_;
  return Fe(static_cast<uint32_t>(r));
}

Fe Field::add(Fe a, Fe b) const {
  if (e_ == 1) {
    uint64_t s = static_cast<uint64_t>(a.code) + b.code;
    return Fe(static_cast<uint32_t>(s >= p_ ? s - p_ : s));
  }
  uint32_t r = 0, w = 1, x = a.code, y = b.code;
  for (uint32_t i = 0; i < e_; ++i) {
    uint32_t d = (x % p_) + (y % p_);
    if (d >= p_) d -= p_;
    r += d * w;
    x /= p_;
    y /= p_;
    w *= p_;
  }
  return Fe(r);
}

Fe Field::neg(Fe a) const {
  if (e_ == 1) return Fe(a.code == 0 ? 0 : p_ - a.code);
  uint32_t r = 0, w = 1, x = a.code;
  for (uint32_t i = 0; i < e_; ++i) {
    uint32_t d = x % p_;
    r += (d == 0 ? 0 : p_ - d) * w;
    x /= p_;
    w *= p_;
  }
  return Fe(r);
}

Fe Field::sub(Fe a, Fe b) const { return add(a, neg(b)); }

Fe Field::mul(Fe a, Fe b) const {
  if (e_ == 1)
    return Fe(static_cast<uint32_t>(static_cast<uint64_t>(a.code) * b.code % p_));
  if (a.code == 0 || b.code == 0) return Fe(0);
  uint64_t s = log_[a.code] + log_[b.code];
  if (s >= q_ - 1) s -= q_ - 1;
  return Fe(exp_[s]);
}

Fe Field::inv(Fe a) const {
  if (a.code == 0) throw std::domain_error("inverse of zero");
  if (e_ == 1) return Fe(mod_inverse(a.code, p_));
  return Fe(exp_[(q_ - 1 - log_[a.code]) % (q_ - 1)]);
}

Fe Field::pow(Fe a, uint64_t n) const {
  Fe r = one(), b = a;
  while (n) {
    if (n & 1) r = mul(r, b);
    b = mul(b, b);
    n >>= 1;
  }
  return r;
}

std::string Field::to_string(Fe a) const {
  if (e_ == 1) return std::to_string(a.code);
  if (a.code == 0) return "0";
  std::string s;
  for (int i = static_cast<int>(e_) - 1; i >= 0; --i) {
    uint32_t c = digit(a, i);
    if (c == 0) continue;
    if (!s.empty()) s += "+";
    if (i == 0) {
      s += std::to_string(c);
    } else {
      if (c != 1) s += std::to_string(c) + "*";
      s += "g";
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s;
}

Fe Field::parse(const std::string& input) const {
  std::string s;
  for (char c : input)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw std::invalid_argument("empty field element");
  if (e_ == 1) {
    size_t pos = 0;
    long long v = std::stoll(s, &pos);
    if (pos != s.size())
      throw std::invalid_argument("bad field element: " + input);
    return from_int(v);
  }
  Fe acc = zero();
  size_t i = 0;
  while (i < s.size()) {
    int sign = 1;
    while (i < s.size() && (s[i] == '+' || s[i] == '-')) {
      if (s[i] == '-') sign = -sign;
      ++i;
    }
    if (i >= s.size()) throw std::invalid_argument("bad field element: " + input);
    uint64_t coef = 1;
    bool saw_coef = false;
    if (std::isdigit(static_cast<unsigned char>(s[i]))) {
      coef = 0;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
        coef = coef * 10 + (s[i++] - '0');
      saw_coef = true;
      if (i < s.size() && s[i] == '*') ++i;
    }
    uint32_t deg = 0;
    if (i < s.size() && s[i] == 'g') {
      ++i;
      deg = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
          throw std::invalid_argument("bad field element: " + input);
        deg = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
          deg = deg * 10 + (s[i++] - '0');
      }
    } else if (!saw_coef) {
      throw std::invalid_argument("bad field element: " + input);
    }
    if (deg >= e_)
      throw std::invalid_argument("term degree exceeds field degree: " + input);
    uint32_t c = static_cast<uint32_t>(coef % p_);
    Fe term(0);
    uint32_t w = 1;
    for (uint32_t k = 0; k < deg; ++k) w *= p_;
    term = Fe(c * w);
    acc = sign > 0 ? add(acc, term) : sub(acc, term);
  }
  return acc;
}

Fe Embedding::map(Fe a) const {
  Fe r = to->zero();
  uint32_t x = a.code, p = from->p();
  for (uint32_t i = 0; i < from->e(); ++i) {
    uint32_t d = x % p;
    x /= p;
    if (d) r = to->add(r, to->mul(to->from_int(d), pow_img[i]));
  }
  return r;
}

Embedding make_embedding(const FieldPtr& from, const FieldPtr& to) {
  if (from->p() != to->p())
    throw std::invalid_argument("embedding requires equal characteristic");
  if (to->e() % from->e() != 0)
    throw std::invalid_argument("embedding requires source degree dividing target degree");
  Embedding emb{from, to, {}};
  emb.pow_img.resize(from->e());
  emb.pow_img[0] = to->one();
  if (from->e() == 1) return emb;
  // Image of gen(): smallest root of the source modulus in the target.
  const auto& m = from->modulus();
  Fe root = to->zero();
  bool found = false;
  for (uint64_t c = 0; c < to->q(); ++c) {
    Fe x = to->fe(c), acc = to->zero(), xp = to->one();
    for (size_t i = 0; i < m.size(); ++i) {
      acc = to->add(acc, to->mul(to->from_int(m[i]), xp));
      xp = to->mul(xp, x);
    }
    if (acc == to->zero()) {
      root = x;
      found = true;
      break;
    }
  }
  if (!found) throw std::logic_error("no root of source modulus in target field");
  for (uint32_t i = 1; i < from->e(); ++i)
    emb.pow_img[i] = to->mul(emb.pow_img[i - 1], root);
  return emb;
}

}  // namespace resonance
