#include "resonance/os_algebra.hpp"

#include <algorithm>
#include <cstring>
#include <map>
#include <stdexcept>

#include "resonance/prime_mat.hpp"

namespace resonance {

Degree2Basis::Degree2Basis(const Matroid& m) : n_(m.n), lines_(all_lines(m)) {
  rw_.assign(static_cast<size_t>(n_) * n_, {});
  for (size_t li = 0; li < lines_.size(); ++li) {
    const auto& x = lines_[li];
    int base = static_cast<int>(slots_.size());
    for (size_t j = 1; j < x.size(); ++j)
      slots_.push_back(Slot{static_cast<int>(li), static_cast<int>(j)});
    for (size_t i = 0; i < x.size(); ++i) {
      for (size_t j = i + 1; j < x.size(); ++j) {
        auto& terms = rw_[pair_index(x[i], x[j])];
        terms.push_back({base + static_cast<int>(j) - 1, +1});
        if (i > 0) terms.push_back({base + static_cast<int>(i) - 1, -1});
      }
    }
  }
}

std::string Degree2Basis::slot_label(int s) const {
  const Slot& sl = slots_[s];
  const auto& x = lines_[sl.line];
  return "a" + std::to_string(x[0]) + "*a" + std::to_string(x[sl.j]);
}

const std::vector<Degree2Basis::Term>& Degree2Basis::rewrite(int i,
                                                             int j) const {
  if (i < 1 || j <= i || j > n_)
    throw std::invalid_argument("rewrite needs 1 <= i < j <= n");
  return rw_[pair_index(i, j)];
}

Vec multiply(const Degree2Basis& b, const FieldPtr& f, const Vec& la,
             const Vec& eta) {
  if (static_cast<int>(la.size()) != b.n() ||
      static_cast<int>(eta.size()) != b.n())
    throw std::invalid_argument("weight length differs from ground size");
  Vec out(b.dim(), f->zero());
  for (int i = 1; i <= b.n(); ++i) {
    for (int j = i + 1; j <= b.n(); ++j) {
      Fe m = f->sub(f->mul(la[i - 1], eta[j - 1]), f->mul(la[j - 1], eta[i - 1]));
      if (m == f->zero()) continue;
      for (const auto& t : b.rewrite(i, j)) {
        Fe v = t.sign > 0 ? m : f->neg(m);
        out[t.slot] = f->add(out[t.slot], v);
      }
    }
  }
  return out;
}

Matrix multiplication_matrix(const Degree2Basis& b, const FieldPtr& f,
                             const Vec& la) {
  if (static_cast<int>(la.size()) != b.n())
    throw std::invalid_argument("weight length differs from ground size");
  Matrix m(f, b.dim(), b.n());
  std::vector<Fe> line_sum(b.lines().size(), f->zero());
  for (size_t li = 0; li < b.lines().size(); ++li)
    for (int x : b.lines()[li])
      line_sum[li] = f->add(line_sum[li], la[x - 1]);
  for (int s = 0; s < b.dim(); ++s) {
    const auto& sl = b.slots()[s];
    const auto& x = b.lines()[sl.line];
    int xj = x[sl.j];
    Fe lxj = la[xj - 1];
    for (int t : x) m.set(s, t - 1, f->neg(lxj));
    m.set(s, xj - 1, f->sub(line_sum[sl.line], lxj));
  }
  return m;
}

Matrix z_of(const Degree2Basis& b, const FieldPtr& f, const Vec& la) {
  return multiplication_matrix(b, f, la).kernel_basis();
}

int depth_of(const Degree2Basis& b, const FieldPtr& f, const Vec& la) {
  return z_of(b, f, la).rows() - 1;
}

namespace {

// Visits canonical projective representatives of F^n in the same order as
// projective_points(), without materializing them. fn receives the digit
// codes (uint32 each < q).
template <class Fn>
void for_each_projective_point(const FieldPtr& f, int n, Fn&& fn) {
  uint64_t q = f->q();
  std::vector<uint32_t> w(n, 0);
  for (int lead = 0; lead < n; ++lead) {
    std::fill(w.begin(), w.end(), 0u);
    w[lead] = 1;
    while (true) {
      fn(w);
      int i = n - 1;
      while (i > lead && w[i] + 1 == q) w[i--] = 0;
      if (i == lead) break;
      ++w[i];
    }
  }
}

ScanResult scan_fast(const Degree2Basis& b, const FieldPtr& f) {
  const uint8_t p = static_cast<uint8_t>(f->p());
  const int n = b.n(), dim = b.dim();
  Eliminator elim(p, n);
  const int stride = elim.stride();
  std::vector<uint8_t> rows(static_cast<size_t>(dim) * stride);

  // Per-slot fill data: the row of slot (X, x_j) is
  // la(X) * e_{x_j} - la_{x_j} * 1_X.
  struct SlotFill {
    int line;
    int xj;                  // 0-based column
    std::vector<int> cols;   // 0-based members of the line
  };
  std::vector<SlotFill> fills;
  for (int s = 0; s < dim; ++s) {
    const auto& sl = b.slots()[s];
    SlotFill sf{sl.line, b.lines()[sl.line][sl.j] - 1, {}};
    for (int x : b.lines()[sl.line]) sf.cols.push_back(x - 1);
    fills.push_back(std::move(sf));
  }

  ScanResult result{f, {}};
  std::vector<uint8_t> line_sum(b.lines().size());
  for_each_projective_point(f, n, [&](const std::vector<uint32_t>& w) {
    for (size_t li = 0; li < b.lines().size(); ++li) {
      unsigned s = 0;
      for (int x : b.lines()[li]) s += w[x - 1];
      line_sum[li] = static_cast<uint8_t>(s % p);
    }
    std::memset(rows.data(), 0, rows.size());
    for (int s = 0; s < dim; ++s) {
      uint8_t* r = rows.data() + static_cast<size_t>(s) * stride;
      const SlotFill& sf = fills[s];
      uint8_t lxj = static_cast<uint8_t>(w[sf.xj]);
      if (lxj) {
        uint8_t neg = static_cast<uint8_t>(p - lxj);
        for (int c : sf.cols) r[c] = neg;
      }
      unsigned v = r[sf.xj] + line_sum[sf.line];
      r[sf.xj] = static_cast<uint8_t>(v >= p ? v - p : v);
    }
    elim.reset();
    int rank = 0;
    for (int s = 0; s < dim && rank < n - 1; ++s)
      rank = elim.feed(rows.data() + static_cast<size_t>(s) * stride);
    if (rank <= n - 2) {
      Vec la(n);
      for (int i = 0; i < n; ++i) la[i] = f->fe(w[i]);
      result.points.push_back({std::move(la), n - rank});
    }
  });
  return result;
}

}  // namespace

ScanResult resonance_scan_generic(const Matroid& m, const FieldPtr& f,
                                  uint64_t cap) {
  uint64_t total = projective_point_count(f, m.n);
  if (total > cap)
    throw CapExceeded("resonance scan needs cap >= " + std::to_string(total),
                      total);
  Degree2Basis b(m);
  ScanResult result{f, {}};
  for_each_projective_point(f, m.n, [&](const std::vector<uint32_t>& w) {
    Vec la(m.n);
    for (int i = 0; i < m.n; ++i) la[i] = f->fe(w[i]);
    int zdim = m.n - multiplication_matrix(b, f, la).rank();
    if (zdim >= 2) result.points.push_back({std::move(la), zdim});
  });
  return result;
}

ScanResult resonance_scan(const Matroid& m, const FieldPtr& f, uint64_t cap) {
  uint64_t total = projective_point_count(f, m.n);
  if (total > cap)
    throw CapExceeded("resonance scan needs cap >= " + std::to_string(total),
                      total);
  if (!f->prime_field() || f->p() > 251) return resonance_scan_generic(m, f, cap);
  Degree2Basis b(m);
  return scan_fast(b, f);
}

std::vector<ResonancePoint> stratum(const ScanResult& scan, int k) {
  if (k < 1) throw std::invalid_argument("stratum index must be >= 1");
  std::vector<ResonancePoint> out;
  for (const auto& pt : scan.points)
    if (pt.zdim >= k + 1) out.push_back(pt);
  return out;
}

namespace {

NeighborlyStructure partition_from_minors(const Matroid& m, const FieldPtr& f,
                                          const std::vector<Vec>& zbasis,
                                          const Vec& la) {
  // Cone vertices: zero in la and in every basis vector of Z. Support pairs
  // are co-blocked iff every minor vanishes; this relation must come out
  // transitive, which is checked.
  std::vector<int> cones, supp;
  for (int i = 0; i < m.n; ++i) {
    bool zero = la[i] == f->zero();
    for (const Vec& z : zbasis)
      if (z[i] != f->zero()) zero = false;
    (zero ? cones : supp).push_back(i + 1);
  }
  auto edge = [&](int i, int j) {  // 1-based
    for (const Vec& z : zbasis)
      if (f->sub(f->mul(la[i - 1], z[j - 1]), f->mul(la[j - 1], z[i - 1])) !=
          f->zero())
        return false;
    return true;
  };
  std::vector<std::vector<int>> blocks;
  std::vector<int> block_of(supp.size());
  for (size_t a = 0; a < supp.size(); ++a) {
    bool placed = false;
    for (auto& blk : blocks)
      if (edge(blk[0], supp[a])) {
        blk.push_back(supp[a]);
        placed = true;
        break;
      }
    if (!placed) blocks.push_back({supp[a]});
  }
  for (const auto& blk : blocks)
    for (size_t i = 0; i < blk.size(); ++i)
      for (size_t j = i + 1; j < blk.size(); ++j)
        if (!edge(blk[i], blk[j]))
          throw std::logic_error(
              "vanishing-minor relation is not transitive on the support");
  NeighborlyStructure ns = make_structure(m.n, cones, blocks);
  if (!is_neighborly(m, ns))
    throw std::logic_error("derived partition structure is not neighborly");
  return ns;
}

}  // namespace

NeighborlyStructure gamma_of_pair(const Matroid& m, const FieldPtr& f,
                                  const Vec& la, const Vec& eta) {
  Degree2Basis b(m);
  Vec prod = multiply(b, f, la, eta);
  for (Fe c : prod)
    if (c != f->zero())
      throw std::invalid_argument("pair is not resonant: product is nonzero");
  if (Matrix::from_rows(f, {la, eta}).rank() != 2)
    throw std::invalid_argument("pair weights are projectively dependent");
  return partition_from_minors(m, f, {eta}, la);
}

NeighborlyStructure gamma_lambda(const Matroid& m, const FieldPtr& f,
                                 const Vec& la) {
  Degree2Basis b(m);
  Matrix z = z_of(b, f, la);
  if (z.rows() < 2)
    throw std::invalid_argument("weight is not resonant: dim Z(la) < 2");
  std::vector<Vec> zbasis;
  for (int r = 0; r < z.rows(); ++r) zbasis.push_back(z.row(r));
  return partition_from_minors(m, f, zbasis, la);
}

namespace {

// A partner of la at a given extension degree, if any.
std::optional<GenericPartner> try_partner(const Matroid& m, const FieldPtr& f,
                                          const Vec& la,
                                          const NeighborlyStructure& target,
                                          uint32_t degree) {
  FieldPtr ext = Field::make(f->p(), f->e() * degree);
  Embedding emb = make_embedding(f, ext);
  Vec la_ext(la.size());
  for (size_t i = 0; i < la.size(); ++i) la_ext[i] = emb.map(la[i]);
  Degree2Basis b(m);
  Matrix z = z_of(b, ext, la_ext);
  if (z.rows() < 2) return std::nullopt;
  for (const Vec& y : projective_points(ext, z.rows())) {
    Vec mu = z.mul_left(y);
    if (Matrix::from_rows(ext, {la_ext, mu}).rank() != 2) continue;
    if (partition_from_minors(m, ext, {mu}, la_ext) == target)
      return GenericPartner{ext, emb, la_ext, mu};
  }
  return std::nullopt;
}

}  // namespace

GenericPartner generic_partner(const Matroid& m, const FieldPtr& f,
                               const Vec& la, uint32_t degree,
                               uint32_t max_degree) {
  if (degree < 1) throw std::invalid_argument("extension degree must be >= 1");
  NeighborlyStructure target = gamma_lambda(m, f, la);
  std::string tried = Field::make(f->p(), f->e() * degree)->spec();
  if (auto got = try_partner(m, f, la, target, degree)) return *got;
  for (uint32_t d = degree + 1; d <= max_degree; ++d) {
    std::optional<GenericPartner> got;
    try {
      got = try_partner(m, f, la, target, d);
    } catch (const std::invalid_argument&) {
      break;  // extension too large to probe further
    }
    if (got)
      throw std::domain_error("no generic partner over GF(" + tried +
                              "); smallest sufficient extension degree is " +
                              std::to_string(d));
  }
  throw std::domain_error("no generic partner over GF(" + tried +
                          "), and none found probing up to extension degree " +
                          std::to_string(max_degree));
}

}  // namespace resonance
