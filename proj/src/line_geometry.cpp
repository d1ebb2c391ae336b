#include "resonance/line_geometry.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace resonance {
namespace {

std::vector<uint32_t> codes_of(const Vec& v) {
  std::vector<uint32_t> c(v.size());
  for (size_t i = 0; i < v.size(); ++i) c[i] = v[i].code;
  return c;
}

}  // namespace

Vec pluecker_of(const Matrix& rep) {
  const FieldPtr& f = rep.field();
  if (rep.rows() != 2) throw std::invalid_argument("line representative needs 2 rows");
  int k = rep.cols();
  Vec pl;
  pl.reserve(static_cast<size_t>(k) * (k - 1) / 2);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      pl.push_back(f->sub(f->mul(rep.get(0, i), rep.get(1, j)),
                          f->mul(rep.get(0, j), rep.get(1, i))));
  return pl;
}

bool grassmann_pluecker_ok(const FieldPtr& f, int k, const Vec& pl) {
  if (static_cast<int>(pl.size()) != k * (k - 1) / 2)
    throw std::invalid_argument("pluecker vector has wrong length");
  auto at = [&](int i, int j) -> Fe {
    if (i == j) return f->zero();
    bool flip = i > j;
    if (flip) std::swap(i, j);
    int idx = i * k - i * (i + 1) / 2 + (j - i - 1);
    Fe v = pl[idx];
    return flip ? f->neg(v) : v;
  };
  bool nonzero = false;
  for (Fe c : pl)
    if (c != f->zero()) nonzero = true;
  if (!nonzero) return false;
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b)
      for (int c = b + 1; c < k; ++c)
        for (int d = c + 1; d < k; ++d) {
          Fe s = f->add(
              f->sub(f->mul(at(a, b), at(c, d)), f->mul(at(a, c), at(b, d))),
              f->mul(at(a, d), at(b, c)));
          if (s != f->zero()) return false;
        }
  return true;
}

uint64_t line_count(const FieldPtr& f, int k) {
  if (k < 2) return 0;
  // Gaussian binomial [k 2]_q = (q^k - 1)(q^(k-1) - 1) / ((q^2 - 1)(q - 1)).
  __int128 q = f->q();
  auto qpow = [&](int e) {
    __int128 r = 1;
    for (int i = 0; i < e; ++i) r *= q;
    return r;
  };
  __int128 num = (qpow(k) - 1) * (qpow(k - 1) - 1);
  __int128 den = (q * q - 1) * (q - 1);
  return static_cast<uint64_t>(num / den);
}

std::vector<ProjLine> all_lines_of(const FieldPtr& f, int k, uint64_t cap) {
  if (k < 2) return {};
  std::vector<ProjLine> out;
  uint64_t q = f->q();
  uint64_t produced = 0;
  // rref shapes: pivot columns i < j; row0 = e_i + free entries in columns
  // (i, j) excluded, zero before i and at j; row1 = e_j + free entries after
  // j. Free positions: row0 gets columns in (i+1..k-1) except j with zeros
  // forced before i... precisely: row0 has arbitrary entries in columns
  // i+1..k-1 excluding j; row1 has arbitrary entries in columns j+1..k-1.
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      std::vector<int> free_cols;
      for (int c = i + 1; c < k; ++c)
        if (c != j) free_cols.push_back(c);  // row0 free slots
      int f1 = k - 1 - j;                    // row1 free slots
      uint64_t combos = 1;
      for (size_t t = 0; t < free_cols.size() + f1; ++t) combos *= q;
      for (uint64_t idx = 0; idx < combos; ++idx) {
        if (++produced > cap)
          throw CapExceeded("line enumeration needs cap >= " +
                                std::to_string(line_count(f, k)),
                            line_count(f, k));
        Matrix rep(f, 2, k);
        rep.set(0, i, f->one());
        rep.set(1, j, f->one());
        uint64_t t = idx;
        for (int c = k - 1; c > j; --c) {
          rep.set(1, c, f->fe(t % q));
          t /= q;
        }
        for (auto it = free_cols.rbegin(); it != free_cols.rend(); ++it) {
          rep.set(0, *it, f->fe(t % q));
          t /= q;
        }
        out.push_back(ProjLine{rep, pluecker_of(rep)});
      }
    }
  }
  return out;
}

std::vector<Vec> points_of_line(const FieldPtr& f, const ProjLine& l) {
  std::vector<Vec> pts;
  pts.reserve(f->q() + 1);
  pts.push_back(l.rep.row(1));
  for (uint64_t t = 0; t < f->q(); ++t) {
    Vec p = l.rep.row(0);
    Fe c = f->fe(t);
    for (int i = 0; i < l.rep.cols(); ++i)
      p[i] = f->add(p[i], f->mul(c, l.rep.get(1, i)));
    pts.push_back(std::move(p));
  }
  return pts;
}

bool line_meets(const ProjLine& l, const Matrix& sub) {
  if (sub.rows() == 0) return false;
  // The line's 2-space and the subspace intersect nontrivially iff ranks
  // collapse: rank(sub + line) < rank(sub) + 2.
  return sub.stack(l.rep).rank() < sub.rank() + 2;
}

DirectrixSystem directrices(const Matroid& m, const FieldPtr& f,
                            const NeighborlyStructure& ns) {
  KSpaces ks = k_spaces(m, f, ns);
  DirectrixSystem sys{f, ks.k, ks.k0, {}};
  for (const auto& blk : ns.blocks) {
    std::vector<int> s = blk;
    s.insert(s.end(), ns.cones.begin(), ns.cones.end());
    std::sort(s.begin(), s.end());
    // D_S inside K: coefficients y with (y * K)|_S = 0.
    Matrix cond(f, static_cast<int>(s.size()), sys.k.rows());
    for (size_t r = 0; r < s.size(); ++r)
      for (int b = 0; b < sys.k.rows(); ++b)
        cond.set(static_cast<int>(r), b, sys.k.get(b, s[r] - 1));
    Matrix y = cond.kernel_basis();
    Matrix ambient(f, y.rows(), m.n);
    for (int r = 0; r < y.rows(); ++r)
      ambient.set_row(r, sys.k.mul_left(y.row(r)));
    // D intersected with K0, expressed in k0 coordinates.
    Matrix inter = ambient.row_space_intersection(sys.k0);
    Matrix coords(f, inter.rows(), sys.k0.rows());
    for (int r = 0; r < inter.rows(); ++r) {
      auto c = sys.k0.coords_in_row_space(inter.row(r));
      if (!c) throw std::logic_error("directrix does not sit inside K0");
      coords.set_row(r, *c);
    }
    int codim = sys.k0.rows() - coords.rows();
    sys.ds.push_back(Directrix{std::move(s), std::move(ambient),
                               std::move(coords), codim});
  }
  return sys;
}

LineComplex line_complex_in(const FieldPtr& f, int k,
                            const std::vector<Matrix>& subs,
                            uint64_t line_cap) {
  LineComplex lc{f, k, {}, {}};
  for (size_t i = 0; i < subs.size(); ++i)
    lc.selected.push_back(static_cast<int>(i));
  if (k < 2) return lc;
  auto flat = [](const Matrix& m) {
    std::vector<uint32_t> key;
    for (int r = 0; r < m.rows(); ++r)
      for (int c = 0; c < m.cols(); ++c) key.push_back(m.get(r, c).code);
    return key;
  };
  if (subs.empty()) {
    std::map<std::vector<uint32_t>, ProjLine> orderd;
    for (auto& l : all_lines_of(f, k, line_cap))
      orderd.emplace(flat(l.rep), std::move(l));
    for (auto& [key, l] : orderd) lc.lines.push_back(std::move(l));
    return lc;
  }
  // Every line of the complex meets each subspace, so it is the span of a
  // point of the smallest one and a second ambient point. Enumerating those
  // pairs avoids materializing the full line set of P(F^k), whose size
  // grows like q^(2k-4).
  std::vector<Matrix> bases;
  for (const Matrix& s : subs) {
    std::vector<int> piv;
    Matrix r = s.rref(&piv);
    std::vector<Vec> rows;
    for (size_t i = 0; i < piv.size(); ++i)
      rows.push_back(r.row(static_cast<int>(i)));
    bases.push_back(Matrix::from_rows(f, rows));
  }
  size_t mi = 0;
  for (size_t i = 1; i < bases.size(); ++i)
    if (bases[i].rows() < bases[mi].rows()) mi = i;
  if (bases[mi].rows() == 0) return lc;  // nothing meets the zero space
  uint64_t seed_count = projective_point_count(f, bases[mi].rows());
  uint64_t ambient_count = projective_point_count(f, k);
  unsigned __int128 candidates =
      static_cast<unsigned __int128>(seed_count) * ambient_count;
  if (candidates > line_cap)
    throw CapExceeded("line enumeration cap exceeded",
                      candidates > UINT64_MAX
                          ? UINT64_MAX
                          : static_cast<uint64_t>(candidates));
  std::vector<Vec> seeds = projective_points(f, bases[mi].rows(), line_cap);
  std::vector<Vec> ambient = projective_points(f, k, line_cap);
  std::set<std::vector<uint32_t>> visited;
  std::map<std::vector<uint32_t>, ProjLine> kept;
  for (const Vec& y : seeds) {
    Vec p = bases[mi].mul_left(y);
    for (const Vec& r : ambient) {
      Matrix span = Matrix::from_rows(f, {p, r}).rref();
      if (span.rows() < 2) continue;  // r inside the span of p
      auto key = flat(span);
      if (!visited.insert(key).second) continue;
      ProjLine l{span, {}};
      bool all = true;
      for (size_t i = 0; i < bases.size() && all; ++i)
        if (i != mi && !line_meets(l, bases[i])) all = false;
      if (!all) continue;
      l.pluecker = pluecker_of(l.rep);
      kept.emplace(std::move(key), std::move(l));
    }
  }
  for (auto& [key, l] : kept) lc.lines.push_back(std::move(l));
  return lc;
}

LineComplex line_complex(const DirectrixSystem& sys, uint64_t line_cap,
                         bool proper_only) {
  std::vector<Matrix> subs;
  LineComplex lc{sys.f, sys.k0.rows(), {}, {}};
  for (size_t i = 0; i < sys.ds.size(); ++i) {
    if (proper_only && sys.ds[i].codim < 2) continue;
    lc.selected.push_back(static_cast<int>(i));
    subs.push_back(sys.ds[i].coords);
  }
  LineComplex filtered = line_complex_in(sys.f, lc.k, subs, line_cap);
  lc.lines = std::move(filtered.lines);
  return lc;
}

Carrier carrier_of(const LineComplex& lc, const Matrix* ambient_basis) {
  const FieldPtr& f = lc.f;
  std::map<std::vector<uint32_t>, std::vector<int>> incident;
  std::map<std::vector<uint32_t>, Vec> rep;
  for (size_t li = 0; li < lc.lines.size(); ++li) {
    for (Vec& p : points_of_line(f, lc.lines[li])) {
      auto key = codes_of(p);
      incident[key].push_back(static_cast<int>(li));
      rep.emplace(key, std::move(p));
    }
  }
  Carrier car;
  for (auto& [key, lines] : incident) {
    CarrierPoint cp;
    cp.coords = rep[key];
    // Span of the lines through the point.
    Matrix span(f, 0, lc.k);
    for (int li : lines) span = span.stack(lc.lines[li].rep);
    int s = span.rank();
    // Union of those lines: all points, to compare with the span's size.
    std::set<std::vector<uint32_t>> united;
    for (int li : lines)
      for (const Vec& p : points_of_line(f, lc.lines[li]))
        united.insert(codes_of(p));
    cp.depth = united.size() == projective_point_count(f, s) ? s - 1 : 1;
    if (ambient_basis) {
      cp.ambient = ambient_basis->mul_left(cp.coords);
      canonicalize_projective(f, cp.ambient);
    }
    car.points.push_back(std::move(cp));
  }
  return car;
}

namespace {

void monomials_of_degree(int k, int d, std::vector<int>& cur,
                         std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == k - 1) {
    cur.push_back(d);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int e = d; e >= 0; --e) {
    cur.push_back(e);
    monomials_of_degree(k, d - e, cur, out);
    cur.pop_back();
  }
}

Fe eval_monomial(const FieldPtr& f, const std::vector<int>& mono,
                 const Vec& pt) {
  Fe v = f->one();
  for (size_t i = 0; i < mono.size(); ++i)
    for (int e = 0; e < mono[i]; ++e) v = f->mul(v, pt[i]);
  return v;
}

}  // namespace

std::optional<Hypersurface> interpolate_hypersurface(const FieldPtr& f, int k,
                                                     const std::vector<Vec>& pts,
                                                     int max_degree,
                                                     uint64_t cap) {
  for (int d = 1; d <= max_degree; ++d) {
    std::vector<std::vector<int>> monos;
    std::vector<int> cur;
    monomials_of_degree(k, d, cur, monos);
    Matrix eval(f, static_cast<int>(pts.size()), static_cast<int>(monos.size()));
    for (size_t r = 0; r < pts.size(); ++r)
      for (size_t c = 0; c < monos.size(); ++c)
        eval.set(static_cast<int>(r), static_cast<int>(c),
                 eval_monomial(f, monos[c], pts[r]));
    Matrix ker = eval.kernel_basis();
    if (ker.rows() == 0) continue;

    Hypersurface h;
    h.degree = d;
    h.solution_dim = ker.rows();
    h.monomials = monos;
    for (int r = 0; r < ker.rows(); ++r) {
      Vec form = ker.row(r);
      canonicalize_projective(f, form);
      h.forms.push_back(std::move(form));
    }
    std::set<std::vector<uint32_t>> input;
    for (const Vec& p : pts) input.insert(codes_of(p));
    h.input_is_whole_space = input.size() == projective_point_count(f, k);
    std::set<std::vector<uint32_t>> zeros;
    for (const Vec& p : projective_points(f, k, cap)) {
      bool all_zero = true;
      for (const Vec& form : h.forms) {
        Fe v = f->zero();
        for (size_t c = 0; c < monos.size(); ++c)
          v = f->add(v, f->mul(form[c], eval_monomial(f, monos[c], p)));
        if (v != f->zero()) {
          all_zero = false;
          break;
        }
      }
      if (all_zero) zeros.insert(codes_of(p));
    }
    h.zero_set_equals_input = zeros == input;
    return h;
  }
  return std::nullopt;
}

GeometryReport geometry_report(const DirectrixSystem& sys) {
  const FieldPtr& f = sys.f;
  GeometryReport rep;
  for (const auto& d : sys.ds) rep.proj_dims.push_back(d.coords.rows() - 1);
  std::vector<Vec> poles;
  for (size_t i = 0; i < sys.ds.size(); ++i)
    if (sys.ds[i].coords.rows() == 1) {
      rep.pole_indices.push_back(static_cast<int>(i));
      poles.push_back(sys.ds[i].coords.row(0));
    }
  if (poles.size() >= 2)
    rep.poles_collinear = Matrix::from_rows(f, poles).rank() <= 2;

  std::vector<Vec> meet_points;
  std::vector<std::vector<Vec>> on_directrix(sys.ds.size());
  for (size_t i = 0; i < sys.ds.size(); ++i) {
    for (size_t j = i + 1; j < sys.ds.size(); ++j) {
      Matrix inter =
          sys.ds[i].coords.row_space_intersection(sys.ds[j].coords);
      if (inter.rows() == 0) continue;
      PairMeet pm;
      pm.i = static_cast<int>(i);
      pm.j = static_cast<int>(j);
      pm.dim = inter.rows();
      if (inter.rows() == 1) {
        Vec p = inter.row(0);
        canonicalize_projective(f, p);
        pm.point = p;
        meet_points.push_back(p);
        on_directrix[i].push_back(p);
        on_directrix[j].push_back(p);
      }
      rep.pairwise.push_back(std::move(pm));
    }
  }
  if (meet_points.size() >= 2)
    rep.meet_points_coplanar = Matrix::from_rows(f, meet_points).rank() <= 3;
  for (size_t i = 0; i < sys.ds.size(); ++i) {
    bool col = true;
    if (on_directrix[i].size() >= 3)
      col = Matrix::from_rows(f, on_directrix[i]).rank() <= 2;
    rep.meets_on_directrix_collinear.push_back(col);
  }
  return rep;
}

}  // namespace resonance
