// End-to-end acceptance checks. Each numbered check prints exactly one
// PASS/FAIL line; the exit status is the number of failed checks. Run time
// is dominated by the full GF(5) scan of the hessian configuration.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "resonance/decomposition.hpp"
#include "resonance/line_geometry.hpp"
#include "resonance/schubert.hpp"

using namespace resonance;

namespace {

std::vector<std::string> notes;

void req(bool ok, const std::string& what) {
  if (!ok) notes.push_back(what);
}

std::vector<uint32_t> codes_of(const Vec& v) {
  std::vector<uint32_t> c;
  for (Fe x : v) c.push_back(x.code);
  return c;
}

std::set<std::vector<uint32_t>> code_set(const std::vector<Vec>& pts) {
  std::set<std::vector<uint32_t>> out;
  for (const auto& v : pts) out.insert(codes_of(v));
  return out;
}

Vec bits(const FieldPtr& f, const std::string& s) {
  Vec v;
  for (char c : s) v.push_back(f->fe(static_cast<uint64_t>(c - '0')));
  return v;
}

Vec ints(const FieldPtr& f, const std::vector<int>& xs) {
  Vec v;
  for (int x : xs) v.push_back(f->from_int(x));
  return v;
}

bool is_zero_vec(const FieldPtr& f, const Vec& v) {
  for (Fe x : v)
    if (x != f->zero()) return false;
  return true;
}

// The catalog lists the pencil family with a symbolic size; instantiate a
// representative member so the whole-catalog loops stay concrete.
std::vector<std::string> concrete_catalog() {
  std::vector<std::string> out;
  for (std::string name : catalog_names()) {
    if (name == "pencil(k)") name = "pencil(4)";
    out.push_back(std::move(name));
  }
  return out;
}

// ---------------------------------------------------------------------------
// 1. Braid configuration: five maximal constituents over GF(3)/GF(5)/GF(7).

void braid_constituents() {
  Matroid m = catalog("braid");
  for (uint32_t p : {3u, 5u, 7u}) {
    FieldPtr f = Field::make(p);
    std::string tag = "GF(" + std::to_string(p) + ")";
    Decomposition dec = decompose(m, f);
    req(dec.constituents.size() == 5, tag + ": constituent count != 5");
    int essential = 0, local_dim1 = 0;
    std::vector<std::set<std::vector<uint32_t>>> sets;
    for (const auto& c : dec.constituents) {
      sets.push_back(code_set(c.points));
      if (c.gamma.cones.empty()) {
        ++essential;
        Matrix span = Matrix::from_rows(
            f, {ints(f, {1, 1, 0, 0, -1, -1}), ints(f, {0, 0, 1, 1, -1, -1})});
        req(Matrix::from_rows(f, c.points).row_space_equals(span),
            tag + ": essential constituent span mismatch");
        req(c.proj_dim == 1, tag + ": essential projective dimension != 1");
      } else if (c.proj_dim == 1) {
        ++local_dim1;
      }
    }
    req(essential == 1, tag + ": essential constituent count != 1");
    req(local_dim1 == 4, tag + ": local constituents of projective dim 1");
    for (size_t i = 0; i < sets.size(); ++i)
      for (size_t j = i + 1; j < sets.size(); ++j) {
        std::vector<std::vector<uint32_t>> inter;
        std::set_intersection(sets[i].begin(), sets[i].end(), sets[j].begin(),
                              sets[j].end(), std::back_inserter(inter));
        req(inter.empty(), tag + ": constituents overlap");
      }
  }
}

// ---------------------------------------------------------------------------
// 2. Non-Fano configuration: full depth stratification over GF(2); no
//    essential constituent over GF(3).

void nonfano_stratification() {
  Matroid m = catalog("nonfano");
  FieldPtr f = Field::make(2);
  NeighborlyStructure g = parse_structure("127|3|4|5|6", 7);
  req(is_neighborly(m, g), "127|3|4|5|6 not neighborly");
  req(incidence_matrix(f, 7, x_gamma(m, g)).rank() == 4, "incidence rank != 4");
  KSpaces ks = k_spaces(m, f, g);
  req(ks.k.rows() == 3, "dim K != 3");
  req(ks.k0.rows() == 3, "dim K0 != 3");
  std::vector<Vec> v = v_stratum(m, f, g, 1);
  auto vset = code_set(v);
  req(v.size() == 7, "V(Gamma) != 7 points");
  size_t in_k = 0;
  for (const Vec& y : projective_points(f, ks.k.rows())) {
    Vec la = ks.k.mul_left(y);
    canonicalize_projective(f, la);
    if (vset.count(codes_of(la))) ++in_k;
  }
  req(in_k == 7 && vset.size() == 7, "V(Gamma) != P(K)");
  Degree2Basis b(m);
  Vec pole = bits(f, "0011110");
  for (const Vec& w : v) {
    int d = depth_of(b, f, w);
    int want = codes_of(w) == codes_of(pole) ? 2 : 1;
    req(d == want, "depth stratification mismatch at a point of V(Gamma)");
  }
  ScanResult scan = resonance_scan(m, f);
  auto deep = stratum(scan, 2);
  req(deep.size() == 1 && codes_of(deep[0].w) == codes_of(pole),
      "depth-2 resonance locus != {0011110}");
  Decomposition dec3 = decompose(m, Field::make(3));
  bool essential3 = false;
  for (const auto& c : dec3.constituents)
    if (c.gamma.cones.empty()) essential3 = true;
  req(!essential3, "essential constituent exists over GF(3)");
}

// ---------------------------------------------------------------------------
// 3. Deleted B3 configuration over GF(2): kernel intersection identities and
//    two maximal constituents that genuinely overlap.

void deleted_b3() {
  Matroid m = catalog("deletedB3");
  FieldPtr f = Field::make(2);
  Degree2Basis b(m);
  Vec la1 = bits(f, "01100101");
  Vec la2 = bits(f, "10010101");
  Vec eta = bits(f, "11110000");
  Matrix z1 = z_of(b, f, la1);
  Matrix z2 = z_of(b, f, la2);
  req(z1.row_space_intersection(z2).row_space_equals(z_of(b, f, eta)),
      "Z(la1) ^ Z(la2) != Z(eta)");
  req(z2.row_space_contains(la1), "la1 not in Z(la2)");
  bool contained = true;
  for (int r = 0; r < z1.rows(); ++r)
    if (!z2.row_space_contains(z1.row(r))) contained = false;
  req(!contained, "Z(la1) unexpectedly contained in Z(la2)");
  ScanResult scan = resonance_scan(m, f);
  size_t deep = stratum(scan, 2).size();
  req(deep == 0, "depth-2 resonance locus nonempty (" + std::to_string(deep) +
                     " points: both poles and the sum-zero weights on the "
                     "four-point line; dim Z(la1) = " +
                     std::to_string(z1.rows()) + " >= 3 already forces this)");
  NeighborlyStructure g1 = gamma_lambda(m, f, la1);
  NeighborlyStructure g2 = gamma_lambda(m, f, la2);
  Decomposition dec = decompose(m, f);
  const Constituent* c1 = nullptr;
  const Constituent* c2 = nullptr;
  for (const auto& c : dec.constituents) {
    if (c.gamma == g1) c1 = &c;
    if (c.gamma == g2) c2 = &c;
  }
  req(c1 != nullptr && c2 != nullptr,
      "V(Gamma1), V(Gamma2) not among the maximal constituents");
  if (c1 && c2) {
    auto s1 = code_set(c1->points);
    auto s2 = code_set(c2->points);
    std::vector<std::vector<uint32_t>> inter;
    std::set_intersection(s1.begin(), s1.end(), s2.begin(), s2.end(),
                          std::back_inserter(inter));
    req(!inter.empty(), "V(Gamma1) ^ V(Gamma2) empty");
    req(s1 != s2, "V(Gamma1) == V(Gamma2)");
    req(s1.count(codes_of(eta)) == 1 && s2.count(codes_of(eta)) == 1,
        "eta missing from a constituent");
  }
}

// ---------------------------------------------------------------------------
// 4. Hessian configuration over GF(3): directrix geometry and the cubic
//    carrier.

void hessian_geometry() {
  Matroid m = catalog("hessian");
  FieldPtr f = Field::make(3);
  NeighborlyStructure g = parse_structure("123|456|789|abc", 12);
  req(incidence_matrix(f, 12, x_gamma(m, g)).rank() == 6,
      "incidence rank != 6");
  DirectrixSystem sys = directrices(m, f, g);
  req(sys.k.rows() == 6, "dim K != 6");
  req(sys.k0.rows() == 5, "dim K0 != 5");
  req(sys.ds.size() == 4, "directrix count != 4");
  for (const auto& d : sys.ds) {
    req(d.codim == 2, "directrix codim != 2");
    req(d.coords.rows() == 3, "directrix projective dimension != 2");
  }
  GeometryReport rep = geometry_report(sys);
  req(rep.proj_dims == std::vector<int>(4, 2), "reported projective dims");
  req(rep.pairwise.size() == 6, "pairwise meets != 6");
  for (const auto& pm : rep.pairwise)
    req(pm.dim == 1, "a pairwise meet is not a single point");
  req(rep.meet_points_coplanar.has_value() && *rep.meet_points_coplanar,
      "the six meet points are not coplanar");
  req(rep.meets_on_directrix_collinear == std::vector<bool>(4, true),
      "meets on some directrix are not collinear");
  Carrier car = carrier_of(line_complex(sys), &sys.k0);
  req(!car.points.empty(), "carrier empty");
  std::vector<Vec> pts;
  for (const auto& cp : car.points) pts.push_back(cp.coords);
  auto hs = interpolate_hypersurface(f, 5, pts, 3);
  req(hs.has_value(), "no form of degree <= 3 vanishes on the carrier");
  if (hs.has_value()) {
    req(hs->degree == 3, "interpolation degree != 3");
    req(hs->solution_dim == 1, "cubic not unique up to scalar");
    req(hs->zero_set_equals_input, "carrier != zero set of the cubic");
    req(!hs->input_is_whole_space, "carrier fills projective space");
  }
  std::vector<Vec> deep;
  for (const auto& cp : car.points)
    if (cp.depth >= 2) deep.push_back(cp.coords);
  req(deep.size() == 13, "depth-2 locus != 13 points");
  if (!deep.empty()) {
    std::vector<int> piv;
    Matrix r = Matrix::from_rows(f, deep).rref(&piv);
    req(piv.size() == 3, "depth-2 locus does not span a plane");
    std::vector<Vec> rows;
    for (size_t i = 0; i < piv.size(); ++i)
      rows.push_back(r.row(static_cast<int>(i)));
    Matrix basis = Matrix::from_rows(f, rows);
    auto dset = code_set(deep);
    size_t hits = 0;
    for (const Vec& y : projective_points(f, basis.rows())) {
      Vec q = basis.mul_left(y);
      canonicalize_projective(f, q);
      if (dset.count(codes_of(q))) ++hits;
    }
    req(hits == dset.size() &&
            hits == projective_point_count(f, basis.rows()),
        "depth-2 locus is not a full projective plane");
  }
}

// ---------------------------------------------------------------------------
// 5. Chow ring of lines: Pieri products, expected carrier degrees, and the
//    quadric through a regulus.

void schubert_checks() {
  ChowClass x = schubert_class(5, 1, 0);
  for (int i = 0; i < 3; ++i) x = pieri(1, x);
  req(x.coefficient(3, 1) == 3 && x.coefficient(2, 2) == 2 &&
          x.coef.size() == 2,
      "s(1)^4 in the k=5 ring");
  ChowClass y = pieri(2, x);
  req(y.coefficient(3, 3) == 3 && y.coef.size() == 1,
      "s(2) * s(1)^4 in the k=5 ring");
  req(parse_schubert_expr(5, "s(1)^4 * s(2)") == y, "expression parser");
  DegreeResult d5 = carrier_degree(5, {1, 1, 1, 1}, 1);
  req(d5.degree == 3, "carrier degree for k=5, four codim-1 conditions");
  req(d5.sigma == std::make_pair(3, 3) && d5.s == 2,
      "reported class/leftover for k=5");
  DegreeResult d4 = carrier_degree(4, {1, 1, 1}, 1);
  req(d4.degree == 2, "carrier degree for k=4, three codim-1 conditions");

  FieldPtr f = Field::make(3);
  std::vector<Matrix> skew;
  for (int t = 0; t < 3; ++t)
    skew.push_back(Matrix::from_rows(
        f, {ints(f, {1, 0, t, 0}), ints(f, {0, 1, 0, t})}));
  LineComplex lc = line_complex_in(f, 4, skew);
  req(lc.lines.size() == 4, "regulus: transversal count != 4");
  Carrier car = carrier_of(lc, nullptr);
  req(car.points.size() == 16, "regulus: carrier size != 16");
  std::vector<Vec> pts;
  for (const auto& cp : car.points) pts.push_back(cp.coords);
  auto hs = interpolate_hypersurface(f, 4, pts, 3);
  req(hs.has_value() && hs->degree == 2 && hs->solution_dim == 1 &&
          hs->zero_set_equals_input,
      "regulus carrier does not interpolate to a unique quadric");
}

// ---------------------------------------------------------------------------
// 6. Scan-versus-union verification for the whole catalog over GF(2), GF(3),
//    GF(5) at depths one and two.

void verify_catalog() {
  for (const std::string& name : concrete_catalog()) {
    Matroid m = catalog(name);
    for (uint32_t p : {2u, 3u, 5u}) {
      FieldPtr f = Field::make(p);
      uint64_t cap = (name == "hessian" && p == 5) ? 70000000 : 10000000;
      ScanResult scan = resonance_scan(m, f, cap);
      for (int k : {1, 2}) {
        VerifyReport rep =
            verify_decomposition(m, f, k, cap, 10000000, &scan);
        req(rep.ok, name + " over GF(" + std::to_string(p) +
                        ") at k=" + std::to_string(k) + ": " +
                        std::to_string(rep.missing.size()) + " missing, " +
                        std::to_string(rep.extra.size()) + " extra");
      }
    }
  }
}

// ---------------------------------------------------------------------------
// 7. Carrier of the directrix line complex equals the structure stratum for
//    every enumerated structure of every catalog matroid over GF(2), GF(3).

void carriers_match_strata() {
  for (const std::string& name : concrete_catalog()) {
    Matroid m = catalog(name);
    auto structures = enumerate_neighborly(m);
    for (uint32_t p : {2u, 3u}) {
      FieldPtr f = Field::make(p);
      size_t bad = 0;
      std::string first;
      for (const auto& ns : structures) {
        auto v = code_set(v_stratum(m, f, ns, 1));
        KSpaces ks = k_spaces(m, f, ns);
        std::set<std::vector<uint32_t>> cset;
        if (ks.k.rows() > 0) {
          DirectrixSystem sys = directrices(m, f, ns);
          Carrier car = carrier_of(line_complex(sys), &sys.k0);
          for (const auto& cp : car.points) cset.insert(codes_of(cp.ambient));
        }
        if (cset != v) {
          ++bad;
          if (first.empty()) first = format_structure(ns);
        }
      }
      req(bad == 0, name + " over GF(" + std::to_string(p) + "): " +
                        std::to_string(bad) +
                        " mismatching structure(s), first " + first);
    }
  }
}

// ---------------------------------------------------------------------------
// 8. Property suites: per-line characterization of vanishing products,
//    neighborliness of pair structures, the zero-sum diagonal condition, and
//    Pluecker coordinates of enumerated lines.

void property_suites() {
  // Vanishing products: a_la * a_eta = 0 iff on every line the restrictions
  // are parallel or (nontrivial line) both weight sums vanish. Both sides
  // are invariant under scaling either weight, so canonical projective
  // representatives together with the zero vector cover all pairs.
  for (const char* name : {"braid", "nonfano", "deletedB3"}) {
    Matroid m = catalog(name);
    Degree2Basis b(m);
    for (uint32_t p : {2u, 3u}) {
      FieldPtr f = Field::make(p);
      std::vector<Vec> reps = projective_points(f, m.n);
      reps.push_back(Vec(m.n, f->zero()));
      size_t bad_eq = 0, bad_nb = 0;
      for (const Vec& la : reps) {
        for (const Vec& eta : reps) {
          Vec prod = multiply(b, f, la, eta);
          bool zero = is_zero_vec(f, prod);
          bool disj = true;
          for (const auto& line : b.lines()) {
            bool par = true;
            for (size_t a = 0; a + 1 < line.size() && par; ++a)
              for (size_t c = a + 1; c < line.size() && par; ++c) {
                int i = line[a] - 1, j = line[c] - 1;
                if (f->sub(f->mul(la[i], eta[j]), f->mul(la[j], eta[i])) !=
                    f->zero())
                  par = false;
              }
            if (par) continue;
            if (line.size() >= 3) {
              Fe ls = f->zero(), es = f->zero();
              for (int i : line) {
                ls = f->add(ls, la[i - 1]);
                es = f->add(es, eta[i - 1]);
              }
              if (ls == f->zero() && es == f->zero()) continue;
            }
            disj = false;
            break;
          }
          if (zero != disj) ++bad_eq;
          if (zero && !is_zero_vec(f, la) && !is_zero_vec(f, eta) &&
              codes_of(la) != codes_of(eta)) {
            if (!is_neighborly(m, gamma_of_pair(m, f, la, eta))) ++bad_nb;
          }
        }
      }
      std::string tag =
          std::string(name) + " over GF(" + std::to_string(p) + ")";
      req(bad_eq == 0, tag + ": " + std::to_string(bad_eq) +
                           " product/per-line disagreements");
      req(bad_nb == 0, tag + ": " + std::to_string(bad_nb) +
                           " non-neighborly pair structures");
    }
  }

  // Zero-sum diagonal condition on every constituent.
  for (const std::string& name : concrete_catalog()) {
    Matroid m = catalog(name);
    for (uint32_t p : {2u, 3u}) {
      FieldPtr f = Field::make(p);
      size_t bad = 0;
      for (const auto& c : decompose(m, f).all)
        for (const auto& w : c.points) {
          Fe s = f->zero();
          for (Fe x : w) s = f->add(s, x);
          if (s != f->zero()) ++bad;
        }
      req(bad == 0, name + " over GF(" + std::to_string(p) + "): " +
                        std::to_string(bad) + " non-zero-sum weights");
    }
  }

  // Grassmann-Pluecker relations for every enumerated line.
  for (uint32_t p : {2u, 3u}) {
    FieldPtr f = Field::make(p);
    for (int k = 2; k <= 6; ++k) {
      size_t bad = 0;
      for (const auto& l : all_lines_of(f, k))
        if (!grassmann_pluecker_ok(f, k, l.pluecker)) ++bad;
      req(bad == 0, "GF(" + std::to_string(p) + "), k=" + std::to_string(k) +
                        ": " + std::to_string(bad) + " Pluecker violations");
    }
  }
}

int failures = 0;

void criterion(const std::string& name, const std::function<void()>& body) {
  notes.clear();
  try {
    body();
  } catch (const std::exception& e) {
    notes.push_back(std::string("unexpected exception: ") + e.what());
  }
  if (notes.empty()) {
    std::cout << "PASS: " << name << std::endl;
  } else {
    ++failures;
    std::cout << "FAIL: " << name << " [" << notes.size()
              << " problem(s); first: " << notes.front() << "]" << std::endl;
  }
}

}  // namespace

int main() {
  criterion("1. braid constituents over GF(3)/GF(5)/GF(7)",
            braid_constituents);
  criterion("2. nonfano depth stratification over GF(2), GF(3)",
            nonfano_stratification);
  criterion("3. deletedB3 kernel identities and overlapping constituents",
            deleted_b3);
  criterion("4. hessian directrix geometry and cubic carrier",
            hessian_geometry);
  criterion("5. Schubert products, carrier degrees, regulus quadric",
            schubert_checks);
  criterion("6. scan equals union of strata (catalog x GF(2)/GF(3)/GF(5), "
            "k=1,2)",
            verify_catalog);
  criterion("7. carriers equal structure strata (catalog x GF(2)/GF(3))",
            carriers_match_strata);
  criterion("8. property suites (products, pair structures, zero sums, "
            "Pluecker)",
            property_suites);
  if (failures == 0)
    std::cout << "all acceptance checks passed" << std::endl;
  else
    std::cout << failures << " acceptance check(s) failed" << std::endl;
  return failures;
}
