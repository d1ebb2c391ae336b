#include <random>
#include <set>

#include "doctest.h"
#include "resonance/matrix.hpp"

using namespace resonance;

namespace {

Matrix random_matrix(const FieldPtr& f, int rows, int cols, std::mt19937& rng) {
  std::uniform_int_distribution<uint32_t> d(0, static_cast<uint32_t>(f->q() - 1));
  Matrix m(f, rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m.set(r, c, f->fe(d(rng)));
  return m;
}

bool is_zero_vec(const Vec& v) {
  for (Fe x : v)
    if (x.code) return false;
  return true;
}

}  // namespace

TEST_CASE("rref: frozen GF(3) example with dependent rows") {
  FieldPtr f = Field::make(3);
  Matrix a = Matrix::from_rows(
      f, {{f->fe(1), f->fe(2), f->fe(0)}, {f->fe(2), f->fe(1), f->fe(0)}});
  CHECK(a.rank() == 1);
  std::vector<int> piv;
  Matrix r = a.rref(&piv);
  CHECK(r.rows() == 1);
  CHECK(piv == std::vector<int>{0});
  CHECK(r.row(0) == Vec{f->fe(1), f->fe(2), f->fe(0)});
  Matrix k = a.kernel_basis();
  REQUIRE(k.rows() == 2);
  CHECK(k.row(0) == Vec{f->fe(1), f->fe(1), f->fe(0)});
  CHECK(k.row(1) == Vec{f->fe(0), f->fe(0), f->fe(1)});
}

TEST_CASE("rank, kernel and rref properties on random matrices") {
  std::mt19937 rng(12345);
  for (auto spec : std::vector<std::pair<uint32_t, uint32_t>>{
           {2, 1}, {3, 1}, {5, 1}, {2, 2}, {3, 2}, {7, 1}}) {
    FieldPtr f = Field::make(spec.first, spec.second);
    CAPTURE(f->spec());
    for (int trial = 0; trial < 25; ++trial) {
      int rows = 1 + static_cast<int>(rng() % 6);
      int cols = 1 + static_cast<int>(rng() % 6);
      Matrix a = random_matrix(f, rows, cols, rng);
      int rk = a.rank();
      CHECK(rk == a.transpose().rank());
      Matrix r = a.rref();
      CHECK(r.rows() == rk);
      CHECK(r.rref().row_space_equals(r));
      CHECK(a.row_space_equals(r));
      Matrix k = a.kernel_basis();
      CHECK(k.rows() == cols - rk);
      CHECK(k.rank() == k.rows());
      for (int i = 0; i < k.rows(); ++i)
        CHECK(is_zero_vec(a.mul_right(k.row(i))));
      // stacking does not change the row space
      CHECK(a.stack(a).rank() == rk);
      // every row has consistent coordinates
      for (int i = 0; i < rows; ++i) {
        auto co = r.coords_in_row_space(a.row(i));
        REQUIRE(co.has_value());
        Vec back(cols, f->zero());
        for (int j = 0; j < r.rows(); ++j)
          for (int c = 0; c < cols; ++c)
            back[c] = f->add(back[c], f->mul((*co)[j], r.get(j, c)));
        CHECK(back == a.row(i));
      }
    }
  }
}

TEST_CASE("row space intersection satisfies the dimension formula") {
  std::mt19937 rng(777);
  FieldPtr f = Field::make(3);
  for (int trial = 0; trial < 40; ++trial) {
    int cols = 4 + static_cast<int>(rng() % 3);
    Matrix a = random_matrix(f, 1 + rng() % 4, cols, rng);
    Matrix b = random_matrix(f, 1 + rng() % 4, cols, rng);
    Matrix cap = a.row_space_intersection(b);
    int sum_rank = a.stack(b).rank();
    CHECK(cap.rows() == a.rank() + b.rank() - sum_rank);
    for (int i = 0; i < cap.rows(); ++i) {
      CHECK(a.row_space_contains(cap.row(i)));
      CHECK(b.row_space_contains(cap.row(i)));
    }
    CHECK(a.row_space_intersection(a).row_space_equals(a.rref()));
  }
}

TEST_CASE("coords_in_row_space rejects vectors outside the span") {
  FieldPtr f = Field::make(5);
  Matrix a = Matrix::from_rows(f, {{f->fe(1), f->fe(0), f->fe(2)},
                                   {f->fe(0), f->fe(1), f->fe(3)}});
  Vec inside = {f->fe(2), f->fe(4), f->fe(1)};  // 2*r0 + 4*r1 = (2,4,4+12=16=1)
  auto co = a.coords_in_row_space(inside);
  REQUIRE(co.has_value());
  CHECK((*co) == Vec{f->fe(2), f->fe(4)});
  Vec outside = {f->fe(0), f->fe(0), f->fe(1)};
  CHECK(!a.coords_in_row_space(outside).has_value());
}

TEST_CASE("projective enumeration: canonical, distinct, counted") {
  for (auto [p, e, k, expect] :
       std::vector<std::tuple<uint32_t, uint32_t, int, uint64_t>>{
           {2, 1, 3, 7},
           {3, 1, 3, 13},
           {2, 2, 2, 5},
           {5, 1, 3, 31},
           {3, 2, 2, 10},
           {2, 1, 1, 1}}) {
    FieldPtr f = Field::make(p, e);
    CAPTURE(f->spec());
    CHECK(projective_point_count(f, k) == expect);
    auto pts = projective_points(f, k);
    CHECK(pts.size() == expect);
    std::set<Vec> seen;
    for (const auto& v : pts) {
      Vec w = v;
      canonicalize_projective(f, w);
      CHECK(w == v);  // already canonical
      seen.insert(v);
    }
    CHECK(seen.size() == expect);
    // scaling any point by a nonzero constant canonicalizes back to it
    for (const auto& v : pts) {
      for (uint64_t c = 1; c < f->q(); ++c) {
        Vec w = v;
        for (Fe& x : w) x = f->mul(x, f->fe(c));
        canonicalize_projective(f, w);
        CHECK(w == v);
      }
    }
  }
}

TEST_CASE("projective enumeration cap reports the required size") {
  FieldPtr f = Field::make(5);
  try {
    projective_points(f, 3, 10);
    FAIL("expected CapExceeded");
  } catch (const CapExceeded& e) {
    CHECK(e.required_cap == 31);
  }
}

TEST_CASE("enumeration order: leading one position ascending, last coordinate fastest") {
  FieldPtr f = Field::make(3);
  auto pts = projective_points(f, 2);
  REQUIRE(pts.size() == 4);
  CHECK(pts[0] == Vec{f->fe(1), f->fe(0)});
  CHECK(pts[1] == Vec{f->fe(1), f->fe(1)});
  CHECK(pts[2] == Vec{f->fe(1), f->fe(2)});
  CHECK(pts[3] == Vec{f->fe(0), f->fe(1)});
}
