#include "resonance/matrix.hpp"

#include <stdexcept>

namespace resonance {

Matrix Matrix::from_rows(FieldPtr f, const std::vector<Vec>& rows) {
  int r = static_cast<int>(rows.size());
  int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  Matrix m(std::move(f), r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c)
      throw std::invalid_argument("ragged rows");
    m.set_row(i, rows[i]);
  }
  return m;
}

Matrix Matrix::identity(FieldPtr f, int n) {
  Matrix m(f, n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, f->one());
  return m;
}

Vec Matrix::row(int r) const {
  return Vec(a_.begin() + static_cast<size_t>(r) * cols_,
             a_.begin() + static_cast<size_t>(r + 1) * cols_);
}

void Matrix::set_row(int r, const Vec& v) {
  for (int c = 0; c < cols_; ++c) set(r, c, v[c]);
}

Matrix Matrix::transpose() const {
  Matrix t(f_, cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t.set(c, r, get(r, c));
  return t;
}

Matrix Matrix::stack(const Matrix& below) const {
  if (rows_ == 0 && cols_ == 0) return below;
  if (below.rows_ == 0 && below.cols_ == 0) return *this;
  if (cols_ != below.cols_) throw std::invalid_argument("stack: column mismatch");
  Matrix m(f_ ? f_ : below.f_, rows_ + below.rows_, cols_);
  m.a_ = a_;
  m.a_.insert(m.a_.end(), below.a_.begin(), below.a_.end());
  return m;
}

Matrix Matrix::rref(std::vector<int>* pivots) const {
  Matrix m = *this;
  if (pivots) pivots->clear();
  int pr = 0;
  for (int pc = 0; pc < cols_ && pr < rows_; ++pc) {
    int sel = -1;
    for (int r = pr; r < rows_; ++r)
      if (m.get(r, pc) != f_->zero()) {
        sel = r;
        break;
      }
    if (sel < 0) continue;
    if (sel != pr)
      for (int c = 0; c < cols_; ++c) {
        Fe t = m.get(pr, c);
        m.set(pr, c, m.get(sel, c));
        m.set(sel, c, t);
      }
    Fe pivinv = f_->inv(m.get(pr, pc));
    for (int c = pc; c < cols_; ++c) m.set(pr, c, f_->mul(m.get(pr, c), pivinv));
    for (int r = 0; r < rows_; ++r) {
      if (r == pr) continue;
      Fe factor = m.get(r, pc);
      if (factor == f_->zero()) continue;
      for (int c = pc; c < cols_; ++c)
        m.set(r, c, f_->sub(m.get(r, c), f_->mul(factor, m.get(pr, c))));
    }
    if (pivots) pivots->push_back(pc);
    ++pr;
  }
  Matrix out(f_, pr, cols_);
  for (int r = 0; r < pr; ++r) out.set_row(r, m.row(r));
  return out;
}

int Matrix::rank() const {
  std::vector<int> piv;
  rref(&piv);
  return static_cast<int>(piv.size());
}

Matrix Matrix::kernel_basis() const {
  std::vector<int> piv;
  Matrix r = rref(&piv);
  std::vector<bool> is_pivot(cols_, false);
  for (int c : piv) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (int fc = 0; fc < cols_; ++fc) {
    if (is_pivot[fc]) continue;
    Vec v(cols_, f_->zero());
    v[fc] = f_->one();
    for (size_t i = 0; i < piv.size(); ++i)
      v[piv[i]] = f_->neg(r.get(static_cast<int>(i), fc));
    basis.push_back(std::move(v));
  }
  Matrix k = Matrix::from_rows(f_, basis);
  if (k.rows() == 0) k = Matrix(f_, 0, cols_);
  return k;
}

Vec Matrix::mul_left(const Vec& x) const {
  if (static_cast<int>(x.size()) != rows_)
    throw std::invalid_argument("mul_left: size mismatch");
  Vec out(cols_, f_->zero());
  for (int r = 0; r < rows_; ++r) {
    if (x[r] == f_->zero()) continue;
    for (int c = 0; c < cols_; ++c)
      out[c] = f_->add(out[c], f_->mul(x[r], get(r, c)));
  }
  return out;
}

Vec Matrix::mul_right(const Vec& y) const {
  if (static_cast<int>(y.size()) != cols_)
    throw std::invalid_argument("mul_right: size mismatch");
  Vec out(rows_, f_->zero());
  for (int r = 0; r < rows_; ++r) {
    Fe s = f_->zero();
    for (int c = 0; c < cols_; ++c) s = f_->add(s, f_->mul(get(r, c), y[c]));
    out[r] = s;
  }
  return out;
}

bool Matrix::row_space_contains(const Vec& v) const {
  Matrix ext = stack(Matrix::from_rows(f_, {v}));
  return ext.rank() == rank();
}

Matrix Matrix::row_space_intersection(const Matrix& other) const {
  if (cols_ != other.cols_)
    throw std::invalid_argument("intersection: column mismatch");
  // u * A == w * B iff (u, w) lies in the kernel of [A^T | -B^T].
  Matrix sys(f_, cols_, rows_ + other.rows_);
  for (int c = 0; c < cols_; ++c) {
    for (int r = 0; r < rows_; ++r) sys.set(c, r, get(r, c));
    for (int r = 0; r < other.rows_; ++r)
      sys.set(c, rows_ + r, f_->neg(other.get(r, c)));
  }
  Matrix ker = sys.kernel_basis();
  std::vector<Vec> pts;
  for (int i = 0; i < ker.rows(); ++i) {
    Vec full = ker.row(i);
    Vec u(full.begin(), full.begin() + rows_);
    pts.push_back(mul_left(u));
  }
  Matrix span = Matrix::from_rows(f_, pts);
  if (span.rows() == 0) return Matrix(f_, 0, cols_);
  std::vector<int> piv;
  Matrix red = span.rref(&piv);
  Matrix out(f_, static_cast<int>(piv.size()), cols_);
  for (int i = 0; i < out.rows(); ++i) out.set_row(i, red.row(i));
  return out;
}

bool Matrix::row_space_equals(const Matrix& other) const {
  if (cols_ != other.cols_) return false;
  int ra = rank(), rb = other.rank();
  if (ra != rb) return false;
  return stack(other).rank() == ra;
}

std::optional<Vec> Matrix::coords_in_row_space(const Vec& v) const {
  if (static_cast<int>(v.size()) != cols_)
    throw std::invalid_argument("coords: size mismatch");
  // Solve x * M = v, i.e. M^T x^T = v^T, by rref of the augmented system.
  Matrix aug(f_, cols_, rows_ + 1);
  for (int c = 0; c < cols_; ++c) {
    for (int r = 0; r < rows_; ++r) aug.set(c, r, get(r, c));
    aug.set(c, rows_, v[c]);
  }
  std::vector<int> piv;
  Matrix red = aug.rref(&piv);
  Vec x(rows_, f_->zero());
  for (size_t i = 0; i < piv.size(); ++i) {
    if (piv[i] == rows_) return std::nullopt;  // inconsistent
    x[piv[i]] = red.get(static_cast<int>(i), rows_);
  }
  return x;
}

void canonicalize_projective(const FieldPtr& f, Vec& v) {
  for (const Fe& c : v) {
    if (c != f->zero()) {
      if (c != f->one()) {
        Fe s = f->inv(c);
        for (Fe& x : v) x = f->mul(x, s);
      }
      return;
    }
  }
}

uint64_t projective_point_count(const FieldPtr& f, int k) {
  uint64_t n = 0, w = 1;
  for (int i = 0; i < k; ++i) {
    n += w;
    w *= f->q();
  }
  return n;
}

std::vector<Vec> projective_points(const FieldPtr& f, int k, uint64_t cap) {
  uint64_t total = projective_point_count(f, k);
  if (total > cap)
    throw CapExceeded("projective point enumeration needs cap >= " +
                          std::to_string(total),
                      total);
  std::vector<Vec> pts;
  pts.reserve(total);
  for (int lead = 0; lead < k; ++lead) {
    int tail = k - lead - 1;
    uint64_t combos = 1;
    for (int i = 0; i < tail; ++i) combos *= f->q();
    for (uint64_t idx = 0; idx < combos; ++idx) {
      Vec v(k, f->zero());
      v[lead] = f->one();
      uint64_t t = idx;
      // Mixed radix, last coordinate least significant.
      for (int i = tail - 1; i >= 0; --i) {
        v[lead + 1 + i] = f->fe(t % f->q());
        t /= f->q();
      }
      pts.push_back(std::move(v));
    }
  }
  return pts;
}

}  // namespace resonance
