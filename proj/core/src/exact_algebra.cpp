#include "torusquant/exact_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>

namespace tq {

namespace {

[[noreturn]] void overflow(const char* what) { throw Error(ErrorCode::Overflow, what); }

void require_same_shape(const IntMatrix& a, const IntMatrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::DimensionMismatch, std::string(op) + ": shape mismatch");
  }
}

std::int64_t to_int64(const Integer& z) {
  if (z > Integer(INT64_MAX) || z < Integer(INT64_MIN)) overflow("value exceeds int64");
  return z.convert_to<std::int64_t>();
}

// Row operations used by the normal forms. Each mirrors itself on a companion
// matrix so the transform is tracked.
void swap_rows(IntMatrix& m, int a, int b) {
  if (a == b) return;
  for (int c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

void swap_cols(IntMatrix& m, int a, int b) {
  if (a == b) return;
  for (int r = 0; r < m.rows(); ++r) std::swap(m(r, a), m(r, b));
}

// row_dst += f * row_src
void add_row(IntMatrix& m, int dst, int src, std::int64_t f) {
  if (f == 0) return;
  for (int c = 0; c < m.cols(); ++c) m(dst, c) = checked_add(m(dst, c), checked_mul(f, m(src, c)));
}

void add_col(IntMatrix& m, int dst, int src, std::int64_t f) {
  if (f == 0) return;
  for (int r = 0; r < m.rows(); ++r) m(r, dst) = checked_add(m(r, dst), checked_mul(f, m(r, src)));
}

void negate_row(IntMatrix& m, int r) {
  for (int c = 0; c < m.cols(); ++c) m(r, c) = checked_sub(0, m(r, c));
}

}  // namespace

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) overflow("int64 addition");
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) overflow("int64 subtraction");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) overflow("int64 multiplication");
  return r;
}

std::int64_t mod(std::int64_t a, std::int64_t m) {
  if (m <= 0) throw Error(ErrorCode::InvalidModulus, "modulus must be positive");
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

Rational mod(const Rational& a, const Rational& m) {
  if (m <= 0) throw Error(ErrorCode::InvalidModulus, "modulus must be positive");
  Rational q = a / m;
  Integer fl = numerator(q) / denominator(q);
  if (fl * denominator(q) > numerator(q)) fl -= 1;  // truncation toward zero for negatives
  Rational r = a - Rational(fl) * m;
  if (r < 0) r += m;
  if (r >= m) r -= m;
  return r;
}

ExtGcd ext_gcd(std::int64_t a, std::int64_t b) {
  std::int64_t old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::tie(old_r, r) = std::make_pair(r, checked_sub(old_r, checked_mul(q, r)));
    std::tie(old_s, s) = std::make_pair(s, checked_sub(old_s, checked_mul(q, s)));
    std::tie(old_t, t) = std::make_pair(t, checked_sub(old_t, checked_mul(q, t)));
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

std::int64_t ipow(std::int64_t base, int exp) {
  std::int64_t r = 1;
  for (int i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

std::int64_t label_index(const IntVector& label, std::int64_t k) {
  std::int64_t idx = 0;
  for (std::int64_t q : label) idx = checked_add(checked_mul(idx, k), mod(q, k));
  return idx;
}

IntVector label_from_index(std::int64_t index, int g, std::int64_t k) {
  IntVector q(static_cast<std::size_t>(g));
  for (int i = g - 1; i >= 0; --i) {
    q[static_cast<std::size_t>(i)] = index % k;
    index /= k;
  }
  return q;
}

// ---------------------------------------------------------------------------
// IntMatrix

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  rows_ = static_cast<int>(rows.size());
  cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
  data_.reserve(static_cast<std::size_t>(rows_ * cols_));
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != cols_) throw Error(ErrorCode::DimensionMismatch, "ragged initializer");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, int cols) {
  IntMatrix m(static_cast<int>(rows.size()), cols);
  for (int r = 0; r < m.rows(); ++r) m.set_row(r, rows[static_cast<std::size_t>(r)]);
  return m;
}

IntVector IntMatrix::row(int r) const {
  return IntVector(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
}

IntVector IntMatrix::col(int c) const {
  IntVector v(static_cast<std::size_t>(rows_));
  for (int r = 0; r < rows_; ++r) v[static_cast<std::size_t>(r)] = (*this)(r, c);
  return v;
}

void IntMatrix::set_row(int r, const IntVector& v) {
  if (static_cast<int>(v.size()) != cols_) throw Error(ErrorCode::DimensionMismatch, "row length");
  std::copy(v.begin(), v.end(), data_.begin() + r * cols_);
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix IntMatrix::block(int r0, int c0, int nr, int nc) const {
  if (r0 < 0 || c0 < 0 || r0 + nr > rows_ || c0 + nc > cols_) throw Error(ErrorCode::DimensionMismatch, "block out of range");
  IntMatrix b(nr, nc);
  for (int r = 0; r < nr; ++r)
    for (int c = 0; c < nc; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
  return b;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](std::int64_t x) { return x == 0; });
}

bool IntMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (int r = 0; r < rows_; ++r)
    for (int c = r + 1; c < cols_; ++c)
      if ((*this)(r, c) != (*this)(c, r)) return false;
  return true;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::DimensionMismatch, "matrix product");
  IntMatrix p(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int l = 0; l < a.cols(); ++l) {
      std::int64_t x = a(i, l);
      if (x == 0) continue;
      for (int j = 0; j < b.cols(); ++j) p(i, j) = checked_add(p(i, j), checked_mul(x, b(l, j)));
    }
  return p;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  require_same_shape(a, b, "matrix sum");
  IntMatrix s(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) s(i, j) = checked_add(a(i, j), b(i, j));
  return s;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  require_same_shape(a, b, "matrix difference");
  IntMatrix s(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) s(i, j) = checked_sub(a(i, j), b(i, j));
  return s;
}

IntMatrix operator-(const IntMatrix& a) { return IntMatrix::zero(a.rows(), a.cols()) - a; }

IntVector operator*(const IntMatrix& a, const IntVector& x) {
  if (a.cols() != static_cast<int>(x.size())) throw Error(ErrorCode::DimensionMismatch, "matrix-vector product");
  IntVector y(static_cast<std::size_t>(a.rows()), 0);
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      y[static_cast<std::size_t>(i)] = checked_add(y[static_cast<std::size_t>(i)], checked_mul(a(i, j), x[static_cast<std::size_t>(j)]));
  return y;
}

IntMatrix vstack(const IntMatrix& top, const IntMatrix& bottom) {
  if (top.rows() == 0) return bottom;
  if (bottom.rows() == 0) return top;
  if (top.cols() != bottom.cols()) throw Error(ErrorCode::DimensionMismatch, "vstack");
  IntMatrix m(top.rows() + bottom.rows(), top.cols());
  for (int r = 0; r < top.rows(); ++r) m.set_row(r, top.row(r));
  for (int r = 0; r < bottom.rows(); ++r) m.set_row(top.rows() + r, bottom.row(r));
  return m;
}

IntMatrix hstack(const IntMatrix& left, const IntMatrix& right) {
  return vstack(left.transpose(), right.transpose()).transpose();
}

IntMatrix block_matrix(const IntMatrix& a, const IntMatrix& b, const IntMatrix& c, const IntMatrix& d) {
  return vstack(hstack(a, b), hstack(c, d));
}

std::int64_t det(const IntMatrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::DimensionMismatch, "det of non-square matrix");
  const int n = m.rows();
  if (n == 0) return 1;
  // Bareiss fraction-free elimination in GMP integers.
  std::vector<Integer> a(static_cast<std::size_t>(n * n));
  auto at = [&](int r, int c) -> Integer& { return a[static_cast<std::size_t>(r * n + c)]; };
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) at(r, c) = m(r, c);
  Integer prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (at(k, k) == 0) {
      int p = k + 1;
      while (p < n && at(p, k) == 0) ++p;
      if (p == n) return 0;
      for (int c = 0; c < n; ++c) std::swap(at(k, c), at(p, c));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
    prev = at(k, k);
  }
  Integer d = at(n - 1, n - 1);
  if (sign < 0) d = -d;
  return to_int64(d);
}

IntMatrix adjugate(const IntMatrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::DimensionMismatch, "adjugate of non-square matrix");
  const int n = m.rows();
  IntMatrix adj(n, n);
  if (n == 1) {
    adj(0, 0) = 1;
    return adj;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      IntMatrix minor(n - 1, n - 1);
      for (int r = 0, rr = 0; r < n; ++r) {
        if (r == j) continue;
        for (int c = 0, cc = 0; c < n; ++c) {
          if (c == i) continue;
          minor(rr, cc++) = m(r, c);
        }
        ++rr;
      }
      std::int64_t d = det(minor);
      adj(i, j) = ((i + j) % 2 == 0) ? d : -d;
    }
  return adj;
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
  std::int64_t d = det(m);
  if (d != 1 && d != -1) throw Error(ErrorCode::NotUnimodular, "determinant " + std::to_string(d));
  IntMatrix adj = adjugate(m);
  return d == 1 ? adj : -adj;
}

int rank(const IntMatrix& m) {
  HermiteForm h = hnf(m);
  int r = 0;
  for (int i = 0; i < h.H.rows(); ++i)
    if (!h.H.row_range(i, 1).is_zero()) ++r;
  return r;
}

// ---------------------------------------------------------------------------
// RatMatrix

RatMatrix::RatMatrix(const IntMatrix& m) : RatMatrix(m.rows(), m.cols()) {
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) (*this)(r, c) = Rational(m(r, c));
}

RatMatrix RatMatrix::identity(int n) {
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool RatMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (int r = 0; r < rows_; ++r)
    for (int c = r + 1; c < cols_; ++c)
      if ((*this)(r, c) != (*this)(c, r)) return false;
  return true;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::DimensionMismatch, "matrix product");
  RatMatrix p(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int l = 0; l < a.cols(); ++l) {
      if (a(i, l) == 0) continue;
      for (int j = 0; j < b.cols(); ++j) p(i, j) += a(i, l) * b(l, j);
    }
  return p;
}

RatVector operator*(const RatMatrix& a, const RatVector& x) {
  if (a.cols() != static_cast<int>(x.size())) throw Error(ErrorCode::DimensionMismatch, "matrix-vector product");
  RatVector y(static_cast<std::size_t>(a.rows()));
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) y[static_cast<std::size_t>(i)] += a(i, j) * x[static_cast<std::size_t>(j)];
  return y;
}

RatMatrix inverse(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::DimensionMismatch, "inverse of non-square matrix");
  const int n = m.rows();
  RatMatrix a = m;
  RatMatrix inv = RatMatrix::identity(n);
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) throw Error(ErrorCode::SingularMatrix, "matrix is not invertible");
    if (p != c)
      for (int j = 0; j < n; ++j) {
        std::swap(a(p, j), a(c, j));
        std::swap(inv(p, j), inv(c, j));
      }
    Rational piv = a(c, c);
    for (int j = 0; j < n; ++j) {
      a(c, j) /= piv;
      inv(c, j) /= piv;
    }
    for (int r = 0; r < n; ++r) {
      if (r == c || a(r, c) == 0) continue;
      Rational f = a(r, c);
      for (int j = 0; j < n; ++j) {
        a(r, j) -= f * a(c, j);
        inv(r, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

RatVector solve(const RatMatrix& a, const RatVector& b) { return inverse(a) * b; }

RatVector to_rational(const IntVector& v) {
  RatVector r;
  r.reserve(v.size());
  for (std::int64_t x : v) r.emplace_back(x);
  return r;
}

Rational dot(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "dot product");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// ---------------------------------------------------------------------------
// Normal forms

namespace {

// Row-style Hermite reduction over GMP integers. Intermediate entries of the
// transform can outgrow int64 long before the reduced result does.
struct BigHermite {
  std::vector<std::vector<Integer>> h;
  std::vector<std::vector<Integer>> u;
};

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if (q * b != a && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

BigHermite hnf_big(std::vector<std::vector<Integer>> h, int cols) {
  const int rows = static_cast<int>(h.size());
  std::vector<std::vector<Integer>> u(static_cast<std::size_t>(rows), std::vector<Integer>(static_cast<std::size_t>(rows)));
  for (int r = 0; r < rows; ++r) u[static_cast<std::size_t>(r)][static_cast<std::size_t>(r)] = 1;
  auto sub_row = [](std::vector<Integer>& dst, const std::vector<Integer>& src, const Integer& f) {
    for (std::size_t c = 0; c < dst.size(); ++c) dst[c] -= f * src[c];
  };
  int pr = 0;
  for (int c = 0; c < cols && pr < rows; ++c) {
    const auto cc = static_cast<std::size_t>(c);
    // Euclid on column c: move the smallest nonzero entry up and reduce the rest by it
    for (;;) {
      int best = -1;
      for (int r = pr; r < rows; ++r)
        if (h[static_cast<std::size_t>(r)][cc] != 0 &&
            (best < 0 || abs(h[static_cast<std::size_t>(r)][cc]) < abs(h[static_cast<std::size_t>(best)][cc])))
          best = r;
      if (best < 0) break;
      std::swap(h[static_cast<std::size_t>(pr)], h[static_cast<std::size_t>(best)]);
      std::swap(u[static_cast<std::size_t>(pr)], u[static_cast<std::size_t>(best)]);
      const auto p = static_cast<std::size_t>(pr);
      bool done = true;
      for (int r = pr + 1; r < rows; ++r) {
        const auto rr = static_cast<std::size_t>(r);
        if (h[rr][cc] == 0) continue;
        const Integer f = h[rr][cc] / h[p][cc];
        sub_row(h[rr], h[p], f);
        sub_row(u[rr], u[p], f);
        if (h[rr][cc] != 0) done = false;
      }
      if (done) break;
    }
    const auto p = static_cast<std::size_t>(pr);
    if (h[p][cc] == 0) continue;
    if (h[p][cc] < 0) {
      for (auto& x : h[p]) x = -x;
      for (auto& x : u[p]) x = -x;
    }
    for (int r = 0; r < pr; ++r) {
      const auto rr = static_cast<std::size_t>(r);
      const Integer f = floor_div(h[rr][cc], h[p][cc]);
      sub_row(h[rr], h[p], f);
      sub_row(u[rr], u[p], f);
    }
    ++pr;
  }
  return {std::move(h), std::move(u)};
}

std::vector<std::vector<Integer>> to_big(const IntMatrix& m) {
  std::vector<std::vector<Integer>> out(static_cast<std::size_t>(m.rows()));
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) out[static_cast<std::size_t>(r)].push_back(Integer(m(r, c)));
  return out;
}

IntMatrix from_big(const std::vector<std::vector<Integer>>& rows, int cols) {
  IntMatrix m(static_cast<int>(rows.size()), cols);
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < cols; ++c) m(r, c) = to_int64(rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
  return m;
}

}  // namespace

HermiteForm hnf(const IntMatrix& m) {
  BigHermite b = hnf_big(to_big(m), m.cols());
  return {from_big(b.h, m.cols()), from_big(b.u, m.rows())};
}

SmithForm snf(const IntMatrix& m) {
  IntMatrix s = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  IntMatrix v = IntMatrix::identity(m.cols());
  const int n = std::min(m.rows(), m.cols());
  for (int t = 0; t < n; ++t) {
    // pick the nonzero entry of least magnitude in the remaining block as pivot
    for (;;) {
      int br = -1, bc = -1;
      for (int r = t; r < s.rows(); ++r)
        for (int c = t; c < s.cols(); ++c)
          if (s(r, c) != 0 && (br < 0 || std::abs(s(r, c)) < std::abs(s(br, bc)))) br = r, bc = c;
      if (br < 0) break;
      swap_rows(s, t, br);
      swap_rows(u, t, br);
      swap_cols(s, t, bc);
      swap_cols(v, t, bc);
      bool clean = true;
      for (int r = t + 1; r < s.rows(); ++r) {
        std::int64_t q = s(r, t) / s(t, t);
        add_row(s, r, t, -q);
        add_row(u, r, t, -q);
        if (s(r, t) != 0) clean = false;
      }
      for (int c = t + 1; c < s.cols(); ++c) {
        std::int64_t q = s(t, c) / s(t, t);
        add_col(s, c, t, -q);
        add_col(v, c, t, -q);
        if (s(t, c) != 0) clean = false;
      }
      if (!clean) continue;
      // divisibility: fold any entry not divisible by the pivot into row t
      int bad = -1;
      for (int r = t + 1; r < s.rows() && bad < 0; ++r)
        for (int c = t + 1; c < s.cols(); ++c)
          if (s(r, c) % s(t, t) != 0) {
            bad = r;
            break;
          }
      if (bad < 0) break;
      add_row(s, t, bad, 1);
      add_row(u, t, bad, 1);
    }
    if (s(t, t) < 0) {
      negate_row(s, t);
      negate_row(u, t);
    }
  }
  return {s, u, v};
}

IntMatrix integer_kernel(const IntMatrix& m) {
  // U * M^T = H; rows of U against zero rows of H span ker M and, since U is
  // unimodular, they form a primitive basis. Reduced before leaving GMP.
  BigHermite h = hnf_big(to_big(m.transpose()), m.rows());
  std::vector<std::vector<Integer>> rows;
  for (std::size_t r = 0; r < h.h.size(); ++r)
    if (std::all_of(h.h[r].begin(), h.h[r].end(), [](const Integer& x) { return x == 0; })) rows.push_back(h.u[r]);
  if (rows.empty()) return IntMatrix(0, m.cols());
  return from_big(hnf_big(rows, m.cols()).h, m.cols());
}

IntMatrix saturate(const IntMatrix& rows) {
  if (rows.rows() == 0) return IntMatrix(0, rows.cols());
  // the saturated lattice is the kernel of the kernel
  IntMatrix perp = integer_kernel(rows);
  if (perp.rows() == 0) return IntMatrix::identity(rows.cols());
  return integer_kernel(perp);
}

std::vector<IntVector> coset_reps(const IntMatrix& a) {
  if (!a.is_square()) throw Error(ErrorCode::DimensionMismatch, "coset_reps needs a square matrix");
  if (det(a) == 0) throw Error(ErrorCode::SingularMatrix, "coset_reps of a singular matrix");
  const int n = a.rows();
  SmithForm f = snf(a);
  // A Z^n = U^{-1} S Z^n, so U^{-1} d for d in the box prod [0, s_i) are representatives
  IntMatrix uinv = unimodular_inverse(f.U);
  std::vector<IntVector> reps;
  IntVector d(static_cast<std::size_t>(n), 0);
  for (;;) {
    reps.push_back(uinv * d);
    int i = n - 1;
    while (i >= 0) {
      if (++d[static_cast<std::size_t>(i)] < f.S(i, i)) break;
      d[static_cast<std::size_t>(i)] = 0;
      --i;
    }
    if (i < 0) break;
  }
  return reps;
}

bool same_coset(const IntMatrix& a, const IntVector& x, const IntVector& y) {
  if (!a.is_square() || a.rows() != static_cast<int>(x.size()) || x.size() != y.size()) {
    throw Error(ErrorCode::DimensionMismatch, "same_coset");
  }
  SmithForm f = snf(a);
  IntVector diff(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) diff[i] = checked_sub(x[i], y[i]);
  IntVector ud = f.U * diff;
  for (int i = 0; i < a.rows(); ++i) {
    std::int64_t s = f.S(i, i);
    if (s == 0) {
      if (ud[static_cast<std::size_t>(i)] != 0) return false;
    } else if (ud[static_cast<std::size_t>(i)] % s != 0) {
      return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Inertia

Signature signature(const RatMatrix& s) {
  if (!s.is_symmetric()) throw Error(ErrorCode::NotSymmetric, "signature of a non-symmetric matrix");
  RatMatrix a = s;
  int n = a.rows();
  Signature sig;
  // active index set shrinks as pivots are eliminated
  std::vector<int> idx(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) idx[static_cast<std::size_t>(i)] = i;

  auto eliminate = [&](const std::vector<int>& piv, const RatMatrix& pinv) {
    std::vector<int> rest;
    for (int i : idx)
      if (std::find(piv.begin(), piv.end(), i) == piv.end()) rest.push_back(i);
    // Schur complement: A_rr - A_rp P^{-1} A_pr
    const int p = static_cast<int>(piv.size());
    for (int i : rest) {
      std::vector<Rational> t(static_cast<std::size_t>(p));
      for (int x = 0; x < p; ++x)
        for (int y = 0; y < p; ++y) t[static_cast<std::size_t>(x)] += a(i, piv[static_cast<std::size_t>(y)]) * pinv(y, x);
      for (int j : rest) {
        Rational sub = 0;
        for (int x = 0; x < p; ++x) sub += t[static_cast<std::size_t>(x)] * a(piv[static_cast<std::size_t>(x)], j);
        if (sub != 0) a(i, j) -= sub;
      }
    }
    idx = std::move(rest);
  };

  while (!idx.empty()) {
    int d = -1;
    for (int i : idx)
      if (a(i, i) != 0) {
        d = i;
        break;
      }
    if (d >= 0) {
      (a(d, d) > 0 ? sig.n_plus : sig.n_minus) += 1;
      RatMatrix pinv(1, 1);
      pinv(0, 0) = 1 / a(d, d);
      eliminate({d}, pinv);
      continue;
    }
    int pi = -1, pj = -1;
    for (int i : idx) {
      for (int j : idx)
        if (i != j && a(i, j) != 0) {
          pi = i;
          pj = j;
          break;
        }
      if (pi >= 0) break;
    }
    if (pi < 0) {
      sig.n_zero += static_cast<int>(idx.size());
      break;
    }
    // [[0, b], [b, 0]] has one positive and one negative eigenvalue
    sig.n_plus += 1;
    sig.n_minus += 1;
    RatMatrix pinv(2, 2);
    pinv(0, 1) = 1 / a(pi, pj);
    pinv(1, 0) = pinv(0, 1);
    eliminate({pi, pj}, pinv);
  }
  return sig;
}

Signature signature(const IntMatrix& s) { return signature(RatMatrix(s)); }

// ---------------------------------------------------------------------------
// Phases

Complex UnitPhase::value() const {
  // reduce to t in [0, 2); exact quarter turns avoid rounding noise
  const Rational& t = t_;
  if (t == 0) return {1.0, 0.0};
  if (t == Rational(1, 2)) return {0.0, 1.0};
  if (t == 1) return {-1.0, 0.0};
  if (t == Rational(3, 2)) return {0.0, -1.0};
  double x = std::numbers::pi * t.convert_to<double>();
  return {std::cos(x), std::sin(x)};
}

void PhaseSum::add(const UnitPhase& phase, const Rational& coeff) {
  if (coeff != 0) terms_.push_back({phase, coeff});
}

void PhaseSum::canonicalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return a.phase.exponent() < b.phase.exponent(); });
  std::vector<Term> merged;
  for (const Term& t : terms_) {
    if (!merged.empty() && merged.back().phase == t.phase) {
      merged.back().coeff += t.coeff;
    } else {
      merged.push_back(t);
    }
  }
  std::erase_if(merged, [](const Term& t) { return t.coeff == 0; });
  terms_ = std::move(merged);
}

PhaseSum PhaseSum::rotated(const UnitPhase& phase) const {
  PhaseSum r(amp2_);
  for (const Term& t : terms_) r.terms_.push_back({t.phase * phase, t.coeff});
  r.canonicalize();
  return r;
}

Complex PhaseSum::evaluate() const {
  Complex s = 0;
  for (const Term& t : terms_) s += t.coeff.convert_to<double>() * t.phase.value();
  return s / std::sqrt(amp2_.convert_to<double>());
}

// ---------------------------------------------------------------------------
// Gauss sums

GaussSums gauss_reciprocity_check(const IntMatrix& q, std::int64_t a, const RatVector& w) {
  if (!q.is_square() || static_cast<int>(w.size()) != q.rows()) throw Error(ErrorCode::DimensionMismatch, "gauss_reciprocity_check");
  if (!q.is_symmetric()) throw Error(ErrorCode::NotSymmetric, "Q must be symmetric");
  if (a <= 0) throw Error(ErrorCode::InvalidModulus, "a must be positive");
  if (a % 2 != 0) throw Error(ErrorCode::OddModulus, "a must be even");
  const std::int64_t dq = det(q);
  if (dq == 0) throw Error(ErrorCode::SingularMatrix, "Q must be nonsingular");
  const int g = q.rows();
  for (const Rational& x : w)
    if (denominator(Rational(x * a)) != 1) throw Error(ErrorCode::DimensionMismatch, "a*w must be integral");

  const RatMatrix qr(q);
  // lhs: sum over (Z/a)^g of e^{i pi (q^T Q q / a + 2 w^T q)}
  Complex lhs = 0;
  const std::int64_t count = ipow(a, g);
  for (std::int64_t idx = 0; idx < count; ++idx) {
    RatVector v = to_rational(label_from_index(idx, g, a));
    Rational t = dot(v, qr * v) / a + 2 * dot(w, v);
    lhs += UnitPhase(t).value();
  }

  // rhs: |a^g / det Q|^{1/2} e^{i pi sgn Q / 4} sum_{m in Z^g / Q Z^g} e^{-i pi a (m+w)^T Q^{-1} (m+w)}
  const RatMatrix qinv = inverse(qr);
  Complex sum = 0;
  for (const IntVector& m : coset_reps(q)) {
    RatVector mw = to_rational(m);
    for (int i = 0; i < g; ++i) mw[static_cast<std::size_t>(i)] += w[static_cast<std::size_t>(i)];
    sum += UnitPhase(-a * dot(mw, qinv * mw)).value();
  }
  const double mag = std::sqrt(static_cast<double>(count) / std::abs(static_cast<double>(dq)));
  const Complex rhs = mag * UnitPhase(Rational(signature(q).value(), 4)).value() * sum;
  return {lhs, rhs};
}

}  // namespace tq
