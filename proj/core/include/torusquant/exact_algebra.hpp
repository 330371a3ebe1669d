#pragma once

// Exact integer/rational linear algebra, lattice cosets, inertia of
// symmetric forms and the phase bookkeeping shared by every other module.

#include <complex>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include <Eigen/Dense>
#include <boost/multiprecision/gmp.hpp>

#include "torusquant/error.hpp"

namespace tq {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int, boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational, boost::multiprecision::et_off>;
using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;

using IntVector = std::vector<std::int64_t>;
using RatVector = std::vector<Rational>;

// Overflow-checked int64 arithmetic. Lattice data in this library is small,
// so an overflow means a bug or absurd input, never a silent wrap.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_sub(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

/// Least nonnegative residue of a modulo m (m > 0).
std::int64_t mod(std::int64_t a, std::int64_t m);

/// Rational reduced into [0, m).
Rational mod(const Rational& a, const Rational& m);

struct ExtGcd {
  std::int64_t g;  // nonnegative
  std::int64_t x;
  std::int64_t y;  // a*x + b*y == g
};
ExtGcd ext_gcd(std::int64_t a, std::int64_t b);

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols), 0) {}
  IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);

  static IntMatrix identity(int n);
  static IntMatrix zero(int rows, int cols) { return IntMatrix(rows, cols); }
  static IntMatrix from_rows(const std::vector<IntVector>& rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }
  bool is_square() const { return rows_ == cols_; }

  std::int64_t& operator()(int r, int c) { return data_[static_cast<std::size_t>(r * cols_ + c)]; }
  std::int64_t operator()(int r, int c) const { return data_[static_cast<std::size_t>(r * cols_ + c)]; }

  IntVector row(int r) const;
  IntVector col(int c) const;
  void set_row(int r, const IntVector& v);
  IntMatrix transpose() const;
  IntMatrix block(int r0, int c0, int nr, int nc) const;
  /// Rows [r0, r0+n).
  IntMatrix row_range(int r0, int n) const { return block(r0, 0, n, cols_); }
  bool is_zero() const;
  bool is_symmetric() const;

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::int64_t> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a);
IntVector operator*(const IntMatrix& a, const IntVector& x);
IntMatrix vstack(const IntMatrix& top, const IntMatrix& bottom);
IntMatrix hstack(const IntMatrix& left, const IntMatrix& right);
/// [[a, b], [c, d]] from four equally sized blocks.
IntMatrix block_matrix(const IntMatrix& a, const IntMatrix& b, const IntMatrix& c, const IntMatrix& d);

std::int64_t det(const IntMatrix& m);
/// Adjugate, so that m * adjugate(m) == det(m) * I.
IntMatrix adjugate(const IntMatrix& m);
/// Inverse of a unimodular matrix; throws NotUnimodular otherwise.
IntMatrix unimodular_inverse(const IntMatrix& m);
int rank(const IntMatrix& m);

class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols)) {}
  explicit RatMatrix(const IntMatrix& m);

  static RatMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& operator()(int r, int c) { return data_[static_cast<std::size_t>(r * cols_ + c)]; }
  const Rational& operator()(int r, int c) const { return data_[static_cast<std::size_t>(r * cols_ + c)]; }

  RatMatrix transpose() const;
  bool is_symmetric() const;

  friend bool operator==(const RatMatrix& a, const RatMatrix& b) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> data_;
};

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
RatVector operator*(const RatMatrix& a, const RatVector& x);
RatMatrix inverse(const RatMatrix& m);
RatVector solve(const RatMatrix& a, const RatVector& b);
RatVector to_rational(const IntVector& v);
Rational dot(const RatVector& a, const RatVector& b);

// ---------------------------------------------------------------------------
// Normal forms and lattice cosets

struct HermiteForm {
  IntMatrix H;  // row Hermite normal form
  IntMatrix U;  // unimodular, U * M == H
};

/// Row Hermite normal form: pivots positive, entries above a pivot in [0, pivot),
/// zero rows at the bottom.
HermiteForm hnf(const IntMatrix& m);

struct SmithForm {
  IntMatrix S;  // diagonal, d_1 | d_2 | ..., nonnegative
  IntMatrix U;  // unimodular
  IntMatrix V;  // unimodular, U * M * V == S
};

SmithForm snf(const IntMatrix& m);

/// Basis (as rows) of the integer kernel {x in Z^n : M x = 0}; the basis is
/// primitive, i.e. it spans the full lattice of the rational kernel.
IntMatrix integer_kernel(const IntMatrix& m);

/// Primitive lattice basis (HNF rows) of Z^n intersected with the row span of m.
IntMatrix saturate(const IntMatrix& rows);

/// One representative per class of Z^n / A Z^n, |det A| of them, listed
/// lexicographically over the Smith box and mapped back to Z^n.
std::vector<IntVector> coset_reps(const IntMatrix& a);

/// x - y in A Z^n.
bool same_coset(const IntMatrix& a, const IntVector& x, const IntVector& y);

// ---------------------------------------------------------------------------
// Inertia

struct Signature {
  int n_plus = 0;
  int n_minus = 0;
  int n_zero = 0;

  int value() const { return n_plus - n_minus; }
  int dim() const { return n_plus + n_minus + n_zero; }
  friend bool operator==(const Signature&, const Signature&) = default;
};

/// Exact inertia via symmetric elimination with 1x1 and 2x2 pivots.
Signature signature(const RatMatrix& s);
Signature signature(const IntMatrix& s);

// ---------------------------------------------------------------------------
// Phases

/// e^{i pi t}, t kept in [0, 2).
class UnitPhase {
 public:
  UnitPhase() = default;
  explicit UnitPhase(const Rational& t) : t_(mod(t, Rational(2))) {}

  const Rational& exponent() const { return t_; }
  Complex value() const;
  UnitPhase conj() const { return UnitPhase(-t_); }

  friend UnitPhase operator*(const UnitPhase& a, const UnitPhase& b) { return UnitPhase(a.t_ + b.t_); }
  friend bool operator==(const UnitPhase&, const UnitPhase&) = default;

 private:
  Rational t_{0};
};

/// amp2^{-1/2} * sum_j c_j e^{i pi t_j}
class PhaseSum {
 public:
  struct Term {
    UnitPhase phase;
    Rational coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  PhaseSum() = default;
  explicit PhaseSum(Rational amp2) : amp2_(std::move(amp2)) {}

  void add(const UnitPhase& phase, const Rational& coeff = Rational(1));
  /// Merges equal exponents, drops zero coefficients, sorts by exponent.
  void canonicalize();

  const Rational& amp2() const { return amp2_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  PhaseSum rotated(const UnitPhase& phase) const;
  Complex evaluate() const;

  friend bool operator==(const PhaseSum&, const PhaseSum&) = default;

 private:
  Rational amp2_{1};
  std::vector<Term> terms_;
};

// ---------------------------------------------------------------------------
// Gauss sums

struct GaussSums {
  Complex lhs;
  Complex rhs;
};

/// Both sides of the reciprocity formula for the quadratic Gauss sum with
/// symmetric nonsingular Q, even modulus a > 0 and shift w with a*w integral.
GaussSums gauss_reciprocity_check(const IntMatrix& q, std::int64_t a, const RatVector& w);

/// Index of a label in (Z/k)^g under lexicographic order (first coordinate most significant).
std::int64_t label_index(const IntVector& label, std::int64_t k);
IntVector label_from_index(std::int64_t index, int g, std::int64_t k);
std::int64_t ipow(std::int64_t base, int exp);

}  // namespace tq
