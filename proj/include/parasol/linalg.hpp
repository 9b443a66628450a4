#ifndef PARASOL_LINALG_HPP
#define PARASOL_LINALG_HPP

#include <utility>
#include <vector>

#include "parasol/hypexpr.hpp"
#include "parasol/rational.hpp"

namespace parasol {

template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = T(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  T& at(int i, int j) { return data_[i * cols_ + j]; }
  const T& at(int i, int j) const { return data_[i * cols_ + j]; }

  bool operator==(const Matrix&) const = default;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<T> data_;
};

using RatMatrix = Matrix<Rational>;
using ExprMatrix = Matrix<HypExpr>;

template <typename T>
class Tensor3 {
 public:
  Tensor3() = default;
  explicit Tensor3(int dim) : dim_(dim), data_(dim * dim * dim) {}
  int dim() const { return dim_; }
  T& at(int i, int j, int k) { return data_[(i * dim_ + j) * dim_ + k]; }
  const T& at(int i, int j, int k) const { return data_[(i * dim_ + j) * dim_ + k]; }
  bool operator==(const Tensor3&) const = default;

 private:
  int dim_ = 0;
  std::vector<T> data_;
};

template <typename T>
class Tensor4 {
 public:
  Tensor4() = default;
  explicit Tensor4(int dim) : dim_(dim), data_(dim * dim * dim * dim) {}
  int dim() const { return dim_; }
  T& at(int i, int j, int k, int l) { return data_[((i * dim_ + j) * dim_ + k) * dim_ + l]; }
  const T& at(int i, int j, int k, int l) const {
    return data_[((i * dim_ + j) * dim_ + k) * dim_ + l];
  }
  bool operator==(const Tensor4&) const = default;

 private:
  int dim_ = 0;
  std::vector<T> data_;
};

RatMatrix matmul(const RatMatrix& a, const RatMatrix& b);

/// Exact determinant (Gaussian elimination over the rationals).
Rational det(const RatMatrix& m);

/// Cofactor expansion; the expression ring has no division.
HypExpr det(const ExprMatrix& m);

/// Gauss-Jordan inverse; nullopt when singular.
std::optional<RatMatrix> inverse(const RatMatrix& m);

/// Leading-principal-minor test for positive definiteness (exact).
bool positive_definite(const RatMatrix& m);

struct Signature {
  int positive = 0;
  int negative = 0;
  int zero = 0;
  bool operator==(const Signature&) const = default;
};

/// Signature of a symmetric matrix by rational congruence diagonalization.
Signature signature_of(RatMatrix symmetric);

/// Exact solve of an overdetermined system A x = rhs with A rational of full
/// column rank (throws std::logic_error otherwise). The scalar S is Rational
/// or HypExpr. `consistent` means the residual A x - rhs vanishes identically.
template <typename S>
struct ExactFit {
  bool consistent = false;
  std::vector<S> solution;
  std::vector<S> residual;
};

ExactFit<Rational> solve_overdetermined(const RatMatrix& a, const std::vector<Rational>& rhs);
ExactFit<HypExpr> solve_overdetermined(const RatMatrix& a, const std::vector<HypExpr>& rhs);

}  // namespace parasol

#endif
