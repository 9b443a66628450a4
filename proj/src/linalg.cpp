#include "parasol/linalg.hpp"

#include <stdexcept>

namespace parasol {

RatMatrix matmul(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols() != b.rows()) throw std::logic_error("matmul dimension mismatch");
  RatMatrix out(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) {
      Rational acc = 0;
      for (int k = 0; k < a.cols(); ++k) acc += a.at(i, k) * b.at(k, j);
      out.at(i, j) = acc;
    }
  return out;
}

Rational det(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw std::logic_error("det of non-square matrix");
  RatMatrix a = m;
  const int n = a.rows();
  Rational result = 1;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int row = col; row < n; ++row)
      if (a.at(row, col) != 0) {
        pivot = row;
        break;
      }
    if (pivot < 0) return 0;
    if (pivot != col) {
      for (int j = 0; j < n; ++j) std::swap(a.at(pivot, j), a.at(col, j));
      result = -result;
    }
    result *= a.at(col, col);
    for (int row = col + 1; row < n; ++row) {
      if (a.at(row, col) == 0) continue;
      Rational f = a.at(row, col) / a.at(col, col);
      for (int j = col; j < n; ++j) a.at(row, j) -= f * a.at(col, j);
    }
  }
  return result;
}

HypExpr det(const ExprMatrix& m) {
  if (m.rows() != m.cols()) throw std::logic_error("det of non-square matrix");
  const int n = m.rows();
  if (n == 0) return HypExpr::constant(1);
  if (n == 1) return m.at(0, 0);
  HypExpr acc;
  for (int j = 0; j < n; ++j) {
    if (m.at(0, j).is_zero()) continue;
    ExprMatrix minor(n - 1, n - 1);
    for (int r = 1; r < n; ++r) {
      int cc = 0;
      for (int c = 0; c < n; ++c) {
        if (c == j) continue;
        minor.at(r - 1, cc++) = m.at(r, c);
      }
    }
    HypExpr term = m.at(0, j) * det(minor);
    acc += (j % 2 == 0) ? term : -term;
  }
  return acc;
}

std::optional<RatMatrix> inverse(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw std::logic_error("inverse of non-square matrix");
  const int n = m.rows();
  RatMatrix a = m;
  RatMatrix inv = RatMatrix::identity(n);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int row = col; row < n; ++row)
      if (a.at(row, col) != 0) {
        pivot = row;
        break;
      }
    if (pivot < 0) return std::nullopt;
    if (pivot != col)
      for (int j = 0; j < n; ++j) {
        std::swap(a.at(pivot, j), a.at(col, j));
        std::swap(inv.at(pivot, j), inv.at(col, j));
      }
    Rational d = a.at(col, col);
    for (int j = 0; j < n; ++j) {
      a.at(col, j) /= d;
      inv.at(col, j) /= d;
    }
    for (int row = 0; row < n; ++row) {
      if (row == col || a.at(row, col) == 0) continue;
      Rational f = a.at(row, col);
      for (int j = 0; j < n; ++j) {
        a.at(row, j) -= f * a.at(col, j);
        inv.at(row, j) -= f * inv.at(col, j);
      }
    }
  }
  return inv;
}

bool positive_definite(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw std::logic_error("positive_definite of non-square matrix");
  for (int k = 1; k <= m.rows(); ++k) {
    RatMatrix lead(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) lead.at(i, j) = m.at(i, j);
    if (det(lead) <= 0) return false;
  }
  return true;
}

Signature signature_of(RatMatrix m) {
  if (m.rows() != m.cols()) throw std::logic_error("signature of non-square matrix");
  const int n = m.rows();
  Signature sig;
  for (int k = 0; k < n; ++k) {
    if (m.at(k, k) == 0) {
      int swap_with = -1;
      for (int l = k + 1; l < n; ++l)
        if (m.at(l, l) != 0) {
          swap_with = l;
          break;
        }
      if (swap_with >= 0) {
        for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(swap_with, j));
        for (int i = 0; i < n; ++i) std::swap(m.at(i, k), m.at(i, swap_with));
      } else {
        int partner = -1;
        for (int l = k + 1; l < n; ++l)
          if (m.at(k, l) != 0) {
            partner = l;
            break;
          }
        if (partner < 0) {
          ++sig.zero;  // whole remaining row/column is zero
          continue;
        }
        // congruence transform basis_k += basis_partner: diag entry becomes 2*m(k,partner)
        for (int j = 0; j < n; ++j) m.at(k, j) += m.at(partner, j);
        for (int i = 0; i < n; ++i) m.at(i, k) += m.at(i, partner);
      }
    }
    Rational pivot = m.at(k, k);
    if (pivot > 0)
      ++sig.positive;
    else
      ++sig.negative;
    for (int i = k + 1; i < n; ++i) {
      if (m.at(i, k) == 0) continue;
      Rational f = m.at(i, k) / pivot;
      for (int j = 0; j < n; ++j) m.at(i, j) -= f * m.at(k, j);
      for (int j = 0; j < n; ++j) m.at(j, i) -= f * m.at(j, k);
    }
  }
  return sig;
}

namespace {

template <typename S>
ExactFit<S> solve_overdetermined_impl(const RatMatrix& a, const std::vector<S>& rhs) {
  const int m = a.rows();
  const int k = a.cols();
  if (static_cast<int>(rhs.size()) != m) throw std::logic_error("rhs size mismatch");

  // Select k pivot rows by Gaussian elimination on a working copy.
  RatMatrix work = a;
  std::vector<int> pivot_rows;
  std::vector<bool> used(m, false);
  for (int col = 0; col < k; ++col) {
    int pivot = -1;
    for (int row = 0; row < m; ++row)
      if (!used[row] && work.at(row, col) != 0) {
        pivot = row;
        break;
      }
    if (pivot < 0) throw std::logic_error("coefficient matrix is rank deficient");
    used[pivot] = true;
    pivot_rows.push_back(pivot);
    for (int row = 0; row < m; ++row) {
      if (used[row] || work.at(row, col) == 0) continue;
      Rational f = work.at(row, col) / work.at(pivot, col);
      for (int j = 0; j < k; ++j) work.at(row, j) -= f * work.at(pivot, j);
    }
  }

  RatMatrix square(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) square.at(i, j) = a.at(pivot_rows[i], j);
  auto inv = inverse(square);
  if (!inv) throw std::logic_error("pivot submatrix unexpectedly singular");

  ExactFit<S> fit;
  fit.solution.resize(k);
  for (int i = 0; i < k; ++i) {
    S acc{};
    for (int j = 0; j < k; ++j) {
      if constexpr (std::is_same_v<S, Rational>)
        acc += inv->at(i, j) * rhs[pivot_rows[j]];
      else
        acc += rhs[pivot_rows[j]].scaled(inv->at(i, j));
    }
    fit.solution[i] = std::move(acc);
  }

  fit.residual.resize(m);
  fit.consistent = true;
  for (int row = 0; row < m; ++row) {
    S acc{};
    for (int j = 0; j < k; ++j) {
      if constexpr (std::is_same_v<S, Rational>)
        acc += a.at(row, j) * fit.solution[j];
      else
        acc += fit.solution[j].scaled(a.at(row, j));
    }
    if constexpr (std::is_same_v<S, Rational>) {
      fit.residual[row] = acc - rhs[row];
      if (fit.residual[row] != 0) fit.consistent = false;
    } else {
      fit.residual[row] = acc - rhs[row];
      if (!fit.residual[row].is_zero()) fit.consistent = false;
    }
  }
  return fit;
}

}  // namespace

ExactFit<Rational> solve_overdetermined(const RatMatrix& a, const std::vector<Rational>& rhs) {
  return solve_overdetermined_impl(a, rhs);
}

ExactFit<HypExpr> solve_overdetermined(const RatMatrix& a, const std::vector<HypExpr>& rhs) {
  return solve_overdetermined_impl(a, rhs);
}

}  // namespace parasol
