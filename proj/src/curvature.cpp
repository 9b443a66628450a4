#include "parasol/curvature.hpp"

#include <sstream>

namespace parasol {

namespace {

std::string idx2(int i, int j) {
  std::ostringstream os;
  os << "(" << i + 1 << "," << j + 1 << ")";
  return os.str();
}

std::string idx4(int i, int j, int k, int l) {
  std::ostringstream os;
  os << "(" << i + 1 << "," << j + 1 << "," << k + 1 << "," << l + 1 << ")";
  return os.str();
}

}  // namespace

Connection levi_civita(const StructureConstants& sc, const RatMatrix& g) {
  const int n = sc.dim;
  auto ginv = inverse(g);
  if (!ginv) throw InputError("metric is singular");

  auto clow = [&](int i, int j, int k) {
    Rational acc = 0;
    for (int m = 0; m < n; ++m) acc += sc.at(i, j, m) * g.at(m, k);
    return acc;
  };

  Connection conn(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l) {
        Rational acc = 0;
        for (int k = 0; k < n; ++k) {
          Rational koszul = clow(i, j, k) - clow(j, k, i) + clow(k, i, j);
          acc += koszul * ginv->at(k, l);
        }
        conn.gamma.at(i, j, l) = acc / 2;
      }
  return conn;
}

Tensor4<Rational> riemann(const Connection& conn, const StructureConstants& sc,
                          const RatMatrix& g) {
  const int n = conn.dim;
  Tensor4<Rational> up(n);  // component on e_l of R(e_i,e_j)e_k
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          Rational acc = 0;
          for (int m = 0; m < n; ++m)
            acc += conn.gamma.at(j, k, m) * conn.gamma.at(i, m, l) -
                   conn.gamma.at(i, k, m) * conn.gamma.at(j, m, l) -
                   sc.at(i, j, m) * conn.gamma.at(m, k, l);
          up.at(i, j, k, l) = acc;
        }
  Tensor4<Rational> low(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          Rational acc = 0;
          for (int m = 0; m < n; ++m) acc += up.at(i, j, k, m) * g.at(m, l);
          low.at(i, j, k, l) = acc;
        }
  return low;
}

CurvatureData ricci_and_scalars(const Tensor4<Rational>& riem, const RatMatrix& g,
                                const RatMatrix& g_assoc, const RatMatrix& phi) {
  const int n = g.rows();
  auto ginv = inverse(g);
  if (!ginv) throw InputError("metric is singular");
  auto gtinv = inverse(g_assoc);
  if (!gtinv) throw InputError("associated metric is singular");

  CurvatureData cd;
  cd.dim = n;
  cd.riem = riem;
  cd.ricci = RatMatrix(n, n);
  cd.ricci_star = RatMatrix(n, n);
  cd.ricci_operator = RatMatrix(n, n);

  for (int y = 0; y < n; ++y)
    for (int z = 0; z < n; ++z) {
      Rational acc = 0, acc_star = 0;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          acc += ginv->at(i, j) * riem.at(i, y, z, j);
          for (int m = 0; m < n; ++m)
            acc_star += ginv->at(i, j) * riem.at(i, y, z, m) * phi.at(m, j);
        }
      cd.ricci.at(y, z) = acc;
      cd.ricci_star.at(y, z) = acc_star;
    }

  cd.ricci_operator = matmul(*ginv, cd.ricci);

  cd.tau = 0;
  cd.tau_assoc = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      cd.tau += ginv->at(i, j) * cd.ricci.at(i, j);
      cd.tau_assoc += gtinv->at(i, j) * cd.ricci.at(i, j);
    }

  cd.tau_assoc_full = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          cd.tau_assoc_full += gtinv->at(i, l) * gtinv->at(j, k) * riem.at(i, j, k, l);

  return cd;
}

Rational sectional(const Tensor4<Rational>& riem, const RatMatrix& g,
                   const std::vector<Rational>& x, const std::vector<Rational>& y) {
  const int n = g.rows();
  auto inner = [&](const std::vector<Rational>& u, const std::vector<Rational>& v) {
    Rational acc = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) acc += u[i] * g.at(i, j) * v[j];
    return acc;
  };
  Rational denom = inner(x, x) * inner(y, y) - inner(x, y) * inner(x, y);
  if (denom == 0) throw DegeneratePlaneError("degenerate 2-plane: g(x,x)g(y,y) - g(x,y)^2 = 0");
  Rational numer = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          numer += riem.at(i, j, k, l) * x[i] * y[j] * y[k] * x[l];
  return numer / denom;
}

Tensor4<Rational> curvature_3dim_reconstruct(const RatMatrix& rho, const Rational& tau,
                                             const RatMatrix& g) {
  const int n = g.rows();
  if (n != 3) throw InputError("3-dimensional reconstruction requires dim = 3, got " +
                               std::to_string(n));
  Tensor4<Rational> out(n);
  const Rational half_tau = tau / 2;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        for (int w = 0; w < n; ++w)
          out.at(x, y, z, w) = g.at(y, z) * rho.at(x, w) - g.at(x, z) * rho.at(y, w) +
                               rho.at(y, z) * g.at(x, w) - rho.at(x, z) * g.at(y, w) -
                               half_tau * (g.at(y, z) * g.at(x, w) - g.at(x, z) * g.at(y, w));
  return out;
}

Tensor3<Rational> nabla_tensor(const Connection& conn, const RatMatrix& t, int contravariant,
                               int covariant) {
  const int n = conn.dim;
  Tensor3<Rational> out(n);
  if (contravariant == 1 && covariant == 1) {
    // out(i,k,j) = (nabla_i T)^k_j
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k)
        for (int j = 0; j < n; ++j) {
          Rational acc = 0;
          for (int p = 0; p < n; ++p)
            acc += conn.gamma.at(i, p, k) * t.at(p, j) - conn.gamma.at(i, j, p) * t.at(k, p);
          out.at(i, k, j) = acc;
        }
    return out;
  }
  if (contravariant == 0 && covariant == 2) {
    // out(i,j,k) = (nabla_i T)_{jk}
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          Rational acc = 0;
          for (int p = 0; p < n; ++p)
            acc -= conn.gamma.at(i, j, p) * t.at(p, k) + conn.gamma.at(i, k, p) * t.at(j, p);
          out.at(i, j, k) = acc;
        }
    return out;
  }
  throw InputError("unsupported tensor valence (" + std::to_string(contravariant) + "," +
                   std::to_string(covariant) + "); supported: (1,1) and (0,2)");
}

std::vector<Tensor4<Rational>> nabla_riemann(const Connection& conn,
                                             const Tensor4<Rational>& riem) {
  const int n = conn.dim;
  std::vector<Tensor4<Rational>> out(n, Tensor4<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          for (int m = 0; m < n; ++m) {
            Rational acc = 0;
            for (int p = 0; p < n; ++p)
              acc -= conn.gamma.at(i, j, p) * riem.at(p, k, l, m) +
                     conn.gamma.at(i, k, p) * riem.at(j, p, l, m) +
                     conn.gamma.at(i, l, p) * riem.at(j, k, p, m) +
                     conn.gamma.at(i, m, p) * riem.at(j, k, l, p);
            out[i].at(j, k, l, m) = acc;
          }
  return out;
}

RatMatrix nabla_constant_vector(const Connection& conn, const std::vector<Rational>& v) {
  const int n = conn.dim;
  RatMatrix out(n, n);  // out(i,k) = (nabla_i v)^k
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      Rational acc = 0;
      for (int p = 0; p < n; ++p) acc += conn.gamma.at(i, p, k) * v[p];
      out.at(i, k) = acc;
    }
  return out;
}

RatMatrix nabla_constant_covector(const Connection& conn, const std::vector<Rational>& w) {
  const int n = conn.dim;
  RatMatrix out(n, n);  // out(i,j) = (nabla_i w)_j
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rational acc = 0;
      for (int p = 0; p < n; ++p) acc -= conn.gamma.at(i, j, p) * w[p];
      out.at(i, j) = acc;
    }
  return out;
}

CheckReport connection_checks(const Connection& conn, const StructureConstants& sc,
                              const RatMatrix& g) {
  const int n = conn.dim;
  CheckReport report;

  {
    CheckItem item{"torsion_free", true, ""};
    for (int i = 0; i < n && item.passed; ++i)
      for (int j = 0; j < n && item.passed; ++j)
        for (int k = 0; k < n && item.passed; ++k) {
          Rational torsion = conn.gamma.at(i, j, k) - conn.gamma.at(j, i, k) - sc.at(i, j, k);
          if (torsion != 0) {
            item.passed = false;
            item.detail = "torsion component " + idx2(i, j) + "^" + std::to_string(k + 1) +
                          " = " + torsion.str();
          }
        }
    report.items.push_back(std::move(item));
  }

  {
    CheckItem item{"metric_compatible", true, ""};
    for (int i = 0; i < n && item.passed; ++i)
      for (int j = 0; j < n && item.passed; ++j)
        for (int k = 0; k < n && item.passed; ++k) {
          Rational acc = 0;
          for (int l = 0; l < n; ++l)
            acc += conn.gamma.at(i, j, l) * g.at(l, k) + conn.gamma.at(i, k, l) * g.at(j, l);
          if (acc != 0) {
            item.passed = false;
            item.detail = "(nabla_" + std::to_string(i + 1) + " g)" + idx2(j, k) + " = " +
                          Rational(-acc).str();
          }
        }
    report.items.push_back(std::move(item));
  }

  return report;
}

CheckReport curvature_checks(const Connection& conn, const Tensor4<Rational>& riem) {
  const int n = conn.dim;
  CheckReport report;

  {
    CheckItem item{"riemann_symmetries", true, ""};
    for (int i = 0; i < n && item.passed; ++i)
      for (int j = 0; j < n && item.passed; ++j)
        for (int k = 0; k < n && item.passed; ++k)
          for (int l = 0; l < n && item.passed; ++l) {
            if (riem.at(i, j, k, l) + riem.at(j, i, k, l) != 0) {
              item.passed = false;
              item.detail = "antisymmetry in first pair fails at " + idx4(i, j, k, l);
            } else if (riem.at(i, j, k, l) + riem.at(i, j, l, k) != 0) {
              item.passed = false;
              item.detail = "antisymmetry in second pair fails at " + idx4(i, j, k, l);
            } else if (riem.at(i, j, k, l) != riem.at(k, l, i, j)) {
              item.passed = false;
              item.detail = "pair symmetry fails at " + idx4(i, j, k, l);
            }
          }
    report.items.push_back(std::move(item));
  }

  {
    CheckItem item{"bianchi_first", true, ""};
    for (int i = 0; i < n && item.passed; ++i)
      for (int j = 0; j < n && item.passed; ++j)
        for (int k = 0; k < n && item.passed; ++k)
          for (int l = 0; l < n && item.passed; ++l) {
            Rational acc =
                riem.at(i, j, k, l) + riem.at(j, k, i, l) + riem.at(k, i, j, l);
            if (acc != 0) {
              item.passed = false;
              item.detail = "cyclic sum at " + idx4(i, j, k, l) + " = " + acc.str();
            }
          }
    report.items.push_back(std::move(item));
  }

  {
    CheckItem item{"bianchi_second", true, ""};
    auto nabla_r = nabla_riemann(conn, riem);
    for (int i = 0; i < n && item.passed; ++i)
      for (int j = 0; j < n && item.passed; ++j)
        for (int k = 0; k < n && item.passed; ++k)
          for (int l = 0; l < n && item.passed; ++l)
            for (int m = 0; m < n && item.passed; ++m) {
              Rational acc = nabla_r[i].at(j, k, l, m) + nabla_r[j].at(k, i, l, m) +
                             nabla_r[k].at(i, j, l, m);
              if (acc != 0) {
                item.passed = false;
                item.detail = "cyclic covariant sum at (" + std::to_string(i + 1) + "," +
                              std::to_string(j + 1) + "," + std::to_string(k + 1) + ";" +
                              std::to_string(l + 1) + "," + std::to_string(m + 1) +
                              ") = " + acc.str();
              }
            }
    report.items.push_back(std::move(item));
  }

  return report;
}

}  // namespace parasol
