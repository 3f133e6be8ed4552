#include "conefun/exact.hpp"

#include "conefun/errors.hpp"

#include <algorithm>
#include <limits>

namespace conefun {

Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }

Int content(const IntVec& v) {
  Int g = 0;
  for (const Int& x : v) g = gcd(g, x);
  return boost::multiprecision::abs(g);
}

IntVec primitive(const IntVec& v) {
  Int g = content(v);
  if (g == 0 || g == 1) return v;
  IntVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
  return out;
}

bool is_zero(const IntVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

IntVec add(const IntVec& a, const IntVec& b) {
  IntVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

IntVec sub(const IntVec& a, const IntVec& b) {
  IntVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

IntVec negate(const IntVec& v) {
  IntVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = -v[i];
  return out;
}

IntVec scale(const IntVec& v, const Int& c) {
  IntVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] * c;
  return out;
}

Int dot(const IntVec& a, const IntVec& b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Int det(const IntMat& m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return 1;
  IntMat a = m;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i) {
        if (a[i][k] != 0) { p = i; break; }
      }
      if (p < 0) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

int rank(const IntMat& m) {
  if (m.empty()) return 0;
  IntMat a = m;
  const int rows = static_cast<int>(a.size());
  const int cols = static_cast<int>(a[0].size());
  int rk = 0;
  for (int c = 0; c < cols && rk < rows; ++c) {
    int p = -1;
    for (int i = rk; i < rows; ++i) {
      if (a[i][c] != 0) { p = i; break; }
    }
    if (p < 0) continue;
    std::swap(a[rk], a[p]);
    for (int i = rk + 1; i < rows; ++i) {
      if (a[i][c] == 0) continue;
      Int g = gcd(a[rk][c], a[i][c]);
      Int f1 = a[i][c] / g, f2 = a[rk][c] / g;
      for (int j = c; j < cols; ++j) a[i][j] = a[i][j] * f2 - a[rk][j] * f1;
    }
    ++rk;
  }
  return rk;
}

IntMat identity_matrix(int n) {
  IntMat out(n, IntVec(n, 0));
  for (int i = 0; i < n; ++i) out[i][i] = 1;
  return out;
}

IntMat matmul(const IntMat& a, const IntMat& b) {
  const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  IntMat out(n, IntVec(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) out[i][j] += a[i][l] * b[l][j];
    }
  return out;
}

IntVec matvec(const IntMat& a, const IntVec& v) {
  IntVec out(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = dot(a[i], v);
  return out;
}

IntMat transpose(const IntMat& m) {
  if (m.empty()) return {};
  IntMat out(m[0].size(), IntVec(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[0].size(); ++j) out[j][i] = m[i][j];
  return out;
}

IntMat inverse_unimodular(const IntMat& m) {
  const int n = static_cast<int>(m.size());
  Int d = det(m);
  if (d != 1 && d != -1) throw Degenerate("inverse_unimodular: determinant is not ±1");
  // Adjugate via cofactors; fine at the dimensions this library works with.
  IntMat inv(n, IntVec(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      IntMat minor;
      minor.reserve(n - 1);
      for (int r = 0; r < n; ++r) {
        if (r == i) continue;
        IntVec row;
        row.reserve(n - 1);
        for (int c = 0; c < n; ++c) {
          if (c == j) continue;
          row.push_back(m[r][c]);
        }
        minor.push_back(std::move(row));
      }
      Int cof = det(minor);
      if ((i + j) % 2 == 1) cof = -cof;
      inv[j][i] = cof / d;
    }
  }
  return inv;
}

IntVec cross_product(const std::vector<IntVec>& vs) {
  const int r = static_cast<int>(vs.size()) + 1;
  IntVec out(r);
  IntMat m(r, IntVec(r, 0));
  for (int i = 1; i < r; ++i) m[i] = vs[i - 1];
  for (int j = 0; j < r; ++j) {
    // coefficient of u_j in det[u, v_1, ..., v_{r-1}] (rows)
    for (int c = 0; c < r; ++c) m[0][c] = 0;
    m[0][j] = 1;
    out[j] = det(m);
  }
  return out;
}

IntVec solve_gcd_combination(const IntVec& v) {
  const std::size_t n = v.size();
  IntVec x(n, 0);
  Int g = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (v[i] == 0) continue;
    if (g == 0) {
      g = boost::multiprecision::abs(v[i]);
      x[i] = v[i] > 0 ? 1 : -1;
      continue;
    }
    // extended gcd of (g, v[i])
    Int a = g, b = v[i], s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (b != 0) {
      Int q = a / b;
      Int tmp = a - q * b; a = b; b = tmp;
      tmp = s0 - q * s1; s0 = s1; s1 = tmp;
      tmp = t0 - q * t1; t0 = t1; t1 = tmp;
    }
    // a = s0 * g + t0 * v[i], a = gcd > 0 up to sign
    if (a < 0) { a = -a; s0 = -s0; t0 = -t0; }
    for (std::size_t j = 0; j < i; ++j) x[j] *= s0;
    x[i] = t0;
    g = a;
  }
  if (g == 0) throw Degenerate("solve_gcd_combination: zero vector");
  return x;
}

std::vector<Int> smith_invariants(IntMat m) {
  std::vector<Int> out;
  if (m.empty() || m[0].empty()) return out;
  std::size_t rows = m.size(), cols = m[0].size();
  std::size_t t = 0;
  while (t < rows && t < cols) {
    // find a nonzero pivot
    std::size_t pi = t, pj = t;
    bool found = false;
    for (std::size_t i = t; i < rows && !found; ++i)
      for (std::size_t j = t; j < cols && !found; ++j)
        if (m[i][j] != 0) { pi = i; pj = j; found = true; }
    if (!found) break;
    std::swap(m[t], m[pi]);
    for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][t], m[i][pj]);
    // clear row and column t by Euclidean steps
    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (std::size_t i = t + 1; i < rows; ++i) {
        while (m[i][t] != 0) {
          Int q = m[t][t] == 0 ? Int(0) : m[i][t] / m[t][t];
          for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
          if (m[i][t] != 0) {
            std::swap(m[t], m[i]);
            dirty = true;
          }
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        while (m[t][j] != 0) {
          Int q = m[t][t] == 0 ? Int(0) : m[t][j] / m[t][t];
          for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
          if (m[t][j] != 0) {
            for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][t], m[i][j]);
            dirty = true;
          }
        }
      }
    }
    ++t;
  }
  for (std::size_t i = 0; i < t; ++i) out.push_back(boost::multiprecision::abs(m[i][i]));
  // enforce divisibility chain
  for (std::size_t i = 0; i + 1 < out.size(); ++i) {
    for (std::size_t j = i + 1; j < out.size(); ++j) {
      if (out[j] % out[i] != 0) {
        Int g = gcd(out[i], out[j]);
        Int l = out[i] / g * out[j];
        out[i] = g;
        out[j] = l;
      }
    }
  }
  return out;
}

bool rows_saturated(const IntMat& m) {
  for (const Int& d : smith_invariants(m))
    if (d != 1) return false;
  return true;
}

namespace {

// Hermite normal form of m (k x n, full row rank): returns (H, U) with
// U in GL_n(Z), m * U = [H | 0], H lower triangular k x k.  Column
// operations only.
void hnf_columns(IntMat m, IntMat& u) {
  const std::size_t rows = m.size();
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  u = identity_matrix(static_cast<int>(cols));
  std::size_t pc = 0;
  for (std::size_t r = 0; r < rows && pc < cols; ++r) {
    // reduce columns pc..cols-1 in row r to a single nonzero entry at pc
    while (true) {
      std::size_t jmin = cols;
      for (std::size_t j = pc; j < cols; ++j) {
        if (m[r][j] != 0 && (jmin == cols ||
            boost::multiprecision::abs(m[r][j]) < boost::multiprecision::abs(m[r][jmin])))
          jmin = j;
      }
      if (jmin == cols) break;  // row is zero from pc on
      if (jmin != pc) {
        for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][pc], m[i][jmin]);
        for (std::size_t i = 0; i < cols; ++i) std::swap(u[i][pc], u[i][jmin]);
      }
      bool others = false;
      for (std::size_t j = pc + 1; j < cols; ++j) {
        if (m[r][j] == 0) continue;
        others = true;
        Int q = m[r][j] / m[r][pc];
        for (std::size_t i = 0; i < rows; ++i) m[i][j] -= q * m[i][pc];
        for (std::size_t i = 0; i < cols; ++i) u[i][j] -= q * u[i][pc];
      }
      if (!others) break;
    }
    if (m[r][pc] != 0) ++pc;
  }
}

}  // namespace

std::optional<IntMat> complete_to_unimodular(const IntMat& m) {
  if (m.empty()) return identity_matrix(0);
  const int k = static_cast<int>(m.size());
  const int n = static_cast<int>(m[0].size());
  if (rank(m) != k || !rows_saturated(m)) return std::nullopt;
  IntMat u;
  hnf_columns(m, u);
  // m * u = [H | 0] with |det H| = 1 by saturation, so rows of u^{-1} from
  // index k complete the rows of m.  Build the candidate directly: the
  // completion rows are the last n-k rows of u^{-1}.
  IntMat uinv = inverse_unimodular(u);
  IntMat full(n, IntVec(n));
  for (int i = 0; i < k; ++i) full[i] = m[i];
  for (int i = k; i < n; ++i) full[i] = uinv[i];
  Int d = det(full);
  if (d != 1 && d != -1) return std::nullopt;
  if (d == -1 && k < n) {
    // flip an added row to land in SL_n(Z); with k == n there is nothing to
    // flip and the determinant stays -1
    full[n - 1] = negate(full[n - 1]);
  }
  return full;
}

namespace {

// Rows spanning {x in Z^n : m x = 0}; always a saturated lattice.
IntMat integer_kernel_rows(const IntMat& m) {
  const int n = m.empty() ? 0 : static_cast<int>(m[0].size());
  IntMat u;
  {
    IntMat tmp = m;
    hnf_columns(tmp, u);
  }
  IntMat prod = matmul(m, u);
  IntMat kernel;
  for (int j = 0; j < n; ++j) {
    bool zero = true;
    for (std::size_t i = 0; i < prod.size(); ++i)
      if (prod[i][j] != 0) { zero = false; break; }
    if (zero) {
      IntVec col(n);
      for (int i = 0; i < n; ++i) col[i] = u[i][j];
      kernel.push_back(std::move(col));
    }
  }
  return kernel;
}

}  // namespace

IntMat saturation_basis(const IntMat& m) {
  // span_R(rows) ∩ Z^n is the integer kernel of the integer kernel of m.
  const int n = m.empty() ? 0 : static_cast<int>(m[0].size());
  int rk = rank(m);
  IntMat kernel = integer_kernel_rows(m);
  if (kernel.empty()) return identity_matrix(n);
  IntMat basis = integer_kernel_rows(kernel);
  if (static_cast<int>(basis.size()) != rk)
    throw Error("saturation_basis: internal rank mismatch");
  return basis;
}

std::vector<Rat> solve_rational(const IntMat& m, const IntVec& rhs) {
  const int n = static_cast<int>(m.size());
  Int d = det(m);
  if (d == 0) throw Degenerate("solve_rational: singular matrix");
  std::vector<Rat> out(n);
  // Cramer; n is tiny here.
  for (int j = 0; j < n; ++j) {
    IntMat mj = m;
    for (int i = 0; i < n; ++i) mj[i][j] = rhs[i];
    out[j] = Rat(det(mj), d);
  }
  return out;
}

std::int64_t to_i64(const Int& v) {
  static const Int lo = std::numeric_limits<std::int64_t>::min();
  static const Int hi = std::numeric_limits<std::int64_t>::max();
  if (v < lo || v > hi) throw Error("integer out of int64 range");
  return static_cast<std::int64_t>(v);
}

std::vector<std::int64_t> to_i64(const IntVec& v) {
  std::vector<std::int64_t> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = to_i64(v[i]);
  return out;
}

IntVec from_i64(const std::vector<std::int64_t>& v) {
  IntVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i];
  return out;
}

}  // namespace conefun
