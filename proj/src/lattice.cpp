#include "gkm/lattice.hpp"

#include <algorithm>

#include "gkm/errors.hpp"

namespace gkm::lattice {

namespace {

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

void axpy(Vector& y, const Integer& f, const Vector& x) {
  for (std::size_t k = 0; k < y.size(); ++k) y[k] -= f * x[k];
}

/// Column-style reduction shared by the kernel and system solvers. Columns
/// are stored as (A-part, U-part) with A*U tracked implicitly.
struct ColumnForm {
  std::vector<Vector> a_cols;  // each of length rows
  std::vector<Vector> u_cols;  // each of length cols
  std::vector<std::size_t> pivot_row;  // for columns [0, pivots)
  std::size_t pivots = 0;
};

ColumnForm column_echelon(const Matrix& a, std::size_t cols) {
  const std::size_t rows = a.size();
  ColumnForm f;
  f.a_cols.assign(cols, Vector(rows, 0));
  f.u_cols.assign(cols, Vector(cols, 0));
  for (std::size_t c = 0; c < cols; ++c) {
    f.u_cols[c][c] = 1;
    for (std::size_t r = 0; r < rows; ++r) f.a_cols[c][r] = a[r].at(c);
  }
  for (std::size_t r = 0; r < rows && f.pivots < cols; ++r) {
    const std::size_t pc = f.pivots;
    for (;;) {
      // Smallest nonzero |entry| in row r among columns >= pc.
      std::size_t best = cols;
      for (std::size_t c = pc; c < cols; ++c) {
        if (f.a_cols[c][r] == 0) continue;
        if (best == cols || abs(f.a_cols[c][r]) < abs(f.a_cols[best][r])) best = c;
      }
      if (best == cols) break;
      std::swap(f.a_cols[pc], f.a_cols[best]);
      std::swap(f.u_cols[pc], f.u_cols[best]);
      bool clean = true;
      for (std::size_t c = pc + 1; c < cols; ++c) {
        if (f.a_cols[c][r] == 0) continue;
        const Integer q = floor_div(f.a_cols[c][r], f.a_cols[pc][r]);
        axpy(f.a_cols[c], q, f.a_cols[pc]);
        axpy(f.u_cols[c], q, f.u_cols[pc]);
        if (f.a_cols[c][r] != 0) clean = false;
      }
      if (clean) {
        f.pivot_row.push_back(r);
        ++f.pivots;
        break;
      }
    }
  }
  return f;
}

}  // namespace

Matrix hermite_basis(Matrix rows, std::size_t dim) {
  for (const auto& row : rows)
    if (row.size() != dim) throw Error("lattice generator has the wrong dimension");
  std::size_t r = 0;
  std::vector<std::size_t> pivot_cols;
  for (std::size_t c = 0; c < dim && r < rows.size(); ++c) {
    for (;;) {
      std::size_t best = rows.size();
      for (std::size_t i = r; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        if (best == rows.size() || abs(rows[i][c]) < abs(rows[best][c])) best = i;
      }
      if (best == rows.size()) break;
      std::swap(rows[r], rows[best]);
      bool clean = true;
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        axpy(rows[i], floor_div(rows[i][c], rows[r][c]), rows[r]);
        if (rows[i][c] != 0) clean = false;
      }
      if (clean) {
        if (rows[r][c] < 0)
          for (auto& x : rows[r]) x = -x;
        pivot_cols.push_back(c);
        ++r;
        break;
      }
    }
  }
  rows.resize(r);
  for (std::size_t j = 0; j < r; ++j) {
    const std::size_t c = pivot_cols[j];
    for (std::size_t i = 0; i < j; ++i) axpy(rows[i], floor_div(rows[i][c], rows[j][c]), rows[j]);
  }
  return rows;
}

bool hermite_contains(const Matrix& hermite, Vector v) {
  for (const auto& row : hermite) {
    const auto pivot = std::find_if(row.begin(), row.end(), [](const Integer& x) { return x != 0; });
    const std::size_t c = static_cast<std::size_t>(pivot - row.begin());
    for (std::size_t k = 0; k < c; ++k)
      if (v[k] != 0) return false;
    if (!mpz_divisible_p(v[c].get_mpz_t(), row[c].get_mpz_t())) return false;
    const Integer q = v[c] / row[c];
    axpy(v, q, row);
  }
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

Matrix integer_kernel(const Matrix& a, std::size_t cols) {
  ColumnForm f = column_echelon(a, cols);
  Matrix kernel;
  for (std::size_t c = f.pivots; c < cols; ++c) kernel.push_back(f.u_cols[c]);
  return kernel;
}

std::optional<DiophantineSolution> solve_linear_system(const Matrix& a, const Vector& b,
                                                       std::size_t cols) {
  if (b.size() != a.size()) throw Error("right-hand side has the wrong length");
  ColumnForm f = column_echelon(a, cols);
  Vector z(cols, 0);
  std::size_t next_pivot = 0;
  for (std::size_t r = 0; r < a.size(); ++r) {
    Integer s = b[r];
    for (std::size_t c = 0; c < next_pivot; ++c) s -= f.a_cols[c][r] * z[c];
    if (next_pivot < f.pivots && f.pivot_row[next_pivot] == r) {
      const Integer& p = f.a_cols[next_pivot][r];
      if (!mpz_divisible_p(s.get_mpz_t(), p.get_mpz_t())) return std::nullopt;
      z[next_pivot] = s / p;
      ++next_pivot;
    } else if (s != 0) {
      return std::nullopt;
    }
  }
  DiophantineSolution sol;
  sol.particular.assign(cols, 0);
  for (std::size_t c = 0; c < f.pivots; ++c)
    for (std::size_t k = 0; k < cols; ++k) sol.particular[k] += z[c] * f.u_cols[c][k];
  for (std::size_t c = f.pivots; c < cols; ++c) sol.kernel.push_back(f.u_cols[c]);
  return sol;
}

std::vector<Integer> smith_invariants(Matrix a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::vector<Integer> diag;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    for (;;) {
      // Move the smallest nonzero entry of the trailing block to (t, t).
      std::size_t bi = rows, bj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (a[i][j] != 0 && (bi == rows || abs(a[i][j]) < abs(a[bi][bj]))) {
            bi = i;
            bj = j;
          }
      if (bi == rows) return diag;
      std::swap(a[t], a[bi]);
      for (auto& row : a) std::swap(row[t], row[bj]);
      const Integer p = a[t][t];
      bool done = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        axpy(a[i], floor_div(a[i][t], p), a[t]);
        if (a[i][t] != 0) done = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        const Integer q = floor_div(a[t][j], p);
        for (std::size_t i = 0; i < rows; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) done = false;
      }
      if (!done) continue;
      // The pivot must divide the whole trailing block.
      bool divides_all = true;
      for (std::size_t i = t + 1; i < rows && divides_all; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (!mpz_divisible_p(a[i][j].get_mpz_t(), p.get_mpz_t())) {
            for (std::size_t k = 0; k < cols; ++k) a[t][k] += a[i][k];
            divides_all = false;
            break;
          }
      if (divides_all) {
        diag.push_back(abs(p));
        break;
      }
    }
  }
  return diag;
}

}  // namespace gkm::lattice
