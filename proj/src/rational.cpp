#include "flagpoly/rational.hpp"

#include <algorithm>
#include <cstddef>

namespace flagpoly {

std::string rat_to_string(const Rat& q) {
  Rat c = q;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rat rat_from_string(const std::string& s) {
  if (s.empty()) throw InvalidInput("empty rational literal");
  try {
    Rat q(s);
    q.canonicalize();
    if (q.get_den() <= 0) throw InvalidInput("bad rational literal: " + s);
    return q;
  } catch (const std::invalid_argument&) {
    throw InvalidInput("bad rational literal: " + s);
  }
}

Int floor_div(const Int& num, const Int& den) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

Int ceil_div(const Int& num, const Int& den) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

Int rat_floor(const Rat& q) { return floor_div(q.get_num(), q.get_den()); }

Int rat_ceil(const Rat& q) { return ceil_div(q.get_num(), q.get_den()); }

Int dot(const IntVec& a, const IntVec& b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rat dot(const RatVec& a, const RatVec& b) {
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rat dot(const IntVec& a, const RatVec& b) {
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += Rat(a[i]) * b[i];
  return s;
}

Int reduce_content(IntVec& v) {
  Int g = 0;
  for (const Int& x : v) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) return g;
  }
  if (g == 0 || g == 1) return g == 0 ? Int(1) : g;
  for (Int& x : v) x /= g;
  return g;
}

IntVec scale_to_integer(const RatVec& v) {
  Int lcm = 1;
  for (const Rat& q : v)
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
  IntVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    out[i] = v[i].get_num() * (lcm / v[i].get_den());
  reduce_content(out);
  return out;
}

IntVec int_vec(const std::vector<long>& v) {
  IntVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i];
  return out;
}

RatVec rat_vec(const IntVec& v) {
  RatVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i];
  return out;
}

bool is_integral(const RatVec& v) {
  return std::all_of(v.begin(), v.end(),
                     [](const Rat& q) { return q.get_den() == 1; });
}

IntVec to_integral(const RatVec& v) {
  if (!is_integral(v)) throw InvalidInput("vector is not integral");
  IntVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i].get_num();
  return out;
}

bool RowBasis::reduce(RatVec& row) const {
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Rat& c = row[pivots_[k]];
    if (c != 0) {
      Rat f = c;  // rows_ are normalized to pivot 1
      for (int j = pivots_[k]; j < cols_; ++j) row[j] -= f * rows_[k][j];
    }
  }
  return std::all_of(row.begin(), row.end(),
                     [](const Rat& q) { return q == 0; });
}

bool RowBasis::add(RatVec row) {
  if (reduce(row)) return false;
  int p = 0;
  while (row[p] == 0) ++p;
  Rat inv = row[p];
  for (int j = p; j < cols_; ++j) row[j] /= inv;
  // keep echelon sorted by pivot
  std::size_t pos = 0;
  while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
  rows_.insert(rows_.begin() + pos, std::move(row));
  pivots_.insert(pivots_.begin() + pos, p);
  return true;
}

bool RowBasis::add(const IntVec& row) { return add(rat_vec(row)); }

bool RowBasis::in_span(RatVec row) const { return reduce(row); }

int rank_of(const RatMat& rows) {
  if (rows.empty()) return 0;
  RowBasis basis(static_cast<int>(rows[0].size()));
  for (const RatVec& r : rows) basis.add(r);
  return basis.rank();
}

int rank_of(const IntMat& rows) {
  if (rows.empty()) return 0;
  RowBasis basis(static_cast<int>(rows[0].size()));
  for (const IntVec& r : rows) basis.add(r);
  return basis.rank();
}

std::vector<int> rref(RatMat& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int sel = -1;
    for (int i = r; i < rows; ++i)
      if (m[i][c] != 0) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    std::swap(m[r], m[sel]);
    Rat inv = m[r][c];
    for (int j = c; j < cols; ++j) m[r][j] /= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rat f = m[i][c];
      for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  return pivots;
}

RatVec solve_linear(RatMat a, RatVec b) {
  const std::size_t n = a.size();
  if (n == 0) return {};
  for (std::size_t i = 0; i < n; ++i) a[i].push_back(b[i]);
  std::vector<int> pivots = rref(a);
  if (pivots.size() != n)
    throw InvalidInput("singular or inconsistent linear system");
  for (int p : pivots)
    if (p >= static_cast<int>(n))
      throw InvalidInput("inconsistent linear system");
  RatVec x(n, Rat(0));
  for (std::size_t i = 0; i < n; ++i) x[pivots[i]] = a[i][n];
  return x;
}

namespace {

// Column-style Hermite reduction: returns U (n x n unimodular, as columns)
// and transforms m in place so that m * U is in column echelon form.
// `echelon` receives m*U; pivot rows per column are recorded.
void column_hermite(IntMat m, IntMat& u_cols, IntMat& echelon,
                    std::vector<int>& pivot_row_of_col) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
  // Represent the working matrix by columns.
  IntMat col(cols, IntVec(rows));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) col[j][i] = m[i][j];
  u_cols.assign(cols, IntVec(cols, Int(0)));
  for (int j = 0; j < cols; ++j) u_cols[j][j] = 1;

  int lead = 0;
  pivot_row_of_col.assign(cols, -1);
  for (int r = 0; r < rows && lead < cols; ++r) {
    // Euclidean reduction among columns lead..cols-1 on row r.
    while (true) {
      int nz = -1, cnt = 0;
      for (int j = lead; j < cols; ++j)
        if (col[j][r] != 0) {
          ++cnt;
          if (nz < 0 || cmp(abs(col[j][r]), abs(col[nz][r])) < 0) nz = j;
        }
      if (cnt == 0) break;
      if (cnt == 1) {
        std::swap(col[lead], col[nz]);
        std::swap(u_cols[lead], u_cols[nz]);
        if (sgn(col[lead][r]) < 0) {
          for (Int& x : col[lead]) x = -x;
          for (Int& x : u_cols[lead]) x = -x;
        }
        pivot_row_of_col[lead] = r;
        ++lead;
        break;
      }
      // reduce all other columns by the minimal one
      for (int j = lead; j < cols; ++j) {
        if (j == nz || col[j][r] == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), col[j][r].get_mpz_t(),
                   col[nz][r].get_mpz_t());
        if (q != 0) {
          for (int i = 0; i < rows; ++i) col[j][i] -= q * col[nz][i];
          for (int i = 0; i < cols; ++i) u_cols[j][i] -= q * u_cols[nz][i];
        }
      }
    }
  }
  echelon = std::move(col);
}

}  // namespace

IntMat integer_kernel(const IntMat& m) {
  if (m.empty()) return {};
  const int cols = static_cast<int>(m[0].size());
  IntMat u_cols, echelon;
  std::vector<int> pivot_row;
  column_hermite(m, u_cols, echelon, pivot_row);
  IntMat kernel;
  for (int j = 0; j < cols; ++j) {
    bool zero = std::all_of(echelon[j].begin(), echelon[j].end(),
                            [](const Int& x) { return x == 0; });
    if (zero) kernel.push_back(u_cols[j]);
  }
  return kernel;
}

bool integer_solve(const IntMat& m, const IntVec& b, IntVec& solution) {
  if (m.empty()) {
    solution.clear();
    return std::all_of(b.begin(), b.end(),
                       [](const Int& x) { return x == 0; });
  }
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  IntMat u_cols, echelon;
  std::vector<int> pivot_row;
  column_hermite(m, u_cols, echelon, pivot_row);
  // Solve (m*U) y = b by walking the echelon columns, then x = U y.
  IntVec residual = b;
  IntVec y(cols, Int(0));
  for (int j = 0; j < cols; ++j) {
    if (pivot_row[j] < 0) continue;
    int r = pivot_row[j];
    if (residual[r] == 0) continue;
    Int q, rem;
    mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), residual[r].get_mpz_t(),
                echelon[j][r].get_mpz_t());
    if (rem != 0) return false;
    y[j] = q;
    for (int i = 0; i < rows; ++i) residual[i] -= q * echelon[j][i];
  }
  if (!std::all_of(residual.begin(), residual.end(),
                   [](const Int& x) { return x == 0; }))
    return false;
  solution.assign(cols, Int(0));
  for (int j = 0; j < cols; ++j) {
    if (y[j] == 0) continue;
    for (int i = 0; i < cols; ++i) solution[i] += y[j] * u_cols[j][i];
  }
  return true;
}

}  // namespace flagpoly
