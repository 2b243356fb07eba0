#include "linalg.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "errors.hpp"

namespace fano_toric {

Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw InternalError("integer overflow in addition");
  return r;
}

Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw InternalError("integer overflow in subtraction");
  return r;
}

Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw InternalError("integer overflow in multiplication");
  return r;
}

Int to_int(const mpz_class& z) {
  if (!z.fits_slong_p()) throw InternalError("value " + z.get_str() + " does not fit in 64 bits");
  return static_cast<Int>(z.get_si());
}

Int dot(const IntVector& a, const IntVector& b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s = checked_add(s, checked_mul(a[i], b[i]));
  return s;
}

IntVector add(const IntVector& a, const IntVector& b) {
  IntVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_add(a[i], b[i]);
  return r;
}

IntVector subtract(const IntVector& a, const IntVector& b) {
  IntVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_sub(a[i], b[i]);
  return r;
}

IntVector scale(const IntVector& a, Int s) {
  IntVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_mul(a[i], s);
  return r;
}

bool is_zero(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](Int x) { return x == 0; });
}

Int gcd_of(const IntVector& v) {
  Int g = 0;
  for (Int x : v) g = std::gcd(g, x);
  return g;
}

IntVector make_primitive(IntVector v) {
  Int g = gcd_of(v);
  if (g > 1)
    for (auto& x : v) x /= g;
  return v;
}

namespace {

std::vector<std::vector<mpq_class>> to_rational(const IntMatrix& m) {
  std::vector<std::vector<mpq_class>> r(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    r[i].reserve(m[i].size());
    for (Int x : m[i]) r[i].emplace_back(static_cast<long>(x));
  }
  return r;
}

Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

std::size_t rank(const IntMatrix& rows) { return independent_rows(rows).size(); }

std::vector<std::size_t> independent_rows(const IntMatrix& rows) {
  std::vector<std::size_t> chosen;
  if (rows.empty()) return chosen;
  const std::size_t n = rows.front().size();
  std::vector<std::vector<mpq_class>> echelon;
  std::vector<std::size_t> pivots;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    std::vector<mpq_class> v;
    v.reserve(n);
    for (Int x : rows[r]) v.emplace_back(static_cast<long>(x));
    for (std::size_t e = 0; e < echelon.size(); ++e) {
      const auto p = pivots[e];
      if (v[p] == 0) continue;
      mpq_class f = v[p] / echelon[e][p];
      for (std::size_t c = 0; c < n; ++c) v[c] -= f * echelon[e][c];
    }
    auto it = std::find_if(v.begin(), v.end(), [](const mpq_class& q) { return q != 0; });
    if (it == v.end()) continue;
    pivots.push_back(static_cast<std::size_t>(it - v.begin()));
    echelon.push_back(std::move(v));
    chosen.push_back(r);
    if (chosen.size() == n) break;
  }
  return chosen;
}

mpz_class determinant(const IntMatrix& square) {
  const std::size_t n = square.size();
  if (n == 0) return 1;
  // Bareiss fraction-free elimination.
  std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = static_cast<long>(square[i][j]);
  mpz_class sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = t;
      }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

IntMatrix hermite_row_basis(IntMatrix rows) {
  if (rows.empty()) return rows;
  const std::size_t ncols = rows.front().size();
  std::size_t r = 0;
  for (std::size_t col = 0; col < ncols && r < rows.size(); ++col) {
    // Euclid on column `col` among rows r..end until a single nonzero remains.
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t i = r; i < rows.size(); ++i)
        if (rows[i][col] != 0 && (best == rows.size() || std::abs(rows[i][col]) < std::abs(rows[best][col])))
          best = i;
      if (best == rows.size()) break;
      std::swap(rows[r], rows[best]);
      bool reduced_all = true;
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (rows[i][col] == 0) continue;
        Int q = rows[i][col] / rows[r][col];
        for (std::size_t c = 0; c < ncols; ++c) rows[i][c] = checked_sub(rows[i][c], checked_mul(q, rows[r][c]));
        if (rows[i][col] != 0) reduced_all = false;
      }
      if (reduced_all) break;
    }
    if (rows[r][col] == 0) continue;
    if (rows[r][col] < 0)
      for (auto& x : rows[r]) x = -x;
    for (std::size_t i = 0; i < r; ++i) {
      Int q = floor_div(rows[i][col], rows[r][col]);
      if (q != 0)
        for (std::size_t c = 0; c < ncols; ++c) rows[i][c] = checked_sub(rows[i][c], checked_mul(q, rows[r][c]));
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

namespace {

std::size_t pivot_of(const IntVector& row) {
  for (std::size_t c = 0; c < row.size(); ++c)
    if (row[c] != 0) return c;
  return row.size();
}

}  // namespace

std::optional<IntVector> lattice_coordinates(const IntMatrix& basis, IntVector v) {
  IntVector coeffs(basis.size(), 0);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const auto p = pivot_of(basis[i]);
    if (v[p] % basis[i][p] != 0) return std::nullopt;
    Int q = v[p] / basis[i][p];
    coeffs[i] = q;
    if (q != 0)
      for (std::size_t c = 0; c < v.size(); ++c) v[c] = checked_sub(v[c], checked_mul(q, basis[i][c]));
  }
  if (!is_zero(v)) return std::nullopt;
  return coeffs;
}

IntVector reduce_modulo(const IntMatrix& basis, IntVector v) {
  for (const auto& row : basis) {
    const auto p = pivot_of(row);
    Int q = floor_div(v[p], row[p]);
    if (q != 0)
      for (std::size_t c = 0; c < v.size(); ++c) v[c] = checked_sub(v[c], checked_mul(q, row[c]));
  }
  return v;
}

std::optional<RationalMatrix> solve_square(const IntMatrix& x, const IntMatrix& y) {
  const std::size_t n = x.size();
  const std::size_t m = y.empty() ? 0 : y.front().size();
  auto a = to_rational(x);
  auto b = to_rational(y);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && a[p][col] == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(a[p], a[col]);
    std::swap(b[p], b[col]);
    mpq_class inv = 1 / a[col][col];
    for (auto& e : a[col]) e *= inv;
    for (auto& e : b[col]) e *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a[i][col] == 0) continue;
      mpq_class f = a[i][col];
      for (std::size_t c = 0; c < n; ++c) a[i][c] -= f * a[col][c];
      for (std::size_t c = 0; c < m; ++c) b[i][c] -= f * b[col][c];
    }
  }
  return b;
}

IntMatrix kernel_basis(const IntMatrix& rows, std::size_t ncols) {
  auto a = to_rational(rows);
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t col = 0; col < ncols && r < a.size(); ++col) {
    std::size_t p = r;
    while (p < a.size() && a[p][col] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    mpq_class inv = 1 / a[r][col];
    for (auto& e : a[r]) e *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][col] == 0) continue;
      mpq_class f = a[i][col];
      for (std::size_t c = 0; c < ncols; ++c) a[i][c] -= f * a[r][c];
    }
    pivot_cols.push_back(col);
    ++r;
  }
  IntMatrix out;
  std::size_t next_pivot = 0;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (next_pivot < pivot_cols.size() && pivot_cols[next_pivot] == free) {
      ++next_pivot;
      continue;
    }
    std::vector<mpq_class> x(ncols);
    x[free] = 1;
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) x[pivot_cols[i]] = -a[i][free];
    mpz_class l = 1;
    for (const auto& q : x) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    IntVector v;
    for (const auto& q : x) v.push_back(to_int(mpz_class(q * l)));
    out.push_back(make_primitive(std::move(v)));
  }
  return out;
}

std::string format_vector(const IntVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

}  // namespace fano_toric
