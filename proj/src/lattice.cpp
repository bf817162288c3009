#include "edgering/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace edgering {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in lattice arithmetic");
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("integer overflow in lattice arithmetic");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in lattice arithmetic");
  return r;
}

IntVec operator+(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_add(a[i], b[i]);
  return r;
}

IntVec operator-(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_sub(a[i], b[i]);
  return r;
}

IntVec operator*(std::int64_t k, const IntVec& a) {
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_mul(k, a[i]);
  return r;
}

std::int64_t dot(std::span<const std::int64_t> a, std::span<const std::int64_t> b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s = checked_add(s, checked_mul(a[i], b[i]));
  return s;
}

namespace {

// row -= q * pivot_row
void axpy(IntVec& row, std::int64_t q, const IntVec& pivot_row) {
  if (q == 0) return;
  for (std::size_t c = 0; c < row.size(); ++c) row[c] = checked_sub(row[c], checked_mul(q, pivot_row[c]));
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// Brings rows into Hermite form on the leading `pivot_cols` columns (the
// remaining columns ride along). Returns the number of pivot rows; rows past
// that are zero on the leading columns.
std::size_t echelonize(std::vector<IntVec>& rows, int pivot_cols) {
  std::size_t r = 0;
  for (int col = 0; col < pivot_cols && r < rows.size(); ++col) {
    // Euclid on column `col` over rows r.., always dividing by the smallest entry.
    for (;;) {
      std::size_t best = rows.size();
      for (std::size_t i = r; i < rows.size(); ++i) {
        if (rows[i][col] == 0) continue;
        if (best == rows.size() || std::abs(rows[i][col]) < std::abs(rows[best][col])) best = i;
      }
      if (best == rows.size()) break;
      std::swap(rows[r], rows[best]);
      bool others = false;
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (rows[i][col] == 0) continue;
        axpy(rows[i], rows[i][col] / rows[r][col], rows[r]);
        others = others || rows[i][col] != 0;
      }
      if (!others) break;
    }
    if (rows[r][col] == 0) continue;
    if (rows[r][col] < 0) rows[r] = -1 * rows[r];
    for (std::size_t i = 0; i < r; ++i) axpy(rows[i], floor_div(rows[i][col], rows[r][col]), rows[r]);
    ++r;
  }
  return r;
}

}  // namespace

IntegerLattice IntegerLattice::span(int n, std::span<const IntVec> vectors) {
  std::vector<IntVec> rows;
  rows.reserve(vectors.size());
  for (const IntVec& v : vectors) {
    if (static_cast<int>(v.size()) != n) throw std::invalid_argument("vector length mismatch");
    if (std::any_of(v.begin(), v.end(), [](std::int64_t x) { return x != 0; })) rows.push_back(v);
  }
  std::size_t r = echelonize(rows, n);
  rows.resize(r);
  IntegerLattice out(n);
  out.basis_ = std::move(rows);
  return out;
}

IntegerLattice IntegerLattice::standard(int n) {
  std::vector<IntVec> rows(n, IntVec(n, 0));
  for (int i = 0; i < n; ++i) rows[i][i] = 1;
  return span(n, rows);
}

std::vector<int> IntegerLattice::pivots() const {
  std::vector<int> out;
  for (const IntVec& row : basis_) {
    out.push_back(static_cast<int>(std::find_if(row.begin(), row.end(), [](std::int64_t x) { return x != 0; }) - row.begin()));
  }
  return out;
}

bool IntegerLattice::contains(const IntVec& v) const {
  if (static_cast<int>(v.size()) != n_) return false;
  IntVec rest = v;
  std::vector<int> piv = pivots();
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    const std::int64_t p = basis_[k][piv[k]];
    if (rest[piv[k]] % p != 0) return false;
    axpy(rest, rest[piv[k]] / p, basis_[k]);
  }
  return std::all_of(rest.begin(), rest.end(), [](std::int64_t x) { return x == 0; });
}

std::int64_t IntegerLattice::determinant() const {
  if (rank() != n_) return 0;
  std::int64_t det = 1;
  for (int k = 0; k < n_; ++k) det = checked_mul(det, basis_[k][k]);
  return det;
}

IntegerLattice IntegerLattice::operator+(const IntegerLattice& o) const {
  if (n_ != o.n_) throw std::invalid_argument("lattice dimension mismatch");
  std::vector<IntVec> all = basis_;
  all.insert(all.end(), o.basis_.begin(), o.basis_.end());
  return span(n_, all);
}

std::string IntegerLattice::to_string() const {
  std::ostringstream out;
  out << "[";
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    out << (k ? "; " : "");
    for (std::size_t c = 0; c < basis_[k].size(); ++c) out << (c ? " " : "") << basis_[k][c];
  }
  out << "]";
  return out.str();
}

IntegerLattice hnf(int n, std::span<const IntVec> vectors) { return IntegerLattice::span(n, vectors); }

IntegerLattice left_kernel(std::span<const IntVec> rows, int columns) {
  const int m = static_cast<int>(rows.size());
  // Track the unimodular transform in an identity block appended to each row.
  std::vector<IntVec> aug;
  aug.reserve(rows.size());
  for (int i = 0; i < m; ++i) {
    if (static_cast<int>(rows[i].size()) != columns) throw std::invalid_argument("row length mismatch");
    IntVec row = rows[i];
    row.resize(columns + m, 0);
    row[columns + i] = 1;
    aug.push_back(std::move(row));
  }
  const std::size_t r = echelonize(aug, columns);
  std::vector<IntVec> kernel;
  for (std::size_t i = r; i < aug.size(); ++i) kernel.emplace_back(aug[i].begin() + columns, aug[i].end());
  return IntegerLattice::span(m, kernel);
}

IntegerLattice integer_kernel(std::span<const std::int64_t> form) {
  std::vector<IntVec> rows;
  rows.reserve(form.size());
  for (std::int64_t c : form) rows.push_back({c});
  return left_kernel(rows, 1);
}

IntegerLattice intersect(const IntegerLattice& a, const IntegerLattice& b) {
  if (a.dimension() != b.dimension()) throw std::invalid_argument("lattice dimension mismatch");
  const int n = a.dimension();
  // (y, z) with y*A + z*B = 0 gives y*A in both lattices.
  std::vector<IntVec> stacked = a.basis();
  stacked.insert(stacked.end(), b.basis().begin(), b.basis().end());
  const IntegerLattice kernel = left_kernel(stacked, n);
  std::vector<IntVec> points;
  for (const IntVec& yz : kernel.basis()) {
    IntVec x(n, 0);
    for (int k = 0; k < a.rank(); ++k)
      if (yz[k] != 0) x = x + yz[k] * a.basis()[k];
    points.push_back(std::move(x));
  }
  return IntegerLattice::span(n, points);
}

IntegerLattice even_sum_lattice(int n) {
  std::vector<IntVec> gens;
  if (n == 0) return IntegerLattice(0);
  IntVec twice(n, 0);
  twice[0] = 2;
  gens.push_back(twice);
  for (int j = 1; j < n; ++j) {
    IntVec v(n, 0);
    v[0] = 1;
    v[j] = 1;
    gens.push_back(std::move(v));
  }
  return IntegerLattice::span(n, gens);
}

}  // namespace edgering
