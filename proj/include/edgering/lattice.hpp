#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace edgering {

using IntVec = std::vector<std::int64_t>;

// Overflow-checked arithmetic; each throws std::overflow_error.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_sub(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

IntVec operator+(const IntVec& a, const IntVec& b);
IntVec operator-(const IntVec& a, const IntVec& b);
IntVec operator*(std::int64_t k, const IntVec& a);
std::int64_t dot(std::span<const std::int64_t> a, std::span<const std::int64_t> b);

/// A sublattice of Z^n stored by its row Hermite normal form: rows are in
/// echelon form, each pivot is positive, and entries above a pivot lie in
/// [0, pivot). The form is unique per lattice, so equality is syntactic.
class IntegerLattice {
 public:
  /// The zero lattice in Z^n.
  explicit IntegerLattice(int n = 0) : n_(n) {}

  /// HNF of the integer span of `vectors`, each of length n.
  /// Throws std::invalid_argument on a length mismatch.
  static IntegerLattice span(int n, std::span<const IntVec> vectors);
  static IntegerLattice standard(int n);

  int dimension() const { return n_; }
  int rank() const { return static_cast<int>(basis_.size()); }
  const std::vector<IntVec>& basis() const { return basis_; }
  /// Pivot column of each basis row.
  std::vector<int> pivots() const;

  bool contains(const IntVec& v) const;
  /// Index of the lattice in Z^n (product of pivots) when it has full rank; 0 otherwise.
  std::int64_t determinant() const;

  /// Lattice sum.
  IntegerLattice operator+(const IntegerLattice& o) const;
  bool operator==(const IntegerLattice&) const = default;

  std::string to_string() const;

 private:
  int n_;
  std::vector<IntVec> basis_;
};

/// Alias of IntegerLattice::span.
IntegerLattice hnf(int n, std::span<const IntVec> vectors);

/// All integer row vectors y with y * A = 0, where A has the given rows,
/// as a lattice in Z^rows.size().
IntegerLattice left_kernel(std::span<const IntVec> rows, int columns);

/// {x in Z^n : form . x = 0}.
IntegerLattice integer_kernel(std::span<const std::int64_t> form);

/// Intersection of two lattices in the same Z^n.
IntegerLattice intersect(const IntegerLattice& a, const IntegerLattice& b);

/// {x in Z^n : x_1 + ... + x_n even}.
IntegerLattice even_sum_lattice(int n);

}  // namespace edgering
