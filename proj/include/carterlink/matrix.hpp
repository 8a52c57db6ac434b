#pragma once

#include "carterlink/rational.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace carterlink {

// Dense square matrix over exact rationals. Small sizes only (rank <= 11),
// so everything is O(n^3) without blocking.
class RatMatrix {
 public:
  RatMatrix() = default;
  explicit RatMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * n) {}

  static RatMatrix identity(int n);
  static RatMatrix from_int_rows(const std::vector<std::vector<int>>& rows);

  int n() const { return n_; }
  Rat& at(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
  const Rat& at(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }

  bool operator==(const RatMatrix& o) const { return n_ == o.n_ && a_ == o.a_; }

  RatMatrix mul(const RatMatrix& o) const;
  std::vector<Rat> mul(const std::vector<Rat>& v) const;

  // Fraction-free (Bareiss) elimination on the integer-cleared matrix;
  // exact determinant, and the inverse by back substitution.
  Rat determinant() const;
  std::optional<RatMatrix> inverse() const;

  bool symmetric() const;
  // all leading principal minors positive
  bool positive_definite() const;

  // <M v, v>
  Rat qform(const std::vector<Rat>& v) const;
  Rat qform(const std::vector<int>& v) const;

  // Least common denominator of all entries: M = (1/k) * integer matrix.
  Int common_denominator() const;

 private:
  int n_ = 0;
  std::vector<Rat> a_;
};

// Solve M x = b exactly; empty optional when singular.
std::optional<std::vector<Rat>> solve(const RatMatrix& m, const std::vector<Rat>& b);

} // namespace carterlink
