#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "nulldecomp/graph.hpp"

namespace nulldecomp {

/// Exact rational; GMP keeps it reduced with a positive denominator.
using Rational = mpq_class;
using BigInt = mpz_class;
using RationalVector = std::vector<Rational>;

/// Dense row-major matrix over Q.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::span<const Rational> row(std::size_t r) const { return {entries_.data() + r * cols_, cols_}; }

  static RationalMatrix identity(std::size_t n);

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

struct EchelonForm {
  RationalMatrix reduced;
  std::size_t rank = 0;
  /// Pivot column of each of the first `rank` rows.
  std::vector<std::size_t> pivot_columns;
};

/// Basis of the kernel of A(G), one unit free coordinate per vector.
struct NullBasis {
  std::size_t dimension = 0;  // ambient n
  std::vector<RationalVector> vectors;

  std::size_t nullity() const noexcept { return vectors.size(); }
};

RationalMatrix adjacency_matrix(const Graph& g);

/// Reduced row-echelon form over Q.
///
/// Rows are scaled to integers and eliminated fraction-free (Bareiss), taking
/// as pivot the first nonzero entry scanning columns left to right and rows
/// top to bottom. Back-substitution and normalisation then happen in Q, so
/// the result is the unique RREF of `m`.
EchelonForm rref(const RationalMatrix& m);

/// A*x computed exactly.
RationalVector multiply(const RationalMatrix& a, std::span<const Rational> x);

bool is_kernel_vector(const RationalMatrix& a, std::span<const Rational> x);

/// Canonical kernel basis of an arbitrary matrix read off its RREF.
NullBasis kernel_basis(const RationalMatrix& m);

std::size_t nullity(const Graph& g);

/// Every vector is checked against A(G) before returning.
NullBasis null_basis(const Graph& g);

/// Vertices with a nonzero coordinate in some basis vector.
VertexSet support_of(const NullBasis& basis);

/// Supp(G): support of the null space of A(G).
VertexSet support(const Graph& g);

}  // namespace nulldecomp
