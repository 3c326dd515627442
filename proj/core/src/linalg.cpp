#include "nulldecomp/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace nulldecomp {

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix adjacency_matrix(const Graph& g) {
  RationalMatrix a(g.order(), g.order());
  for (const Edge& e : g.edges()) {
    a(e.u, e.v) = 1;
    a(e.v, e.u) = 1;
  }
  return a;
}

namespace {

using IntRow = std::vector<BigInt>;

// Clear denominators row by row: the row space (and hence the RREF) is unchanged.
std::vector<IntRow> integer_rows(const RationalMatrix& m) {
  std::vector<IntRow> out(m.rows(), IntRow(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    BigInt lcm = 1;
    for (const Rational& q : m.row(r)) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Rational& q = m(r, c);
      out[r][c] = q.get_num() * (lcm / q.get_den());
    }
  }
  return out;
}

}  // namespace

EchelonForm rref(const RationalMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<IntRow> a = integer_rows(m);

  // Fraction-free forward elimination. After pivot k every entry below the
  // pivot rows is a (k+1)-minor of the input, so the division by the previous
  // pivot is exact.
  EchelonForm out;
  BigInt previous = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(a[p][c]) == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    const BigInt& pivot = a[r][c];
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        BigInt t = pivot * a[i][j] - a[i][c] * a[r][j];
        if (!mpz_divisible_p(t.get_mpz_t(), previous.get_mpz_t())) {
          throw std::logic_error("rref: inexact Bareiss division");
        }
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), previous.get_mpz_t());
      }
      a[i][c] = 0;
    }
    previous = pivot;
    out.pivot_columns.push_back(c);
    ++r;
  }
  out.rank = r;

  // Back-substitution in Q: normalise each pivot row, clear its column above.
  RationalMatrix& red = out.reduced;
  red = RationalMatrix(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) red(i, j) = a[i][j];
  }
  for (std::size_t k = out.rank; k-- > 0;) {
    const std::size_t pc = out.pivot_columns[k];
    const Rational inv = 1 / red(k, pc);
    for (std::size_t j = pc; j < cols; ++j) {
      red(k, j) *= inv;
      red(k, j).canonicalize();
    }
    for (std::size_t i = 0; i < k; ++i) {
      if (sgn(red(i, pc)) == 0) continue;
      const Rational factor = red(i, pc);
      for (std::size_t j = pc; j < cols; ++j) {
        red(i, j) -= factor * red(k, j);
        red(i, j).canonicalize();
      }
    }
  }
  return out;
}

RationalVector multiply(const RationalMatrix& a, std::span<const Rational> x) {
  if (x.size() != a.cols()) throw std::invalid_argument("multiply: dimension mismatch");
  RationalVector y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Rational acc = 0;
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (sgn(a(i, j)) != 0 && sgn(x[j]) != 0) acc += a(i, j) * x[j];
    }
    y[i] = acc;
  }
  return y;
}

bool is_kernel_vector(const RationalMatrix& a, std::span<const Rational> x) {
  for (const Rational& yi : multiply(a, x)) {
    if (sgn(yi) != 0) return false;
  }
  return true;
}

NullBasis kernel_basis(const RationalMatrix& m) {
  const EchelonForm ef = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : ef.pivot_columns) is_pivot[c] = true;

  NullBasis basis;
  basis.dimension = n;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    RationalVector x(n);
    x[free] = 1;
    for (std::size_t k = 0; k < ef.rank; ++k) x[ef.pivot_columns[k]] = -ef.reduced(k, free);
    basis.vectors.push_back(std::move(x));
  }
  return basis;
}

std::size_t nullity(const Graph& g) { return g.order() - rref(adjacency_matrix(g)).rank; }

NullBasis null_basis(const Graph& g) {
  const RationalMatrix a = adjacency_matrix(g);
  NullBasis basis = kernel_basis(a);
  for (const RationalVector& x : basis.vectors) {
    if (!is_kernel_vector(a, x)) throw std::logic_error("null_basis: vector fails A*x = 0");
  }
  return basis;
}

VertexSet support_of(const NullBasis& basis) {
  VertexSet out;
  for (std::size_t v = 0; v < basis.dimension; ++v) {
    for (const RationalVector& x : basis.vectors) {
      if (sgn(x[v]) != 0) {
        out.push_back(static_cast<VertexId>(v));
        break;
      }
    }
  }
  return out;
}

VertexSet support(const Graph& g) { return support_of(null_basis(g)); }

}  // namespace nulldecomp
