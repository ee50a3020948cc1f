#pragma once

#include "relspan/alg/matrix.hpp"

#include <optional>
#include <vector>

namespace relspan::alg {

/// Reduced row echelon form together with the pivot column of each row.
struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

Echelon rref(const Matrix& a);
std::size_t rank(const Matrix& a);

/// X with a*X = b, free variables set to zero; nullopt iff inconsistent.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

/// Exact solve against an injective k whose last-nonzero rows hold an
/// identity block (true of every kernel_basis output and of its Kronecker
/// products with identities). Reads the solution off those rows and
/// verifies it; falls back to solve() when k lacks that shape.
std::optional<Matrix> solve_injective(const Matrix& k, const Matrix& b);

/// Basis of ker(a) as columns. Column t has a 1 in the row of the t-th free
/// variable of rref(a), zero in every other free row; the result is the
/// unique such basis of the kernel.
Matrix kernel_basis(const Matrix& a);

/// Kronecker product with row-major pair indexing: (i, j) -> i * dim2 + j.
Matrix kron(const Matrix& a, const Matrix& b);

/// One tensor factor of a map between tensor products: either an explicit
/// matrix or the identity on a space of the given dimension.
struct TensorFactor {
  std::size_t identity_dim = 0;
  const Matrix* map = nullptr;

  static TensorFactor identity(std::size_t dim) { return {dim, nullptr}; }
  static TensorFactor of(const Matrix& m) { return {0, &m}; }
  std::size_t in_dim() const { return map ? map->cols() : identity_dim; }
  std::size_t out_dim() const { return map ? map->rows() : identity_dim; }
};

/// (f_1 (x) ... (x) f_k) * x without materializing the Kronecker product.
Matrix tensor_apply(const std::vector<TensorFactor>& factors, const Matrix& x);

/// Symmetry V (x) W -> W (x) V for dim V = m, dim W = n.
LinMap swap_map(Field field, std::size_t m, std::size_t n);

bool column_span_equal(const Matrix& a, const Matrix& b);
bool is_surjective(const Matrix& a);
bool is_injective(const Matrix& a);
std::optional<Matrix> inverse(const Matrix& a);

}  // namespace relspan::alg
