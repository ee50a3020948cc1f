#pragma once

#include "relspan/coalg/coalgebra.hpp"
#include "relspan/finset/finset.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace relspan::testing {

using alg::Field;
using alg::Matrix;
using alg::Scalar;
using coalg::CoalgMap;
using coalg::Coalgebra;
using finset::FinFun;
using Rng = std::mt19937_64;

inline constexpr std::uint64_t kDefaultSeed = 20240611;

/// RELSPAN_SEED when set, else the fixed default.
std::uint64_t seed_from_env();

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi);  // inclusive
Scalar random_scalar(Rng& rng, Field f, long range = 3);
Matrix random_matrix(Rng& rng, Field f, std::size_t rows, std::size_t cols, long range = 3, int zero_percent = 30);
Matrix random_invertible(Rng& rng, Field f, std::size_t n);
FinFun random_fun(Rng& rng, std::size_t dom, std::size_t cod);

/// Pointed coalgebra: group-likes g_0..g_{k-1} followed by skew primitives
/// x with delta(x) = x (x) g_a + g_b (x) x and eps(x) = 0.
struct Pointed {
  std::size_t grouplikes = 0;
  std::vector<std::pair<std::size_t, std::size_t>> prims;  // (a, b)

  std::size_t dim() const { return grouplikes + prims.size(); }
  Coalgebra coalgebra(Field f) const;
};

Pointed random_pointed(Rng& rng, std::size_t max_grouplikes, std::size_t max_prims, bool cocommutative);

/// Coalgebra map sending g_a to g_phi(a) and each primitive of type (a, b)
/// to a random combination of (g_phi(b) - g_phi(a)) and the primitives of
/// type (phi(a), phi(b)) in the target.
CoalgMap random_pointed_map(Rng& rng, const Pointed& a, const Pointed& b, Field f, const std::vector<std::size_t>& phi);
CoalgMap random_pointed_map(Rng& rng, const Pointed& a, const Pointed& b, Field f);

Coalgebra direct_sum(const Coalgebra& a, const Coalgebra& b);
/// Dual of the n x n matrix algebra: delta(e_ij) = sum_k e_ik (x) e_kj.
Coalgebra matrix_coalgebra(Field f, std::size_t n);
/// The coalgebra structure transported along the basis change p (invertible).
Coalgebra change_basis(const Coalgebra& c, const Matrix& p);
/// Basis e0, e1, x with delta(x) = e0 (x) x + x (x) e1; not cocommutative.
Coalgebra path_coalgebra(Field f);

}  // namespace relspan::testing
