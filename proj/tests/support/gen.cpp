#include "gen.hpp"

#include "relspan/alg/linalg.hpp"

#include <cstdlib>
#include <string>

namespace relspan::testing {

std::uint64_t seed_from_env() {
  if (const char* s = std::getenv("RELSPAN_SEED"); s && *s) return std::stoull(s);
  return kDefaultSeed;
}

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

Scalar random_scalar(Rng& rng, Field f, long range) {
  const long v = std::uniform_int_distribution<long>(-range, range)(rng);
  return Scalar::from_int(f, v);
}

Matrix random_matrix(Rng& rng, Field f, std::size_t rows, std::size_t cols, long range, int zero_percent) {
  std::vector<Matrix::Entry> e;
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      if (static_cast<int>(uniform(rng, 0, 99)) < zero_percent) continue;
      auto v = random_scalar(rng, f, range);
      if (!v.is_zero()) e.push_back({r, c, std::move(v)});
    }
  return Matrix::from_entries(f, rows, cols, std::move(e));
}

Matrix random_invertible(Rng& rng, Field f, std::size_t n) {
  for (;;) {
    auto m = random_matrix(rng, f, n, n, 2, 40);
    if (alg::rank(m) == n) return m;
  }
}

FinFun random_fun(Rng& rng, std::size_t dom, std::size_t cod) {
  std::vector<std::size_t> t(dom);
  for (auto& v : t) v = uniform(rng, 0, cod - 1);
  return FinFun({dom}, {cod}, std::move(t));
}

Coalgebra Pointed::coalgebra(Field f) const {
  const std::size_t n = dim();
  std::vector<Matrix::Entry> d;
  std::vector<Matrix::Entry> e;
  const Scalar one = Scalar::one(f);
  for (std::size_t g = 0; g < grouplikes; ++g) {
    d.push_back({g * n + g, g, one});
    e.push_back({0, g, one});
  }
  for (std::size_t p = 0; p < prims.size(); ++p) {
    const std::size_t x = grouplikes + p;
    const auto [a, b] = prims[p];
    if (x * n + a == b * n + x) {
      d.push_back({x * n + a, x, one + one});
    } else {
      d.push_back({x * n + a, x, one});
      d.push_back({b * n + x, x, one});
    }
  }
  return Coalgebra(Matrix::from_entries(f, n * n, n, std::move(d)), Matrix::from_entries(f, 1, n, std::move(e)));
}

Pointed random_pointed(Rng& rng, std::size_t max_grouplikes, std::size_t max_prims, bool cocommutative) {
  Pointed p;
  p.grouplikes = uniform(rng, 1, max_grouplikes);
  const std::size_t np = uniform(rng, 0, max_prims);
  for (std::size_t k = 0; k < np; ++k) {
    const std::size_t a = uniform(rng, 0, p.grouplikes - 1);
    const std::size_t b = cocommutative ? a : uniform(rng, 0, p.grouplikes - 1);
    p.prims.push_back({a, b});
  }
  return p;
}

CoalgMap random_pointed_map(Rng& rng, const Pointed& a, const Pointed& b, Field f, const std::vector<std::size_t>& phi) {
  std::vector<Matrix::Entry> e;
  for (std::size_t g = 0; g < a.grouplikes; ++g) e.push_back({phi[g], g, Scalar::one(f)});
  for (std::size_t p = 0; p < a.prims.size(); ++p) {
    const std::size_t col = a.grouplikes + p;
    const std::size_t ta = phi[a.prims[p].first];
    const std::size_t tb = phi[a.prims[p].second];
    if (ta != tb) {
      const auto lam = random_scalar(rng, f, 2);
      if (!lam.is_zero()) {
        e.push_back({tb, col, lam});
        e.push_back({ta, col, -lam});
      }
    }
    for (std::size_t q = 0; q < b.prims.size(); ++q)
      if (b.prims[q] == std::pair{ta, tb}) {
        auto mu = random_scalar(rng, f, 2);
        if (!mu.is_zero()) e.push_back({b.grouplikes + q, col, std::move(mu)});
      }
  }
  return CoalgMap(a.coalgebra(f), b.coalgebra(f), Matrix::from_entries(f, b.dim(), a.dim(), std::move(e)));
}

CoalgMap random_pointed_map(Rng& rng, const Pointed& a, const Pointed& b, Field f) {
  std::vector<std::size_t> phi(a.grouplikes);
  for (auto& v : phi) v = uniform(rng, 0, b.grouplikes - 1);
  return random_pointed_map(rng, a, b, f, phi);
}

Coalgebra direct_sum(const Coalgebra& a, const Coalgebra& b) {
  const Field f = a.field();
  const std::size_t na = a.dim();
  const std::size_t nb = b.dim();
  const std::size_t n = na + nb;
  std::vector<Matrix::Entry> d;
  std::vector<Matrix::Entry> e;
  for (const auto& x : a.delta().entries()) d.push_back({(x.row / na) * n + x.row % na, x.col, x.value});
  for (const auto& x : b.delta().entries())
    d.push_back({(na + x.row / nb) * n + na + x.row % nb, na + x.col, x.value});
  for (const auto& x : a.epsilon().entries()) e.push_back({0, x.col, x.value});
  for (const auto& x : b.epsilon().entries()) e.push_back({0, na + x.col, x.value});
  return Coalgebra(Matrix::from_entries(f, n * n, n, std::move(d)), Matrix::from_entries(f, 1, n, std::move(e)));
}

Coalgebra matrix_coalgebra(Field f, std::size_t n) {
  const std::size_t dim = n * n;
  std::vector<Matrix::Entry> d;
  std::vector<Matrix::Entry> e;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t col = i * n + j;
      for (std::size_t k = 0; k < n; ++k) d.push_back({(i * n + k) * dim + k * n + j, col, Scalar::one(f)});
      if (i == j) e.push_back({0, col, Scalar::one(f)});
    }
  return Coalgebra(Matrix::from_entries(f, dim * dim, dim, std::move(d)), Matrix::from_entries(f, 1, dim, std::move(e)));
}

Coalgebra change_basis(const Coalgebra& c, const Matrix& p) {
  const auto pinv = alg::inverse(p);
  return Coalgebra(alg::kron(*pinv, *pinv) * c.delta() * p, c.epsilon() * p);
}

Coalgebra path_coalgebra(Field f) {
  return Coalgebra(Matrix::from_ints(f, 9, 3, {1, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0}),
                   Matrix::from_ints(f, 1, 3, {1, 1, 0}));
}

}  // namespace relspan::testing
