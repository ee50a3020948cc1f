#include "relspan/alg/linalg.hpp"

#include "relspan/error.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>
#include <utility>

namespace relspan::alg {

namespace {

using SparseRow = std::vector<std::pair<std::size_t, Scalar>>;

// a - c * b for rows sorted by column.
SparseRow subtract_multiple(const SparseRow& a, const Scalar& c, const SparseRow& b) {
  SparseRow out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, -(c * b[j].second));
      ++j;
    } else {
      Scalar v = a[i].second;
      v -= c * b[j].second;
      if (!v.is_zero()) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

std::vector<SparseRow> sparse_rows(const Matrix& a) {
  std::vector<SparseRow> rows;
  const auto entries = a.entries();
  for (std::size_t i = 0; i < entries.size();) {
    SparseRow row;
    std::size_t j = i;
    for (; j < entries.size() && entries[j].row == entries[i].row; ++j) row.emplace_back(entries[j].col, entries[j].value);
    rows.push_back(std::move(row));
    i = j;
  }
  return rows;
}

}  // namespace

Echelon rref(const Matrix& a) {
  const Field field = a.field();
  std::vector<SparseRow> basis;
  std::unordered_map<std::size_t, std::size_t> pivot_row;

  for (SparseRow row : sparse_rows(a)) {
    while (!row.empty()) {
      const std::size_t lead = row.front().first;
      auto it = pivot_row.find(lead);
      if (it == pivot_row.end()) {
        const Scalar inv = row.front().second.inverse();
        for (auto& [col, v] : row) v *= inv;
        pivot_row.emplace(lead, basis.size());
        basis.push_back(std::move(row));
        break;
      }
      const Scalar c = row.front().second;
      row = subtract_multiple(row, c, basis[it->second]);
    }
  }

  std::vector<std::size_t> order(basis.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return basis[x].front().first < basis[y].front().first; });

  // Back substitution from the last pivot upwards; rows below are already
  // reduced, so the original coefficients are the right multipliers.
  for (std::size_t k = order.size(); k-- > 0;) {
    SparseRow& row = basis[order[k]];
    const SparseRow original = row;
    for (std::size_t e = 1; e < original.size(); ++e) {
      auto it = pivot_row.find(original[e].first);
      if (it != pivot_row.end()) row = subtract_multiple(row, original[e].second, basis[it->second]);
    }
  }

  Echelon result;
  std::vector<Matrix::Entry> entries;
  for (std::size_t r = 0; r < order.size(); ++r) {
    const SparseRow& row = basis[order[r]];
    result.pivots.push_back(row.front().first);
    for (const auto& [col, v] : row) entries.push_back({r, col, v});
  }
  result.reduced = Matrix::from_entries(field, order.size(), a.cols(), std::move(entries));
  return result;
}

std::size_t rank(const Matrix& a) { return rref(a).pivots.size(); }

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  if (a.field() != b.field()) throw Error(Errc::FieldMismatch, "solve over different fields");
  if (a.rows() != b.rows())
    throw Error(Errc::ShapeMismatch, "solve: A has " + std::to_string(a.rows()) + " rows, B has " +
                                         std::to_string(b.rows()));
  const std::size_t n = a.cols();
  const Echelon ech = rref(hstack(a, b));
  std::vector<Matrix::Entry> entries;
  for (std::size_t r = 0; r < ech.pivots.size(); ++r) {
    if (ech.pivots[r] >= n) return std::nullopt;
  }
  for (const auto& e : ech.reduced.entries())
    if (e.col >= n) entries.push_back({ech.pivots[e.row], e.col - n, e.value});
  return Matrix::from_entries(a.field(), n, b.cols(), std::move(entries));
}

std::optional<Matrix> solve_injective(const Matrix& k, const Matrix& b) {
  if (k.field() != b.field()) throw Error(Errc::FieldMismatch, "solve over different fields");
  if (k.rows() != b.rows()) throw Error(Errc::ShapeMismatch, "solve_injective: row counts differ");
  std::vector<std::size_t> last_row(k.cols(), k.rows());
  for (const auto& e : k.entries()) last_row[e.col] = e.row;  // entries are row-sorted
  bool usable = std::none_of(last_row.begin(), last_row.end(), [&](std::size_t r) { return r == k.rows(); });
  if (usable) usable = k.select_rows(last_row).is_identity();
  if (!usable) return solve(k, b);
  Matrix x = b.select_rows(last_row);
  if (!(k * x == b)) return std::nullopt;
  return x;
}

Matrix kernel_basis(const Matrix& a) {
  const Echelon ech = rref(a);
  const std::size_t n = a.cols();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : ech.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_index(n, n);
  std::size_t nfree = 0;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) free_index[c] = nfree++;

  std::vector<Matrix::Entry> entries;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) entries.push_back({c, free_index[c], Scalar::one(a.field())});
  for (const auto& e : ech.reduced.entries())
    if (!is_pivot[e.col]) entries.push_back({ech.pivots[e.row], free_index[e.col], -e.value});
  return Matrix::from_entries(a.field(), n, nfree, std::move(entries));
}

Matrix kron(const Matrix& a, const Matrix& b) {
  if (a.field() != b.field()) throw Error(Errc::FieldMismatch, "kron over different fields");
  std::vector<Matrix::Entry> entries;
  entries.reserve(a.nnz() * b.nnz());
  for (const auto& x : a.entries())
    for (const auto& y : b.entries())
      entries.push_back({x.row * b.rows() + y.row, x.col * b.cols() + y.col, x.value * y.value});
  return Matrix::from_entries(a.field(), a.rows() * b.rows(), a.cols() * b.cols(), std::move(entries));
}

Matrix tensor_apply(const std::vector<TensorFactor>& factors, const Matrix& x) {
  std::vector<std::size_t> dims;
  std::size_t total = 1;
  for (const auto& f : factors) {
    dims.push_back(f.in_dim());
    total *= f.in_dim();
    if (f.map && f.map->field() != x.field()) throw Error(Errc::FieldMismatch, "tensor factor field differs");
  }
  if (total != x.rows())
    throw Error(Errc::ShapeMismatch, "tensor_apply: factors expect " + std::to_string(total) + " rows, got " +
                                         std::to_string(x.rows()));

  Matrix current = x;
  for (std::size_t t = 0; t < factors.size(); ++t) {
    const TensorFactor& f = factors[t];
    if (!f.map) continue;
    std::size_t post = 1;
    for (std::size_t s = t + 1; s < dims.size(); ++s) post *= dims[s];
    const std::size_t n = dims[t];
    const std::size_t m = f.map->rows();

    std::vector<std::vector<std::pair<std::size_t, Scalar>>> by_col(n);
    for (const auto& e : f.map->entries()) by_col[e.col].emplace_back(e.row, e.value);

    std::vector<Matrix::Entry> out;
    for (const auto& e : current.entries()) {
      const std::size_t pre = e.row / (n * post);
      const std::size_t j = (e.row / post) % n;
      const std::size_t q = e.row % post;
      for (const auto& [i, v] : by_col[j]) out.push_back({(pre * m + i) * post + q, e.col, v * e.value});
    }
    std::size_t rows = 1;
    dims[t] = m;
    for (std::size_t d : dims) rows *= d;
    current = Matrix::from_entries(x.field(), rows, x.cols(), std::move(out));
  }
  return current;
}

LinMap swap_map(Field field, std::size_t m, std::size_t n) {
  std::vector<Matrix::Entry> entries;
  entries.reserve(m * n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) entries.push_back({j * m + i, i * n + j, Scalar::one(field)});
  return LinMap(Matrix::from_entries(field, n * m, m * n, std::move(entries)));
}

bool column_span_equal(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw Error(Errc::ShapeMismatch, "column spaces of different ambient dimension");
  return solve(a, b).has_value() && solve(b, a).has_value();
}

bool is_surjective(const Matrix& a) { return rank(a) == a.rows(); }
bool is_injective(const Matrix& a) { return rank(a) == a.cols(); }

std::optional<Matrix> inverse(const Matrix& a) {
  if (a.rows() != a.cols()) throw Error(Errc::ShapeMismatch, "inverse of a non-square matrix");
  if (!is_injective(a)) return std::nullopt;
  return solve(a, Matrix::identity(a.field(), a.rows()));
}

}  // namespace relspan::alg
