#include "relspan/alg/matrix.hpp"

#include "relspan/error.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_map>

namespace relspan::alg {

namespace {

bool entry_less(const Matrix::Entry& a, const Matrix::Entry& b) {
  return a.row != b.row ? a.row < b.row : a.col < b.col;
}

std::string dims(const Matrix& m) { return std::to_string(m.rows()) + "x" + std::to_string(m.cols()); }

void require_field(const Matrix& a, const Matrix& b) {
  if (a.field() != b.field())
    throw Error(Errc::FieldMismatch, "matrices over " + a.field().name() + " and " + b.field().name());
}

// Half-open range of entries belonging to one row.
struct RowSlice {
  std::size_t row;
  std::size_t begin;
  std::size_t end;
};

std::vector<RowSlice> row_slices(std::span<const Matrix::Entry> entries) {
  std::vector<RowSlice> slices;
  for (std::size_t i = 0; i < entries.size();) {
    std::size_t j = i;
    while (j < entries.size() && entries[j].row == entries[i].row) ++j;
    slices.push_back({entries[i].row, i, j});
    i = j;
  }
  return slices;
}

const RowSlice* find_row(const std::vector<RowSlice>& slices, std::size_t row) {
  auto it = std::lower_bound(slices.begin(), slices.end(), row,
                             [](const RowSlice& s, std::size_t r) { return s.row < r; });
  return it != slices.end() && it->row == row ? &*it : nullptr;
}

}  // namespace

Matrix Matrix::identity(Field field, std::size_t n) {
  Matrix m(field, n, n);
  m.entries_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) m.entries_.push_back({i, i, Scalar::one(field)});
  return m;
}

Matrix Matrix::from_entries(Field field, std::size_t rows, std::size_t cols, std::vector<Entry> entries) {
  for (const auto& e : entries) {
    if (e.row >= rows || e.col >= cols)
      throw Error(Errc::ShapeMismatch, "entry (" + std::to_string(e.row) + "," + std::to_string(e.col) +
                                           ") outside " + std::to_string(rows) + "x" + std::to_string(cols));
    if (e.value.field() != field) throw Error(Errc::FieldMismatch, "entry field differs from matrix field");
  }
  std::sort(entries.begin(), entries.end(), entry_less);
  Matrix m(field, rows, cols);
  m.entries_.reserve(entries.size());
  for (std::size_t i = 0; i < entries.size();) {
    Entry acc = std::move(entries[i]);
    std::size_t j = i + 1;
    for (; j < entries.size() && entries[j].row == acc.row && entries[j].col == acc.col; ++j) acc.value += entries[j].value;
    if (!acc.value.is_zero()) m.entries_.push_back(std::move(acc));
    i = j;
  }
  return m;
}

Matrix Matrix::from_rows(Field field, const std::vector<std::vector<Scalar>>& rows, std::size_t cols) {
  std::vector<Entry> entries;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols)
      throw Error(Errc::ShapeMismatch, "row " + std::to_string(i) + " has " + std::to_string(rows[i].size()) +
                                           " entries, expected " + std::to_string(cols));
    for (std::size_t j = 0; j < cols; ++j)
      if (!rows[i][j].is_zero()) entries.push_back({i, j, rows[i][j]});
  }
  return from_entries(field, rows.size(), cols, std::move(entries));
}

Matrix Matrix::from_ints(Field field, std::size_t rows, std::size_t cols, std::initializer_list<long long> values) {
  if (values.size() != rows * cols) throw Error(Errc::ShapeMismatch, "literal size does not match shape");
  std::vector<Entry> entries;
  std::size_t k = 0;
  for (long long v : values) {
    if (v != 0) entries.push_back({k / cols, k % cols, Scalar::from_int(field, v)});
    ++k;
  }
  return from_entries(field, rows, cols, std::move(entries));
}

bool Matrix::is_identity() const {
  if (rows_ != cols_ || entries_.size() != rows_) return false;
  for (const auto& e : entries_)
    if (e.row != e.col || !e.value.is_one()) return false;
  return true;
}

Scalar Matrix::at(std::size_t row, std::size_t col) const {
  if (row >= rows_ || col >= cols_) throw Error(Errc::ShapeMismatch, "index outside " + dims(*this));
  Entry probe{row, col, Scalar(field_)};
  auto it = std::lower_bound(entries_.begin(), entries_.end(), probe, entry_less);
  if (it != entries_.end() && it->row == row && it->col == col) return it->value;
  return Scalar(field_);
}

Matrix Matrix::with_entry(std::size_t row, std::size_t col, const Scalar& value) const {
  std::vector<Entry> entries;
  entries.reserve(entries_.size() + 1);
  for (const auto& e : entries_)
    if (e.row != row || e.col != col) entries.push_back(e);
  entries.push_back({row, col, value});
  return from_entries(field_, rows_, cols_, std::move(entries));
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  t.entries_.reserve(entries_.size());
  for (const auto& e : entries_) t.entries_.push_back({e.col, e.row, e.value});
  std::sort(t.entries_.begin(), t.entries_.end(), entry_less);
  return t;
}

Matrix Matrix::column(std::size_t col) const {
  const std::size_t idx[] = {col};
  return select_columns(idx);
}

Matrix Matrix::select_rows(std::span<const std::size_t> rows) const {
  const auto slices = row_slices(entries_);
  Matrix m(field_, rows.size(), cols_);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i] >= rows_) throw Error(Errc::ShapeMismatch, "row selection outside " + dims(*this));
    if (const RowSlice* s = find_row(slices, rows[i]))
      for (std::size_t k = s->begin; k < s->end; ++k) m.entries_.push_back({i, entries_[k].col, entries_[k].value});
  }
  return m;
}

Matrix Matrix::select_columns(std::span<const std::size_t> cols) const {
  std::unordered_map<std::size_t, std::vector<std::size_t>> targets;
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j] >= cols_) throw Error(Errc::ShapeMismatch, "column selection outside " + dims(*this));
    targets[cols[j]].push_back(j);
  }
  Matrix m(field_, rows_, cols.size());
  for (const auto& e : entries_) {
    auto it = targets.find(e.col);
    if (it == targets.end()) continue;
    for (std::size_t j : it->second) m.entries_.push_back({e.row, j, e.value});
  }
  std::sort(m.entries_.begin(), m.entries_.end(), entry_less);
  return m;
}

std::vector<std::vector<Scalar>> Matrix::to_dense() const {
  std::vector<std::vector<Scalar>> dense(rows_, std::vector<Scalar>(cols_, Scalar(field_)));
  for (const auto& e : entries_) dense[e.row][e.col] = e.value;
  return dense;
}

std::size_t Matrix::first_differing_column(const Matrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) return 0;
  const Matrix diff = *this - other;
  std::size_t best = cols_;
  for (const auto& e : diff.entries_) best = std::min(best, e.col);
  return best;
}

Matrix Matrix::combine(const Matrix& rhs, bool subtract) const {
  require_field(*this, rhs);
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw Error(Errc::ShapeMismatch, "cannot add " + dims(*this) + " and " + dims(rhs));
  Matrix out(field_, rows_, cols_);
  out.entries_.reserve(entries_.size() + rhs.entries_.size());
  std::size_t i = 0, j = 0;
  while (i < entries_.size() || j < rhs.entries_.size()) {
    if (j == rhs.entries_.size() || (i < entries_.size() && entry_less(entries_[i], rhs.entries_[j]))) {
      out.entries_.push_back(entries_[i++]);
    } else if (i == entries_.size() || entry_less(rhs.entries_[j], entries_[i])) {
      Entry e = rhs.entries_[j++];
      if (subtract) e.value = -e.value;
      out.entries_.push_back(std::move(e));
    } else {
      Entry e = entries_[i++];
      if (subtract)
        e.value -= rhs.entries_[j++].value;
      else
        e.value += rhs.entries_[j++].value;
      if (!e.value.is_zero()) out.entries_.push_back(std::move(e));
    }
  }
  return out;
}

Matrix& Matrix::operator+=(const Matrix& rhs) { return *this = combine(rhs, false); }
Matrix& Matrix::operator-=(const Matrix& rhs) { return *this = combine(rhs, true); }

Matrix operator*(const Matrix& lhs, const Matrix& rhs) {
  require_field(lhs, rhs);
  if (lhs.cols_ != rhs.rows_) throw Error(Errc::ShapeMismatch, "cannot multiply " + dims(lhs) + " by " + dims(rhs));
  Matrix out(lhs.field_, lhs.rows_, rhs.cols_);
  if (rhs.is_identity()) {
    out.entries_ = lhs.entries_;
    return out;
  }
  const auto rhs_rows = row_slices(rhs.entries_);
  std::map<std::size_t, Scalar> acc;
  for (const RowSlice& lrow : row_slices(lhs.entries_)) {
    acc.clear();
    for (std::size_t k = lrow.begin; k < lrow.end; ++k) {
      const auto& a = lhs.entries_[k];
      const RowSlice* r = find_row(rhs_rows, a.col);
      if (!r) continue;
      for (std::size_t t = r->begin; t < r->end; ++t) {
        const auto& b = rhs.entries_[t];
        auto [it, inserted] = acc.try_emplace(b.col, lhs.field_);
        it->second.add_product(a.value, b.value);
      }
    }
    for (auto& [col, value] : acc)
      if (!value.is_zero()) out.entries_.push_back({lrow.row, col, std::move(value)});
  }
  return out;
}

Matrix operator*(const Scalar& s, const Matrix& m) {
  if (s.field() != m.field_) throw Error(Errc::FieldMismatch, "scalar and matrix fields differ");
  Matrix out(m.field_, m.rows_, m.cols_);
  if (s.is_zero()) return out;
  out.entries_ = m.entries_;
  for (auto& e : out.entries_) e.value *= s;
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  if (a.field_ != b.field_ || a.rows_ != b.rows_ || a.cols_ != b.cols_ || a.entries_.size() != b.entries_.size())
    return false;
  for (std::size_t i = 0; i < a.entries_.size(); ++i) {
    const auto& x = a.entries_[i];
    const auto& y = b.entries_[i];
    if (x.row != y.row || x.col != y.col || !(x.value == y.value)) return false;
  }
  return true;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << dims(*this) << " over " << field_.name() << "\n";
  for (const auto& row : to_dense()) {
    os << "[";
    for (std::size_t j = 0; j < row.size(); ++j) os << (j ? " " : "") << row[j].to_string();
    os << "]\n";
  }
  return os.str();
}

Matrix hstack(const Matrix& left, const Matrix& right) {
  require_field(left, right);
  if (left.rows() != right.rows()) throw Error(Errc::ShapeMismatch, "hstack of " + dims(left) + " and " + dims(right));
  std::vector<Matrix::Entry> entries(left.entries().begin(), left.entries().end());
  for (const auto& e : right.entries()) entries.push_back({e.row, e.col + left.cols(), e.value});
  return Matrix::from_entries(left.field(), left.rows(), left.cols() + right.cols(), std::move(entries));
}

Matrix vstack(const Matrix& top, const Matrix& bottom) {
  require_field(top, bottom);
  if (top.cols() != bottom.cols()) throw Error(Errc::ShapeMismatch, "vstack of " + dims(top) + " and " + dims(bottom));
  std::vector<Matrix::Entry> entries(top.entries().begin(), top.entries().end());
  for (const auto& e : bottom.entries()) entries.push_back({e.row + top.rows(), e.col, e.value});
  return Matrix::from_entries(top.field(), top.rows() + bottom.rows(), top.cols(), std::move(entries));
}

LinMap LinMap::after(const LinMap& inner) const { return LinMap(matrix_ * inner.matrix_); }

}  // namespace relspan::alg
