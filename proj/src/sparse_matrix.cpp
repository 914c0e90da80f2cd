#include "curvedhh/sparse_matrix.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>

#include "curvedhh/errors.hpp"

namespace curvedhh {

namespace {

bool row_major_less(const MatrixEntry& a, const MatrixEntry& b) {
  return a.row != b.row ? a.row < b.row : a.col < b.col;
}

void require_field(const Field& f, const Scalar& s) {
  if (!(s.field() == f))
    throw ConfigurationError("matrix over " + f.name() + " received an entry over " + s.field().name());
}

// Field operations specialised to a native value type for elimination.
struct RationalOps {
  using Value = mpq_class;
  static Value from(const Scalar& s) { return s.rational(); }
  static bool is_zero(const Value& v) { return sgn(v) == 0; }
  static Value inverse(const Value& v) { return 1 / v; }
  static void mul_in_place(Value& v, const Value& f) { v *= f; }
  // a - f * b
  static Value axpy(const Value& a, const Value& f, const Value& b) { return a - f * b; }
  static Value neg_mul(const Value& f, const Value& b) { return -(f * b); }
};

struct PrimeOps {
  using Value = std::uint32_t;
  std::uint32_t p;
  Value from(const Scalar& s) const { return s.residue(); }
  static bool is_zero(Value v) { return v == 0; }
  Value inverse(Value v) const { return inverse_mod(v, p); }
  void mul_in_place(Value& v, Value f) const { v = static_cast<Value>(std::uint64_t{v} * f % p); }
  Value axpy(Value a, Value f, Value b) const {
    std::uint64_t fb = std::uint64_t{f} * b % p;
    return static_cast<Value>((a + p - fb) % p);
  }
  Value neg_mul(Value f, Value b) const {
    std::uint64_t fb = std::uint64_t{f} * b % p;
    return static_cast<Value>((p - fb) % p);
  }
};

template <class Ops>
std::size_t eliminate_columns(const SparseMatrix& m, const Ops& ops) {
  using Value = typename Ops::Value;
  using Vec = std::vector<std::pair<std::uint32_t, Value>>;

  std::vector<Vec> columns(m.cols());
  for (const auto& e : m.entries()) columns[e.col].emplace_back(e.row, ops.from(e.value));
  for (auto& c : columns)
    std::sort(c.begin(), c.end(), [](const auto& a, const auto& b) { return a.first < b.first; });

  std::vector<std::int64_t> pivot_of_row(m.rows(), -1);
  std::vector<Vec> pivots;
  std::size_t r = 0;
  Vec scratch;
  for (auto& work : columns) {
    while (!work.empty()) {
      const std::uint32_t lead = work.front().first;
      const std::int64_t pivot = pivot_of_row[lead];
      if (pivot < 0) {
        Value inv = ops.inverse(work.front().second);
        for (auto& [row, v] : work) ops.mul_in_place(v, inv);
        pivot_of_row[lead] = static_cast<std::int64_t>(pivots.size());
        pivots.push_back(std::move(work));
        ++r;
        break;
      }
      // work -= factor * pivots[pivot]; the pivot has leading coefficient 1.
      const Vec& pv = pivots[static_cast<std::size_t>(pivot)];
      const Value factor = work.front().second;
      scratch.clear();
      scratch.reserve(work.size() + pv.size());
      std::size_t i = 1, j = 1;
      while (i < work.size() || j < pv.size()) {
        if (j == pv.size() || (i < work.size() && work[i].first < pv[j].first)) {
          scratch.push_back(std::move(work[i++]));
        } else if (i == work.size() || pv[j].first < work[i].first) {
          scratch.emplace_back(pv[j].first, ops.neg_mul(factor, pv[j].second));
          ++j;
        } else {
          Value v = ops.axpy(work[i].second, factor, pv[j].second);
          if (!Ops::is_zero(v)) scratch.emplace_back(work[i].first, std::move(v));
          ++i;
          ++j;
        }
      }
      work.swap(scratch);
    }
  }
  return r;
}

}  // namespace

SparseMatrix SparseMatrix::from_entries(Field f, std::size_t rows, std::size_t cols,
                                        std::vector<MatrixEntry> entries) {
  SparseMatrix m(f, rows, cols);
  for (const auto& e : entries) {
    require_field(f, e.value);
    if (e.row >= rows || e.col >= cols)
      throw ConfigurationError("matrix entry (" + std::to_string(e.row) + "," + std::to_string(e.col) +
                               ") outside " + std::to_string(rows) + "x" + std::to_string(cols));
  }
  std::sort(entries.begin(), entries.end(), row_major_less);
  m.entries_.reserve(entries.size());
  for (auto& e : entries) {
    if (!m.entries_.empty() && m.entries_.back().row == e.row && m.entries_.back().col == e.col) {
      m.entries_.back().value += e.value;
    } else {
      if (!m.entries_.empty() && m.entries_.back().value.is_zero()) m.entries_.pop_back();
      m.entries_.push_back(std::move(e));
    }
  }
  if (!m.entries_.empty() && m.entries_.back().value.is_zero()) m.entries_.pop_back();
  return m;
}

SparseMatrix SparseMatrix::identity(Field f, std::size_t n) {
  std::vector<MatrixEntry> e;
  e.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    e.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(i), Scalar(f, 1)});
  return from_entries(f, n, n, std::move(e));
}

Scalar SparseMatrix::at(std::size_t r, std::size_t c) const {
  MatrixEntry probe{static_cast<std::uint32_t>(r), static_cast<std::uint32_t>(c), Scalar(field_)};
  auto it = std::lower_bound(entries_.begin(), entries_.end(), probe, row_major_less);
  if (it != entries_.end() && it->row == r && it->col == c) return it->value;
  return Scalar(field_);
}

SparseMatrix SparseMatrix::transpose() const {
  std::vector<MatrixEntry> t;
  t.reserve(entries_.size());
  for (const auto& e : entries_) t.push_back({e.col, e.row, e.value});
  return from_entries(field_, cols_, rows_, std::move(t));
}

SparseMatrix SparseMatrix::operator-() const {
  SparseMatrix out = *this;
  for (auto& e : out.entries_) e.value = -e.value;
  return out;
}

SparseMatrix SparseMatrix::operator*(const SparseMatrix& rhs) const {
  if (!(field_ == rhs.field_)) throw ConfigurationError("matrix product across fields");
  if (cols_ != rhs.rows_)
    throw ConfigurationError("matrix product shape mismatch: " + std::to_string(rows_) + "x" +
                             std::to_string(cols_) + " * " + std::to_string(rhs.rows_) + "x" +
                             std::to_string(rhs.cols_));
  // Row starts of rhs.
  std::vector<std::size_t> start(rhs.rows_ + 1, 0);
  for (const auto& e : rhs.entries_) ++start[e.row + 1];
  for (std::size_t i = 0; i < rhs.rows_; ++i) start[i + 1] += start[i];

  std::vector<MatrixEntry> out;
  std::size_t i = 0;
  while (i < entries_.size()) {
    const std::uint32_t row = entries_[i].row;
    std::map<std::uint32_t, Scalar> acc;
    for (; i < entries_.size() && entries_[i].row == row; ++i) {
      const auto& a = entries_[i];
      for (std::size_t k = start[a.col]; k < start[a.col + 1]; ++k) {
        const auto& b = rhs.entries_[k];
        auto [it, inserted] = acc.try_emplace(b.col, field_);
        it->second += a.value * b.value;
      }
    }
    for (auto& [col, v] : acc)
      if (!v.is_zero()) out.push_back({row, col, std::move(v)});
  }
  SparseMatrix m(field_, rows_, rhs.cols_);
  m.entries_ = std::move(out);
  return m;
}

SparseMatrix SparseMatrix::submatrix(std::span<const std::uint32_t> rows, std::span<const std::uint32_t> cols) const {
  constexpr std::uint32_t absent = ~0u;
  std::vector<std::uint32_t> row_map(rows_, absent), col_map(cols_, absent);
  for (std::size_t i = 0; i < rows.size(); ++i) row_map.at(rows[i]) = static_cast<std::uint32_t>(i);
  for (std::size_t i = 0; i < cols.size(); ++i) col_map.at(cols[i]) = static_cast<std::uint32_t>(i);
  std::vector<MatrixEntry> out;
  for (const auto& e : entries_)
    if (row_map[e.row] != absent && col_map[e.col] != absent) out.push_back({row_map[e.row], col_map[e.col], e.value});
  return from_entries(field_, rows.size(), cols.size(), std::move(out));
}

SparseMatrix SparseMatrix::block(const SparseMatrix& tl, const SparseMatrix& tr, const SparseMatrix& bl,
                                 const SparseMatrix& br) {
  if (tl.rows_ != tr.rows_ || bl.rows_ != br.rows_ || tl.cols_ != bl.cols_ || tr.cols_ != br.cols_)
    throw ConfigurationError("block matrix shapes do not agree");
  const auto r0 = static_cast<std::uint32_t>(tl.rows_);
  const auto c0 = static_cast<std::uint32_t>(tl.cols_);
  std::vector<MatrixEntry> out;
  out.reserve(tl.nnz() + tr.nnz() + bl.nnz() + br.nnz());
  for (const auto& e : tl.entries_) out.push_back(e);
  for (const auto& e : tr.entries_) out.push_back({e.row, e.col + c0, e.value});
  for (const auto& e : bl.entries_) out.push_back({e.row + r0, e.col, e.value});
  for (const auto& e : br.entries_) out.push_back({e.row + r0, e.col + c0, e.value});
  return from_entries(tl.field_, tl.rows_ + bl.rows_, tl.cols_ + tr.cols_, std::move(out));
}

bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
  if (!(a.field_ == b.field_) || a.rows_ != b.rows_ || a.cols_ != b.cols_ || a.nnz() != b.nnz()) return false;
  for (std::size_t i = 0; i < a.entries_.size(); ++i) {
    const auto& x = a.entries_[i];
    const auto& y = b.entries_[i];
    if (x.row != y.row || x.col != y.col || !(x.value == y.value)) return false;
  }
  return true;
}

std::size_t rank(const SparseMatrix& m) {
  if (m.nnz() == 0) return 0;
  if (m.field().is_rational()) return eliminate_columns(m, RationalOps{});
  return eliminate_columns(m, PrimeOps{m.field().modulus()});
}

}  // namespace curvedhh
