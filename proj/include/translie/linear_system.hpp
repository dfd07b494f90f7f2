#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "translie/basis.hpp"
#include "translie/errors.hpp"
#include "translie/scalar.hpp"

namespace translie {

/// Named coefficient such as a[3] or d[-1,2].
struct UnknownId {
  std::string tag;
  std::vector<std::int64_t> subscripts;

  friend auto operator<=>(const UnknownId&, const UnknownId&) = default;

  std::string to_string() const {
    std::string out = tag + "[";
    for (std::size_t i = 0; i < subscripts.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(subscripts[i]);
    }
    return out + "]";
  }
};

/// Sparse row: (column, coefficient) pairs sorted by column, no zeros.
using SparseRow = std::vector<std::pair<std::size_t, Scalar>>;
using DenseVector = std::vector<Scalar>;

namespace detail {

inline SparseRow normalize_row(SparseRow row) {
  std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseRow out;
  out.reserve(row.size());
  for (auto& [col, c] : row) {
    if (!out.empty() && out.back().first == col) {
      out.back().second += c;
      if (out.back().second.is_zero()) out.pop_back();
    } else if (!c.is_zero()) {
      out.emplace_back(col, std::move(c));
    }
  }
  return out;
}

// a - c*b for sorted sparse rows.
inline SparseRow subtract_scaled(const SparseRow& a, const Scalar& c, const SparseRow& b) {
  SparseRow out;
  out.reserve(a.size() + b.size());
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
      out.push_back(*ia++);
    } else if (ia == a.end() || ib->first < ia->first) {
      out.emplace_back(ib->first, -(c * ib->second));
      ++ib;
    } else {
      Scalar v = ia->second - c * ib->second;
      if (!v.is_zero()) out.emplace_back(ia->first, std::move(v));
      ++ia;
      ++ib;
    }
  }
  return out;
}

inline const Scalar* find_entry(const SparseRow& row, std::size_t col) {
  auto it = std::lower_bound(row.begin(), row.end(), col, [](const auto& e, std::size_t k) { return e.first < k; });
  return (it != row.end() && it->first == col) ? &it->second : nullptr;
}

inline void normalize_leading(DenseVector& v) {
  auto it = std::find_if(v.begin(), v.end(), [](const Scalar& s) { return !s.is_zero(); });
  if (it == v.end() || *it == Scalar(1)) return;
  Scalar lead = *it;
  for (auto& s : v)
    if (!s.is_zero()) s /= lead;
}

}  // namespace detail

/// Provenance of one assembled row: the basis inputs that generated it and
/// the output coordinate whose coefficient was compared.
struct RowOrigin {
  std::vector<BasisSymbol> inputs;
  BasisSymbol coordinate;
};

/// Homogeneous sparse linear system A v = 0 over named unknowns.
class ConstraintSystem {
 public:
  ConstraintSystem() = default;
  explicit ConstraintSystem(std::vector<UnknownId> unknowns) {
    for (auto& u : unknowns) add_unknown(std::move(u));
  }

  std::size_t add_unknown(UnknownId id) {
    auto [it, inserted] = index_.emplace(id, unknowns_.size());
    if (!inserted) throw DomainError("duplicate unknown " + id.to_string());
    unknowns_.push_back(std::move(id));
    return it->second;
  }

  std::optional<std::size_t> find_column(const UnknownId& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  std::size_t column(const UnknownId& id) const {
    auto c = find_column(id);
    if (!c) throw UnknownNotFound("unknown " + id.to_string() + " is not registered");
    return *c;
  }

  /// Adds a row after merging duplicate columns and pruning zeros. Returns
  /// false (and stores nothing) when the row is identically zero.
  bool add_row(SparseRow row, RowOrigin origin = {}) {
    for (const auto& e : row)
      if (e.first >= unknowns_.size()) throw UnknownNotFound("row references column " + std::to_string(e.first));
    row = detail::normalize_row(std::move(row));
    if (row.empty()) return false;
    rows_.push_back(std::move(row));
    origins_.push_back(std::move(origin));
    return true;
  }

  const std::vector<UnknownId>& unknowns() const { return unknowns_; }
  const std::vector<SparseRow>& rows() const { return rows_; }
  const std::vector<RowOrigin>& origins() const { return origins_; }
  std::size_t unknown_count() const { return unknowns_.size(); }
  std::size_t row_count() const { return rows_.size(); }

  Scalar evaluate_row(std::size_t i, std::span<const Scalar> v) const {
    Scalar acc;
    for (const auto& [col, c] : rows_[i]) acc += c * v[col];
    return acc;
  }

  bool is_satisfied_by(std::span<const Scalar> v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i)
      if (!evaluate_row(i, v).is_zero()) return false;
    return true;
  }

 private:
  std::vector<UnknownId> unknowns_;
  std::map<UnknownId, std::size_t> index_;
  std::vector<SparseRow> rows_;
  std::vector<RowOrigin> origins_;
};

/// Incremental exact elimination keeping a sparse reduced row echelon form.
/// Every stored row has a unit pivot and zeros in all other pivot columns,
/// so a new row is reduced by one subtraction per pivot column it touches.
class RowReducer {
 public:
  explicit RowReducer(std::size_t columns) : columns_(columns), slot_(columns, npos) {}

  /// Remainder of `row` after elimination against the stored pivots; empty
  /// iff the row lies in the span of the stored rows.
  SparseRow reduce(SparseRow row) const {
    row = detail::normalize_row(std::move(row));
    std::vector<std::pair<std::size_t, Scalar>> hits;
    for (const auto& [col, c] : row)
      if (slot_[col] != npos) hits.emplace_back(col, c);
    for (const auto& [col, c] : hits) row = detail::subtract_scaled(row, c, rows_[slot_[col]]);
    return row;
  }

  bool in_span(SparseRow row) const { return reduce(std::move(row)).empty(); }

  /// Returns true when the row raised the rank.
  bool insert(SparseRow row) {
    row = reduce(std::move(row));
    if (row.empty()) return false;

    const std::size_t pivot = row.front().first;
    if (row.front().second != Scalar(1)) {
      Scalar lead = row.front().second;
      for (auto& e : row) e.second /= lead;
    }
    for (auto& existing : rows_) {
      if (const Scalar* e = detail::find_entry(existing, pivot)) {
        Scalar factor = *e;
        existing = detail::subtract_scaled(existing, factor, row);
      }
    }
    slot_[pivot] = rows_.size();
    rows_.push_back(std::move(row));
    pivots_.push_back(pivot);
    return true;
  }

  bool insert_dense(std::span<const Scalar> v) {
    SparseRow row;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (!v[i].is_zero()) row.emplace_back(i, v[i]);
    return insert(std::move(row));
  }

  std::size_t rank() const { return rows_.size(); }
  std::size_t columns() const { return columns_; }
  bool is_pivot(std::size_t col) const { return slot_[col] != npos; }

  /// Reduced rows as dense vectors in ascending pivot order.
  std::vector<DenseVector> row_basis() const {
    std::vector<std::size_t> order(rows_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pivots_[a] < pivots_[b]; });
    std::vector<DenseVector> out;
    out.reserve(rows_.size());
    for (auto i : order) {
      DenseVector v(columns_);
      for (const auto& [col, c] : rows_[i]) v[col] = c;
      out.push_back(std::move(v));
    }
    return out;
  }

  /// One vector per free column, ascending; leading nonzero scaled to 1.
  std::vector<DenseVector> null_basis() const {
    std::vector<DenseVector> out;
    for (std::size_t f = 0; f < columns_; ++f) {
      if (slot_[f] != npos) continue;
      DenseVector v(columns_);
      v[f] = Scalar(1);
      for (std::size_t i = 0; i < rows_.size(); ++i)
        if (const Scalar* e = detail::find_entry(rows_[i], f)) v[pivots_[i]] = -*e;
      detail::normalize_leading(v);
      out.push_back(std::move(v));
    }
    return out;
  }

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t columns_;
  std::vector<std::size_t> slot_;
  std::vector<SparseRow> rows_;
  std::vector<std::size_t> pivots_;
};

/// Exact basis of a solution set, coordinates indexed by `unknowns`.
struct SolutionSpace {
  std::vector<UnknownId> unknowns;
  std::vector<DenseVector> basis;
  std::size_t constraint_rank = 0;

  std::size_t dimension() const { return basis.size(); }

  std::optional<std::size_t> find_column(const UnknownId& id) const {
    auto it = std::find(unknowns.begin(), unknowns.end(), id);
    if (it == unknowns.end()) return std::nullopt;
    return static_cast<std::size_t>(it - unknowns.begin());
  }
};

inline std::size_t rank_of(const std::vector<DenseVector>& vectors, std::size_t columns) {
  RowReducer r(columns);
  for (const auto& v : vectors) r.insert_dense(v);
  return r.rank();
}

inline SolutionSpace nullspace(const ConstraintSystem& sys) {
  RowReducer reducer(sys.unknown_count());
  for (const auto& row : sys.rows()) reducer.insert(row);
  return {sys.unknowns(), reducer.null_basis(), reducer.rank()};
}

/// Image of `space` under the coordinate projection onto `keep`, re-reduced
/// to an independent basis. Coordinates stay in the order of space.unknowns.
inline SolutionSpace project_solution(const SolutionSpace& space, const std::vector<UnknownId>& keep) {
  std::vector<bool> selected(space.unknowns.size(), false);
  for (const auto& id : keep) {
    auto col = space.find_column(id);
    if (!col) throw UnknownNotFound("cannot project onto unknown " + id.to_string());
    selected[*col] = true;
  }
  std::vector<std::size_t> cols;
  SolutionSpace out;
  for (std::size_t i = 0; i < space.unknowns.size(); ++i) {
    if (!selected[i]) continue;
    cols.push_back(i);
    out.unknowns.push_back(space.unknowns[i]);
  }
  RowReducer reducer(cols.size());
  for (const auto& v : space.basis) {
    SparseRow row;
    for (std::size_t j = 0; j < cols.size(); ++j)
      if (!v[cols[j]].is_zero()) row.emplace_back(j, v[cols[j]]);
    reducer.insert(std::move(row));
  }
  out.basis = reducer.row_basis();
  return out;
}

}  // namespace translie
