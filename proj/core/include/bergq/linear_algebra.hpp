#pragma once

// Exact sparse Gaussian elimination over a Field. Vectors are ordered maps
// from an arbitrary key type to Scalar; the map order is the column order
// used for pivots.

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "bergq/scalar.hpp"

namespace bergq {

template <class Key, class Compare = std::less<Key>>
using SparseVector = std::map<Key, Scalar, Compare>;

// v += c * w, dropping cancelled entries.
template <class Key, class Compare>
void axpy(SparseVector<Key, Compare>& v, const Scalar& c, const SparseVector<Key, Compare>& w) {
  if (c.is_zero()) return;
  for (const auto& [k, x] : w) {
    auto [it, inserted] = v.try_emplace(k, c * x);
    if (!inserted) {
      it->second += c * x;
      if (it->second.is_zero()) v.erase(it);
    }
  }
}

// Incremental row echelon basis. Each inserted vector is either linearly
// independent of the previous ones, or insert() returns the linear relation
// sum_k c_k * input_k = 0 with coefficient 1 on the new input.
template <class Key, class Compare = std::less<Key>>
class IncrementalEchelon {
 public:
  using Vector = SparseVector<Key, Compare>;
  using Relation = std::map<std::size_t, Scalar>;

  explicit IncrementalEchelon(Field field) : field_(field) {}

  std::size_t inputs() const noexcept { return inputs_; }
  std::size_t rank() const noexcept { return rows_.size(); }

  std::optional<Relation> insert(Vector v) {
    const std::size_t label = inputs_++;
    Relation combo;
    combo.emplace(label, Scalar::one(field_));
    reduce_in_place(v, combo);
    if (v.empty()) return combo;
    Scalar inv = v.begin()->second.inverse();
    for (auto& [k, x] : v) x *= inv;
    for (auto& [k, x] : combo) x *= inv;
    Key pivot = v.begin()->first;
    rows_.emplace(pivot, Row{std::move(v), std::move(combo)});
    return std::nullopt;
  }

  // Remainder of v modulo the span. Empty iff v lies in the span; then
  // coefficients (if requested) expresses v = sum_k coefficients[k] * input_k.
  Vector reduce(Vector v, Relation* coefficients = nullptr) const {
    Relation combo;
    reduce_in_place(v, combo);
    if (coefficients) {
      coefficients->clear();
      for (const auto& [k, x] : combo) coefficients->emplace(k, -x);
    }
    return v;
  }

 private:
  struct Row {
    Vector vec;       // leading entry 1
    Relation combo;   // vec = sum combo[k] * input_k
  };

  // Eliminates pivots from v, keeping v_original - (subtracted rows) = v and
  // combo tracking v in terms of inputs (initially whatever the caller set).
  void reduce_in_place(Vector& v, Relation& combo) const {
    auto it = v.begin();
    while (it != v.end()) {
      auto row = rows_.find(it->first);
      if (row == rows_.end()) {
        ++it;
        continue;
      }
      Key key = it->first;
      Scalar c = -it->second;
      axpy(v, c, row->second.vec);
      for (const auto& [k, x] : row->second.combo) {
        auto [slot, inserted] = combo.try_emplace(k, c * x);
        if (!inserted) {
          slot->second += c * x;
          if (slot->second.is_zero()) combo.erase(slot);
        }
      }
      it = v.upper_bound(key);
    }
  }

  Field field_;
  std::size_t inputs_ = 0;
  std::map<Key, Row, Compare> rows_;
};

// Reduced row echelon form of the given rows: leading entries 1, each pivot
// column cleared in every other row, rows sorted by pivot in map order,
// zero rows dropped.
template <class Key, class Compare>
std::vector<SparseVector<Key, Compare>> reduced_row_echelon(const std::vector<SparseVector<Key, Compare>>& rows) {
  std::map<Key, SparseVector<Key, Compare>, Compare> pivots;
  for (auto v : rows) {
    for (auto it = v.begin(); it != v.end();) {
      auto p = pivots.find(it->first);
      if (p == pivots.end()) {
        ++it;
        continue;
      }
      Key key = it->first;
      axpy(v, -it->second, p->second);
      it = v.upper_bound(key);
    }
    if (v.empty()) continue;
    Scalar inv = v.begin()->second.inverse();
    for (auto& [k, x] : v) x *= inv;
    Key pivot = v.begin()->first;
    // Clear the new pivot column from earlier rows.
    for (auto& [pk, row] : pivots) {
      auto hit = row.find(pivot);
      if (hit != row.end()) {
        Scalar c = -hit->second;
        axpy(row, c, v);
      }
    }
    pivots.emplace(pivot, std::move(v));
  }
  std::vector<SparseVector<Key, Compare>> out;
  out.reserve(pivots.size());
  for (auto& [k, row] : pivots) out.push_back(std::move(row));
  return out;
}

}  // namespace bergq
