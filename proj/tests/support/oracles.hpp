#pragma once

// Reference computations for tests. Each follows the textbook definition
// directly and shares no code with the engine beyond ring arithmetic.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <vector>

#include <gtest/gtest.h>

#include "bergq/comm_poly.hpp"
#include "bergq/error.hpp"
#include "bergq/free_poly.hpp"
#include "bergq/generic_matrix.hpp"
#include "bergq/quantization.hpp"

namespace oracle {

using namespace bergq;

template <class Fn>
void expect_error(ErrorCode code, Fn fn) {
  try {
    fn();
    ADD_FAILURE() << "expected " << error_code_name(code);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

// Rank of a dense matrix of scalars by plain Gaussian elimination.
inline std::size_t dense_rank(std::vector<std::vector<Scalar>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c].is_zero()) continue;
      Scalar factor = rows[r][c] / rows[rank][c];
      for (std::size_t k = 0; k < cols; ++k) rows[r][k] = rows[r][k] - factor * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

// Dense coordinates of a family of vectors given as (key -> scalar) maps.
template <class Key, class Less>
std::vector<std::vector<Scalar>> dense_columns(const std::vector<std::map<Key, Scalar, Less>>& vectors, Field field) {
  std::map<Key, std::size_t, Less> index;
  for (const auto& v : vectors) {
    for (const auto& [k, c] : v) index.emplace(k, 0);
  }
  std::size_t next = 0;
  for (auto& [k, i] : index) i = next++;
  // One row per coordinate, one column per vector.
  std::vector<std::vector<Scalar>> rows(index.size(), std::vector<Scalar>(vectors.size(), Scalar::zero(field)));
  for (std::size_t col = 0; col < vectors.size(); ++col) {
    for (const auto& [k, c] : vectors[col]) rows[index.at(k)][col] = c;
  }
  return rows;
}

inline std::vector<Word> all_words(std::size_t s, std::size_t max_len) {
  std::vector<Word> out{Word{}};
  std::vector<Word> layer{Word{}};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<Word> next;
    for (const auto& w : layer) {
      for (std::uint32_t l = 1; l <= s; ++l) {
        Word x = w;
        x.push_back(l);
        next.push_back(x);
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    layer = next;
  }
  return out;
}

// dim {g : deg g <= m, [f, g] = 0} by rank-nullity on all words of length <= m.
inline std::size_t centralizer_dimension(const FreePoly& f, std::size_t m) {
  const Field field = f.field();
  std::vector<std::map<Word, Scalar, WordGreater>> cols;
  const auto words = all_words(f.generators(), m);
  for (const auto& w : words) {
    auto c = commutator(f, FreePoly::monomial(field, f.generators(), w, Scalar::one(field)));
    cols.emplace_back(c.terms().begin(), c.terms().end());
  }
  if (cols.empty()) return 0;
  return words.size() - dense_rank(dense_columns(cols, field));
}

// Free product by explicit word concatenation.
inline FreePoly naive_free_product(const FreePoly& a, const FreePoly& b) {
  FreePoly out(a.field(), a.generators());
  for (const auto& [u, c] : a.terms()) {
    for (const auto& [v, d] : b.terms()) {
      Word w = u;
      w.insert(w.end(), v.begin(), v.end());
      out.add_term(w, c * d);
    }
  }
  return out;
}

// Row-column product with an explicit triple loop.
inline PolyMatrix naive_product(const PolyMatrix& a, const PolyMatrix& b) {
  PolyMatrix out(a.rows(), b.cols(), CommPoly(a(0, 0).field()));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      CommPoly acc(a(0, 0).field());
      for (std::size_t k = 0; k < a.cols(); ++k) acc = acc + a(i, k) * b(k, j);
      out(i, j) = acc;
    }
  }
  return out;
}

// S_k as the signed sum over all k! orderings.
inline PolyMatrix brute_standard_identity(const std::vector<PolyMatrix>& ms) {
  const std::size_t k = ms.size();
  const std::size_t n = ms.front().rows();
  const Field field = ms.front()(0, 0).field();
  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  PolyMatrix total(n, n, CommPoly(field));
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) inversions += perm[i] > perm[j];
    }
    PolyMatrix prod = ms[perm[0]];
    for (std::size_t i = 1; i < k; ++i) prod = naive_product(prod, ms[perm[i]]);
    total = inversions % 2 == 0 ? total + prod : total - prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// B_r(a, b) summed over every index tuple (i_1..i_r, j_1..j_r) of the
// variable list, differentiating one variable at a time.
inline CommPoly naive_moyal_term(const CommPoly& a, const CommPoly& b, std::size_t r, const PoissonTensor& pi) {
  const auto& vars = pi.variables();
  const Field field = pi.field();
  CommPoly total(field);
  std::vector<std::size_t> is(r), js(r);
  std::function<void(std::size_t)> rec = [&](std::size_t depth) {
    if (depth == r) {
      Scalar weight = Scalar::one(field);
      for (std::size_t k = 0; k < r; ++k) weight = weight * pi.entry(vars[is[k]], vars[js[k]]);
      if (weight.is_zero()) return;
      CommPoly da = a, db = b;
      for (std::size_t k = 0; k < r; ++k) {
        da = partial_derivative(da, vars[is[k]]);
        db = partial_derivative(db, vars[js[k]]);
      }
      total = total + (da * db).scaled(weight);
      return;
    }
    for (std::size_t i = 0; i < vars.size(); ++i) {
      for (std::size_t j = 0; j < vars.size(); ++j) {
        is[depth] = i;
        js[depth] = j;
        rec(depth + 1);
      }
    }
  };
  rec(0);
  Scalar denom = Scalar::one(field);
  for (std::size_t k = 1; k <= r; ++k) denom = denom * Scalar(field, static_cast<long>(2 * k));
  return total.scaled(denom.inverse());
}

// {a, b} = sum over all ordered variable pairs.
inline CommPoly naive_bracket(const CommPoly& a, const CommPoly& b, const PoissonTensor& pi) {
  CommPoly out(pi.field());
  for (const auto& vi : pi.variables()) {
    for (const auto& vj : pi.variables()) {
      Scalar c = pi.entry(vi, vj);
      if (!c.is_zero()) out = out + (partial_derivative(a, vi) * partial_derivative(b, vj)).scaled(c);
    }
  }
  return out;
}

// Rank of span{F^a G^b : a + b <= D} from explicit powers.
inline std::size_t monomial_span_rank(const GenericMatrix& f, const GenericMatrix& g, std::size_t degree) {
  using Key = std::pair<std::size_t, std::string>;
  std::vector<std::map<Key, Scalar>> vectors;
  const Field field = f.field();
  for (std::size_t total = 0; total <= degree; ++total) {
    for (std::size_t a = 0; a <= total; ++a) {
      GenericMatrix m = f.pow(static_cast<unsigned>(a)) * g.pow(static_cast<unsigned>(total - a));
      std::map<Key, Scalar> v;
      for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = 0; j < m.size(); ++j) {
          for (const auto& [mono, c] : m(i, j).terms()) v.emplace(Key{i * m.size() + j, mono.to_string()}, c);
        }
      }
      vectors.push_back(std::move(v));
    }
  }
  return dense_rank(dense_columns(vectors, field));
}

// Smallest D <= dmax with a nontrivial relation among F^a G^b, a + b <= D.
inline std::optional<std::size_t> minimal_annihilator_degree(const GenericMatrix& f, const GenericMatrix& g,
                                                             std::size_t dmax) {
  for (std::size_t d = 0; d <= dmax; ++d) {
    const std::size_t count = (d + 1) * (d + 2) / 2;
    if (monomial_span_rank(f, g, d) < count) return d;
  }
  return std::nullopt;
}

}  // namespace oracle
