#include "bergq/generic_matrix.hpp"

#include <map>

#include "bergq/error.hpp"

namespace bergq {

GenericMatrix::GenericMatrix(PolyMatrix entries, unsigned origin) : m_(std::move(entries)), origin_(origin) {
  if (!m_.is_square() || m_.rows() == 0) raise(ErrorCode::ShapeMismatch, "generic matrix must be square, got " + m_.shape());
  const Field f = m_(0, 0).field();
  for (const auto& x : m_.entries()) {
    if (x.field() != f) raise(ErrorCode::FieldMismatch, "entries over different fields");
  }
}

GenericMatrix GenericMatrix::identity(std::size_t n, Field field) {
  if (n == 0) raise(ErrorCode::InvalidSize, "n must be >= 1");
  return GenericMatrix(PolyMatrix::identity(n, CommPoly(field), CommPoly(Scalar::one(field))));
}

GenericMatrix GenericMatrix::zero(std::size_t n, Field field) {
  if (n == 0) raise(ErrorCode::InvalidSize, "n must be >= 1");
  return GenericMatrix(PolyMatrix(n, n, CommPoly(field)));
}

GenericMatrix GenericMatrix::diagonal(const std::vector<CommPoly>& entries) {
  if (entries.empty()) raise(ErrorCode::InvalidSize, "empty diagonal");
  return GenericMatrix(PolyMatrix::diagonal(entries, CommPoly(entries.front().field())));
}

GenericMatrix operator+(const GenericMatrix& a, const GenericMatrix& b) { return GenericMatrix(a.m_ + b.m_); }
GenericMatrix operator-(const GenericMatrix& a, const GenericMatrix& b) { return GenericMatrix(a.m_ - b.m_); }
GenericMatrix operator*(const GenericMatrix& a, const GenericMatrix& b) { return GenericMatrix(a.m_ * b.m_); }

GenericMatrix GenericMatrix::pow(unsigned e) const {
  GenericMatrix result = identity(size(), field());
  for (unsigned k = 0; k < e; ++k) result = result * *this;
  return result;
}

std::string GenericMatrix::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < size(); ++i) {
    out += i ? ", [" : "[";
    for (std::size_t j = 0; j < size(); ++j) {
      if (j) out += ", ";
      out += m_(i, j).to_string();
    }
    out += "]";
  }
  return out + "]";
}

std::vector<GenericMatrix> make_generic(std::size_t s, std::size_t n, Field field) {
  if (s == 0 || n == 0) {
    raise(ErrorCode::InvalidSize, "make_generic needs s >= 1 and n >= 1 (got s=" + std::to_string(s) +
                                      ", n=" + std::to_string(n) + ")");
  }
  std::vector<GenericMatrix> out;
  out.reserve(s);
  for (std::size_t l = 1; l <= s; ++l) {
    PolyMatrix m(n, n, CommPoly(field));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        m(i, j) = CommPoly(field, Variable::entry(static_cast<unsigned>(l), static_cast<unsigned>(i + 1),
                                                  static_cast<unsigned>(j + 1)));
      }
    }
    out.emplace_back(std::move(m), static_cast<unsigned>(l));
  }
  return out;
}

GenericMatrix pi_reduce(const FreePoly& f, std::size_t n) {
  auto generators = make_generic(f.generators(), n, f.field());
  std::vector<PolyMatrix> images;
  images.reserve(generators.size());
  for (const auto& g : generators) images.push_back(g.entries());
  auto image = evaluate_in_matrices(f, images);
  // A lone generator keeps its origin tag.
  if (f.terms().size() == 1) {
    const auto& [w, c] = *f.terms().begin();
    if (w.size() == 1 && c.is_one()) return GenericMatrix(std::move(image), w.front());
  }
  return GenericMatrix(std::move(image));
}

GenericMatrix commutator(const GenericMatrix& a, const GenericMatrix& b) { return a * b - b * a; }

CharacteristicPolynomial trace_and_charpoly(const GenericMatrix& a) {
  const std::size_t n = a.size();
  const Field field = a.field();
  const auto p = field.characteristic();
  if (p != 0 && n >= p) {
    raise(ErrorCode::CharacteristicTooSmall,
          "Faddeev-LeVerrier divides by 1.." + std::to_string(n) + " but char = " + std::to_string(p));
  }
  CharacteristicPolynomial out;
  out.trace = trace(a.entries());
  out.coefficients.assign(n + 1, CommPoly(field));
  out.coefficients[n] = CommPoly(Scalar::one(field));
  const GenericMatrix id = GenericMatrix::identity(n, field);
  GenericMatrix m = GenericMatrix::zero(n, field);
  for (std::size_t k = 1; k <= n; ++k) {
    m = a * m;
    m = m + GenericMatrix(id.entries().map([&](const CommPoly& x) { return x * out.coefficients[n - k + 1]; }));
    CommPoly t = trace((a * m).entries());
    out.coefficients[n - k] = t.scaled(-Scalar(field, static_cast<long>(k)).inverse());
  }
  return out;
}

GenericMatrix evaluate_charpoly(const std::vector<CommPoly>& coefficients, const GenericMatrix& a) {
  const Field field = a.field();
  GenericMatrix acc = GenericMatrix::zero(a.size(), field);
  GenericMatrix power = GenericMatrix::identity(a.size(), field);
  for (std::size_t k = 0; k < coefficients.size(); ++k) {
    const CommPoly& c = coefficients[k];
    acc = acc + GenericMatrix(power.entries().map([&](const CommPoly& x) { return x * c; }));
    if (k + 1 < coefficients.size()) power = power * a;
  }
  return acc;
}

GenericMatrix standard_identity(const std::vector<GenericMatrix>& ms) {
  if (ms.empty()) raise(ErrorCode::InvalidSize, "standard identity needs arity >= 1");
  if (ms.size() > 20) raise(ErrorCode::InvalidSize, "standard identity arity too large");
  const std::size_t n = ms.front().size();
  const Field field = ms.front().field();
  for (const auto& m : ms) {
    if (m.size() != n) raise(ErrorCode::ShapeMismatch, "standard identity arguments differ in size");
    if (m.field() != field) raise(ErrorCode::FieldMismatch, "standard identity arguments differ in field");
  }
  // Expansion along the first factor: for an ordered subset T,
  //   S(T) = sum_{pos} (-1)^pos M_{T[pos]} S(T \ T[pos]),
  // evaluated bottom-up over subsets by popcount.
  const std::size_t k = ms.size();
  const std::uint32_t full = (std::uint32_t{1} << k) - 1;
  std::map<std::uint32_t, GenericMatrix> table;
  table.emplace(0u, GenericMatrix::identity(n, field));
  for (std::size_t size = 1; size <= k; ++size) {
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
      if (static_cast<std::size_t>(__builtin_popcount(mask)) != size) continue;
      GenericMatrix acc = GenericMatrix::zero(n, field);
      int pos = 0;
      for (std::size_t i = 0; i < k; ++i) {
        if (!(mask & (1u << i))) continue;
        GenericMatrix term = ms[i] * table.at(mask & ~(1u << i));
        acc = (pos % 2 == 0) ? acc + term : acc - term;
        ++pos;
      }
      table.emplace(mask, std::move(acc));
    }
    // Subsets two sizes below are no longer needed.
    if (size >= 2) {
      for (auto it = table.begin(); it != table.end();) {
        if (static_cast<std::size_t>(__builtin_popcount(it->first)) + 2 <= size) {
          it = table.erase(it);
        } else {
          ++it;
        }
      }
    }
  }
  return GenericMatrix(table.at(full).entries());
}

GenericMatrix matrix_unit(std::size_t n, std::size_t i, std::size_t j, Field field) {
  if (i == 0 || j == 0 || i > n || j > n) raise(ErrorCode::InvalidSize, "matrix unit index out of range");
  PolyMatrix m(n, n, CommPoly(field));
  m(i - 1, j - 1) = CommPoly(Scalar::one(field));
  return GenericMatrix(std::move(m));
}

AmitsurLevitzkiReport amitsur_levitzki_check(std::size_t n, Field field) {
  if (n == 0) raise(ErrorCode::InvalidSize, "matrix size must be at least 1");
  std::vector<GenericMatrix> witness;
  if (n == 1) {
    witness.push_back(matrix_unit(1, 1, 1, field));
  } else if (n == 2) {
    witness = {matrix_unit(2, 1, 1, field), matrix_unit(2, 1, 2, field), matrix_unit(2, 2, 1, field)};
  } else {
    for (std::size_t k = 1; k <= n; ++k) {
      witness.push_back(matrix_unit(n, k, k, field));
      if (k < n) witness.push_back(matrix_unit(n, k, k + 1, field));
    }
  }
  GenericMatrix value = standard_identity(make_generic(2 * n, n, field));
  GenericMatrix witness_value = standard_identity(witness);
  const bool vanishes = value.is_zero();
  const bool nonzero = !witness_value.is_zero();
  return {n, std::move(value), std::move(witness), std::move(witness_value), vanishes, nonzero};
}

}  // namespace bergq
