#include "bergq/random.hpp"

namespace bergq {

Scalar RandomSource::scalar(Field field, long bound) {
  long num = integer(-bound, bound);
  long den = integer(1, 4);
  return Scalar(field, mpz_class(num), field.is_rational() ? mpz_class(den) : mpz_class(1));
}

Scalar RandomSource::nonzero_scalar(Field field, long bound) {
  for (;;) {
    Scalar c = scalar(field, bound);
    if (!c.is_zero()) return c;
  }
}

CommPoly RandomSource::comm_poly(Field field, const std::vector<Variable>& vars, unsigned max_degree,
                                 unsigned max_terms) {
  CommPoly p(field);
  const auto terms = static_cast<unsigned>(integer(1, max_terms));
  for (unsigned t = 0; t < terms; ++t) {
    const auto degree = static_cast<unsigned>(integer(0, max_degree));
    std::vector<CommMonomial::Factor> factors;
    for (unsigned k = 0; k < degree; ++k) factors.emplace_back(vars[index(vars.size())], 1);
    p.add_term(CommMonomial::from_factors(std::move(factors)), nonzero_scalar(field));
  }
  return p;
}

FreePoly RandomSource::free_poly(Field field, std::size_t s, unsigned max_degree, unsigned max_terms) {
  FreePoly p(field, s);
  const auto terms = static_cast<unsigned>(integer(1, max_terms));
  for (unsigned t = 0; t < terms; ++t) {
    const auto length = static_cast<unsigned>(integer(0, max_degree));
    Word w;
    for (unsigned k = 0; k < length; ++k) w.push_back(static_cast<std::uint32_t>(integer(1, static_cast<long>(s))));
    p.add_term(w, nonzero_scalar(field));
  }
  return p;
}

Matrix<Scalar> RandomSource::integer_matrix(Field field, std::size_t n, long bound) {
  Matrix<Scalar> m(n, n, Scalar::zero(field));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = Scalar(field, integer(-bound, bound));
  }
  return m;
}

}  // namespace bergq
