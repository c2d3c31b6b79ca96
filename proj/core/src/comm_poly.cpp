#include "bergq/comm_poly.hpp"

#include <algorithm>
#include <ostream>

#include "bergq/error.hpp"
#include "bergq/expr_parser.hpp"

namespace bergq {

// ---------------------------------------------------------------------------
// CommMonomial

CommMonomial::CommMonomial(Variable v, std::uint32_t exponent) {
  if (exponent > 0) {
    factors_.emplace_back(v, exponent);
    degree_ = exponent;
  }
}

CommMonomial CommMonomial::from_factors(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end(),
            [](const Factor& a, const Factor& b) { return a.first < b.first; });
  CommMonomial m;
  for (const auto& [v, e] : factors) {
    if (e == 0) continue;
    if (!m.factors_.empty() && m.factors_.back().first == v) {
      m.factors_.back().second += e;
    } else {
      m.factors_.emplace_back(v, e);
    }
    m.degree_ += e;
  }
  return m;
}

std::uint32_t CommMonomial::exponent(Variable v) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), v,
                             [](const Factor& f, const Variable& x) { return f.first < x; });
  return it != factors_.end() && it->first == v ? it->second : 0;
}

bool CommMonomial::divides(const CommMonomial& other) const {
  for (const auto& [v, e] : factors_) {
    if (other.exponent(v) < e) return false;
  }
  return true;
}

CommMonomial CommMonomial::quotient_of(const CommMonomial& other) const {
  CommMonomial q;
  for (const auto& [v, e] : other.factors_) {
    std::uint32_t r = e - exponent(v);
    if (r > 0) {
      q.factors_.emplace_back(v, r);
      q.degree_ += r;
    }
  }
  return q;
}

CommMonomial CommMonomial::without(Variable v) const {
  CommMonomial q;
  for (const auto& f : factors_) {
    if (f.first == v) continue;
    q.factors_.push_back(f);
    q.degree_ += f.second;
  }
  return q;
}

CommMonomial operator*(const CommMonomial& a, const CommMonomial& b) {
  CommMonomial m;
  m.factors_.reserve(a.factors_.size() + b.factors_.size());
  auto i = a.factors_.begin();
  auto j = b.factors_.begin();
  while (i != a.factors_.end() || j != b.factors_.end()) {
    if (j == b.factors_.end() || (i != a.factors_.end() && i->first < j->first)) {
      m.factors_.push_back(*i++);
    } else if (i == a.factors_.end() || j->first < i->first) {
      m.factors_.push_back(*j++);
    } else {
      m.factors_.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  m.degree_ = a.degree_ + b.degree_;
  return m;
}

std::string CommMonomial::to_string() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (const auto& [v, e] : factors_) {
    if (!out.empty()) out += "*";
    out += v.to_string();
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

int grlex_compare(const CommMonomial& a, const CommMonomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  std::size_t k = 0;
  for (; k < fa.size() && k < fb.size(); ++k) {
    if (fa[k].first != fb[k].first) {
      // The monomial carrying the earlier variable is larger.
      return fa[k].first < fb[k].first ? 1 : -1;
    }
    if (fa[k].second != fb[k].second) return fa[k].second < fb[k].second ? -1 : 1;
  }
  if (k < fa.size()) return 1;
  if (k < fb.size()) return -1;
  return 0;
}

// ---------------------------------------------------------------------------
// CommPoly

CommPoly::CommPoly(const Scalar& constant) : field_(constant.field()) {
  if (!constant.is_zero()) terms_.emplace(CommMonomial(), constant);
}

CommPoly::CommPoly(Field field, Variable v) : field_(field) {
  terms_.emplace(CommMonomial(v), Scalar::one(field));
}

CommPoly::CommPoly(Field field, const CommMonomial& m, const Scalar& c) : field_(field) {
  if (c.field() != field) raise(ErrorCode::FieldMismatch, "coefficient over " + c.field().to_string());
  if (!c.is_zero()) terms_.emplace(m, c);
}

CommPoly CommPoly::parse(std::string_view text, Field field) {
  return detail::parse_expression<CommPoly>(
      text, [field](std::string_view name, std::size_t) { return CommPoly(field, Variable::parse(name)); },
      [field](const std::string& literal) { return CommPoly(Scalar::parse(field, literal)); });
}

void CommPoly::check_field(const CommPoly& other) const {
  if (field_ != other.field_) {
    raise(ErrorCode::FieldMismatch, "polynomials over " + field_.to_string() + " and " + other.field_.to_string());
  }
}

bool CommPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Scalar CommPoly::constant_term() const {
  auto it = terms_.find(CommMonomial());
  return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

long CommPoly::degree() const {
  return terms_.empty() ? -1 : static_cast<long>(terms_.begin()->first.degree());
}

long CommPoly::degree_in(Variable v) const {
  if (terms_.empty()) return -1;
  long d = 0;
  for (const auto& [m, c] : terms_) d = std::max<long>(d, m.exponent(v));
  return d;
}

std::set<Variable> CommPoly::variables() const {
  std::set<Variable> out;
  for (const auto& [m, c] : terms_) {
    for (const auto& f : m.factors()) out.insert(f.first);
  }
  return out;
}

Scalar CommPoly::coefficient(const CommMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

void CommPoly::add_term(const CommMonomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

CommPoly CommPoly::operator-() const {
  CommPoly out(field_);
  for (const auto& [m, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), m, -c);
  return out;
}

CommPoly& CommPoly::operator+=(const CommPoly& b) {
  check_field(b);
  for (const auto& [m, c] : b.terms_) add_term(m, c);
  return *this;
}

CommPoly& CommPoly::operator-=(const CommPoly& b) {
  check_field(b);
  for (const auto& [m, c] : b.terms_) add_term(m, -c);
  return *this;
}

CommPoly operator+(const CommPoly& a, const CommPoly& b) {
  CommPoly out = a;
  out += b;
  return out;
}

CommPoly operator-(const CommPoly& a, const CommPoly& b) {
  CommPoly out = a;
  out -= b;
  return out;
}

CommPoly operator*(const CommPoly& a, const CommPoly& b) {
  a.check_field(b);
  CommPoly out(a.field_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

CommPoly CommPoly::scaled(const Scalar& c) const {
  CommPoly out(field_);
  if (c.is_zero()) return out;
  for (const auto& [m, k] : terms_) out.terms_.emplace_hint(out.terms_.end(), m, k * c);
  return out;
}

CommPoly CommPoly::times_monomial(const CommMonomial& mono, const Scalar& c) const {
  CommPoly out(field_);
  if (c.is_zero()) return out;
  // Multiplying by a monomial preserves the term order.
  for (const auto& [m, k] : terms_) out.terms_.emplace_hint(out.terms_.end(), m * mono, k * c);
  return out;
}

CommPoly CommPoly::pow(unsigned e) const {
  CommPoly result = CommPoly(Scalar::one(field_));
  CommPoly base = *this;
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

std::string CommPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    bool neg = c.prints_negative();
    Scalar mag = neg ? -c : c;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    if (m.is_one()) {
      out += mag.to_string();
    } else if (mag.is_one()) {
      out += m.to_string();
    } else {
      out += mag.to_string() + "*" + m.to_string();
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const CommPoly& p) { return os << p.to_string(); }

// ---------------------------------------------------------------------------
// Free functions

CommPoly partial_derivative(const CommPoly& a, Variable v) {
  CommPoly out(a.field());
  for (const auto& [m, c] : a.terms()) {
    std::uint32_t e = m.exponent(v);
    if (e == 0) continue;
    std::vector<CommMonomial::Factor> factors = m.factors();
    for (auto& f : factors) {
      if (f.first == v) f.second -= 1;
    }
    out.add_term(CommMonomial::from_factors(std::move(factors)), c * Scalar(a.field(), static_cast<long>(e)));
  }
  return out;
}

Scalar evaluate(const CommPoly& a, const std::map<Variable, Scalar>& point) {
  Scalar total = Scalar::zero(a.field());
  for (const auto& [m, c] : a.terms()) {
    Scalar term = c;
    for (const auto& [v, e] : m.factors()) {
      auto it = point.find(v);
      if (it == point.end()) raise(ErrorCode::UnassignedVariable, "no value for " + v.to_string());
      for (std::uint32_t k = 0; k < e; ++k) term *= it->second;
    }
    total += term;
  }
  return total;
}

CommPoly substitute(const CommPoly& a, const std::map<Variable, CommPoly>& images) {
  CommPoly out(a.field());
  for (const auto& [m, c] : a.terms()) {
    CommPoly term(c);
    CommMonomial kept;
    for (const auto& [v, e] : m.factors()) {
      auto it = images.find(v);
      if (it == images.end()) {
        kept = kept * CommMonomial(v, e);
      } else {
        term *= it->second.pow(e);
      }
    }
    out += term.times_monomial(kept, Scalar::one(a.field()));
  }
  return out;
}

bool divide_exact(const CommPoly& a, const CommPoly& b, CommPoly& quotient) {
  if (b.is_zero()) raise(ErrorCode::DivisionByZero, "polynomial division by zero");
  CommPoly q(a.field());
  CommPoly r = a;
  const auto& lm = b.leading_monomial();
  const auto lc_inv = b.leading_coefficient().inverse();
  while (!r.is_zero()) {
    const auto& rm = r.leading_monomial();
    if (!lm.divides(rm)) return false;
    CommMonomial t = lm.quotient_of(rm);
    Scalar c = r.leading_coefficient() * lc_inv;
    q.add_term(t, c);
    r -= b.times_monomial(t, c);
  }
  quotient = std::move(q);
  return true;
}

namespace {

CommPoly monic(const CommPoly& a) {
  if (a.is_zero()) return a;
  return a.scaled(a.leading_coefficient().inverse());
}

// Coefficients of a as a univariate polynomial in v.
std::map<std::uint32_t, CommPoly> coefficients_in(const CommPoly& a, Variable v) {
  std::map<std::uint32_t, CommPoly> out;
  for (const auto& [m, c] : a.terms()) {
    auto [it, inserted] = out.try_emplace(m.exponent(v), CommPoly(a.field()));
    it->second.add_term(m.without(v), c);
  }
  return out;
}

CommPoly leading_coefficient_in(const CommPoly& a, Variable v) {
  auto coeffs = coefficients_in(a, v);
  return coeffs.rbegin()->second;
}

CommPoly content_in(const CommPoly& a, Variable v) {
  CommPoly g(a.field());
  for (const auto& [e, c] : coefficients_in(a, v)) {
    g = gcd(g, c);
    if (g.is_constant() && !g.is_zero()) break;
  }
  return g;
}

CommPoly exact_quotient(const CommPoly& a, const CommPoly& b) {
  CommPoly q;
  if (!divide_exact(a, b, q)) raise(ErrorCode::DivisionByZero, "internal: inexact division in gcd");
  return q;
}

CommPoly primitive_part_in(const CommPoly& a, Variable v) {
  if (a.is_zero()) return a;
  return exact_quotient(a, content_in(a, v));
}

// lc(b)^k * a reduced modulo b in v, for some k.
CommPoly pseudo_remainder(CommPoly r, const CommPoly& b, Variable v) {
  const long db = b.degree_in(v);
  const CommPoly lb = leading_coefficient_in(b, v);
  while (!r.is_zero() && r.degree_in(v) >= db) {
    const long dr = r.degree_in(v);
    CommPoly lr = leading_coefficient_in(r, v);
    r = r * lb - (lr * b).times_monomial(CommMonomial(v, static_cast<std::uint32_t>(dr - db)),
                                          Scalar::one(r.field()));
  }
  return r;
}

}  // namespace

CommPoly gcd(const CommPoly& a, const CommPoly& b) {
  if (a.field() != b.field()) raise(ErrorCode::FieldMismatch, "gcd over different fields");
  if (a.is_zero()) return monic(b);
  if (b.is_zero()) return monic(a);
  if (a.is_constant() || b.is_constant()) return CommPoly(Scalar::one(a.field()));

  auto va = a.variables();
  auto vb = b.variables();
  Variable v = std::min(*va.begin(), *vb.begin());
  if (a.degree_in(v) == 0) return gcd(a, content_in(b, v));
  if (b.degree_in(v) == 0) return gcd(content_in(a, v), b);

  CommPoly ca = content_in(a, v);
  CommPoly cb = content_in(b, v);
  CommPoly g = gcd(ca, cb);
  CommPoly p = exact_quotient(a, ca);
  CommPoly q = exact_quotient(b, cb);
  if (p.degree_in(v) < q.degree_in(v)) std::swap(p, q);
  for (;;) {
    CommPoly r = pseudo_remainder(p, q, v);
    if (r.is_zero()) break;
    if (r.degree_in(v) == 0) {
      q = CommPoly(Scalar::one(a.field()));
      break;
    }
    p = std::move(q);
    q = primitive_part_in(r, v);
  }
  return monic(g * primitive_part_in(q, v));
}

}  // namespace bergq
