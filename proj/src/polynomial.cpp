#include "charpreg/polynomial.hpp"

#include <algorithm>

namespace charpreg {

Polynomial::Polynomial(RingPtr ring, std::vector<Term> terms)
    : ring_(std::move(ring)) {
  if (!ring_) throw UsageError("polynomial needs a ring");
  const MonomialOrder& ord = ring_->order();
  for (auto& t : terms) {
    if (t.mon.arity() != ring_->arity())
      throw UsageError("term arity does not match ring");
    t.coeff %= ring_->p();
  }
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return ord.greater(a.mon, b.mon);
  });
  terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().mon == t.mon) {
      terms_.back().coeff = ring_->field().add(terms_.back().coeff, t.coeff);
      if (terms_.back().coeff == 0) terms_.pop_back();
    } else if (t.coeff != 0) {
      terms_.push_back(std::move(t));
    }
  }
}

Polynomial Polynomial::zero(RingPtr ring) { return Polynomial(std::move(ring)); }

Polynomial Polynomial::constant(RingPtr ring, long long c) {
  std::uint32_t r = ring->field().reduce(c);
  Polynomial f(ring);
  if (r != 0) f.terms_.push_back(Term{Monomial::one(ring->arity()), r});
  return f;
}

Polynomial Polynomial::variable(RingPtr ring, int index, std::int32_t e) {
  Monomial m = Monomial::variable(ring->arity(), index, e);
  Polynomial f(ring);
  f.terms_.push_back(Term{std::move(m), 1});
  return f;
}

Polynomial Polynomial::from_monomial(RingPtr ring, Monomial m, long long c) {
  std::uint32_t r = ring->field().reduce(c);
  if (m.arity() != ring->arity())
    throw UsageError("monomial arity does not match ring");
  Polynomial f(ring);
  if (r != 0) f.terms_.push_back(Term{std::move(m), r});
  return f;
}

const Term& Polynomial::lead_term() const {
  if (terms_.empty()) throw UsageError("zero polynomial has no lead term");
  return terms_.front();
}

const Monomial& Polynomial::lead_monomial() const { return lead_term().mon; }

std::uint32_t Polynomial::lead_coeff() const { return lead_term().coeff; }

std::optional<int> Polynomial::degree() const {
  if (terms_.empty()) return std::nullopt;
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mon.degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = terms_.front().mon.degree();
  for (const auto& t : terms_)
    if (t.mon.degree() != d) return false;
  return true;
}

// Merge two canonically sorted term lists.
Polynomial Polynomial::plus(const Polynomial& o) const {
  require_same_ring(ring_, o.ring_);
  const MonomialOrder& ord = ring_->order();
  const PrimeField& F = ring_->field();
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    int c = ord.compare(terms_[i].mon, o.terms_[j].mon);
    if (c > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      std::uint32_t s = F.add(terms_[i].coeff, o.terms_[j].coeff);
      if (s != 0) r.terms_.push_back(Term{terms_[i].mon, s});
      ++i;
      ++j;
    }
  }
  while (i < terms_.size()) r.terms_.push_back(terms_[i++]);
  while (j < o.terms_.size()) r.terms_.push_back(o.terms_[j++]);
  return r;
}

Polynomial Polynomial::negated() const {
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_)
    r.terms_.push_back(Term{t.mon, ring_->field().neg(t.coeff)});
  return r;
}

Polynomial Polynomial::minus(const Polynomial& o) const {
  return plus(o.negated());
}

Polynomial Polynomial::times_term(const Monomial& m, std::uint32_t c) const {
  c %= ring_->p();
  if (c == 0) return zero(ring_);
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_)
    r.terms_.push_back(Term{t.mon.times(m), ring_->field().mul(t.coeff, c)});
  return r;  // multiplying by a fixed monomial preserves the term order
}

Polynomial Polynomial::times_monomial(const Monomial& m) const {
  return times_term(m, 1);
}

Polynomial Polynomial::scaled(std::uint32_t c) const {
  return times_term(Monomial::one(ring_->arity()), c);
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  return scaled(ring_->field().inv(lead_coeff()));
}

Polynomial Polynomial::times(const Polynomial& o) const {
  require_same_ring(ring_, o.ring_);
  if (is_zero() || o.is_zero()) return zero(ring_);
  std::vector<Term> prod;
  prod.reserve(terms_.size() * o.terms_.size());
  const PrimeField& F = ring_->field();
  for (const auto& a : terms_)
    for (const auto& b : o.terms_)
      prod.push_back(Term{a.mon.times(b.mon), F.mul(a.coeff, b.coeff)});
  return Polynomial(ring_, std::move(prod));
}

Polynomial Polynomial::frobenius(unsigned e) const {
  // c^(p^e) = c in F_p, so only the exponent vectors scale.
  long long q = 1;
  for (unsigned k = 0; k < e; ++k) {
    q *= ring_->p();
    if (q > (1LL << 30)) throw GuardAbort("frobenius power exponent overflow");
  }
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_)
    r.terms_.push_back(Term{t.mon.pow(static_cast<int>(q)), t.coeff});
  return r;  // m -> m^q preserves the term order
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (!ring_->same_as(*o.ring_)) return false;
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].coeff != o.terms_[i].coeff || terms_[i].mon != o.terms_[i].mon)
      return false;
  return true;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    if (k) s += " + ";
    const Term& t = terms_[k];
    bool printed = false;
    if (t.coeff != 1 || t.mon.is_one()) {
      s += std::to_string(t.coeff);
      printed = true;
    }
    for (int i = 0; i < t.mon.arity(); ++i) {
      if (t.mon.exp(i) == 0) continue;
      if (printed) s += "*";
      s += ring_->var_name(i);
      if (t.mon.exp(i) > 1) s += "^" + std::to_string(t.mon.exp(i));
      printed = true;
    }
  }
  return s;
}

std::optional<int> gauge(const Polynomial& f) {
  if (f.is_zero()) return std::nullopt;
  int g = 0;
  for (const auto& t : f.terms())
    g = std::max(g, static_cast<int>(t.mon.max_exponent()));
  return g;
}

Polynomial partial_derivative(const Polynomial& f, int var) {
  const RingPtr& R = f.ring();
  if (var < 0 || var >= R->arity())
    throw UsageError("derivative variable out of range");
  std::vector<Term> out;
  for (const auto& t : f.terms()) {
    std::int32_t e = t.mon.exp(var);
    if (e == 0) continue;
    std::uint32_t c = R->field().mul(t.coeff, R->field().reduce(e));
    if (c == 0) continue;
    std::vector<std::int32_t> v = t.mon.exps();
    v[static_cast<std::size_t>(var)] -= 1;
    out.push_back(Term{Monomial(std::move(v)), c});
  }
  return Polynomial(R, std::move(out));
}

}  // namespace charpreg
