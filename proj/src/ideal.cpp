#include "charpreg/ideal.hpp"

#include <algorithm>

namespace charpreg {

namespace {

MonomialOrder order_with_arity(const MonomialOrder& like, int arity) {
  switch (like.kind()) {
    case OrderKind::lex:
      return MonomialOrder::lex(arity);
    case OrderKind::block:
      return MonomialOrder::block(arity, std::min(like.split(), arity - 1));
    case OrderKind::grevlex:
    default:
      return MonomialOrder::grevlex(arity);
  }
}

std::vector<Polynomial> first_coordinates(const std::vector<FreeVector>& syz) {
  std::vector<Polynomial> out;
  for (const auto& s : syz)
    if (!s.coord(0).is_zero()) out.push_back(s.coord(0));
  return out;
}

}  // namespace

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> gens)
    : ring_(std::move(ring)) {
  if (!ring_) throw UsageError("ideal needs a ring");
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    require_same_ring(ring_, g.ring());
    gens_.push_back(std::move(g));
  }
}

Ideal Ideal::unit(RingPtr ring) {
  Polynomial one = Polynomial::constant(ring, 1);
  return Ideal(std::move(ring), {std::move(one)});
}

bool Ideal::is_zero() const { return gens_.empty(); }

bool Ideal::is_unit() const {
  const auto& B = reduced_basis();
  return B.size() == 1 && B[0].is_constant() && !B[0].is_zero();
}

bool Ideal::is_homogeneous() const {
  return std::all_of(gens_.begin(), gens_.end(),
                     [](const Polynomial& g) { return g.is_homogeneous(); });
}

const std::vector<Polynomial>& Ideal::reduced_basis() const {
  if (!basis_) {
    if (gens_.empty())
      basis_.emplace();
    else
      basis_ = buchberger(gens_);
  }
  return *basis_;
}

bool Ideal::contains(const Polynomial& f) const {
  require_same_ring(ring_, f.ring());
  if (f.is_zero()) return true;
  if (is_zero()) return false;
  return normal_form(f, reduced_basis()).is_zero();
}

bool Ideal::contains(const Ideal& other) const {
  require_same_ring(ring_, other.ring_);
  return std::all_of(other.gens_.begin(), other.gens_.end(),
                     [&](const Polynomial& g) { return contains(g); });
}

bool Ideal::equals(const Ideal& other) const {
  require_same_ring(ring_, other.ring_);
  return reduced_basis() == other.reduced_basis();
}

Ideal Ideal::plus(const Ideal& other) const {
  require_same_ring(ring_, other.ring_);
  std::vector<Polynomial> gens = gens_;
  gens.insert(gens.end(), other.gens_.begin(), other.gens_.end());
  return Ideal(ring_, std::move(gens));
}

Ideal Ideal::plus(const Polynomial& f) const {
  std::vector<Polynomial> gens = gens_;
  gens.push_back(f);
  return Ideal(ring_, std::move(gens));
}

Ideal Ideal::bracket_power(unsigned e) const {
  std::vector<Polynomial> gens;
  gens.reserve(gens_.size());
  for (const auto& g : gens_) gens.push_back(g.frobenius(e));
  return Ideal(ring_, std::move(gens));
}

Ideal Ideal::colon(const Polynomial& f) const {
  require_same_ring(ring_, f.ring());
  if (f.is_zero()) throw UsageError("colon by the zero polynomial");
  if (is_zero()) return zero(ring_);
  if (contains(f)) return unit(ring_);  // r*f stays inside for every r
  std::vector<FreeVector> cols;
  cols.push_back(FreeVector::wrap(f));
  for (const auto& g : reduced_basis()) cols.push_back(FreeVector::wrap(g));
  std::vector<FreeVector> syz = syzygy_generators(cols);
  return Ideal(ring_, first_coordinates(syz));
}

Ideal Ideal::colon(const Ideal& other) const {
  require_same_ring(ring_, other.ring_);
  if (other.is_zero()) throw UsageError("colon by the zero ideal");
  std::optional<Ideal> acc;
  for (const auto& f : other.gens_) {
    Ideal part = colon(f);
    acc = acc ? acc->intersect(part) : std::move(part);
  }
  return acc ? *acc : unit(ring_);
}

Ideal Ideal::intersect(const Ideal& other) const {
  require_same_ring(ring_, other.ring_);
  if (is_zero() || other.is_zero()) return zero(ring_);
  if (is_unit()) return other;
  if (other.is_unit()) return *this;
  FreeModule rank2({0, 0});
  Polynomial one = Polynomial::constant(ring_, 1);
  Polynomial z = Polynomial::zero(ring_);
  std::vector<FreeVector> cols;
  cols.emplace_back(ring_, rank2, std::vector<Polynomial>{one, one});
  for (const auto& a : reduced_basis())
    cols.emplace_back(ring_, rank2, std::vector<Polynomial>{a, z});
  for (const auto& b : other.reduced_basis())
    cols.emplace_back(ring_, rank2, std::vector<Polynomial>{z, b});
  std::vector<FreeVector> syz = syzygy_generators(cols);
  return Ideal(ring_, first_coordinates(syz));
}

Ideal homogenize(const Ideal& I, const std::string& var_name) {
  const RingPtr& R = I.ring();
  if (R->var_index(var_name))
    throw UsageError("homogenizing variable collides with " + var_name);
  std::vector<std::string> vars = R->var_names();
  vars.push_back(var_name);
  int n = R->arity();
  RingPtr H = Ring::make(R->p(), std::move(vars),
                         order_with_arity(R->order(), n + 1));
  std::vector<Polynomial> gens;
  for (const auto& g : I.generators()) {
    int d = *g.degree();
    std::vector<Term> terms;
    terms.reserve(g.terms().size());
    for (const auto& t : g.terms()) {
      std::vector<std::int32_t> e = t.mon.exps();
      e.push_back(d - t.mon.degree());
      terms.push_back(Term{Monomial(std::move(e)), t.coeff});
    }
    gens.emplace_back(H, std::move(terms));
  }
  return Ideal(H, std::move(gens));
}

Ideal dehomogenize(const Ideal& I) {
  const RingPtr& R = I.ring();
  int n = R->arity();
  if (n < 2) throw UsageError("dehomogenizing needs at least two variables");
  std::vector<std::string> vars = R->var_names();
  vars.pop_back();
  RingPtr D = Ring::make(R->p(), std::move(vars),
                         order_with_arity(R->order(), n - 1));
  std::vector<Polynomial> gens;
  for (const auto& g : I.generators()) {
    std::vector<Term> terms;
    terms.reserve(g.terms().size());
    for (const auto& t : g.terms()) {
      std::vector<std::int32_t> e = t.mon.exps();
      e.pop_back();
      terms.push_back(Term{Monomial(std::move(e)), t.coeff});
    }
    gens.emplace_back(D, std::move(terms));
  }
  return Ideal(D, std::move(gens));
}

}  // namespace charpreg
