#include "charpreg/freemodule.hpp"

namespace charpreg {

FreeVector::FreeVector(RingPtr ring, FreeModule ambient)
    : ring_(std::move(ring)), ambient_(std::move(ambient)) {
  coords_.assign(static_cast<std::size_t>(ambient_.rank()),
                 Polynomial::zero(ring_));
}

FreeVector::FreeVector(RingPtr ring, FreeModule ambient,
                       std::vector<Polynomial> coords)
    : ring_(std::move(ring)),
      ambient_(std::move(ambient)),
      coords_(std::move(coords)) {
  if (static_cast<int>(coords_.size()) != ambient_.rank())
    throw UsageError("coordinate count does not match ambient rank");
  for (const auto& f : coords_) require_same_ring(ring_, f.ring());
}

FreeVector FreeVector::unit(RingPtr ring, const FreeModule& ambient, int pos) {
  FreeVector v(ring, ambient);
  v.coords_.at(static_cast<std::size_t>(pos)) = Polynomial::constant(ring, 1);
  return v;
}

FreeVector FreeVector::wrap(Polynomial f) {
  RingPtr R = f.ring();
  FreeVector v(R, FreeModule({0}));
  v.coords_[0] = std::move(f);
  return v;
}

bool FreeVector::is_zero() const {
  for (const auto& f : coords_)
    if (!f.is_zero()) return false;
  return true;
}

FreeVector FreeVector::plus(const FreeVector& o) const {
  require_same_ring(ring_, o.ring_);
  if (!(ambient_ == o.ambient_))
    throw UsageError("ambient module mismatch in vector sum");
  std::vector<Polynomial> out;
  out.reserve(coords_.size());
  for (std::size_t i = 0; i < coords_.size(); ++i)
    out.push_back(coords_[i].plus(o.coords_[i]));
  return FreeVector(ring_, ambient_, std::move(out));
}

FreeVector FreeVector::minus(const FreeVector& o) const {
  return plus(o.negated());
}

FreeVector FreeVector::negated() const {
  std::vector<Polynomial> out;
  out.reserve(coords_.size());
  for (const auto& f : coords_) out.push_back(f.negated());
  return FreeVector(ring_, ambient_, std::move(out));
}

FreeVector FreeVector::times_term(const Monomial& m, std::uint32_t c) const {
  std::vector<Polynomial> out;
  out.reserve(coords_.size());
  for (const auto& f : coords_) out.push_back(f.times_term(m, c));
  return FreeVector(ring_, ambient_, std::move(out));
}

FreeVector FreeVector::times_poly(const Polynomial& f) const {
  std::vector<Polynomial> out;
  out.reserve(coords_.size());
  for (const auto& g : coords_) out.push_back(g.times(f));
  return FreeVector(ring_, ambient_, std::move(out));
}

FreeVector FreeVector::scaled(std::uint32_t c) const {
  return times_term(Monomial::one(ring_->arity()), c);
}

FreeVector FreeVector::monic() const {
  auto l = lead();
  if (!l) return *this;
  return scaled(ring_->field().inv(l->coeff));
}

std::optional<FreeVector::Lead> FreeVector::lead() const {
  const MonomialOrder& ord = ring_->order();
  std::optional<Lead> best;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i].is_zero()) continue;
    const Term& t = coords_[i].lead_term();
    if (!best || ord.greater(t.mon, best->mon))
      best = Lead{static_cast<int>(i), t.mon, t.coeff};
  }
  return best;
}

std::optional<int> FreeVector::degree() const {
  std::optional<int> d;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i].is_zero()) continue;
    auto cd = coords_[i].degree();
    int total = *cd + ambient_.twist(static_cast<int>(i));
    if (!d)
      d = total;
    else if (*d != total)
      throw UsageError("degree of a non-homogeneous vector");
  }
  return d;
}

bool FreeVector::is_homogeneous() const {
  std::optional<int> d;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i].is_zero()) continue;
    if (!coords_[i].is_homogeneous()) return false;
    int total = *coords_[i].degree() + ambient_.twist(static_cast<int>(i));
    if (!d)
      d = total;
    else if (*d != total)
      return false;
  }
  return true;
}

bool FreeVector::operator==(const FreeVector& o) const {
  if (!(ambient_ == o.ambient_)) return false;
  for (std::size_t i = 0; i < coords_.size(); ++i)
    if (coords_[i] != o.coords_[i]) return false;
  return true;
}

GradedMap::GradedMap(RingPtr ring, FreeModule source, FreeModule target,
                     std::vector<FreeVector> columns)
    : ring_(std::move(ring)),
      source_(std::move(source)),
      target_(std::move(target)),
      columns_(std::move(columns)) {
  if (static_cast<int>(columns_.size()) != source_.rank())
    throw UsageError("column count does not match source rank");
  for (const auto& c : columns_) {
    require_same_ring(ring_, c.ring());
    if (!(c.ambient() == target_))
      throw UsageError("column ambient does not match target module");
  }
}

GradedMap GradedMap::from_columns(RingPtr ring, FreeModule target,
                                  std::vector<FreeVector> columns) {
  // Source twists read off the column degrees; zero columns get twist 0.
  std::vector<int> src;
  src.reserve(columns.size());
  for (const auto& c : columns) {
    if (!c.is_homogeneous())
      throw UsageError("graded map needs homogeneous columns");
    auto d = c.degree();
    src.push_back(d ? *d : 0);
  }
  return GradedMap(std::move(ring), FreeModule(std::move(src)),
                   std::move(target), std::move(columns));
}

bool GradedMap::is_zero() const {
  for (const auto& c : columns_)
    if (!c.is_zero()) return false;
  return true;
}

void GradedMap::validate_grading() const {
  for (int c = 0; c < cols(); ++c)
    for (int r = 0; r < rows(); ++r) {
      const Polynomial& f = entry(r, c);
      if (f.is_zero()) continue;
      int want = source_.twist(c) - target_.twist(r);
      if (!f.is_homogeneous() || *f.degree() != want)
        throw InvariantViolation(
            "graded map entry (" + std::to_string(r) + "," + std::to_string(c) +
            ") is not homogeneous of degree " + std::to_string(want));
    }
}

FreeVector GradedMap::apply(const FreeVector& v) const {
  if (v.rank() != cols()) throw UsageError("vector rank does not match map source");
  FreeVector out(ring_, target_);
  for (int c = 0; c < cols(); ++c) {
    if (v.coord(c).is_zero()) continue;
    out = out.plus(columns_[static_cast<std::size_t>(c)].times_poly(v.coord(c)));
  }
  return out;
}

GradedMap GradedMap::compose_after(const GradedMap& first) const {
  if (!(first.target() == source_))
    throw UsageError("composition type mismatch");
  std::vector<FreeVector> cols;
  cols.reserve(static_cast<std::size_t>(first.cols()));
  for (int c = 0; c < first.cols(); ++c) cols.push_back(apply(first.column(c)));
  return GradedMap(ring_, first.source(), target_, std::move(cols));
}

}  // namespace charpreg
