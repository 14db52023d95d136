#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "charpreg/ring.hpp"

namespace charpreg {

struct Term {
  Monomial mon;
  std::uint32_t coeff;  // in [1, p); zero coefficients never stored
};

// A polynomial over its ring: terms strictly descending in the ring's
// monomial order, no zero coefficients, empty list encodes 0. Immutable;
// every operation returns a fresh value in canonical form.
class Polynomial {
 public:
  // Normalizes: reduces coefficients, sorts, merges equal monomials,
  // drops zeros.
  Polynomial(RingPtr ring, std::vector<Term> terms);

  static Polynomial zero(RingPtr ring);
  static Polynomial constant(RingPtr ring, long long c);
  static Polynomial variable(RingPtr ring, int index, std::int32_t e = 1);
  static Polynomial from_monomial(RingPtr ring, Monomial m, long long c = 1);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int term_count() const { return static_cast<int>(terms_.size()); }

  const Term& lead_term() const;
  const Monomial& lead_monomial() const;
  std::uint32_t lead_coeff() const;

  // Total degree; nullopt for the zero polynomial.
  std::optional<int> degree() const;
  bool is_homogeneous() const;
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mon.is_one());
  }

  Polynomial plus(const Polynomial& o) const;
  Polynomial minus(const Polynomial& o) const;
  Polynomial negated() const;
  Polynomial times(const Polynomial& o) const;
  Polynomial times_term(const Monomial& m, std::uint32_t c) const;
  Polynomial times_monomial(const Monomial& m) const;
  Polynomial scaled(std::uint32_t c) const;
  Polynomial monic() const;

  // Frobenius power f^(p^e): scales every exponent vector by p^e.
  Polynomial frobenius(unsigned e) const;

  std::string str() const;

  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

 private:
  Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  RingPtr ring_;
  std::vector<Term> terms_;
};

// Largest exponent appearing in any term; nullopt encodes the gauge of the
// zero polynomial (minus infinity), which is deliberately not an integer.
std::optional<int> gauge(const Polynomial& f);

Polynomial partial_derivative(const Polynomial& f, int var);

}  // namespace charpreg
