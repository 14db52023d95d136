#pragma once

#include <optional>
#include <string>
#include <vector>

#include "charpreg/groebner.hpp"
#include "charpreg/polynomial.hpp"

namespace charpreg {

// Ideal of the polynomial ring, held as a generator list with a cached
// reduced Groebner basis. The zero ideal has an empty basis.
class Ideal {
 public:
  Ideal(RingPtr ring, std::vector<Polynomial> gens);
  static Ideal zero(RingPtr ring) { return Ideal(std::move(ring), {}); }
  static Ideal unit(RingPtr ring);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }

  bool is_zero() const;
  bool is_unit() const;
  bool is_homogeneous() const;

  // Reduced Groebner basis in the ring's order: monic, minimal, tails
  // reduced. Computed once and cached. Empty for the zero ideal.
  const std::vector<Polynomial>& reduced_basis() const;

  bool contains(const Polynomial& f) const;
  bool contains(const Ideal& other) const;
  bool equals(const Ideal& other) const;

  Ideal plus(const Ideal& other) const;
  Ideal plus(const Polynomial& f) const;

  // Generator-wise q-th power image under x -> x^q, q = p^e.
  Ideal bracket_power(unsigned e) const;

  Ideal colon(const Polynomial& f) const;
  Ideal colon(const Ideal& other) const;
  Ideal intersect(const Ideal& other) const;

 private:
  RingPtr ring_;
  std::vector<Polynomial> gens_;
  mutable std::optional<std::vector<Polynomial>> basis_;
};

// Generator-wise homogenization with a fresh variable appended to the ring.
// The new variable name must not collide with an existing one.
Ideal homogenize(const Ideal& I, const std::string& var_name);

// Inverse direction: drop the last ring variable by setting it to 1.
Ideal dehomogenize(const Ideal& I);

}  // namespace charpreg
