#pragma once

#include <optional>
#include <vector>

#include "charpreg/polynomial.hpp"

namespace charpreg {

// A graded free module, stored as its twist list: twists[i] = d means the
// i-th summand is R(-d). Rank is the list length.
struct FreeModule {
  std::vector<int> twists;

  FreeModule() = default;
  explicit FreeModule(std::vector<int> t) : twists(std::move(t)) {}
  static FreeModule free_of_rank(int r, int twist = 0) {
    return FreeModule(std::vector<int>(static_cast<std::size_t>(r), twist));
  }
  int rank() const { return static_cast<int>(twists.size()); }
  int twist(int i) const { return twists.at(static_cast<std::size_t>(i)); }
  bool operator==(const FreeModule& o) const { return twists == o.twists; }
};

// An element of a free module over the ring: one polynomial per coordinate.
// The ambient twists travel with the vector so degrees are well defined.
class FreeVector {
 public:
  FreeVector(RingPtr ring, FreeModule ambient);
  FreeVector(RingPtr ring, FreeModule ambient, std::vector<Polynomial> coords);
  static FreeVector unit(RingPtr ring, const FreeModule& ambient, int pos);
  static FreeVector wrap(Polynomial f);  // rank-1, twist 0

  const RingPtr& ring() const { return ring_; }
  const FreeModule& ambient() const { return ambient_; }
  int rank() const { return ambient_.rank(); }
  const Polynomial& coord(int i) const {
    return coords_.at(static_cast<std::size_t>(i));
  }
  const std::vector<Polynomial>& coords() const { return coords_; }
  bool is_zero() const;

  FreeVector plus(const FreeVector& o) const;
  FreeVector minus(const FreeVector& o) const;
  FreeVector negated() const;
  FreeVector times_term(const Monomial& m, std::uint32_t c) const;
  FreeVector times_poly(const Polynomial& f) const;
  FreeVector scaled(std::uint32_t c) const;
  FreeVector monic() const;  // lead coefficient 1 under TOP

  // Lead term under the term-over-position order: largest monomial in the
  // ring order wins, ties broken toward the lower position index.
  struct Lead {
    int pos;
    Monomial mon;
    std::uint32_t coeff;
  };
  std::optional<Lead> lead() const;

  // Degree of a homogeneous vector: deg(coord) + twist, equal across
  // coordinates. nullopt for zero.
  std::optional<int> degree() const;
  bool is_homogeneous() const;

  bool operator==(const FreeVector& o) const;

 private:
  RingPtr ring_;
  FreeModule ambient_;
  std::vector<Polynomial> coords_;
};

// A graded map between free modules, stored column-major: column c is the
// image of the c-th source basis vector inside the target. Every nonzero
// entry (r, c) must be homogeneous of degree source.twist(c) - target.twist(r).
class GradedMap {
 public:
  GradedMap(RingPtr ring, FreeModule source, FreeModule target,
            std::vector<FreeVector> columns);

  static GradedMap from_columns(RingPtr ring, FreeModule target,
                                std::vector<FreeVector> columns);

  const RingPtr& ring() const { return ring_; }
  const FreeModule& source() const { return source_; }
  const FreeModule& target() const { return target_; }
  int rows() const { return target_.rank(); }
  int cols() const { return source_.rank(); }
  const FreeVector& column(int c) const {
    return columns_.at(static_cast<std::size_t>(c));
  }
  const std::vector<FreeVector>& columns() const { return columns_; }
  const Polynomial& entry(int r, int c) const { return column(c).coord(r); }
  bool is_zero() const;

  // Throws InvariantViolation when an entry violates degree compatibility.
  void validate_grading() const;

  FreeVector apply(const FreeVector& v) const;
  GradedMap compose_after(const GradedMap& first) const;  // this . first

 private:
  RingPtr ring_;
  FreeModule source_;
  FreeModule target_;
  std::vector<FreeVector> columns_;
};

}  // namespace charpreg
