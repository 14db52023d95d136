#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "charpreg/errors.hpp"

namespace charpreg {

// Comparison outcome, kept as int so callers can write `cmp < 0`.
constexpr int CMP_LT = -1;
constexpr int CMP_EQ = 0;
constexpr int CMP_GT = 1;

// A monomial in a fixed number of variables: an exponent vector with a
// cached total degree. Immutable.
class Monomial {
 public:
  explicit Monomial(std::vector<std::int32_t> exps);
  static Monomial one(int arity);
  static Monomial variable(int arity, int index, std::int32_t e = 1);

  int arity() const { return static_cast<int>(exps_.size()); }
  int degree() const { return degree_; }
  std::int32_t exp(int i) const { return exps_[static_cast<std::size_t>(i)]; }
  const std::vector<std::int32_t>& exps() const { return exps_; }
  bool is_one() const { return degree_ == 0; }

  Monomial times(const Monomial& o) const;
  bool divides(const Monomial& o) const;  // this | o
  Monomial divided_by(const Monomial& o) const;
  Monomial pow(int k) const;
  std::int32_t max_exponent() const;

  static Monomial lcm(const Monomial& a, const Monomial& b);
  static Monomial gcd(const Monomial& a, const Monomial& b);
  static bool coprime(const Monomial& a, const Monomial& b);

  bool operator==(const Monomial& o) const { return exps_ == o.exps_; }
  bool operator!=(const Monomial& o) const { return !(*this == o); }

 private:
  std::vector<std::int32_t> exps_;
  int degree_;
};

enum class OrderKind { grevlex, lex, block };

// A monomial order: one of grevlex, lex, or a two-block elimination order
// (grevlex within each block, first block dominant). The priority sequence
// permutes the variables; priority[0] is the largest variable.
class MonomialOrder {
 public:
  static MonomialOrder grevlex(int arity);
  static MonomialOrder lex(int arity);
  // Eliminates the first `split` variables of the priority sequence.
  static MonomialOrder block(int arity, int split);

  static MonomialOrder with_priority(OrderKind kind,
                                     std::vector<int> priority,
                                     int split = 0);

  OrderKind kind() const { return kind_; }
  int arity() const { return static_cast<int>(priority_.size()); }
  int split() const { return split_; }
  const std::vector<int>& priority() const { return priority_; }

  // Returns CMP_LT, CMP_EQ or CMP_GT for a vs b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const {
    return compare(a, b) < 0;
  }
  bool greater(const Monomial& a, const Monomial& b) const {
    return compare(a, b) > 0;
  }

  bool operator==(const MonomialOrder& o) const {
    return kind_ == o.kind_ && priority_ == o.priority_ && split_ == o.split_;
  }

  std::string name() const;

 private:
  MonomialOrder(OrderKind kind, std::vector<int> priority, int split)
      : kind_(kind), priority_(std::move(priority)), split_(split) {}

  int compare_grevlex(const Monomial& a, const Monomial& b, int lo,
                      int hi) const;

  OrderKind kind_;
  std::vector<int> priority_;
  int split_;
};

}  // namespace charpreg
