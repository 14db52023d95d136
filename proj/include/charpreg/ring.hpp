#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "charpreg/field.hpp"
#include "charpreg/monomial.hpp"

namespace charpreg {

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

// A polynomial ring F_p[x_1..x_n] with a fixed monomial order. Shared by
// pointer; all values built over it keep a reference. Immutable.
class Ring {
 public:
  static RingPtr make(std::uint32_t p, std::vector<std::string> vars,
                      MonomialOrder order) {
    return std::shared_ptr<const Ring>(
        new Ring(p, std::move(vars), std::move(order)));
  }

  static RingPtr make_grevlex(std::uint32_t p, std::vector<std::string> vars) {
    int n = static_cast<int>(vars.size());
    return make(p, std::move(vars), MonomialOrder::grevlex(n));
  }

  const PrimeField& field() const { return field_; }
  std::uint32_t p() const { return field_.p(); }
  int arity() const { return static_cast<int>(vars_.size()); }
  const std::vector<std::string>& var_names() const { return vars_; }
  const std::string& var_name(int i) const {
    return vars_.at(static_cast<std::size_t>(i));
  }
  std::optional<int> var_index(const std::string& name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (vars_[i] == name) return static_cast<int>(i);
    return std::nullopt;
  }
  const MonomialOrder& order() const { return order_; }

  bool same_as(const Ring& o) const {
    return this == &o ||
           (field_ == o.field_ && vars_ == o.vars_ && order_ == o.order_);
  }

 private:
  Ring(std::uint32_t p, std::vector<std::string> vars, MonomialOrder order)
      : field_(p), vars_(std::move(vars)), order_(std::move(order)) {
    if (vars_.empty()) throw UsageError("ring needs at least one variable");
    if (order_.arity() != arity())
      throw UsageError("order arity does not match variable count");
    for (std::size_t i = 0; i < vars_.size(); ++i)
      for (std::size_t j = i + 1; j < vars_.size(); ++j)
        if (vars_[i] == vars_[j])
          throw UsageError("duplicate variable name: " + vars_[i]);
  }

  PrimeField field_;
  std::vector<std::string> vars_;
  MonomialOrder order_;
};

inline void require_same_ring(const RingPtr& a, const RingPtr& b) {
  if (!a || !b || !a->same_as(*b))
    throw UsageError("ring context mismatch");
}

}  // namespace charpreg
