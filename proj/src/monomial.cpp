#include "charpreg/monomial.hpp"

#include <algorithm>
#include <numeric>

namespace charpreg {

namespace {

void require_same_arity(const Monomial& a, const Monomial& b) {
  if (a.arity() != b.arity())
    throw UsageError("monomial arity mismatch: " + std::to_string(a.arity()) +
                     " vs " + std::to_string(b.arity()));
}

}  // namespace

Monomial::Monomial(std::vector<std::int32_t> exps) : exps_(std::move(exps)) {
  degree_ = 0;
  for (std::int32_t e : exps_) {
    if (e < 0) throw UsageError("negative exponent in monomial");
    degree_ += e;
  }
}

Monomial Monomial::one(int arity) {
  return Monomial(std::vector<std::int32_t>(static_cast<std::size_t>(arity), 0));
}

Monomial Monomial::variable(int arity, int index, std::int32_t e) {
  std::vector<std::int32_t> v(static_cast<std::size_t>(arity), 0);
  v.at(static_cast<std::size_t>(index)) = e;
  return Monomial(std::move(v));
}

Monomial Monomial::times(const Monomial& o) const {
  require_same_arity(*this, o);
  std::vector<std::int32_t> v(exps_);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] += o.exps_[i];
  return Monomial(std::move(v));
}

bool Monomial::divides(const Monomial& o) const {
  require_same_arity(*this, o);
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > o.exps_[i]) return false;
  return true;
}

Monomial Monomial::divided_by(const Monomial& o) const {
  require_same_arity(*this, o);
  std::vector<std::int32_t> v(exps_);
  for (std::size_t i = 0; i < v.size(); ++i) {
    v[i] -= o.exps_[i];
    if (v[i] < 0) throw UsageError("inexact monomial division");
  }
  return Monomial(std::move(v));
}

Monomial Monomial::pow(int k) const {
  if (k < 0) throw UsageError("negative monomial power");
  std::vector<std::int32_t> v(exps_);
  for (auto& e : v) e *= k;
  return Monomial(std::move(v));
}

std::int32_t Monomial::max_exponent() const {
  std::int32_t m = 0;
  for (std::int32_t e : exps_) m = std::max(m, e);
  return m;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  require_same_arity(a, b);
  std::vector<std::int32_t> v(a.exps_);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = std::max(v[i], b.exps_[i]);
  return Monomial(std::move(v));
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  require_same_arity(a, b);
  std::vector<std::int32_t> v(a.exps_);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = std::min(v[i], b.exps_[i]);
  return Monomial(std::move(v));
}

bool Monomial::coprime(const Monomial& a, const Monomial& b) {
  require_same_arity(a, b);
  for (std::size_t i = 0; i < a.exps_.size(); ++i)
    if (a.exps_[i] > 0 && b.exps_[i] > 0) return false;
  return true;
}

MonomialOrder MonomialOrder::grevlex(int arity) {
  std::vector<int> pr(static_cast<std::size_t>(arity));
  std::iota(pr.begin(), pr.end(), 0);
  return MonomialOrder(OrderKind::grevlex, std::move(pr), 0);
}

MonomialOrder MonomialOrder::lex(int arity) {
  std::vector<int> pr(static_cast<std::size_t>(arity));
  std::iota(pr.begin(), pr.end(), 0);
  return MonomialOrder(OrderKind::lex, std::move(pr), 0);
}

MonomialOrder MonomialOrder::block(int arity, int split) {
  if (split <= 0 || split >= arity)
    throw UsageError("block order split must lie strictly inside the variable range");
  std::vector<int> pr(static_cast<std::size_t>(arity));
  std::iota(pr.begin(), pr.end(), 0);
  return MonomialOrder(OrderKind::block, std::move(pr), split);
}

MonomialOrder MonomialOrder::with_priority(OrderKind kind,
                                           std::vector<int> priority,
                                           int split) {
  int n = static_cast<int>(priority.size());
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int i : priority) {
    if (i < 0 || i >= n || seen[static_cast<std::size_t>(i)])
      throw UsageError("priority sequence must be a permutation of the variables");
    seen[static_cast<std::size_t>(i)] = true;
  }
  if (kind == OrderKind::block && (split <= 0 || split >= n))
    throw UsageError("block order split must lie strictly inside the variable range");
  return MonomialOrder(kind, std::move(priority), kind == OrderKind::block ? split : 0);
}

// Grevlex on the priority slice [lo, hi): higher degree wins; on ties the
// last differing variable with the smaller exponent wins.
int MonomialOrder::compare_grevlex(const Monomial& a, const Monomial& b,
                                   int lo, int hi) const {
  long long da = 0, db = 0;
  for (int t = lo; t < hi; ++t) {
    da += a.exp(priority_[static_cast<std::size_t>(t)]);
    db += b.exp(priority_[static_cast<std::size_t>(t)]);
  }
  if (da != db) return da > db ? CMP_GT : CMP_LT;
  for (int t = hi - 1; t >= lo; --t) {
    int v = priority_[static_cast<std::size_t>(t)];
    std::int32_t d = a.exp(v) - b.exp(v);
    if (d != 0) return d < 0 ? CMP_GT : CMP_LT;
  }
  return CMP_EQ;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.arity() != arity() || b.arity() != arity())
    throw UsageError("monomial arity does not match order arity");
  switch (kind_) {
    case OrderKind::grevlex:
      return compare_grevlex(a, b, 0, arity());
    case OrderKind::lex: {
      for (int t = 0; t < arity(); ++t) {
        int v = priority_[static_cast<std::size_t>(t)];
        std::int32_t d = a.exp(v) - b.exp(v);
        if (d != 0) return d > 0 ? CMP_GT : CMP_LT;
      }
      return CMP_EQ;
    }
    case OrderKind::block: {
      int c = compare_grevlex(a, b, 0, split_);
      if (c != CMP_EQ) return c;
      return compare_grevlex(a, b, split_, arity());
    }
  }
  throw InvariantViolation("unreachable monomial order kind");
}

std::string MonomialOrder::name() const {
  switch (kind_) {
    case OrderKind::grevlex:
      return "grevlex";
    case OrderKind::lex:
      return "lex";
    case OrderKind::block:
      return "elim:" + std::to_string(split_);
  }
  return "?";
}

}  // namespace charpreg
