#pragma once

// Brute-force cross-checks for the test suite. Everything here avoids the
// Groebner machinery on purpose: membership and dimension counts go through
// dense F_p row reduction over enumerated monomial bases, powers through
// repeated squaring, Hilbert values through direct monomial counting.

#include <map>
#include <random>
#include <vector>

#include "charpreg/ideal.hpp"
#include "charpreg/resolution.hpp"

namespace oracle {

using charpreg::Ideal;
using charpreg::Monomial;
using charpreg::Polynomial;
using charpreg::PrimeField;
using charpreg::RingPtr;

inline void monomials_rec(int arity, int pos, int left,
                          std::vector<std::int32_t>& cur,
                          std::vector<Monomial>& out) {
  if (pos == arity - 1) {
    cur[static_cast<std::size_t>(pos)] = left;
    out.emplace_back(cur);
    return;
  }
  for (int e = left; e >= 0; --e) {
    cur[static_cast<std::size_t>(pos)] = e;
    monomials_rec(arity, pos + 1, left - e, cur, out);
  }
}

// Every monomial of total degree exactly d, in a fixed deterministic order.
inline std::vector<Monomial> monomials_of_degree(int arity, int d) {
  std::vector<Monomial> out;
  std::vector<std::int32_t> cur(static_cast<std::size_t>(arity), 0);
  monomials_rec(arity, 0, d, cur, out);
  return out;
}

inline unsigned long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  unsigned long long r = 1;
  for (int i = 1; i <= k; ++i)
    r = r * static_cast<unsigned long long>(n - k + i) /
        static_cast<unsigned long long>(i);
  return r;
}

inline int full_piece_dim(int arity, int d) {
  if (d < 0) return 0;
  return static_cast<int>(binomial(arity - 1 + d, arity - 1));
}

// Incremental row echelon accumulator over F_p.
class RowSpan {
 public:
  explicit RowSpan(const PrimeField& F) : F_(F) {}

  // Reduces r against the rows held so far; keeps it when independent.
  bool add(std::vector<std::uint32_t> r) {
    reduce_in_place(r);
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (r[c] == 0) continue;
      std::uint32_t inv = F_.inv(r[c]);
      for (auto& x : r) x = F_.mul(x, inv);
      pivots_[c] = rows_.size();
      rows_.push_back(std::move(r));
      return true;
    }
    return false;
  }

  bool contains(std::vector<std::uint32_t> r) const {
    reduce_in_place(r);
    for (auto x : r)
      if (x != 0) return false;
    return true;
  }

  int rank() const { return static_cast<int>(rows_.size()); }

 private:
  void reduce_in_place(std::vector<std::uint32_t>& r) const {
    for (const auto& [col, row] : pivots_) {
      std::uint32_t c = r[col];
      if (c == 0) continue;
      const auto& pivot = rows_[row];
      for (std::size_t k = col; k < r.size(); ++k)
        r[k] = F_.sub(r[k], F_.mul(c, pivot[k]));
    }
  }

  PrimeField F_;
  std::vector<std::vector<std::uint32_t>> rows_;
  std::map<std::size_t, std::size_t> pivots_;  // pivot column -> row index
};

// Coefficient row of a homogeneous f over the degree-d monomial basis.
inline std::vector<std::uint32_t> coeff_row(const Polynomial& f,
                                            const std::vector<Monomial>& basis) {
  std::vector<std::uint32_t> row(basis.size(), 0);
  for (const auto& t : f.terms()) {
    bool placed = false;
    for (std::size_t k = 0; k < basis.size(); ++k)
      if (basis[k] == t.mon) {
        row[k] = t.coeff;
        placed = true;
        break;
      }
    if (!placed) throw charpreg::UsageError("term outside the graded piece");
  }
  return row;
}

// Echelon span of the degree-d piece of the ideal generated by gens.
inline RowSpan ideal_piece(const RingPtr& R,
                           const std::vector<Polynomial>& gens, int d) {
  std::vector<Monomial> basis = monomials_of_degree(R->arity(), d);
  RowSpan span(R->field());
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    int dg = *g.degree();
    if (dg > d) continue;
    for (const auto& m : monomials_of_degree(R->arity(), d - dg))
      span.add(coeff_row(g.times_monomial(m), basis));
  }
  return span;
}

inline int ideal_piece_dim(const RingPtr& R,
                           const std::vector<Polynomial>& gens, int d) {
  return ideal_piece(R, gens, d).rank();
}

// Is the homogeneous f inside the span of the gens in its own degree?
inline bool graded_member(const Polynomial& f,
                          const std::vector<Polynomial>& gens) {
  if (f.is_zero()) return true;
  int d = *f.degree();
  RowSpan span = ideal_piece(f.ring(), gens, d);
  return span.contains(
      coeff_row(f, monomials_of_degree(f.ring()->arity(), d)));
}

// Brute Hilbert function of R/(gens) at degree d.
inline int quotient_piece_dim(const RingPtr& R,
                              const std::vector<Polynomial>& gens, int d) {
  return full_piece_dim(R->arity(), d) - ideal_piece_dim(R, gens, d);
}

// dim of the degree-d piece of (gens : f), by kernel counting: r of degree
// d lies in the colon exactly when r*f falls in the degree d + deg f piece
// of the ideal.
inline int colon_piece_dim(const RingPtr& R,
                           const std::vector<Polynomial>& gens,
                           const Polynomial& f, int d) {
  int df = *f.degree();
  std::vector<Monomial> big = monomials_of_degree(R->arity(), d + df);
  RowSpan span = ideal_piece(R, gens, d + df);
  int image = 0;
  for (const auto& m : monomials_of_degree(R->arity(), d))
    if (span.add(coeff_row(f.times_monomial(m), big))) ++image;
  return full_piece_dim(R->arity(), d) - image;
}

// f^n through repeated squaring; an independent path from exponent scaling.
inline Polynomial pow_naive(const Polynomial& f, unsigned long long n) {
  Polynomial r = Polynomial::constant(f.ring(), 1);
  Polynomial b = f;
  while (n > 0) {
    if (n & 1) r = r.times(b);
    n >>= 1;
    if (n) b = b.times(b);
  }
  return r;
}

// Count of degree-d monomials outside the lead-term ideal; equals the
// Hilbert function of R/I for a Groebner lead set.
inline int standard_monomial_count(const RingPtr& R,
                                   const std::vector<Monomial>& leads, int d) {
  int count = 0;
  for (const auto& m : monomials_of_degree(R->arity(), d)) {
    bool divisible = false;
    for (const auto& l : leads)
      if (l.divides(m)) {
        divisible = true;
        break;
      }
    if (!divisible) ++count;
  }
  return count;
}

// Alternating Betti sum: the Hilbert function a graded free chain with
// these shifts forces on its zeroth homology.
inline long long betti_hilbert_value(const charpreg::BettiTable& b, int arity,
                                     int d) {
  long long acc = 0;
  long long sign = 1;
  for (const auto& tw : b.twists) {
    for (int dj : tw) acc += sign * full_piece_dim(arity, d - dj);
    sign = -sign;
  }
  return acc;
}

// Deterministic random homogeneous polynomial with a handful of terms.
inline Polynomial random_homogeneous(const RingPtr& R, int degree, int terms,
                                     std::mt19937& rng) {
  std::vector<Monomial> basis = monomials_of_degree(R->arity(), degree);
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<charpreg::Term> ts;
    for (int k = 0; k < terms; ++k) {
      const Monomial& m = basis[rng() % basis.size()];
      std::uint32_t c = 1 + rng() % (R->p() - 1);
      ts.push_back(charpreg::Term{m, c});
    }
    Polynomial f(R, ts);
    if (!f.is_zero()) return f;
  }
  return Polynomial::from_monomial(R, basis[0], 1);
}

}  // namespace oracle
