#include "charpreg/determinantal.hpp"

namespace charpreg {

namespace {

unsigned q_from(std::uint32_t p, unsigned e) {
  return static_cast<unsigned>(prime_power_checked(p, e));
}

Monomial mono(int ax, int ay, int az, int au, int av, int aw) {
  return Monomial({ax, ay, az, au, av, aw});
}

}  // namespace

DeterminantalSetup determinantal_setup(std::uint32_t p) {
  RingPtr R = Ring::make_grevlex(p, {"x", "y", "z", "u", "v", "w"});
  auto minor = [&](Monomial pos, Monomial neg) {
    return Polynomial(R, {Term{std::move(pos), 1},
                          Term{std::move(neg), R->field().neg(1)}});
  };
  Polynomial g1 = minor(mono(0, 1, 0, 1, 0, 0), mono(1, 0, 0, 0, 1, 0));
  Polynomial g2 = minor(mono(0, 0, 1, 1, 0, 0), mono(1, 0, 0, 0, 0, 1));
  Polynomial g3 = minor(mono(0, 0, 1, 0, 1, 0), mono(0, 1, 0, 0, 0, 1));
  return DeterminantalSetup{R, std::move(g1), std::move(g2), std::move(g3)};
}

Polynomial h_polynomial(const DeterminantalSetup& D, unsigned j, unsigned q) {
  if (j > q) throw UsageError("h_j needs j <= q");
  int ji = static_cast<int>(j), qi = static_cast<int>(q);
  return Polynomial(
      D.ring, {Term{mono(ji, 0, qi, qi - ji, ji, 0), 1},
               Term{mono(qi, ji, 0, 0, 0, qi), D.ring->field().neg(1)}});
}

Ideal frobenius_slice(const DeterminantalSetup& D, unsigned e) {
  return Ideal(D.ring, {D.g1, D.g2.frobenius(e), D.g3.frobenius(e)});
}

std::vector<Polynomial> predicted_basis(const DeterminantalSetup& D,
                                        unsigned e) {
  unsigned q = q_from(D.ring->p(), e);
  std::vector<Polynomial> out;
  out.reserve(q + 2);
  for (unsigned j = 0; j < q; ++j) out.push_back(h_polynomial(D, j, q));
  out.push_back(D.g3.frobenius(e));
  out.push_back(D.g1);
  return out;
}

std::vector<FreeVector> predicted_first_syzygies(const DeterminantalSetup& D,
                                                 unsigned e) {
  unsigned q = q_from(D.ring->p(), e);
  int qi = static_cast<int>(q);
  const RingPtr& R = D.ring;
  FreeModule amb({2 * qi, 2 * qi});
  std::vector<FreeVector> out;
  for (unsigned j = 0; j <= q; ++j) {
    int ji = static_cast<int>(j);
    Polynomial a = Polynomial::from_monomial(R, mono(0, ji, 0, 0, qi - ji, 0));
    Polynomial b = Polynomial::from_monomial(R, mono(ji, 0, 0, qi - ji, 0, 0),
                                             -1);
    out.emplace_back(R, amb, std::vector<Polynomial>{std::move(a), std::move(b)});
  }
  return out;
}

std::vector<FreeVector> predicted_second_syzygies(const DeterminantalSetup& D,
                                                  unsigned e) {
  unsigned q = q_from(D.ring->p(), e);
  int qi = static_cast<int>(q);
  const RingPtr& R = D.ring;
  FreeModule amb(std::vector<int>(q + 1, 3 * qi));
  Polynomial x = Polynomial::variable(R, 0);
  Polynomial y = Polynomial::variable(R, 1);
  Polynomial u = Polynomial::variable(R, 3);
  Polynomial v = Polynomial::variable(R, 4);
  std::vector<FreeVector> out;
  for (unsigned i = 0; i < q; ++i) {
    int ii = static_cast<int>(i);
    FreeVector ei = FreeVector::unit(R, amb, ii);
    FreeVector en = FreeVector::unit(R, amb, ii + 1);
    out.push_back(ei.times_poly(x).minus(en.times_poly(u)));
    out.push_back(ei.times_poly(y).minus(en.times_poly(v)));
  }
  return out;
}

BettiTable predicted_betti(unsigned q, int steps) {
  int qi = static_cast<int>(q);
  BettiTable b;
  b.complete = false;
  b.twists.push_back({0});
  if (steps >= 1) b.twists.push_back({2 * qi, 2 * qi});
  if (steps >= 2)
    b.twists.emplace_back(std::vector<int>(q + 1, 3 * qi));
  for (int i = 3; i <= steps; ++i)
    b.twists.emplace_back(std::vector<int>(2 * q, 3 * qi + i - 2));
  return b;
}

IdentityReport verify_determinantal_identities(const DeterminantalSetup& D,
                                               unsigned e) {
  const RingPtr& R = D.ring;
  unsigned q = q_from(R->p(), e);
  int qi = static_cast<int>(q);
  IdentityReport rep;
  rep.q = q;

  std::vector<Polynomial> G = predicted_basis(D, e);
  Polynomial g3q = D.g3.frobenius(e);
  Polynomial g2q = D.g2.frobenius(e);
  auto H = [&](unsigned j) { return h_polynomial(D, j, q); };
  auto term = [&](Monomial m, long long c = 1) {
    return Polynomial::from_monomial(R, std::move(m), c);
  };
  auto reduces_to_zero = [&](const Polynomial& f) {
    return normal_form(f, G).is_zero();
  };

  // S(h_j, h_i) telescopes to an explicit multiple of g1.
  bool ok = true;
  for (unsigned j = 1; j < q && ok; ++j)
    for (unsigned i = 0; i < j && ok; ++i) {
      int d = static_cast<int>(j - i), ii = static_cast<int>(i),
          ji = static_cast<int>(j);
      Polynomial S = s_polynomial(H(j), H(i));
      Polynomial lhs = H(j).times(term(mono(0, 0, 0, d, 0, 0)))
                           .minus(H(i).times(term(mono(d, 0, 0, 0, d, 0))));
      Polynomial closed =
          term(mono(qi, 0, 0, 0, 0, qi))
              .times(term(mono(d, ii, 0, 0, d, 0))
                         .minus(term(mono(0, ji, 0, d, 0, 0))));
      Polynomial tele = Polynomial::zero(R);
      for (int k = 1; k <= d; ++k)
        tele = tele.plus(term(mono(k - 1, ji - k, 0, d - k, k - 1, 0)));
      Polynomial viaG = term(mono(qi, 0, 0, 0, 0, qi), -1).times(tele).times(D.g1);
      ok = S == lhs && S == closed && S == viaG && reduces_to_zero(S);
    }
  rep.families.emplace_back("spair_hh_telescope", ok);

  // S(h_j, g3^q) is a w^q-weighted multiple of g1.
  ok = true;
  for (unsigned j = 0; j < q && ok; ++j) {
    int ji = static_cast<int>(j);
    Polynomial S = s_polynomial(H(j), g3q);
    Polynomial lhs = H(j).times(term(mono(0, 0, 0, 0, qi - ji, 0)))
                         .minus(g3q.times(term(mono(ji, 0, 0, qi - ji, 0, 0))));
    Polynomial tele = Polynomial::zero(R);
    for (int k = 1; k <= qi - ji; ++k)
      tele = tele.plus(term(mono(ji - 1 + k, qi - k, 0, qi - ji - k, k - 1, 0)));
    Polynomial viaG = term(mono(0, 0, 0, 0, 0, qi)).times(tele).times(D.g1);
    ok = S == lhs && S == viaG && reduces_to_zero(S);
  }
  rep.families.emplace_back("spair_h_g3q", ok);

  // S(h_j, g1) steps the ladder: it equals h_(j+1).
  ok = true;
  for (unsigned j = 0; j + 2 <= q && ok; ++j) {
    int ji = static_cast<int>(j);
    Polynomial S = s_polynomial(H(j), D.g1);
    Polynomial lhs =
        H(j).times(term(mono(0, 1, 0, 0, 0, 0)))
            .minus(D.g1.times(term(mono(ji, 0, qi, qi - ji - 1, ji, 0))));
    ok = S == lhs && S == H(j + 1) && reduces_to_zero(S);
  }
  rep.families.emplace_back("spair_h_g1_step", ok);

  // The top rung lands on x^q g3^q.
  {
    Polynomial S = s_polynomial(H(q - 1), D.g1);
    ok = S == g3q.times(term(mono(qi, 0, 0, 0, 0, 0))) && reduces_to_zero(S);
    rep.families.emplace_back("spair_h_g1_top", ok);
  }

  // Coprime leads: S(g3^q, g1) written out, and it reduces to zero.
  {
    Polynomial S = s_polynomial(g3q, D.g1);
    Polynomial lhs = g3q.times(term(mono(0, 1, 0, 1, 0, 0)))
                         .minus(D.g1.times(term(mono(0, 0, qi, 0, qi, 0))));
    ok = S == lhs && reduces_to_zero(S);
    rep.families.emplace_back("spair_g3q_g1", ok);
  }

  // h_j = y^j g2^q - c_j g1 with the explicit staircase cofactor c_j.
  ok = true;
  for (unsigned j = 0; j <= q && ok; ++j) {
    int ji = static_cast<int>(j);
    Polynomial c = Polynomial::zero(R);
    for (int k = 0; k < ji; ++k)
      c = c.plus(term(mono(k, ji - 1 - k, qi, qi - k - 1, k, 0)));
    Polynomial rhs =
        g2q.times(term(mono(0, ji, 0, 0, 0, 0))).minus(c.times(D.g1));
    ok = H(j) == rhs;
  }
  rep.families.emplace_back("factor_through_g2q", ok);

  // Two telescopes: a g1-multiple collapsing to a binomial, and the matching
  // free-vector identity over the ladder columns x e_i - u e_(i+1).
  ok = true;
  for (unsigned j = 1; j <= q && ok; ++j)
    for (unsigned i = 0; i < j && ok; ++i) {
      int d = static_cast<int>(j - i), ii = static_cast<int>(i),
          ji = static_cast<int>(j);
      Polynomial tele = Polynomial::zero(R);
      for (int k = 1; k <= d; ++k)
        tele = tele.plus(term(mono(k - 1, ji - k, 0, d - k, qi - ji + k - 1, 0)));
      Polynomial rhs = term(mono(0, ji, 0, d, qi - ji, 0))
                           .minus(term(mono(d, ii, 0, 0, qi - ii, 0)));
      ok = tele.times(D.g1) == rhs;
    }
  if (ok) {
    FreeModule amb(std::vector<int>(q + 1, 0));
    Polynomial x = Polynomial::variable(R, 0);
    Polynomial u = Polynomial::variable(R, 3);
    auto W = [&](int t) {
      return FreeVector::unit(R, amb, t).times_poly(x).minus(
          FreeVector::unit(R, amb, t + 1).times_poly(u));
    };
    for (unsigned j = 1; j <= q && ok; ++j)
      for (unsigned i = 0; i < j && ok; ++i) {
        int d = static_cast<int>(j - i), ii = static_cast<int>(i),
            ji = static_cast<int>(j);
        FreeVector lhs =
            FreeVector::unit(R, amb, ji)
                .times_poly(term(mono(0, 0, 0, d, 0, 0)))
                .minus(FreeVector::unit(R, amb, ii)
                           .times_poly(term(mono(d, 0, 0, 0, 0, 0))));
        FreeVector sum(R, amb);
        for (int k = 1; k <= d; ++k)
          sum = sum.plus(W(ji - k).times_poly(
              term(mono(k - 1, 0, 0, d - k, 0, 0))));
        ok = lhs == sum.negated();
      }
  }
  rep.families.emplace_back("syzygy_telescope", ok);

  return rep;
}

}  // namespace charpreg
