#pragma once

#include <string>
#include <utility>

#include "charpreg/hypersurface.hpp"

namespace charpreg {

// The 2x2 minors of [[x,y,z],[u,v,w]] over F_p[x,y,z,u,v,w] in grevlex,
// signed so every lead coefficient is 1:
//   g1 = y*u - x*v,  g2 = z*u - x*w,  g3 = z*v - y*w.
struct DeterminantalSetup {
  RingPtr ring;
  Polynomial g1, g2, g3;
};

DeterminantalSetup determinantal_setup(std::uint32_t p);

// h_j = x^j z^q u^(q-j) v^j - x^q y^j w^q for 0 <= j <= q, q = p^e.
Polynomial h_polynomial(const DeterminantalSetup& D, unsigned j, unsigned q);

// The ideal (g1, g2^q, g3^q), q = p^e.
Ideal frobenius_slice(const DeterminantalSetup& D, unsigned e);

// [h_0 .. h_(q-1), g3^q, g1]: the reduced basis the slice is expected to
// have, in the engine's output order.
std::vector<Polynomial> predicted_basis(const DeterminantalSetup& D, unsigned e);

// Columns in S(-2q)^2 spanning the syzygies of (g2^q, g3^q) over S = R/(g1):
// [y^j v^(q-j); -x^j u^(q-j)] for j = 0..q.
std::vector<FreeVector> predicted_first_syzygies(const DeterminantalSetup& D,
                                                 unsigned e);

// Columns in S(-3q)^(q+1) spanning the next syzygies: x e_i - u e_(i+1) and
// y e_i - v e_(i+1) for i = 0..q-1.
std::vector<FreeVector> predicted_second_syzygies(const DeterminantalSetup& D,
                                                  unsigned e);

// Closed-form shape of the minimal S-resolution of S/(g2^q, g3^q) with
// `steps` maps: 1, 2(-2q), (q+1)(-3q), then 2q ranks marching up by one.
BettiTable predicted_betti(unsigned q, int steps);

struct IdentityReport {
  unsigned q = 0;
  std::vector<std::pair<std::string, bool>> families;
  bool all_pass() const {
    for (const auto& f : families)
      if (!f.second) return false;
    return true;
  }
};

// Exercises the seven closed-form identity families behind the predicted
// basis and syzygies at q = p^e, checking each as an exact polynomial (or
// free-vector) identity.
IdentityReport verify_determinantal_identities(const DeterminantalSetup& D,
                                               unsigned e);

}  // namespace charpreg
