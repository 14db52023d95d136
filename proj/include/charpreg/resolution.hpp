#pragma once

#include <functional>
#include <vector>

#include "charpreg/freemodule.hpp"
#include "charpreg/ideal.hpp"

namespace charpreg {

struct ResolutionOptions {
  GBOptions gb;
  int max_length = -1;  // default arity + 2; exceeding it is an internal error
};

// A chain of graded free modules F_0 <- F_1 <- ... <- F_L with maps stored
// as column lists; maps[i] presents F_{i+1} -> F_i. `complete` is false for
// a chain truncated at a step cap rather than at vanishing syzygies.
struct Resolution {
  RingPtr ring;
  std::vector<FreeModule> modules;
  std::vector<std::vector<FreeVector>> maps;
  bool complete = true;

  int length() const { return static_cast<int>(maps.size()); }
  GradedMap map_at(int i) const;
};

struct BettiTable {
  std::vector<std::vector<int>> twists;  // twists[i]: shifts of F_i, ascending
  bool complete = true;

  int length() const { return static_cast<int>(twists.size()) - 1; }
  std::vector<int> ranks() const;
};

// Minimal graded free resolution of coker(columns: -> target). Runs until
// the syzygies vanish.
Resolution free_resolution(RingPtr ring, const FreeModule& target,
                           std::vector<FreeVector> presentation,
                           const ResolutionOptions& opts = {});

// Minimal graded free resolution of R/I for a homogeneous ideal.
Resolution free_resolution(const Ideal& I, const ResolutionOptions& opts = {});

using PolyNormalizer = std::function<Polynomial(const Polynomial&)>;

// Cancel unit pivots everywhere, shrinking adjacent modules in place until
// no map has a nonzero constant entry. The optional normalizer maps every
// produced entry to a canonical form (used by quotient-ring chains).
void minimalize(Resolution& res);
void minimalize(Resolution& res, const PolyNormalizer& nf);

BettiTable betti(const Resolution& res);

// max over the table of (twist - homological degree).
int regularity(const BettiTable& b);

std::vector<int> minimal_generator_degrees(const Ideal& I);
int regularity_of_quotient(const Ideal& I);
int regularity_of_ideal(const Ideal& I);

}  // namespace charpreg
