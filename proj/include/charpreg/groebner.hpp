#pragma once

#include <span>
#include <vector>

#include "charpreg/freemodule.hpp"

namespace charpreg {

enum class SPairStrategy {
  normal,       // minimal S-degree first, ties by lcm order then indices
  input_order,  // pairs in creation order
};

struct GBOptions {
  SPairStrategy strategy = SPairStrategy::normal;
  // Product criterion (rank-1 inputs only; it is not valid for modules of
  // higher rank) and chain criterion. Syzygy extraction always runs with the
  // full pair set regardless of this flag.
  bool use_criteria = true;
  // 0 selects the default cap: CHARPREG_DEGREE_GUARD when set, otherwise
  // 8 * max input degree.
  long long degree_cap = 0;
};

// ---- polynomial level ----

// Full normal form of f against G: no remaining term is divisible by any
// lead term of G. Reducers are tried in list order. If `quotients` is given
// it receives one multiplier per element of G with
// f = sum quotients[i]*G[i] + remainder.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> G,
                       std::vector<Polynomial>* quotients = nullptr);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

// Reduced Groebner basis, monic, sorted ascending by lead term.
// Rejects an empty or all-zero generator list.
std::vector<Polynomial> buchberger(std::span<const Polynomial> gens,
                                   const GBOptions& opts = {});

bool is_groebner_basis(std::span<const Polynomial> G);

// ---- module level ----

// Result of a tracked module Groebner run over input columns f_1..f_m:
//   basis[j]   = sum_k cofactors[j][k] * f_k          (when tracked)
//   f_k        = sum_j input_in_basis[k][j] * basis[j]
struct ModuleGB {
  std::vector<FreeVector> basis;
  std::vector<std::vector<Polynomial>> cofactors;
  std::vector<std::vector<Polynomial>> input_in_basis;
  bool tracked = false;
};

ModuleGB module_groebner(std::span<const FreeVector> columns,
                         const GBOptions& opts = {}, bool track = false);

FreeVector module_normal_form(const FreeVector& v,
                              std::span<const FreeVector> basis,
                              std::vector<Polynomial>* quotients = nullptr);

// Syzygies of a reduced module GB (one per same-position pair, reduced
// against the basis). Vectors live in R^t with twists the basis degrees.
std::vector<FreeVector> schreyer_syzygies(std::span<const FreeVector> gb,
                                          const GBOptions& opts = {});

// Generating set of the syzygy module of arbitrary columns, pulled back
// through a tracked GB. Vectors live in R^m, m = columns.size(), with
// twists the column degrees. Zero columns yield unit-vector syzygies.
std::vector<FreeVector> syzygy_generators(std::span<const FreeVector> columns,
                                          const GBOptions& opts = {});

bool module_contains(std::span<const FreeVector> generators,
                     const FreeVector& v, const GBOptions& opts = {});

// Minimal generating subset of homogeneous columns (graded Nakayama):
// ascending by degree, a column is dropped when the earlier kept ones
// already generate it.
std::vector<FreeVector> minimal_generators(
    std::span<const FreeVector> columns, const GBOptions& opts = {});

long long resolve_degree_cap(int max_input_degree, const GBOptions& opts);

}  // namespace charpreg
