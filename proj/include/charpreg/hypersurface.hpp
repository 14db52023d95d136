#pragma once

#include <optional>
#include <span>

#include "charpreg/resolution.hpp"

namespace charpreg {

// The quotient S = R/(f) for a nonzero homogeneous nonconstant f, kept
// monic. Elements of S are represented by their normal form modulo f; all
// module arithmetic happens in R on those representatives.
class HypersurfaceContext {
 public:
  HypersurfaceContext(RingPtr ring, Polynomial f);

  const RingPtr& ring() const { return ring_; }
  const Polynomial& equation() const { return f_; }

  Polynomial reduce(const Polynomial& g) const;
  FreeVector reduce(const FreeVector& v) const;
  PolyNormalizer normalizer() const;

 private:
  RingPtr ring_;
  Polynomial f_;
};

// Syzygies over S of columns with reduced entries: lift to R, adjoin the
// columns f*e_j, take R-syzygies, drop the adjoined coordinates, reduce.
std::vector<FreeVector> syzygy_generators_over(
    const HypersurfaceContext& S, std::span<const FreeVector> columns,
    const GBOptions& opts = {});

bool module_contains_over(const HypersurfaceContext& S,
                          std::span<const FreeVector> generators,
                          const FreeVector& v, const GBOptions& opts = {});

std::vector<FreeVector> minimal_generators_over(
    const HypersurfaceContext& S, std::span<const FreeVector> columns,
    const GBOptions& opts = {});

struct PeriodicityReport {
  std::optional<int> start;  // first homological degree of the repeat
  int shift = 0;             // twist increase across one two-step period
};

// Ranks repeat with lag 2 and twists grow by a uniform shift from `start`
// on, judged over every window the chain length can certify.
PeriodicityReport detect_two_periodicity(const Resolution& res);

struct PeriodicResolution {
  Resolution res;
  PeriodicityReport period;
};

// Minimal graded free resolution of coker(columns) over S, truncated after
// `steps` maps. Each step takes minimal generators, so the chain is minimal
// as built; `res.complete` reports whether the syzygies actually stopped.
PeriodicResolution resolve_over_hypersurface(const HypersurfaceContext& S,
                                             const FreeModule& target,
                                             std::vector<FreeVector> presentation,
                                             int steps,
                                             const ResolutionOptions& opts = {});

}  // namespace charpreg
