#include "charpreg/hypersurface.hpp"

#include <algorithm>

namespace charpreg {

HypersurfaceContext::HypersurfaceContext(RingPtr ring, Polynomial f)
    : ring_(std::move(ring)), f_(std::move(f)) {
  require_same_ring(ring_, f_.ring());
  if (f_.is_zero() || f_.is_constant())
    throw UsageError("hypersurface equation must be nonzero and nonconstant");
  if (!f_.is_homogeneous())
    throw UsageError("hypersurface equation must be homogeneous");
  f_ = f_.monic();
}

Polynomial HypersurfaceContext::reduce(const Polynomial& g) const {
  if (g.is_zero()) return g;
  std::vector<Polynomial> One{f_};
  return normal_form(g, One);
}

FreeVector HypersurfaceContext::reduce(const FreeVector& v) const {
  std::vector<Polynomial> coords;
  coords.reserve(static_cast<std::size_t>(v.rank()));
  for (int i = 0; i < v.rank(); ++i) coords.push_back(reduce(v.coord(i)));
  return FreeVector(v.ring(), v.ambient(), std::move(coords));
}

PolyNormalizer HypersurfaceContext::normalizer() const {
  Polynomial f = f_;
  return [f](const Polynomial& g) {
    if (g.is_zero()) return g;
    std::vector<Polynomial> One{f};
    return normal_form(g, One);
  };
}

namespace {

std::vector<FreeVector> adjoin_equation_columns(const HypersurfaceContext& S,
                                                std::span<const FreeVector> columns,
                                                const FreeModule& ambient) {
  std::vector<FreeVector> ext(columns.begin(), columns.end());
  for (int j = 0; j < ambient.rank(); ++j)
    ext.push_back(FreeVector::unit(S.ring(), ambient, j)
                      .times_poly(S.equation()));
  return ext;
}

int column_twist(const FreeVector& c) {
  return c.is_homogeneous() ? c.degree().value_or(0) : 0;
}

}  // namespace

std::vector<FreeVector> syzygy_generators_over(
    const HypersurfaceContext& S, std::span<const FreeVector> columns,
    const GBOptions& opts) {
  if (columns.empty()) return {};
  const RingPtr& R = columns[0].ring();
  require_same_ring(R, S.ring());
  const FreeModule ambient = columns[0].ambient();
  const std::size_t m = columns.size();

  std::vector<FreeVector> ext = adjoin_equation_columns(S, columns, ambient);
  std::vector<FreeVector> full = syzygy_generators(ext, opts);

  std::vector<int> twists;
  twists.reserve(m);
  for (const auto& c : columns) twists.push_back(column_twist(c));
  FreeModule src(std::move(twists));

  std::vector<FreeVector> out;
  for (const auto& s : full) {
    std::vector<Polynomial> coords;
    coords.reserve(m);
    for (std::size_t k = 0; k < m; ++k)
      coords.push_back(S.reduce(s.coord(static_cast<int>(k))));
    FreeVector w(R, src, std::move(coords));
    if (w.is_zero()) continue;
    bool seen = false;
    for (const auto& u : out)
      if (u == w) {
        seen = true;
        break;
      }
    if (!seen) out.push_back(std::move(w));
  }
  return out;
}

bool module_contains_over(const HypersurfaceContext& S,
                          std::span<const FreeVector> generators,
                          const FreeVector& v, const GBOptions& opts) {
  FreeVector r = S.reduce(v);
  if (r.is_zero()) return true;
  std::vector<FreeVector> ext =
      adjoin_equation_columns(S, generators, v.ambient());
  return module_contains(ext, r, opts);
}

std::vector<FreeVector> minimal_generators_over(
    const HypersurfaceContext& S, std::span<const FreeVector> columns,
    const GBOptions& opts) {
  std::vector<int> idx;
  for (std::size_t k = 0; k < columns.size(); ++k) {
    if (columns[k].is_zero()) continue;
    if (!columns[k].is_homogeneous())
      throw UsageError("minimal generators need homogeneous columns");
    idx.push_back(static_cast<int>(k));
  }
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    int da = *columns[static_cast<std::size_t>(a)].degree();
    int db = *columns[static_cast<std::size_t>(b)].degree();
    if (da != db) return da < db;
    return a < b;
  });
  std::vector<FreeVector> kept;
  for (int k : idx) {
    const FreeVector& c = columns[static_cast<std::size_t>(k)];
    if (!kept.empty() && module_contains_over(S, kept, c, opts)) continue;
    kept.push_back(c);
  }
  return kept;
}

PeriodicityReport detect_two_periodicity(const Resolution& res) {
  const int L = res.length();
  auto sorted_twists = [&](int i) {
    std::vector<int> t = res.modules[static_cast<std::size_t>(i)].twists;
    std::sort(t.begin(), t.end());
    return t;
  };
  for (int s = 0; s + 3 <= L; ++s) {
    std::vector<int> base = sorted_twists(s);
    std::vector<int> next = sorted_twists(s + 2);
    if (base.empty() || base.size() != next.size()) continue;
    int shift = next[0] - base[0];
    bool ok = true;
    for (int i = s; i + 2 <= L && ok; ++i) {
      std::vector<int> a = sorted_twists(i);
      std::vector<int> b = sorted_twists(i + 2);
      if (a.size() != b.size()) {
        ok = false;
        break;
      }
      for (std::size_t k = 0; k < a.size(); ++k)
        if (b[k] - a[k] != shift) {
          ok = false;
          break;
        }
    }
    if (ok) return PeriodicityReport{s, shift};
  }
  return PeriodicityReport{std::nullopt, 0};
}

PeriodicResolution resolve_over_hypersurface(const HypersurfaceContext& S,
                                             const FreeModule& target,
                                             std::vector<FreeVector> presentation,
                                             int steps,
                                             const ResolutionOptions& opts) {
  if (steps < 4) throw UsageError("hypersurface resolution needs steps >= 4");
  for (auto& c : presentation) {
    require_same_ring(S.ring(), c.ring());
    if (!(c.ambient() == target))
      throw UsageError("presentation columns not in the target module");
    c = S.reduce(c);
  }
  Resolution res;
  res.ring = S.ring();
  res.modules.push_back(target);
  std::vector<FreeVector> cur =
      minimal_generators_over(S, presentation, opts.gb);
  while (!cur.empty() && res.length() < steps) {
    std::vector<int> tw;
    tw.reserve(cur.size());
    for (const auto& c : cur) tw.push_back(*c.degree());
    res.maps.push_back(cur);
    res.modules.emplace_back(FreeModule{std::move(tw)});
    std::vector<FreeVector> syz =
        syzygy_generators_over(S, res.maps.back(), opts.gb);
    cur = minimal_generators_over(S, syz, opts.gb);
  }
  res.complete = cur.empty();
  minimalize(res, S.normalizer());
  PeriodicityReport period = detect_two_periodicity(res);
  return PeriodicResolution{std::move(res), period};
}

}  // namespace charpreg
