#include "charpreg/resolution.hpp"

#include <algorithm>

namespace charpreg {

GradedMap Resolution::map_at(int i) const {
  GradedMap m(ring, modules.at(static_cast<std::size_t>(i) + 1),
              modules.at(static_cast<std::size_t>(i)),
              maps.at(static_cast<std::size_t>(i)));
  m.validate_grading();
  return m;
}

std::vector<int> BettiTable::ranks() const {
  std::vector<int> out;
  out.reserve(twists.size());
  for (const auto& t : twists) out.push_back(static_cast<int>(t.size()));
  return out;
}

namespace {

// Raw mutable picture of the chain: twist lists per module and column-major
// entry matrices per map.
struct RawChain {
  RingPtr ring;
  std::vector<std::vector<int>> twists;
  std::vector<std::vector<std::vector<Polynomial>>> mats;  // mats[i][c][r]
};

RawChain to_raw(const Resolution& res) {
  RawChain raw;
  raw.ring = res.ring;
  for (const auto& m : res.modules) raw.twists.push_back(m.twists);
  for (const auto& cols : res.maps) {
    std::vector<std::vector<Polynomial>> mat;
    mat.reserve(cols.size());
    for (const auto& c : cols) {
      std::vector<Polynomial> col;
      col.reserve(static_cast<std::size_t>(c.rank()));
      for (int r = 0; r < c.rank(); ++r) col.push_back(c.coord(r));
      mat.push_back(std::move(col));
    }
    raw.mats.push_back(std::move(mat));
  }
  return raw;
}

void from_raw(RawChain&& raw, Resolution& res) {
  res.modules.clear();
  for (auto& t : raw.twists) res.modules.emplace_back(FreeModule{std::move(t)});
  res.maps.clear();
  for (std::size_t i = 0; i < raw.mats.size(); ++i) {
    std::vector<FreeVector> cols;
    cols.reserve(raw.mats[i].size());
    for (auto& col : raw.mats[i])
      cols.emplace_back(res.ring, res.modules[i], std::move(col));
    res.maps.push_back(std::move(cols));
  }
}

struct Pivot {
  std::size_t map, row, col;
  std::uint32_t unit;
};

bool find_pivot(const RawChain& raw, Pivot& out) {
  for (std::size_t i = 0; i < raw.mats.size(); ++i)
    for (std::size_t c = 0; c < raw.mats[i].size(); ++c)
      for (std::size_t r = 0; r < raw.mats[i][c].size(); ++r) {
        const Polynomial& e = raw.mats[i][c][r];
        if (!e.is_zero() && e.is_constant()) {
          out = Pivot{i, r, c, e.lead_coeff()};
          return true;
        }
      }
  return false;
}

void eliminate(RawChain& raw, const Pivot& p, const PolyNormalizer& nf) {
  const PrimeField& F = raw.ring->field();
  auto& B = raw.mats[p.map];
  std::uint32_t uinv = F.inv(p.unit);

  // Clear the pivot row with column operations; compensate in the next map.
  for (std::size_t c2 = 0; c2 < B.size(); ++c2) {
    if (c2 == p.col) continue;
    Polynomial e = B[c2][p.row];
    if (e.is_zero()) continue;
    Polynomial lam = e.scaled(uinv);
    for (std::size_t r = 0; r < B[c2].size(); ++r)
      B[c2][r] = nf(B[c2][r].minus(lam.times(B[p.col][r])));
    if (p.map + 1 < raw.mats.size())
      for (auto& w : raw.mats[p.map + 1])
        w[p.col] = nf(w[p.col].plus(lam.times(w[c2])));
  }

  // Clear the pivot column with row operations; compensate in the previous
  // map. Only the pivot column still has entries in these rows' crossings.
  for (std::size_t r2 = 0; r2 < B[p.col].size(); ++r2) {
    if (r2 == p.row) continue;
    Polynomial f = B[p.col][r2];
    if (f.is_zero()) continue;
    Polynomial mu = f.scaled(uinv);
    for (auto& col : B) col[r2] = nf(col[r2].minus(mu.times(col[p.row])));
    if (p.map > 0) {
      auto& A = raw.mats[p.map - 1];
      for (std::size_t r = 0; r < A[p.row].size(); ++r)
        A[p.row][r] = nf(A[p.row][r].plus(mu.times(A[r2][r])));
    }
  }

  if (p.map + 1 < raw.mats.size())
    for (const auto& w : raw.mats[p.map + 1])
      check_invariant(w[p.col].is_zero(),
                      "pivot cancellation left the next map nonzero");
  if (p.map > 0)
    for (const Polynomial& e : raw.mats[p.map - 1][p.row])
      check_invariant(e.is_zero(),
                      "pivot cancellation left the previous map nonzero");

  // Drop row p.row and column p.col of B, the matching row of the next map,
  // the matching column of the previous map, and the two basis twists.
  B.erase(B.begin() + static_cast<std::ptrdiff_t>(p.col));
  for (auto& col : B)
    col.erase(col.begin() + static_cast<std::ptrdiff_t>(p.row));
  if (p.map + 1 < raw.mats.size())
    for (auto& w : raw.mats[p.map + 1])
      w.erase(w.begin() + static_cast<std::ptrdiff_t>(p.col));
  if (p.map > 0)
    raw.mats[p.map - 1].erase(raw.mats[p.map - 1].begin() +
                              static_cast<std::ptrdiff_t>(p.row));
  raw.twists[p.map].erase(raw.twists[p.map].begin() +
                          static_cast<std::ptrdiff_t>(p.row));
  raw.twists[p.map + 1].erase(raw.twists[p.map + 1].begin() +
                              static_cast<std::ptrdiff_t>(p.col));
}

}  // namespace

void minimalize(Resolution& res, const PolyNormalizer& nf) {
  if (res.maps.empty()) return;
  RawChain raw = to_raw(res);
  Pivot p{};
  while (find_pivot(raw, p)) eliminate(raw, p, nf);
  // Trailing modules can shrink to rank zero; drop them.
  while (!raw.mats.empty() && raw.twists.back().empty()) {
    raw.mats.pop_back();
    raw.twists.pop_back();
  }
  from_raw(std::move(raw), res);
}

void minimalize(Resolution& res) {
  minimalize(res, [](const Polynomial& f) { return f; });
}

Resolution free_resolution(RingPtr ring, const FreeModule& target,
                           std::vector<FreeVector> presentation,
                           const ResolutionOptions& opts) {
  for (const auto& c : presentation) {
    require_same_ring(ring, c.ring());
    if (!(c.ambient() == target))
      throw UsageError("presentation columns not in the target module");
  }
  const int cap = opts.max_length > 0 ? opts.max_length : ring->arity() + 2;
  Resolution res;
  res.ring = ring;
  res.modules.push_back(target);
  std::vector<FreeVector> cur = minimal_generators(presentation, opts.gb);
  while (!cur.empty()) {
    check_invariant(res.length() < cap,
                    "free resolution exceeds the length bound");
    std::vector<int> tw;
    tw.reserve(cur.size());
    for (const auto& c : cur) tw.push_back(*c.degree());
    res.maps.push_back(cur);
    res.modules.emplace_back(FreeModule{std::move(tw)});
    std::vector<FreeVector> syz = syzygy_generators(res.maps.back(), opts.gb);
    cur = minimal_generators(syz, opts.gb);
  }
  minimalize(res);
  return res;
}

Resolution free_resolution(const Ideal& I, const ResolutionOptions& opts) {
  if (!I.is_homogeneous())
    throw UsageError("free resolution needs a homogeneous ideal");
  std::vector<FreeVector> cols;
  cols.reserve(I.generators().size());
  for (const auto& g : I.generators()) cols.push_back(FreeVector::wrap(g));
  return free_resolution(I.ring(), FreeModule{{0}}, std::move(cols), opts);
}

BettiTable betti(const Resolution& res) {
  BettiTable b;
  b.complete = res.complete;
  for (const auto& m : res.modules) {
    std::vector<int> t = m.twists;
    std::sort(t.begin(), t.end());
    b.twists.push_back(std::move(t));
  }
  return b;
}

int regularity(const BettiTable& b) {
  if (!b.complete)
    throw UsageError("regularity needs a complete resolution");
  bool seen = false;
  int reg = 0;
  for (std::size_t i = 0; i < b.twists.size(); ++i)
    for (int d : b.twists[i]) {
      int v = d - static_cast<int>(i);
      if (!seen || v > reg) reg = v;
      seen = true;
    }
  if (!seen) throw UsageError("regularity of the zero module");
  return reg;
}

std::vector<int> minimal_generator_degrees(const Ideal& I) {
  if (!I.is_homogeneous())
    throw UsageError("minimal generator degrees need a homogeneous ideal");
  std::vector<FreeVector> cols;
  for (const auto& g : I.generators()) cols.push_back(FreeVector::wrap(g));
  std::vector<int> out;
  for (const auto& v : minimal_generators(cols)) out.push_back(*v.degree());
  return out;
}

int regularity_of_quotient(const Ideal& I) {
  return regularity(betti(free_resolution(I)));
}

int regularity_of_ideal(const Ideal& I) {
  if (I.is_zero()) throw UsageError("regularity of the zero ideal");
  if (I.is_unit()) return 0;
  return regularity_of_quotient(I) + 1;
}

}  // namespace charpreg
