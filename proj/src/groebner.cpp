#include "charpreg/groebner.hpp"

#include <algorithm>
#include <climits>
#include <cstdlib>
#include <set>

namespace charpreg {

namespace {

struct Reducer {
  const FreeVector* v;
  FreeVector::Lead lead;
};

std::vector<Reducer> reducers_of(std::span<const FreeVector> basis) {
  std::vector<Reducer> out;
  out.reserve(basis.size());
  for (const auto& g : basis) {
    auto l = g.lead();
    if (l) out.push_back(Reducer{&g, *l});
  }
  return out;
}

// Full division: returns the remainder, no term of which is divisible by a
// reducer lead in the same position. quot_terms (when given) is sized to the
// reducer list and accumulates the multipliers.
FreeVector divide_full(const FreeVector& v, const std::vector<Reducer>& red,
                       std::vector<std::vector<Term>>* quot_terms,
                       long long degree_cap) {
  const RingPtr& R = v.ring();
  const PrimeField& F = R->field();
  if (quot_terms) quot_terms->assign(red.size(), {});
  FreeVector h = v;
  std::vector<std::vector<Term>> rem(static_cast<std::size_t>(v.rank()));
  while (true) {
    auto t = h.lead();
    if (!t) break;
    long long tdeg = t->mon.degree() + v.ambient().twist(t->pos);
    if (tdeg > degree_cap)
      throw GuardAbort("degree guard exceeded: working term of degree " +
                       std::to_string(tdeg) + " over cap " +
                       std::to_string(degree_cap));
    bool reduced = false;
    for (std::size_t k = 0; k < red.size(); ++k) {
      const Reducer& b = red[k];
      if (b.lead.pos != t->pos || !b.lead.mon.divides(t->mon)) continue;
      Monomial mu = t->mon.divided_by(b.lead.mon);
      std::uint32_t c = F.mul(t->coeff, F.inv(b.lead.coeff));
      h = h.minus(b.v->times_term(mu, c));
      if (quot_terms) (*quot_terms)[k].push_back(Term{std::move(mu), c});
      reduced = true;
      break;
    }
    if (!reduced) {
      rem[static_cast<std::size_t>(t->pos)].push_back(Term{t->mon, t->coeff});
      std::vector<Polynomial> cs(static_cast<std::size_t>(v.rank()),
                                 Polynomial::zero(R));
      cs[static_cast<std::size_t>(t->pos)] =
          Polynomial::from_monomial(R, t->mon, t->coeff);
      h = h.minus(FreeVector(R, v.ambient(), std::move(cs)));
    }
  }
  std::vector<Polynomial> coords;
  coords.reserve(rem.size());
  for (auto& terms : rem) coords.push_back(Polynomial(R, std::move(terms)));
  return FreeVector(R, v.ambient(), std::move(coords));
}

std::vector<Polynomial> quotients_from_terms(
    const RingPtr& R, std::vector<std::vector<Term>>&& qt) {
  std::vector<Polynomial> out;
  out.reserve(qt.size());
  for (auto& terms : qt) out.push_back(Polynomial(R, std::move(terms)));
  return out;
}

struct WorkElem {
  FreeVector v;
  FreeVector::Lead lead;
  std::vector<Polynomial> cof;  // expression in the input columns
};

struct SPair {
  int i, j;
  int pos;
  Monomial lcm;
  long long sdeg;
  long long seq;
};

int column_degree_proxy(const FreeVector& v) {
  int d = 0;
  for (int i = 0; i < v.rank(); ++i) {
    if (v.coord(i).is_zero()) continue;
    d = std::max(d, *v.coord(i).degree() + v.ambient().twist(i));
  }
  return d;
}

}  // namespace

long long resolve_degree_cap(int max_input_degree, const GBOptions& opts) {
  if (opts.degree_cap > 0) return opts.degree_cap;
  if (const char* env = std::getenv("CHARPREG_DEGREE_GUARD")) {
    char* end = nullptr;
    long long cap = std::strtoll(env, &end, 10);
    if (end == env || *end != '\0' || cap <= 0)
      throw UsageError("CHARPREG_DEGREE_GUARD must be a positive integer");
    return cap;
  }
  return 8LL * std::max(1, max_input_degree);
}

ModuleGB module_groebner(std::span<const FreeVector> columns,
                         const GBOptions& opts, bool track) {
  ModuleGB out;
  out.tracked = track;
  if (columns.empty()) return out;
  RingPtr R = columns[0].ring();
  const FreeModule ambient = columns[0].ambient();
  for (const auto& c : columns) {
    require_same_ring(R, c.ring());
    if (!(c.ambient() == ambient))
      throw UsageError("module generators live in different ambients");
  }
  const PrimeField& F = R->field();
  const MonomialOrder& ord = R->order();
  const int m = static_cast<int>(columns.size());
  const int rank = ambient.rank();

  int maxdeg = 0;
  for (const auto& c : columns) maxdeg = std::max(maxdeg, column_degree_proxy(c));
  const long long cap = resolve_degree_cap(maxdeg, opts);

  std::vector<WorkElem> elems;
  std::vector<SPair> queue;
  std::set<std::pair<int, int>> done;
  long long seq = 0;

  auto add_pairs_for = [&](int j) {
    for (int i = 0; i < j; ++i) {
      if (elems[static_cast<std::size_t>(i)].lead.pos !=
          elems[static_cast<std::size_t>(j)].lead.pos)
        continue;
      Monomial l = Monomial::lcm(elems[static_cast<std::size_t>(i)].lead.mon,
                                 elems[static_cast<std::size_t>(j)].lead.mon);
      long long sdeg =
          l.degree() +
          ambient.twist(elems[static_cast<std::size_t>(i)].lead.pos);
      queue.push_back(SPair{i, j, elems[static_cast<std::size_t>(i)].lead.pos,
                            std::move(l), sdeg, seq++});
    }
  };

  auto cofactor_unit = [&](int k) {
    std::vector<Polynomial> cof;
    if (track) {
      cof.assign(static_cast<std::size_t>(m), Polynomial::zero(R));
      cof[static_cast<std::size_t>(k)] = Polynomial::constant(R, 1);
    }
    return cof;
  };

  for (int k = 0; k < m; ++k) {
    const FreeVector& c = columns[static_cast<std::size_t>(k)];
    auto l = c.lead();
    if (!l) continue;
    elems.push_back(WorkElem{c, *l, cofactor_unit(k)});
    add_pairs_for(static_cast<int>(elems.size()) - 1);
  }

  auto pick = [&]() {
    std::size_t best = 0;
    for (std::size_t t = 1; t < queue.size(); ++t) {
      const SPair &a = queue[t], &b = queue[best];
      bool better;
      if (opts.strategy == SPairStrategy::input_order) {
        better = a.seq < b.seq;
      } else {
        if (a.sdeg != b.sdeg) {
          better = a.sdeg < b.sdeg;
        } else {
          int c = ord.compare(a.lcm, b.lcm);
          if (c != 0)
            better = c < 0;
          else
            better = std::tie(a.i, a.j) < std::tie(b.i, b.j);
        }
      }
      if (better) best = t;
    }
    SPair p = queue[best];
    queue.erase(queue.begin() + static_cast<std::ptrdiff_t>(best));
    return p;
  };

  auto reduce_and_insert = [&](FreeVector S, std::vector<Polynomial> cofS) {
    std::vector<Reducer> red;
    red.reserve(elems.size());
    for (const auto& e : elems) red.push_back(Reducer{&e.v, e.lead});
    std::vector<std::vector<Term>> qt;
    FreeVector r = divide_full(S, red, track ? &qt : nullptr, cap);
    auto l = r.lead();
    if (!l) {
      return;
    }
    std::uint32_t inv = F.inv(l->coeff);
    r = r.scaled(inv);
    l = r.lead();
    std::vector<Polynomial> cof;
    if (track) {
      auto q = quotients_from_terms(R, std::move(qt));
      cof = std::move(cofS);
      for (std::size_t t = 0; t < elems.size(); ++t) {
        if (q[t].is_zero()) continue;
        for (int k = 0; k < m; ++k) {
          auto& ck = cof[static_cast<std::size_t>(k)];
          ck = ck.minus(q[t].times(elems[t].cof[static_cast<std::size_t>(k)]));
        }
      }
      for (auto& ck : cof) ck = ck.scaled(inv);
    }
    elems.push_back(WorkElem{std::move(r), *l, std::move(cof)});
    add_pairs_for(static_cast<int>(elems.size()) - 1);
  };

  while (!queue.empty()) {
    SPair p = pick();
    done.insert({p.i, p.j});
    const WorkElem& gi = elems[static_cast<std::size_t>(p.i)];
    const WorkElem& gj = elems[static_cast<std::size_t>(p.j)];
    if (opts.use_criteria) {
      if (rank == 1 && Monomial::coprime(gi.lead.mon, gj.lead.mon)) continue;
      bool chained = false;
      for (std::size_t k = 0; k < elems.size() && !chained; ++k) {
        int ki = static_cast<int>(k);
        if (ki == p.i || ki == p.j) continue;
        const WorkElem& gk = elems[k];
        if (gk.lead.pos != p.pos || !gk.lead.mon.divides(p.lcm)) continue;
        if (Monomial::lcm(gi.lead.mon, gk.lead.mon) == p.lcm) continue;
        if (Monomial::lcm(gk.lead.mon, gj.lead.mon) == p.lcm) continue;
        if (done.count({std::min(p.i, ki), std::max(p.i, ki)}) &&
            done.count({std::min(ki, p.j), std::max(ki, p.j)}))
          chained = true;
      }
      if (chained) continue;
    }
    Monomial mi = p.lcm.divided_by(gi.lead.mon);
    Monomial mj = p.lcm.divided_by(gj.lead.mon);
    std::uint32_t ci = F.inv(gi.lead.coeff);
    std::uint32_t cj = F.inv(gj.lead.coeff);
    FreeVector S = gi.v.times_term(mi, ci).minus(gj.v.times_term(mj, cj));
    std::vector<Polynomial> cofS;
    if (track) {
      cofS.reserve(static_cast<std::size_t>(m));
      Polynomial pi = Polynomial::from_monomial(R, mi, ci);
      Polynomial pj = Polynomial::from_monomial(R, mj, cj);
      for (int k = 0; k < m; ++k)
        cofS.push_back(pi.times(gi.cof[static_cast<std::size_t>(k)])
                           .minus(pj.times(gj.cof[static_cast<std::size_t>(k)])));
    }
    reduce_and_insert(std::move(S), std::move(cofS));
  }

  // Inter-reduce to the reduced basis: monic, minimal leads, tails fully
  // reduced, sorted by (position, lead monomial) ascending.
  for (auto& e : elems) {
    std::uint32_t inv = F.inv(e.lead.coeff);
    e.v = e.v.scaled(inv);
    if (track)
      for (auto& c : e.cof) c = c.scaled(inv);
    e.lead = *e.v.lead();
  }
  std::vector<int> order_idx(elems.size());
  for (std::size_t t = 0; t < elems.size(); ++t) order_idx[t] = static_cast<int>(t);
  std::sort(order_idx.begin(), order_idx.end(), [&](int a, int b) {
    const auto &la = elems[static_cast<std::size_t>(a)].lead,
               &lb = elems[static_cast<std::size_t>(b)].lead;
    if (la.pos != lb.pos) return la.pos < lb.pos;
    int c = ord.compare(la.mon, lb.mon);
    if (c != 0) return c < 0;
    return a < b;
  });
  std::vector<WorkElem> kept;
  for (int idx : order_idx) {
    const WorkElem& e = elems[static_cast<std::size_t>(idx)];
    bool redundant = false;
    for (const auto& h : kept)
      if (h.lead.pos == e.lead.pos && h.lead.mon.divides(e.lead.mon)) {
        redundant = true;
        break;
      }
    if (!redundant) kept.push_back(e);
  }
  for (std::size_t t = 0; t < kept.size(); ++t) {
    std::vector<Reducer> red;
    for (std::size_t s = 0; s < kept.size(); ++s)
      if (s != t) red.push_back(Reducer{&kept[s].v, kept[s].lead});
    std::vector<std::vector<Term>> qt;
    FreeVector r = divide_full(kept[t].v, red, track ? &qt : nullptr,
                               LLONG_MAX);
    if (track) {
      auto q = quotients_from_terms(R, std::move(qt));
      std::size_t qi = 0;
      for (std::size_t s = 0; s < kept.size(); ++s) {
        if (s == t) continue;
        if (!q[qi].is_zero())
          for (int k = 0; k < m; ++k) {
            auto& ck = kept[t].cof[static_cast<std::size_t>(k)];
            ck = ck.minus(q[qi].times(kept[s].cof[static_cast<std::size_t>(k)]));
          }
        ++qi;
      }
    }
    kept[t].v = std::move(r);
    kept[t].lead = *kept[t].v.lead();
  }

  out.basis.reserve(kept.size());
  if (track) out.cofactors.reserve(kept.size());
  for (auto& e : kept) {
    out.basis.push_back(std::move(e.v));
    if (track) out.cofactors.push_back(std::move(e.cof));
  }

  if (track) {
    out.input_in_basis.reserve(static_cast<std::size_t>(m));
    std::vector<Reducer> red = reducers_of(out.basis);
    for (int k = 0; k < m; ++k) {
      std::vector<std::vector<Term>> qt;
      FreeVector r = divide_full(columns[static_cast<std::size_t>(k)], red, &qt,
                                 LLONG_MAX);
      check_invariant(r.is_zero(),
                      "input column fails to reduce to zero against its own "
                      "Groebner basis");
      out.input_in_basis.push_back(quotients_from_terms(R, std::move(qt)));
    }
  }
  return out;
}

FreeVector module_normal_form(const FreeVector& v,
                              std::span<const FreeVector> basis,
                              std::vector<Polynomial>* quotients) {
  std::vector<Reducer> red;
  std::vector<std::size_t> red_src;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    auto l = basis[i].lead();
    if (l) {
      red.push_back(Reducer{&basis[i], *l});
      red_src.push_back(i);
    }
  }
  std::vector<std::vector<Term>> qt;
  FreeVector r = divide_full(v, red, quotients ? &qt : nullptr, LLONG_MAX);
  if (quotients) {
    quotients->assign(basis.size(), Polynomial::zero(v.ring()));
    auto q = quotients_from_terms(v.ring(), std::move(qt));
    for (std::size_t t = 0; t < q.size(); ++t)
      (*quotients)[red_src[t]] = std::move(q[t]);
  }
  return r;
}

std::vector<FreeVector> schreyer_syzygies(std::span<const FreeVector> gb,
                                          const GBOptions&) {
  if (gb.empty()) return {};
  RingPtr R = gb[0].ring();
  const PrimeField& F = R->field();
  const int t = static_cast<int>(gb.size());
  std::vector<FreeVector::Lead> leads;
  leads.reserve(gb.size());
  std::vector<int> twists;
  for (const auto& g : gb) {
    auto l = g.lead();
    if (!l) throw UsageError("zero vector in a Groebner basis");
    leads.push_back(*l);
    twists.push_back(g.is_homogeneous() ? g.degree().value_or(0) : 0);
  }
  FreeModule syzspace(std::move(twists));
  std::vector<Reducer> red = reducers_of(gb);
  std::vector<FreeVector> out;
  for (int i = 0; i < t; ++i) {
    for (int j = i + 1; j < t; ++j) {
      if (leads[static_cast<std::size_t>(i)].pos !=
          leads[static_cast<std::size_t>(j)].pos)
        continue;
      const Monomial &mi = leads[static_cast<std::size_t>(i)].mon,
                     &mj = leads[static_cast<std::size_t>(j)].mon;
      Monomial l = Monomial::lcm(mi, mj);
      Monomial ui = l.divided_by(mi);
      Monomial uj = l.divided_by(mj);
      std::uint32_t ci = F.inv(leads[static_cast<std::size_t>(i)].coeff);
      std::uint32_t cj = F.inv(leads[static_cast<std::size_t>(j)].coeff);
      FreeVector S = gb[static_cast<std::size_t>(i)]
                         .times_term(ui, ci)
                         .minus(gb[static_cast<std::size_t>(j)].times_term(uj, cj));
      std::vector<std::vector<Term>> qt;
      FreeVector r = divide_full(S, red, &qt, LLONG_MAX);
      check_invariant(r.is_zero(),
                      "S-vector fails to reduce to zero: input to the syzygy "
                      "step is not a Groebner basis");
      auto q = quotients_from_terms(R, std::move(qt));
      std::vector<Polynomial> coords(static_cast<std::size_t>(t),
                                     Polynomial::zero(R));
      coords[static_cast<std::size_t>(i)] = Polynomial::from_monomial(R, ui, ci);
      coords[static_cast<std::size_t>(j)] =
          coords[static_cast<std::size_t>(j)].minus(
              Polynomial::from_monomial(R, uj, cj));
      for (int s = 0; s < t; ++s)
        coords[static_cast<std::size_t>(s)] =
            coords[static_cast<std::size_t>(s)].minus(q[static_cast<std::size_t>(s)]);
      FreeVector sig(R, syzspace, std::move(coords));
      if (!sig.is_zero()) out.push_back(std::move(sig));
    }
  }
  return out;
}

std::vector<FreeVector> syzygy_generators(std::span<const FreeVector> columns,
                                          const GBOptions& opts) {
  if (columns.empty()) return {};
  RingPtr R = columns[0].ring();
  const int m = static_cast<int>(columns.size());
  std::vector<int> twists;
  twists.reserve(columns.size());
  for (const auto& c : columns)
    twists.push_back(c.is_homogeneous() ? c.degree().value_or(0) : 0);
  FreeModule syzspace(std::move(twists));

  ModuleGB gb = module_groebner(columns, opts, /*track=*/true);
  std::vector<FreeVector> out;
  const int t = static_cast<int>(gb.basis.size());

  if (t > 0) {
    std::vector<FreeVector> sig = schreyer_syzygies(gb.basis, opts);
    for (const auto& s : sig) {
      std::vector<Polynomial> coords(static_cast<std::size_t>(m),
                                     Polynomial::zero(R));
      for (int j = 0; j < t; ++j) {
        if (s.coord(j).is_zero()) continue;
        for (int k = 0; k < m; ++k) {
          const Polynomial& a = gb.cofactors[static_cast<std::size_t>(j)]
                                            [static_cast<std::size_t>(k)];
          if (a.is_zero()) continue;
          coords[static_cast<std::size_t>(k)] =
              coords[static_cast<std::size_t>(k)].plus(a.times(s.coord(j)));
        }
      }
      FreeVector w(R, syzspace, std::move(coords));
      if (!w.is_zero()) out.push_back(std::move(w));
    }
  }

  // Columns of I - A*B are syzygies as well; for a zero input column this
  // contributes the plain unit vector.
  for (int k2 = 0; k2 < m; ++k2) {
    std::vector<Polynomial> coords(static_cast<std::size_t>(m),
                                   Polynomial::zero(R));
    coords[static_cast<std::size_t>(k2)] = Polynomial::constant(R, 1);
    for (int j = 0; j < t; ++j) {
      const Polynomial& b = gb.input_in_basis[static_cast<std::size_t>(k2)]
                                             [static_cast<std::size_t>(j)];
      if (b.is_zero()) continue;
      for (int k = 0; k < m; ++k) {
        const Polynomial& a =
            gb.cofactors[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
        if (a.is_zero()) continue;
        coords[static_cast<std::size_t>(k)] =
            coords[static_cast<std::size_t>(k)].minus(a.times(b));
      }
    }
    FreeVector w(R, syzspace, std::move(coords));
    if (!w.is_zero()) out.push_back(std::move(w));
  }

  // Drop exact duplicates, keeping first occurrences.
  std::vector<FreeVector> uniq;
  for (auto& w : out) {
    bool seen = false;
    for (const auto& u : uniq)
      if (u == w) {
        seen = true;
        break;
      }
    if (!seen) uniq.push_back(std::move(w));
  }
  return uniq;
}

bool module_contains(std::span<const FreeVector> generators,
                     const FreeVector& v, const GBOptions& opts) {
  if (v.is_zero()) return true;
  if (generators.empty()) return false;
  ModuleGB gb = module_groebner(generators, opts, /*track=*/false);
  return module_normal_form(v, gb.basis).is_zero();
}

std::vector<FreeVector> minimal_generators(std::span<const FreeVector> columns,
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
  std::vector<FreeVector> gb_basis;
  for (int k : idx) {
    const FreeVector& c = columns[static_cast<std::size_t>(k)];
    if (!kept.empty() && module_normal_form(c, gb_basis).is_zero()) continue;
    kept.push_back(c);
    gb_basis = module_groebner(kept, opts, /*track=*/false).basis;
  }
  return kept;
}

// ---- polynomial wrappers ----

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> G,
                       std::vector<Polynomial>* quotients) {
  if (G.empty()) throw UsageError("normal form needs a nonempty reducer list");
  std::vector<FreeVector> basis;
  basis.reserve(G.size());
  for (const auto& g : G) basis.push_back(FreeVector::wrap(g));
  FreeVector r = module_normal_form(FreeVector::wrap(f), basis, quotients);
  return r.coord(0);
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero() || g.is_zero())
    throw UsageError("S-polynomial of a zero polynomial");
  require_same_ring(f.ring(), g.ring());
  const PrimeField& F = f.ring()->field();
  Monomial l = Monomial::lcm(f.lead_monomial(), g.lead_monomial());
  return f.times_term(l.divided_by(f.lead_monomial()), F.inv(f.lead_coeff()))
      .minus(g.times_term(l.divided_by(g.lead_monomial()), F.inv(g.lead_coeff())));
}

std::vector<Polynomial> buchberger(std::span<const Polynomial> gens,
                                   const GBOptions& opts) {
  if (gens.empty()) throw UsageError("Groebner basis of an empty generator list");
  bool all_zero = true;
  for (const auto& g : gens)
    if (!g.is_zero()) all_zero = false;
  if (all_zero)
    throw UsageError("Groebner basis of the zero ideal is not defined here");
  std::vector<FreeVector> cols;
  cols.reserve(gens.size());
  for (const auto& g : gens) cols.push_back(FreeVector::wrap(g));
  ModuleGB gb = module_groebner(cols, opts, /*track=*/false);
  std::vector<Polynomial> out;
  out.reserve(gb.basis.size());
  for (const auto& v : gb.basis) out.push_back(v.coord(0));
  return out;
}

bool is_groebner_basis(std::span<const Polynomial> G) {
  std::vector<Polynomial> list(G.begin(), G.end());
  for (std::size_t i = 0; i < list.size(); ++i)
    for (std::size_t j = i + 1; j < list.size(); ++j) {
      if (list[i].is_zero() || list[j].is_zero()) continue;
      Polynomial s = s_polynomial(list[i], list[j]);
      if (s.is_zero()) continue;
      if (!normal_form(s, list).is_zero()) return false;
    }
  return true;
}

}  // namespace charpreg
