#include "charpreg/hilbert.hpp"

#include <algorithm>

namespace charpreg {

namespace {

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.exps() < b.exps();
  });
  std::vector<Monomial> kept;
  for (const auto& g : gens) {
    bool covered = false;
    for (const auto& h : kept)
      if (h.divides(g)) {
        covered = true;
        break;
      }
    if (!covered) kept.push_back(g);
  }
  return kept;
}

void trim(std::vector<long long>& v) {
  while (v.size() > 1 && v.back() == 0) v.pop_back();
}

// v *= (1 - t^a)
void times_one_minus_power(std::vector<long long>& v, int a) {
  std::vector<long long> out(v.size() + static_cast<std::size_t>(a), 0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    out[i] += v[i];
    out[i + static_cast<std::size_t>(a)] -= v[i];
  }
  trim(out);
  v = std::move(out);
}

std::vector<long long> numerator_rec(std::vector<Monomial> gens) {
  gens = minimalize(std::move(gens));
  if (gens.empty()) return {1};
  for (const auto& g : gens)
    if (g.is_one()) return {0};
  int n = gens[0].arity();

  bool coprime = true;
  for (std::size_t i = 0; i < gens.size() && coprime; ++i)
    for (std::size_t j = i + 1; j < gens.size() && coprime; ++j)
      if (!Monomial::coprime(gens[i], gens[j])) coprime = false;
  if (coprime) {
    std::vector<long long> out{1};
    for (const auto& g : gens) times_one_minus_power(out, g.degree());
    return out;
  }

  std::vector<int> freq(static_cast<std::size_t>(n), 0);
  for (const auto& g : gens)
    for (int v = 0; v < n; ++v)
      if (g.exp(v) > 0) ++freq[static_cast<std::size_t>(v)];
  int pivot = 0;
  for (int v = 1; v < n; ++v)
    if (freq[static_cast<std::size_t>(v)] > freq[static_cast<std::size_t>(pivot)])
      pivot = v;

  // 0 -> R/(M:x)(-1) -> R/M -> R/(M+(x)) -> 0 with x the pivot variable.
  std::vector<Monomial> with_x{Monomial::variable(n, pivot)};
  for (const auto& g : gens)
    if (g.exp(pivot) == 0) with_x.push_back(g);
  std::vector<Monomial> by_x;
  by_x.reserve(gens.size());
  for (const auto& g : gens) {
    if (g.exp(pivot) == 0) {
      by_x.push_back(g);
    } else {
      std::vector<std::int32_t> e = g.exps();
      e[static_cast<std::size_t>(pivot)] -= 1;
      by_x.emplace_back(std::move(e));
    }
  }
  std::vector<long long> a = numerator_rec(std::move(with_x));
  std::vector<long long> b = numerator_rec(std::move(by_x));
  std::vector<long long> out(std::max(a.size(), b.size() + 1), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i + 1] += b[i];
  trim(out);
  return out;
}

}  // namespace

std::vector<Monomial> lead_monomials(const Ideal& I) {
  std::vector<Monomial> out;
  for (const auto& g : I.reduced_basis()) out.push_back(g.lead_monomial());
  return out;
}

std::vector<long long> hilbert_numerator(std::vector<Monomial> gens,
                                         int arity) {
  for (const auto& g : gens)
    if (g.arity() != arity) throw UsageError("monomial arity mismatch");
  return numerator_rec(std::move(gens));
}

long long binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

long long hilbert_function(const Ideal& I, int d) {
  if (d < 0) return 0;
  int n = I.ring()->arity();
  std::vector<long long> num = hilbert_numerator(lead_monomials(I), n);
  long long out = 0;
  for (std::size_t k = 0; k < num.size(); ++k) {
    if (static_cast<int>(k) > d) break;
    out += num[k] * binomial(n - 1 + d - static_cast<long long>(k), n - 1);
  }
  return out;
}

int krull_dimension(const Ideal& I) {
  if (I.is_unit()) return -1;
  int n = I.ring()->arity();
  std::vector<long long> num = hilbert_numerator(lead_monomials(I), n);
  int order = 0;
  while (true) {
    long long at_one = 0;
    for (long long c : num) at_one += c;
    if (at_one != 0) break;
    // divide by (1-t): prefix sums, dropping the top coefficient
    std::vector<long long> q(num.size() > 1 ? num.size() - 1 : 1, 0);
    long long acc = 0;
    for (std::size_t i = 0; i + 1 < num.size(); ++i) {
      acc += num[i];
      q[i] = acc;
    }
    num = std::move(q);
    trim(num);
    ++order;
    check_invariant(order <= n, "Hilbert numerator divisible too often");
  }
  return n - order;
}

}  // namespace charpreg
