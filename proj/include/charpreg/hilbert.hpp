#pragma once

#include <vector>

#include "charpreg/ideal.hpp"

namespace charpreg {

// Lead monomials of the reduced basis; the monomial ideal they generate has
// the same Hilbert function as I.
std::vector<Monomial> lead_monomials(const Ideal& I);

// Numerator of the Hilbert series of R/M over the common denominator
// (1-t)^arity, for the monomial ideal M spanned by `gens`. Coefficient i
// belongs to t^i; the zero polynomial comes back as {0}.
std::vector<long long> hilbert_numerator(std::vector<Monomial> gens, int arity);

long long binomial(long long n, long long k);

// Hilbert function of R/I in degree d.
long long hilbert_function(const Ideal& I, int d);

// Krull dimension of R/I; -1 when I is the unit ideal.
int krull_dimension(const Ideal& I);

}  // namespace charpreg
