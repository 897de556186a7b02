// Minimal univariate polynomial arithmetic over a prime field F_q: gcd,
// squarefree radical (char-p aware), and distinct-degree factor degrees.
#pragma once

#include "radix/ints.hpp"

#include <vector>

namespace radix {

// Coefficients ascending, reduced into [0, q); invariant: no trailing zeros.
using FqPoly = std::vector<Int>;

FqPoly fq_trim(FqPoly f);
FqPoly fq_reduce(const std::vector<Int>& coeffs, const Int& q);
int fq_deg(const FqPoly& f);  // -1 for the zero polynomial
FqPoly fq_mul(const FqPoly& a, const FqPoly& b, const Int& q);
FqPoly fq_sub(const FqPoly& a, const FqPoly& b, const Int& q);
// Remainder and exact quotient; divisor must be nonzero.
FqPoly fq_rem(FqPoly a, const FqPoly& b, const Int& q);
FqPoly fq_quo(FqPoly a, const FqPoly& b, const Int& q);
FqPoly fq_monic(FqPoly f, const Int& q);
FqPoly fq_gcd(FqPoly a, FqPoly b, const Int& q);
FqPoly fq_derivative(const FqPoly& f, const Int& q);
// x^e mod f (f monic of degree >= 1).
FqPoly fq_xpow_mod(const Int& e, const FqPoly& f, const Int& q);
FqPoly fq_powmod(const FqPoly& base, const Int& e, const FqPoly& f, const Int& q);

// Product of the distinct irreducible factors of f (monic).
FqPoly fq_radical(FqPoly f, const Int& q);

// Degrees of irreducible factors of a squarefree monic f, with multiplicity
// of occurrence: returns pairs (degree, count) ascending.
std::vector<std::pair<unsigned, unsigned>> fq_distinct_degrees(FqPoly f, const Int& q);

}  // namespace radix
