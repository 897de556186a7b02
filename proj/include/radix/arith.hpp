// Exact integer arithmetic: certified factorization, p-adic valuations,
// Wieferich valuations, and the binomial/geometric-sum identities the order
// constructions rest on.
#pragma once

#include "radix/ints.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace radix {

// sign * prod q^e with the expanded value kept alongside. Keys are certified
// prime by the factorizer; value 0 is represented as sign 0, empty map.
struct FactoredInt {
    int sign = 0;
    std::map<Int, long> factors;
    Int value = 0;

    static FactoredInt zero() { return {}; }
    static FactoredInt one() { return make(1, {}); }
    static FactoredInt make(int sign, std::map<Int, long> f);

    Int recompute() const;
    bool consistent() const { return recompute() == value; }

    long vq(const Int& q) const;
    FactoredInt mul(const FactoredInt& o) const;
    FactoredInt pow(long e) const;
    // Exact division; throws consistency_error if not divisible.
    FactoredInt div(const FactoredInt& o) const;
    FactoredInt abs() const;

    std::string to_string() const;  // e.g. "-2^4 * 3^2 * 5^3"
};

bool is_prime(const Int& n);

// q-adic valuation of x; q must be prime and x nonzero.
long vp(const Int& q, const Int& x);

struct FactorizeOptions {
    Int trial_bound = 1000000;
    unsigned long rho_budget = 1u << 24;  // total Pollard iterations
};

// Certified complete factorization of x != 0. A hint supplies known prime
// factors (validated, then completed). Throws factorization_incomplete when
// the rho budget runs out with a composite cofactor left.
FactoredInt factorize(const Int& x,
                      const std::vector<std::pair<Int, long>>* hint = nullptr,
                      const FactorizeOptions& opt = {});

// w_p(a) = v_p(a^{p-1} - 1) for p prime, gcd(p, a) = 1.
long wieferich(const Int& p, const Int& a);

// v_q(binom(q^x * z, y)) from Legendre factorial sums.
// Requires q prime, x >= 0, 1 <= z <= q-1, 1 <= y <= q^x * z.
long binom_valuation(const Int& q, long x, long z, const Int& y);

// Coefficients of (sum_{i=0..r} X^{r-i} Y^i)^2, indexed by the Y-degree
// (X-degree is 2r minus that).
std::vector<Int> geom_square_coeffs(long r);

// Classical criterion for X^n - a over Q, including the -4t^4 clause for
// 4 | n. n >= 2.
bool is_irreducible_pure(unsigned n, const Int& a);
// Empty when irreducible, else a message naming the failing criterion.
std::string irreducibility_obstruction(unsigned n, const Int& a);

// The unique (u, v) with 1 = e_ss * u - p^{f_minus_estar} * v and
// 1 <= u <= p^{f_minus_estar} - 1. Requires gcd(e_ss, p) = 1, f_minus_estar >= 1.
std::pair<Int, Int> lemma21_gcd(const Int& e_ss, const Int& p, long f_minus_estar);

}  // namespace radix
