// Arbitrary-precision integer/rational aliases and the error types shared by
// all layers. Everything is exact; no floating point anywhere.
#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace radix {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// X^n - a failed the irreducibility gate; `criterion` names the failing test.
struct reducible_input : error {
    std::string criterion;
    explicit reducible_input(std::string crit)
        : error("reducible input: " + crit), criterion(std::move(crit)) {}
};

// The factorization budget ran out; carries what was found so far.
struct factorization_incomplete : error {
    std::vector<std::pair<Int, long>> partial;
    Int remaining;
    factorization_incomplete(std::vector<std::pair<Int, long>> part, Int rem)
        : error("incomplete factorization, remaining composite " + rem.str()),
          partial(std::move(part)), remaining(std::move(rem)) {}
};

// A quotient or oracle exceeded its size budget.
struct budget_error : error {
    using error::error;
};

// Two supposedly-equal derivations disagreed; always a bug or bad input.
struct consistency_error : error {
    using error::error;
};

struct not_sublattice : error {
    using error::error;
};

inline Int ipow(const Int& b, unsigned long e) {
    return boost::multiprecision::pow(b, static_cast<unsigned>(e));
}

// p^e for small p, e known to fit; used for index bookkeeping exponents.
inline long lpow(long b, long e) {
    long r = 1;
    for (long i = 0; i < e; ++i) r *= b;
    return r;
}

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

inline Int floor_div(const Int& a, const Int& b) {
    Int q, r;
    boost::multiprecision::divide_qr(a, b, q, r);
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

inline Int mod_floor(const Int& a, const Int& b) { return a - floor_div(a, b) * b; }

}  // namespace radix
