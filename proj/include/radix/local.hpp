// The constructive local orders: radicand normalization (c, gamma, c*,
// gamma*), the q-maximal order for q != p, the p-maximal orders in the
// coprime and non-coprime cases, and the two-power cyclotomic special case.
#pragma once

#include "radix/lattice.hpp"

#include <optional>
#include <string>

namespace radix {

struct ResidueProfile {
    enum class Kind { fp_power, f2_power_times_f4, unramified_product, opaque };
    Kind kind = Kind::opaque;
    Int q = 0;
    unsigned count = 0;               // fp_power: copies of F_q; f4 kind: copies of F_2
    std::vector<unsigned> degrees;    // unramified_product: residue degrees

    unsigned field_count() const;     // simple factors of the semisimple quotient
    unsigned fq_dimension() const;    // total F_q-dimension
    std::string to_string() const;
};

struct RadicalSetup {
    Int q;        // prime dividing a being localized at
    Int p = 0;    // spec degree prime
    unsigned f = 0;
    long e = 0;         // v_q(a)
    long e_star = 0;    // v_p(e)
    Int e_star_star;    // e / p^{e*}
    Int u, v;           // 1 = e** u - p^{f-e*} v, 1 <= u <= p^{f-e*}-1
    Int c, c_star;
    FactoredInt factor_c, factor_c_star;
    FieldElement gamma;
    std::optional<FieldElement> gamma_star;  // present iff e* >= 1
};

RadicalSetup setup_lemma21(const FieldSpec& spec, const Int& q);

struct LocalOrder {
    Int q;
    std::string kind;  // "q-order" | "p-coprime" | "p-noncoprime" | "maximal-shortcut" | "cyclotomic"
    OrderLattice order;
    OrderLattice radical;
    std::vector<std::pair<std::string, FieldElement>> labeled_basis;
    FactoredInt disc;
    ResidueProfile residue;
    FactoredInt base_disc_used;   // Delta_alpha or Delta_gamma
    FactoredInt index_over_base;  // [order : Z[alpha or gamma]]
    long index_vq = 0;
    long disc_drop_vq = 0;

    // Non-coprime extras (present for kind == "p-noncoprime").
    std::optional<OrderLattice> ohat;
    long d_prime = -1;
    long d_dblprime = -1;
    std::optional<bool> radical_equals_simple;
};

// q != p, e* >= 1: the order Z[gamma] Z[gamma*] with its radical. e* = 0
// inputs are rejected ("already maximal").
LocalOrder build_q_order(const RadicalSetup& s, const FieldSpec& spec);

// eta_k and the polynomial T_k with eta_k / p^k as root; integral reports
// whether k <= f_0 = min(f, w_p(a) - 1). Requires gcd(p, a) = 1, 0 <= k <= f.
struct EtaResult {
    FieldElement eta;
    std::vector<Rat> t_poly;  // coefficients ascending, monic degree p^k
    bool integral = false;
};
EtaResult eta_and_Tk(const Int& p, unsigned f, const Int& a, unsigned k,
                     const FieldSpec& spec);

// theta_l = sum_i a^{p^l-1-i} alpha^{p^{f-l} i} * i (congruence-suite helper).
FieldElement theta(const Int& p, unsigned f, const Int& a, unsigned l,
                   const FieldSpec& spec);

// gcd(p, a) = 1: the Section-4 order; returns Z[alpha] when w_p(a) = 1.
LocalOrder build_p_order_coprime(const FieldSpec& spec);

// Base-p digit bookkeeping for 0 <= t <= p^width - 1, digits big-endian:
// t = sum t_i p^{width - i}, i = 1..width.
struct DigitProfile {
    long t = 0;
    long p = 0;
    long width = 0;
    std::vector<long> digits;  // digits[i-1] = t_i
    long r_t = 0, s_t = 0;     // minimal/maximal nonzero index; r_0=0, s_0=width
    long t_star = 0;           // t / p^{width - s_t}, coprime to p (t != 0)

    // t = p^{width-j} * t'' + t' with t'' <= p^j - 1, p^j t' <= p^width - 1.
    std::pair<long, long> split(long j) const;  // returns (t', t'')
};
DigitProfile digit_profile(long t, long p, long width);

// Section-5 combinatorics, exposed for the exhaustive identity tests.
long g_k5(long k, long f0s, long e_star, long width);
long k_hat5(long k, long f0s, long e_star, long p);
long h_prime_kt(const DigitProfile& d, long k, long f0s, long e_star);
long d_dblprime_closed_form(long p, long f, long e_star, long f0s);
// Exponent of (eta*_{f0*}/p^{f0*}) in the beta_kt replacement.
int beta_kt_exponent(long p, long f0s, long w_star, long k, long s_t, long t_star,
                     long g);

// q = p | a with e* >= 1: the Section-5 order built over the star world.
LocalOrder build_p_order_noncoprime(const RadicalSetup& s, const FieldSpec& spec);

// a = -1, n = 2^f: Z[alpha] is maximal (cyclotomic).
LocalOrder cyclotomic_two_power(const FieldSpec& spec);

// Z[gen] already q-maximal; builds the shortcut record with gen-power labels.
LocalOrder maximal_shortcut(const Int& q, const FieldElement& gen,
                            const std::string& gen_label, const FactoredInt& disc,
                            ResidueProfile residue, const FieldSpec& spec);

}  // namespace radix
