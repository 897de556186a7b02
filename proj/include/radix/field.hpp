// Exact arithmetic in the pure field K = Q[X]/(X^n - a): elements as dense
// rational coordinate vectors over the power basis, trace/norm via the
// regular representation, and the factored power-basis discriminant.
#pragma once

#include "radix/arith.hpp"
#include "radix/linalg.hpp"

#include <vector>

namespace radix {

struct FieldSpec {
    unsigned n = 0;
    Int a = 0;        // reduced radicand: every exponent in factor_a is < n
    Int a_input = 0;  // as supplied
    Int reduction_scale = 1;  // D with a_input = D^n * a
    std::vector<std::pair<Int, unsigned>> factor_n;  // (p_j, f_j), p ascending
    FactoredInt factor_a;                            // of the reduced radicand

    FieldSpec() = default;
    // Throws reducible_input when X^n - a fails the irreducibility gate.
    FieldSpec(unsigned n, const Int& a,
              const std::vector<std::pair<Int, long>>* a_hint = nullptr);

    bool prime_power() const { return factor_n.size() == 1; }
    const Int& p() const { return factor_n.front().first; }
    unsigned f() const { return factor_n.front().second; }
};

// Coordinates over {alpha^i}; index i holds the coefficient of alpha^i.
struct FieldElement {
    std::vector<Rat> c;

    FieldElement() = default;
    explicit FieldElement(std::size_t n) : c(n, Rat(0)) {}

    bool operator==(const FieldElement&) const = default;
    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement operator*(const Rat& s) const;
    bool is_zero() const;
};

FieldElement fe_int(const FieldSpec& spec, const Int& v);
FieldElement fe_alpha_pow(const FieldSpec& spec, unsigned k);  // k < n

FieldElement mul(const FieldElement& x, const FieldElement& y, const FieldSpec& spec);
FieldElement fe_pow(const FieldElement& x, const Int& e, const FieldSpec& spec);

// Row-convention regular representation: row i is the coordinate vector of
// x * alpha^i.
QMat regular_rep(const FieldElement& x, const FieldSpec& spec);
Rat trace(const FieldElement& x, const FieldSpec& spec);
Rat norm(const FieldElement& x, const FieldSpec& spec);

QMat trace_matrix(const std::vector<FieldElement>& basis, const FieldSpec& spec);
Rat qmat_det(QMat m);

// Base discriminant of X^n - c in factored form:
// (-1)^{(n-1)(n-2)/2} n^n c^{n-1}.
FactoredInt disc_of_pure(const std::vector<std::pair<Int, unsigned>>& factor_n,
                         unsigned n, const FactoredInt& c);
FactoredInt base_disc(const FieldSpec& spec);  // Delta_alpha

}  // namespace radix
