// Orders and fractional ideals as full-rank integer lattices in K, held in
// canonical lower-triangular row HNF so equality is plain comparison.
#pragma once

#include "radix/field.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace radix {

struct OrderLattice {
    Int den = 1;   // lattice = (1/den) * rowspace(mat)
    IMat mat;      // n x n canonical lower-triangular HNF
    bool is_ring = false;

    std::size_t dim() const { return mat.size(); }
    bool same_lattice(const OrderLattice& o) const { return den == o.den && mat == o.mat; }
};

// Canonical (den, HNF) from spanning rows; throws not_sublattice on rank
// deficiency. den is minimal positive.
OrderLattice hnf_canonical(const std::vector<FieldElement>& rows, bool ring_flag = false);

OrderLattice power_basis_lattice(const FieldSpec& spec);              // Z[alpha]
OrderLattice generated_ring(const FieldElement& g, const FieldSpec& spec);  // Z[g]

FieldElement basis_element(const OrderLattice& l, std::size_t i);
std::vector<FieldElement> basis_elements(const OrderLattice& l);

// Coordinates of x w.r.t. the basis rows of l (exact; rational in general).
std::vector<Rat> coords_in(const OrderLattice& l, const FieldElement& x);
bool lattice_contains(const OrderLattice& l, const FieldElement& x);

// Lattice generated by all pairwise products of basis elements. For ring
// lattices this is the product ring.
OrderLattice lat_product(const OrderLattice& a, const OrderLattice& b, const FieldSpec& spec);
OrderLattice lat_sum(const OrderLattice& a, const OrderLattice& b);
OrderLattice lat_scale(const OrderLattice& l, const Rat& s);
// Module product x * L.
OrderLattice lat_elem_product(const FieldElement& x, const OrderLattice& l,
                              const FieldSpec& spec);

// |det| of the base change matrix from sup to sub, factored. Throws
// not_sublattice when sub is not contained in sup.
FactoredInt lattice_index(const OrderLattice& sub, const OrderLattice& sup);

// { rho in K : rho * I <= I }, via one linear system per basis row of I and
// an HNF of the stacked dual constraints. Always a ring containing 1.
OrderLattice endomorphism_order(const OrderLattice& i, const FieldSpec& spec);

// q-radical of the ring lattice o: preimage of the nilradical of o/qo,
// computed as the kernel of the iterated q-power map plus q*o.
OrderLattice frobenius_radical(const OrderLattice& o, const Int& q, const FieldSpec& spec);

// Structure constants: table[i] row j = integer coordinates of b_i * b_j in
// the basis of o. Requires a ring lattice.
std::vector<IMat> mult_table(const OrderLattice& o, const FieldSpec& spec);

bool contains_one(const OrderLattice& o, const FieldSpec& spec);
bool ring_closed(const OrderLattice& o, const FieldSpec& spec);
bool is_ideal_of(const OrderLattice& i, const OrderLattice& o, const FieldSpec& spec);

struct Idempotent {
    std::vector<Int> coords;  // w.r.t. the basis of o, canonical residue rep
    bool primitive = false;
};

// All idempotents of the finite ring o/i with primitivity flags. i must be an
// ideal of o of full rank; throws budget_error when |o/i| > budget.
std::vector<Idempotent> idempotents_mod(const OrderLattice& o, const OrderLattice& i,
                                        const FieldSpec& spec,
                                        std::uint64_t budget = 1u << 20);

// Membership of x in the Z-span of an arbitrary (not necessarily full-rank)
// generator list.
bool span_contains(const std::vector<FieldElement>& gens, const FieldElement& x);

}  // namespace radix
