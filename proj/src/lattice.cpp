#include "radix/lattice.hpp"

#include <algorithm>

namespace radix {

namespace {

// Scale rational rows to a common denominator, returning (den, integer rows).
std::pair<Int, IMat> clear_denominators(const std::vector<FieldElement>& rows) {
    Int den = 1;
    for (auto& r : rows)
        for (auto& x : r.c) den = lcm(den, denominator(x));
    IMat m;
    m.reserve(rows.size());
    for (auto& r : rows) {
        std::vector<Int> v(r.c.size());
        for (std::size_t j = 0; j < r.c.size(); ++j)
            v[j] = numerator(r.c[j]) * (den / denominator(r.c[j]));
        m.push_back(std::move(v));
    }
    return {den, std::move(m)};
}

OrderLattice canonicalize(Int den, IMat h, bool ring_flag) {
    Int g = den;
    for (auto& r : h)
        for (auto& x : r) {
            if (x != 0) g = gcd(g, x);
            if (g == 1) break;
        }
    if (g > 1) {
        den /= g;
        for (auto& r : h)
            for (auto& x : r) x /= g;
    }
    OrderLattice l;
    l.den = den;
    l.mat = std::move(h);
    l.is_ring = ring_flag;
    return l;
}

}  // namespace

OrderLattice hnf_canonical(const std::vector<FieldElement>& rows, bool ring_flag) {
    if (rows.empty()) throw not_sublattice("not full rank");
    auto [den, m] = clear_denominators(rows);
    IMat h = hnf_lower(std::move(m), rows.front().c.size());
    return canonicalize(den, std::move(h), ring_flag);
}

OrderLattice power_basis_lattice(const FieldSpec& spec) {
    OrderLattice l;
    l.den = 1;
    l.mat.assign(spec.n, std::vector<Int>(spec.n, 0));
    for (unsigned i = 0; i < spec.n; ++i) l.mat[i][i] = 1;
    l.is_ring = true;
    return l;
}

OrderLattice generated_ring(const FieldElement& g, const FieldSpec& spec) {
    std::vector<FieldElement> rows;
    FieldElement cur = fe_int(spec, 1);
    for (unsigned i = 0; i < spec.n; ++i) {
        rows.push_back(cur);
        if (i + 1 < spec.n) cur = mul(cur, g, spec);
    }
    return hnf_canonical(rows, true);
}

FieldElement basis_element(const OrderLattice& l, std::size_t i) {
    FieldElement e(l.dim());
    for (std::size_t j = 0; j < l.dim(); ++j) e.c[j] = Rat(l.mat[i][j], l.den);
    return e;
}

std::vector<FieldElement> basis_elements(const OrderLattice& l) {
    std::vector<FieldElement> v;
    v.reserve(l.dim());
    for (std::size_t i = 0; i < l.dim(); ++i) v.push_back(basis_element(l, i));
    return v;
}

std::vector<Rat> coords_in(const OrderLattice& l, const FieldElement& x) {
    // Solve y * (mat/den) = x by back substitution on the lower-triangular mat.
    std::size_t n = l.dim();
    std::vector<Rat> t(n);
    for (std::size_t j = 0; j < n; ++j) t[j] = x.c[j] * l.den;
    std::vector<Rat> y(n);
    for (std::size_t jj = n; jj-- > 0;) {
        Rat s = t[jj];
        for (std::size_t i = jj + 1; i < n; ++i) s -= y[i] * l.mat[i][jj];
        y[jj] = s / l.mat[jj][jj];
    }
    return y;
}

bool lattice_contains(const OrderLattice& l, const FieldElement& x) {
    for (auto& v : coords_in(l, x))
        if (!is_integer(v)) return false;
    return true;
}

OrderLattice lat_product(const OrderLattice& a, const OrderLattice& b, const FieldSpec& spec) {
    std::vector<FieldElement> rows;
    rows.reserve(a.dim() * b.dim());
    auto ba = basis_elements(a);
    auto bb = basis_elements(b);
    for (auto& x : ba)
        for (auto& y : bb) rows.push_back(mul(x, y, spec));
    return hnf_canonical(rows, a.is_ring && b.is_ring);
}

OrderLattice lat_sum(const OrderLattice& a, const OrderLattice& b) {
    std::vector<FieldElement> rows = basis_elements(a);
    auto rb = basis_elements(b);
    rows.insert(rows.end(), rb.begin(), rb.end());
    return hnf_canonical(rows);
}

OrderLattice lat_scale(const OrderLattice& l, const Rat& s) {
    std::vector<FieldElement> rows;
    for (auto& e : basis_elements(l)) rows.push_back(e * s);
    return hnf_canonical(rows);
}

OrderLattice lat_elem_product(const FieldElement& x, const OrderLattice& l,
                              const FieldSpec& spec) {
    std::vector<FieldElement> rows;
    for (auto& e : basis_elements(l)) rows.push_back(mul(x, e, spec));
    return hnf_canonical(rows);
}

FactoredInt lattice_index(const OrderLattice& sub, const OrderLattice& sup) {
    std::size_t n = sub.dim();
    IMat t(n, std::vector<Int>(n));
    for (std::size_t i = 0; i < n; ++i) {
        auto y = coords_in(sup, basis_element(sub, i));
        for (std::size_t j = 0; j < n; ++j) {
            if (!is_integer(y[j])) throw not_sublattice("not a sublattice");
            t[i][j] = numerator(y[j]);
        }
    }
    Int d = abs(det_bareiss(std::move(t)));
    return factorize(d);
}

OrderLattice endomorphism_order(const OrderLattice& i, const FieldSpec& spec) {
    std::size_t n = i.dim();
    // rho * v_k in I-coordinates equals rho_coords * Mz_k * mat^{-1}; the
    // admissible rho form the intersection over k of preimages of Z^n, whose
    // dual is spanned by the rows of all (Mz_k * mat^{-1})^T.
    auto [madj, d] = tri_adjugate(i.mat);
    IMat stacked;
    stacked.reserve(n * n);
    for (std::size_t k = 0; k < n; ++k) {
        FieldElement vk(n);
        for (std::size_t j = 0; j < n; ++j) vk.c[j] = Rat(i.mat[k][j]);  // den dropped: End is scale-invariant
        QMat repq = regular_rep(vk, spec);
        IMat rep(n, std::vector<Int>(n));
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) rep[r][c] = numerator(repq[r][c]);
        IMat a = imat_mul(rep, madj);  // = d * (Mz_k * mat^{-1})
        IMat at = imat_transpose(a);
        for (auto& row : at) stacked.push_back(std::move(row));
    }
    IMat hs = hnf_lower(std::move(stacked), n);  // dual sum, denominator d
    // Dual back: End = rows of d/d_s * adj(hs)^T.
    auto [sadj, ds] = tri_adjugate(hs);
    IMat sat = imat_transpose(sadj);
    std::vector<FieldElement> rows;
    rows.reserve(n);
    for (std::size_t r = 0; r < n; ++r) {
        FieldElement e(n);
        for (std::size_t c = 0; c < n; ++c) e.c[c] = Rat(d * sat[r][c], ds);
        rows.push_back(std::move(e));
    }
    return hnf_canonical(rows, true);
}

std::vector<IMat> mult_table(const OrderLattice& o, const FieldSpec& spec) {
    std::size_t n = o.dim();
    auto [madj, d] = tri_adjugate(o.mat);
    Int scale = d * o.den;
    auto bs = basis_elements(o);
    std::vector<IMat> table(n, IMat(n, std::vector<Int>(n)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            FieldElement p = mul(bs[i], bs[j], spec);
            // coords = p * den * mat^{-1} = (p * den^2) * madj / (d * den)
            std::vector<Int> num(n);
            for (std::size_t k = 0; k < n; ++k) {
                Rat v = p.c[k] * o.den * o.den;
                if (!is_integer(v)) throw consistency_error("mult_table: not a ring lattice");
                num[k] = numerator(v);
            }
            std::vector<Int> row(n, 0);
            for (std::size_t k = 0; k < n; ++k) {
                if (num[k] == 0) continue;
                for (std::size_t c = 0; c < n; ++c) row[c] += num[k] * madj[k][c];
            }
            for (std::size_t c = 0; c < n; ++c) {
                Int q, r;
                boost::multiprecision::divide_qr(row[c], scale, q, r);
                if (r != 0) throw consistency_error("mult_table: not a ring lattice");
                row[c] = q;
            }
            table[i][j] = row;
            table[j][i] = std::move(row);
        }
    return table;
}

bool contains_one(const OrderLattice& o, const FieldSpec& spec) {
    return lattice_contains(o, fe_int(spec, 1));
}

bool ring_closed(const OrderLattice& o, const FieldSpec& spec) {
    if (!contains_one(o, spec)) return false;
    auto bs = basis_elements(o);
    for (std::size_t i = 0; i < bs.size(); ++i)
        for (std::size_t j = i; j < bs.size(); ++j)
            if (!lattice_contains(o, mul(bs[i], bs[j], spec))) return false;
    return true;
}

bool is_ideal_of(const OrderLattice& i, const OrderLattice& o, const FieldSpec& spec) {
    auto bi = basis_elements(i);
    auto bo = basis_elements(o);
    for (auto& x : bi) {
        if (!lattice_contains(o, x)) return false;
        for (auto& y : bo)
            if (!lattice_contains(i, mul(x, y, spec))) return false;
    }
    return true;
}

OrderLattice frobenius_radical(const OrderLattice& o, const Int& q, const FieldSpec& spec) {
    std::size_t n = o.dim();
    auto table = mult_table(o, spec);
    auto mul_modq = [&](const std::vector<Int>& u, const std::vector<Int>& v) {
        std::vector<Int> r(n, 0);
        for (std::size_t i = 0; i < n; ++i) {
            if (u[i] == 0) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (v[j] == 0) continue;
                const auto& row = table[i][j];
                Int f = mod_floor(u[i] * v[j], q);
                if (f == 0) continue;
                for (std::size_t k = 0; k < n; ++k) r[k] += f * row[k];
            }
        }
        for (auto& x : r) x = mod_floor(x, q);
        return r;
    };
    // Matrix of the q-power map y -> y^q on o/qo (rows = images of basis).
    IMat phi(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Int> acc(n, 0), base(n, 0);
        acc[i] = 1;  // start from b_i, square-and-multiply on exponent q
        base = acc;
        Int e = q - 1;  // acc * base^e = b_i^q
        while (e > 0) {
            if ((e & 1) != 0) acc = mul_modq(acc, base);
            e >>= 1;
            if (e > 0) base = mul_modq(base, base);
        }
        phi[i] = std::move(acc);
    }
    // Iterate ceil(log_q n) times so the kernel is the full nilradical.
    unsigned m = 1;
    Int qk = q;
    while (qk < n) { qk *= q; ++m; }
    IMat pw = phi;
    for (unsigned s = 1; s < m; ++s) {
        IMat nx = imat_mul(pw, phi);
        for (auto& row : nx)
            for (auto& x : row) x = mod_floor(x, q);
        pw = std::move(nx);
    }
    IMat ker = left_kernel_mod(pw, q);
    std::vector<FieldElement> rows;
    for (auto& kr : ker) {
        FieldElement e(n);
        for (std::size_t j = 0; j < n; ++j) {
            Rat s(0);
            for (std::size_t i = 0; i < n; ++i)
                if (kr[i] != 0) s += Rat(kr[i] * o.mat[i][j], o.den);
            e.c[j] = s;
        }
        rows.push_back(std::move(e));
    }
    for (auto& b : basis_elements(o)) rows.push_back(b * Rat(q));
    return hnf_canonical(rows);
}

std::vector<Idempotent> idempotents_mod(const OrderLattice& o, const OrderLattice& i,
                                        const FieldSpec& spec, std::uint64_t budget) {
    std::size_t n = o.dim();
    // Base change of i in o-coordinates, HNF'd there.
    IMat t(n, std::vector<Int>(n));
    for (std::size_t r = 0; r < n; ++r) {
        auto y = coords_in(o, basis_element(i, r));
        for (std::size_t c = 0; c < n; ++c) {
            if (!is_integer(y[c])) throw not_sublattice("ideal is not contained in the order");
            t[r][c] = numerator(y[c]);
        }
    }
    IMat h = hnf_lower(std::move(t), n);
    Int size = 1;
    for (std::size_t k = 0; k < n; ++k) size *= h[k][k];
    if (size > budget) throw budget_error("quotient budget exceeded: |O/I| = " + size.str());

    auto reduce = [&](std::vector<Int> v) {
        for (std::size_t k = n; k-- > 0;) {
            Int f = floor_div(v[k], h[k][k]);
            if (f != 0)
                for (std::size_t c = 0; c <= k; ++c) v[c] -= f * h[k][c];
        }
        return v;
    };

    auto table = mult_table(o, spec);
    auto mul_red = [&](const std::vector<Int>& u, const std::vector<Int>& v) {
        std::vector<Int> r(n, 0);
        for (std::size_t a = 0; a < n; ++a) {
            if (u[a] == 0) continue;
            for (std::size_t b = 0; b < n; ++b) {
                if (v[b] == 0) continue;
                Int f = u[a] * v[b];
                const auto& row = table[a][b];
                for (std::size_t k = 0; k < n; ++k) r[k] += f * row[k];
            }
        }
        return reduce(std::move(r));
    };

    // Enumerate canonical residues: digit i ranges over [0, h[i][i]).
    std::vector<std::size_t> free_pos;
    for (std::size_t k = 0; k < n; ++k)
        if (h[k][k] > 1) free_pos.push_back(k);
    std::vector<std::vector<Int>> idem;
    std::vector<Int> digits(free_pos.size(), 0);
    for (;;) {
        std::vector<Int> v(n, 0);
        for (std::size_t k = 0; k < free_pos.size(); ++k) v[free_pos[k]] = digits[k];
        auto vv = reduce(v);
        if (mul_red(vv, vv) == vv) idem.push_back(vv);
        // increment mixed-radix counter
        std::size_t pos = 0;
        while (pos < digits.size()) {
            digits[pos] += 1;
            if (digits[pos] < h[free_pos[pos]][free_pos[pos]]) break;
            digits[pos] = 0;
            ++pos;
        }
        if (pos == digits.size()) break;
        if (digits.empty()) break;
    }
    if (free_pos.empty()) {
        // trivial quotient: only 0
        idem.assign(1, std::vector<Int>(n, 0));
    }

    std::vector<Idempotent> out;
    auto is_zero = [](const std::vector<Int>& v) {
        return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
    };
    for (auto& e : idem) {
        Idempotent id;
        id.coords = e;
        if (!is_zero(e)) {
            // primitive iff no idempotent e' not in {0, e} with e*e' = e'
            id.primitive = true;
            for (auto& e2 : idem) {
                if (is_zero(e2) || e2 == e) continue;
                if (mul_red(e, e2) == e2) { id.primitive = false; break; }
            }
        }
        out.push_back(std::move(id));
    }
    return out;
}

bool span_contains(const std::vector<FieldElement>& gens, const FieldElement& x) {
    std::vector<FieldElement> all = gens;
    all.push_back(x);
    auto [den, rows] = clear_denominators(all);
    std::vector<Int> target = std::move(rows.back());
    rows.pop_back();
    Echelon e = hnf_echelon(std::move(rows), x.c.size());
    // Reduce the target against the echelon rows; membership iff it hits 0
    // with integral quotients.
    for (std::size_t r = e.rows.size(); r-- > 0;) {
        std::size_t j = e.pivot_col[r];
        if (target[j] == 0) continue;
        Int q, rem;
        boost::multiprecision::divide_qr(target[j], e.rows[r][j], q, rem);
        if (rem != 0) return false;
        for (std::size_t c = 0; c <= j; ++c) target[c] -= q * e.rows[r][c];
    }
    return std::all_of(target.begin(), target.end(), [](const Int& v) { return v == 0; });
}

}  // namespace radix
