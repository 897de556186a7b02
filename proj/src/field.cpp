#include "radix/field.hpp"

namespace radix {

FieldSpec::FieldSpec(unsigned n_, const Int& a_, const std::vector<std::pair<Int, long>>* a_hint)
    : n(n_), a_input(a_) {
    if (n < 2) throw reducible_input("degree must be >= 2");
    if (a_ == 0) throw reducible_input("a = 0");

    // Strip n-th power content from the radicand (the field is unchanged,
    // alpha is rescaled by an integer).
    if (a_ == 1 || a_ == -1) {
        a = a_;
    } else {
        FactoredInt fa = factorize(a_, a_hint);
        std::map<Int, long> red;
        reduction_scale = 1;
        for (auto& [q, e] : fa.factors) {
            long r = e % n;
            if (r) red[q] = r;
            reduction_scale *= ipow(q, e / n);
        }
        factor_a = FactoredInt::make(fa.sign, std::move(red));
        a = factor_a.value;
    }
    std::string obstruction = irreducibility_obstruction(n, a);
    if (!obstruction.empty()) throw reducible_input(obstruction);

    unsigned m = n;
    for (unsigned p = 2; p <= m; ++p) {
        if (m % p != 0) continue;
        unsigned f = 0;
        while (m % p == 0) { m /= p; ++f; }
        factor_n.emplace_back(Int(p), f);
    }
    if (a == -1) factor_a = FactoredInt::make(-1, {});
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    FieldElement r(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) r.c[i] = c[i] + o.c[i];
    return r;
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    FieldElement r(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) r.c[i] = c[i] - o.c[i];
    return r;
}

FieldElement FieldElement::operator-() const {
    FieldElement r(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) r.c[i] = -c[i];
    return r;
}

FieldElement FieldElement::operator*(const Rat& s) const {
    FieldElement r(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) r.c[i] = c[i] * s;
    return r;
}

bool FieldElement::is_zero() const {
    for (auto& x : c)
        if (x != 0) return false;
    return true;
}

FieldElement fe_int(const FieldSpec& spec, const Int& v) {
    FieldElement r(spec.n);
    r.c[0] = v;
    return r;
}

FieldElement fe_alpha_pow(const FieldSpec& spec, unsigned k) {
    if (k >= spec.n) throw error("fe_alpha_pow: exponent out of range");
    FieldElement r(spec.n);
    r.c[k] = 1;
    return r;
}

FieldElement mul(const FieldElement& x, const FieldElement& y, const FieldSpec& spec) {
    unsigned n = spec.n;
    if (x.c.size() != n || y.c.size() != n) throw error("mul: dimension mismatch");
    FieldElement r(n);
    for (unsigned i = 0; i < n; ++i) {
        if (x.c[i] == 0) continue;
        for (unsigned j = 0; j < n; ++j) {
            if (y.c[j] == 0) continue;
            unsigned k = i + j;
            if (k < n)
                r.c[k] += x.c[i] * y.c[j];
            else
                r.c[k - n] += x.c[i] * y.c[j] * spec.a;
        }
    }
    return r;
}

FieldElement fe_pow(const FieldElement& x, const Int& e, const FieldSpec& spec) {
    if (e < 0) throw error("fe_pow: negative exponent");
    FieldElement r = fe_int(spec, 1), b = x;
    Int k = e;
    while (k > 0) {
        if ((k & 1) != 0) r = mul(r, b, spec);
        k >>= 1;
        if (k > 0) b = mul(b, b, spec);
    }
    return r;
}

QMat regular_rep(const FieldElement& x, const FieldSpec& spec) {
    unsigned n = spec.n;
    QMat m(n, std::vector<Rat>(n, Rat(0)));
    FieldElement cur = x;
    for (unsigned i = 0; i < n; ++i) {
        for (unsigned j = 0; j < n; ++j) m[i][j] = cur.c[j];
        if (i + 1 < n) {
            // multiply by alpha: shift with wraparound times a
            FieldElement next(n);
            for (unsigned j = 0; j + 1 < n; ++j) next.c[j + 1] = cur.c[j];
            next.c[0] = cur.c[n - 1] * spec.a;
            cur = next;
        }
    }
    return m;
}

Rat trace(const FieldElement& x, const FieldSpec& spec) {
    // Tr(alpha^j) = 0 for 0 < j < n, Tr(1) = n.
    return x.c[0] * spec.n;
}

Rat qmat_det(QMat m) {
    std::size_t n = m.size();
    Rat det = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && m[piv][k] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != k) { std::swap(m[piv], m[k]); det = -det; }
        det *= m[k][k];
        Rat inv = Rat(1) / m[k][k];
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m[i][k] == 0) continue;
            Rat f = m[i][k] * inv;
            for (std::size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
        }
    }
    return det;
}

Rat norm(const FieldElement& x, const FieldSpec& spec) {
    return qmat_det(regular_rep(x, spec));
}

QMat trace_matrix(const std::vector<FieldElement>& basis, const FieldSpec& spec) {
    std::size_t m = basis.size();
    QMat t(m, std::vector<Rat>(m, Rat(0)));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i; j < m; ++j) {
            Rat v = trace(mul(basis[i], basis[j], spec), spec);
            t[i][j] = v;
            t[j][i] = v;
        }
    return t;
}

FactoredInt disc_of_pure(const std::vector<std::pair<Int, unsigned>>& factor_n,
                         unsigned n, const FactoredInt& c) {
    int sign = ((static_cast<long>(n) - 1) * (static_cast<long>(n) - 2) / 2) % 2 ? -1 : 1;
    std::map<Int, long> f;
    for (auto& [p, e] : factor_n) f[p] += static_cast<long>(e) * n;
    FactoredInt cpart = c.pow(n - 1);
    for (auto& [q, e] : cpart.factors) f[q] += e;
    return FactoredInt::make(sign * cpart.sign, std::move(f));
}

FactoredInt base_disc(const FieldSpec& spec) {
    return disc_of_pure(spec.factor_n, spec.n, spec.factor_a);
}

}  // namespace radix
