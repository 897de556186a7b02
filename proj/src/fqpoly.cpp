#include "radix/fqpoly.hpp"

namespace radix {

FqPoly fq_trim(FqPoly f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
    return f;
}

FqPoly fq_reduce(const std::vector<Int>& coeffs, const Int& q) {
    FqPoly f(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) f[i] = mod_floor(coeffs[i], q);
    return fq_trim(std::move(f));
}

int fq_deg(const FqPoly& f) { return static_cast<int>(f.size()) - 1; }

FqPoly fq_mul(const FqPoly& a, const FqPoly& b, const Int& q) {
    if (a.empty() || b.empty()) return {};
    FqPoly r(a.size() + b.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    for (auto& x : r) x = mod_floor(x, q);
    return fq_trim(std::move(r));
}

FqPoly fq_sub(const FqPoly& a, const FqPoly& b, const Int& q) {
    FqPoly r(std::max(a.size(), b.size()), Int(0));
    for (std::size_t i = 0; i < r.size(); ++i) {
        Int v = (i < a.size() ? a[i] : Int(0)) - (i < b.size() ? b[i] : Int(0));
        r[i] = mod_floor(v, q);
    }
    return fq_trim(std::move(r));
}

namespace {
Int inv_mod(const Int& x, const Int& q) { return boost::multiprecision::powm(x, q - 2, q); }
}  // namespace

FqPoly fq_rem(FqPoly a, const FqPoly& b, const Int& q) {
    if (b.empty()) throw error("fq_rem: division by zero polynomial");
    Int lcinv = inv_mod(b.back(), q);
    while (a.size() >= b.size()) {
        Int f = mod_floor(a.back() * lcinv, q);
        std::size_t off = a.size() - b.size();
        if (f != 0)
            for (std::size_t i = 0; i < b.size(); ++i)
                a[off + i] = mod_floor(a[off + i] - f * b[i], q);
        a.pop_back();
        a = fq_trim(std::move(a));
        if (a.size() < b.size()) break;
    }
    return a;
}

FqPoly fq_quo(FqPoly a, const FqPoly& b, const Int& q) {
    if (b.empty()) throw error("fq_quo: division by zero polynomial");
    if (a.size() < b.size()) return {};
    FqPoly quo(a.size() - b.size() + 1, Int(0));
    Int lcinv = inv_mod(b.back(), q);
    for (std::size_t step = a.size(); step >= b.size();) {
        if (a.size() < b.size()) break;
        Int f = mod_floor(a.back() * lcinv, q);
        std::size_t off = a.size() - b.size();
        quo[off] = f;
        if (f != 0)
            for (std::size_t i = 0; i < b.size(); ++i)
                a[off + i] = mod_floor(a[off + i] - f * b[i], q);
        a.pop_back();
        a = fq_trim(std::move(a));
        step = a.size();
    }
    return fq_trim(std::move(quo));
}

FqPoly fq_monic(FqPoly f, const Int& q) {
    if (f.empty()) return f;
    Int inv = inv_mod(f.back(), q);
    for (auto& x : f) x = mod_floor(x * inv, q);
    return f;
}

FqPoly fq_gcd(FqPoly a, FqPoly b, const Int& q) {
    while (!b.empty()) {
        FqPoly r = fq_rem(std::move(a), b, q);
        a = std::move(b);
        b = std::move(r);
    }
    return fq_monic(std::move(a), q);
}

FqPoly fq_derivative(const FqPoly& f, const Int& q) {
    if (f.size() <= 1) return {};
    FqPoly d(f.size() - 1);
    for (std::size_t i = 1; i < f.size(); ++i) d[i - 1] = mod_floor(f[i] * i, q);
    return fq_trim(std::move(d));
}

FqPoly fq_powmod(const FqPoly& base, const Int& e, const FqPoly& f, const Int& q) {
    FqPoly acc{Int(1)};
    FqPoly b = fq_rem(base, f, q);
    Int k = e;
    while (k > 0) {
        if ((k & 1) != 0) acc = fq_rem(fq_mul(acc, b, q), f, q);
        k >>= 1;
        if (k > 0) b = fq_rem(fq_mul(b, b, q), f, q);
    }
    return acc;
}

FqPoly fq_xpow_mod(const Int& e, const FqPoly& f, const Int& q) {
    return fq_powmod(FqPoly{Int(0), Int(1)}, e, f, q);
}

FqPoly fq_radical(FqPoly f, const Int& q) {
    f = fq_monic(std::move(f), q);
    if (fq_deg(f) <= 0) return FqPoly{Int(1)};
    FqPoly d = fq_derivative(f, q);
    if (d.empty()) {
        // f = g(X^q); over F_q the q-th root has the same coefficients at
        // indices divided by q.
        std::size_t step = static_cast<std::size_t>(q);
        FqPoly g;
        for (std::size_t i = 0; i < f.size(); i += step) g.push_back(f[i]);
        return fq_radical(std::move(g), q);
    }
    FqPoly u = fq_gcd(f, d, q);
    FqPoly v = fq_quo(f, u, q);  // product of factors with exponent not divisible by q
    // Remove the v-part from f, leaving the q-power part.
    FqPoly h = std::move(f);
    for (;;) {
        FqPoly g = fq_gcd(h, v, q);
        if (fq_deg(g) <= 0) break;
        h = fq_quo(h, g, q);
    }
    if (fq_deg(h) <= 0) return fq_monic(std::move(v), q);
    return fq_mul(fq_monic(std::move(v), q), fq_radical(std::move(h), q), q);
}

std::vector<std::pair<unsigned, unsigned>> fq_distinct_degrees(FqPoly f, const Int& q) {
    f = fq_monic(std::move(f), q);
    std::vector<std::pair<unsigned, unsigned>> out;
    FqPoly x{Int(0), Int(1)};
    FqPoly r = fq_rem(x, f, q);
    unsigned d = 0;
    while (fq_deg(f) > 0) {
        ++d;
        if (2 * d > static_cast<unsigned>(fq_deg(f))) {
            out.emplace_back(static_cast<unsigned>(fq_deg(f)), 1u);
            break;
        }
        r = fq_powmod(r, q, f, q);  // now X^{q^d} mod f
        FqPoly g = fq_gcd(f, fq_sub(r, x, q), q);
        if (fq_deg(g) > 0) {
            out.emplace_back(d, static_cast<unsigned>(fq_deg(g)) / d);
            f = fq_quo(f, g, q);
            r = fq_rem(r, f, q);
        }
    }
    return out;
}

}  // namespace radix
