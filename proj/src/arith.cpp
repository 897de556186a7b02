#include "radix/arith.hpp"

#include <algorithm>
#include <sstream>

namespace radix {

FactoredInt FactoredInt::make(int sign, std::map<Int, long> f) {
    FactoredInt r;
    r.sign = sign;
    r.factors = std::move(f);
    r.value = r.recompute();
    return r;
}

Int FactoredInt::recompute() const {
    if (sign == 0) return 0;
    Int v = sign;
    for (auto& [q, e] : factors) v *= ipow(q, e);
    return v;
}

long FactoredInt::vq(const Int& q) const {
    auto it = factors.find(q);
    return it == factors.end() ? 0 : it->second;
}

FactoredInt FactoredInt::mul(const FactoredInt& o) const {
    if (sign == 0 || o.sign == 0) return zero();
    std::map<Int, long> f = factors;
    for (auto& [q, e] : o.factors) f[q] += e;
    return make(sign * o.sign, std::move(f));
}

FactoredInt FactoredInt::pow(long e) const {
    if (e == 0) return one();
    if (sign == 0) return zero();
    std::map<Int, long> f;
    for (auto& [q, x] : factors) f[q] = x * e;
    return make((sign == -1 && (e & 1)) ? -1 : 1, std::move(f));
}

FactoredInt FactoredInt::div(const FactoredInt& o) const {
    if (o.sign == 0) throw consistency_error("division by zero");
    if (sign == 0) return zero();
    std::map<Int, long> f = factors;
    for (auto& [q, e] : o.factors) {
        f[q] -= e;
        if (f[q] < 0) throw consistency_error("factored division is not exact");
        if (f[q] == 0) f.erase(q);
    }
    return make(sign * o.sign, std::move(f));
}

FactoredInt FactoredInt::abs() const {
    FactoredInt r = *this;
    if (r.sign < 0) { r.sign = 1; r.value = -r.value; }
    return r;
}

std::string FactoredInt::to_string() const {
    if (sign == 0) return "0";
    std::ostringstream os;
    if (sign < 0) os << "-";
    if (factors.empty()) {
        os << "1";
    } else {
        bool first = true;
        for (auto& [q, e] : factors) {
            if (!first) os << " * ";
            first = false;
            os << q;
            if (e > 1) os << "^" << e;
        }
    }
    return os.str();
}

namespace {

Int powm(const Int& b, const Int& e, const Int& m) {
    return boost::multiprecision::powm(b, e, m);
}

bool miller_rabin(const Int& n, const Int& a) {
    Int d = n - 1;
    unsigned long s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    Int x = powm(a % n, d, n);
    if (x == 1 || x == n - 1) return true;
    for (unsigned long i = 1; i < s; ++i) {
        x = (x * x) % n;
        if (x == n - 1) return true;
    }
    return false;
}

int jacobi(Int a, Int n) {
    a = mod_floor(a, n);
    int t = 1;
    while (a != 0) {
        while ((a & 1) == 0) {
            a >>= 1;
            Int r = n % 8;
            if (r == 3 || r == 5) t = -t;
        }
        std::swap(a, n);
        if ((a % 4) == 3 && (n % 4) == 3) t = -t;
        a %= n;
    }
    return n == 1 ? t : 0;
}

// Strong Lucas probable-prime test with Selfridge parameters.
bool strong_lucas(const Int& n) {
    Int d = 5;
    int sgn = 1;
    while (true) {
        int j = jacobi(sgn * d, n);
        if (j == -1) break;
        if (j == 0 && sgn * d != n && sgn * d != -n) return false;
        d += 2;
        sgn = -sgn;
    }
    Int D = sgn * d;
    Int P = 1, Q = (1 - D) / 4;
    Int k = n + 1;
    unsigned long s = 0;
    while ((k & 1) == 0) { k >>= 1; ++s; }
    // Lucas sequence by binary ladder on k.
    Int U = 0, V = 2, Qk = 1;
    Int bit = Int(1) << (msb(k));
    while (bit > 0) {
        U = mod_floor(U * V, n);
        V = mod_floor(V * V - 2 * Qk, n);
        Qk = mod_floor(Qk * Qk, n);
        if ((k & bit) != 0) {
            Int U2 = U * P + V;
            if ((U2 & 1) != 0) U2 += n;
            U2 = mod_floor(U2 >> 1, n);
            Int V2 = D * U + P * V;
            if ((V2 & 1) != 0) V2 += n;
            V2 = mod_floor(V2 >> 1, n);
            U = U2;
            V = V2;
            Qk = mod_floor(Qk * Q, n);
        }
        bit >>= 1;
    }
    if (U == 0 || V == 0) return true;
    for (unsigned long i = 1; i < s; ++i) {
        V = mod_floor(V * V - 2 * Qk, n);
        if (V == 0) return true;
        Qk = mod_floor(Qk * Qk, n);
    }
    return false;
}

}  // namespace

bool is_prime(const Int& n) {
    if (n < 2) return false;
    static const long small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (long p : small) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    Int r = sqrt(n);
    if (r * r == n) return false;
    for (long p : small)
        if (!miller_rabin(n, p)) return false;
    if (n < Int("3317044064679887385961981")) return true;  // MR bases above suffice
    return strong_lucas(n);
}

long vp(const Int& q, const Int& x) {
    if (x == 0) throw error("valuation undefined for 0");
    if (!is_prime(q)) throw error("valuation base " + q.str() + " is not prime");
    long v = 0;
    Int y = x;
    while (y % q == 0) { y /= q; ++v; }
    return v;
}

namespace {

Int pollard_brent(const Int& n, unsigned long& budget) {
    // Brent's cycle variant with batched gcds.
    for (Int c = 1; budget > 0; ++c) {
        Int x = 2, y = 2, d = 1, q = 1, ys = y;
        unsigned long r = 1;
        auto f = [&](const Int& v) { return (v * v + c) % n; };
        while (d == 1 && budget > 0) {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = f(y);
            unsigned long k = 0;
            while (k < r && d == 1) {
                ys = y;
                unsigned long m = std::min<unsigned long>(128, r - k);
                if (m > budget) m = budget;
                for (unsigned long i = 0; i < m; ++i) {
                    y = f(y);
                    q = (q * boost::multiprecision::abs(x - y)) % n;
                }
                budget -= m;
                d = gcd(q, n);
                k += m;
                if (m == 0) break;
            }
            r <<= 1;
        }
        if (d == n) {
            // backtrack
            do {
                ys = f(ys);
                d = gcd(boost::multiprecision::abs(x - ys), n);
            } while (d == 1);
        }
        if (d != 1 && d != n) return d;
    }
    return 0;
}

}  // namespace

FactoredInt factorize(const Int& x, const std::vector<std::pair<Int, long>>* hint,
                      const FactorizeOptions& opt) {
    if (x == 0) throw error("factorize(0) undefined");
    std::map<Int, long> fac;
    Int m = boost::multiprecision::abs(x);
    if (hint) {
        for (auto& [q, e] : *hint) {
            if (q < 2 || !is_prime(q)) throw error("factor hint " + q.str() + " is not prime");
            long got = 0;
            while (m % q == 0) { m /= q; ++got; }
            if (got == 0 || (e > 0 && got < e))
                throw error("factor hint " + q.str() + " does not divide to the stated power");
            fac[q] = got;
        }
    }
    for (Int d = 2; d * d <= m && d <= opt.trial_bound; d == 2 ? d = 3 : d += 2) {
        while (m % d == 0) { m /= d; ++fac[d]; }
    }
    std::vector<Int> stack;
    if (m > 1) stack.push_back(m);
    unsigned long budget = opt.rho_budget;
    while (!stack.empty()) {
        Int c = stack.back();
        stack.pop_back();
        if (is_prime(c)) { ++fac[c]; continue; }
        Int r = sqrt(c);
        if (r * r == c) { stack.push_back(r); stack.push_back(r); continue; }
        Int d = pollard_brent(c, budget);
        if (d == 0) {
            std::vector<std::pair<Int, long>> part(fac.begin(), fac.end());
            Int rem = c;
            for (auto& s : stack) rem *= s;
            throw factorization_incomplete(std::move(part), rem);
        }
        stack.push_back(d);
        stack.push_back(c / d);
    }
    return FactoredInt::make(x < 0 ? -1 : 1, std::move(fac));
}

long wieferich(const Int& p, const Int& a) {
    if (!is_prime(p)) throw error("wieferich base must be prime");
    if (gcd(p, a) != 1) throw error("wieferich requires gcd(p, a) = 1");
    // v_p(a^{p-1} - 1) via increasing prime-power moduli; Fermat gives >= 1.
    long w = 0;
    Int pk = p;
    for (;;) {
        pk *= p;
        if (powm(mod_floor(a, pk), p - 1, pk) != 1) return w + 1;
        ++w;
        if (w > 4096) throw error("wieferich valuation implausibly large");
    }
}

namespace {
Int legendre_vfact(const Int& m, const Int& q) {
    Int v = 0, pk = q;
    while (pk <= m) { v += m / pk; pk *= q; }
    return v;
}
}  // namespace

long binom_valuation(const Int& q, long x, long z, const Int& y) {
    if (!is_prime(q)) throw error("binom_valuation base must be prime");
    if (x < 0 || z < 1 || z >= q) throw error("binom_valuation: z out of range");
    Int m = ipow(q, x) * z;
    if (y < 1 || y > m) throw error("binom_valuation: y out of range");
    Int v = legendre_vfact(m, q) - legendre_vfact(y, q) - legendre_vfact(m - y, q);
    return static_cast<long>(v);
}

std::vector<Int> geom_square_coeffs(long r) {
    if (r < 0) throw error("geom_square_coeffs: r must be >= 0");
    std::vector<Int> c(2 * r + 1);
    for (long d = 0; d <= 2 * r; ++d) c[d] = std::min(d, 2 * r - d) + 1;
    return c;
}

namespace {
// Integer k-th root test: returns root if x = r^k exactly.
std::optional<Int> exact_root(const Int& x, unsigned long k) {
    if (x < 0) {
        if (k % 2 == 0) return std::nullopt;
        auto r = exact_root(-x, k);
        if (r) return -*r;
        return std::nullopt;
    }
    Int r;
    mpz_root(r.backend().data(), x.backend().data(), k);
    return ipow(r, k) == x ? std::optional<Int>(r) : std::nullopt;
}
}  // namespace

std::string irreducibility_obstruction(unsigned n, const Int& a) {
    if (n < 2) return "degree must be >= 2";
    if (a == 0) return "a = 0";
    if (a == 1) return "a = 1";
    unsigned m = n;
    for (unsigned p = 2; p <= m; ++p) {
        if (m % p != 0) continue;
        while (m % p == 0) m /= p;
        if (exact_root(a, p))
            return "a is a p-th power (p=" + std::to_string(p) + ")";
    }
    if (n % 4 == 0 && a < 0 && (-a) % 4 == 0) {
        if (exact_root((-a) / 4, 4)) return "a = -4 t^4 with 4 | n";
    }
    return "";
}

bool is_irreducible_pure(unsigned n, const Int& a) {
    return irreducibility_obstruction(n, a).empty();
}

std::pair<Int, Int> lemma21_gcd(const Int& e_ss, const Int& p, long f_minus_estar) {
    if (f_minus_estar < 1) throw error("lemma21_gcd: f - e* must be >= 1");
    if (gcd(e_ss, p) != 1) throw error("lemma21_gcd: e** must be coprime to p");
    Int m = ipow(p, f_minus_estar);
    // u = e**^{-1} mod m, normalized into [1, m-1].
    Int t0 = 0, t1 = 1, r0 = m, r1 = mod_floor(e_ss, m);
    while (r1 != 0) {
        Int q = r0 / r1;
        std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
        std::tie(t0, t1) = std::make_pair(t1, t0 - q * t1);
    }
    if (r0 != 1) throw error("lemma21_gcd: not invertible");
    Int u = mod_floor(t0, m);
    if (u == 0) u = m;  // cannot happen for m >= 2, kept for safety
    Int v = (e_ss * u - 1) / m;
    return {u, v};
}

}  // namespace radix
