#include "radix/local.hpp"

#include "radix/fqpoly.hpp"

#include <sstream>

namespace radix {

unsigned ResidueProfile::field_count() const {
    switch (kind) {
        case Kind::fp_power: return count;
        case Kind::f2_power_times_f4: return count + 1;
        case Kind::unramified_product: return static_cast<unsigned>(degrees.size());
        case Kind::opaque: return 0;
    }
    return 0;
}

unsigned ResidueProfile::fq_dimension() const {
    switch (kind) {
        case Kind::fp_power: return count;
        case Kind::f2_power_times_f4: return count + 2;
        case Kind::unramified_product: {
            unsigned s = 0;
            for (auto d : degrees) s += d;
            return s;
        }
        case Kind::opaque: return 0;
    }
    return 0;
}

std::string ResidueProfile::to_string() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::fp_power:
            if (count <= 4) {
                for (unsigned i = 0; i < count; ++i) os << (i ? " x " : "") << "F" << q;
            } else {
                os << "F" << q << "^" << count;
            }
            break;
        case Kind::f2_power_times_f4:
            if (count == 0) os << "F4";
            else if (count == 1) os << "F2 x F4";
            else os << "F2^" << count << " x F4";
            break;
        case Kind::unramified_product: {
            os << "unramified: degrees [";
            for (std::size_t i = 0; i < degrees.size(); ++i)
                os << (i ? ", " : "") << degrees[i];
            os << "]";
            break;
        }
        case Kind::opaque: os << "opaque"; break;
    }
    return os.str();
}

namespace {

long to_long(const Int& v) { return static_cast<long>(v); }

// Assert helper for internal closed-form identities.
void require(bool ok, const char* what) {
    if (!ok) throw consistency_error(what);
}

std::string pow_label(const std::string& base, long e) {
    if (e == 0) return "";
    if (e == 1) return base;
    return base + "^" + std::to_string(e);
}

std::string join_label(std::initializer_list<std::string> parts) {
    std::string out;
    for (auto& p : parts) {
        if (p.empty()) continue;
        if (!out.empty()) out += "*";
        out += p;
    }
    return out.empty() ? "1" : out;
}

}  // namespace

RadicalSetup setup_lemma21(const FieldSpec& spec, const Int& q) {
    if (!spec.prime_power()) throw error("setup_lemma21 needs prime power degree");
    RadicalSetup s;
    s.q = q;
    s.p = spec.p();
    s.f = spec.f();
    long e = spec.factor_a.vq(q);
    if (e == 0) throw error("setup_lemma21: q does not divide a");
    if (Int(e) >= ipow(s.p, s.f)) throw error("spec not reduced: v_q(a) >= n");
    s.e = e;
    s.e_star = vp(s.p, Int(e));
    s.e_star_star = Int(e) / ipow(s.p, s.e_star);
    auto [u, v] = lemma21_gcd(s.e_star_star, s.p, s.f - s.e_star);
    s.u = u;
    s.v = v;

    int csign = (spec.factor_a.sign < 0 && (u & 1) != 0) ? -1 : 1;
    std::map<Int, long> fc, fcs;
    for (auto& [qi, ei] : spec.factor_a.factors) {
        if (qi == q) continue;
        fc[qi] = fcs[qi] = ei * to_long(u);
    }
    s.factor_c_star = FactoredInt::make(csign, fcs);
    fc[q] = to_long(ipow(s.p, s.e_star));
    s.factor_c = FactoredInt::make(csign, fc);
    s.c = s.factor_c.value;
    s.c_star = s.factor_c_star.value;

    s.gamma = fe_alpha_pow(spec, static_cast<unsigned>(to_long(u))) * Rat(1, ipow(q, to_long(v)));
    require(fe_pow(s.gamma, spec.n, spec) == fe_int(spec, s.c), "gamma^n != c");
    if (s.e_star >= 1) {
        FieldElement gs =
            fe_pow(s.gamma, ipow(s.p, s.f - s.e_star), spec) * Rat(1, q);
        require(fe_pow(gs, ipow(s.p, s.e_star), spec) == fe_int(spec, s.c_star),
                "gamma*^{p^e*} != c*");
        s.gamma_star = std::move(gs);
    }
    return s;
}

namespace {

// Residue profile of the Section-4 order for parameters (p, f0, w).
ResidueProfile coprime_residue(const Int& p, long f0, long w) {
    ResidueProfile r;
    r.q = p;
    if (f0 == 0) {
        r.kind = ResidueProfile::Kind::fp_power;
        r.count = 1;
        return r;
    }
    if (p >= 3 || f0 < w - 1) {
        r.kind = ResidueProfile::Kind::fp_power;
        r.count = static_cast<unsigned>(f0 + 1);
    } else {
        r.kind = ResidueProfile::Kind::f2_power_times_f4;
        r.count = static_cast<unsigned>(f0 - 1);
    }
    return r;
}

// Shared Section-4 engine over a "star world": gen^{p^F} = A with
// gcd(p, A) = 1, gen an algebraic integer of K. Produces eta_k, beta and the
// basis element lists; in Section 4 itself gen = alpha, in Section 5 it is
// gamma*.
struct CoprimeWorld {
    Int p;
    unsigned F = 0;
    Int A;
    long w = 0, f0 = 0;
    FieldElement gen, beta;
    std::vector<FieldElement> eta;  // 0..f0

    long k_hat(long k) const {
        Int ph = (k < f0) ? ipow(p, F - 1 - k) * (p - 1) - 1 : ipow(p, F - f0) - 1;
        return to_long(ph);
    }
};

CoprimeWorld make_world(const Int& p, unsigned F, const Int& A, const FieldElement& gen,
                        const FieldSpec& spec) {
    CoprimeWorld w;
    w.p = p;
    w.F = F;
    w.A = A;
    w.gen = gen;
    w.w = wieferich(p, A);
    w.f0 = std::min<long>(F, w.w - 1);
    w.beta = gen - fe_int(spec, A);
    for (long k = 0; k <= w.f0; ++k) {
        FieldElement e(spec.n);
        Int pk = ipow(p, k);
        for (Int j = 0; j < pk; ++j) {
            Int coef = ipow(A, to_long(pk - 1 - j));
            FieldElement term = fe_pow(gen, ipow(p, F - k) * j, spec) * Rat(coef);
            e = e + term;
        }
        w.eta.push_back(std::move(e));
    }
    return w;
}

// Basis labels use the star names when embedded in Section 5.
struct CoprimeBasis {
    std::vector<std::pair<std::string, FieldElement>> order_rows;   // B_p
    std::vector<FieldElement> radical_rows;                         // B_p'
};

CoprimeBasis coprime_basis(const CoprimeWorld& w, const FieldSpec& spec, bool star) {
    CoprimeBasis b;
    std::string eta_name = star ? "etastar" : "eta";
    std::string beta_name = star ? "betastar" : "beta";
    for (long k = 0; k <= w.f0; ++k) {
        FieldElement head = w.eta[k] * Rat(1, ipow(w.p, k));
        std::string head_label =
            k == 0 ? "" : eta_name + "_" + std::to_string(k) + "/" + ipow(w.p, k).str();
        FieldElement cur = head;
        for (long i = 0; i <= w.k_hat(k); ++i) {
            b.order_rows.emplace_back(join_label({head_label, pow_label(beta_name, i)}), cur);
            if (i >= 1) b.radical_rows.push_back(cur);
            if (i < w.k_hat(k)) cur = mul(cur, w.beta, spec);
        }
        b.radical_rows.push_back(head * Rat(w.p));
    }
    return b;
}

}  // namespace

EtaResult eta_and_Tk(const Int& p, unsigned f, const Int& a, unsigned k,
                     const FieldSpec& spec) {
    if (gcd(p, a) != 1) throw error("eta_and_Tk: p must be coprime to a");
    if (k > f) throw error("eta_and_Tk: k out of range");
    EtaResult r;
    Int pk = ipow(p, k);
    // eta_k = sum_j a^{p^k-1-j} alpha^{p^{f-k} j}; all exponents stay below n.
    FieldElement e(spec.n);
    for (Int j = 0; j < pk; ++j) {
        Int coef = ipow(a, to_long(pk - 1 - j));
        unsigned expo = static_cast<unsigned>(to_long(ipow(p, f - k) * j));
        e = e + fe_alpha_pow(spec, expo) * Rat(coef);
    }
    r.eta = e;

    // T_k = X^{p^k} - sum_{j=1..p^k} binom(p^k, j)(1-a^{p^k-1})^{j-1} a^{p^k-1}
    //       / p^{kj} * X^{p^k - j}
    long deg = to_long(pk);
    r.t_poly.assign(deg + 1, Rat(0));
    r.t_poly[deg] = 1;
    Int apk = ipow(a, to_long(pk - 1));
    Int binom = 1;
    Int one_minus = 1 - apk;
    Int pref = 1;  // (1 - a^{p^k-1})^{j-1}
    for (long j = 1; j <= deg; ++j) {
        binom = binom * (pk - (j - 1)) / j;
        Rat coef(binom * pref * apk, ipow(p, k * static_cast<unsigned>(j)));
        r.t_poly[deg - j] = -coef;
        pref *= one_minus;
    }
    r.integral = true;
    for (auto& c : r.t_poly)
        if (!is_integer(c)) { r.integral = false; break; }
    long w = wieferich(p, a);
    long f0 = std::min<long>(f, w - 1);
    require(r.integral == (static_cast<long>(k) <= f0), "T_k integrality vs f_0 mismatch");
    return r;
}

FieldElement theta(const Int& p, unsigned f, const Int& a, unsigned l,
                   const FieldSpec& spec) {
    if (gcd(p, a) != 1) throw error("theta: p must be coprime to a");
    if (l > f) throw error("theta: l out of range");
    FieldElement e(spec.n);
    Int pl = ipow(p, l);
    for (Int i = 1; i < pl; ++i) {
        Int coef = ipow(a, to_long(pl - 1 - i)) * i;
        unsigned expo = static_cast<unsigned>(to_long(ipow(p, f - l) * i));
        e = e + fe_alpha_pow(spec, expo) * Rat(coef);
    }
    return e;
}

LocalOrder maximal_shortcut(const Int& q, const FieldElement& gen,
                            const std::string& gen_label, const FactoredInt& disc,
                            ResidueProfile residue, const FieldSpec& spec) {
    LocalOrder lo;
    lo.q = q;
    lo.kind = "maximal-shortcut";
    lo.order = generated_ring(gen, spec);
    lo.radical = frobenius_radical(lo.order, q, spec);
    FieldElement cur = fe_int(spec, 1);
    for (unsigned i = 0; i < spec.n; ++i) {
        std::string l = pow_label(gen_label, i);
        lo.labeled_basis.emplace_back(l.empty() ? "1" : l, cur);
        if (i + 1 < spec.n) cur = mul(cur, gen, spec);
    }
    lo.disc = disc;
    lo.base_disc_used = disc;
    lo.index_over_base = FactoredInt::one();
    lo.residue = std::move(residue);
    return lo;
}

LocalOrder build_q_order(const RadicalSetup& s, const FieldSpec& spec) {
    if (s.q == s.p) throw error("build_q_order: q = p belongs to the non-coprime builder");
    if (s.e_star == 0) throw error("build_q_order: e* = 0, Z[gamma] is already maximal");
    unsigned n = spec.n;
    Int pfe = ipow(s.p, s.f - s.e_star);  // p^{f-e*}
    Int pe = ipow(s.p, s.e_star);         // p^{e*}

    const FieldElement& gs = *s.gamma_star;
    LocalOrder lo;
    lo.q = s.q;
    lo.kind = "q-order";

    std::vector<FieldElement> rows;
    std::vector<FieldElement> rad_rows;
    for (Int l = 0; l < pe; ++l) {
        FieldElement gl = fe_pow(gs, l, spec);
        for (Int k = 0; k < pfe; ++k) {
            FieldElement e = mul(fe_pow(s.gamma, k, spec), gl, spec);
            lo.labeled_basis.emplace_back(
                join_label({pow_label("gamma", to_long(k)), pow_label("gammastar", to_long(l))}),
                e);
            rows.push_back(e);
            if (k >= 1) rad_rows.push_back(e);
        }
        rad_rows.push_back(gl * Rat(s.q));
    }
    lo.order = hnf_canonical(rows, true);
    lo.radical = hnf_canonical(rad_rows);

    OrderLattice zg = generated_ring(s.gamma, spec);
    lo.index_over_base = lattice_index(zg, lo.order);
    // [O_q : Z[gamma]] = q^{p^f (p^{e*}-1)/2}
    Int want = ipow(s.p, s.f) * (pe - 1) / 2;
    require(lo.index_over_base.factors.size() <= 1 &&
                lo.index_over_base.vq(s.q) == to_long(want),
            "q-order index does not match the closed form");
    lo.base_disc_used = disc_of_pure(spec.factor_n, n, s.factor_c);
    long drop = to_long(ipow(s.p, s.f) * (pe - 1));
    lo.disc = lo.base_disc_used.div(FactoredInt::make(1, {{s.q, drop}}));
    require(lo.disc.value == lo.base_disc_used.value / ipow(s.q, drop), "disc drop");
    require(lo.base_disc_used.div(lo.index_over_base.pow(2)).value == lo.disc.value,
            "disc != base_disc / index^2");
    lo.index_vq = to_long(want);
    lo.disc_drop_vq = drop;

    // O_q / I_q is Z[gamma*]/q Z[gamma*]: unramified, degrees from
    // X^{p^{e*}} - c* mod q.
    std::vector<Int> coeffs(to_long(pe) + 1, Int(0));
    coeffs.back() = 1;
    coeffs[0] = -s.c_star;
    FqPoly fbar = fq_reduce(coeffs, s.q);
    require(fq_deg(fq_gcd(fbar, fq_derivative(fbar, s.q), s.q)) == 0,
            "X^{p^e*} - c* not squarefree mod q");
    ResidueProfile rp;
    rp.kind = ResidueProfile::Kind::unramified_product;
    rp.q = s.q;
    for (auto& [d, cnt] : fq_distinct_degrees(fbar, s.q))
        for (unsigned i = 0; i < cnt; ++i) rp.degrees.push_back(d);
    lo.residue = std::move(rp);
    return lo;
}

LocalOrder build_p_order_coprime(const FieldSpec& spec) {
    if (!spec.prime_power()) throw error("build_p_order_coprime needs prime power degree");
    const Int& p = spec.p();
    unsigned f = spec.f();
    if (gcd(p, spec.a) != 1) throw error("build_p_order_coprime: p divides a");

    FactoredInt da = base_disc(spec);
    long w = wieferich(p, spec.a);
    if (w == 1) {
        ResidueProfile rp;  // opaque by design: the Section-4 machinery is not built here
        rp.q = p;
        LocalOrder lo = maximal_shortcut(p, fe_alpha_pow(spec, 1), "a", da, rp, spec);
        lo.kind = "p-coprime";
        return lo;
    }

    CoprimeWorld world = make_world(p, f, spec.a, fe_alpha_pow(spec, 1), spec);
    CoprimeBasis basis = coprime_basis(world, spec, false);

    LocalOrder lo;
    lo.q = p;
    lo.kind = "p-coprime";
    lo.labeled_basis = basis.order_rows;
    std::vector<FieldElement> rows;
    for (auto& [lbl, e] : basis.order_rows) rows.push_back(e);
    lo.order = hnf_canonical(rows, true);
    lo.radical = hnf_canonical(basis.radical_rows);

    OrderLattice zb = power_basis_lattice(spec);  // Z[beta] = Z[alpha]
    lo.index_over_base = lattice_index(zb, lo.order);
    Int d = ipow(p, f - world.f0) * (ipow(p, world.f0) - 1) / (p - 1);
    require(lo.index_over_base.factors.size() <= 1 &&
                lo.index_over_base.vq(p) == to_long(d),
            "coprime index does not match p^d");
    lo.base_disc_used = da;
    lo.disc = da.div(FactoredInt::make(1, {{p, 2 * to_long(d)}}));
    require(lo.base_disc_used.div(lo.index_over_base.pow(2)).value == lo.disc.value,
            "disc != base_disc / index^2");
    lo.index_vq = to_long(d);
    lo.disc_drop_vq = 2 * to_long(d);
    lo.residue = coprime_residue(p, world.f0, w);
    return lo;
}

DigitProfile digit_profile(long t, long p, long width) {
    if (t < 0 || width < 1 || t >= lpow(p, width))
        throw error("digit_profile: t out of range");
    DigitProfile d;
    d.t = t;
    d.p = p;
    d.width = width;
    d.digits.assign(width, 0);
    long rem = t;
    for (long i = 1; i <= width; ++i) {
        long wgt = lpow(p, width - i);
        d.digits[i - 1] = rem / wgt;
        rem %= wgt;
    }
    if (t == 0) {
        d.r_t = 0;
        d.s_t = width;
        d.t_star = 0;
    } else {
        d.r_t = 0;
        for (long i = 1; i <= width; ++i)
            if (d.digits[i - 1] != 0) { d.r_t = i; break; }
        for (long i = width; i >= 1; --i)
            if (d.digits[i - 1] != 0) { d.s_t = i; break; }
        d.t_star = t / lpow(p, width - d.s_t);
    }
    return d;
}

std::pair<long, long> DigitProfile::split(long j) const {
    if (t == 0 || j < 1 || j > s_t - 1) throw error("digit split: j out of range");
    long tp = 0, tpp = 0;
    for (long i = j + 1; i <= s_t; ++i) tp += digits[i - 1] * lpow(p, width - i);
    for (long i = r_t; i <= j; ++i) tpp += digits[i - 1] * lpow(p, j - i);
    return {tp, tpp};
}

long g_k5(long k, long f0s, long e_star, long width) {
    if (k < f0s) return std::min(width, e_star - 1 - k);
    return std::min(width, e_star - f0s);
}

long k_hat5(long k, long f0s, long e_star, long p) {
    if (k < f0s) return lpow(p, e_star - 1 - k) * (p - 1) - 1;
    return lpow(p, e_star - f0s) - 1;
}

long h_prime_kt(const DigitProfile& d, long k, long f0s, long e_star) {
    if (d.t == 0) return 0;
    long g = g_k5(k, f0s, e_star, d.width);
    if (d.r_t > g) return 0;
    long s = 0;
    if (k < f0s) {
        for (long i = d.r_t; i <= g; ++i)
            s += d.digits[i - 1] * lpow(d.p, e_star - 1 - k - i);
        s *= (d.p - 1);
    } else {
        for (long i = d.r_t; i <= g; ++i)
            s += d.digits[i - 1] * lpow(d.p, e_star - f0s - i);
    }
    return s;
}

long d_dblprime_closed_form(long p, long f, long e_star, long f0s) {
    long width = f - e_star;
    auto case_i = [&] {
        return lpow(p, width) * (lpow(p, e_star) - 1 - (p - 1) * f0s) / 2;
    };
    auto case_ii = [&] { return lpow(p, e_star) * (lpow(p, width) - 1) / 2; };
    if (f0s >= 1) {
        if (e_star - 1 <= width) return case_i();
        if (width <= e_star - f0s) return case_ii();
        long kp = e_star - 1 - width;  // 1 <= kp <= f0s - 1
        return lpow(p, width) * (lpow(p, e_star) - 1 - (p - 1) * (f0s - 1 - kp)) / 2 -
               lpow(p, e_star - 1 - kp) * (lpow(p, kp + 1) - 1) / 2;
    }
    return e_star <= width ? case_i() : case_ii();
}

int beta_kt_exponent(long p, long f0s, long w_star, long k, long s_t, long t_star,
                     long g) {
    if (p != 2 || f0s < 1 || f0s != w_star - 1) return 0;
    bool odd = (s_t % 2) != 0;
    if (!odd || s_t > g) return 0;
    if (k == f0s) {
        if (t_star % 3 == 1) return 1;
        if (t_star % 3 == 2) return 2;
        return 0;
    }
    if (k + 1 == f0s) {
        if (t_star % 3 == 0) return 1;
        if (t_star % 3 == 1) return 2;
    }
    return 0;
}

LocalOrder build_p_order_noncoprime(const RadicalSetup& s, const FieldSpec& spec) {
    if (s.q != s.p) throw error("build_p_order_noncoprime: q must equal p");
    if (s.e_star == 0) throw error("build_p_order_noncoprime: e* = 0, use Z[gamma]");
    if (s.e_star >= static_cast<long>(s.f)) throw error("spec not reduced: e* >= f");

    long p = to_long(s.p);
    long f = s.f;
    long e_star = s.e_star;
    long width = f - e_star;

    CoprimeWorld world = make_world(s.p, static_cast<unsigned>(e_star), s.c_star,
                                    *s.gamma_star, spec);
    long f0s = world.f0;
    FieldElement beta_star = world.beta;

    // O_p-hat = Z[gamma] * O_p* with basis gamma^t eta*_k/p^k beta*^i.
    long pfe = lpow(p, width);
    std::vector<FieldElement> ohat_rows;
    for (long t = 0; t < pfe; ++t) {
        FieldElement gt = fe_pow(s.gamma, Int(t), spec);
        for (long k = 0; k <= f0s; ++k) {
            FieldElement head = mul(gt, world.eta[k] * Rat(1, ipow(s.p, k)), spec);
            FieldElement cur = head;
            for (long i = 0; i <= world.k_hat(k); ++i) {
                ohat_rows.push_back(cur);
                if (i < world.k_hat(k)) cur = mul(cur, beta_star, spec);
            }
        }
    }
    OrderLattice ohat = hnf_canonical(ohat_rows, true);

    OrderLattice zg = generated_ring(s.gamma, spec);
    FactoredInt idx_hat = lattice_index(zg, ohat);
    Int d_prime = ipow(s.p, f - f0s) * (ipow(s.p, f0s) - 1) / (s.p - 1) +
                  ipow(s.p, f) * (ipow(s.p, e_star) - 1) / 2;
    require(idx_hat.factors.size() <= 1 && idx_hat.vq(s.p) == to_long(d_prime),
            "[O_p^ : Z[gamma]] does not match p^d'");

    LocalOrder lo;
    lo.q = s.p;
    lo.kind = "p-noncoprime";
    lo.ohat = ohat;
    lo.d_prime = to_long(d_prime);

    // B_p1 and B_p2, plus the replacement set B_p3 for the radical.
    std::vector<FieldElement> order_rows;
    std::vector<FieldElement> rad_rows;
    long d_dbl = 0;
    FieldElement eta_f0_head = world.eta[f0s] * Rat(1, ipow(s.p, f0s));
    for (long t = 0; t < pfe; ++t) {
        FieldElement gt = fe_pow(s.gamma, Int(t), spec);
        DigitProfile dp;
        if (t > 0) dp = digit_profile(t, p, width);
        for (long k = 0; k <= f0s; ++k) {
            long kh = world.k_hat(k);
            long hp = (t == 0) ? 0 : h_prime_kt(dp, k, f0s, e_star);
            long h = kh + 1 - hp;
            FieldElement head = mul(gt, world.eta[k] * Rat(1, ipow(s.p, k)), spec);
            std::string head_label = join_label(
                {pow_label("gamma", t),
                 k == 0 ? "" : "etastar_" + std::to_string(k) + "/" + ipow(s.p, k).str()});
            // B_p1: i = 0..h-1
            FieldElement cur = head;
            for (long i = 0; i < h; ++i) {
                order_rows.push_back(cur);
                lo.labeled_basis.emplace_back(
                    join_label({head_label == "1" ? "" : head_label, pow_label("betastar", i)}),
                    cur);
                if (t == 0 && i == 0)
                    rad_rows.push_back(cur * Rat(s.p));  // p * eta*_k/p^k
                else
                    rad_rows.push_back(cur);
                if (i + 1 < h) cur = mul(cur, beta_star, spec);
            }
            if (hp == 0) continue;
            // eta_kt = gamma^t eta*_k/p^k beta*^{h_kt}; B_p2 elements
            // (eta_kt/p) beta*^{i'}.
            FieldElement eta_kt = head;
            for (long i = 0; i < h; ++i) eta_kt = mul(eta_kt, beta_star, spec);
            FieldElement b2 = eta_kt * Rat(1, s.p);
            // beta_kt = eta_kt/p - (eta_kt/p)^{p^{s_t}} (eta*_{f0}/p^{f0})^x
            long g = g_k5(k, f0s, e_star, width);
            int x = beta_kt_exponent(p, f0s, world.w, k, dp.s_t, dp.t_star, g);
            FieldElement pw = fe_pow(b2, ipow(s.p, dp.s_t), spec);
            for (int xx = 0; xx < x; ++xx) pw = mul(pw, eta_f0_head, spec);
            FieldElement beta_kt = b2 - pw;
            FieldElement curb = b2, curr = beta_kt;
            for (long i2 = 0; i2 < hp; ++i2) {
                order_rows.push_back(curb);
                lo.labeled_basis.emplace_back(
                    join_label({"eta_{" + std::to_string(k) + "," + std::to_string(t) + "}/" +
                                    s.p.str(),
                                pow_label("betastar", i2)}),
                    curb);
                rad_rows.push_back(curr);
                ++d_dbl;
                if (i2 + 1 < hp) {
                    curb = mul(curb, beta_star, spec);
                    curr = mul(curr, beta_star, spec);
                }
            }
        }
    }
    require(d_dbl == d_dblprime_closed_form(p, f, e_star, f0s),
            "|B_p2| does not match the closed form d''");
    lo.d_dblprime = d_dbl;

    lo.order = hnf_canonical(order_rows, true);
    lo.radical = hnf_canonical(rad_rows);

    FactoredInt idx = lattice_index(zg, lo.order);
    require(idx.factors.size() <= 1 &&
                idx.vq(s.p) == to_long(d_prime) + d_dbl,
            "[O_p : Z[gamma]] does not match p^{d'+d''}");
    lo.index_over_base = idx;
    lo.base_disc_used = disc_of_pure(spec.factor_n, spec.n, s.factor_c);
    long drop = 2 * (to_long(d_prime) + d_dbl);
    lo.disc = lo.base_disc_used.div(FactoredInt::make(1, {{s.p, drop}}));
    require(lo.base_disc_used.div(lo.index_over_base.pow(2)).value == lo.disc.value,
            "disc != base_disc / index^2");
    lo.index_vq = to_long(d_prime) + d_dbl;
    lo.disc_drop_vq = drop;
    lo.residue = coprime_residue(s.p, f0s, world.w);

    // The paper leaves open whether I_p = pO_p + beta* O_p + gamma O_p; report
    // whether the simple ideal coincides without asserting either way.
    OrderLattice simple = lat_sum(lat_scale(lo.order, Rat(s.p)),
                                  lat_sum(lat_elem_product(beta_star, lo.order, spec),
                                          lat_elem_product(s.gamma, lo.order, spec)));
    lo.radical_equals_simple = simple.same_lattice(lo.radical);
    return lo;
}

LocalOrder cyclotomic_two_power(const FieldSpec& spec) {
    if (spec.a != -1 || !spec.prime_power() || spec.p() != 2)
        throw error("cyclotomic_two_power needs a = -1, n = 2^f");
    FactoredInt da = base_disc(spec);
    ResidueProfile rp;
    rp.kind = ResidueProfile::Kind::fp_power;
    rp.q = 2;
    rp.count = 1;
    LocalOrder lo = maximal_shortcut(2, fe_alpha_pow(spec, 1), "a", da, rp, spec);
    lo.kind = "cyclotomic";
    return lo;
}

}  // namespace radix
