#include "radix/linalg.hpp"

#include <algorithm>

namespace radix {

namespace {

bool row_zero(const std::vector<Int>& r) {
    return std::all_of(r.begin(), r.end(), [](const Int& x) { return x == 0; });
}

}  // namespace

Echelon hnf_echelon(IMat rows, std::size_t ncols) {
    // Process columns right to left so pivots land in lower-triangular shape.
    std::vector<std::vector<Int>> out(ncols);
    std::vector<bool> have(ncols, false);
    std::vector<std::vector<Int>> active;
    for (auto& r : rows)
        if (!row_zero(r)) active.push_back(std::move(r));

    for (std::size_t jj = 0; jj < ncols; ++jj) {
        std::size_t j = ncols - 1 - jj;
        // Collect active rows with a nonzero entry in column j.
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < active.size(); ++i)
            if (active[i][j] != 0) idx.push_back(i);
        if (idx.empty()) continue;
        // Euclidean reduction within the column until one nonzero remains.
        while (idx.size() > 1) {
            std::size_t best = idx[0];
            for (auto i : idx)
                if (abs(active[i][j]) < abs(active[best][j])) best = i;
            std::vector<std::size_t> next{best};
            for (auto i : idx) {
                if (i == best) continue;
                Int q = active[i][j] / active[best][j];
                if (q != 0)
                    for (std::size_t k = 0; k <= j; ++k)
                        active[i][k] -= q * active[best][k];
                if (active[i][j] != 0) next.push_back(i);
            }
            idx = std::move(next);
        }
        std::size_t piv = idx[0];
        out[j] = std::move(active[piv]);
        active.erase(active.begin() + piv);
        if (out[j][j] < 0)
            for (auto& x : out[j]) x = -x;
        have[j] = true;
        // Drop rows that have become zero.
        active.erase(std::remove_if(active.begin(), active.end(), row_zero), active.end());
    }
    if (!active.empty()) throw consistency_error("hnf: nonzero residue rows after elimination");

    // Reduce below-pivot entries: for each pivot row j, bring column j of the
    // other rows into [0, pivot).
    std::vector<std::size_t> cols;
    for (std::size_t j = 0; j < ncols; ++j)
        if (have[j]) cols.push_back(j);
    for (auto i : cols) {
        for (auto jt = cols.rbegin(); jt != cols.rend(); ++jt) {
            std::size_t j = *jt;
            if (j >= i) continue;
            Int q = floor_div(out[i][j], out[j][j]);
            if (q != 0)
                for (std::size_t k = 0; k <= j; ++k) out[i][k] -= q * out[j][k];
        }
    }

    Echelon e;
    for (auto j : cols) {
        e.rows.push_back(std::move(out[j]));
        e.pivot_col.push_back(j);
    }
    return e;
}

IMat hnf_lower(IMat rows, std::size_t ncols) {
    Echelon e = hnf_echelon(std::move(rows), ncols);
    if (e.rows.size() != ncols) throw not_sublattice("not full rank");
    return e.rows;
}

Int det_bareiss(IMat a) {
    std::size_t n = a.size();
    if (n == 0) return 1;
    Int denom = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t s = k + 1;
            while (s < n && a[s][k] == 0) ++s;
            if (s == n) return 0;
            std::swap(a[k], a[s]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / denom;
        denom = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

std::pair<IMat, Int> tri_adjugate(const IMat& h) {
    std::size_t n = h.size();
    Int d = 1;
    for (std::size_t i = 0; i < n; ++i) d *= h[i][i];
    IMat m(n, std::vector<Int>(n, 0));
    // Solve H * X = d * I column by column; X is integral (it is adj(H)).
    for (std::size_t j = 0; j < n; ++j) {
        m[j][j] = d / h[j][j];
        for (std::size_t i = j + 1; i < n; ++i) {
            Int s = 0;
            for (std::size_t k = j; k < i; ++k) s += h[i][k] * m[k][j];
            m[i][j] = -s / h[i][i];
        }
    }
    return {std::move(m), d};
}

IMat imat_mul(const IMat& a, const IMat& b) {
    std::size_t m = a.size(), k = b.size(), n = b.empty() ? 0 : b[0].size();
    IMat c(m, std::vector<Int>(n, 0));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t l = 0; l < k; ++l) {
            if (a[i][l] == 0) continue;
            for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][l] * b[l][j];
        }
    return c;
}

IMat imat_transpose(const IMat& a) {
    std::size_t m = a.size(), n = a.empty() ? 0 : a[0].size();
    IMat t(n, std::vector<Int>(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) t[j][i] = a[i][j];
    return t;
}

IMat left_kernel_mod(const IMat& a, const Int& q) {
    std::size_t m = a.size(), n = a.empty() ? 0 : a[0].size();
    // Row-reduce [A | I] over F_q; kernel rows are the I-parts of zero rows.
    IMat w(m, std::vector<Int>(n + m, 0));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) w[i][j] = mod_floor(a[i][j], q);
        w[i][n + i] = 1;
    }
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < m; ++col) {
        std::size_t piv = row;
        while (piv < m && w[piv][col] == 0) ++piv;
        if (piv == m) continue;
        std::swap(w[row], w[piv]);
        // Normalize pivot to 1.
        Int inv = boost::multiprecision::powm(w[row][col], q - 2, q);
        for (auto& x : w[row]) x = mod_floor(x * inv, q);
        for (std::size_t i = 0; i < m; ++i) {
            if (i == row || w[i][col] == 0) continue;
            Int f = w[i][col];
            for (std::size_t j = 0; j < n + m; ++j)
                w[i][j] = mod_floor(w[i][j] - f * w[row][j], q);
        }
        ++row;
    }
    IMat ker;
    for (std::size_t i = row; i < m; ++i)
        ker.emplace_back(w[i].begin() + n, w[i].end());
    return ker;
}

}  // namespace radix
