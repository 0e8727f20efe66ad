#include "quasihom/intlattice.hpp"

#include <algorithm>

#include "quasihom/errors.hpp"

namespace qh {

namespace {

mpz_class round_div(const mpz_class& a, const mpz_class& b) {
    mpz_class q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    mpz_class babs = ::abs(b);
    if (2 * r > babs) q += (b > 0 ? 1 : -1);
    return q;
}

}  // namespace

IntMatrix hnf_rows(IntMatrix rows) {
    if (rows.empty()) return rows;
    const int m = static_cast<int>(rows.size());
    const int n = static_cast<int>(rows[0].size());
    int r = 0;
    for (int col = 0; col < n && r < m; ++col) {
        // gcd-eliminate below position r in this column
        while (true) {
            int best = -1;
            for (int i = r; i < m; ++i) {
                if (rows[i][col] != 0 &&
                    (best < 0 || ::abs(rows[i][col]) < ::abs(rows[best][col])))
                    best = i;
            }
            if (best < 0) break;
            std::swap(rows[r], rows[best]);
            bool clean = true;
            for (int i = r + 1; i < m; ++i) {
                if (rows[i][col] == 0) continue;
                mpz_class q = rows[i][col] / rows[r][col];
                if (q != 0)
                    for (int j = 0; j < n; ++j) rows[i][j] -= q * rows[r][j];
                if (rows[i][col] != 0) clean = false;
            }
            if (clean) break;
        }
        if (rows[r][col] == 0) continue;
        if (rows[r][col] < 0)
            for (int j = 0; j < n; ++j) rows[r][j] = -rows[r][j];
        for (int i = 0; i < r; ++i) {
            mpz_class q;
            mpz_fdiv_q(q.get_mpz_t(), rows[i][col].get_mpz_t(), rows[r][col].get_mpz_t());
            if (q != 0)
                for (int j = 0; j < n; ++j) rows[i][j] -= q * rows[r][j];
        }
        ++r;
    }
    rows.resize(r);
    return rows;
}

IntMatrix kernel_lattice(const IntMatrix& m, int cols) {
    const int nrows = static_cast<int>(m.size());
    IntMatrix a = m;
    for (auto& row : a)
        require(static_cast<int>(row.size()) == cols, ErrorKind::Internal, "ragged matrix");

    // U starts as the identity; column operations on A are mirrored on U.
    IntMatrix u(cols, IntVector(cols, 0));
    for (int i = 0; i < cols; ++i) u[i][i] = 1;

    auto col_sub = [&](int dst, int src, const mpz_class& q) {
        for (int i = 0; i < nrows; ++i) a[i][dst] -= q * a[i][src];
        for (int i = 0; i < cols; ++i) u[i][dst] -= q * u[i][src];
    };
    auto col_swap = [&](int x, int y) {
        if (x == y) return;
        for (int i = 0; i < nrows; ++i) std::swap(a[i][x], a[i][y]);
        for (int i = 0; i < cols; ++i) std::swap(u[i][x], u[i][y]);
    };

    int pivot = 0;
    for (int row = 0; row < nrows && pivot < cols; ++row) {
        while (true) {
            int best = -1;
            for (int c = pivot; c < cols; ++c) {
                if (a[row][c] != 0 && (best < 0 || ::abs(a[row][c]) < ::abs(a[row][best])))
                    best = c;
            }
            if (best < 0) break;
            col_swap(pivot, best);
            bool clean = true;
            for (int c = pivot + 1; c < cols; ++c) {
                if (a[row][c] == 0) continue;
                col_sub(c, pivot, round_div(a[row][c], a[row][pivot]));
                if (a[row][c] != 0) clean = false;
            }
            if (clean) break;
        }
        if (a[row][pivot] != 0) ++pivot;
    }

    IntMatrix kernel;
    for (int c = pivot; c < cols; ++c) {
        IntVector v(cols);
        for (int i = 0; i < cols; ++i) v[i] = u[i][c];
        kernel.push_back(std::move(v));
    }
    return hnf_rows(std::move(kernel));
}

bool lattice_contains(const IntMatrix& hnf_basis, const IntVector& v) {
    IntVector rem = v;
    for (const auto& row : hnf_basis) {
        int p = -1;
        for (int j = 0; j < static_cast<int>(row.size()); ++j) {
            if (row[j] != 0) {
                p = j;
                break;
            }
        }
        if (p < 0) continue;
        if (!mpz_divisible_p(rem[p].get_mpz_t(), row[p].get_mpz_t())) return false;
        mpz_class q = rem[p] / row[p];
        for (size_t j = 0; j < row.size(); ++j) rem[j] -= q * row[j];
    }
    for (const auto& x : rem)
        if (x != 0) return false;
    return true;
}

}  // namespace qh
