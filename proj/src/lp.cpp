#include "corelab/lp.hpp"

#include <stdexcept>

namespace corelab {

namespace {

// Tableau over rows 0..m-1 (constraints) and an objective row; basis[i] is
// the column basic in row i. Maximizes the objective row's reduced costs.
struct Tableau {
    std::vector<std::vector<mpq_class>> t; // m+1 rows, n+1 columns (last = rhs)
    std::vector<int> basis;
    int m = 0;
    int n = 0;

    void pivot(int row, int col)
    {
        mpq_class p = t[row][col];
        for (auto& v : t[row]) {
            v /= p;
        }
        for (int r = 0; r <= m; ++r) {
            if (r == row || sgn(t[r][col]) == 0) {
                continue;
            }
            mpq_class f = t[r][col];
            for (int c = 0; c <= n; ++c) {
                t[r][c] -= f * t[row][c];
            }
        }
        basis[row] = col;
    }

    // Objective row stores -(reduced cost); a negative entry can improve.
    // Returns false when unbounded.
    bool run(const std::vector<bool>& allowed)
    {
        while (true) {
            int col = -1;
            for (int c = 0; c < n; ++c) {
                if (allowed[c] && sgn(t[m][c]) < 0) {
                    col = c;
                    break;
                }
            }
            if (col < 0) {
                return true;
            }
            int row = -1;
            mpq_class best;
            for (int r = 0; r < m; ++r) {
                if (sgn(t[r][col]) <= 0) {
                    continue;
                }
                mpq_class ratio = t[r][n] / t[r][col];
                if (row < 0 || ratio < best || (ratio == best && basis[r] < basis[row])) {
                    row = r;
                    best = ratio;
                }
            }
            if (row < 0) {
                return false;
            }
            pivot(row, col);
        }
    }
};

} // namespace

LpResult solve_lp(std::vector<std::vector<mpq_class>> A, std::vector<mpq_class> b, std::vector<mpq_class> c)
{
    const int m = static_cast<int>(A.size());
    const int n = static_cast<int>(c.size());
    if (static_cast<int>(b.size()) != m) {
        throw std::invalid_argument("solve_lp: row count mismatch");
    }
    for (int i = 0; i < m; ++i) {
        if (static_cast<int>(A[i].size()) != n) {
            throw std::invalid_argument("solve_lp: column count mismatch");
        }
        if (sgn(b[i]) < 0) {
            for (auto& v : A[i]) {
                v = -v;
            }
            b[i] = -b[i];
        }
    }

    // Phase 1: artificials n..n+m-1, minimize their sum.
    Tableau T;
    T.m = m;
    T.n = n + m;
    T.t.assign(m + 1, std::vector<mpq_class>(T.n + 1));
    T.basis.resize(m);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) {
            T.t[i][j] = A[i][j];
        }
        T.t[i][n + i] = 1;
        T.t[i][T.n] = b[i];
        T.basis[i] = n + i;
    }
    for (int j = 0; j <= T.n; ++j) {
        mpq_class s = 0;
        for (int i = 0; i < m; ++i) {
            if (j < n || j == T.n) {
                s += T.t[i][j];
            }
        }
        T.t[m][j] = -s;
    }
    std::vector<bool> all(T.n, true);
    T.run(all);
    LpResult res;
    if (sgn(T.t[m][T.n]) != 0) {
        res.status = LpStatus::Infeasible;
        return res;
    }
    // Drive remaining artificials out of the basis where possible.
    for (int i = 0; i < m; ++i) {
        if (T.basis[i] < n) {
            continue;
        }
        for (int j = 0; j < n; ++j) {
            if (sgn(T.t[i][j]) != 0) {
                T.pivot(i, j);
                break;
            }
        }
    }

    // Phase 2 on the original columns.
    std::vector<bool> allowed(T.n, false);
    for (int j = 0; j < n; ++j) {
        allowed[j] = true;
    }
    for (int j = 0; j <= T.n; ++j) {
        T.t[m][j] = 0;
    }
    for (int j = 0; j < n; ++j) {
        T.t[m][j] = -c[j];
    }
    for (int i = 0; i < m; ++i) {
        int bj = T.basis[i];
        if (bj < n && sgn(T.t[m][bj]) != 0) {
            mpq_class f = T.t[m][bj];
            for (int j = 0; j <= T.n; ++j) {
                T.t[m][j] -= f * T.t[i][j];
            }
        }
    }
    if (!T.run(allowed)) {
        res.status = LpStatus::Unbounded;
        return res;
    }
    res.status = LpStatus::Optimal;
    res.x.assign(n, 0);
    for (int i = 0; i < m; ++i) {
        if (T.basis[i] < n) {
            res.x[T.basis[i]] = T.t[i][T.n];
        }
    }
    res.value = 0;
    for (int j = 0; j < n; ++j) {
        res.value += c[j] * res.x[j];
    }
    return res;
}

} // namespace corelab
