#include "corelab/newton.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "corelab/lp.hpp"

namespace corelab {

namespace {

using Row = std::vector<std::int64_t>;

std::int64_t det(const std::vector<Row>& M)
{
    const std::size_t n = M.size();
    if (n == 0) {
        return 1;
    }
    if (n == 1) {
        return M[0][0];
    }
    std::int64_t total = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (M[0][c] == 0) {
            continue;
        }
        std::vector<Row> minor;
        for (std::size_t r = 1; r < n; ++r) {
            Row row;
            for (std::size_t k = 0; k < n; ++k) {
                if (k != c) {
                    row.push_back(M[r][k]);
                }
            }
            minor.push_back(std::move(row));
        }
        std::int64_t term = M[0][c] * det(minor);
        total += (c % 2 == 0) ? term : -term;
    }
    return total;
}

// Vector orthogonal to the d-1 given rows (cofactor expansion).
Row orthogonal(const std::vector<Row>& rows, int d)
{
    Row a(d);
    for (int i = 0; i < d; ++i) {
        std::vector<Row> minor;
        for (const auto& r : rows) {
            Row m;
            for (int k = 0; k < d; ++k) {
                if (k != i) {
                    m.push_back(r[k]);
                }
            }
            minor.push_back(std::move(m));
        }
        std::int64_t v = det(minor);
        a[i] = (i % 2 == 0) ? v : -v;
    }
    return a;
}

std::int64_t dot(const Row& a, const Exponent& p)
{
    std::int64_t s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += a[i] * p[i];
    }
    return s;
}

} // namespace

NewtonPolyhedron::NewtonPolyhedron(const MonomialIdeal& I) : d_(I.nvars()), points_(I.gens())
{
    if (points_.empty()) {
        throw std::invalid_argument("Newton polyhedron of the zero ideal");
    }
    if (d_ > kMaxInteriorDim) {
        return;
    }
    // Hyperplanes through k points (k >= 1) and parallel to d-k coordinate
    // directions; keep those with a >= 0 that all points satisfy.
    const int m = static_cast<int>(points_.size());
    std::set<std::pair<Row, std::int64_t>> seen;
    auto consider = [&](const std::vector<int>& chosen, std::uint32_t dirs) {
        std::vector<Row> rows;
        const Exponent& p0 = points_[chosen[0]];
        for (std::size_t i = 1; i < chosen.size(); ++i) {
            Row r(d_);
            for (int k = 0; k < d_; ++k) {
                r[k] = points_[chosen[i]][k] - p0[k];
            }
            rows.push_back(std::move(r));
        }
        for (int k = 0; k < d_; ++k) {
            if (dirs & (1u << k)) {
                Row r(d_, 0);
                r[k] = 1;
                rows.push_back(std::move(r));
            }
        }
        Row a = orthogonal(rows, d_);
        bool pos = std::any_of(a.begin(), a.end(), [](auto x) { return x > 0; });
        bool neg = std::any_of(a.begin(), a.end(), [](auto x) { return x < 0; });
        if ((pos && neg) || (!pos && !neg)) {
            return;
        }
        if (neg) {
            for (auto& x : a) {
                x = -x;
            }
        }
        std::int64_t g = 0;
        for (auto x : a) {
            g = std::gcd(g, x);
        }
        for (auto& x : a) {
            x /= g;
        }
        std::int64_t b = dot(a, p0);
        for (const auto& p : points_) {
            if (dot(a, p) < b) {
                return;
            }
        }
        if (seen.emplace(a, b).second) {
            planes_.push_back(Halfspace{a, b});
        }
    };
    for (std::uint32_t dirs = 0; dirs < (1u << d_); ++dirs) {
        const int k = d_ - std::popcount(dirs);
        if (k < 1 || k > m) {
            continue;
        }
        std::vector<int> chosen(k);
        std::iota(chosen.begin(), chosen.end(), 0);
        while (true) {
            consider(chosen, dirs);
            int i = k - 1;
            while (i >= 0 && chosen[i] == m - k + i) {
                --i;
            }
            if (i < 0) {
                break;
            }
            ++chosen[i];
            for (int j = i + 1; j < k; ++j) {
                chosen[j] = chosen[j - 1] + 1;
            }
        }
    }
}

bool NewtonPolyhedron::contains(const std::vector<mpq_class>& v) const
{
    // Variables: λ (m), slacks (d). Rows: d coordinate rows, one convexity row.
    const int m = static_cast<int>(points_.size());
    std::vector<std::vector<mpq_class>> A(d_ + 1, std::vector<mpq_class>(m + d_));
    std::vector<mpq_class> b(d_ + 1);
    for (int k = 0; k < d_; ++k) {
        for (int i = 0; i < m; ++i) {
            A[k][i] = points_[i][k];
        }
        A[k][m + k] = 1;
        b[k] = v[k];
    }
    for (int i = 0; i < m; ++i) {
        A[d_][i] = 1;
    }
    b[d_] = 1;
    std::vector<mpq_class> c(m + d_, 0);
    return solve_lp(std::move(A), std::move(b), std::move(c)).status == LpStatus::Optimal;
}

bool NewtonPolyhedron::contains(const Exponent& v) const
{
    std::vector<mpq_class> q;
    for (int x : v) {
        q.emplace_back(x);
    }
    return contains(q);
}

bool NewtonPolyhedron::interior(const Exponent& v) const
{
    if (d_ > kMaxInteriorDim) {
        throw UnsupportedDimension("interior test supports at most " + std::to_string(kMaxInteriorDim) +
                                   " variables; got " + std::to_string(d_));
    }
    return std::all_of(planes_.begin(), planes_.end(), [&](const Halfspace& h) { return dot(h.a, v) > h.b; });
}

MonomialIdeal howald_adjoint(const MonomialIdeal& I)
{
    if (I.is_zero()) {
        throw std::invalid_argument("adjoint of the zero ideal");
    }
    NewtonPolyhedron np(I);
    const int d = I.nvars();
    Exponent top(d, 0);
    for (const auto& g : I.gens()) {
        for (int k = 0; k < d; ++k) {
            top[k] = std::max(top[k], g[k]);
        }
    }
    // Past top[k] + 1 in a coordinate, stepping back keeps v + 1 interior, so
    // minimal generators sit in the box [0, top + 1].
    std::vector<Exponent> found;
    Exponent v(d, 0);
    while (true) {
        Exponent w = v;
        for (auto& x : w) {
            ++x;
        }
        if (np.interior(w)) {
            found.push_back(v);
        }
        int k = 0;
        while (k < d && v[k] == top[k] + 1) {
            v[k] = 0;
            ++k;
        }
        if (k == d) {
            break;
        }
        ++v[k];
    }
    return MonomialIdeal(d, std::move(found));
}

} // namespace corelab
