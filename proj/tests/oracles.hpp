#pragma once

// Independent reference implementations used only by tests. They are slow and
// simple on purpose and must not call into the Gröbner engine.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "corelab/polynomial.hpp"

namespace oracle {

using corelab::Monomial;
using corelab::MonomialOrder;
using corelab::OrderKind;
using corelab::Polynomial;
using corelab::PrimeField;

// Order comparison straight from the definitions: a block order compares block
// by block; lex looks at the first differing exponent, grevlex at degree and
// then at the last nonzero entry of a - b (negative means a is larger).
inline int compare(const MonomialOrder& ord, const std::vector<int>& a, const std::vector<int>& b)
{
    for (const auto& blk : ord.blocks()) {
        std::vector<int> diff;
        for (int v : blk.vars) {
            diff.push_back(a[v] - b[v]);
        }
        if (blk.kind == OrderKind::Lex) {
            for (int x : diff) {
                if (x != 0) {
                    return x > 0 ? 1 : -1;
                }
            }
            continue;
        }
        int total = 0;
        for (int x : diff) {
            total += x;
        }
        if (total != 0) {
            return total > 0 ? 1 : -1;
        }
        for (auto it = diff.rbegin(); it != diff.rend(); ++it) {
            if (*it != 0) {
                return *it < 0 ? 1 : -1;
            }
        }
    }
    return 0;
}

inline std::vector<std::vector<int>> monomials_of_degree(int nvars, int degree)
{
    std::vector<std::vector<int>> out;
    std::vector<int> cur(nvars, 0);
    auto rec = [&](auto&& self, int v, int left) -> void {
        if (v == nvars - 1) {
            cur[v] = left;
            out.push_back(cur);
            return;
        }
        for (int e = left; e >= 0; --e) {
            cur[v] = e;
            self(self, v + 1, left - e);
        }
    };
    if (nvars == 0) {
        if (degree == 0) {
            out.push_back({});
        }
        return out;
    }
    rec(rec, 0, degree);
    return out;
}

// Row-echelon span over GF(p) of sparse vectors keyed by exponent vectors.
class SpanModP {
public:
    explicit SpanModP(std::uint32_t p) : p_(p) {}

    using Vec = std::map<std::vector<int>, std::uint64_t, std::greater<>>;

    // Reduces v against the stored rows; returns the residue.
    Vec reduce(Vec v) const
    {
        for (const auto& [pivot, row] : rows_) {
            auto it = v.find(pivot);
            if (it == v.end()) {
                continue;
            }
            std::uint64_t c = it->second;
            for (const auto& [key, val] : row) {
                auto& slot = v[key];
                slot = (slot + p_ - (c * val) % p_) % p_;
                if (slot == 0) {
                    v.erase(key);
                }
            }
        }
        return v;
    }

    bool insert(Vec v)
    {
        v = reduce(std::move(v));
        if (v.empty()) {
            return false;
        }
        auto pivot = v.begin()->first;
        std::uint64_t inv = modinv(v.begin()->second);
        for (auto& [key, val] : v) {
            val = (val * inv) % p_;
        }
        // keep rows fully reduced against the new pivot
        for (auto& [pk, row] : rows_) {
            auto it = row.find(pivot);
            if (it == row.end()) {
                continue;
            }
            std::uint64_t c = it->second;
            for (const auto& [key, val] : v) {
                auto& slot = row[key];
                slot = (slot + p_ - (c * val) % p_) % p_;
                if (slot == 0) {
                    row.erase(key);
                }
            }
        }
        rows_.emplace(pivot, std::move(v));
        return true;
    }

    bool contains(const Vec& v) const { return reduce(v).empty(); }
    std::size_t rank() const { return rows_.size(); }

private:
    std::uint64_t modinv(std::uint64_t a) const
    {
        std::uint64_t r = 1, b = a, e = p_ - 2;
        while (e) {
            if (e & 1) {
                r = r * b % p_;
            }
            b = b * b % p_;
            e >>= 1;
        }
        return r;
    }

    std::uint32_t p_;
    std::map<std::vector<int>, Vec, std::greater<>> rows_;
};

inline SpanModP::Vec to_vec(const Polynomial<PrimeField>& f)
{
    SpanModP::Vec v;
    for (const auto& t : f.terms()) {
        v[t.mono.to_vector(f.ring()->nvars())] = t.coeff;
    }
    return v;
}

// Degree-D piece of a homogeneous ideal, spanned by all m * g with deg = D.
inline SpanModP degree_piece(const std::vector<Polynomial<PrimeField>>& gens, int D)
{
    const auto& ring = gens.front().ring();
    SpanModP span(ring->field().characteristic());
    int n = static_cast<int>(ring->nvars());
    for (const auto& g : gens) {
        int e = D - g.degree();
        if (g.is_zero() || e < 0) {
            continue;
        }
        for (const auto& m : monomials_of_degree(n, e)) {
            span.insert(to_vec(g.mul_term(1, Monomial(m))));
        }
    }
    return span;
}

// Naive division: always cancels the lead term when possible, else moves it
// to the remainder.
template <class F>
Polynomial<F> naive_nf(Polynomial<F> f, const std::vector<Polynomial<F>>& G)
{
    Polynomial<F> r(f.ring());
    const F& k = f.field();
    while (!f.is_zero()) {
        bool hit = false;
        for (const auto& g : G) {
            if (g.lead_monomial().divides(f.lead_monomial())) {
                f = f - g.mul_term(k.div(f.lead_coeff(), g.lead_coeff()), f.lead_monomial() / g.lead_monomial());
                hit = true;
                break;
            }
        }
        if (!hit) {
            r = r + Polynomial<F>::term(f.ring(), f.lead_monomial(), f.lead_coeff());
            f = f - Polynomial<F>::term(f.ring(), f.lead_monomial(), f.lead_coeff());
        }
    }
    return r;
}

// Plain pair completion: add every nonzero S-polynomial remainder until all
// pairs reduce to zero, then minimalize and interreduce.
template <class F>
std::vector<Polynomial<F>> naive_reduced_gb(std::vector<Polynomial<F>> G)
{
    G.erase(std::remove_if(G.begin(), G.end(), [](const auto& g) { return g.is_zero(); }), G.end());
    const F& k = G.front().field();
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < G.size() && !changed; ++i) {
            for (std::size_t j = i + 1; j < G.size() && !changed; ++j) {
                Monomial l = G[i].lead_monomial().lcm(G[j].lead_monomial());
                auto s = G[i].mul_term(k.inv(G[i].lead_coeff()), l / G[i].lead_monomial()) -
                         G[j].mul_term(k.inv(G[j].lead_coeff()), l / G[j].lead_monomial());
                auto r = naive_nf(s, G);
                if (!r.is_zero()) {
                    G.push_back(r);
                    changed = true;
                }
            }
        }
    }
    // minimalize
    std::vector<Polynomial<F>> M;
    for (std::size_t i = 0; i < G.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < G.size() && !redundant; ++j) {
            if (i == j) {
                continue;
            }
            const auto& a = G[j].lead_monomial();
            const auto& b = G[i].lead_monomial();
            if (a.divides(b) && (!(a == b) || j < i)) {
                redundant = true;
            }
        }
        if (!redundant) {
            M.push_back(G[i].monic());
        }
    }
    for (std::size_t i = 0; i < M.size(); ++i) {
        std::vector<Polynomial<F>> others;
        for (std::size_t j = 0; j < M.size(); ++j) {
            if (j != i) {
                others.push_back(M[j]);
            }
        }
        auto lead = Polynomial<F>::term(M[i].ring(), M[i].lead_monomial());
        M[i] = lead + naive_nf(M[i] - lead, others);
    }
    const auto& ord = M.front().ring()->order();
    std::sort(M.begin(), M.end(), [&](const auto& a, const auto& b) {
        return ord.compare(a.lead_monomial(), b.lead_monomial()) < 0;
    });
    return M;
}

// Random polynomial with `nterms` terms of total degree <= maxdeg over X.
template <class F>
Polynomial<F> random_poly(const corelab::RingPtr<F>& ring, std::mt19937_64& rng, int nterms, int maxdeg,
                          bool homogeneous = false)
{
    const int n = static_cast<int>(ring->nvars());
    std::uniform_int_distribution<int> coeff(-20, 20);
    std::uniform_int_distribution<int> var(0, n - 1);
    std::uniform_int_distribution<int> deg(0, maxdeg);
    int hd = deg(rng);
    std::vector<typename Polynomial<F>::Term> terms;
    for (int t = 0; t < nterms; ++t) {
        int d = homogeneous ? hd : deg(rng);
        std::vector<int> e(n, 0);
        for (int i = 0; i < d; ++i) {
            ++e[var(rng)];
        }
        terms.push_back({ring->field().from_int(coeff(rng)), Monomial(e)});
    }
    return Polynomial<F>(ring, std::move(terms));
}

} // namespace oracle
