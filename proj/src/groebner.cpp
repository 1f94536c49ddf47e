#include "corelab/groebner.hpp"

#include <algorithm>
#include <chrono>
#include <set>

namespace corelab {

namespace {

template <class F>
using TermVec = std::vector<typename Polynomial<F>::Term>;

// out = a[ia..] - c*m*b[ib..]
template <class F>
void merge_sub(const F& k, const MonomialOrder& ord, const TermVec<F>& a, std::size_t ia, const typename F::Element& c,
               const Monomial& m, const TermVec<F>& b, std::size_t ib, TermVec<F>& out)
{
    out.clear();
    out.reserve(a.size() - ia + b.size() - ib);
    const auto negc = k.neg(c);
    std::size_t i = ia, j = ib;
    while (j < b.size()) {
        Monomial bm = b[j].mono * m;
        while (i < a.size() && ord.compare(a[i].mono, bm) > 0) {
            out.push_back(a[i++]);
        }
        if (i < a.size() && a[i].mono == bm) {
            auto s = k.add(a[i].coeff, k.mul(negc, b[j].coeff));
            if (!k.is_zero(s)) {
                out.push_back({std::move(s), bm});
            }
            ++i;
        } else {
            out.push_back({k.mul(negc, b[j].coeff), bm});
        }
        ++j;
    }
    out.insert(out.end(), a.begin() + static_cast<std::ptrdiff_t>(i), a.end());
}

// Reduction against a list of basis polynomials, optionally tracking sugar.
template <class F>
class Reducer {
public:
    Reducer(const RingPtr<F>& ring) : ring_(ring), k_(ring->field()), ord_(ring->order()) {}

    void set_basis(std::vector<const Polynomial<F>*> basis, std::vector<unsigned> sugars = {})
    {
        basis_ = std::move(basis);
        sugars_ = std::move(sugars);
    }

    int find_divisor(const Monomial& t) const
    {
        for (std::size_t i = 0; i < basis_.size(); ++i) {
            if (basis_[i]->lead_monomial().divides(t)) {
                return static_cast<int>(i);
            }
        }
        return -1;
    }

    Polynomial<F> reduce(const Polynomial<F>& f, unsigned* sugar, GbStats* stats)
    {
        TermVec<F> rem = f.terms();
        TermVec<F> scratch;
        TermVec<F> out;
        std::size_t pos = 0;
        while (pos < rem.size()) {
            const auto& t = rem[pos];
            int idx = find_divisor(t.mono);
            if (idx < 0) {
                out.push_back(t);
                ++pos;
                continue;
            }
            const Polynomial<F>& g = *basis_[idx];
            Monomial m = t.mono / g.lead_monomial();
            auto c = k_.div(t.coeff, g.lead_coeff());
            if (sugar && !sugars_.empty()) {
                *sugar = std::max(*sugar, m.degree() + sugars_[idx]);
            }
            merge_sub(k_, ord_, rem, pos + 1, c, m, g.terms(), 1, scratch);
            rem.swap(scratch);
            pos = 0;
            if (stats) {
                ++stats->reduction_steps;
            }
        }
        return Polynomial<F>::from_sorted(ring_, std::move(out));
    }

private:
    RingPtr<F> ring_;
    const F& k_;
    const MonomialOrder& ord_;
    std::vector<const Polynomial<F>*> basis_;
    std::vector<unsigned> sugars_;
};

struct Pair {
    std::size_t i;
    std::size_t j;
    Monomial lcm;
    unsigned sugar;
};

} // namespace

template <class F>
Polynomial<F> normal_form(const Polynomial<F>& f, std::span<const Polynomial<F>> G, GbStats* stats)
{
    Reducer<F> red(f.ring());
    std::vector<const Polynomial<F>*> basis;
    for (const auto& g : G) {
        if (!g.is_zero()) {
            if (!g.ring()->same_variables(*f.ring()) || !(g.ring()->order() == f.ring()->order())) {
                throw RingMismatch("normal_form: basis and polynomial live in different rings");
            }
            basis.push_back(&g);
        }
    }
    red.set_basis(std::move(basis));
    return red.reduce(f, nullptr, stats);
}

template <class F>
Polynomial<F> s_polynomial(const Polynomial<F>& f, const Polynomial<F>& g)
{
    const F& k = f.field();
    Monomial l = f.lead_monomial().lcm(g.lead_monomial());
    auto a = f.mul_term(k.inv(f.lead_coeff()), l / f.lead_monomial());
    return a.sub_mul(k.inv(g.lead_coeff()), l / g.lead_monomial(), g);
}

template <class F>
GroebnerBasis<F> buchberger(const RingPtr<F>& ring, std::span<const Polynomial<F>> gens, const GbOptions& opts)
{
    using Clock = std::chrono::steady_clock;
    const auto started = Clock::now();
    const MonomialOrder& ord = ring->order();
    const F& k = ring->field();

    GroebnerBasis<F> out;
    out.ring = ring;

    std::vector<Polynomial<F>> polys;
    std::vector<unsigned> sugar;
    std::vector<bool> active;

    auto pair_less = [&](const Pair& a, const Pair& b) {
        if (a.sugar != b.sugar) {
            return a.sugar < b.sugar;
        }
        auto c = ord.compare(a.lcm, b.lcm);
        if (c != 0) {
            return c < 0;
        }
        if (a.i != b.i) {
            return a.i < b.i;
        }
        return a.j < b.j;
    };
    std::set<Pair, decltype(pair_less)> pairs(pair_less);

    auto make_pair = [&](std::size_t i, std::size_t j) {
        Monomial l = polys[i].lead_monomial().lcm(polys[j].lead_monomial());
        unsigned s = std::max(sugar[i] + l.degree() - polys[i].lead_monomial().degree(),
                              sugar[j] + l.degree() - polys[j].lead_monomial().degree());
        return Pair{std::min(i, j), std::max(i, j), l, s};
    };

    // Gebauer–Möller update with the new element at index h.
    auto update = [&](std::size_t h) {
        const Monomial& lh = polys[h].lead_monomial();
        std::vector<Pair> cand;
        for (std::size_t g = 0; g < h; ++g) {
            if (active[g]) {
                cand.push_back(make_pair(g, h));
            }
        }
        // Chain criterion among the new pairs, keeping coprime ones for now.
        std::vector<Pair> kept;
        for (std::size_t a = 0; a < cand.size(); ++a) {
            const Pair& p = cand[a];
            bool coprime = polys[p.i].lead_monomial().coprime(lh);
            bool drop = false;
            if (!coprime) {
                for (std::size_t b = 0; b < cand.size() && !drop; ++b) {
                    if (b == a) {
                        continue;
                    }
                    const Monomial& q = cand[b].lcm;
                    if (q.divides(p.lcm) && (!(q == p.lcm) || b < a)) {
                        drop = true;
                    }
                }
            }
            if (!drop) {
                kept.push_back(p);
            } else {
                ++out.stats.pairs_pruned;
            }
        }
        // Among pairs sharing an lcm only one survives above; coprime leading
        // terms mean the S-polynomial reduces to zero.
        std::vector<Pair> fresh;
        for (auto& p : kept) {
            if (polys[p.i].lead_monomial().coprime(lh)) {
                ++out.stats.pairs_pruned;
                continue;
            }
            fresh.push_back(p);
        }
        // Old pairs made redundant by h.
        for (auto it = pairs.begin(); it != pairs.end();) {
            const Pair& p = *it;
            if (lh.divides(p.lcm) && !(polys[p.i].lead_monomial().lcm(lh) == p.lcm) &&
                !(polys[p.j].lead_monomial().lcm(lh) == p.lcm)) {
                it = pairs.erase(it);
                ++out.stats.pairs_pruned;
            } else {
                ++it;
            }
        }
        for (auto& p : fresh) {
            pairs.insert(p);
        }
        for (std::size_t g = 0; g < h; ++g) {
            if (active[g] && lh.divides(polys[g].lead_monomial())) {
                active[g] = false;
            }
        }
    };

    Reducer<F> red(ring);
    auto refresh_reducer = [&] {
        std::vector<const Polynomial<F>*> basis;
        std::vector<unsigned> sug;
        for (std::size_t i = 0; i < polys.size(); ++i) {
            if (active[i]) {
                basis.push_back(&polys[i]);
                sug.push_back(sugar[i]);
            }
        }
        red.set_basis(std::move(basis), std::move(sug));
    };

    bool unit = false;
    auto add = [&](Polynomial<F> h, unsigned s) {
        h = h.monic();
        if (h.is_constant()) {
            unit = true;
            return;
        }
        polys.push_back(std::move(h));
        sugar.push_back(s);
        active.push_back(true);
        update(polys.size() - 1);
        refresh_reducer();
    };

    std::vector<Polynomial<F>> inputs;
    for (const auto& g : gens) {
        if (g.is_zero()) {
            continue;
        }
        if (g.ring() != ring && !(*g.ring() == *ring)) {
            inputs.push_back(g.in_ring(ring));
        } else {
            inputs.push_back(g);
        }
    }
    std::sort(inputs.begin(), inputs.end(), [&](const Polynomial<F>& a, const Polynomial<F>& b) {
        if (a.degree() != b.degree()) {
            return a.degree() < b.degree();
        }
        auto c = ord.compare(a.lead_monomial(), b.lead_monomial());
        if (c != 0) {
            return c < 0;
        }
        return a.size() < b.size();
    });

    refresh_reducer();
    for (const auto& g : inputs) {
        unsigned s = static_cast<unsigned>(g.degree());
        auto h = red.reduce(g, &s, &out.stats);
        if (!h.is_zero()) {
            add(std::move(h), s);
        }
        if (unit) {
            break;
        }
    }

    while (!unit && !pairs.empty()) {
        Pair p = *pairs.begin();
        pairs.erase(pairs.begin());
        if (opts.truncate_degree && p.lcm.degree() > *opts.truncate_degree) {
            out.truncated = true;
            ++out.stats.pairs_pruned;
            continue;
        }
        if (p.lcm.degree() > opts.budget.max_degree) {
            throw BudgetExhausted("S-pair degree " + std::to_string(p.lcm.degree()) + " exceeds the degree cap " +
                                  std::to_string(opts.budget.max_degree));
        }
        if (++out.stats.spairs > opts.budget.max_spairs) {
            throw BudgetExhausted("S-pair budget of " + std::to_string(opts.budget.max_spairs) + " exhausted");
        }
        if (opts.budget.max_seconds > 0 &&
            std::chrono::duration<double>(Clock::now() - started).count() > opts.budget.max_seconds) {
            throw BudgetExhausted("time budget exhausted");
        }
        auto s = s_polynomial(polys[p.i], polys[p.j]);
        unsigned sug = p.sugar;
        auto h = red.reduce(s, &sug, &out.stats);
        if (opts.trace) {
            *opts.trace << "spair " << p.i << ' ' << p.j << " deg " << p.lcm.degree() << " sugar " << p.sugar
                        << " zero " << (h.is_zero() ? 1 : 0) << '\n';
        }
        if (h.is_zero()) {
            ++out.stats.zero_reductions;
            continue;
        }
        add(std::move(h), sug);
    }

    if (unit) {
        out.elements = {Polynomial<F>::constant(ring, k.one())};
        out.reduced = true;
        out.truncated = false;
        return out;
    }

    // Active leading monomials form an antichain; reduce tails.
    std::vector<Polynomial<F>> minimal;
    for (std::size_t i = 0; i < polys.size(); ++i) {
        if (active[i]) {
            minimal.push_back(polys[i]);
        }
    }
    std::sort(minimal.begin(), minimal.end(), [&](const Polynomial<F>& a, const Polynomial<F>& b) {
        return ord.compare(a.lead_monomial(), b.lead_monomial()) < 0;
    });
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<const Polynomial<F>*> others;
        for (std::size_t j = 0; j < minimal.size(); ++j) {
            if (j != i) {
                others.push_back(&minimal[j]);
            }
        }
        red.set_basis(std::move(others));
        const auto& g = minimal[i];
        auto tail = Polynomial<F>::from_sorted(ring, {g.terms().begin() + 1, g.terms().end()});
        auto reduced_tail = red.reduce(tail, nullptr, &out.stats);
        std::vector<typename Polynomial<F>::Term> terms{g.lead()};
        terms.insert(terms.end(), reduced_tail.terms().begin(), reduced_tail.terms().end());
        minimal[i] = Polynomial<F>::from_sorted(ring, std::move(terms));
    }
    out.elements = std::move(minimal);
    out.reduced = true;
    return out;
}

template <class F>
GroebnerBasis<F> buchberger(const RingPtr<F>& ring, std::span<const Polynomial<F>> gens, const MonomialOrder& order,
                            const GbOptions& opts)
{
    auto target = ring->order() == order ? ring : ring->with_order(order);
    std::vector<Polynomial<F>> moved;
    moved.reserve(gens.size());
    for (const auto& g : gens) {
        moved.push_back(g.in_ring(target));
    }
    return buchberger<F>(target, std::span<const Polynomial<F>>(moved), opts);
}

template <class F>
bool ideal_membership(const Polynomial<F>& f, const GroebnerBasis<F>& G)
{
    const Polynomial<F> g = (f.ring() == G.ring || *f.ring() == *G.ring) ? f : f.in_ring(G.ring);
    return normal_form(g, G).is_zero();
}

template <class F>
std::vector<Polynomial<F>> eliminate(const RingPtr<F>& ring, std::span<const Polynomial<F>> gens,
                                     const std::vector<Block>& drop, const GbOptions& opts)
{
    auto gb = buchberger<F>(ring, gens, ring->elimination_order(drop), opts);
    std::vector<Polynomial<F>> out;
    for (const auto& g : gb.elements) {
        bool free = true;
        for (Block b : drop) {
            free = free && g.free_of(b);
        }
        if (free) {
            out.push_back(g.in_ring(ring));
        }
    }
    return out;
}

template <class F>
bool all_spairs_reduce_to_zero(const GroebnerBasis<F>& G)
{
    for (std::size_t i = 0; i < G.elements.size(); ++i) {
        for (std::size_t j = i + 1; j < G.elements.size(); ++j) {
            auto s = s_polynomial(G.elements[i], G.elements[j]);
            if (!normal_form(s, G).is_zero()) {
                return false;
            }
        }
    }
    return true;
}

template <class F>
bool is_reduced(const GroebnerBasis<F>& G)
{
    for (std::size_t i = 0; i < G.elements.size(); ++i) {
        const auto& g = G.elements[i];
        if (g.is_zero() || !g.field().is_one(g.lead_coeff())) {
            return false;
        }
        for (std::size_t j = 0; j < G.elements.size(); ++j) {
            if (i == j) {
                continue;
            }
            for (const auto& t : g.terms()) {
                if (G.elements[j].lead_monomial().divides(t.mono)) {
                    return false;
                }
            }
        }
    }
    return true;
}

#define CORELAB_INSTANTIATE(F)                                                                                    \
    template Polynomial<F> normal_form(const Polynomial<F>&, std::span<const Polynomial<F>>, GbStats*);           \
    template Polynomial<F> s_polynomial(const Polynomial<F>&, const Polynomial<F>&);                              \
    template GroebnerBasis<F> buchberger(const RingPtr<F>&, std::span<const Polynomial<F>>, const GbOptions&);    \
    template GroebnerBasis<F> buchberger(const RingPtr<F>&, std::span<const Polynomial<F>>, const MonomialOrder&, \
                                         const GbOptions&);                                                       \
    template bool ideal_membership(const Polynomial<F>&, const GroebnerBasis<F>&);                                \
    template std::vector<Polynomial<F>> eliminate(const RingPtr<F>&, std::span<const Polynomial<F>>,              \
                                                  const std::vector<Block>&, const GbOptions&);                   \
    template bool all_spairs_reduce_to_zero(const GroebnerBasis<F>&);                                             \
    template bool is_reduced(const GroebnerBasis<F>&);

CORELAB_INSTANTIATE(PrimeField)
CORELAB_INSTANTIATE(RationalField)

#undef CORELAB_INSTANTIATE

} // namespace corelab
