#include "corelab/ideal.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace corelab {

namespace {

// Reduced GB of gens under a two-block order with `vars` first, keeping the
// elements that avoid `vars`.
template <class F>
std::vector<Polynomial<F>> eliminate_variables(const RingPtr<F>& ring, const std::vector<Polynomial<F>>& gens,
                                               const std::vector<int>& vars, const GbOptions& opts)
{
    std::vector<bool> drop(ring->nvars(), false);
    for (int v : vars) {
        drop[v] = true;
    }
    OrderBlock first{OrderKind::Grevlex, vars};
    OrderBlock rest{OrderKind::Grevlex, {}};
    for (std::size_t v = 0; v < ring->nvars(); ++v) {
        if (!drop[v]) {
            rest.vars.push_back(static_cast<int>(v));
        }
    }
    std::vector<OrderBlock> blocks{first};
    if (!rest.vars.empty()) {
        blocks.push_back(rest);
    }
    auto gb = buchberger<F>(ring, std::span<const Polynomial<F>>(gens), MonomialOrder(blocks), opts);
    std::vector<Polynomial<F>> out;
    for (const auto& g : gb.elements) {
        bool free = true;
        for (int v : vars) {
            free = free && g.degree_in(v) == 0;
        }
        if (free) {
            out.push_back(g.in_ring(ring));
        }
    }
    return out;
}

template <class F>
void require_same(const Ideal<F>& I, const Ideal<F>& J)
{
    if (!I.ring()->same_variables(*J.ring())) {
        throw RingMismatch("ideals live in different rings");
    }
}

template <class F>
int single_variable(const Polynomial<F>& f)
{
    if (!f.is_monomial() || f.lead_monomial().degree() != 1) {
        return -1;
    }
    for (std::size_t v = 0; v < f.ring()->nvars(); ++v) {
        if (f.lead_monomial()[v] == 1) {
            return static_cast<int>(v);
        }
    }
    return -1;
}

// GB under grevlex with x_v last; homogeneous elements are divisible by x_v
// exactly when their leading term is.
template <class F>
std::vector<Polynomial<F>> bayer_basis(const Ideal<F>& I, int v)
{
    const auto& gb = I.groebner(I.ring()->grevlex_with_last(v));
    return gb.elements;
}

template <class F>
Ideal<F> colon_variable_homogeneous(const Ideal<F>& I, int v, bool saturate)
{
    std::vector<Polynomial<F>> out;
    for (const auto& g : bayer_basis(I, v)) {
        unsigned e = g.lead_monomial()[v];
        if (!saturate) {
            e = std::min(e, 1u);
        }
        if (e == 0) {
            out.push_back(g.in_ring(I.ring()));
            continue;
        }
        Monomial m;
        m.set(v, e);
        auto q = g.divide_exact(Polynomial<F>::term(g.ring(), m));
        if (!q) {
            throw std::logic_error("reverse-lex colon: leading term divisible but polynomial is not");
        }
        out.push_back(q->in_ring(I.ring()));
    }
    return Ideal<F>(I.ring(), std::move(out), I.options());
}

template <class F>
Ideal<F> saturate_rabinowitsch(const Ideal<F>& I, const Polynomial<F>& f)
{
    auto big = extend_ring(I.ring(), 1);
    const int t = static_cast<int>(big->nvars()) - 1;
    std::vector<Polynomial<F>> gens;
    for (const auto& g : I.generators()) {
        gens.push_back(embed(g, big));
    }
    const F& k = I.ring()->field();
    gens.push_back(Polynomial<F>::constant(big, k.one()) - Polynomial<F>::variable(big, t) * embed(f, big));
    auto elim = eliminate_variables(big, gens, {t}, I.options());
    std::vector<Polynomial<F>> out;
    for (const auto& g : elim) {
        out.push_back(restrict_to(g, I.ring()));
    }
    return Ideal<F>(I.ring(), std::move(out), I.options());
}

} // namespace

template <class F>
Ideal<F>::Ideal(RingPtr<F> ring, std::vector<Polynomial<F>> gens, GbOptions opts)
    : ring_(std::move(ring)), opts_(std::move(opts)), cache_(std::make_shared<Cache>())
{
    for (auto& g : gens) {
        if (g.is_zero()) {
            continue;
        }
        if (!g.ring()->same_variables(*ring_)) {
            throw RingMismatch("ideal generator from a different ring");
        }
        gens_.push_back(g.ring() == ring_ || *g.ring() == *ring_ ? std::move(g) : g.in_ring(ring_));
    }
}

template <class F>
Ideal<F> Ideal<F>::unit(RingPtr<F> ring, GbOptions opts)
{
    auto one = Polynomial<F>::constant(ring, ring->field().one());
    return Ideal(std::move(ring), {one}, std::move(opts));
}

template <class F>
const GroebnerBasis<F>& Ideal<F>::groebner(const MonomialOrder& order) const
{
    std::lock_guard<std::mutex> lock(cache_->mu);
    for (const auto& b : cache_->bases) {
        if (b->ring->order() == order) {
            return *b;
        }
    }
    auto gb = std::make_unique<GroebnerBasis<F>>(
        buchberger<F>(ring_, std::span<const Polynomial<F>>(gens_), order, opts_));
    if (gb->ring->order() != order) {
        throw std::logic_error("GB computed under an unexpected order");
    }
    cache_->bases.push_back(std::move(gb));
    return *cache_->bases.back();
}

template <class F>
bool Ideal<F>::is_homogeneous() const
{
    return std::all_of(gens_.begin(), gens_.end(), [](const auto& g) { return g.is_homogeneous(); });
}

template <class F>
bool Ideal<F>::contains(const Polynomial<F>& f) const
{
    if (f.is_zero()) {
        return true;
    }
    return ideal_membership(f, groebner());
}

template <class F>
bool Ideal<F>::contains(const Ideal& J) const
{
    require_same(*this, J);
    return std::all_of(J.gens_.begin(), J.gens_.end(), [&](const auto& g) { return contains(g); });
}

template <class F>
Ideal<F> Ideal<F>::minimized() const
{
    std::vector<Polynomial<F>> out;
    for (const auto& g : groebner().elements) {
        out.push_back(g.in_ring(ring_));
    }
    return Ideal(ring_, std::move(out), opts_);
}

template <class F>
std::string Ideal<F>::to_string() const
{
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        out << (i ? ", " : "") << gens_[i].to_string();
    }
    out << ')';
    return out.str();
}

template <class F>
RingPtr<F> extend_ring(const RingPtr<F>& ring, int extra)
{
    return ring->with_blocks(ring->count(Block::X), ring->count(Block::Y), ring->count(Block::Z),
                             ring->count(Block::T) + extra);
}

template <class F>
Polynomial<F> embed(const Polynomial<F>& f, const RingPtr<F>& target)
{
    std::vector<int> map(f.ring()->nvars());
    std::iota(map.begin(), map.end(), 0);
    return f.map_variables(target, map);
}

template <class F>
Polynomial<F> restrict_to(const Polynomial<F>& f, const RingPtr<F>& target)
{
    std::vector<int> map(f.ring()->nvars(), -1);
    for (std::size_t v = 0; v < target->nvars(); ++v) {
        map[v] = static_cast<int>(v);
    }
    return f.map_variables(target, map);
}

template <class F>
Ideal<F> sum(const Ideal<F>& I, const Ideal<F>& J)
{
    require_same(I, J);
    auto gens = I.generators();
    gens.insert(gens.end(), J.generators().begin(), J.generators().end());
    return Ideal<F>(I.ring(), std::move(gens), I.options());
}

template <class F>
Ideal<F> product(const Ideal<F>& I, const Ideal<F>& J)
{
    require_same(I, J);
    std::vector<Polynomial<F>> gens;
    for (const auto& a : I.generators()) {
        for (const auto& b : J.generators()) {
            auto p = a * b;
            if (std::none_of(gens.begin(), gens.end(), [&](const auto& q) { return q == p; })) {
                gens.push_back(std::move(p));
            }
        }
    }
    return Ideal<F>(I.ring(), std::move(gens), I.options());
}

template <class F>
Ideal<F> power(const Ideal<F>& I, unsigned n)
{
    Ideal<F> out = Ideal<F>::unit(I.ring(), I.options());
    for (unsigned i = 0; i < n; ++i) {
        out = product(out, I);
    }
    return out;
}

template <class F>
Ideal<F> intersect(const Ideal<F>& I, const Ideal<F>& J)
{
    require_same(I, J);
    if (I.is_zero() || J.is_zero()) {
        return Ideal<F>(I.ring(), {}, I.options());
    }
    auto big = extend_ring(I.ring(), 1);
    const int t = static_cast<int>(big->nvars()) - 1;
    auto tv = Polynomial<F>::variable(big, t);
    auto one_minus_t = Polynomial<F>::constant(big, big->field().one()) - tv;
    std::vector<Polynomial<F>> gens;
    for (const auto& g : I.generators()) {
        gens.push_back(tv * embed(g, big));
    }
    for (const auto& h : J.generators()) {
        gens.push_back(one_minus_t * embed(h, big));
    }
    auto elim = eliminate_variables(big, gens, {t}, I.options());
    std::vector<Polynomial<F>> out;
    for (const auto& g : elim) {
        out.push_back(restrict_to(g, I.ring()));
    }
    return Ideal<F>(I.ring(), std::move(out), I.options());
}

template <class F>
Ideal<F> quotient(const Ideal<F>& I, const Polynomial<F>& f)
{
    if (f.is_zero()) {
        throw std::invalid_argument("quotient by the zero ideal");
    }
    if (f.is_constant() || I.is_zero()) {
        return I;
    }
    int v = single_variable(f);
    if (v >= 0 && I.is_homogeneous()) {
        return colon_variable_homogeneous(I, v, false);
    }
    auto fi = f.ring() == I.ring() ? f : f.in_ring(I.ring());
    auto K = intersect(I, Ideal<F>(I.ring(), {fi}, I.options()));
    std::vector<Polynomial<F>> out;
    for (const auto& g : K.generators()) {
        auto q = g.divide_exact(fi);
        if (!q) {
            throw std::logic_error("element of I ∩ (f) not divisible by f");
        }
        out.push_back(std::move(*q));
    }
    return Ideal<F>(I.ring(), std::move(out), I.options());
}

template <class F>
Ideal<F> quotient(const Ideal<F>& I, const Ideal<F>& J)
{
    require_same(I, J);
    if (J.is_zero()) {
        throw std::invalid_argument("quotient by the zero ideal");
    }
    std::optional<Ideal<F>> acc;
    for (const auto& g : J.generators()) {
        auto q = quotient(I, g);
        acc = acc ? intersect(*acc, q) : q;
        // I is a lower bound for the colon
        if (I.contains(*acc)) {
            break;
        }
    }
    return *acc;
}

template <class F>
Ideal<F> saturate(const Ideal<F>& I, const Polynomial<F>& f)
{
    if (f.is_zero()) {
        throw std::invalid_argument("saturation by zero");
    }
    if (f.is_constant() || I.is_zero()) {
        return I;
    }
    if (f.is_monomial()) {
        Ideal<F> S = I;
        const bool homogeneous = I.is_homogeneous();
        for (std::size_t v = 0; v < f.ring()->nvars(); ++v) {
            if (f.lead_monomial()[v] == 0) {
                continue;
            }
            S = homogeneous ? colon_variable_homogeneous(S, static_cast<int>(v), true)
                            : saturate_rabinowitsch(S, Polynomial<F>::variable(I.ring(), static_cast<int>(v)));
        }
        return S;
    }
    return saturate_rabinowitsch(I, f.ring() == I.ring() ? f : f.in_ring(I.ring()));
}

template <class F>
Ideal<F> saturate(const Ideal<F>& I, const Ideal<F>& J, int max_rounds)
{
    require_same(I, J);
    if (J.is_zero()) {
        throw std::invalid_argument("saturation by the zero ideal");
    }
    // I : J^∞ = ∩_g I : g^∞ over generators g of J.
    std::optional<Ideal<F>> acc;
    for (const auto& g : J.generators()) {
        auto s = saturate(I, g);
        acc = acc ? intersect(*acc, s) : s;
    }
    // Stability check: one more colon by J must not grow the result.
    Ideal<F> S = *acc;
    for (int round = 0; round < max_rounds; ++round) {
        auto next = quotient(S, J);
        if (S.contains(next)) {
            return S;
        }
        S = next;
    }
    throw std::runtime_error("saturation did not stabilize within the round bound");
}

template <class F>
bool equals(const Ideal<F>& I, const Ideal<F>& J)
{
    require_same(I, J);
    auto ord = MonomialOrder::grevlex(I.ring()->nvars());
    const auto& a = I.groebner(ord).elements;
    const auto& b = J.groebner(ord).elements;
    if (a.size() != b.size()) {
        return false;
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!(a[i] == b[i])) {
            return false;
        }
    }
    return true;
}

template <class F>
bool radical_membership(const Polynomial<F>& f, const Ideal<F>& I)
{
    if (f.is_zero()) {
        return true;
    }
    auto big = extend_ring(I.ring(), 1);
    const int w = static_cast<int>(big->nvars()) - 1;
    std::vector<Polynomial<F>> gens;
    for (const auto& g : I.generators()) {
        gens.push_back(embed(g, big));
    }
    gens.push_back(Polynomial<F>::constant(big, big->field().one()) -
                   Polynomial<F>::variable(big, w) * embed(f, big));
    auto gb = buchberger<F>(big, std::span<const Polynomial<F>>(gens), I.options());
    return gb.is_unit();
}

template <class F>
int krull_dimension(const Ideal<F>& I)
{
    const std::size_t n = I.ring()->nvars();
    if (I.is_zero()) {
        return static_cast<int>(n);
    }
    const auto& gb = I.groebner(MonomialOrder::grevlex(n));
    if (gb.is_unit()) {
        return kDimensionOfUnitIdeal;
    }
    std::vector<std::uint64_t> supports;
    for (const auto& g : gb.elements) {
        supports.push_back(g.lead_monomial().support_mask());
    }
    int best = 0;
    // Independent sets are closed under subsets; depth-first over variables in
    // increasing order with a bound on what is still reachable.
    auto rec = [&](auto&& self, std::size_t next, std::uint64_t set, int size) -> void {
        best = std::max(best, size);
        for (std::size_t v = next; v < n; ++v) {
            if (size + static_cast<int>(n - v) <= best) {
                return;
            }
            std::uint64_t s = set | (std::uint64_t{1} << v);
            bool ok = std::none_of(supports.begin(), supports.end(), [&](std::uint64_t m) { return (m & ~s) == 0; });
            if (ok) {
                self(self, v + 1, s, size + 1);
            }
        }
    };
    rec(rec, 0, std::uint64_t{0}, 0);
    return best;
}

template <class F>
Polynomial<F> gcd_poly(const Polynomial<F>& f, const Polynomial<F>& g, const GbOptions& opts)
{
    if (f.is_zero() || g.is_zero()) {
        throw std::invalid_argument("gcd of the zero polynomial");
    }
    if (g.divide_exact(f)) {
        return f.monic();
    }
    if (f.divide_exact(g)) {
        return g.monic();
    }
    auto ring = f.ring();
    auto gi = g.ring() == ring ? g : g.in_ring(ring);
    auto L = intersect(Ideal<F>(ring, {f}, opts), Ideal<F>(ring, {gi}, opts));
    const auto& gens = L.generators();
    if (gens.size() != 1) {
        throw std::logic_error("intersection of principal ideals is not principal");
    }
    auto q = (f * gi).divide_exact(gens.front());
    if (!q) {
        throw std::logic_error("lcm does not divide f*g");
    }
    return q->monic();
}

#define CORELAB_INSTANTIATE(F)                                                                            \
    template class Ideal<F>;                                                                              \
    template RingPtr<F> extend_ring(const RingPtr<F>&, int);                                              \
    template Polynomial<F> embed(const Polynomial<F>&, const RingPtr<F>&);                                \
    template Polynomial<F> restrict_to(const Polynomial<F>&, const RingPtr<F>&);                          \
    template Ideal<F> sum(const Ideal<F>&, const Ideal<F>&);                                              \
    template Ideal<F> product(const Ideal<F>&, const Ideal<F>&);                                          \
    template Ideal<F> power(const Ideal<F>&, unsigned);                                                   \
    template Ideal<F> intersect(const Ideal<F>&, const Ideal<F>&);                                        \
    template Ideal<F> quotient(const Ideal<F>&, const Polynomial<F>&);                                    \
    template Ideal<F> quotient(const Ideal<F>&, const Ideal<F>&);                                         \
    template Ideal<F> saturate(const Ideal<F>&, const Polynomial<F>&);                                    \
    template Ideal<F> saturate(const Ideal<F>&, const Ideal<F>&, int);                                    \
    template bool equals(const Ideal<F>&, const Ideal<F>&);                                               \
    template bool radical_membership(const Polynomial<F>&, const Ideal<F>&);                              \
    template int krull_dimension(const Ideal<F>&);                                                        \
    template Polynomial<F> gcd_poly(const Polynomial<F>&, const Polynomial<F>&, const GbOptions&);

CORELAB_INSTANTIATE(PrimeField)
CORELAB_INSTANTIATE(RationalField)

#undef CORELAB_INSTANTIATE

} // namespace corelab
