#include "corelab/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace corelab {

template <class F>
Polynomial<F>::Polynomial(RingPtr<F> ring, std::vector<Term> terms) : ring_(std::move(ring))
{
    const auto& ord = ring_->order();
    const F& k = ring_->field();
    std::sort(terms.begin(), terms.end(),
              [&](const Term& a, const Term& b) { return ord.compare(a.mono, b.mono) > 0; });
    terms_.reserve(terms.size());
    for (auto& t : terms) {
        if (!terms_.empty() && terms_.back().mono == t.mono) {
            terms_.back().coeff = k.add(terms_.back().coeff, t.coeff);
            continue;
        }
        if (!terms_.empty() && k.is_zero(terms_.back().coeff)) {
            terms_.pop_back();
        }
        terms_.push_back(std::move(t));
    }
    if (!terms_.empty() && k.is_zero(terms_.back().coeff)) {
        terms_.pop_back();
    }
}

template <class F>
Polynomial<F> Polynomial<F>::constant(RingPtr<F> ring, const Coeff& c)
{
    return term(std::move(ring), Monomial{}, c);
}

template <class F>
Polynomial<F> Polynomial<F>::term(RingPtr<F> ring, const Monomial& m, const Coeff& c)
{
    Polynomial p(std::move(ring));
    if (!p.field().is_zero(c)) {
        p.terms_.push_back({c, m});
    }
    return p;
}

template <class F>
Polynomial<F> Polynomial<F>::term(RingPtr<F> ring, const Monomial& m)
{
    Coeff one = ring->field().one();
    return term(std::move(ring), m, one);
}

template <class F>
Polynomial<F> Polynomial<F>::variable(RingPtr<F> ring, int v)
{
    if (v < 0 || static_cast<std::size_t>(v) >= ring->nvars()) {
        throw std::out_of_range("variable index out of range");
    }
    Monomial m;
    m.set(v, 1);
    return term(std::move(ring), m);
}

template <class F>
Polynomial<F> Polynomial<F>::from_sorted(RingPtr<F> ring, std::vector<Term> terms)
{
    Polynomial p(std::move(ring));
    p.terms_ = std::move(terms);
    return p;
}

template <class F>
int Polynomial<F>::degree() const
{
    int d = -1;
    for (const auto& t : terms_) {
        d = std::max(d, static_cast<int>(t.mono.degree()));
    }
    return d;
}

template <class F>
unsigned Polynomial<F>::degree_in(int v) const
{
    unsigned d = 0;
    for (const auto& t : terms_) {
        d = std::max(d, t.mono[v]);
    }
    return d;
}

template <class F>
bool Polynomial<F>::is_homogeneous() const
{
    for (const auto& t : terms_) {
        if (t.mono.degree() != terms_.front().mono.degree()) {
            return false;
        }
    }
    return true;
}

template <class F>
bool Polynomial<F>::free_of(Block b) const
{
    for (const auto& t : terms_) {
        if (ring_->block_degree(t.mono, b) != 0) {
            return false;
        }
    }
    return true;
}

template <class F>
void Polynomial<F>::require_same_ring(const Polynomial& o) const
{
    if (ring_ != o.ring_ && !(*ring_ == *o.ring_)) {
        throw RingMismatch("polynomials belong to different rings");
    }
}

template <class F>
Polynomial<F> Polynomial<F>::operator+(const Polynomial& o) const
{
    require_same_ring(o);
    const auto& ord = ring_->order();
    const F& k = field();
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        auto c = ord.compare(terms_[i].mono, o.terms_[j].mono);
        if (c > 0) {
            r.terms_.push_back(terms_[i++]);
        } else if (c < 0) {
            r.terms_.push_back(o.terms_[j++]);
        } else {
            Coeff s = k.add(terms_[i].coeff, o.terms_[j].coeff);
            if (!k.is_zero(s)) {
                r.terms_.push_back({std::move(s), terms_[i].mono});
            }
            ++i;
            ++j;
        }
    }
    r.terms_.insert(r.terms_.end(), terms_.begin() + i, terms_.end());
    r.terms_.insert(r.terms_.end(), o.terms_.begin() + j, o.terms_.end());
    return r;
}

template <class F>
Polynomial<F> Polynomial<F>::operator-() const
{
    Polynomial r(*this);
    for (auto& t : r.terms_) {
        t.coeff = field().neg(t.coeff);
    }
    return r;
}

template <class F>
Polynomial<F> Polynomial<F>::operator-(const Polynomial& o) const
{
    require_same_ring(o);
    return sub_mul(field().one(), Monomial{}, o);
}

template <class F>
Polynomial<F> Polynomial<F>::sub_mul(const Coeff& c, const Monomial& m, const Polynomial& g) const
{
    const auto& ord = ring_->order();
    const F& k = field();
    Polynomial r(ring_);
    if (k.is_zero(c)) {
        return *this;
    }
    Coeff negc = k.neg(c);
    r.terms_.reserve(terms_.size() + g.terms_.size());
    std::size_t i = 0, j = 0;
    const std::size_t n = terms_.size(), gn = g.terms_.size();
    if (j < gn) {
        Monomial gm = g.terms_[j].mono * m;
        while (true) {
            if (i < n) {
                auto cmp = ord.compare(terms_[i].mono, gm);
                if (cmp > 0) {
                    r.terms_.push_back(terms_[i++]);
                    continue;
                }
                if (cmp == 0) {
                    Coeff s = k.add(terms_[i].coeff, k.mul(negc, g.terms_[j].coeff));
                    if (!k.is_zero(s)) {
                        r.terms_.push_back({std::move(s), gm});
                    }
                    ++i;
                    if (++j >= gn) {
                        break;
                    }
                    gm = g.terms_[j].mono * m;
                    continue;
                }
            }
            r.terms_.push_back({k.mul(negc, g.terms_[j].coeff), gm});
            if (++j >= gn) {
                break;
            }
            gm = g.terms_[j].mono * m;
        }
    }
    r.terms_.insert(r.terms_.end(), terms_.begin() + i, terms_.end());
    return r;
}

template <class F>
Polynomial<F> Polynomial<F>::operator*(const Polynomial& o) const
{
    require_same_ring(o);
    if (is_zero() || o.is_zero()) {
        return Polynomial(ring_);
    }
    const Polynomial& big = size() >= o.size() ? *this : o;
    const Polynomial& small = size() >= o.size() ? o : *this;
    std::vector<Term> acc;
    acc.reserve(big.size() * small.size());
    for (const auto& s : small.terms_) {
        for (const auto& b : big.terms_) {
            acc.push_back({field().mul(s.coeff, b.coeff), s.mono * b.mono});
        }
    }
    return Polynomial(ring_, std::move(acc));
}

template <class F>
Polynomial<F> Polynomial<F>::scale(const Coeff& c) const
{
    if (field().is_zero(c)) {
        return Polynomial(ring_);
    }
    Polynomial r(*this);
    for (auto& t : r.terms_) {
        t.coeff = field().mul(t.coeff, c);
    }
    return r;
}

template <class F>
Polynomial<F> Polynomial<F>::mul_term(const Coeff& c, const Monomial& m) const
{
    if (field().is_zero(c)) {
        return Polynomial(ring_);
    }
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
        r.terms_.push_back({field().mul(t.coeff, c), t.mono * m});
    }
    return r;
}

template <class F>
Polynomial<F> Polynomial<F>::pow(unsigned n) const
{
    Polynomial result = constant(ring_, field().one());
    Polynomial base = *this;
    while (n > 0) {
        if (n & 1u) {
            result = result * base;
        }
        n >>= 1;
        if (n > 0) {
            base = base * base;
        }
    }
    return result;
}

template <class F>
Polynomial<F> Polynomial<F>::monic() const
{
    if (is_zero() || field().is_one(lead_coeff())) {
        return *this;
    }
    return scale(field().inv(lead_coeff()));
}

template <class F>
Polynomial<F> Polynomial<F>::in_ring(const RingPtr<F>& target) const
{
    if (!ring_->same_variables(*target)) {
        throw RingMismatch("in_ring: variable layout differs");
    }
    if (ring_->order() == target->order()) {
        Polynomial r(*this);
        r.ring_ = target;
        return r;
    }
    return Polynomial(target, terms_);
}

template <class F>
Polynomial<F> Polynomial<F>::map_variables(const RingPtr<F>& target, std::span<const int> mapping) const
{
    if (mapping.size() != ring_->nvars()) {
        throw std::invalid_argument("map_variables: mapping size mismatch");
    }
    if (!(ring_->field() == target->field())) {
        throw RingMismatch("map_variables: coefficient fields differ");
    }
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        Monomial m;
        for (std::size_t v = 0; v < mapping.size(); ++v) {
            if (t.mono[v] == 0) {
                continue;
            }
            if (mapping[v] < 0) {
                throw std::invalid_argument("map_variables: variable " + ring_->var_name(static_cast<int>(v)) +
                                            " has no image");
            }
            m.set(mapping[v], m[mapping[v]] + t.mono[v]);
        }
        out.push_back({t.coeff, m});
    }
    return Polynomial(target, std::move(out));
}

template <class F>
std::optional<Polynomial<F>> Polynomial<F>::divide_exact(const Polynomial& g) const
{
    require_same_ring(g);
    if (g.is_zero()) {
        throw std::domain_error("division by the zero polynomial");
    }
    const F& k = field();
    Coeff inv_lc = k.inv(g.lead_coeff());
    Polynomial rem = *this;
    std::vector<Term> quot;
    while (!rem.is_zero()) {
        if (!g.lead_monomial().divides(rem.lead_monomial())) {
            return std::nullopt;
        }
        Monomial m = rem.lead_monomial() / g.lead_monomial();
        Coeff c = k.mul(rem.lead_coeff(), inv_lc);
        quot.push_back({c, m});
        rem = rem.sub_mul(c, m, g);
    }
    return Polynomial(ring_, std::move(quot));
}

template <class F>
bool Polynomial<F>::operator==(const Polynomial& o) const
{
    if (terms_.size() != o.terms_.size() || !ring_->same_variables(*o.ring_)) {
        return false;
    }
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (!(terms_[i].mono == o.terms_[i].mono) || !(terms_[i].coeff == o.terms_[i].coeff)) {
            return false;
        }
    }
    return true;
}

template <class F>
bool Polynomial<F>::check_invariants() const
{
    const auto& ord = ring_->order();
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (field().is_zero(terms_[i].coeff)) {
            return false;
        }
        if (i > 0 && !(ord.compare(terms_[i - 1].mono, terms_[i].mono) > 0)) {
            return false;
        }
        for (std::size_t v = ring_->nvars(); v < kMaxVars; ++v) {
            if (terms_[i].mono[v] != 0) {
                return false;
            }
        }
    }
    return true;
}

template <class F>
std::string Polynomial<F>::to_string() const
{
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream out;
    bool first = true;
    for (const auto& t : terms_) {
        std::string c = field().to_string(t.coeff);
        bool negative = !c.empty() && c[0] == '-';
        if (negative) {
            c.erase(0, 1);
        }
        if (first) {
            if (negative) {
                out << '-';
            }
        } else {
            out << (negative ? " - " : " + ");
        }
        first = false;
        bool wrote = false;
        if (c != "1" || t.mono.is_one()) {
            out << c;
            wrote = true;
        }
        for (std::size_t v = 0; v < ring_->nvars(); ++v) {
            if (t.mono[v] == 0) {
                continue;
            }
            if (wrote) {
                out << '*';
            }
            out << ring_->var_name(static_cast<int>(v));
            if (t.mono[v] > 1) {
                out << '^' << t.mono[v];
            }
            wrote = true;
        }
    }
    return out.str();
}

template <class F>
Polynomial<F> multihomogenize(const Polynomial<F>& f)
{
    const auto& ring = *f.ring();
    if (ring.count(Block::Y) == 0 || ring.count(Block::Y) != ring.count(Block::X)) {
        throw std::invalid_argument("multihomogenize: ring has no Y block matching X");
    }
    if (!f.free_of(Block::Y)) {
        throw std::invalid_argument("multihomogenize: input already involves Y variables");
    }
    if (f.is_zero()) {
        return f;
    }
    const int d = ring.count(Block::X);
    std::vector<unsigned> top = x_multidegree(f);
    std::vector<typename Polynomial<F>::Term> out;
    out.reserve(f.size());
    for (const auto& t : f.terms()) {
        Monomial m = t.mono;
        for (int i = 0; i < d; ++i) {
            unsigned e = t.mono[ring.var(Block::X, i)];
            m.set(ring.var(Block::Y, i), top[i] - e);
        }
        out.push_back({t.coeff, m});
    }
    return Polynomial<F>(f.ring(), std::move(out));
}

template <class F>
std::vector<unsigned> x_multidegree(const Polynomial<F>& f)
{
    const auto& ring = *f.ring();
    std::vector<unsigned> deg(ring.count(Block::X), 0);
    for (int i = 0; i < ring.count(Block::X); ++i) {
        deg[i] = f.degree_in(ring.var(Block::X, i));
    }
    return deg;
}

template <class F>
Polynomial<F> specialize_block(const Polynomial<F>& f, Block b, std::span<const typename F::Element> values)
{
    const auto& ring = *f.ring();
    if (static_cast<int>(values.size()) != ring.count(b)) {
        throw std::invalid_argument(std::string("specialize: expected ") + std::to_string(ring.count(b)) +
                                    " values for block " + block_name(b) + ", got " + std::to_string(values.size()));
    }
    int counts[4] = {ring.count(Block::X), ring.count(Block::Y), ring.count(Block::Z), ring.count(Block::T)};
    counts[static_cast<int>(b)] = 0;
    RingPtr<F> target = ring.with_blocks(counts[0], counts[1], counts[2], counts[3]);
    const F& k = ring.field();
    const int off = ring.offset(b), n = ring.count(b);
    std::vector<int> remap(ring.nvars(), -1);
    for (std::size_t v = 0, w = 0; v < ring.nvars(); ++v) {
        if (static_cast<int>(v) >= off && static_cast<int>(v) < off + n) {
            continue;
        }
        remap[v] = static_cast<int>(w++);
    }
    std::vector<typename Polynomial<F>::Term> out;
    out.reserve(f.size());
    for (const auto& t : f.terms()) {
        auto c = t.coeff;
        for (int i = 0; i < n && !k.is_zero(c); ++i) {
            for (unsigned e = 0; e < t.mono[off + i]; ++e) {
                c = k.mul(c, values[i]);
            }
        }
        if (k.is_zero(c)) {
            continue;
        }
        Monomial m;
        for (std::size_t v = 0; v < ring.nvars(); ++v) {
            if (remap[v] >= 0 && t.mono[v] != 0) {
                m.set(remap[v], t.mono[v]);
            }
        }
        out.push_back({c, m});
    }
    return Polynomial<F>(target, std::move(out));
}

template <class F>
Polynomial<F> specialize_z(const Polynomial<F>& f, std::span<const typename F::Element> values)
{
    return specialize_block(f, Block::Z, values);
}

template <class F>
typename F::Element evaluate(const Polynomial<F>& f, std::span<const typename F::Element> point)
{
    const auto& ring = *f.ring();
    if (point.size() != ring.nvars()) {
        throw std::invalid_argument("evaluate: point dimension mismatch");
    }
    const F& k = ring.field();
    auto acc = k.zero();
    for (const auto& t : f.terms()) {
        auto c = t.coeff;
        for (std::size_t v = 0; v < ring.nvars(); ++v) {
            for (unsigned e = 0; e < t.mono[v]; ++e) {
                c = k.mul(c, point[v]);
            }
        }
        acc = k.add(acc, c);
    }
    return acc;
}

#define CORELAB_INSTANTIATE(F)                                                                                 \
    template class Polynomial<F>;                                                                              \
    template Polynomial<F> multihomogenize(const Polynomial<F>&);                                              \
    template std::vector<unsigned> x_multidegree(const Polynomial<F>&);                                        \
    template Polynomial<F> specialize_z(const Polynomial<F>&, std::span<const F::Element>);                    \
    template Polynomial<F> specialize_block(const Polynomial<F>&, Block, std::span<const F::Element>);         \
    template F::Element evaluate(const Polynomial<F>&, std::span<const F::Element>);

CORELAB_INSTANTIATE(PrimeField)
CORELAB_INSTANTIATE(RationalField)

#undef CORELAB_INSTANTIATE

} // namespace corelab
