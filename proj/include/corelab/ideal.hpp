#pragma once

#include <memory>
#include <mutex>
#include <vector>

#include "corelab/groebner.hpp"

namespace corelab {

// Finitely generated ideal with a lazily computed, shared reduced-GB cache
// (one entry per monomial order). Generators are immutable.
template <class F>
class Ideal {
public:
    Ideal(RingPtr<F> ring, std::vector<Polynomial<F>> gens, GbOptions opts = {});

    static Ideal unit(RingPtr<F> ring, GbOptions opts = {});

    const RingPtr<F>& ring() const { return ring_; }
    const std::vector<Polynomial<F>>& generators() const { return gens_; }
    const GbOptions& options() const { return opts_; }
    Ideal with_options(GbOptions opts) const { return Ideal(ring_, gens_, std::move(opts)); }

    // Reduced GB under the ring's own order, or under `order`.
    const GroebnerBasis<F>& groebner() const { return groebner(ring_->order()); }
    const GroebnerBasis<F>& groebner(const MonomialOrder& order) const;

    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const { return groebner().is_unit(); }
    bool is_homogeneous() const;
    bool contains(const Polynomial<F>& f) const;
    bool contains(const Ideal& J) const;

    // Same ideal, generated by its reduced GB (in the ring order).
    Ideal minimized() const;

    std::string to_string() const;

private:
    struct Cache {
        std::mutex mu;
        std::vector<std::unique_ptr<GroebnerBasis<F>>> bases;
    };

    RingPtr<F> ring_;
    std::vector<Polynomial<F>> gens_;
    GbOptions opts_;
    std::shared_ptr<Cache> cache_;
};

// Ring with `extra` additional T variables appended; polynomials of the
// original ring embed by the identity on indices.
template <class F>
RingPtr<F> extend_ring(const RingPtr<F>& ring, int extra);

template <class F>
Polynomial<F> embed(const Polynomial<F>& f, const RingPtr<F>& target);

// Inverse of embed for polynomials not involving the extra variables.
template <class F>
Polynomial<F> restrict_to(const Polynomial<F>& f, const RingPtr<F>& target);

template <class F>
Ideal<F> sum(const Ideal<F>& I, const Ideal<F>& J);

template <class F>
Ideal<F> product(const Ideal<F>& I, const Ideal<F>& J);

template <class F>
Ideal<F> power(const Ideal<F>& I, unsigned n);

// I ∩ J through t·I + (1 - t)·J ∩ k[vars].
template <class F>
Ideal<F> intersect(const Ideal<F>& I, const Ideal<F>& J);

// I : (f). Homogeneous I and a variable f use the reverse-lex trick; otherwise
// (I ∩ (f)) / f.
template <class F>
Ideal<F> quotient(const Ideal<F>& I, const Polynomial<F>& f);

// I : J as the intersection of the colons by the generators of J.
template <class F>
Ideal<F> quotient(const Ideal<F>& I, const Ideal<F>& J);

// I : f^∞. Variables on homogeneous ideals go through the reverse-lex trick, a
// monomial one variable at a time, anything else through I + (1 - t·f).
template <class F>
Ideal<F> saturate(const Ideal<F>& I, const Polynomial<F>& f);

// I : J^∞ by round-robin saturation with each generator of J until nothing
// changes; throws after max_rounds without stabilizing.
template <class F>
Ideal<F> saturate(const Ideal<F>& I, const Ideal<F>& J, int max_rounds = 50);

// Reduced GBs compared under grevlex.
template <class F>
bool equals(const Ideal<F>& I, const Ideal<F>& J);

// f ∈ √I, decided by 1 ∈ I + (1 - w·f).
template <class F>
bool radical_membership(const Polynomial<F>& f, const Ideal<F>& I);

inline constexpr int kDimensionOfUnitIdeal = -1;

// dim R/I from the leading monomials of a grevlex GB: the largest set of
// variables containing the support of no leading monomial.
template <class F>
int krull_dimension(const Ideal<F>& I);

// Monic gcd via (f) ∩ (g) = (lcm) and f·g = lcm·gcd.
template <class F>
Polynomial<F> gcd_poly(const Polynomial<F>& f, const Polynomial<F>& g, const GbOptions& opts = {});

} // namespace corelab
