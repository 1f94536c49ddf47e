#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <vector>

#include "corelab/polynomial.hpp"

namespace corelab {

// Raised when a computation hits its resource cap. Callers report it; it never
// stands in for a mathematical answer.
class BudgetExhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct GbBudget {
    std::uint64_t max_spairs = 2'000'000;
    unsigned max_degree = 80;
    // Wall-clock cap in seconds; 0 disables it.
    double max_seconds = 0;
};

struct GbOptions {
    GbBudget budget;
    // For homogeneous input: only S-pairs with lcm degree <= this are
    // processed, giving a basis that is correct up to that degree.
    std::optional<unsigned> truncate_degree;
    // One line per S-pair: lcm degree, sugar, and whether it reduced to zero.
    std::ostream* trace = nullptr;
};

struct GbStats {
    std::uint64_t spairs = 0;
    std::uint64_t zero_reductions = 0;
    std::uint64_t pairs_pruned = 0;
    std::uint64_t reduction_steps = 0;
};

template <class F>
struct GroebnerBasis {
    RingPtr<F> ring;
    std::vector<Polynomial<F>> elements; // monic, ascending by leading term
    bool reduced = false;
    bool truncated = false; // only valid up to truncate_degree
    GbStats stats;

    bool is_unit() const { return elements.size() == 1 && elements.front().is_constant(); }
};

// Full reduction of f by G: repeatedly cancels the largest reducible term using
// the first element of G whose leading monomial divides it.
template <class F>
Polynomial<F> normal_form(const Polynomial<F>& f, std::span<const Polynomial<F>> G, GbStats* stats = nullptr);

template <class F>
Polynomial<F> normal_form(const Polynomial<F>& f, const GroebnerBasis<F>& G)
{
    return normal_form<F>(f, std::span<const Polynomial<F>>(G.elements));
}

// Reduced Gröbner basis of (gens) under the ring order of gens (or of `ring`
// when gens is empty).
template <class F>
GroebnerBasis<F> buchberger(const RingPtr<F>& ring, std::span<const Polynomial<F>> gens, const GbOptions& opts = {});

// Same, after moving gens into ring->with_order(order).
template <class F>
GroebnerBasis<F> buchberger(const RingPtr<F>& ring, std::span<const Polynomial<F>> gens, const MonomialOrder& order,
                            const GbOptions& opts = {});

template <class F>
bool ideal_membership(const Polynomial<F>& f, const GroebnerBasis<F>& G);

// Generators of (gens) ∩ k[variables outside `drop`], computed under the block
// order with the dropped blocks first. Results stay in the input ring.
template <class F>
std::vector<Polynomial<F>> eliminate(const RingPtr<F>& ring, std::span<const Polynomial<F>> gens,
                                     const std::vector<Block>& drop, const GbOptions& opts = {});

// Buchberger's criterion: every S-polynomial of G reduces to zero.
template <class F>
bool all_spairs_reduce_to_zero(const GroebnerBasis<F>& G);

// Reducedness: monic, and no term of an element divisible by another's
// leading monomial.
template <class F>
bool is_reduced(const GroebnerBasis<F>& G);

template <class F>
Polynomial<F> s_polynomial(const Polynomial<F>& f, const Polynomial<F>& g);

} // namespace corelab
