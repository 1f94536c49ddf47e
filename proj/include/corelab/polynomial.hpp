#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "corelab/ring.hpp"

namespace corelab {

// Sparse polynomial: terms sorted strictly descending in the ring's order,
// no zero coefficients. The zero polynomial has no terms.
template <class F>
class Polynomial {
public:
    using Coeff = typename F::Element;

    struct Term {
        Coeff coeff;
        Monomial mono;
    };

    explicit Polynomial(RingPtr<F> ring) : ring_(std::move(ring)) {}
    // Accepts terms in any order; sorts, merges duplicates and drops zeros.
    Polynomial(RingPtr<F> ring, std::vector<Term> terms);

    static Polynomial constant(RingPtr<F> ring, const Coeff& c);
    static Polynomial term(RingPtr<F> ring, const Monomial& m, const Coeff& c);
    static Polynomial term(RingPtr<F> ring, const Monomial& m);
    static Polynomial variable(RingPtr<F> ring, int v);
    // Trusts the caller: terms already strictly descending with nonzero
    // coefficients.
    static Polynomial from_sorted(RingPtr<F> ring, std::vector<Term> terms);

    const RingPtr<F>& ring() const { return ring_; }
    const F& field() const { return ring_->field(); }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
    bool is_monomial() const { return terms_.size() == 1; }

    const Term& lead() const { return terms_.front(); }
    const Monomial& lead_monomial() const { return terms_.front().mono; }
    const Coeff& lead_coeff() const { return terms_.front().coeff; }

    // Total degree; -1 for the zero polynomial.
    int degree() const;
    // Degree in one variable.
    unsigned degree_in(int v) const;
    bool is_homogeneous() const;
    // True if no term involves a variable of block b.
    bool free_of(Block b) const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial scale(const Coeff& c) const;
    Polynomial mul_term(const Coeff& c, const Monomial& m) const;
    Polynomial pow(unsigned n) const;
    Polynomial monic() const;

    // this - c*m*g, computed by one merge pass.
    Polynomial sub_mul(const Coeff& c, const Monomial& m, const Polynomial& g) const;

    // Re-sorts the terms for a ring with the same variables (e.g. another order).
    Polynomial in_ring(const RingPtr<F>& target) const;
    // Moves the polynomial into `target`, sending variable i to mapping[i];
    // a negative entry means the variable must not occur.
    Polynomial map_variables(const RingPtr<F>& target, std::span<const int> mapping) const;

    // Exact quotient this / g when g divides this.
    std::optional<Polynomial> divide_exact(const Polynomial& g) const;

    bool operator==(const Polynomial& o) const;

    // Sorted, duplicate-free, nonzero coefficients.
    bool check_invariants() const;

    std::string to_string() const;

private:
    void require_same_ring(const Polynomial& o) const;

    RingPtr<F> ring_;
    std::vector<Term> terms_;
};

// Multihomogenization g(x/y) * prod y_i^{deg_{x_i} g}; the ring must carry a Y
// block and f must not involve Y.
template <class F>
Polynomial<F> multihomogenize(const Polynomial<F>& f);

// Degrees deg_{x_i}(f) for each X variable.
template <class F>
std::vector<unsigned> x_multidegree(const Polynomial<F>& f);

// Substitutes z_j := values[j]; the result lives in the ring with the Z block
// removed (X, Y and T unchanged).
template <class F>
Polynomial<F> specialize_z(const Polynomial<F>& f, std::span<const typename F::Element> values);

// Substitutes the given values for every variable of block b and drops that
// block from the ring.
template <class F>
Polynomial<F> specialize_block(const Polynomial<F>& f, Block b, std::span<const typename F::Element> values);

// Value of f at a full point (one entry per ring variable).
template <class F>
typename F::Element evaluate(const Polynomial<F>& f, std::span<const typename F::Element> point);

} // namespace corelab
