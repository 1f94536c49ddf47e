#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

#include "corelab/monomial_ideal.hpp"

namespace corelab {

class UnsupportedDimension : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Supporting inequality a·v >= b with a >= 0.
struct Halfspace {
    std::vector<std::int64_t> a;
    std::int64_t b;

    bool operator==(const Halfspace&) const = default;
};

// conv(points) + nonnegative orthant.
class NewtonPolyhedron {
public:
    explicit NewtonPolyhedron(const MonomialIdeal& I);

    int dim() const { return d_; }
    const std::vector<Exponent>& points() const { return points_; }

    // Exact LP feasibility of sum λ_i p_i <= v, sum λ_i = 1, λ >= 0.
    bool contains(const std::vector<mpq_class>& v) const;
    bool contains(const Exponent& v) const;

    // Strict inequality on every supporting hyperplane; needs d <= 4.
    bool interior(const Exponent& v) const;

    // Supporting hyperplanes spanned by points and coordinate directions
    // (a superset of the facets); empty when d > kMaxInteriorDim.
    const std::vector<Halfspace>& hyperplanes() const { return planes_; }

    static constexpr int kMaxInteriorDim = 4;

private:
    int d_;
    std::vector<Exponent> points_; // minimal generators (vertices are among them)
    std::vector<Halfspace> planes_; // filled when d <= kMaxInteriorDim
};

// Monomials x^v with v + (1,...,1) in the interior of NP(I).
MonomialIdeal howald_adjoint(const MonomialIdeal& I);

} // namespace corelab
