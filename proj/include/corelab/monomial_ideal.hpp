#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "corelab/ideal.hpp"

namespace corelab {

using Exponent = std::vector<int>;

// Monomial ideal in k[x1..xd] stored as its minimal generators, sorted
// descending in lex so that equal ideals compare equal.
class MonomialIdeal {
public:
    explicit MonomialIdeal(int d) : d_(d) {}
    MonomialIdeal(int d, std::vector<Exponent> gens);

    static MonomialIdeal unit(int d);
    // m^k
    static MonomialIdeal maximal_power(int d, int k);
    static MonomialIdeal principal(Exponent e);

    int nvars() const { return d_; }
    const std::vector<Exponent>& gens() const { return gens_; }
    std::size_t size() const { return gens_.size(); }
    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const;
    // All minimal generators share one degree.
    bool one_degree() const;
    int min_degree() const;
    int max_degree() const;

    bool contains(const Exponent& e) const;
    bool contains(const MonomialIdeal& J) const;
    bool operator==(const MonomialIdeal& o) const { return d_ == o.d_ && gens_ == o.gens_; }

    MonomialIdeal operator+(const MonomialIdeal& o) const;
    MonomialIdeal operator*(const MonomialIdeal& o) const;
    MonomialIdeal power(int n) const;
    // Pairwise lcm.
    MonomialIdeal intersect(const MonomialIdeal& o) const;
    // I : x^e by truncated subtraction.
    MonomialIdeal quotient(const Exponent& e) const;
    MonomialIdeal quotient(const MonomialIdeal& o) const;
    MonomialIdeal saturate(const Exponent& e) const;

    // Generators in the X block of `ring` (which must have d X-variables).
    template <class F>
    Ideal<F> to_ideal(const RingPtr<F>& ring, GbOptions opts = {}) const;

    // Reads back an ideal whose reduced GB consists of monomials in the X
    // block; returns nullopt otherwise.
    template <class F>
    static std::optional<MonomialIdeal> from_ideal(const Ideal<F>& I);

    // `x1^2*x2, x3` style
    std::string to_string() const;
    // `mi{d:3, gens:[[3,0,0],[2,1,0]]}`
    std::string to_mi() const;
    static MonomialIdeal parse_mi(std::string_view text);

private:
    int d_;
    std::vector<Exponent> gens_;
};

MonomialIdeal minimalize(int d, std::vector<Exponent> gens);

bool divides(const Exponent& a, const Exponent& b);
Exponent lcm(const Exponent& a, const Exponent& b);
int degree(const Exponent& e);
std::string exponent_to_string(const Exponent& e);

// All exponent vectors of degree `delta` in d variables, descending in lex.
std::vector<Exponent> monomials_of_degree(int d, int delta);

// First k degree-delta monomials in lex with x1 > ... > xd.
MonomialIdeal lex_segment(int d, int delta, int k);
// Shortest lex segment of height g; throws if g > d.
MonomialIdeal lex_segment_of_height(int d, int delta, int g);

bool is_strongly_stable(const MonomialIdeal& I);

struct HeightSpread {
    int height;
    std::optional<int> spread;
};

// Height = max over generators of the smallest variable index in the
// support; analytic spread = max of the largest index (one-degree only).
HeightSpread ss_height_and_spread(const MonomialIdeal& I, bool one_degree);

// Minimum number of variables meeting every generator's support.
int height_via_face_primes(const MonomialIdeal& I);

// Sets x_j := 1 for j outside `face` (0-based indices) and minimalizes; the
// result keeps d coordinates, zero outside the face.
MonomialIdeal localize_at_face(const MonomialIdeal& I, const std::vector<int>& face);

struct GsCheck {
    bool holds = true;
    std::vector<int> witness; // failing face, 0-based
    std::size_t witness_generators = 0;
};

// G_s over face primes: every face S with |S| <= s-1 containing I has a
// localization with at most |S| minimal generators.
GsCheck check_Gs(const MonomialIdeal& I, int s);

// Analytic spread of a one-degree monomial ideal: rank of its exponent matrix.
int analytic_spread_one_degree(const MonomialIdeal& I);

MonomialIdeal scale_by_power_of_m(const MonomialIdeal& I, int k);

} // namespace corelab
