#pragma once

// Random monomial ideals shared by the unit tests and the acceptance run.
#include <random>
#include <vector>

#include "corelab/monomial_ideal.hpp"

namespace testgen {

using corelab::Exponent;
using corelab::MonomialIdeal;

inline MonomialIdeal random_monomial_ideal(std::mt19937_64& rng, int d, int maxdeg, int maxgens)
{
    std::uniform_int_distribution<int> ng(1, maxgens);
    std::vector<Exponent> gens;
    for (int i = ng(rng); i > 0; --i) {
        Exponent x(d, 0);
        int budget = std::uniform_int_distribution<int>(1, maxdeg)(rng);
        for (int k = 0; k < budget; ++k) {
            ++x[std::uniform_int_distribution<int>(0, d - 1)(rng)];
        }
        gens.push_back(x);
    }
    return MonomialIdeal(d, gens);
}

inline MonomialIdeal random_strongly_stable(std::mt19937_64& rng, int d, int maxdeg)
{
    std::uniform_int_distribution<int> deg(1, maxdeg), ng(1, 3);
    std::vector<Exponent> gens;
    for (int i = ng(rng); i > 0; --i) {
        Exponent e(d, 0);
        for (int k = deg(rng); k > 0; --k) {
            ++e[std::uniform_int_distribution<int>(0, d - 1)(rng)];
        }
        gens.push_back(e);
    }
    // Borel closure: repeatedly add x_i u / x_j for i < j.
    bool grown = true;
    while (grown) {
        grown = false;
        MonomialIdeal cur(d, gens);
        for (const auto& u : cur.gens()) {
            for (int j = 0; j < d; ++j) {
                for (int i = 0; i < j && u[j] > 0; ++i) {
                    Exponent w = u;
                    --w[j];
                    ++w[i];
                    if (!cur.contains(w)) {
                        gens.push_back(w);
                        grown = true;
                    }
                }
            }
        }
    }
    return MonomialIdeal(d, gens);
}

// Each degree-delta monomial kept with probability 1/3 (at least one).
inline MonomialIdeal random_one_degree(std::mt19937_64& rng, int d, int delta)
{
    auto all = corelab::monomials_of_degree(d, delta);
    std::vector<Exponent> g;
    for (const auto& e : all) {
        if (std::uniform_int_distribution<int>(0, 2)(rng) == 0) {
            g.push_back(e);
        }
    }
    if (g.empty()) {
        g.push_back(all.front());
    }
    return MonomialIdeal(d, g);
}

} // namespace testgen
