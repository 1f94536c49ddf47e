#include <doctest.h>

#include <random>

#include "corelab/lp.hpp"
#include "corelab/monomial_ideal.hpp"
#include "corelab/newton.hpp"
#include "corelab/text_io.hpp"

#include "random_ideals.hpp"

using namespace corelab;
using testgen::random_strongly_stable;

namespace {

MonomialIdeal ex49()
{
    return MonomialIdeal(3, {{3, 0, 0}, {2, 1, 0}, {1, 0, 2}, {0, 0, 3}});
}

MonomialIdeal ex410()
{
    return MonomialIdeal(6, {{1, 1, 0, 0, 0, 0},
                             {0, 1, 1, 0, 0, 0},
                             {0, 0, 1, 1, 0, 0},
                             {1, 0, 0, 1, 0, 0},
                             {0, 0, 0, 1, 1, 0},
                             {0, 0, 0, 0, 1, 1}});
}

// Closure of a random set under the strongly stable exchange.
// Interior oracle: maximize ε with sum λ p + ε·1 <= v, sum λ = 1.
bool interior_by_lp(const MonomialIdeal& I, const Exponent& v)
{
    const int d = I.nvars();
    const int m = static_cast<int>(I.size());
    // columns: λ (m), ε, slacks (d)
    std::vector<std::vector<mpq_class>> A(d + 1, std::vector<mpq_class>(m + 1 + d));
    std::vector<mpq_class> b(d + 1);
    for (int k = 0; k < d; ++k) {
        for (int i = 0; i < m; ++i) {
            A[k][i] = I.gens()[i][k];
        }
        A[k][m] = 1;
        A[k][m + 1 + k] = 1;
        b[k] = v[k];
    }
    for (int i = 0; i < m; ++i) {
        A[d][i] = 1;
    }
    b[d] = 1;
    std::vector<mpq_class> c(m + 1 + d, 0);
    c[m] = 1;
    auto res = solve_lp(A, b, c);
    return res.status == LpStatus::Optimal && res.value > 0;
}

} // namespace

TEST_CASE("minimalize")
{
    CHECK(MonomialIdeal(1, {{1}, {2}}).gens() == std::vector<Exponent>{{1}});
    CHECK(MonomialIdeal(3, {{1, 1, 0}, {0, 1, 1}, {1, 1, 1}}) == MonomialIdeal(3, {{1, 1, 0}, {0, 1, 1}}));
    std::mt19937_64 rng(1);
    for (int t = 0; t < 200; ++t) {
        std::vector<Exponent> g;
        for (int i = 0; i < 6; ++i) {
            Exponent e(3);
            for (auto& x : e) {
                x = std::uniform_int_distribution<int>(0, 3)(rng);
            }
            g.push_back(e);
        }
        // pairwise-filter oracle
        std::vector<Exponent> keep;
        for (std::size_t i = 0; i < g.size(); ++i) {
            bool red = false;
            for (std::size_t j = 0; j < g.size(); ++j) {
                if (j != i && divides(g[j], g[i]) && (g[j] != g[i] || j < i)) {
                    red = true;
                }
            }
            if (!red) {
                keep.push_back(g[i]);
            }
        }
        std::sort(keep.begin(), keep.end(), std::greater<>());
        CHECK(MonomialIdeal(3, g).gens() == keep);
    }
}

TEST_CASE("fast path arithmetic")
{
    MonomialIdeal A(2, {{2, 0}, {0, 1}}), B(2, {{1, 0}, {0, 2}});
    CHECK(A.intersect(B) == MonomialIdeal(2, {{2, 0}, {1, 1}, {0, 2}}));
    CHECK(MonomialIdeal(3, {{1, 1, 1}}).quotient(Exponent{0, 1, 0}) == MonomialIdeal(3, {{1, 0, 1}}));
    CHECK(ex49().power(2).size() == 10);
}

TEST_CASE("lex segments")
{
    CHECK(lex_segment(2, 2, 3) == MonomialIdeal::maximal_power(2, 2));
    auto L = lex_segment(3, 2, 4);
    CHECK(L == MonomialIdeal(3, {{2, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 2, 0}}));
    CHECK(lex_segment_of_height(3, 2, 2) == L);
    CHECK_THROWS(lex_segment_of_height(3, 2, 4));
    CHECK_THROWS(lex_segment(3, 2, 7));
}

TEST_CASE("strong stability and the height/spread formulas")
{
    CHECK(is_strongly_stable(MonomialIdeal::maximal_power(2, 2)));
    CHECK_FALSE(is_strongly_stable(ex49()));
    for (int d = 1; d <= 4; ++d) {
        for (int delta = 1; delta <= 3; ++delta) {
            auto m = MonomialIdeal::maximal_power(d, delta);
            CHECK(is_strongly_stable(m));
            auto hs = ss_height_and_spread(m, true);
            CHECK(hs.height == d);
            CHECK(hs.spread == d);
        }
    }
    auto hs = ss_height_and_spread(lex_segment(3, 2, 4), true);
    CHECK(hs.height == 2);
    CHECK(hs.spread == 3);
    CHECK_THROWS(ss_height_and_spread(ex49(), false));
    CHECK_THROWS(ss_height_and_spread(MonomialIdeal(2, {{1, 0}, {0, 3}}), true));

    // lex segments of height >= 2 in degree >= 2 have spread d
    for (int d = 2; d <= 4; ++d) {
        for (int delta = 2; delta <= 4; ++delta) {
            int total = static_cast<int>(monomials_of_degree(d, delta).size());
            for (int k = 1; k <= total; ++k) {
                auto L = lex_segment(d, delta, k);
                auto s = ss_height_and_spread(L, true);
                if (s.height >= 2) {
                    CHECK(s.spread == d);
                    CHECK(analytic_spread_one_degree(L) == d);
                    CHECK(static_cast<int>(L.size()) >= d + 1);
                }
                CHECK(analytic_spread_one_degree(L) == *s.spread);
            }
        }
    }
}

TEST_CASE("height via face primes")
{
    CHECK(height_via_face_primes(ex410()) == 3);
    CHECK(height_via_face_primes(ex49()) == 2);
    std::mt19937_64 rng(6);
    for (int t = 0; t < 100; ++t) {
        auto I = random_strongly_stable(rng, 4, 3);
        if (I.is_unit()) {
            continue;
        }
        CHECK(height_via_face_primes(I) == ss_height_and_spread(I, false).height);
    }
}

TEST_CASE("localization at faces")
{
    CHECK(localize_at_face(MonomialIdeal(2, {{1, 1}}), {0}) == MonomialIdeal(2, {{1, 0}}));
    CHECK(localize_at_face(ex49(), {0, 2}) == MonomialIdeal(3, {{2, 0, 0}, {1, 0, 2}, {0, 0, 3}}));
    CHECK(localize_at_face(ex49(), {0, 1, 2}) == ex49());
}

TEST_CASE("G_s over face primes")
{
    auto g = check_Gs(ex49(), 3);
    CHECK_FALSE(g.holds);
    CHECK(g.witness == std::vector<int>{0, 2});
    CHECK(g.witness_generators == 3);
    for (int s = 1; s <= 10; ++s) {
        CHECK(check_Gs(ex410(), s).holds);
        CHECK(check_Gs(MonomialIdeal(3, {{1, 2, 0}}), s).holds);
    }
    std::mt19937_64 rng(8);
    for (int t = 0; t < 50; ++t) {
        auto I = random_strongly_stable(rng, 4, 3);
        for (int s = 1; s < 6; ++s) {
            if (check_Gs(I, s + 1).holds) {
                CHECK(check_Gs(I, s).holds);
            }
        }
    }
}

TEST_CASE("Newton polyhedron membership and interior")
{
    NewtonPolyhedron np(MonomialIdeal(2, {{2, 0}, {0, 2}}));
    CHECK(np.contains(Exponent{1, 1}));
    CHECK_FALSE(np.contains(Exponent{1, 0}));
    CHECK(np.contains(std::vector<mpq_class>{mpq_class(3, 2), mpq_class(1, 2)}));
    CHECK_FALSE(np.interior(Exponent{1, 1}));
    CHECK(np.interior(Exponent{2, 1}));

    std::mt19937_64 rng(10);
    for (int t = 0; t < 60; ++t) {
        int d = 2 + t % 3;
        std::vector<Exponent> gens;
        for (int i = 0; i < 4; ++i) {
            Exponent e(d);
            for (auto& x : e) {
                x = std::uniform_int_distribution<int>(0, 4)(rng);
            }
            gens.push_back(e);
        }
        MonomialIdeal I(d, gens);
        NewtonPolyhedron P(I);
        for (int k = 0; k < 20; ++k) {
            Exponent v(d);
            for (auto& x : v) {
                x = std::uniform_int_distribution<int>(0, 5)(rng);
            }
            CHECK(P.interior(v) == interior_by_lp(I, v));
            if (P.contains(v)) {
                Exponent w = v;
                ++w[k % d];
                CHECK(P.contains(w));
            }
        }
    }
    CHECK_THROWS_AS(NewtonPolyhedron(ex410()).interior(Exponent(6, 1)), UnsupportedDimension);
}

TEST_CASE("Howald adjoint")
{
    for (int d = 1; d <= 4; ++d) {
        for (int s = 1; s <= 6; ++s) {
            auto adj = howald_adjoint(MonomialIdeal::maximal_power(d, s));
            CHECK(adj == MonomialIdeal::maximal_power(d, std::max(0, s - d + 1)));
        }
    }
    CHECK(howald_adjoint(MonomialIdeal(2, {{1, 0}})) == MonomialIdeal(2, {{1, 0}}));
    CHECK(howald_adjoint(MonomialIdeal(2, {{0, 0}})).is_unit());
    std::mt19937_64 rng(14);
    for (int t = 0; t < 30; ++t) {
        std::vector<Exponent> g;
        for (int i = 0; i < 3; ++i) {
            Exponent e(3);
            for (auto& x : e) {
                x = std::uniform_int_distribution<int>(0, 3)(rng);
            }
            g.push_back(e);
        }
        MonomialIdeal I(3, g);
        MonomialIdeal J = I + MonomialIdeal(3, {{0, 2, 1}});
        CHECK(howald_adjoint(J).contains(howald_adjoint(I)));
    }
}

TEST_CASE("scale by powers of m")
{
    auto L = MonomialIdeal::maximal_power(2, 2);
    CHECK(scale_by_power_of_m(L, 0) == L);
    CHECK(scale_by_power_of_m(L, 1) == MonomialIdeal::maximal_power(2, 3));
    auto A = MonomialIdeal(3, {{2, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {0, 0, 2}}) * ex49();
    auto B = MonomialIdeal(3, {{2, 3, 0}, {1, 2, 2}, {0, 2, 3}});
    CHECK(scale_by_power_of_m(ex49(), 2) == A + B);
}

TEST_CASE("mi syntax round trip")
{
    auto I = MonomialIdeal::parse_mi("mi{d:3, gens:[[3,0,0],[2,1,0],[1,0,2],[0,0,3]]}");
    CHECK(I == ex49());
    CHECK(MonomialIdeal::parse_mi(I.to_mi()) == I);
    CHECK_THROWS_AS(MonomialIdeal::parse_mi("mi{d:2, gens:[[1,0,0]]}"), ParseError);
    CHECK_THROWS_AS(MonomialIdeal::parse_mi("ideal(x1)"), ParseError);
}
