#include <doctest.h>

#include <random>

#include "corelab/core.hpp"
#include "corelab/text_io.hpp"

#include "random_ideals.hpp"

using namespace corelab;
using testgen::random_one_degree;

namespace {

const PrimeField k;

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

MonomialIdeal m(int d, int e = 1)
{
    return MonomialIdeal::maximal_power(d, e);
}

MonomialIdeal frak_A()
{
    return MonomialIdeal(3, {{2, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {0, 0, 2}}) * ex49();
}

std::vector<PPoly> parse_list(const PRing& r, const char* s)
{
    return parse_polynomial_list(r, s);
}

// Monomial membership in K by normal forms, degree by degree.
void check_mono_by_membership(const PIdeal& K, const MonomialIdeal& M, int max_degree)
{
    const int d = M.nvars();
    for (int D = 0; D <= max_degree; ++D) {
        for (const auto& e : monomials_of_degree(d, D)) {
            Monomial mono(e);
            CHECK(M.contains(e) == K.contains(PPoly::term(K.ring(), mono)));
        }
    }
}

} // namespace

TEST_CASE("generic reductions")
{
    auto G = build_generic(m(2), 2, false, k);
    REQUIRE(G.gens.size() == 2);
    CHECK(G.gens[0] == parse_polynomial(G.ring, "z1*x1 + z2*x2"));
    CHECK(G.gens[1] == parse_polynomial(G.ring, "z3*x1 + z4*x2"));
    auto G9 = build_generic(ex49(), 3, false, k);
    CHECK(G9.nz() == 12);
    for (const auto& g : G9.gens) {
        CHECK(g.is_homogeneous());
        CHECK(g.degree() == 4);
    }
    CHECK(build_generic(ex410(), 5, false, k).nz() == 30);
    auto Gt = build_generic(MonomialIdeal(2, {{2, 0}, {0, 3}}), 2, true, k);
    REQUIRE(Gt.tail);
    CHECK(*Gt.tail == Exponent{2, 0});
    CHECK(Gt.tail_power == 2);
    CHECK_THROWS(build_generic(MonomialIdeal(2), 1, false, k));
}

TEST_CASE("reduction certificates")
{
    auto x = make_ring(k, 3);
    auto I = ex49();
    CHECK(reduction_number(I, I.to_ideal(x).generators(), 5) == 0);
    auto H = parse_list(x, "x1^3, x1^2*x2, x1*x3^2 + x3^3");
    CHECK(reduction_number(I, H, 14) == 2);
    // minimality: I^2 != H I
    PIdeal HI = product(PIdeal(x, H), I.to_ideal(x));
    CHECK_FALSE(HI.contains(I.power(2).to_ideal(x)));
    CHECK(PIdeal(x, product(PIdeal(x, H), I.power(2).to_ideal(x)).generators()).contains(I.power(3).to_ideal(x)));
    // a non-reduction
    CHECK_FALSE(reduction_number(I, parse_list(x, "x1^3, x1^2*x2, x1*x3^2"), 8));

    // agreement with the GB route on small random instances
    std::mt19937_64 rng(3);
    for (int t = 0; t < 30; ++t) {
        auto L = random_one_degree(rng, 3, 2);
        auto G = build_generic(L, 3, false, k);
        std::vector<PrimeField::Element> lambda(G.nz());
        for (auto& v : lambda) {
            v = std::uniform_int_distribution<int>(0, 2)(rng);
        }
        auto K = specialize(G, x, lambda);
        auto r = reduction_number(L, K, 3);
        for (int q = 0; q <= 3; ++q) {
            bool eq = K.empty() ? false
                                : product(PIdeal(x, K), L.power(q).to_ideal(x)).contains(L.power(q + 1).to_ideal(x));
            if (r && q == *r) {
                CHECK(eq);
            }
            if (!r || q < *r) {
                CHECK_FALSE(eq);
            }
        }
    }
}

TEST_CASE("sampled reductions verify for most seeds")
{
    auto L = lex_segment(3, 2, 4);
    auto x = make_ring(k, 3);
    auto G = build_generic(L, 3, false, k);
    PipelineConfig cfg;
    cfg.retries = 1;
    int ok = 0;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        try {
            auto c = sample_reduction(G, x, seed, cfg);
            ok += c.verified;
        } catch (const SamplingFailed&) {
        }
    }
    CHECK(ok >= 9);
    // two elements cannot reduce an ideal of analytic spread 3
    auto G2 = build_generic(L, 2, false, k);
    CHECK_THROWS_AS(sample_reduction(G2, x, 1, cfg), SamplingFailed);
    // determinism
    cfg.retries = 8;
    CHECK(sample_reduction(G, x, 5, cfg).lambda == sample_reduction(G, x, 5, cfg).lambda);
}

TEST_CASE("mono of an ideal")
{
    auto x2 = make_ring(k, 2);
    auto K = PIdeal(x2, parse_list(x2, "x1 + x2"));
    auto M = mono_of(K);
    CHECK(M.is_zero());
    check_mono_by_membership(K, M, 4);

    auto K2 = PIdeal(x2, parse_list(x2, "x1^2 + x1*x2, x2^3"));
    auto M2 = mono_of(K2);
    check_mono_by_membership(K2, M2, 6);

    auto x = make_ring(k, 3);
    CHECK(mono_of(ex49().to_ideal(x)) == ex49());
    std::mt19937_64 rng(17);
    for (int t = 0; t < 15; ++t) {
        std::vector<PPoly> gens;
        for (int i = 0; i < 2; ++i) {
            PPoly g(x);
            for (const auto& e : monomials_of_degree(3, 2)) {
                if (std::uniform_int_distribution<int>(0, 2)(rng) == 0) {
                    g = g + PPoly::term(x, Monomial(e), std::uniform_int_distribution<std::uint32_t>(1, 100)(rng));
                }
            }
            gens.push_back(g);
        }
        PIdeal Kr(x, gens);
        check_mono_by_membership(Kr, mono_of(Kr), 5);
    }
}

TEST_CASE("mono of a general reduction of the non-G_3 example")
{
    auto x = make_ring(k, 3);
    auto G = build_generic(ex49(), 3, false, k);
    PipelineConfig cfg;
    auto H = PIdeal(x, parse_list(x, "x1^3, x1^2*x2, x1*x3^2 + x3^3"));
    auto Im2 = ex49() * m(3, 2);
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        auto c = sample_reduction(G, x, seed, cfg);
        CHECK(mono_of(PIdeal(x, c.gens)) == Im2);
    }
    CHECK_FALSE(H.contains(Im2.to_ideal(x)));
}

TEST_CASE("mono of a general minimal reduction of the six-cycle-like ideal")
{
    auto x = make_ring(k, 6);
    auto G = build_generic(ex410(), 5, false, k);
    PipelineConfig cfg;
    auto c = sample_reduction(G, x, 1, cfg);
    CHECK(mono_of(PIdeal(x, c.gens)) == ex410() * m(6));
}

TEST_CASE("symbolic mono and content on a small instance")
{
    auto G = build_generic(m(2, 2), 2, false, k);
    PipelineConfig cfg;
    auto full = mono_symbolic(G, cfg);
    auto fb = mono_symbolic(G, cfg, true);
    CHECK_FALSE(full.used_fallback);
    CHECK(fb.used_fallback);
    CHECK(full.content_principal);
    CHECK_FALSE(full.degenerate);
    CHECK(full.h == fb.h);
    for (std::size_t i = 0; i < full.v.size(); ++i) {
        for (const auto& c : full.C[i].generators()) {
            CHECK(c.divide_exact(full.h));
        }
        auto it = std::find(fb.v.begin(), fb.v.end(), full.v[i]);
        if (it != fb.v.end()) {
            CHECK(equals(full.C[i], fb.C[it - fb.v.begin()]));
        }
    }
    // every coefficient ideal has radical (h): nothing outside N
    CHECK_FALSE(full.D);
    CHECK(full.N_ideal(2) == m(2, 3));

    // the locus h = 0 is where pi_lambda(J) stops being a reduction
    auto x = make_ring(k, 2);
    std::mt19937_64 rng(4);
    for (int t = 0; t < 10; ++t) {
        std::vector<PrimeField::Element> l(G.nz());
        for (auto& v : l) {
            v = std::uniform_int_distribution<std::uint32_t>(0, 6)(rng);
        }
        bool red = certify(G.base, specialize(G, x, l), 11).verified;
        CHECK(red == (evaluate(full.h, std::span<const PrimeField::Element>(l)) != 0));
    }
}

TEST_CASE("symbolic mono of the graded-core example via the fallback")
{
    auto G = build_generic(ex49(), 3, false, k);
    PipelineConfig cfg;
    auto M = mono_symbolic(G, cfg, true);
    CHECK(M.used_fallback);
    CHECK(M.content_principal);
    CHECK_FALSE(M.degenerate);
    CHECK(M.M_ideal(3) == ex49() * m(3, 2));
    CHECK(M.N_ideal(3) == frak_A());
    REQUIRE(M.D);
    REQUIRE(M.D->groebner().elements.size() == 1);
    auto g = M.D->groebner().elements.front().divide_exact(M.h);
    REQUIRE(g);
    auto printed = parse_polynomial(M.zring, "z4*z7*z10 - z3*z8*z10 - z4*z6*z11 + z2*z8*z11 + z3*z6*z12 - z2*z7*z12");
    CHECK(g->monic() == printed.monic());

    CHECK(M.h.degree() == 9);
    CHECK(fiber_locus_crosscheck(G, cfg) == M.h.monic());

    std::vector<std::string> diag;
    auto special = sample_special_lambda(G, M, 64, 7, &diag);
    REQUIRE_FALSE(special.empty());
    auto x = make_ring(k, 3);
    auto digest_of = [&](const std::vector<PrimeField::Element>& l) { return digest(PIdeal(x, specialize(G, x, l))); };
    std::vector<std::uint64_t> seen;
    for (const auto& l : special) {
        seen.push_back(digest_of(l));
        CHECK(evaluate(*g, std::span<const PrimeField::Element>(l)) == 0);
        CHECK(evaluate(M.h, std::span<const PrimeField::Element>(l)) != 0);
    }
    std::vector<PrimeField::Element> l0{1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 1};
    std::vector<PrimeField::Element> l1{1, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 1};
    CHECK(std::count(seen.begin(), seen.end(), digest_of(l0)) == 1);
    CHECK(std::count(seen.begin(), seen.end(), digest_of(l1)) == 1);

    auto R = gradedcore_sandwich(G, M, special, cfg);
    CHECK(R.status == "closed");
    CHECK(R.candidate == frak_A());
    // the printed pair alone closes it too
    auto R2 = gradedcore_sandwich(G, M, {l0, l1}, cfg);
    CHECK(R2.status == "closed");
    CHECK(R2.candidate == frak_A());
}

TEST_CASE("special lambda edge cases")
{
    auto G = build_generic(m(2, 2), 2, false, k);
    PipelineConfig cfg;
    auto M = mono_symbolic(G, cfg);
    std::vector<std::string> diag;
    CHECK(sample_special_lambda(G, M, 4, 1, &diag).empty());
    CHECK_FALSE(diag.empty());

    // synthetic D = (z1) with h = 1
    MonoDecomposition S = M;
    S.h = PPoly::constant(M.zring, 1);
    S.D = PIdeal(M.zring, {PPoly::variable(M.zring, 0)});
    auto found = sample_special_lambda(G, S, 3, 2);
    REQUIRE_FALSE(found.empty());
    for (const auto& l : found) {
        CHECK(l[0] == 0);
    }

    // the sandwich closes at once when every C_i has radical (h)
    auto R = gradedcore_sandwich(G, M, {}, cfg);
    CHECK(R.status == "closed");
    CHECK(R.candidate == m(2, 3));
}

TEST_CASE("core by stabilized intersection")
{
    PipelineConfig cfg;
    auto a = core_by_intersection(m(2, 2), cfg);
    CHECK(a.candidate == m(2, 3));
    CHECK(a.status == "ok");
    CHECK(a.seeds.size() >= 5);
    auto b = core_by_intersection(MonomialIdeal(2, {{2, 0}}), cfg);
    CHECK(b.candidate == MonomialIdeal(2, {{2, 0}}));
    auto c = core_by_intersection(ex49(), cfg);
    CHECK(c.candidate.contains(frak_A()));
    CHECK_FALSE(c.candidate == frak_A());
    CHECK(*c.Gd == false);
    CHECK(c.not_a_proof);
}

TEST_CASE("core via mono")
{
    PipelineConfig cfg;
    for (int d = 2; d <= 3; ++d) {
        for (int delta = 1; delta <= 3; ++delta) {
            auto r = core_via_mono(m(d, delta), cfg, true);
            CHECK(r.status == "ok");
            CHECK(r.candidate == scale_by_power_of_m(m(d, delta), (d - 1) * (delta - 1)));
        }
    }
    auto refused = core_via_mono(ex49(), cfg, std::nullopt);
    CHECK(refused.status == "refused");
    REQUIRE(refused.refusal);
    CHECK(refused.refusal->witness == std::vector<int>{0, 2});

    auto L = lex_segment(3, 2, 4);
    auto viamono = core_via_mono(L, cfg, true);
    CHECK(viamono.candidate == core_by_intersection(L, cfg).candidate);
    CHECK_FALSE(viamono.not_a_proof);

    auto j = viamono.to_json();
    CHECK(j["method"] == "mono-of-general");
    CHECK(j["reductions"].size() == 3);
    CHECK(MonomialIdeal::parse_mi(j["candidate"].get<std::string>()) == viamono.candidate);
}

TEST_CASE("colon power bound")
{
    auto x2 = make_ring(k, 2);
    auto J = parse_list(x2, "x1^2, x2^2");
    auto c0 = colon_power_bound(m(2, 2), J, 0, x2);
    CHECK(equals(c0, PIdeal(x2, J)));
    auto c1 = colon_power_bound(m(2, 2), J, 1, x2);
    CHECK(c1.contains(m(2, 3).to_ideal(x2)));

    // d = 3, delta = 3, i = 1: L = (x1) m^2 + (x2^3, x2^2 x3)
    auto x = make_ring(k, 3);
    auto L = scale_by_power_of_m(MonomialIdeal(3, {{1, 0, 0}}), 2) + MonomialIdeal(3, {{0, 3, 0}, {0, 2, 1}});
    CHECK(L == lex_segment_of_height(3, 3, 2) + MonomialIdeal(3, {{0, 2, 1}}));
    auto Jd = parse_list(x, "x1^3 - x2^2*x3, x2^3, x1*x3^2");
    CHECK(reduction_number(L, Jd, 14));
    auto bound = colon_power_bound(L, Jd, 2, x);
    CHECK_FALSE(bound.contains(parse_polynomial(x, "x1^5")));
}

TEST_CASE("fiber locus agrees with the content generator")
{
    PipelineConfig cfg;
    auto G = build_generic(m(2, 2), 2, false, k);
    auto M = mono_symbolic(G, cfg);
    auto hp = fiber_locus_crosscheck(G, cfg);
    CHECK(hp == M.h);

    auto x = make_ring(k, 2);
    std::mt19937_64 rng(21);
    int on_locus = 0;
    for (int t = 0; t < 20; ++t) {
        std::vector<PrimeField::Element> l(G.nz());
        for (auto& v : l) {
            v = std::uniform_int_distribution<std::uint32_t>(0, k.characteristic() - 1)(rng);
        }
        if (t % 2 == 1) {
            // a common zero (1 : a) of both quadratics puts lambda on h = 0;
            // solve the x1^2 coefficient of each row for it.
            auto a = l[0];
            for (int row = 0; row < 2; ++row) {
                auto* c = &l[3 * row];
                c[0] = k.neg(k.add(k.mul(c[1], a), k.mul(c[2], k.mul(a, a))));
            }
            REQUIRE(evaluate(hp, std::span<const PrimeField::Element>(l)) == 0);
            ++on_locus;
        }
        bool vanish = evaluate(hp, std::span<const PrimeField::Element>(l)) == 0;
        CHECK(certify(G.base, specialize(G, x, l), 11).verified == !vanish);
    }
    CHECK(on_locus > 0);
}

TEST_CASE("general mono is stable across seeds and sits below each reduction")
{
    PipelineConfig cfg;
    std::mt19937_64 rng(99);
    auto x = make_ring(k, 3);
    for (int t = 0; t < 6; ++t) {
        auto I = random_one_degree(rng, 3, 2 + t % 2);
        auto G = build_generic(I, 3, false, k);
        std::vector<MonomialIdeal> monos;
        std::vector<PIdeal> Ks;
        for (std::uint64_t seed = 1; seed <= 3; ++seed) {
            auto c = sample_reduction(G, x, seed, cfg);
            Ks.emplace_back(x, c.gens);
            monos.push_back(mono_of(Ks.back()));
        }
        CHECK(monos[0] == monos[1]);
        CHECK(monos[1] == monos[2]);
        for (const auto& K : Ks) {
            CHECK(K.contains(monos[0].to_ideal(x)));
        }
    }
}

TEST_CASE("digests")
{
    auto x = make_ring(k, 2);
    CHECK(digest(PIdeal(x, parse_list(x, "x1, x2"))) == digest(PIdeal(x, parse_list(x, "x2 + x1, 3*x2"))));
    CHECK(digest(m(2)) == digest(MonomialIdeal(2, {{0, 1}, {1, 0}, {1, 1}})));
    CHECK(hex_digest(1) == "0000000000000001");
}
