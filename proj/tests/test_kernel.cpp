#include <doctest.h>

#include <random>

#include "corelab/text_io.hpp"
#include "oracles.hpp"

using namespace corelab;

namespace {

using P = Polynomial<PrimeField>;

RingPtr<PrimeField> ring_x(int n)
{
    return make_ring(PrimeField(), n);
}

P parse(const RingPtr<PrimeField>& r, const char* s)
{
    return parse_polynomial(r, s);
}

} // namespace

TEST_CASE("prime field matches big-integer arithmetic mod p")
{
    PrimeField k(32003);
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long long> dist(-(1ll << 40), 1ll << 40);
    for (int i = 0; i < 2000; ++i) {
        long long a = dist(rng), b = dist(rng);
        mpz_class A(std::to_string(a)), B(std::to_string(b)), p(32003);
        auto canon = [&](mpz_class x) {
            mpz_class r = x % p;
            if (r < 0) {
                r += p;
            }
            return static_cast<std::uint32_t>(r.get_ui());
        };
        auto ea = k.from_int(a), eb = k.from_int(b);
        CHECK(ea == canon(A));
        CHECK(ea < 32003u);
        CHECK(k.add(ea, eb) == canon(A + B));
        CHECK(k.sub(ea, eb) == canon(A - B));
        CHECK(k.mul(ea, eb) == canon(A * B));
        if (ea != 0) {
            CHECK(k.mul(ea, k.inv(ea)) == 1u);
        }
    }
}

TEST_CASE("field axioms on random triples")
{
    PrimeField k(32003);
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::uint32_t> d(0, 32002);
    for (int i = 0; i < 1000; ++i) {
        auto a = d(rng), b = d(rng), c = d(rng);
        CHECK(k.mul(k.mul(a, b), c) == k.mul(a, k.mul(b, c)));
        CHECK(k.add(k.add(a, b), c) == k.add(a, k.add(b, c)));
        CHECK(k.mul(a, k.add(b, c)) == k.add(k.mul(a, b), k.mul(a, c)));
    }
    RationalField q;
    auto x = q.parse("6/-4");
    CHECK(x.get_num() == -3);
    CHECK(x.get_den() == 2);
    CHECK(q.mul(x, q.inv(x)) == 1);
}

TEST_CASE("prime field rejects bad characteristics")
{
    CHECK_THROWS(PrimeField(2));
    CHECK_THROWS(PrimeField(32002));
    CHECK_NOTHROW(PrimeField(7));
    PrimeField k(7);
    CHECK(k.from_rational(mpq_class(1, 3)) == 5u);
    CHECK_THROWS(k.from_rational(mpq_class(1, 7)));
}

TEST_CASE("monomial orders")
{
    auto lex = MonomialOrder::lex(2);
    CHECK(lex.compare(Monomial(std::vector<int>{1, 0}), Monomial(std::vector<int>{0, 5})) > 0);
    Monomial m(std::vector<int>{2, 1});
    CHECK(lex.compare(m, m) == 0);

    // Y before X block elimination in k[x1, y1]
    auto r = make_ring(PrimeField(), 1, 1);
    auto elim = r->elimination_order({Block::Y});
    Monomial y1(std::vector<int>{0, 1}), x19(std::vector<int>{9, 0});
    CHECK(elim.compare(y1, x19) > 0);
    CHECK(oracle::compare(elim, y1.to_vector(2), x19.to_vector(2)) > 0);
}

TEST_CASE("orders agree with the brute-force definition")
{
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> e(0, 4);
    auto r = make_ring(PrimeField(), 3, 3, 2);
    std::vector<MonomialOrder> orders = {
        MonomialOrder::lex(8),
        MonomialOrder::grevlex(8),
        r->elimination_order({Block::Y}),
        r->elimination_order({Block::X, Block::Y}),
        r->grevlex_with_last(4),
        MonomialOrder({OrderBlock{OrderKind::Lex, {2, 0, 1}}, OrderBlock{OrderKind::Grevlex, {7, 3, 4, 5, 6}}}),
    };
    for (const auto& ord : orders) {
        for (int trial = 0; trial < 500; ++trial) {
            std::vector<int> a(8), b(8), c(8);
            for (int i = 0; i < 8; ++i) {
                a[i] = e(rng);
                b[i] = trial % 5 == 0 ? a[i] : e(rng);
                c[i] = e(rng);
            }
            Monomial ma(a), mb(b), mc(c);
            int got = ord.compare(ma, mb) > 0 ? 1 : (ord.compare(ma, mb) < 0 ? -1 : 0);
            REQUIRE(got == oracle::compare(ord, a, b));
            // multiplicative compatibility and 1 minimal
            CHECK((ord.compare(ma * mc, mb * mc) > 0) == (got > 0));
            CHECK(ord.compare(ma, Monomial{}) >= 0);
        }
    }
}

TEST_CASE("block elimination: monomials with the leading block dominate")
{
    auto r = make_ring(PrimeField(), 3, 3);
    auto ord = r->elimination_order({Block::Y});
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> e(0, 6);
    for (int t = 0; t < 300; ++t) {
        std::vector<int> a(6), b(6);
        for (int i = 0; i < 3; ++i) {
            a[i] = e(rng);
            b[i] = e(rng);
        }
        a[3 + t % 3] = 1 + t % 2;
        CHECK(ord.compare(Monomial(a), Monomial(b)) > 0);
    }
}

TEST_CASE("exponent overflow is detected")
{
    Monomial a(std::vector<int>{200});
    CHECK_THROWS_AS(a * a, ExponentOverflow);
    CHECK_THROWS_AS(Monomial(std::vector<int>{256}), ExponentOverflow);
}

TEST_CASE("polynomial arithmetic")
{
    auto r = ring_x(3);
    CHECK(parse(r, "x1 + x2") + parse(r, "-x2") == parse(r, "x1"));
    CHECK(parse(r, "x1 + x2") * parse(r, "x1 - x2") == parse(r, "x1^2 - x2^2"));
    CHECK((parse(r, "x1 + x2") - parse(r, "x1 + x2")).is_zero());
    CHECK(parse(r, "2*x1").scale(PrimeField().inv(2)) == parse(r, "x1"));
    CHECK(parse(r, "x1 + 1").pow(3) == parse(r, "x1^3 + 3*x1^2 + 3*x1 + 1"));
    auto q = parse(r, "x1^2 - x2^2").divide_exact(parse(r, "x1 + x2"));
    REQUIRE(q);
    CHECK(*q == parse(r, "x1 - x2"));
    CHECK_FALSE(parse(r, "x1^2 + x2").divide_exact(parse(r, "x1")));
}

TEST_CASE("ring mismatch is an error")
{
    auto r = ring_x(2), s = ring_x(3);
    CHECK_THROWS_AS(parse(r, "x1") + parse(s, "x1"), RingMismatch);
}

TEST_CASE("distributivity on random polynomials over GF(32003)")
{
    auto r = ring_x(4);
    std::mt19937_64 rng(42);
    for (int t = 0; t < 200; ++t) {
        auto f = oracle::random_poly(r, rng, 5, 4);
        auto g = oracle::random_poly(r, rng, 5, 4);
        auto h = oracle::random_poly(r, rng, 5, 4);
        auto lhs = f * (g + h);
        CHECK(lhs == f * g + f * h);
        CHECK(lhs.check_invariants());
        CHECK((f - g).check_invariants());
        CHECK(f.sub_mul(3, Monomial(std::vector<int>{1, 0, 2, 0}), g) ==
              f - g.mul_term(3, Monomial(std::vector<int>{1, 0, 2, 0})));
    }
}

TEST_CASE("multihomogenize")
{
    auto r = make_ring(PrimeField(), 3, 3, 3);
    auto f = parse(r, "z1*x1^2*x2 + z2*x1*x3^2 + z3*x2^3*x3");
    CHECK(multihomogenize(f) ==
          parse(r, "z1*x1^2*x2*y2^2*y3^2 + z2*x1*x3^2*y1*y2^3 + z3*x2^3*x3*y1^2*y3"));
    CHECK(multihomogenize(parse(r, "x1^4")) == parse(r, "x1^4"));
    CHECK(multihomogenize(parse(r, "x1 + x2")) == parse(r, "x1*y2 + x2*y1"));
    CHECK(multihomogenize(P(r)).is_zero());
    CHECK_THROWS(multihomogenize(parse(r, "y1")));
    CHECK_THROWS(multihomogenize(parse(ring_x(2), "x1")));

    // multidegree is constant per variable pair, and y := 1 recovers f
    std::mt19937_64 rng(9);
    auto rx = make_ring(PrimeField(), 3, 3);
    for (int t = 0; t < 100; ++t) {
        std::vector<typename P::Term> terms;
        std::uniform_int_distribution<int> e(0, 3);
        for (int i = 0; i < 4; ++i) {
            terms.push_back({static_cast<std::uint32_t>(1 + i), Monomial(std::vector<int>{e(rng), e(rng), e(rng)})});
        }
        P g(rx, terms);
        auto gt = multihomogenize(g);
        auto md = x_multidegree(g);
        for (const auto& term : gt.terms()) {
            for (int i = 0; i < 3; ++i) {
                CHECK(term.mono[i] + term.mono[3 + i] == md[i]);
            }
        }
        std::vector<std::uint32_t> ones(3, 1);
        auto back = specialize_block(gt, Block::Y, std::span<const std::uint32_t>(ones));
        auto gx = g.map_variables(back.ring(), std::vector<int>{0, 1, 2, -1, -1, -1});
        CHECK(back == gx);
    }
}

TEST_CASE("specialize_z")
{
    auto r = make_ring(PrimeField(), 2, 0, 2);
    std::vector<std::uint32_t> lam{1, 0};
    auto f = parse(r, "z1*x1 + z2*x2");
    auto s = specialize_z(f, std::span<const std::uint32_t>(lam));
    CHECK(s.ring()->nvars() == 2);
    CHECK(s.to_string() == "x1");
    auto g = parse(r, "x1^2 + 3*x2");
    CHECK(specialize_z(g, std::span<const std::uint32_t>(lam)).to_string() == "x1^2 + 3*x2");
    std::vector<std::uint32_t> bad{1};
    CHECK_THROWS(specialize_z(f, std::span<const std::uint32_t>(bad)));
}

TEST_CASE("specialize_z is a ring homomorphism")
{
    auto r = make_ring(PrimeField(), 3, 0, 3);
    std::mt19937_64 rng(21);
    std::uniform_int_distribution<std::uint32_t> d(0, 32002);
    for (int t = 0; t < 1000; ++t) {
        auto f = oracle::random_poly(r, rng, 4, 3);
        auto g = oracle::random_poly(r, rng, 4, 3);
        std::vector<std::uint32_t> lam{d(rng), d(rng), d(rng)};
        std::span<const std::uint32_t> L(lam);
        auto sf = specialize_z(f, L), sg = specialize_z(g, L);
        REQUIRE(specialize_z(f * g, L) == sf * sg);
        REQUIRE(specialize_z(f + g, L) == sf + sg);
    }
}

TEST_CASE("text round trip")
{
    auto r = make_ring(PrimeField(), 3, 3, 12);
    auto f = parse(r, "3*x1^2*y3*z12 - x2 + 5");
    CHECK(parse_polynomial(r, f.to_string()) == f);
    CHECK(polynomial_from_json(r, polynomial_to_json(f)) == f);
    CHECK_THROWS_AS(parse(r, "x4"), ParseError);
    CHECK_THROWS_AS(parse(r, "x1 +"), ParseError);
    CHECK_THROWS_AS(parse(r, "w1"), ParseError);

    auto spec = parse_ring_header("ring { char: 32003, x: 3, y: 3, z: 12 }");
    CHECK(spec.characteristic == 32003u);
    CHECK(spec.x == 3);
    CHECK(spec.y == 3);
    CHECK(spec.z == 12);
    CHECK(parse_ring_header(format_ring_header(spec)) == spec);
    CHECK(ring_spec(*r) == spec);
    CHECK_THROWS_AS(parse_ring_header("ring { x: 2, q: 1 }"), ParseError);

    auto rq = make_ring(RationalField(), 2);
    auto g = parse_polynomial(rq, "3/4*x1 - 1/2");
    CHECK(g.to_string() == "3/4*x1 - 1/2");
}
