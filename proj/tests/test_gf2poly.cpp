#include <doctest.h>

#include "sstmmse/gf2poly.hpp"
#include "sstmmse/rng.hpp"

using namespace sstmmse::gf2poly;

namespace {
Poly rand_poly(sstmmse::rng::RandomSource& rand, int max_degree = 16) {
    return Poly::from_bits(rand.next_u64() & ((std::uint64_t{1} << (max_degree + 1)) - 1));
}
}  // namespace

TEST_CASE("polynomial addition is XOR of supports") {
    const Poly a = Poly::from_exponents({0, 1});
    CHECK((a + a).is_zero());
    CHECK(Poly::from_exponents({0, 1, 2}) + Poly::from_exponents({1}) ==
          Poly::from_exponents({0, 2}));
    // the two c2 generators differ by exactly D^2
    const Poly g1 = Poly::from_exponents({0, 1, 3, 4, 6});
    const Poly g2 = Poly::from_exponents({0, 1, 2, 3, 4, 6});
    CHECK(g1 + g2 == Poly::from_exponents({2}));
}

TEST_CASE("polynomial multiplication") {
    CHECK((Poly{} * Poly::from_exponents({0, 5})).is_zero());
    const Poly one_plus_d = Poly::from_exponents({0, 1});
    CHECK(one_plus_d * one_plus_d == Poly::from_exponents({0, 2}));
    CHECK(Poly::from_exponents({1}) * Poly::from_exponents({0, 1, 2}) ==
          Poly::from_exponents({1, 2, 3}));
    CHECK_THROWS_AS(Poly::from_exponents({40}) * Poly::from_exponents({40}),
                    std::overflow_error);
}

TEST_CASE("addition/multiplication properties on random polynomials") {
    sstmmse::rng::RandomSource rand(42);
    for (int i = 0; i < 200; ++i) {
        const Poly a = rand_poly(rand), b = rand_poly(rand), c = rand_poly(rand);
        CHECK((a + a).is_zero());
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
    }
}

TEST_CASE("extended gcd reproduces the known inverse pairs") {
    SUBCASE("one operand zero") {
        const Poly p = Poly::from_exponents({0, 3});
        const auto r = ext_gcd(p, Poly{});
        CHECK(r.g == p);
        CHECK(r.u == Poly::one());
        CHECK(r.v.is_zero());
    }
    SUBCASE("c1 generators") {
        const auto r = ext_gcd(Poly::from_exponents({0, 1, 2}), Poly::from_exponents({0, 2}));
        CHECK(r.g == Poly::one());
        CHECK(r.u == Poly::from_exponents({1}));
        CHECK(r.v == Poly::from_exponents({0, 1}));
    }
    SUBCASE("c2 generators") {
        const auto r = ext_gcd(Poly::from_exponents({0, 1, 3, 4, 6}),
                               Poly::from_exponents({0, 1, 2, 3, 4, 6}));
        CHECK(r.g == Poly::one());
        CHECK(r.u == Poly::from_exponents({3, 4, 5}));
        CHECK(r.v == Poly::from_exponents({0, 1, 3, 4, 5}));
    }
    CHECK_THROWS_AS(ext_gcd(Poly{}, Poly{}), std::invalid_argument);
}

TEST_CASE("extended gcd postcondition on random pairs") {
    sstmmse::rng::RandomSource rand(7);
    int done = 0;
    while (done < 300) {
        const Poly a = rand_poly(rand), b = rand_poly(rand);
        if (a.is_zero() && b.is_zero()) continue;
        const auto r = ext_gcd(a, b);
        CHECK(r.u * a + r.v * b == r.g);
        ++done;
    }
}

TEST_CASE("matrix product") {
    const PolyMatrix any(2, 2,
                         {Poly::from_exponents({1}), Poly::from_exponents({0, 2}),
                          Poly::one(), Poly::from_exponents({3})});
    CHECK(PolyMatrix::identity(2) * any == any);
    CHECK_THROWS_AS(PolyMatrix(2, 1) * PolyMatrix(2, 2), std::invalid_argument);
    // 1x1 agrees with scalar multiplication
    sstmmse::rng::RandomSource rand(3);
    for (int i = 0; i < 50; ++i) {
        const Poly a = rand_poly(rand), b = rand_poly(rand);
        const PolyMatrix ma(1, 1, {a}), mb(1, 1, {b});
        CHECK((ma * mb).at(0, 0) == a * b);
    }
}

TEST_CASE("text forms") {
    CHECK(Poly::parse("111").value() == Poly::from_exponents({0, 1, 2}));
    CHECK(Poly::parse("101").value() == Poly::from_exponents({0, 2}));
    CHECK(Poly::parse("7").value() == Poly::from_exponents({0, 1, 2}));   // octal
    CHECK(Poly::parse("133").value() == Poly::from_exponents({0, 1, 3, 4, 6}));
    CHECK(Poly::parse("0o111").value() == Poly::parse("1001001").value());
    CHECK(!Poly::parse("").has_value());
    CHECK(!Poly::parse("8").has_value());
    CHECK(Poly::from_exponents({0, 1, 2}).to_string() == "111");
    CHECK(Poly{}.to_string() == "0");
    CHECK(Poly{}.degree() == -1);
    CHECK(Poly::from_exponents({0, 2}).to_pretty_string() == "1 + D^2");
    // serialized exponents come out ascending and distinct
    const auto exps = Poly::from_exponents({5, 1, 5, 0}).exponents();
    CHECK(exps == std::vector<int>{0, 1, 5});
}
