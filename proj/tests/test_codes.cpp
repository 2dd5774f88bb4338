#include <doctest.h>

#include "sstmmse/codes.hpp"
#include "sstmmse/rng.hpp"

using namespace sstmmse;
using codes::Mode;
using gf2poly::Poly;
using gf2poly::PolyMatrix;

namespace {
const Poly D = Poly::from_exponents({1});
Poly P(std::initializer_list<int> exps) { return Poly::from_exponents(exps); }
}  // namespace

TEST_CASE("build_code on the built-in registry") {
    const auto& c1 = codes::builtin("c1");
    CHECK(c1.nu == 2);
    CHECK(c1.qli_shift == 1);
    CHECK(c1.inverse == PolyMatrix::column({D, P({0, 1})}));

    const auto& c2 = codes::builtin("c2");
    CHECK(c2.nu == 6);
    CHECK(c2.qli_shift == 2);
    CHECK(c2.inverse == PolyMatrix::column({P({3, 4, 5}), P({0, 1, 3, 4, 5})}));

    const auto& c5 = codes::builtin("c5");
    CHECK(c5.nu == 6);
    CHECK(!c5.qli_shift.has_value());
    CHECK(c5.inverse == PolyMatrix::column({D, P({0, 1})}));

    CHECK(codes::builtin("c3").qli_shift == 2);
    CHECK(codes::builtin("c4").qli_shift == 1);
    CHECK_THROWS_AS(codes::builtin("c9"), std::invalid_argument);
}

TEST_CASE("inverse identity holds for every built-in code") {
    for (auto name : codes::builtin_names()) {
        const auto& code = codes::builtin(name);
        CAPTURE(name);
        CHECK(code.g1 * code.inverse.at(0, 0) + code.g2 * code.inverse.at(1, 0) ==
              Poly::one());
        CHECK(code.check == PolyMatrix::column({code.g2, code.g1}));
    }
}

TEST_CASE("codes without a feedforward inverse are rejected") {
    CHECK_THROWS_AS(codes::build_code(P({0, 1}), P({0, 2})), std::invalid_argument);
    CHECK_THROWS_AS(codes::build_code(Poly{}, P({0, 1})), std::invalid_argument);
}

TEST_CASE("product matrices match the known expansions") {
    CHECK(codes::product_matrix(codes::builtin("c1")) ==
          PolyMatrix(2, 2, {P({1, 2, 3}), P({1, 3}), P({0, 3}), P({0, 1, 2, 3})}));
    CHECK(codes::product_matrix(codes::builtin("c2")) ==
          PolyMatrix(2, 2,
                     {P({3, 10, 11}), P({3, 5, 6, 7, 10, 11}),
                      P({0, 2, 5, 6, 7, 10, 11}), P({0, 3, 10, 11})}));
    CHECK(codes::product_matrix(codes::builtin("c5")) ==
          PolyMatrix(2, 2,
                     {P({1, 2, 5, 6, 7}), P({1, 3, 4, 5, 7}),
                      P({0, 2, 4, 7}), P({0, 1, 2, 5, 6, 7})}));
}

TEST_CASE("general-mode term statistics") {
    const auto c1 = codes::term_stats_general(codes::builtin("c1"));
    CHECK(c1.m_col == std::array<int, 2>{5, 6});
    CHECK(c1.m_common == 4);
    CHECK(c1.m_excl == std::array<int, 2>{1, 2});
    CHECK(c1.m_v == 3);
    CHECK(c1.m_u == 3);

    const auto c2 = codes::term_stats_general(codes::builtin("c2"));
    CHECK(c2.m_col == std::array<int, 2>{10, 10});
    CHECK(c2.m_v == 8);
    CHECK(c2.m_u == 8);

    const auto c5 = codes::term_stats_general(codes::builtin("c5"));
    CHECK(c5.m_u == 3);
    CHECK(c5.m_v == 8);

    CHECK(codes::term_stats_general(codes::builtin("c3")).m_v == 4);
    CHECK(codes::term_stats_general(codes::builtin("c4")).m_v == 5);

    // column counts agree with the term counts of the product columns
    for (auto name : codes::builtin_names()) {
        const auto& code = codes::builtin(name);
        const auto stats = codes::term_stats_general(code);
        const auto product = codes::product_matrix(code);
        CAPTURE(name);
        for (int col = 0; col < 2; ++col)
            CHECK(stats.m_col[col] ==
                  product.at(0, col).term_count() + product.at(1, col).term_count());
    }
}

TEST_CASE("QLI-mode term statistics") {
    const auto c1 = codes::term_stats_qli(codes::builtin("c1"));
    CHECK(c1.m_col == std::array<int, 2>{6, 4});
    CHECK(c1.m_common == 4);
    CHECK(c1.m_excl == std::array<int, 2>{2, 0});
    CHECK(c1.m_v == 2);
    CHECK(c1.m_u == 2);

    const auto c2 = codes::term_stats_qli(codes::builtin("c2"));
    CHECK(c2.m_col == std::array<int, 2>{10, 12});
    CHECK(c2.m_common == 10);
    CHECK(c2.m_excl == std::array<int, 2>{0, 2});
    CHECK(c2.m_v == 2);

    // m_u = m_v = 2 for every QLI code: the streams differ by the single
    // shifted copy of the two-term information map
    for (auto name : {"c1", "c2", "c3", "c4"}) {
        const auto stats = codes::term_stats_qli(codes::builtin(name));
        CAPTURE(name);
        CHECK(stats.m_u == 2);
        CHECK(stats.m_v == 2);
        CHECK(stats.m_excl[0] + stats.m_excl[1] == 2);
    }
    CHECK_THROWS_AS(codes::term_stats_qli(codes::builtin("c5")), std::invalid_argument);
}

TEST_CASE("encode") {
    const auto& c1 = codes::builtin("c1");
    SUBCASE("all-zero input stays all-zero") {
        const std::vector<std::uint8_t> zeros(16, 0);
        const auto out = codes::encode(c1, zeros);
        CHECK(out.size() == 2 * (16 + 2));
        for (auto bit : out) CHECK(bit == 0);
    }
    SUBCASE("impulse response lists the taps") {
        const std::vector<std::uint8_t> impulse{1};
        const auto out = codes::encode(c1, impulse);
        // g1 = 1+D+D^2, g2 = 1+D^2, interleaved per step
        CHECK(out == std::vector<std::uint8_t>{1, 1, 1, 0, 1, 1});
    }
    SUBCASE("inverse encoder undoes encoding on noiseless data") {
        sstmmse::rng::RandomSource rand(11);
        for (auto name : codes::builtin_names()) {
            const auto& code = codes::builtin(name);
            CAPTURE(name);
            std::vector<std::uint8_t> info(64);
            for (auto& bit : info) bit = rand.next_bernoulli(0.5) ? 1 : 0;
            const auto coded = codes::encode(code, info);
            std::vector<std::uint8_t> y1(coded.size() / 2), y2(coded.size() / 2);
            for (std::size_t k = 0; k < y1.size(); ++k) {
                y1[k] = coded[2 * k];
                y2[k] = coded[2 * k + 1];
            }
            const auto decoded = codes::apply_inverse(code, y1, y2, info.size());
            CHECK(decoded == info);
        }
    }
}

TEST_CASE("code selector parsing") {
    const auto from_binary = codes::parse_code("111,101");
    CHECK(from_binary.g1 == codes::builtin("c1").g1);
    CHECK(from_binary.g2 == codes::builtin("c1").g2);
    const auto from_octal = codes::parse_code("7,5");
    CHECK(from_octal.g1 == codes::builtin("c1").g1);
    CHECK(codes::parse_code("C2").g2 == codes::builtin("c2").g2);
    CHECK_THROWS_AS(codes::parse_code("111,xyz"), std::invalid_argument);
}
