#include "sstmmse/codes.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <iterator>
#include <map>
#include <stdexcept>
#include <string>

namespace sstmmse::codes {

std::string_view to_string(Mode mode) {
    return mode == Mode::general ? "general" : "qli";
}

std::optional<Mode> parse_mode(std::string_view text) {
    if (text == "general") return Mode::general;
    if (text == "qli") return Mode::qli;
    return std::nullopt;
}

CodeSpec build_code(Poly g1, Poly g2) {
    if (g1.is_zero() || g2.is_zero())
        throw std::invalid_argument("build_code: generator polynomial is zero");
    if (!g1.coeff(0) && !g2.coeff(0))
        throw std::invalid_argument("build_code: neither generator has a delay-0 tap");

    auto gcd = gf2poly::ext_gcd(g1, g2);
    if (gcd.g != Poly::one())
        throw std::invalid_argument(
            "build_code: gcd(g1, g2) != 1, code has no feedforward inverse");

    CodeSpec code;
    code.g1 = g1;
    code.g2 = g2;
    code.inverse = PolyMatrix::column({gcd.u, gcd.v});
    code.check = PolyMatrix::column({g2, g1});
    code.nu = std::max(g1.degree(), g2.degree());

    const Poly diff = g1 + g2;
    if (diff.term_count() == 1) {
        const int shift = diff.degree();
        if (shift >= 1 && shift <= code.nu - 1) code.qli_shift = shift;
    }
    return code;
}

PolyMatrix product_matrix(const CodeSpec& code) {
    PolyMatrix generator(1, 2, {code.g1, code.g2});
    return code.inverse * generator;
}

namespace {

TermStats finish_stats(TermStats stats) {
    for (auto& support : stats.per_stream_supports) std::sort(support.begin(), support.end());
    const auto& s1 = stats.per_stream_supports[0];
    const auto& s2 = stats.per_stream_supports[1];
    std::vector<std::pair<int, int>> common;
    std::set_intersection(s1.begin(), s1.end(), s2.begin(), s2.end(), std::back_inserter(common));
    stats.m_col = {static_cast<int>(s1.size()), static_cast<int>(s2.size())};
    stats.m_common = static_cast<int>(common.size());
    stats.m_excl = {stats.m_col[0] - stats.m_common, stats.m_col[1] - stats.m_common};
    stats.m_v = stats.m_excl[0] + stats.m_excl[1];
    return stats;
}

}  // namespace

TermStats term_stats_general(const CodeSpec& code) {
    // v = (e * Ginv) * G, so column i of Ginv*G lists the error terms of v_i.
    const PolyMatrix product = product_matrix(code);
    TermStats stats;
    for (int col = 0; col < 2; ++col)
        for (int row = 0; row < 2; ++row)
            for (int exp : product.at(row, col).exponents())
                stats.per_stream_supports[static_cast<std::size_t>(col)].emplace_back(row, exp);
    stats = finish_stats(std::move(stats));
    stats.m_u = code.inverse.term_count();
    return stats;
}

TermStats term_stats_qli(const CodeSpec& code) {
    if (!code.qli_shift) throw std::invalid_argument("term_stats_qli: not a QLI code");
    // u = e1 + e2, v_l = u * g_l: every tap of g_l pulls in one error term
    // from each of the two streams.
    TermStats stats;
    const Poly gens[2] = {code.g1, code.g2};
    for (int l = 0; l < 2; ++l)
        for (int exp : gens[l].exponents())
            for (int stream = 0; stream < 2; ++stream)
                stats.per_stream_supports[static_cast<std::size_t>(l)].emplace_back(stream, exp);
    stats = finish_stats(std::move(stats));
    stats.m_u = 2;
    return stats;
}

TermStats term_stats(const CodeSpec& code, Mode mode) {
    return mode == Mode::general ? term_stats_general(code) : term_stats_qli(code);
}

std::vector<std::uint8_t> encode(const CodeSpec& code, std::span<const std::uint8_t> info) {
    const std::size_t total = info.size() + static_cast<std::size_t>(code.nu);
    std::vector<std::uint8_t> out(2 * total);
    const std::uint64_t taps1 = code.g1.bits();
    const std::uint64_t taps2 = code.g2.bits();
    std::uint64_t reg = 0;  // bit j holds the input at delay j
    for (std::size_t k = 0; k < total; ++k) {
        const std::uint64_t in = k < info.size() ? (info[k] & 1u) : 0u;
        reg = (reg << 1) | in;
        out[2 * k] = static_cast<std::uint8_t>(std::popcount(reg & taps1) & 1);
        out[2 * k + 1] = static_cast<std::uint8_t>(std::popcount(reg & taps2) & 1);
    }
    return out;
}

std::vector<std::uint8_t> apply_inverse(const CodeSpec& code,
                                        std::span<const std::uint8_t> bits1,
                                        std::span<const std::uint8_t> bits2,
                                        std::size_t out_len) {
    std::vector<std::uint8_t> out(out_len, 0);
    const auto accumulate = [&](const Poly& taps, std::span<const std::uint8_t> bits) {
        for (int j : taps.exponents())
            for (std::size_t k = static_cast<std::size_t>(j); k < out_len; ++k) {
                const std::size_t src = k - static_cast<std::size_t>(j);
                if (src < bits.size()) out[k] ^= bits[src] & 1u;
            }
    };
    accumulate(code.inverse.at(0, 0), bits1);
    accumulate(code.inverse.at(1, 0), bits2);
    return out;
}

namespace {

const std::map<std::string, CodeSpec, std::less<>>& registry() {
    static const std::map<std::string, CodeSpec, std::less<>> codes = [] {
        std::map<std::string, CodeSpec, std::less<>> m;
        m.emplace("c1", build_code(Poly::from_exponents({0, 1, 2}),
                                   Poly::from_exponents({0, 2})));
        m.emplace("c2", build_code(Poly::from_exponents({0, 1, 3, 4, 6}),
                                   Poly::from_exponents({0, 1, 2, 3, 4, 6})));
        m.emplace("c3", build_code(Poly::from_exponents({0, 1, 2, 3}),
                                   Poly::from_exponents({0, 1, 3})));
        m.emplace("c4", build_code(Poly::from_exponents({0, 3, 4}),
                                   Poly::from_exponents({0, 1, 3, 4})));
        m.emplace("c5", build_code(Poly::from_exponents({0, 1, 4, 5, 6}),
                                   Poly::from_exponents({0, 2, 3, 4, 6})));
        return m;
    }();
    return codes;
}

}  // namespace

const CodeSpec& builtin(std::string_view name) {
    std::string key(name);
    std::transform(key.begin(), key.end(), key.begin(),
                   [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
    auto it = registry().find(key);
    if (it == registry().end())
        throw std::invalid_argument("unknown built-in code: " + std::string(name));
    return it->second;
}

std::vector<std::string_view> builtin_names() {
    std::vector<std::string_view> names;
    for (const auto& [name, unused] : registry()) names.push_back(name);
    return names;
}

CodeSpec parse_code(std::string_view selector) {
    const auto comma = selector.find(',');
    if (comma == std::string_view::npos) return builtin(selector);
    auto g1 = Poly::parse(selector.substr(0, comma));
    auto g2 = Poly::parse(selector.substr(comma + 1));
    if (!g1 || !g2)
        throw std::invalid_argument("cannot parse code polynomials: " + std::string(selector));
    return build_code(*g1, *g2);
}

}  // namespace sstmmse::codes
