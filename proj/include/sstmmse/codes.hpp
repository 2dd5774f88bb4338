// Rate-1/2 convolutional code specifications: generator pair, feedforward
// inverse, syndrome former, QLI detection, and the error-term statistics of
// the code streams feeding the main decoder of an SST Viterbi decoder.

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "sstmmse/gf2poly.hpp"

namespace sstmmse::codes {

using gf2poly::Poly;
using gf2poly::PolyMatrix;

enum class Mode { general, qli };

std::string_view to_string(Mode mode);
std::optional<Mode> parse_mode(std::string_view text);

struct CodeSpec {
    Poly g1;
    Poly g2;
    PolyMatrix inverse;  // 2x1 column, g1*inverse[0] + g2*inverse[1] = 1
    PolyMatrix check;    // 2x1 syndrome former (g2; g1)
    int nu = 0;          // constraint length: max(deg g1, deg g2)
    std::optional<int> qli_shift;  // L when g2 = g1 + D^L, 1 <= L <= nu-1
};

// Error-term bookkeeping for the encoded block (v1, v2) seen by the main
// decoder. Each contributing term is one i.i.d. channel error, identified by
// (error stream in {0,1}, delay). m_col counts the terms of each stream,
// m_common the shared ones, m_v the symmetric difference, and m_u the terms
// of the pre-decoder information map.
struct TermStats {
    std::array<std::vector<std::pair<int, int>>, 2> per_stream_supports;
    std::array<int, 2> m_col{};
    int m_common = 0;
    std::array<int, 2> m_excl{};
    int m_v = 0;
    int m_u = 0;
};

// Synthesizes the inverse via the extended Euclidean algorithm and detects
// quick-look-in structure. Throws std::invalid_argument when gcd(g1,g2) != 1
// (no feedforward inverse) or when an input is zero.
CodeSpec build_code(Poly g1, Poly g2);

// The 2x2 product of the inverse encoder with the generator row.
PolyMatrix product_matrix(const CodeSpec& code);

TermStats term_stats_general(const CodeSpec& code);
TermStats term_stats_qli(const CodeSpec& code);  // throws if not QLI
TermStats term_stats(const CodeSpec& code, Mode mode);

// Encodes info bits plus nu zero tail bits; output is interleaved
// (y1, y2) per step, length 2 * (info.size() + nu).
std::vector<std::uint8_t> encode(const CodeSpec& code, std::span<const std::uint8_t> info);

// Applies the inverse encoder to a hard bit stream (pre-decoder map):
// out_k = sum_j inv1[j] bits1_{k-j} + inv2[j] bits2_{k-j}. Inputs are the
// deinterleaved streams; indices beyond their length are treated as zero.
std::vector<std::uint8_t> apply_inverse(const CodeSpec& code,
                                        std::span<const std::uint8_t> bits1,
                                        std::span<const std::uint8_t> bits2,
                                        std::size_t out_len);

// Built-in registry c1..c5.
const CodeSpec& builtin(std::string_view name);
std::vector<std::string_view> builtin_names();

// A named built-in, or "g1,g2" with each polynomial in binary or octal form.
CodeSpec parse_code(std::string_view selector);

}  // namespace sstmmse::codes
