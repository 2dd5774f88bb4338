// Polynomials and small matrices over GF(2)[D].
//
// A Poly is a coefficient bitmask: bit j set means the D^j term is present.
// Degrees are capped at 63, far above anything a rate-1/2 code with
// constraint length <= 6 can produce (products here never exceed degree 12).

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sstmmse::gf2poly {

class Poly {
  public:
    static constexpr int kMaxDegree = 63;

    constexpr Poly() = default;

    static constexpr Poly from_bits(std::uint64_t bits) { return Poly(bits); }
    static Poly from_exponents(std::initializer_list<int> exps);
    static Poly one() { return Poly(1); }

    // Accepts a binary coefficient string, lowest exponent first ("111" is
    // 1+D+D^2), or octal tap notation where bit j of the numeric value is the
    // D^j coefficient ("7,5" names the same pair as "111,101"). Strings made
    // only of 0/1 are read as binary; a "0o" prefix forces octal.
    static std::optional<Poly> parse(std::string_view text);

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool is_zero() const { return bits_ == 0; }
    bool coeff(int exponent) const;
    int degree() const;      // -1 for the zero polynomial
    int term_count() const;  // number of nonzero coefficients

    std::vector<int> exponents() const;  // ascending
    std::string to_string() const;       // binary form, lowest exponent first
    std::string to_pretty_string() const;  // e.g. "1 + D + D^2"

    friend constexpr Poly operator+(Poly a, Poly b) { return Poly(a.bits_ ^ b.bits_); }
    friend Poly operator*(Poly a, Poly b);
    Poly& operator+=(Poly rhs) { bits_ ^= rhs.bits_; return *this; }

    friend constexpr bool operator==(Poly a, Poly b) { return a.bits_ == b.bits_; }
    friend constexpr bool operator!=(Poly a, Poly b) { return a.bits_ != b.bits_; }

  private:
    constexpr explicit Poly(std::uint64_t bits) : bits_(bits) {}
    std::uint64_t bits_ = 0;
};

struct ExtGcd {
    Poly g;  // gcd(a, b)
    Poly u;  // u*a + v*b = g
    Poly v;
};

// Polynomial extended Euclidean algorithm. Reduction is always by the
// higher-degree operand, so the output pair (u, v) is the unique minimal-
// degree one. Throws std::invalid_argument if both inputs are zero.
ExtGcd ext_gcd(Poly a, Poly b);

// quotient/remainder of a by b (b nonzero)
std::pair<Poly, Poly> divmod(Poly a, Poly b);

class PolyMatrix {
  public:
    PolyMatrix() = default;
    PolyMatrix(int rows, int cols);
    PolyMatrix(int rows, int cols, std::initializer_list<Poly> entries);

    static PolyMatrix identity(int n);
    static PolyMatrix column(std::initializer_list<Poly> entries);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Poly& at(int r, int c);
    const Poly& at(int r, int c) const;

    // total number of D^j terms over all entries
    int term_count() const;

    friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);

    std::string to_string() const;  // one row per line, entries in pretty form

  private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Poly> entries_;
};

}  // namespace sstmmse::gf2poly
