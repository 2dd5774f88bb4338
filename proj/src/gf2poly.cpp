#include "sstmmse/gf2poly.hpp"

#include <bit>
#include <sstream>

namespace sstmmse::gf2poly {

Poly Poly::from_exponents(std::initializer_list<int> exps) {
    std::uint64_t bits = 0;
    for (int e : exps) {
        if (e < 0 || e > kMaxDegree) throw std::invalid_argument("Poly: exponent out of range");
        bits |= std::uint64_t{1} << e;
    }
    return Poly(bits);
}

std::optional<Poly> Poly::parse(std::string_view text) {
    if (text.empty()) return std::nullopt;
    bool force_octal = false;
    if (text.size() > 2 && (text.substr(0, 2) == "0o" || text.substr(0, 2) == "0O")) {
        force_octal = true;
        text.remove_prefix(2);
        if (text.empty()) return std::nullopt;
    }
    bool binary = !force_octal;
    for (char ch : text) {
        if (ch < '0' || ch > '7') return std::nullopt;
        if (ch > '1') binary = false;
    }
    if (binary) {
        // leftmost character is the D^0 coefficient
        if (text.size() > kMaxDegree + 1) return std::nullopt;
        std::uint64_t bits = 0;
        for (std::size_t i = 0; i < text.size(); ++i)
            if (text[i] == '1') bits |= std::uint64_t{1} << i;
        return Poly(bits);
    }
    if (text.size() > 21) return std::nullopt;  // 64 bits of octal digits
    std::uint64_t value = 0;
    for (char ch : text) {
        if (value >> 61) return std::nullopt;
        value = (value << 3) | static_cast<std::uint64_t>(ch - '0');
    }
    return Poly(value);
}

bool Poly::coeff(int exponent) const {
    if (exponent < 0 || exponent > kMaxDegree) return false;
    return (bits_ >> exponent) & 1;
}

int Poly::degree() const {
    if (bits_ == 0) return -1;
    return 63 - std::countl_zero(bits_);
}

int Poly::term_count() const { return std::popcount(bits_); }

std::vector<int> Poly::exponents() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(term_count()));
    for (std::uint64_t rest = bits_; rest != 0; rest &= rest - 1)
        out.push_back(std::countr_zero(rest));
    return out;
}

std::string Poly::to_string() const {
    if (bits_ == 0) return "0";
    std::string out(static_cast<std::size_t>(degree()) + 1, '0');
    for (int e : exponents()) out[static_cast<std::size_t>(e)] = '1';
    return out;
}

std::string Poly::to_pretty_string() const {
    if (bits_ == 0) return "0";
    std::ostringstream os;
    bool first = true;
    for (int e : exponents()) {
        if (!first) os << " + ";
        first = false;
        if (e == 0)
            os << "1";
        else if (e == 1)
            os << "D";
        else
            os << "D^" << e;
    }
    return os.str();
}

Poly operator*(Poly a, Poly b) {
    if (a.is_zero() || b.is_zero()) return Poly{};
    if (a.degree() + b.degree() > Poly::kMaxDegree)
        throw std::overflow_error("Poly: product exceeds degree cap");
    std::uint64_t acc = 0;
    std::uint64_t bb = b.bits();
    for (std::uint64_t rest = a.bits(); rest != 0; rest &= rest - 1)
        acc ^= bb << std::countr_zero(rest);
    return Poly::from_bits(acc);
}

std::pair<Poly, Poly> divmod(Poly a, Poly b) {
    if (b.is_zero()) throw std::invalid_argument("divmod: division by zero polynomial");
    std::uint64_t rem = a.bits();
    std::uint64_t quot = 0;
    const int db = b.degree();
    int dr = a.degree();
    while (dr >= db && rem != 0) {
        const int shift = dr - db;
        quot |= std::uint64_t{1} << shift;
        rem ^= b.bits() << shift;
        dr = rem == 0 ? -1 : 63 - std::countl_zero(rem);
    }
    return {Poly::from_bits(quot), Poly::from_bits(rem)};
}

ExtGcd ext_gcd(Poly a, Poly b) {
    if (a.is_zero() && b.is_zero())
        throw std::invalid_argument("ext_gcd: both inputs are zero");
    // classic iteration on (r, u, v) triples with r0 = a, r1 = b
    Poly r0 = a, r1 = b;
    Poly u0 = Poly::one(), u1{};
    Poly v0{}, v1 = Poly::one();
    while (!r1.is_zero()) {
        auto [q, rem] = divmod(r0, r1);
        Poly u2 = u0 + q * u1;
        Poly v2 = v0 + q * v1;
        r0 = r1; r1 = rem;
        u0 = u1; u1 = u2;
        v0 = v1; v1 = v2;
    }
    return {r0, u0, v0};
}

PolyMatrix::PolyMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), entries_(static_cast<std::size_t>(rows) * cols) {
    if (rows <= 0 || cols <= 0) throw std::invalid_argument("PolyMatrix: bad shape");
}

PolyMatrix::PolyMatrix(int rows, int cols, std::initializer_list<Poly> entries)
    : PolyMatrix(rows, cols) {
    if (entries.size() != entries_.size())
        throw std::invalid_argument("PolyMatrix: entry count does not match shape");
    std::size_t i = 0;
    for (const Poly& p : entries) entries_[i++] = p;
}

PolyMatrix PolyMatrix::identity(int n) {
    PolyMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Poly::one();
    return m;
}

PolyMatrix PolyMatrix::column(std::initializer_list<Poly> entries) {
    return PolyMatrix(static_cast<int>(entries.size()), 1, entries);
}

Poly& PolyMatrix::at(int r, int c) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw std::out_of_range("PolyMatrix: index out of range");
    return entries_[static_cast<std::size_t>(r) * cols_ + c];
}

const Poly& PolyMatrix::at(int r, int c) const {
    return const_cast<PolyMatrix&>(*this).at(r, c);
}

int PolyMatrix::term_count() const {
    int n = 0;
    for (const Poly& p : entries_) n += p.term_count();
    return n;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("PolyMatrix: dimension mismatch");
    PolyMatrix out(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int j = 0; j < b.cols_; ++j) {
            Poly acc;
            for (int k = 0; k < a.cols_; ++k) acc += a.at(i, k) * b.at(k, j);
            out.at(i, j) = acc;
        }
    return out;
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

std::string PolyMatrix::to_string() const {
    std::ostringstream os;
    for (int i = 0; i < rows_; ++i) {
        os << "[ ";
        for (int j = 0; j < cols_; ++j) {
            if (j) os << " | ";
            os << at(i, j).to_pretty_string();
        }
        os << " ]";
        if (i + 1 < rows_) os << '\n';
    }
    return os.str();
}

}  // namespace sstmmse::gf2poly
