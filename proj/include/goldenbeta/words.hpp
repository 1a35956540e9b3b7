#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "goldenbeta/errors.hpp"
#include "goldenbeta/golden_scalar.hpp"
#include "goldenbeta/rational.hpp"

namespace goldenbeta {

inline constexpr int kMaxWordLength = 64;
inline constexpr int kDefaultEnumerationCap = 32;

/*
 * An admissible digit string (j_1, ..., j_n): bits with no two adjacent ones.
 *
 * Digits are packed most significant first, so j_1 is bit n-1 of `bits()`.
 * For words of equal length the lexicographic order is the integer order
 * of the packed bits.
 */
class Word {
public:
    Word() = default;

    /// Parses an ASCII bit string such as "10100"; rejects other characters and adjacent ones.
    static Word from_string(std::string_view text) {
        if (text.empty()) throw ValidationError("empty word");
        if (text.size() > static_cast<std::size_t>(kMaxWordLength))
            throw ResourceError("word longer than " + std::to_string(kMaxWordLength) + " digits");
        std::uint64_t bits = 0;
        for (char c : text) {
            if (c != '0' && c != '1') throw ValidationError("word must be a 0/1 string: '" + std::string(text) + "'");
            bits = (bits << 1) | static_cast<std::uint64_t>(c == '1');
        }
        return from_bits(bits, static_cast<int>(text.size()));
    }

    static Word from_bits(std::uint64_t bits, int length) {
        if (length < 0 || length > kMaxWordLength) throw ResourceError("word length out of range");
        if (length < kMaxWordLength && (bits >> length) != 0) throw ValidationError("bits exceed word length");
        if ((bits & (bits >> 1)) != 0) throw ValidationError("word has adjacent ones");
        return Word(bits, length);
    }

    static Word zeros(int length) { return from_bits(0, length); }

    int size() const { return length_; }
    bool empty() const { return length_ == 0; }
    std::uint64_t bits() const { return bits_; }

    /// Digit j_{i+1} (0-based index).
    int operator[](int i) const { return static_cast<int>((bits_ >> (length_ - 1 - i)) & 1U); }
    int last() const { return static_cast<int>(bits_ & 1U); }

    /// Appends a digit; appending 1 after a 1 is rejected.
    Word append(int digit) const {
        if (length_ >= kMaxWordLength) throw ResourceError("word longer than " + std::to_string(kMaxWordLength) + " digits");
        if (digit != 0 && digit != 1) throw ValidationError("digit must be 0 or 1");
        if (digit == 1 && length_ > 0 && last() == 1) throw ValidationError("appending 1 after 1 is inadmissible");
        return Word((bits_ << 1) | static_cast<std::uint64_t>(digit), length_ + 1);
    }

    Word prefix(int k) const {
        if (k < 0 || k > length_) throw DomainError("prefix length out of range");
        return Word(k == 0 ? 0 : bits_ >> (length_ - k), k);
    }

    std::string to_string() const {
        std::string s(static_cast<std::size_t>(length_), '0');
        for (int i = 0; i < length_; ++i)
            if ((*this)[i]) s[static_cast<std::size_t>(i)] = '1';
        return s;
    }

    friend bool operator==(const Word&, const Word&) = default;

    /// Lexicographic order (a proper prefix sorts first).
    friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
        int common = a.length_ < b.length_ ? a.length_ : b.length_;
        std::uint64_t ap = common == 0 ? 0 : a.bits_ >> (a.length_ - common);
        std::uint64_t bp = common == 0 ? 0 : b.bits_ >> (b.length_ - common);
        if (auto c = ap <=> bp; c != 0) return c;
        return a.length_ <=> b.length_;
    }

private:
    Word(std::uint64_t bits, int length) : bits_(bits), length_(length) {}

    std::uint64_t bits_ = 0;
    int length_ = 0;
};

/// (N_0(n), N_1(n), N(n)): admissible words of length n ending in 0, ending in 1, and in total.
struct CountTriple {
    Integer n0;
    Integer n1;
    Integer total;

    friend bool operator==(const CountTriple&, const CountTriple&) = default;
};

/// b_n from b_0 = 0, b_1 = 1, b_n = b_{n-1} + b_{n-2}.
inline Integer fibonacci(unsigned n) {
    Integer a = 0;
    Integer b = 1;
    for (unsigned i = 0; i < n; ++i) {
        Integer next = a + b;
        a = std::move(b);
        b = std::move(next);
    }
    return a;
}

/// b_n evaluated exactly as (beta^n - (-beta)^{-n}) / sqrt 5 in Q(beta).
inline Integer fibonacci_binet(unsigned n) {
    long long k = static_cast<long long>(n);
    GoldenScalar neg_pow = pow_beta(-k);
    if (n % 2 == 1) neg_pow = -neg_pow;
    GoldenScalar value = (pow_beta(k) - neg_pow) * GoldenScalar::sqrt5().inverse();
    if (!value.is_rational() || boost::multiprecision::denominator(value.p()) != 1)
        throw std::logic_error("Binet form did not reduce to an integer");
    return boost::multiprecision::numerator(value.p());
}

/// Fixed-width b_n for n <= 93 (the largest Fibonacci number below 2^64).
inline std::uint64_t fibonacci_u64(int n) {
    static const std::array<std::uint64_t, 94> table = [] {
        std::array<std::uint64_t, 94> t{};
        t[1] = 1;
        for (std::size_t i = 2; i < t.size(); ++i) t[i] = t[i - 1] + t[i - 2];
        return t;
    }();
    if (n < 0 || n >= static_cast<int>(table.size())) throw ResourceError("Fibonacci index exceeds 64-bit range");
    return table[static_cast<std::size_t>(n)];
}

/// Counts by last digit via N_1(n) = N_0(n-1), N_0(n) = N_0(n-1) + N_1(n-1).
inline CountTriple counts(unsigned n) {
    if (n < 1) throw DomainError("counts requires n >= 1");
    Integer n0 = 1;
    Integer n1 = 1;
    for (unsigned k = 2; k <= n; ++k) {
        Integer next0 = n0 + n1;
        n1 = std::move(n0);
        n0 = std::move(next0);
    }
    return {n0, n1, n0 + n1};
}

/// The lexicographic maximum of Omega_n: ones at odd positions.
inline Word max_word(int n) {
    if (n < 1) throw DomainError("max_word requires n >= 1");
    if (n > kMaxWordLength) throw ResourceError("word length exceeds " + std::to_string(kMaxWordLength));
    std::uint64_t bits = 0;
    for (int i = 0; i < n; ++i) bits = (bits << 1) | static_cast<std::uint64_t>(i % 2 == 0);
    return Word::from_bits(bits, n);
}

/// The next word of Omega_n in lexicographic order, or nullopt after the maximum.
///
/// Sets the rightmost zero whose left neighbour is zero (or absent) and clears everything after it.
inline std::optional<Word> successor(const Word& w) {
    const int n = w.size();
    for (int i = n - 1; i >= 0; --i) {
        if (w[i] == 1) continue;
        if (i > 0 && w[i - 1] == 1) continue;
        std::uint64_t bits = w.bits();
        const int shift = n - 1 - i;
        bits = (bits >> shift) | 1U;
        bits <<= shift;
        return Word::from_bits(bits, n);
    }
    return std::nullopt;
}

/// Visits Omega_n in lexicographic order without materializing it.
template <typename Fn>
void for_each_word(int n, Fn&& fn) {
    if (n < 1) throw DomainError("word length must be >= 1");
    std::optional<Word> w = Word::zeros(n);
    while (w) {
        fn(*w);
        w = successor(*w);
    }
}

/// All of Omega_n in increasing lexicographic order, generated by `successor`.
inline std::vector<Word> enumerate(int n, int cap = kDefaultEnumerationCap) {
    if (n < 1) throw DomainError("enumerate requires n >= 1");
    if (n > cap || n > kMaxWordLength)
        throw ResourceError("enumeration depth " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
    std::vector<Word> out;
    out.reserve(static_cast<std::size_t>(fibonacci_u64(n + 2)));
    for_each_word(n, [&](const Word& w) { out.push_back(w); });
    return out;
}

/// 0-based lexicographic position of `w` in Omega_n: sum of N(n-i) = b_{n-i+2} over set positions i.
inline std::uint64_t rank(const Word& w) {
    const int n = w.size();
    std::uint64_t r = 0;
    for (int i = 1; i <= n; ++i)
        if (w[i - 1] == 1) r += fibonacci_u64(n - i + 2);
    return r;
}

/// Inverse of `rank`: greedy Zeckendorf decomposition of r.
inline Word unrank(int n, std::uint64_t r) {
    if (n < 1) throw DomainError("unrank requires n >= 1");
    if (n > kMaxWordLength) throw ResourceError("word length exceeds " + std::to_string(kMaxWordLength));
    if (r >= fibonacci_u64(n + 2))
        throw DomainError("rank " + std::to_string(r) + " out of range for n = " + std::to_string(n));
    std::uint64_t bits = 0;
    int prev = 0;
    for (int i = 1; i <= n; ++i) {
        std::uint64_t weight = fibonacci_u64(n - i + 2);
        int digit = 0;
        if (prev == 0 && r >= weight) {
            digit = 1;
            r -= weight;
        }
        bits = (bits << 1) | static_cast<std::uint64_t>(digit);
        prev = digit;
    }
    return Word::from_bits(bits, n);
}

} // namespace goldenbeta
