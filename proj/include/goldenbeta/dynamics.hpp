#pragma once

#include <cstddef>
#include <cstdint>
#include <numbers>
#include <string>
#include <string_view>
#include <vector>

#include "goldenbeta/errors.hpp"
#include "goldenbeta/golden_scalar.hpp"
#include "goldenbeta/partition.hpp"
#include "goldenbeta/words.hpp"

namespace goldenbeta {

inline constexpr std::size_t kDefaultBitGuard = 1'000'000;
inline constexpr int kDefaultFloatDepthCap = 30;

namespace detail {

inline void require_unit_interval(const GoldenScalar& x) {
    if (x.sign() < 0 || !(x < GoldenScalar::one()))
        throw DomainError("expected 0 <= x < 1, got " + x.to_string());
}

inline void check_bits(const GoldenScalar& x, std::size_t guard) {
    if (x.bit_size() > guard)
        throw ResourceError("exact iterate exceeds bit-size guard of " + std::to_string(guard) + " bits");
}

} // namespace detail

/// One greedy step: digit floor(beta x) in {0, 1} and the remainder beta x - digit.
struct BetaStep {
    int digit;
    GoldenScalar remainder;
};

inline BetaStep beta_step(const GoldenScalar& x) {
    GoldenScalar y = x * GoldenScalar::beta();
    // beta x < beta < 2 on [0,1), so the floor is decided by the single comparison beta x < 1.
    if (y < GoldenScalar::one()) return {0, std::move(y)};
    return {1, y - GoldenScalar::one()};
}

/// T_beta(x) = beta x - floor(beta x).
inline GoldenScalar t_beta(const GoldenScalar& x) {
    detail::require_unit_interval(x);
    return beta_step(x).remainder;
}

/*
 * Lazily extended greedy expansion X_1, X_2, ... of an exact point.
 *
 * Keeps the current remainder T_beta^k(x), so after k digits
 * x = sum_{i<=k} X_i beta^{-i} + beta^{-k} remainder().
 */
class DigitStream {
public:
    explicit DigitStream(GoldenScalar x, std::size_t bit_guard = kDefaultBitGuard)
        : source_(x), remainder_(std::move(x)), bit_guard_(bit_guard) {
        detail::require_unit_interval(remainder_);
    }

    int next() {
        BetaStep step = beta_step(remainder_);
        detail::check_bits(step.remainder, bit_guard_);
        if (step.digit == 1 && !digits_.empty() && digits_.back() == 1)
            throw std::logic_error("exact expansion produced adjacent ones");
        remainder_ = std::move(step.remainder);
        digits_.push_back(static_cast<std::uint8_t>(step.digit));
        return step.digit;
    }

    /// Extends the stream to at least n digits.
    void extend_to(std::size_t n) {
        while (digits_.size() < n) next();
    }

    const GoldenScalar& source() const { return source_; }
    const GoldenScalar& remainder() const { return remainder_; }
    const std::vector<std::uint8_t>& digits() const { return digits_; }
    std::size_t size() const { return digits_.size(); }

    std::string to_string() const {
        std::string s;
        s.reserve(digits_.size());
        for (auto d : digits_) s.push_back(d ? '1' : '0');
        return s;
    }

    /// The first n digits as a Word (n <= kMaxWordLength).
    Word prefix(int n) {
        if (n < 1) throw DomainError("prefix length must be >= 1");
        extend_to(static_cast<std::size_t>(n));
        std::uint64_t bits = 0;
        for (int i = 0; i < n; ++i) bits = (bits << 1) | digits_[static_cast<std::size_t>(i)];
        return Word::from_bits(bits, n);
    }

private:
    GoldenScalar source_;
    GoldenScalar remainder_;
    std::vector<std::uint8_t> digits_;
    std::size_t bit_guard_;
};

/// First n digits of the greedy expansion of x.
inline Word digits(const GoldenScalar& x, int n, std::size_t bit_guard = kDefaultBitGuard) {
    DigitStream stream(x, bit_guard);
    return stream.prefix(n);
}

/// T_beta^n(x), exactly.
inline GoldenScalar iterate(const GoldenScalar& x, int n, std::size_t bit_guard = kDefaultBitGuard) {
    if (n < 0) throw DomainError("iterate requires n >= 0");
    detail::require_unit_interval(x);
    GoldenScalar y = x;
    for (int k = 0; k < n; ++k) {
        y = beta_step(y).remainder;
        detail::check_bits(y, bit_guard);
    }
    return y;
}

/// sum_k j_k beta^{-k} for an admissible word.
inline GoldenScalar decode(const Word& w) {
    const auto& powers = detail::inverse_beta_powers();
    GoldenScalar sum;
    for (int k = w.size(); k >= 1; --k)
        if (w[k - 1] == 1) sum += powers[static_cast<std::size_t>(k)];
    return sum;
}

/// Decodes an ASCII bit string; inadmissible strings are rejected.
inline GoldenScalar decode(std::string_view bits) { return decode(Word::from_string(bits)); }

// Floating-point fast path. Rounding errors are amplified by roughly beta per step,
// so depth is capped and adjacent ones are reported as precision exhaustion.

inline double t_beta_float(double x) {
    if (!(x >= 0.0 && x < 1.0)) throw DomainError("expected 0 <= x < 1, got " + std::to_string(x));
    double y = x * std::numbers::phi;
    return y >= 1.0 ? y - 1.0 : y;
}

/// Float digits with the admissibility invariant enforced.
inline Word digits_float(double x, int n, int depth_cap = kDefaultFloatDepthCap) {
    if (!(x >= 0.0 && x < 1.0)) throw DomainError("expected 0 <= x < 1, got " + std::to_string(x));
    if (n < 1) throw DomainError("digits_float requires n >= 1");
    if (n > depth_cap)
        throw PrecisionError("float depth " + std::to_string(n) + " exceeds cap " + std::to_string(depth_cap));
    std::uint64_t bits = 0;
    int prev = 0;
    for (int k = 0; k < n; ++k) {
        double y = x * std::numbers::phi;
        int d = y >= 1.0 ? 1 : 0;
        if (d == 1 && prev == 1) throw PrecisionError("float expansion produced adjacent ones at digit " + std::to_string(k + 1));
        x = y - d;
        bits = (bits << 1) | static_cast<std::uint64_t>(d);
        prev = d;
    }
    return Word::from_bits(bits, n);
}

/// T_beta^n(x) in floating point, with the same admissibility and depth checks as digits_float.
inline double iterate_float(double x, int n, int depth_cap = kDefaultFloatDepthCap) {
    if (!(x >= 0.0 && x < 1.0)) throw DomainError("expected 0 <= x < 1, got " + std::to_string(x));
    if (n > depth_cap)
        throw PrecisionError("float depth " + std::to_string(n) + " exceeds cap " + std::to_string(depth_cap));
    int prev = 0;
    for (int k = 0; k < n; ++k) {
        double y = x * std::numbers::phi;
        int d = y >= 1.0 ? 1 : 0;
        if (d == 1 && prev == 1) throw PrecisionError("float expansion produced adjacent ones at digit " + std::to_string(k + 1));
        x = y - d;
        prev = d;
    }
    return x;
}

} // namespace goldenbeta
