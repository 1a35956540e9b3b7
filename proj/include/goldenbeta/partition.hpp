#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "goldenbeta/errors.hpp"
#include "goldenbeta/golden_scalar.hpp"
#include "goldenbeta/words.hpp"

namespace goldenbeta {

namespace detail {

/// beta^{-k} for k = 0 .. kMaxWordLength + 1.
inline const std::vector<GoldenScalar>& inverse_beta_powers() {
    static const std::vector<GoldenScalar> table = [] {
        std::vector<GoldenScalar> t;
        t.reserve(kMaxWordLength + 2);
        GoldenScalar v = GoldenScalar::one();
        for (int k = 0; k <= kMaxWordLength + 1; ++k) {
            t.push_back(v);
            v *= beta_inverse();
        }
        return t;
    }();
    return table;
}

} // namespace detail

/// L_{n,J} = sum_k j_k beta^{-k}.
inline GoldenScalar left_endpoint(const Word& w) {
    const auto& powers = detail::inverse_beta_powers();
    GoldenScalar sum;
    for (int k = 1; k <= w.size(); ++k)
        if (w[k - 1] == 1) sum += powers[static_cast<std::size_t>(k)];
    return sum;
}

/// |I_{n,J}|: beta^{-n-1} when the word ends in 1, beta^{-n} otherwise.
inline GoldenScalar interval_length(const Word& w) {
    const int exponent = w.size() + (w.last() == 1 ? 1 : 0);
    return detail::inverse_beta_powers()[static_cast<std::size_t>(exponent)];
}

/// The half-open interval I_{n,J} = [L_{n,J}, L_{n,J} + length).
struct IntervalNJ {
    Word word;
    GoldenScalar left;
    GoldenScalar length;

    GoldenScalar right() const { return left + length; }
    /// n or n+1: length == beta^{-length_exponent}.
    int length_exponent() const { return word.size() + word.last(); }
    bool contains(const GoldenScalar& x) const { return left <= x && x < right(); }
};

inline IntervalNJ make_interval(const Word& w) { return {w, left_endpoint(w), interval_length(w)}; }

/// The partition {I_{n,J} : J in Omega_n} of [0,1), in increasing order of left endpoint.
inline std::vector<IntervalNJ> build_partition(int n, int cap = kDefaultEnumerationCap) {
    std::vector<IntervalNJ> out;
    for (const Word& w : enumerate(n, cap)) out.push_back(make_interval(w));
    return out;
}

/// The word J in Omega_n with x in I_{n,J}, by binary search over ranks (Omega_n is never materialized).
inline Word locate(const GoldenScalar& x, int n) {
    if (x.sign() < 0 || x >= GoldenScalar::one()) throw DomainError("locate requires 0 <= x < 1, got " + x.to_string());
    if (n < 1) throw DomainError("locate requires n >= 1");
    std::uint64_t lo = 0;
    std::uint64_t hi = fibonacci_u64(n + 2);  // invariant: L(lo) <= x, and hi is past the answer
    while (hi - lo > 1) {
        std::uint64_t mid = lo + (hi - lo) / 2;
        if (left_endpoint(unrank(n, mid)) <= x)
            lo = mid;
        else
            hi = mid;
    }
    return unrank(n, lo);
}

/// Binary search in an already built partition.
inline const IntervalNJ& locate(const GoldenScalar& x, const std::vector<IntervalNJ>& partition) {
    if (partition.empty()) throw DomainError("empty partition");
    if (x.sign() < 0 || x >= GoldenScalar::one()) throw DomainError("locate requires 0 <= x < 1, got " + x.to_string());
    std::size_t lo = 0;
    std::size_t hi = partition.size();
    while (hi - lo > 1) {
        std::size_t mid = lo + (hi - lo) / 2;
        if (partition[mid].left <= x)
            lo = mid;
        else
            hi = mid;
    }
    return partition[lo];
}

struct EndpointIdentityReport {
    int n = 0;
    std::uint64_t words_checked = 0;
    bool max_word_identity = false;  // L_{n,Jhat} + |I_{n,Jhat}| == 1
    std::vector<Word> violations;    // words J whose successor identity failed

    bool ok() const { return max_word_identity && violations.empty(); }
};

/// Checks L_{n,J'} = L_{n,J} + j_n beta^{-n-1} + (1 - j_n) beta^{-n} < 1 along the successor chain,
/// and L_{n,Jhat} + |I_{n,Jhat}| = 1 for the maximal word.
inline EndpointIdentityReport verify_endpoint_identities(int n, int cap = kDefaultEnumerationCap) {
    if (n < 1) throw DomainError("verify_endpoint_identities requires n >= 1");
    if (n > cap) throw ResourceError("depth " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
    const auto& powers = detail::inverse_beta_powers();
    const GoldenScalar& short_len = powers[static_cast<std::size_t>(n + 1)];
    const GoldenScalar& long_len = powers[static_cast<std::size_t>(n)];

    EndpointIdentityReport report;
    report.n = n;
    Word current = Word::zeros(n);
    GoldenScalar current_left = left_endpoint(current);
    for (;;) {
        ++report.words_checked;
        auto next = successor(current);
        if (!next) break;
        GoldenScalar predicted = current_left + (current.last() == 1 ? short_len : long_len);
        GoldenScalar actual = left_endpoint(*next);
        if (predicted != actual || !(actual < GoldenScalar::one())) report.violations.push_back(current);
        current = *next;
        current_left = std::move(actual);
    }
    const Word hat = max_word(n);
    report.max_word_identity = current == hat && left_endpoint(hat) + interval_length(hat) == GoldenScalar::one();
    return report;
}

} // namespace goldenbeta
