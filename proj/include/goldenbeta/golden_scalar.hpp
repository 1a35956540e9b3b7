#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <utility>

#include "goldenbeta/big_float.hpp"
#include "goldenbeta/errors.hpp"
#include "goldenbeta/rational.hpp"

namespace goldenbeta {

/*
 * Exact elements p + q*beta of the quadratic field Q(beta), beta = (1 + sqrt 5)/2.
 *
 * The pair (p, q) is unique for each field element because beta is irrational,
 * so equality is componentwise. Products are reduced with beta^2 = beta + 1.
 * Ordering is decided exactly: p + q*beta = ((2p + q) + q*sqrt 5) / 2, whose sign
 * follows from comparing (2p + q)^2 against 5 q^2.
 */
class GoldenScalar {
public:
    GoldenScalar() = default;
    GoldenScalar(Rational p, Rational q) : p_(std::move(p)), q_(std::move(q)) {}
    GoldenScalar(const Rational& p) : p_(p) {}  // NOLINT: implicit embedding Q -> Q(beta)
    GoldenScalar(int p) : p_(p) {}               // NOLINT
    GoldenScalar(long p) : p_(p) {}              // NOLINT
    GoldenScalar(long long p) : p_(p) {}         // NOLINT

    static GoldenScalar zero() { return {}; }
    static GoldenScalar one() { return GoldenScalar(Rational(1), Rational(0)); }
    static GoldenScalar beta() { return GoldenScalar(Rational(0), Rational(1)); }
    /// sqrt 5 = 2*beta - 1.
    static GoldenScalar sqrt5() { return GoldenScalar(Rational(-1), Rational(2)); }

    const Rational& p() const { return p_; }
    const Rational& q() const { return q_; }

    bool is_zero() const { return p_ == 0 && q_ == 0; }
    bool is_rational() const { return q_ == 0; }

    GoldenScalar& operator+=(const GoldenScalar& o) {
        p_ += o.p_;
        q_ += o.q_;
        return *this;
    }
    GoldenScalar& operator-=(const GoldenScalar& o) {
        p_ -= o.p_;
        q_ -= o.q_;
        return *this;
    }
    GoldenScalar& operator*=(const GoldenScalar& o) {
        // (p1 + q1 b)(p2 + q2 b) = p1 p2 + q1 q2 + (p1 q2 + q1 p2 + q1 q2) b
        Rational qq = q_ * o.q_;
        Rational np = p_ * o.p_ + qq;
        Rational nq = p_ * o.q_ + q_ * o.p_ + qq;
        p_ = std::move(np);
        q_ = std::move(nq);
        return *this;
    }
    GoldenScalar& operator/=(const GoldenScalar& o) { return *this *= o.inverse(); }

    GoldenScalar& operator*=(const Rational& r) {
        p_ *= r;
        q_ *= r;
        return *this;
    }
    GoldenScalar& operator/=(const Rational& r) {
        if (r == 0) throw DomainError("division by zero");
        p_ /= r;
        q_ /= r;
        return *this;
    }

    friend GoldenScalar operator+(GoldenScalar a, const GoldenScalar& b) { return a += b; }
    friend GoldenScalar operator-(GoldenScalar a, const GoldenScalar& b) { return a -= b; }
    friend GoldenScalar operator*(GoldenScalar a, const GoldenScalar& b) { return a *= b; }
    friend GoldenScalar operator/(GoldenScalar a, const GoldenScalar& b) { return a /= b; }
    friend GoldenScalar operator*(GoldenScalar a, const Rational& r) { return a *= r; }
    friend GoldenScalar operator*(const Rational& r, GoldenScalar a) { return a *= r; }
    friend GoldenScalar operator/(GoldenScalar a, const Rational& r) { return a /= r; }
    GoldenScalar operator-() const { return GoldenScalar(Rational(-p_), Rational(-q_)); }

    /// Field inverse via the conjugate p + q - q*beta; the norm p^2 + pq - q^2 vanishes only at zero.
    GoldenScalar inverse() const {
        if (is_zero()) throw DomainError("inverse of zero in Q(beta)");
        Rational norm = p_ * p_ + p_ * q_ - q_ * q_;
        return GoldenScalar(Rational((p_ + q_) / norm), Rational(-q_ / norm));
    }

    /// Exact sign in {-1, 0, +1}.
    int sign() const {
        Rational a = 2 * p_ + q_;
        int sa = a.sign();
        int sq = q_.sign();
        if (sa >= 0 && sq >= 0) return (sa > 0 || sq > 0) ? 1 : 0;
        if (sa <= 0 && sq <= 0) return -1;
        // Opposite signs: compare a^2 with 5 q^2 (never equal, sqrt 5 is irrational).
        Rational lhs = a * a;
        Rational rhs = 5 * q_ * q_;
        if (sa > 0) return lhs > rhs ? 1 : -1;
        return rhs > lhs ? 1 : -1;
    }

    friend bool operator==(const GoldenScalar& a, const GoldenScalar& b) { return a.p_ == b.p_ && a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const GoldenScalar& a, const GoldenScalar& b) {
        int s = (a - b).sign();
        return s < 0 ? std::strong_ordering::less : s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

    /// Largest numerator/denominator bit length among both components.
    std::size_t bit_size() const {
        std::size_t a = rational_bits(p_);
        std::size_t b = rational_bits(q_);
        return a > b ? a : b;
    }

    std::string to_string() const { return "(" + rational_to_string(p_) + ", " + rational_to_string(q_) + ")"; }

    friend std::ostream& operator<<(std::ostream& os, const GoldenScalar& a) { return os << a.to_string(); }

private:
    Rational p_;
    Rational q_;
};

inline GoldenScalar inverse(const GoldenScalar& a) { return a.inverse(); }
inline int sign(const GoldenScalar& a) { return a.sign(); }
inline GoldenScalar abs(const GoldenScalar& a) { return a.sign() < 0 ? -a : a; }
inline const GoldenScalar& min(const GoldenScalar& a, const GoldenScalar& b) { return b < a ? b : a; }
inline const GoldenScalar& max(const GoldenScalar& a, const GoldenScalar& b) { return a < b ? b : a; }

/// Exact beta^k for any integer k, by square-and-multiply on beta or beta^-1 = beta - 1.
inline GoldenScalar pow_beta(long long k) {
    GoldenScalar base = k >= 0 ? GoldenScalar::beta() : GoldenScalar(Rational(-1), Rational(1));
    unsigned long long e = k >= 0 ? static_cast<unsigned long long>(k) : static_cast<unsigned long long>(-(k + 1)) + 1;
    GoldenScalar result = GoldenScalar::one();
    while (e != 0) {
        if (e & 1ULL) result *= base;
        e >>= 1;
        if (e != 0) base *= base;
    }
    return result;
}

/// beta^-1 = beta - 1.
inline GoldenScalar beta_inverse() { return GoldenScalar(Rational(-1), Rational(1)); }

/// Correctly rounded (round-to-nearest) binary approximation of `a` with `bits` of precision.
///
/// An MPFR estimate proposes a candidate, which is certified by exact comparisons of `a`
/// against the half-way points to its neighbours. The working precision doubles until the
/// candidate is certified (cancellation between p and q*beta can eat many bits).
inline BigFloat to_float(const GoldenScalar& a, mpfr_prec_t bits = 53) {
    if (a.is_rational()) return BigFloat::from_rational(a.p(), bits);

    for (mpfr_prec_t work = bits + 64;; work *= 2) {
        BigFloat root5(work);
        mpfr_set_ui(root5.get(), 5, MPFR_RNDN);
        mpfr_sqrt(root5.get(), root5.get(), MPFR_RNDN);
        BigFloat estimate = BigFloat::from_rational(Rational(2 * a.p() + a.q()), work);
        BigFloat qs = BigFloat::from_rational(a.q(), work);
        mpfr_mul(qs.get(), qs.get(), root5.get(), MPFR_RNDN);
        mpfr_add(estimate.get(), estimate.get(), qs.get(), MPFR_RNDN);
        mpfr_div_2ui(estimate.get(), estimate.get(), 1, MPFR_RNDN);

        BigFloat candidate(bits);
        mpfr_set(candidate.get(), estimate.get(), MPFR_RNDN);
        if (candidate.is_zero()) continue;
        BigFloat below = candidate;
        BigFloat above = candidate;
        mpfr_nextbelow(below.get());
        mpfr_nextabove(above.get());
        const Rational c = candidate.to_rational();
        const GoldenScalar low_mid((c + below.to_rational()) / 2, Rational(0));
        const GoldenScalar high_mid((c + above.to_rational()) / 2, Rational(0));
        if (low_mid <= a && a <= high_mid) return candidate;
    }
}

inline double to_double(const GoldenScalar& a) { return to_float(a, 53).to_double(); }

} // namespace goldenbeta
