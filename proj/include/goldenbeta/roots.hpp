#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "goldenbeta/golden_scalar.hpp"
#include "goldenbeta/polynomial.hpp"

namespace goldenbeta {

/// An isolating interval [lo, hi] around exactly one sign-changing root; lo == hi for exact roots.
struct RootBracket {
    GoldenScalar lo;
    GoldenScalar hi;

    bool exact() const { return lo == hi; }
    GoldenScalar midpoint() const { return exact() ? lo : (lo + hi) / Rational(2); }
    GoldenScalar width() const { return hi - lo; }
};

/// 10^-30, the default width for root brackets.
inline GoldenScalar default_root_tolerance() {
    return GoldenScalar(Rational(Integer(1), boost::multiprecision::pow(Integer(10), 30)), Rational(0));
}

namespace detail {

inline std::vector<Polynomial> sturm_sequence(const Polynomial& p) {
    std::vector<Polynomial> seq{p, p.derivative()};
    while (!seq.back().is_zero()) {
        Polynomial r = divmod(seq[seq.size() - 2], seq.back()).second;
        seq.push_back(-r);
    }
    seq.pop_back();
    return seq;
}

inline int sign_variations(const std::vector<Polynomial>& seq, const GoldenScalar& x) {
    int count = 0;
    int prev = 0;
    for (const auto& poly : seq) {
        int s = poly(x).sign();
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

/// Removes every factor (x - root) from p.
inline std::pair<Polynomial, int> deflate(Polynomial p, const GoldenScalar& root) {
    int multiplicity = 0;
    while (!p.is_zero() && p(root).is_zero()) {
        p = divmod(p, Polynomial::linear_factor(root)).first;
        ++multiplicity;
    }
    return {std::move(p), multiplicity};
}

inline void refine(const Polynomial& p, GoldenScalar lo, GoldenScalar hi, const GoldenScalar& tol,
                   std::vector<RootBracket>& out) {
    const int s_lo = p(lo).sign();
    while (hi - lo > tol) {
        GoldenScalar mid = (lo + hi) / Rational(2);
        int s = p(mid).sign();
        if (s == 0) {
            out.push_back({mid, mid});
            return;
        }
        if (s == s_lo)
            lo = std::move(mid);
        else
            hi = std::move(mid);
    }
    out.push_back({std::move(lo), std::move(hi)});
}

// Precondition: p(lo) != 0, p(hi) != 0, lo < hi.
inline void isolate(const Polynomial& p, const GoldenScalar& lo, const GoldenScalar& hi, const GoldenScalar& tol,
                    std::vector<RootBracket>& out) {
    if (p.degree() < 1) return;
    if (p.degree() == 1) {
        GoldenScalar root = -p.coefficient(0) / p.coefficient(1);
        if (lo < root && root < hi) out.push_back({root, root});
        return;
    }
    const auto seq = sturm_sequence(p);
    const int count = sign_variations(seq, lo) - sign_variations(seq, hi);
    if (count == 0) return;
    if (count == 1) {
        // A lone root without a sign change has even multiplicity and does not split |p|.
        if (p(lo).sign() != p(hi).sign()) refine(p, lo, hi, tol, out);
        return;
    }
    GoldenScalar mid = (lo + hi) / Rational(2);
    if (p(mid).is_zero()) {
        auto [reduced, multiplicity] = deflate(p, mid);
        isolate(reduced, lo, mid, tol, out);
        if (multiplicity % 2 == 1) out.push_back({mid, mid});
        isolate(reduced, mid, hi, tol, out);
        return;
    }
    isolate(p, lo, mid, tol, out);
    isolate(p, mid, hi, tol, out);
}

} // namespace detail

/// Sorted brackets of the roots in the open interval (a, b) where p changes sign.
///
/// Linear factors are solved exactly; otherwise roots are separated with Sturm
/// sequences and narrowed by exact-sign bisection until each bracket is at most `tol` wide.
inline std::vector<RootBracket> sign_change_roots(Polynomial p, const GoldenScalar& a, const GoldenScalar& b,
                                                  const GoldenScalar& tol = default_root_tolerance()) {
    std::vector<RootBracket> out;
    if (p.is_zero() || !(a < b)) return out;
    p = detail::deflate(std::move(p), a).first;
    p = detail::deflate(std::move(p), b).first;
    detail::isolate(p, a, b, tol, out);
    return out;
}

/// Integral of |p| over [a, b] with an exact error bound (zero when all sign changes are exact).
struct AbsIntegral {
    GoldenScalar value;
    GoldenScalar error;
};

inline AbsIntegral abs_integral(const Polynomial& p, const GoldenScalar& a, const GoldenScalar& b,
                                const GoldenScalar& tol = default_root_tolerance()) {
    AbsIntegral result;
    if (p.is_zero() || !(a < b)) return result;
    const auto roots = sign_change_roots(p, a, b, tol);
    const Polynomial prim = p.antiderivative();

    std::vector<GoldenScalar> cuts;
    cuts.reserve(roots.size() + 2);
    cuts.push_back(a);
    for (const auto& r : roots) cuts.push_back(r.midpoint());
    cuts.push_back(b);
    GoldenScalar prev = prim(cuts.front());
    for (std::size_t i = 1; i < cuts.size(); ++i) {
        GoldenScalar cur = prim(cuts[i]);
        result.value += abs(cur - prev);
        prev = std::move(cur);
    }

    // Each inexact cut r~ sits within w/2 of the true root r, so each of the two
    // neighbouring segments moves by at most (w/2) max|p| over the bracket, and
    // max|p| <= |p(r~)| + K w / 2 with K = sum k |c_k| bounding |p'| on [0, 1].
    GoldenScalar lipschitz;
    for (int k = 1; k <= p.degree(); ++k) lipschitz += abs(p.coefficient(k)) * Rational(k);
    for (const auto& r : roots) {
        if (r.exact()) continue;
        GoldenScalar w = r.width();
        result.error += w * (abs(p(r.midpoint())) + lipschitz * w / Rational(2));
    }
    return result;
}

} // namespace goldenbeta
