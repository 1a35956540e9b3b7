#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "goldenbeta/errors.hpp"
#include "goldenbeta/golden_scalar.hpp"
#include "goldenbeta/partition.hpp"
#include "goldenbeta/polynomial.hpp"
#include "goldenbeta/roots.hpp"
#include "goldenbeta/words.hpp"

namespace goldenbeta {

inline constexpr int kDefaultMaxDegree = 3;
inline constexpr int kDefaultDirectCap = 20;

/*
 * A function on [0,1) given by exact breakpoints 0 = t_0 < ... < t_m = 1 and a
 * polynomial on each left-closed piece [t_i, t_{i+1}).
 *
 * The representation is kept canonical: adjacent pieces carrying the same
 * polynomial are merged on construction, so two PiecewisePoly values compare
 * equal exactly when they describe the same function.
 */
class PiecewisePoly {
public:
    PiecewisePoly() : PiecewisePoly({GoldenScalar::zero(), GoldenScalar::one()}, {Polynomial{}}) {}

    PiecewisePoly(std::vector<GoldenScalar> breakpoints, std::vector<Polynomial> pieces)
        : breakpoints_(std::move(breakpoints)), pieces_(std::move(pieces)) {
        if (breakpoints_.size() < 2 || pieces_.size() + 1 != breakpoints_.size())
            throw ValidationError("piecewise polynomial needs m+1 breakpoints for m pieces");
        if (!breakpoints_.front().is_zero() || breakpoints_.back() != GoldenScalar::one())
            throw ValidationError("breakpoints must start at 0 and end at 1");
        for (std::size_t i = 0; i + 1 < breakpoints_.size(); ++i)
            if (!(breakpoints_[i] < breakpoints_[i + 1]))
                throw ValidationError("breakpoints must be strictly increasing (zero-width pieces are not allowed)");
        merge_equal_pieces();
    }

    static PiecewisePoly constant(GoldenScalar c) {
        return PiecewisePoly({GoldenScalar::zero(), GoldenScalar::one()}, {Polynomial::constant(std::move(c))});
    }

    const std::vector<GoldenScalar>& breakpoints() const { return breakpoints_; }
    const std::vector<Polynomial>& pieces() const { return pieces_; }
    std::size_t piece_count() const { return pieces_.size(); }

    int degree() const {
        int d = -1;
        for (const auto& p : pieces_) d = std::max(d, p.degree());
        return d;
    }

    /// Index of the piece owning x (left-closed); x = 1 maps to the last piece.
    std::size_t piece_index(const GoldenScalar& x) const {
        auto it = std::upper_bound(breakpoints_.begin() + 1, breakpoints_.end() - 1, x);
        return static_cast<std::size_t>(it - (breakpoints_.begin() + 1));
    }

    GoldenScalar operator()(const GoldenScalar& x) const {
        if (x.sign() < 0 || x > GoldenScalar::one()) throw DomainError("evaluation outside [0,1]: " + x.to_string());
        return pieces_[piece_index(x)](x);
    }

    GoldenScalar integral() const {
        GoldenScalar total;
        for (std::size_t i = 0; i < pieces_.size(); ++i) total += pieces_[i].integral(breakpoints_[i], breakpoints_[i + 1]);
        return total;
    }

    /// Nonnegative on [0,1): endpoint values are >= 0 and no piece changes sign in its interior.
    bool is_nonnegative() const {
        for (std::size_t i = 0; i < pieces_.size(); ++i) {
            const auto& p = pieces_[i];
            const auto& a = breakpoints_[i];
            const auto& b = breakpoints_[i + 1];
            if (p(a).sign() < 0 || p(b).sign() < 0) return false;
            if (!sign_change_roots(p, a, b, GoldenScalar::one()).empty()) return false;
            if (p.is_zero() || p(a).sign() > 0 || p(b).sign() > 0) continue;
            // Zero at both ends and no sign change: the interior sign is that of any non-root point.
            for (long den = 2;; ++den) {
                int s = p(a + (b - a) / Rational(den)).sign();
                if (s < 0) return false;
                if (s > 0) break;
            }
        }
        return true;
    }

    bool is_density() const { return integral() == GoldenScalar::one() && is_nonnegative(); }

    void require_density() const {
        if (integral() != GoldenScalar::one())
            throw ValidationError("not a density: integral is " + integral().to_string());
        if (!is_nonnegative()) throw ValidationError("not a density: negative somewhere on [0,1)");
    }

    void require_max_degree(int max_degree) const {
        if (degree() > max_degree)
            throw ResourceError("degree " + std::to_string(degree()) + " exceeds D_max = " + std::to_string(max_degree));
    }

    friend bool operator==(const PiecewisePoly&, const PiecewisePoly&) = default;

    /// Pointwise combination over the common refinement of both breakpoint sets.
    template <typename Op>
    static PiecewisePoly combine(const PiecewisePoly& f, const PiecewisePoly& g, Op op) {
        std::vector<GoldenScalar> merged;
        merged.reserve(f.breakpoints_.size() + g.breakpoints_.size());
        std::merge(f.breakpoints_.begin(), f.breakpoints_.end(), g.breakpoints_.begin(), g.breakpoints_.end(),
                   std::back_inserter(merged));
        merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
        std::vector<Polynomial> pieces;
        pieces.reserve(merged.size() - 1);
        for (std::size_t i = 0; i + 1 < merged.size(); ++i)
            pieces.push_back(op(f.pieces_[f.piece_index(merged[i])], g.pieces_[g.piece_index(merged[i])]));
        return PiecewisePoly(std::move(merged), std::move(pieces));
    }

    friend PiecewisePoly operator-(const PiecewisePoly& f, const PiecewisePoly& g) {
        return combine(f, g, [](const Polynomial& a, const Polynomial& b) { return a - b; });
    }
    friend PiecewisePoly operator+(const PiecewisePoly& f, const PiecewisePoly& g) {
        return combine(f, g, [](const Polynomial& a, const Polynomial& b) { return a + b; });
    }
    friend PiecewisePoly operator*(const GoldenScalar& s, PiecewisePoly f) {
        std::vector<Polynomial> pieces;
        for (const auto& p : f.pieces_) pieces.push_back(p * s);
        return PiecewisePoly(std::move(f.breakpoints_), std::move(pieces));
    }

private:
    void merge_equal_pieces() {
        std::vector<GoldenScalar> bps{breakpoints_.front()};
        std::vector<Polynomial> pcs{pieces_.front()};
        for (std::size_t i = 1; i < pieces_.size(); ++i) {
            if (pieces_[i] == pcs.back()) continue;
            bps.push_back(breakpoints_[i]);
            pcs.push_back(pieces_[i]);
        }
        bps.push_back(breakpoints_.back());
        breakpoints_ = std::move(bps);
        pieces_ = std::move(pcs);
    }

    std::vector<GoldenScalar> breakpoints_;
    std::vector<Polynomial> pieces_;
};

// ---- Built-in densities ----------------------------------------------------

inline PiecewisePoly uniform_density() { return PiecewisePoly::constant(GoldenScalar::one()); }

/// f(x) = 2x
inline PiecewisePoly linear_density() {
    return PiecewisePoly({GoldenScalar::zero(), GoldenScalar::one()}, {Polynomial({GoldenScalar(0), GoldenScalar(2)})});
}

/// f(x) = 3x^2
inline PiecewisePoly quadratic_density() {
    return PiecewisePoly({GoldenScalar::zero(), GoldenScalar::one()},
                         {Polynomial({GoldenScalar(0), GoldenScalar(0), GoldenScalar(3)})});
}

/// The invariant density: (1 + beta)/sqrt 5 on [0, 1/beta), beta/sqrt 5 on [1/beta, 1).
inline PiecewisePoly f_beta() {
    const GoldenScalar inv_sqrt5 = GoldenScalar::sqrt5().inverse();
    return PiecewisePoly({GoldenScalar::zero(), beta_inverse(), GoldenScalar::one()},
                         {Polynomial::constant((GoldenScalar::one() + GoldenScalar::beta()) * inv_sqrt5),
                          Polynomial::constant(GoldenScalar::beta() * inv_sqrt5)});
}

// ---- Pushforward ------------------------------------------------------------

/// f_n(x) = sum_{J in Omega_n} beta^{-n} f(L_{n,J} + x beta^{-n}) on [0, 1/beta) and the same sum over
/// words ending in 0 on [1/beta, 1), built term by term.
///
/// Each (word, piece of f) pair contributes one composed polynomial on an x-range; contributions are
/// accumulated with a difference array over the sorted output breakpoints.
inline PiecewisePoly pushforward_direct(const PiecewisePoly& f, int n, int cap = kDefaultDirectCap) {
    if (n < 1) throw DomainError("pushforward_direct requires n >= 1");
    if (n > cap) throw ResourceError("direct pushforward depth " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
    f.require_density();

    const GoldenScalar scale = pow_beta(-n);
    const GoldenScalar scale_inv = pow_beta(n);
    const GoldenScalar split = beta_inverse();
    const auto& fb = f.breakpoints();

    struct Term {
        GoldenScalar x_lo;
        GoldenScalar x_hi;
        Polynomial poly;
    };
    std::vector<Term> terms;
    std::vector<GoldenScalar> cuts{GoldenScalar::zero(), split, GoldenScalar::one()};

    for_each_word(n, [&](const Word& w) {
        const GoldenScalar left = left_endpoint(w);
        const GoldenScalar x_end = w.last() == 1 ? split : GoldenScalar::one();
        const GoldenScalar right = left + scale * x_end;
        std::size_t i = f.piece_index(left);
        for (; i < f.piece_count() && fb[i] < right; ++i) {
            GoldenScalar lo = fb[i] > left ? (fb[i] - left) * scale_inv : GoldenScalar::zero();
            GoldenScalar hi = fb[i + 1] < right ? (fb[i + 1] - left) * scale_inv : x_end;
            if (lo.sign() > 0) cuts.push_back(lo);
            if (hi < x_end) cuts.push_back(hi);
            terms.push_back({std::move(lo), std::move(hi), f.pieces()[i].compose_affine(left, scale) * scale});
        }
    });

    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    auto index_of = [&](const GoldenScalar& x) {
        return static_cast<std::size_t>(std::lower_bound(cuts.begin(), cuts.end(), x) - cuts.begin());
    };

    std::vector<Polynomial> delta(cuts.size());
    for (const auto& t : terms) {
        delta[index_of(t.x_lo)] += t.poly;
        delta[index_of(t.x_hi)] -= t.poly;
    }
    std::vector<Polynomial> pieces;
    pieces.reserve(cuts.size() - 1);
    Polynomial running;
    for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
        running += delta[k];
        pieces.push_back(running);
    }
    return PiecewisePoly(std::move(cuts), std::move(pieces));
}

/// One application of the transfer operator:
/// (Lf)(x) = f(x/beta)/beta + f((x+1)/beta)/beta * [x < 1/beta].
inline PiecewisePoly transfer_step(const PiecewisePoly& f, int max_degree = kDefaultMaxDegree) {
    f.require_max_degree(max_degree);
    f.require_density();

    const GoldenScalar inv = beta_inverse();
    const GoldenScalar b = GoldenScalar::beta();
    std::vector<GoldenScalar> cuts{GoldenScalar::zero(), inv, GoldenScalar::one()};
    for (const auto& t : f.breakpoints()) {
        if (t.is_zero() || t == GoldenScalar::one()) continue;
        cuts.push_back(t < inv ? b * t : b * t - GoldenScalar::one());
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    std::vector<Polynomial> pieces;
    pieces.reserve(cuts.size() - 1);
    for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
        const GoldenScalar& a = cuts[k];
        // Both branch images of [a, cuts[k+1]) lie inside single pieces of f.
        Polynomial piece = f.pieces()[f.piece_index(a * inv)].compose_affine(GoldenScalar::zero(), inv) * inv;
        if (a < inv) piece += f.pieces()[f.piece_index((a + GoldenScalar::one()) * inv)].compose_affine(inv, inv) * inv;
        pieces.push_back(std::move(piece));
    }
    return PiecewisePoly(std::move(cuts), std::move(pieces));
}

/// n-fold transfer_step.
inline PiecewisePoly transfer_power(PiecewisePoly f, int n, int max_degree = kDefaultMaxDegree) {
    if (n < 0) throw DomainError("transfer_power requires n >= 0");
    for (int k = 0; k < n; ++k) f = transfer_step(f, max_degree);
    return f;
}

// ---- CDFs ---------------------------------------------------------------------

/// Exact CDF F(y) = integral_0^y f, clamped to [0, F(1)] outside [0, 1].
class Cdf {
public:
    explicit Cdf(PiecewisePoly f) : f_(std::move(f)) {
        GoldenScalar acc;
        for (std::size_t i = 0; i < f_.piece_count(); ++i) {
            primitives_.push_back(f_.pieces()[i].antiderivative());
            offsets_.push_back(acc - primitives_.back()(f_.breakpoints()[i]));
            acc += f_.pieces()[i].integral(f_.breakpoints()[i], f_.breakpoints()[i + 1]);
        }
        total_ = std::move(acc);
    }

    GoldenScalar operator()(const GoldenScalar& y) const {
        if (y.sign() <= 0) return GoldenScalar::zero();
        if (!(y < GoldenScalar::one())) return total_;
        std::size_t i = f_.piece_index(y);
        return primitives_[i](y) + offsets_[i];
    }

    const PiecewisePoly& density() const { return f_; }

private:
    PiecewisePoly f_;
    std::vector<Polynomial> primitives_;
    std::vector<GoldenScalar> offsets_;
    GoldenScalar total_;
};

struct CdfValue {
    GoldenScalar x;
    GoldenScalar value;
};

/*
 * F_n(x) from the word sums
 *   x < 1/beta:  sum_J F(L_{n,J} + x beta^{-n}) - F(L_{n,J})
 *   x >= 1/beta: sum_J F(L_{n,J} + (1 - j_n) x beta^{-n} + j_n beta^{-n-1}) - F(L_{n,J})
 *
 * Left endpoints and F(L_{n,J}) are cached so the object can be evaluated at many points.
 */
class PushforwardCdf {
public:
    PushforwardCdf(const PiecewisePoly& f, int n, int cap = kDefaultDirectCap) : cdf_(f), n_(n) {
        if (n < 0) throw DomainError("pushforward CDF requires n >= 0");
        if (n > cap) throw ResourceError("CDF depth " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
        f.require_density();
        if (n == 0) return;
        scale_ = pow_beta(-n);
        short_ = pow_beta(-n - 1);
        for_each_word(n, [&](const Word& w) {
            lefts_.push_back(left_endpoint(w));
            base_.push_back(cdf_(lefts_.back()));
            ends_in_one_.push_back(static_cast<std::uint8_t>(w.last()));
        });
    }

    CdfValue operator()(const GoldenScalar& x) const {
        if (x.sign() < 0 || !(x < GoldenScalar::one())) throw DomainError("F_n requires 0 <= x < 1, got " + x.to_string());
        if (n_ == 0) return {x, cdf_(x)};
        const bool low = x < beta_inverse();
        const GoldenScalar step = x * scale_;
        GoldenScalar sum;
        for (std::size_t i = 0; i < lefts_.size(); ++i) {
            const GoldenScalar& arg_offset = (!low && ends_in_one_[i]) ? short_ : step;
            sum += cdf_(lefts_[i] + arg_offset) - base_[i];
        }
        return {x, std::move(sum)};
    }

    int depth() const { return n_; }

private:
    Cdf cdf_;
    int n_;
    GoldenScalar scale_;
    GoldenScalar short_;
    std::vector<GoldenScalar> lefts_;
    std::vector<GoldenScalar> base_;
    std::vector<std::uint8_t> ends_in_one_;
};

inline CdfValue cdf_pushforward(const PiecewisePoly& f, int n, const GoldenScalar& x, int cap = kDefaultDirectCap) {
    return PushforwardCdf(f, n, cap)(x);
}

// ---- Distances ----------------------------------------------------------------

/// An L1 or TV distance: exact when `error` is zero, otherwise the certified interval value +/- error.
struct Distance {
    GoldenScalar value;
    GoldenScalar error;

    bool exact() const { return error.is_zero(); }
    GoldenScalar lower() const { return value - error; }
    GoldenScalar upper() const { return value + error; }
};

/// ||f - g||_1, splitting each piece of f - g at its sign changes.
inline Distance l1_distance(const PiecewisePoly& f, const PiecewisePoly& g,
                            const GoldenScalar& tol = default_root_tolerance()) {
    const PiecewisePoly diff = f - g;
    Distance d;
    for (std::size_t i = 0; i < diff.piece_count(); ++i) {
        AbsIntegral part = abs_integral(diff.pieces()[i], diff.breakpoints()[i], diff.breakpoints()[i + 1], tol);
        d.value += part.value;
        d.error += part.error;
    }
    return d;
}

/// d_TV = ||f - g||_1 / 2.
inline Distance tv_distance(const PiecewisePoly& f, const PiecewisePoly& g,
                            const GoldenScalar& tol = default_root_tolerance()) {
    Distance d = l1_distance(f, g, tol);
    d.value /= Rational(2);
    d.error /= Rational(2);
    return d;
}

} // namespace goldenbeta
