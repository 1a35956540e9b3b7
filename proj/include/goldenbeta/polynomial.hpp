#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "goldenbeta/errors.hpp"
#include "goldenbeta/golden_scalar.hpp"

namespace goldenbeta {

/// Polynomial with Q(beta) coefficients in ascending degree; trailing zeros are always trimmed.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(std::initializer_list<GoldenScalar> coeffs) : coeffs_(coeffs) { trim(); }
    explicit Polynomial(std::vector<GoldenScalar> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static Polynomial constant(GoldenScalar c) { return Polynomial(std::vector<GoldenScalar>{std::move(c)}); }
    /// x - root
    static Polynomial linear_factor(const GoldenScalar& root) { return Polynomial({-root, GoldenScalar::one()}); }

    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<GoldenScalar>& coefficients() const { return coeffs_; }
    GoldenScalar coefficient(int k) const {
        return k >= 0 && k < static_cast<int>(coeffs_.size()) ? coeffs_[static_cast<std::size_t>(k)] : GoldenScalar{};
    }
    const GoldenScalar& leading() const { return coeffs_.back(); }

    GoldenScalar operator()(const GoldenScalar& x) const {
        GoldenScalar acc;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            acc *= x;
            acc += *it;
        }
        return acc;
    }

    Polynomial& operator+=(const Polynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        trim();
        return *this;
    }
    Polynomial& operator*=(const GoldenScalar& s) {
        for (auto& c : coeffs_) c *= s;
        trim();
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const GoldenScalar& s) { return a *= s; }
    friend Polynomial operator*(const GoldenScalar& s, Polynomial a) { return a *= s; }
    Polynomial operator-() const { return *this * GoldenScalar(-1); }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<GoldenScalar> out(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return Polynomial(std::move(out));
    }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    /// p(shift + scale * x).
    Polynomial compose_affine(const GoldenScalar& shift, const GoldenScalar& scale) const {
        const Polynomial inner({shift, scale});
        Polynomial acc;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            acc = acc * inner;
            acc += constant(*it);
        }
        return acc;
    }

    Polynomial derivative() const {
        if (coeffs_.size() <= 1) return {};
        std::vector<GoldenScalar> out(coeffs_.size() - 1);
        for (std::size_t k = 1; k < coeffs_.size(); ++k) out[k - 1] = coeffs_[k] * Rational(static_cast<long>(k));
        return Polynomial(std::move(out));
    }

    /// Antiderivative vanishing at 0.
    Polynomial antiderivative() const {
        if (coeffs_.empty()) return {};
        std::vector<GoldenScalar> out(coeffs_.size() + 1);
        for (std::size_t k = 0; k < coeffs_.size(); ++k) out[k + 1] = coeffs_[k] / Rational(static_cast<long>(k + 1));
        return Polynomial(std::move(out));
    }

    /// Exact integral over [a, b].
    GoldenScalar integral(const GoldenScalar& a, const GoldenScalar& b) const {
        Polynomial prim = antiderivative();
        return prim(b) - prim(a);
    }

    std::string to_string() const {
        if (coeffs_.empty()) return "0";
        std::string s;
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            if (k) s += " + ";
            s += coeffs_[k].to_string();
            if (k) s += "*x^" + std::to_string(k);
        }
        return s;
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    std::vector<GoldenScalar> coeffs_;
};

/// Euclidean division over the field Q(beta): a = quotient * b + remainder.
inline std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    std::vector<GoldenScalar> rem = a.coefficients();
    const int db = b.degree();
    const GoldenScalar lead_inv = b.leading().inverse();
    std::vector<GoldenScalar> quot(rem.size() > static_cast<std::size_t>(db) ? rem.size() - static_cast<std::size_t>(db) : 0);
    for (int k = static_cast<int>(rem.size()) - 1; k >= db; --k) {
        GoldenScalar factor = rem[static_cast<std::size_t>(k)] * lead_inv;
        if (factor.is_zero()) continue;
        quot[static_cast<std::size_t>(k - db)] = factor;
        for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k - db + j)] -= factor * b.coefficients()[static_cast<std::size_t>(j)];
    }
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

} // namespace goldenbeta
