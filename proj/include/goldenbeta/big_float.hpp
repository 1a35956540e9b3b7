#pragma once

#include <mpfr.h>

#include <cstdint>
#include <string>
#include <utility>

#include "goldenbeta/rational.hpp"

namespace goldenbeta {

/// Owning MPFR value with a fixed precision in bits.
class BigFloat {
public:
    explicit BigFloat(mpfr_prec_t bits = 53) {
        mpfr_init2(value_, bits);
        mpfr_set_zero(value_, 1);
    }
    BigFloat(const BigFloat& other) {
        mpfr_init2(value_, mpfr_get_prec(other.value_));
        mpfr_set(value_, other.value_, MPFR_RNDN);
    }
    BigFloat(BigFloat&& other) noexcept {
        mpfr_init2(value_, mpfr_get_prec(other.value_));
        mpfr_swap(value_, other.value_);
    }
    BigFloat& operator=(BigFloat other) noexcept {
        mpfr_swap(value_, other.value_);
        return *this;
    }
    ~BigFloat() { mpfr_clear(value_); }

    /// Correctly rounded (nearest) conversion of an exact rational.
    static BigFloat from_rational(const Rational& r, mpfr_prec_t bits) {
        BigFloat out(bits);
        mpfr_set_q(out.value_, r.backend().data(), MPFR_RNDN);
        return out;
    }

    mpfr_ptr get() { return value_; }
    mpfr_srcptr get() const { return value_; }
    mpfr_prec_t precision() const { return mpfr_get_prec(value_); }
    bool is_zero() const { return mpfr_zero_p(value_) != 0; }

    double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

    /// The exact dyadic rational this value represents.
    Rational to_rational() const {
        if (is_zero()) return Rational(0);
        Integer mantissa;
        mpfr_exp_t e = mpfr_get_z_2exp(mantissa.backend().data(), value_);
        Rational out(mantissa);
        if (e >= 0)
            out *= Rational(Integer(1) << static_cast<unsigned>(e));
        else
            out /= Rational(Integer(1) << static_cast<unsigned>(-e));
        return out;
    }

    /// `digits` significant decimal digits, %g style.
    std::string to_string(int digits = 20) const {
        char* raw = nullptr;
        std::string fmt = "%." + std::to_string(digits > 1 ? digits : 1) + "Rg";
        mpfr_asprintf(&raw, fmt.c_str(), value_);
        std::string out(raw);
        mpfr_free_str(raw);
        return out;
    }

private:
    mpfr_t value_;
};

} // namespace goldenbeta
