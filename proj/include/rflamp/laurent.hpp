#ifndef RFLAMP_LAURENT_HPP
#define RFLAMP_LAURENT_HPP

#include <cstdint>

#include "rflamp/poly.hpp"

namespace rflamp {

/// Element of F_p[t, 1/t], stored as t^valuation * unit_part with
/// unit_part(0) != 0; zero is (zero poly, valuation 0). The representation
/// is unique.
class LaurentPoly {
public:
    explicit LaurentPoly(Prime p) : unit_(Poly::zero(p)), val_(0) {}

    /// normalizes by factoring out the trailing power of t
    LaurentPoly(Poly f, std::int64_t extra_valuation = 0);

    static LaurentPoly zero(Prime p) { return LaurentPoly(p); }
    static LaurentPoly one(Prime p) { return LaurentPoly(Poly::one(p)); }
    /// t^k for any integer k
    static LaurentPoly t_power(Prime p, std::int64_t k) { return LaurentPoly(Poly::one(p), k); }

    const Prime& prime() const noexcept { return unit_.prime(); }
    coeff_t modulus() const noexcept { return unit_.modulus(); }

    bool is_zero() const noexcept { return unit_.is_zero(); }
    const Poly& unit_part() const noexcept { return unit_; }
    std::int64_t valuation() const noexcept { return val_; }
    /// largest exponent with nonzero coefficient (zero input: valuation)
    std::int64_t top_exponent() const noexcept {
        return val_ + (unit_.degree() ? *unit_.degree() : 0);
    }
    coeff_t coeff_at(std::int64_t exponent) const noexcept {
        if (is_zero() || exponent < val_) return 0;
        return unit_.coeff(static_cast<std::size_t>(exponent - val_));
    }

    LaurentPoly operator-() const { return compose_raw(-unit_, val_); }
    /// multiply by t^k
    LaurentPoly shifted(std::int64_t k) const { return compose_raw(unit_, val_ + k); }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.unit_ == b.unit_ && (a.is_zero() || a.val_ == b.val_);
    }

private:
    Poly unit_;
    std::int64_t val_;

    static LaurentPoly compose_raw(Poly unit, std::int64_t val) {
        LaurentPoly r(unit.prime());
        if (!unit.is_zero()) {
            r.unit_ = std::move(unit);
            r.val_ = val;
        }
        return r;
    }
};

}  // namespace rflamp

#endif
