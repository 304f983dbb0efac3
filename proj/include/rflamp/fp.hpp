#ifndef RFLAMP_FP_HPP
#define RFLAMP_FP_HPP

#include <cstdint>

#include "rflamp/errors.hpp"

namespace rflamp {

using coeff_t = std::uint32_t;

/// A prime p, validated at construction by trial division, with the
/// arithmetic of F_p = Z/p.
class Prime {
public:
    explicit Prime(coeff_t p) : p_(p) {
        if (p < 2) throw precondition_error("modulus must be >= 2");
        for (coeff_t d = 2; d * d <= p; ++d)
            if (p % d == 0) throw precondition_error("modulus " + std::to_string(p) + " is not prime");
    }

    coeff_t value() const noexcept { return p_; }

    coeff_t add(coeff_t a, coeff_t b) const noexcept {
        coeff_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    coeff_t sub(coeff_t a, coeff_t b) const noexcept { return a >= b ? a - b : a + p_ - b; }
    coeff_t neg(coeff_t a) const noexcept { return a == 0 ? 0 : p_ - a; }
    coeff_t mul(coeff_t a, coeff_t b) const noexcept {
        return static_cast<coeff_t>(std::uint64_t(a) * b % p_);
    }
    coeff_t pow(coeff_t a, std::uint64_t e) const noexcept {
        coeff_t r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    coeff_t inv(coeff_t a) const {
        if (a == 0) throw precondition_error("inverse of zero in F_p");
        return pow(a, p_ - 2);
    }
    coeff_t reduce(std::int64_t v) const noexcept {
        std::int64_t r = v % p_;
        return static_cast<coeff_t>(r < 0 ? r + p_ : r);
    }

    friend bool operator==(const Prime&, const Prime&) = default;

private:
    coeff_t p_;
};

// p^e as int64 with an overflow guard; orders and degrees in this library
// stay far below the limit.
std::int64_t checked_pow(std::int64_t base, std::int64_t exp, std::int64_t limit = (std::int64_t(1) << 60));

}  // namespace rflamp

#endif
