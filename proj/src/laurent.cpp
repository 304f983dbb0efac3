#include "rflamp/laurent.hpp"

namespace rflamp {

LaurentPoly::LaurentPoly(Poly f, std::int64_t extra_valuation) : unit_(f.prime()), val_(0) {
    if (f.is_zero()) return;
    std::size_t shift = 0;
    while (f.coeff(shift) == 0) ++shift;
    if (shift) {
        std::vector<std::int64_t> c(f.coeffs().begin() + static_cast<std::ptrdiff_t>(shift),
                                    f.coeffs().end());
        unit_ = Poly(f.prime(), std::move(c));
    } else {
        unit_ = std::move(f);
    }
    val_ = extra_valuation + static_cast<std::int64_t>(shift);
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    std::int64_t v = std::min(a.val_, b.val_);
    Poly pa = shift_up(a.unit_, static_cast<std::size_t>(a.val_ - v));
    Poly pb = shift_up(b.unit_, static_cast<std::size_t>(b.val_ - v));
    return LaurentPoly(pa + pb, v);
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return LaurentPoly::zero(a.prime());
    return LaurentPoly(a.unit_ * b.unit_, a.val_ + b.val_);
}

}  // namespace rflamp
