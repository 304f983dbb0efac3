#ifndef RFLAMP_POLY_HPP
#define RFLAMP_POLY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rflamp/fp.hpp"

namespace rflamp {

/// Dense polynomial over F_p, coefficients ascending by exponent.
///
/// Canonical form: the highest stored coefficient is nonzero, or the
/// coefficient vector is empty (the zero polynomial). The degree of the
/// zero polynomial is not an integer; degree() returns nullopt for it.
class Poly {
public:
    explicit Poly(Prime p) : p_(p) {}
    Poly(Prime p, std::vector<std::int64_t> coeffs);

    static Poly zero(Prime p) { return Poly(p); }
    static Poly constant(Prime p, std::int64_t c) { return Poly(p, {c}); }
    static Poly one(Prime p) { return constant(p, 1); }
    static Poly t(Prime p) { return Poly(p, {0, 1}); }
    /// t^d - 1 (requires d >= 1)
    static Poly t_pow_minus_one(Prime p, std::int64_t d);

    const Prime& prime() const noexcept { return p_; }
    coeff_t modulus() const noexcept { return p_.value(); }

    bool is_zero() const noexcept { return c_.empty(); }
    bool is_one() const noexcept { return c_.size() == 1 && c_[0] == 1; }
    bool is_monic() const noexcept { return !c_.empty() && c_.back() == 1; }

    /// nullopt for the zero polynomial
    std::optional<int> degree() const noexcept {
        if (c_.empty()) return std::nullopt;
        return static_cast<int>(c_.size()) - 1;
    }
    /// degree as size-like quantity: number of stored coefficients (0 for zero)
    std::size_t length() const noexcept { return c_.size(); }

    coeff_t coeff(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }
    coeff_t constant_term() const noexcept { return coeff(0); }
    coeff_t leading() const noexcept { return c_.empty() ? 0 : c_.back(); }
    const std::vector<coeff_t>& coeffs() const noexcept { return c_; }

    Poly monic() const;
    Poly operator-() const;

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.p_ == b.p_ && a.c_ == b.c_;
    }

private:
    Prime p_;
    std::vector<coeff_t> c_;

    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    friend Poly operator+(const Poly&, const Poly&);
    friend Poly operator-(const Poly&, const Poly&);
    friend Poly operator*(const Poly&, const Poly&);
    friend struct DivRem;
    friend std::pair<Poly, Poly> divrem(const Poly&, const Poly&);
    friend Poly shift_up(const Poly&, std::size_t);
};

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);

/// (quotient, remainder) with deg(rem) < deg(b); b must be nonzero.
std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b);
/// remainder only
Poly mod(const Poly& a, const Poly& b);
bool divides(const Poly& d, const Poly& a);

/// monic gcd; gcd(f, 0) = monic(f), gcd(0, 0) = 0
Poly gcd(const Poly& a, const Poly& b);
/// monic lcm; zero if either argument is zero
Poly lcm(const Poly& a, const Poly& b);

coeff_t eval(const Poly& f, coeff_t x);

/// f^e mod g, e >= 0, deg(g) >= 1
Poly powmod(const Poly& f, std::int64_t e, const Poly& g);

/// multiply by t^k, k >= 0
Poly shift_up(const Poly& f, std::size_t k);

/// ordering by (degree, then coefficient sequence from exponent 0 upward)
bool canonical_less(const Poly& a, const Poly& b);

/// Rabin test: f irreducible of degree d iff f | x^{p^d} - x and
/// gcd(f, x^{p^{d/r}} - x) is constant for every prime r | d.
bool is_irreducible(const Poly& f);

/// all monic irreducibles of degree exactly d, canonically sorted
std::vector<Poly> enumerate_irreducibles(Prime p, int d);

/// Mobius/necklace count (1/d) sum_{e|d} mu(e) p^{d/e} of monic irreducibles
std::int64_t count_irreducibles(Prime p, int d);

/// monic irreducible factors with multiplicities, sorted by (degree, coeffs)
struct FactoredPoly {
    Prime p;
    coeff_t unit;  // leading coefficient of the input
    std::vector<std::pair<Poly, int>> factors;

    Poly expand() const;
    std::string to_string() const;  // "t^2 * (1+t)^3" style, polyring grammar per factor
};

FactoredPoly factor(const Poly& f);

/// Smallest d >= 1 with g | t^d - 1; requires g(0) != 0 and deg(g) >= 1.
/// Structural: for g = prod f_i^{e_i}, lcm of the factor orders times
/// p^ceil(log_p max e_i).
std::int64_t multiplicative_order_t(const Poly& g);
/// Same value by forward scan; capped at p^{deg g} * p.
std::int64_t multiplicative_order_t_brute(const Poly& g);

}  // namespace rflamp

#endif
