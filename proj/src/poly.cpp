#include "rflamp/poly.hpp"

#include <algorithm>
#include <numeric>

namespace rflamp {

std::int64_t checked_pow(std::int64_t base, std::int64_t exp, std::int64_t limit) {
    std::int64_t r = 1;
    for (std::int64_t i = 0; i < exp; ++i) {
        if (r > limit / base) throw cap_exceeded_error("p^d exceeds supported range");
        r *= base;
    }
    return r;
}

Poly::Poly(Prime p, std::vector<std::int64_t> coeffs) : p_(p) {
    c_.reserve(coeffs.size());
    for (std::int64_t v : coeffs) c_.push_back(p_.reduce(v));
    trim();
}

Poly Poly::t_pow_minus_one(Prime p, std::int64_t d) {
    if (d < 1) throw precondition_error("t^d - 1 requires d >= 1");
    std::vector<std::int64_t> c(static_cast<std::size_t>(d) + 1, 0);
    c[0] = -1;
    c.back() = 1;
    return Poly(p, std::move(c));
}

Poly Poly::monic() const {
    if (c_.empty() || c_.back() == 1) return *this;
    Poly r(p_);
    coeff_t inv = p_.inv(c_.back());
    r.c_.reserve(c_.size());
    for (coeff_t x : c_) r.c_.push_back(p_.mul(x, inv));
    return r;
}

Poly Poly::operator-() const {
    Poly r(p_);
    r.c_.reserve(c_.size());
    for (coeff_t x : c_) r.c_.push_back(p_.neg(x));
    return r;
}

static void require_same_modulus(const Poly& a, const Poly& b) {
    if (!(a.prime() == b.prime()))
        throw precondition_error("operands have different moduli (" +
                                 std::to_string(a.modulus()) + " vs " + std::to_string(b.modulus()) + ")");
}

Poly operator+(const Poly& a, const Poly& b) {
    require_same_modulus(a, b);
    const Prime& p = a.prime();
    Poly r(p);
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = p.add(a.coeff(i), b.coeff(i));
    r.trim();
    return r;
}

Poly operator-(const Poly& a, const Poly& b) {
    require_same_modulus(a, b);
    const Prime& p = a.prime();
    Poly r(p);
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = p.sub(a.coeff(i), b.coeff(i));
    r.trim();
    return r;
}

Poly operator*(const Poly& a, const Poly& b) {
    require_same_modulus(a, b);
    const Prime& p = a.prime();
    Poly r(p);
    if (a.is_zero() || b.is_zero()) return r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            r.c_[i + j] = p.add(r.c_[i + j], p.mul(a.c_[i], b.c_[j]));
    }
    r.trim();
    return r;
}

std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) {
    require_same_modulus(a, b);
    if (b.is_zero()) throw precondition_error("division by zero polynomial");
    const Prime& p = a.prime();
    Poly q(p), r = a;
    if (a.c_.size() < b.c_.size()) return {q, r};
    q.c_.assign(a.c_.size() - b.c_.size() + 1, 0);
    coeff_t lead_inv = p.inv(b.c_.back());
    for (std::size_t i = q.c_.size(); i-- > 0;) {
        if (r.c_.size() < i + b.c_.size()) continue;
        coeff_t coef = p.mul(r.c_[i + b.c_.size() - 1], lead_inv);
        if (coef == 0) continue;
        q.c_[i] = coef;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            r.c_[i + j] = p.sub(r.c_[i + j], p.mul(coef, b.c_[j]));
        r.trim();
    }
    q.trim();
    return {q, r};
}

Poly mod(const Poly& a, const Poly& b) { return divrem(a, b).second; }

bool divides(const Poly& d, const Poly& a) { return mod(a, d).is_zero(); }

Poly gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = mod(x, y);
        x = y;
        y = r;
    }
    return x.monic();
}

Poly lcm(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly::zero(a.prime());
    Poly g = gcd(a, b);
    return (divrem(a, g).first * b).monic();
}

coeff_t eval(const Poly& f, coeff_t x) {
    const Prime& p = f.prime();
    coeff_t r = 0;
    for (std::size_t i = f.length(); i-- > 0;) r = p.add(p.mul(r, x), f.coeff(i));
    return r;
}

Poly powmod(const Poly& f, std::int64_t e, const Poly& g) {
    require_same_modulus(f, g);
    if (!g.degree() || *g.degree() < 1) throw precondition_error("powmod modulus must have degree >= 1");
    if (e < 0) throw precondition_error("powmod exponent must be >= 0");
    Poly r = mod(Poly::one(f.prime()), g);
    Poly b = mod(f, g);
    while (e) {
        if (e & 1) r = mod(r * b, g);
        b = mod(b * b, g);
        e >>= 1;
    }
    return r;
}

Poly shift_up(const Poly& f, std::size_t k) {
    if (f.is_zero() || k == 0) return f;
    Poly r(f.prime());
    r.c_.assign(f.c_.size() + k, 0);
    std::copy(f.c_.begin(), f.c_.end(), r.c_.begin() + static_cast<std::ptrdiff_t>(k));
    return r;
}

bool canonical_less(const Poly& a, const Poly& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    for (std::size_t i = 0; i < a.length(); ++i)
        if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
    return false;
}

static std::vector<std::int64_t> prime_factors_int(std::int64_t n) {
    std::vector<std::int64_t> out;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    if (n > 1) out.push_back(n);
    return out;
}

bool is_irreducible(const Poly& f) {
    auto deg = f.degree();
    if (!deg || *deg < 1) throw precondition_error("irreducibility test requires degree >= 1");
    const Prime& p = f.prime();
    int d = *deg;
    Poly x = mod(Poly::t(p), f);
    std::int64_t pd = checked_pow(p.value(), d);
    if (!(powmod(Poly::t(p), pd, f) == x)) return false;
    for (std::int64_t r : prime_factors_int(d)) {
        Poly h = powmod(Poly::t(p), checked_pow(p.value(), d / r), f) - x;
        Poly g = gcd(f, h);
        if (!g.degree() || *g.degree() != 0) return false;
    }
    return true;
}

// Walk monic polynomials of degree d in canonical order: the coefficient
// vector (c_0 .. c_{d-1}) counts up with c_{d-1} fastest, which is exactly
// lexicographic order on the sequence from exponent 0.
namespace {
class MonicWalker {
public:
    MonicWalker(Prime p, int d, bool nonzero_const)
        : p_(p), c_(static_cast<std::size_t>(d), 0), nonzero_const_(nonzero_const), done_(d == 0) {
        if (nonzero_const_ && d > 0) c_[0] = 1;
        if (d == 0) one_shot_ = true;
    }

    bool next(Poly& out) {
        if (one_shot_) {
            one_shot_ = false;
            out = Poly::one(p_);
            return true;
        }
        if (done_) return false;
        std::vector<std::int64_t> v(c_.begin(), c_.end());
        v.push_back(1);
        out = Poly(p_, std::move(v));
        // advance
        std::size_t i = c_.size();
        while (i-- > 0) {
            if (c_[i] + 1 < p_.value()) {
                ++c_[i];
                return true;
            }
            c_[i] = (i == 0 && nonzero_const_) ? 1 : 0;
            if (i == 0) done_ = true;
        }
        if (c_.empty()) done_ = true;
        return true;
    }

private:
    Prime p_;
    std::vector<coeff_t> c_;
    bool nonzero_const_;
    bool done_;
    bool one_shot_ = false;
};
}  // namespace

std::vector<Poly> enumerate_irreducibles(Prime p, int d) {
    if (d < 1) throw precondition_error("irreducible enumeration requires d >= 1");
    std::vector<Poly> out;
    MonicWalker w(p, d, false);
    Poly f(p);
    while (w.next(f))
        if (is_irreducible(f)) out.push_back(f);
    return out;  // walker order is already canonical
}

static int mobius(std::int64_t n) {
    int m = 1;
    for (std::int64_t q : prime_factors_int(n)) {
        if (n % (q * q) == 0) return 0;
        m = -m;
    }
    return m;
}

std::int64_t count_irreducibles(Prime p, int d) {
    if (d < 1) throw precondition_error("irreducible count requires d >= 1");
    std::int64_t tot = 0;
    for (int e = 1; e <= d; ++e)
        if (d % e == 0) tot += mobius(e) * checked_pow(p.value(), d / e);
    return tot / d;
}

Poly FactoredPoly::expand() const {
    Poly out = Poly::constant(p, unit);
    for (const auto& [g, e] : factors)
        for (int i = 0; i < e; ++i) out = out * g;
    return out;
}

FactoredPoly factor(const Poly& f) {
    if (f.is_zero()) throw precondition_error("cannot factor the zero polynomial");
    const Prime& p = f.prime();
    FactoredPoly out{p, f.leading(), {}};
    Poly rem = f.monic();

    // strip powers of t first so the remaining trial divisors all have
    // nonzero constant term
    int tmult = 0;
    while (!rem.is_zero() && rem.constant_term() == 0) {
        rem = divrem(rem, Poly::t(p)).first;
        ++tmult;
    }
    if (tmult) out.factors.emplace_back(Poly::t(p), tmult);

    // trial division; any degree-d divisor found here is irreducible because
    // all smaller-degree factors were already removed
    for (int d = 1; rem.degree() && d <= *rem.degree() / 2; ++d) {
        MonicWalker w(p, d, true);
        Poly g(p);
        while (w.next(g)) {
            int e = 0;
            while (true) {
                auto [q, r] = divrem(rem, g);
                if (!r.is_zero()) break;
                rem = q;
                ++e;
            }
            if (e) out.factors.emplace_back(g, e);
            if (rem.degree() && d > *rem.degree() / 2) break;
        }
    }
    if (rem.degree() && *rem.degree() >= 1) out.factors.emplace_back(rem, 1);

    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& a, const auto& b) { return canonical_less(a.first, b.first); });
    return out;
}

static void require_order_input(const Poly& g) {
    if (!g.degree() || *g.degree() < 1)
        throw precondition_error("order of t requires a nonconstant modulus");
    if (g.constant_term() == 0)
        throw precondition_error("order of t undefined: t is not invertible when g(0) = 0");
}

std::int64_t multiplicative_order_t_brute(const Poly& g) {
    require_order_input(g);
    const Prime& p = g.prime();
    std::int64_t cap = checked_pow(p.value(), *g.degree() + 1);
    Poly acc = mod(Poly::t(p), g);
    Poly one = Poly::one(p);
    Poly t = acc;
    for (std::int64_t d = 1; d <= cap; ++d) {
        if (acc == one) {
            // membership re-checked by repeated squaring
            if (!(powmod(Poly::t(p), d, g) == one))
                throw std::logic_error("order scan and powmod disagree");
            return d;
        }
        acc = mod(acc * t, g);
    }
    throw std::logic_error("order scan exceeded the structural cap p^{deg g} * p");
}

std::int64_t multiplicative_order_t(const Poly& g) {
    require_order_input(g);
    const Prime& p = g.prime();
    FactoredPoly fs = factor(g);
    std::int64_t l = 1;
    int emax = 1;
    for (const auto& [f, e] : fs.factors) {
        emax = std::max(emax, e);
        // order modulo an irreducible divides p^deg - 1; minimize over the
        // divisor lattice
        std::int64_t n = checked_pow(p.value(), *f.degree()) - 1;
        std::int64_t o = n;
        Poly one = Poly::one(p);
        for (std::int64_t q : prime_factors_int(n))
            while (o % q == 0 && powmod(Poly::t(p), o / q, f) == one) o /= q;
        l = l / std::gcd(l, o) * o;
    }
    std::int64_t pe = 1;
    while (pe < emax) pe *= p.value();
    return l * pe;
}

}  // namespace rflamp
