#include "rflamp/lamplighter.hpp"

#include <algorithm>
#include <deque>

namespace rflamp {

LampElement compose(const LampElement& x, const LampElement& y) {
    if (!(x.prime() == y.prime()))
        throw precondition_error("cannot compose elements over different primes");
    return {x.lamp + y.lamp.shifted(x.shift), x.shift + y.shift};
}

LampElement invert(const LampElement& x) {
    return {(-x.lamp).shifted(-x.shift), -x.shift};
}

LampMatrix operator*(const LampMatrix& a, const LampMatrix& b) {
    LampMatrix r{{LaurentPoly::zero(a.e[0].prime()), LaurentPoly::zero(a.e[0].prime()),
                  LaurentPoly::zero(a.e[0].prime()), LaurentPoly::zero(a.e[0].prime())}};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            r.e[2 * i + j] = a.e[2 * i] * b.e[j] + a.e[2 * i + 1] * b.e[2 + j];
    return r;
}

LampMatrix to_matrix(const LampElement& x) {
    Prime p = x.prime();
    return {{LaurentPoly::t_power(p, x.shift), x.lamp, LaurentPoly::zero(p), LaurentPoly::one(p)}};
}

std::int64_t word_length_exact(const LampElement& x) {
    const coeff_t p = x.lamp.modulus();
    std::int64_t cost = 0;
    std::int64_t l = std::min<std::int64_t>(0, x.shift);
    std::int64_t r = std::max<std::int64_t>(0, x.shift);
    if (!x.lamp.is_zero()) {
        l = std::min(l, x.lamp.valuation());
        r = std::max(r, x.lamp.top_exponent());
        for (std::int64_t e = x.lamp.valuation(); e <= x.lamp.top_exponent(); ++e)
            if (coeff_t c = x.lamp.coeff_at(e)) cost += std::min<std::int64_t>(c, p - c);
    }
    std::int64_t k = x.shift;
    std::int64_t travel = std::min((0 - l) + (r - l) + (r - k), (r - 0) + (r - l) + (k - l));
    return cost + travel;
}

WordLengthBound word_length_bound(const LampElement& x) {
    const std::int64_t p = x.lamp.modulus();
    const std::int64_t k = std::llabs(x.shift);
    if (x.lamp.is_zero()) return {k, k, false};
    std::int64_t q = std::max<std::int64_t>(0, -x.lamp.valuation());
    std::int64_t a = *x.lamp.unit_part().degree() + x.lamp.valuation() + q;  // deg(t^q p(t))
    std::int64_t formula = std::max(2 * q + k + (p + 1) * a, (p + 3) * a + k);
    WordLengthBound out{formula, formula, false};
    if (a == 0) {
        coeff_t c = x.lamp.unit_part().constant_term();
        out.value += std::min<std::int64_t>(c, p - c);
        out.guarded = true;
    }
    return out;
}

std::string ball_key(const LampElement& x) {
    std::string key;
    key.reserve(20 + x.lamp.unit_part().length());
    auto put64 = [&key](std::int64_t v) { key.append(reinterpret_cast<const char*>(&v), 8); };
    put64(x.shift);
    put64(x.lamp.valuation());
    for (coeff_t c : x.lamp.unit_part().coeffs()) key.push_back(static_cast<char>(c));
    return key;
}

const BallEntry* BallIndex::find(const LampElement& x) const {
    auto it = index_.find(ball_key(x));
    return it == index_.end() ? nullptr : &entries_[it->second];
}

std::size_t BallIndex::count_within(int n) const {
    std::size_t c = 0;
    for (const auto& e : entries_)
        if (e.distance <= n) ++c;
    return c;
}

BallIndex ball_enumerate(Prime p, int radius, std::size_t max_elements) {
    if (radius < 0) throw precondition_error("ball radius must be >= 0");
    struct Gen {
        char letter;
        LampElement g;
    };
    const std::array<Gen, 4> gens{{{'a', LampElement::s0(p)},
                                   {'A', invert(LampElement::s0(p))},
                                   {'t', LampElement::t(p)},
                                   {'T', invert(LampElement::t(p))}}};

    BallIndex ball;
    ball.radius_ = radius;
    LampElement id = LampElement::identity(p);
    ball.index_.emplace(ball_key(id), 0);
    ball.entries_.push_back({id, 0, ""});
    std::deque<std::size_t> frontier{0};
    while (!frontier.empty()) {
        std::size_t at = frontier.front();
        frontier.pop_front();
        BallEntry cur = ball.entries_[at];  // copy: entries_ may reallocate
        if (cur.distance == radius) continue;
        for (const Gen& gen : gens) {
            LampElement nxt = compose(cur.element, gen.g);
            std::string key = ball_key(nxt);
            if (ball.index_.contains(key)) continue;
            if (ball.entries_.size() >= max_elements)
                throw cap_exceeded_error("ball enumeration exceeded the element cap of " +
                                         std::to_string(max_elements));
            ball.index_.emplace(std::move(key), ball.entries_.size());
            frontier.push_back(ball.entries_.size());
            ball.entries_.push_back({nxt, cur.distance + 1, cur.witness + gen.letter});
        }
    }
    return ball;
}

std::uint64_t RandomElements::bits() {
    // splitmix64
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

LampElement RandomElements::next() {
    std::vector<std::int64_t> coeffs(17, 0);
    std::uint64_t r = bits();
    int nlamps = static_cast<int>(r % 6);
    r >>= 3;
    for (int i = 0; i < nlamps; ++i) {
        std::uint64_t v = bits();
        coeffs[v % 17] = 1 + static_cast<std::int64_t>((v >> 32) % (p_.value() - 1));
    }
    std::int64_t shift = static_cast<std::int64_t>(bits() % 17) - 8;
    return {LaurentPoly(Poly(p_, std::move(coeffs)), -8), shift};
}

}  // namespace rflamp
