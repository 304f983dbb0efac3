#include "rflamp/detection.hpp"

#include <algorithm>
#include <chrono>

namespace rflamp {

CongruenceQuotient::CongruenceQuotient(Poly g, std::int64_t k, std::int64_t t_order)
    : g_(std::move(g)), k_(k), t_order_(t_order), t_inv_(g_.prime()) {
    order_ = checked_pow(g_.modulus(), modulus_degree()) * k_;
    if (modulus_degree() >= 1) {
        // t^{-1} = -g(0)^{-1} (g - g(0)) / t
        const Prime& p = g_.prime();
        coeff_t c = p.neg(p.inv(g_.constant_term()));
        std::vector<std::int64_t> inv(g_.length() - 1, 0);
        for (std::size_t i = 1; i < g_.length(); ++i) inv[i - 1] = p.mul(c, g_.coeff(i));
        t_inv_ = Poly(p, std::move(inv));
    }
}

CongruenceQuotient make_quotient(Poly g, std::int64_t k) {
    if (k < 1) throw precondition_error("quotient period must be >= 1");
    if (g.is_zero() || !g.is_monic())
        throw precondition_error("quotient modulus must be monic (or the constant 1)");
    if (g.degree() && *g.degree() >= 1) {
        if (g.constant_term() == 0)
            throw precondition_error("quotient modulus must have nonzero constant term");
        std::int64_t ord = multiplicative_order_t(g);
        if (k % ord != 0)
            throw precondition_error("period " + std::to_string(k) + " is not a multiple of ord(t mod g) = " +
                                     std::to_string(ord) + "; minimal valid k = " + std::to_string(ord));
        return CongruenceQuotient(std::move(g), k, ord);
    }
    return CongruenceQuotient(std::move(g), k, 1);
}

Poly CongruenceQuotient::t_to(std::int64_t e) const {
    const Prime& p = g_.prime();
    if (is_cyclic()) return Poly::zero(p);
    if (e >= 0) return powmod(Poly::t(p), e, g_);
    return powmod(t_inv_, -e, g_);
}

Poly CongruenceQuotient::reduce(const LaurentPoly& f) const {
    const Prime& p = g_.prime();
    if (is_cyclic() || f.is_zero()) return Poly::zero(p);
    return mod(t_to(f.valuation()) * f.unit_part(), g_);
}

QuotientElement project(const LampElement& x, const CongruenceQuotient& Q) {
    std::int64_t s = x.shift % Q.period();
    if (s < 0) s += Q.period();
    return {Q.reduce(x.lamp), s};
}

QuotientElement quotient_compose(const CongruenceQuotient& Q, const QuotientElement& a,
                                 const QuotientElement& b) {
    if (Q.is_cyclic()) return {a.residue, (a.shift + b.shift) % Q.period()};
    Poly res = mod(a.residue + Q.t_to(a.shift) * b.residue, Q.modulus_poly());
    return {std::move(res), (a.shift + b.shift) % Q.period()};
}

bool detects(const CongruenceQuotient& Q, const LampElement& x) {
    if (x.is_identity()) throw precondition_error("detection is defined for nontrivial elements");
    return !project(x, Q).is_identity();
}

std::int64_t QuotientScanner::order_of(const Poly& g) {
    std::string key(g.coeffs().begin(), g.coeffs().end());
    auto it = order_memo_.find(key);
    if (it != order_memo_.end()) return it->second;
    std::int64_t ord = multiplicative_order_t(g);
    order_memo_.emplace(std::move(key), ord);
    return ord;
}

const std::vector<Poly>& QuotientScanner::irreducibles_of_degree(int d) {
    auto it = irred_memo_.find(d);
    if (it != irred_memo_.end()) return it->second;
    return irred_memo_.emplace(d, enumerate_irreducibles(p_, d)).first->second;
}

// monic degree-d polynomials with nonzero constant term, canonical order
static std::vector<Poly> monic_candidates(Prime p, int d) {
    std::vector<Poly> out;
    std::vector<std::int64_t> c(static_cast<std::size_t>(d) + 1, 0);
    c[0] = 1;
    c[d] = 1;
    while (true) {
        out.push_back(Poly(p, c));
        int i = d - 1;
        while (i >= 0) {
            if (++c[i] < p.value()) break;
            c[i] = (i == 0) ? 1 : 0;
            --i;
        }
        if (i < 0) break;
    }
    return out;
}

DivisibilityResult QuotientScanner::divisibility(const LampElement& x, std::int64_t cap) {
    if (x.is_identity())
        throw precondition_error("divisibility is defined for nontrivial elements");
    if (cap < 1) throw precondition_error("divisibility search cap must be >= 1");

    // candidate moduli grouped by degree, grown on demand
    std::vector<std::vector<Poly>> by_degree;  // [d-1] -> candidates of degree d

    for (std::int64_t N = 1; N <= cap; ++N) {
        std::int64_t pd = 1;
        for (int d = 0; pd <= N; ++d, pd *= p_.value()) {
            if (N % pd != 0) continue;
            std::int64_t k = N / pd;
            if (d == 0) {
                if (x.shift % k != 0) {
                    CongruenceQuotient Q = make_quotient(Poly::one(p_), k);
                    return {x, N, {Q, project(x, Q), Q.order()}, cap, true};
                }
                continue;
            }
            if (static_cast<std::size_t>(d) > by_degree.size())
                by_degree.push_back(monic_candidates(p_, d));
            for (const Poly& g : by_degree[static_cast<std::size_t>(d) - 1]) {
                if (k % order_of(g) != 0) continue;
                CongruenceQuotient Q(g, k, order_of(g));
                QuotientElement img = project(x, Q);
                if (!img.is_identity()) return {x, N, {Q, img, Q.order()}, cap, true};
            }
        }
    }
    throw cap_exceeded_error("no detecting quotient of order <= " + std::to_string(cap));
}

std::vector<CongruenceQuotient> QuotientScanner::quotients_up_to(std::int64_t max_order) {
    std::vector<CongruenceQuotient> out;
    for (std::int64_t N = 1; N <= max_order; ++N) {
        std::int64_t pd = 1;
        for (int d = 0; pd <= N; ++d, pd *= p_.value()) {
            if (N % pd != 0) continue;
            std::int64_t k = N / pd;
            if (d == 0) {
                out.push_back(make_quotient(Poly::one(p_), k));
                continue;
            }
            for (const Poly& g : monic_candidates(p_, d))
                if (k % order_of(g) == 0) out.push_back(CongruenceQuotient(g, k, order_of(g)));
        }
    }
    return out;
}

UpperBoundCertificate upper_bound_certificate(const LampElement& x, QuotientScanner& scan) {
    if (x.is_identity())
        throw precondition_error("certificates are defined for nontrivial elements");
    const Prime& p = x.prime();
    // witness entry of x - 1: the lamp when nonzero (smaller degree in
    // practice), else t^k - 1; clear powers of t to get the numerator f
    Poly f = x.lamp.is_zero() ? Poly::t_pow_minus_one(p, std::llabs(x.shift)) : x.lamp.unit_part();
    Poly tf = Poly::t(p) * f;
    for (int d = 1;; ++d) {
        for (const Poly& pi : scan.irreducibles_of_degree(d)) {
            if (divides(pi, tf)) continue;
            std::int64_t ord = scan.order_of(pi);
            CongruenceQuotient Q = make_quotient(pi, ord);
            return {{Q, project(x, Q), Q.order()}, f, checked_pow(p.value(), d)};
        }
    }
}

std::vector<RFRecord> rf_growth_table(Prime p, int n_max, std::int64_t order_cap,
                                      std::size_t ball_cap) {
    if (n_max < 1) throw precondition_error("rf table radius must be >= 1");
    auto start = std::chrono::steady_clock::now();
    BallIndex ball = ball_enumerate(p, n_max, ball_cap);
    QuotientScanner scan(p);
    std::vector<RFRecord> out;
    std::int64_t best = 0;
    const LampElement* witness = nullptr;
    std::size_t at = 0;
    for (int n = 1; n <= n_max; ++n) {
        // entries are BFS-ordered, so each radius is a contiguous block and
        // the running max picks the first witness in discovery order
        while (at < ball.size() && ball.entries()[at].distance <= n) {
            const BallEntry& e = ball.entries()[at++];
            if (e.distance == 0) continue;
            DivisibilityResult r = scan.divisibility(e.element, order_cap);
            if (r.D > best) {
                best = r.D;
                witness = &e.element;
            }
        }
        double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        out.push_back({n, best, *witness, ball.count_within(n), ms});
    }
    return out;
}

// ---- full normal-subgroup oracle ------------------------------------------

bool full_oracle_subgroup_contains(const Poly& alpha, std::int64_t k, const Poly& twist,
                                   const LampElement& x) {
    if (x.shift % k != 0) return false;
    if (!alpha.degree() || *alpha.degree() == 0) return true;  // alpha = 1: ideal is everything
    const Prime& p = alpha.prime();
    CongruenceQuotient Q = make_quotient(alpha, multiplicative_order_t(alpha));
    Poly lhs = Q.reduce(x.lamp);
    coeff_t j = p.reduce(x.shift / k);
    Poly rhs = mod(Poly::constant(p, j) * twist, alpha);
    return lhs == rhs;
}

namespace {

// enumerate all monic divisors of f from its factorization
std::vector<Poly> monic_divisors(const Poly& f) {
    FactoredPoly fs = factor(f);
    std::vector<Poly> divs{Poly::one(f.prime())};
    for (const auto& [g, e] : fs.factors) {
        std::vector<Poly> next;
        next.reserve(divs.size() * (e + 1));
        for (const Poly& d0 : divs) {
            Poly acc = d0;
            for (int i = 0; i <= e; ++i) {
                next.push_back(acc);
                if (i < e) acc = acc * g;
            }
        }
        divs = std::move(next);
    }
    return divs;
}

struct Subgroup {
    Poly alpha;
    std::int64_t k;
    Poly twist;
};

// closure of the reported subgroup under the group operations, checked on
// seeded samples; guards the parameterization itself
void soundness_check(const Subgroup& s, Prime p, std::uint64_t seed) {
    RandomElements rng(p, seed ^ 0xabcddcba12344321ULL);
    std::vector<LampElement> members;
    for (int j = -3; j <= 3; ++j) {
        // (j*q0 + r*alpha, j*k) for a few random ideal multiples r
        for (int i = 0; i < 3; ++i) {
            LampElement r = rng.next();
            LaurentPoly lamp = r.lamp * LaurentPoly(s.alpha);
            coeff_t jj = p.reduce(j);
            lamp = lamp + LaurentPoly(Poly::constant(p, jj) * s.twist);
            members.push_back({lamp, j * s.k});
        }
    }
    LampElement s0 = LampElement::s0(p), t = LampElement::t(p);
    for (const LampElement& m : members) {
        if (!full_oracle_subgroup_contains(s.alpha, s.k, s.twist, m))
            throw std::logic_error("full-oracle subgroup membership is inconsistent");
        for (const LampElement& c : {s0, t}) {
            LampElement conj = compose(compose(c, m), invert(c));
            if (!full_oracle_subgroup_contains(s.alpha, s.k, s.twist, conj))
                throw std::logic_error("full-oracle subgroup is not closed under conjugation");
        }
    }
}

}  // namespace

FullOracleResult divisibility_full_oracle(const LampElement& x, std::int64_t cap,
                                          std::uint64_t seed) {
    if (x.is_identity())
        throw precondition_error("divisibility is defined for nontrivial elements");
    if (cap < 2) throw precondition_error("full-oracle cap must be >= 2");
    const Prime& p = x.prime();
    const Poly tm1 = Poly::t(p) - Poly::one(p);

    std::optional<Subgroup> best;
    std::int64_t best_index = cap + 1;
    for (std::int64_t k = 1; k <= cap && k < best_index; ++k) {
        Poly tk1 = Poly::t_pow_minus_one(p, k);
        for (const Poly& alpha : monic_divisors(tk1)) {
            std::int64_t index = checked_pow(p.value(), alpha.degree() ? *alpha.degree() : 0) * k;
            if (index > cap || index >= best_index) continue;
            // twists solving (t-1) q0 = 0 mod alpha: multiples of alpha/(t-1)
            std::vector<Poly> twists{Poly::zero(p)};
            if (alpha.degree() && *alpha.degree() >= 1) {
                auto [q, r] = divrem(alpha, tm1);
                if (r.is_zero())
                    for (coeff_t c = 1; c < p.value(); ++c)
                        twists.push_back(Poly::constant(p, c) * q);
            }
            for (const Poly& q0 : twists) {
                if (!full_oracle_subgroup_contains(alpha, k, q0, x)) {
                    best = Subgroup{alpha, k, q0};
                    best_index = index;
                }
            }
        }
    }
    if (!best) return {false, 0, Poly::zero(p), 0, Poly::zero(p), cap};
    soundness_check(*best, p, seed);
    return {true, best_index, best->alpha, best->k, best->twist, cap};
}

std::optional<FullOracleGap> full_oracle_cross_check(const LampElement& x, QuotientScanner& scan,
                                                     std::uint64_t seed) {
    DivisibilityResult cong = scan.divisibility(x);
    FullOracleResult full = divisibility_full_oracle(x, cong.D, seed);
    std::int64_t fv = full.found ? full.index : cong.D;
    if (fv < cong.D) return FullOracleGap{x, cong.D, fv};
    return std::nullopt;
}

}  // namespace rflamp
