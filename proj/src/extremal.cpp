#include "rflamp/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace rflamp {

std::int64_t lcm_profile_degree(Prime p, int d) {
    if (d < 1) throw precondition_error("LCM profile requires d >= 1");
    std::int64_t deg = 0;
    for (int i = 1; i <= d; ++i) deg += (d / i) * i * count_irreducibles(p, i);
    return deg;
}

LcmProfile lcm_profile(Prime p, int d, std::int64_t expansion_cap) {
    std::int64_t degree = lcm_profile_degree(p, d);
    LcmProfile out{d, degree, checked_pow(p.value(), d), 2 * checked_pow(p.value(), d + 1),
                   FactoredPoly{p, 1, {}}, false};
    if (out.lower_bound <= expansion_cap) {
        for (int i = 1; i <= d; ++i)
            for (const Poly& f : enumerate_irreducibles(p, i))
                out.factored.factors.emplace_back(f, d / i);
        std::sort(out.factored.factors.begin(), out.factored.factors.end(),
                  [](const auto& a, const auto& b) { return canonical_less(a.first, b.first); });
        out.expanded = true;
    }
    return out;
}

Poly prod_irreducibles_dividing(Prime p, int d) {
    if (d < 1) throw precondition_error("product requires d >= 1");
    checked_pow(p.value(), d, std::int64_t(1) << 24);  // keep the expansion desk-sized
    Poly out = Poly::one(p);
    for (int i = 1; i <= d; ++i) {
        if (d % i != 0) continue;
        for (const Poly& f : enumerate_irreducibles(p, i)) out = out * f;
    }
    return out;
}

WitnessElement witness_element(Prime p, int d, std::int64_t expansion_cap) {
    if (d < 1) throw precondition_error("witness requires d >= 1");
    std::int64_t w = checked_pow(p.value(), d);
    if (w > expansion_cap) throw cap_exceeded_error("witness expansion cap exceeded");
    auto S = static_cast<std::int64_t>(std::ceil(std::sqrt(static_cast<double>(w))));
    LcmProfile prof = lcm_profile(p, d, expansion_cap);
    Poly lamp = prof.factored.expand();
    for (std::int64_t i = 1; i <= S; ++i)
        lamp = lamp * (Poly::one(p) - Poly(p, [&] {
                           std::vector<std::int64_t> c(static_cast<std::size_t>(i) + 1, 0);
                           c.back() = 1;
                           return c;
                       }()));
    LampElement el{LaurentPoly(lamp), 0};
    WitnessElement out{d,
                       S,
                       lamp,
                       el,
                       *lamp.degree(),
                       prof.degree,
                       S * (S + 1) / 2,
                       word_length_exact(el),
                       word_length_bound(el).value,
                       static_cast<double>(*lamp.degree()) / static_cast<double>(w)};
    return out;
}

WitnessAudit witness_audit(Prime p, int d, std::int64_t order_cap) {
    WitnessElement w = witness_element(p, d);
    QuotientScanner scan(p);
    DivisibilityResult div = scan.divisibility(w.element, order_cap);

    bool deep = true, longk = true;
    std::int64_t checked = 0;
    for (const CongruenceQuotient& Q : scan.quotients_up_to(order_cap)) {
        if (!detects(Q, w.element)) continue;
        ++checked;
        if (Q.modulus_degree() <= d) deep = false;
        if (Q.period() <= w.S) longk = false;
    }

    double pd = static_cast<double>(checked_pow(p.value(), d));
    double bound = std::pow(pd, 1.5);
    std::int64_t k = div.certificate.quotient.period();
    return {w,
            div,
            static_cast<std::int64_t>(std::ceil(bound)),
            static_cast<double>(div.D) / bound,
            deep,
            longk,
            static_cast<double>(k) >= std::sqrt(pd),
            static_cast<double>(k) >= std::sqrt(static_cast<double>(d) * pd),
            checked,
            order_cap};
}

std::int64_t minimal_period(const Poly& g) {
    if (g.constant_term() == 0)
        throw precondition_error("g(0) = 0: g never divides t^d - 1");
    std::int64_t structural = multiplicative_order_t(g);
    std::int64_t scanned = multiplicative_order_t_brute(g);
    if (structural != scanned)
        throw std::logic_error("period cross-check failed: structural " + std::to_string(structural) +
                               " vs scan " + std::to_string(scanned));
    return structural;
}

static AlmostPeriodicProfile finish_profile(Prime p, int k, std::vector<Poly> members) {
    std::sort(members.begin(), members.end(), canonical_less);
    // lcm degree via max multiplicity per irreducible factor
    std::map<std::vector<coeff_t>, std::pair<Poly, int>> acc;
    for (const Poly& g : members)
        for (const auto& [f, e] : factor(g).factors) {
            auto it = acc.find(f.coeffs());
            if (it == acc.end())
                acc.emplace(f.coeffs(), std::make_pair(f, e));
            else
                it->second.second = std::max(it->second.second, e);
        }
    std::int64_t lcm_degree = 0;
    for (const auto& [key, fe] : acc) lcm_degree += *fe.first.degree() * fe.second;
    std::int64_t pk = checked_pow(p.value(), k);
    return {k, std::move(members), lcm_degree, pk,
            static_cast<double>(lcm_degree) / static_cast<double>(pk)};
}

AlmostPeriodicProfile enumerate_almost_periodic(Prime p, int k, ApStrategy strategy) {
    if (k < 1) throw precondition_error("almost-periodic enumeration requires k >= 1");
    checked_pow(p.value(), k, std::int64_t(1) << 24);
    std::vector<Poly> members;

    if (strategy == ApStrategy::filter_all) {
        for (int d = 1; d <= k; ++d) {
            std::int64_t pd = checked_pow(p.value(), d);
            std::vector<std::int64_t> c(static_cast<std::size_t>(d) + 1, 0);
            c[0] = 1;
            c[d] = 1;
            while (true) {
                Poly g(p, c);
                std::int64_t per = minimal_period(g);
                if (per <= pd / per) members.push_back(g);  // per^2 <= p^d without overflow
                int i = d - 1;
                while (i >= 0) {
                    if (++c[i] < p.value()) break;
                    c[i] = (i == 0) ? 1 : 0;
                    --i;
                }
                if (i < 0) break;
            }
        }
    } else {
        std::int64_t dmax = static_cast<std::int64_t>(
            std::floor(std::pow(static_cast<double>(p.value()), static_cast<double>(k) / 2.0)));
        std::set<std::vector<coeff_t>> seen;
        for (std::int64_t d = 1; d <= dmax; ++d) {
            Poly td1 = Poly::t_pow_minus_one(p, d);
            FactoredPoly fs = factor(td1);
            // divisors by exponent odometer, pruned by degree
            std::vector<Poly> divs{Poly::one(p)};
            for (const auto& [g, e] : fs.factors) {
                std::vector<Poly> next;
                for (const Poly& d0 : divs) {
                    Poly a = d0;
                    for (int i = 0; i <= e; ++i) {
                        if (*a.degree() <= k) next.push_back(a);
                        if (i < e) a = a * g;
                    }
                }
                divs = std::move(next);
            }
            for (const Poly& g : divs)
                if (g.degree() && *g.degree() >= 1) seen.insert(g.coeffs());
        }
        for (const auto& cv : seen) {
            std::vector<std::int64_t> c(cv.begin(), cv.end());
            Poly g(p, std::move(c));
            std::int64_t per = minimal_period(g);
            std::int64_t pd = checked_pow(p.value(), *g.degree());
            if (per <= pd / per) members.push_back(g);
        }
    }
    return finish_profile(p, k, std::move(members));
}

std::vector<AlmostPeriodicProfile> conjecture_table(Prime p, int k_max) {
    if (k_max < 1) throw precondition_error("conjecture table requires k_max >= 1");
    std::vector<AlmostPeriodicProfile> out;
    out.reserve(static_cast<std::size_t>(k_max));
    for (int k = 1; k <= k_max; ++k) out.push_back(enumerate_almost_periodic(p, k));
    return out;
}

}  // namespace rflamp
