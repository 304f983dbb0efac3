#ifndef RFLAMP_EXTREMAL_HPP
#define RFLAMP_EXTREMAL_HPP

#include <cstdint>
#include <vector>

#include "rflamp/detection.hpp"

namespace rflamp {

/// LCM of all polynomials of degree <= d: each monic irreducible f appears
/// with exponent floor(d / deg f), so
///   deg = sum_{i=1..d} floor(d/i) * i * count_irreducibles(i),
/// bounded between p^d and 2 p^{d+1}.
struct LcmProfile {
    int d;
    std::int64_t degree;       // closed-form sum
    std::int64_t lower_bound;  // p^d
    std::int64_t upper_bound;  // 2 p^{d+1}
    FactoredPoly factored;     // populated when p^d <= expansion cap
    bool expanded;
};

std::int64_t lcm_profile_degree(Prime p, int d);
LcmProfile lcm_profile(Prime p, int d, std::int64_t expansion_cap = 65536);

/// product of all monic irreducibles of degree dividing d; equals
/// x^{p^d} - x
Poly prod_irreducibles_dividing(Prime p, int d);

/// Hard element (LCM(P_d) * prod_{i=1..S} (1 - t^i), 0) with S = ceil(sqrt w),
/// w = p^d: every polynomial of degree <= d divides the lamp, and no factor
/// 1 - t^i with i <= S is missing, which forces detecting quotients to be
/// large in both coordinates.
struct WitnessElement {
    int d;
    std::int64_t S;
    Poly lamp;
    LampElement element;
    std::int64_t degree;
    std::int64_t lcm_degree;
    std::int64_t product_degree;  // S(S+1)/2
    std::int64_t word_exact;
    std::int64_t word_bound;
    double degree_ratio;  // degree / p^d, the empirical constant
};

WitnessElement witness_element(Prime p, int d, std::int64_t expansion_cap = 65536);

struct WitnessAudit {
    WitnessElement witness;
    DivisibilityResult divisibility;
    std::int64_t index_lower;      // p^{3d/2} rounded up
    double ratio;                  // D / p^{3d/2}
    bool all_detectors_deep;       // every detecting quotient has deg g > d
    bool all_detectors_long;       // ... and period k > S
    bool k_ge_sqrt_pd;             // minimal detector period vs sqrt(p^d)
    bool k_ge_sqrt_dpd;            // ... vs sqrt(d p^d)
    std::int64_t quotients_checked;
    std::int64_t audit_order_cap;
};

/// Scans every congruence quotient of order <= order_cap against the
/// witness and records the exclusion structure of the detectors.
WitnessAudit witness_audit(Prime p, int d, std::int64_t order_cap = 10'000);

/// smallest d with g | t^d - 1; structural value cross-checked against the
/// forward scan on every call
std::int64_t minimal_period(const Poly& g);

enum class ApStrategy {
    filter_all,      // walk every monic poly of degree <= k
    divisor_collect  // collect divisors of t^d - 1 for d <= p^{k/2}
};

/// Almost-periodic polynomials of degree <= k: monic g with
/// minimal_period(g)^2 <= p^{deg g}.
struct AlmostPeriodicProfile {
    int k;
    std::vector<Poly> members;  // sorted by (degree, coeffs)
    std::int64_t lcm_degree;
    std::int64_t pk;
    double ratio;  // lcm_degree / p^k
};

AlmostPeriodicProfile enumerate_almost_periodic(Prime p, int k,
                                                ApStrategy strategy = ApStrategy::filter_all);

/// profiles for k = 1..k_max (exploratory data; no verdict is attached)
std::vector<AlmostPeriodicProfile> conjecture_table(Prime p, int k_max);

}  // namespace rflamp

#endif
