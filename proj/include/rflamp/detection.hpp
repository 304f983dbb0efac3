#ifndef RFLAMP_DETECTION_HPP
#define RFLAMP_DETECTION_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rflamp/lamplighter.hpp"

namespace rflamp {

/// The finite group (F_p[t,1/t]/(g)) x| Z/k of order p^{deg g} * k.
/// Requires ord(t mod g) | k so that the Z/k action is well defined;
/// g = 1 gives the pure cyclic quotient Z/k.
class CongruenceQuotient {
public:
    const Poly& modulus_poly() const noexcept { return g_; }
    std::int64_t period() const noexcept { return k_; }
    std::int64_t order() const noexcept { return order_; }
    std::int64_t t_order() const noexcept { return t_order_; }
    int modulus_degree() const noexcept { return g_.degree() ? *g_.degree() : 0; }
    bool is_cyclic() const noexcept { return modulus_degree() == 0; }

    /// residue of t^e for any integer e (precomputed inverse of t used for e < 0)
    Poly t_to(std::int64_t e) const;
    Poly reduce(const LaurentPoly& f) const;

private:
    Poly g_;
    std::int64_t k_ = 1;
    std::int64_t order_ = 1;
    std::int64_t t_order_ = 1;
    Poly t_inv_;

    CongruenceQuotient(Poly g, std::int64_t k, std::int64_t t_order);
    friend CongruenceQuotient make_quotient(Poly g, std::int64_t k);
    friend class QuotientScanner;
};

/// Validated construction; rejects g(0) = 0, non-monic g, and periods k
/// that are not multiples of ord(t mod g) (the minimal valid k is named in
/// the error).
CongruenceQuotient make_quotient(Poly g, std::int64_t k);

struct QuotientElement {
    Poly residue;
    std::int64_t shift = 0;

    bool is_identity() const noexcept { return residue.is_zero() && shift == 0; }
    friend bool operator==(const QuotientElement&, const QuotientElement&) = default;
};

/// image of (p(t), k) under the reduction homomorphism
QuotientElement project(const LampElement& x, const CongruenceQuotient& Q);
/// semidirect law (a1, n1)(a2, n2) = (a1 + t^{n1} a2 mod g, n1 + n2 mod k)
QuotientElement quotient_compose(const CongruenceQuotient& Q, const QuotientElement& a,
                                 const QuotientElement& b);

/// true iff the image of x in Q is nontrivial; x must be nontrivial
bool detects(const CongruenceQuotient& Q, const LampElement& x);

struct DetectionCertificate {
    CongruenceQuotient quotient;
    QuotientElement image;
    std::int64_t order;  // quotient order
};

struct DivisibilityResult {
    LampElement element;
    std::int64_t D;
    DetectionCertificate certificate;
    std::int64_t search_bound;
    bool exhaustive;  // ascending-order search covered every smaller order
};

/// Shared scratch for repeated detection searches: memoized t-orders and
/// irreducible tables. Plain value, safe to keep per worker.
class QuotientScanner {
public:
    explicit QuotientScanner(Prime p) : p_(p) {}

    Prime prime() const noexcept { return p_; }
    std::int64_t order_of(const Poly& g);
    const std::vector<Poly>& irreducibles_of_degree(int d);

    /// Minimal-order detecting congruence quotient by the ascending-order
    /// scan over N = 1, 2, ...: within an order, modulus degrees ascending,
    /// then canonical modulus order (the period is forced by N and deg g).
    DivisibilityResult divisibility(const LampElement& x, std::int64_t cap = 1'000'000);

    /// every valid quotient of order <= max_order, in the scan order above
    std::vector<CongruenceQuotient> quotients_up_to(std::int64_t max_order);

private:
    Prime p_;
    std::unordered_map<std::string, std::int64_t> order_memo_;
    std::unordered_map<int, std::vector<Poly>> irred_memo_;
};

/// Quantified detection certificate: the minimal-degree monic irreducible pi
/// not dividing t*f, where f is the numerator of the chosen nonzero witness
/// entry of x - 1 (the lamp polynomial when the lamp is nonzero, else
/// t^|k| - 1). Field size p^{deg pi} <= 2(deg f + 1)p and the certificate
/// order is at most the square of the field size.
struct UpperBoundCertificate {
    DetectionCertificate certificate;
    Poly witness_numerator;
    std::int64_t field_size;
};

UpperBoundCertificate upper_bound_certificate(const LampElement& x, QuotientScanner& scan);

struct RFRecord {
    int n;
    std::int64_t rf;
    LampElement witness;  // first element in BFS discovery order attaining rf
    std::size_t ball_size;
    double millis = 0;  // diagnostics only, never serialized
};

/// RF(n) for n = 1..n_max: max of the divisibility function over the
/// punctured ball, from one BFS enumeration.
std::vector<RFRecord> rf_growth_table(Prime p, int n_max, std::int64_t order_cap = 1'000'000,
                                      std::size_t ball_cap = 4'000'000);

/// One "all finite-index normal subgroups" datum: subgroup determined by
/// (alpha | t^k - 1, period k, twist q0 with (t-1) q0 = 0 mod alpha);
/// it contains (q, m) iff k | m and q = (m/k) q0 mod alpha, and has index
/// p^{deg alpha} * k.
struct FullOracleResult {
    bool found = false;  // false: every subgroup of index <= cap contains x
    std::int64_t index = 0;
    Poly alpha;
    std::int64_t k = 0;
    Poly twist;
    std::int64_t cap;
};

/// Minimal index over the parameterized family, with a conjugation-closure
/// self-check of the reported subgroup on seeded sample elements.
FullOracleResult divisibility_full_oracle(const LampElement& x, std::int64_t cap,
                                          std::uint64_t seed = 0);

/// membership test for the parameterized subgroup (exposed for tests)
bool full_oracle_subgroup_contains(const Poly& alpha, std::int64_t k, const Poly& twist,
                                   const LampElement& x);

struct FullOracleGap {
    LampElement element;
    std::int64_t congruence_value;
    std::int64_t full_value;
};

/// Cross-check on one element: nullopt when the two divisibility notions
/// agree; a gap record (to be surfaced as a warning) when the full oracle
/// found a strictly smaller index.
std::optional<FullOracleGap> full_oracle_cross_check(const LampElement& x, QuotientScanner& scan,
                                                     std::uint64_t seed = 0);

}  // namespace rflamp

#endif
