#ifndef RFLAMP_LAMPLIGHTER_HPP
#define RFLAMP_LAMPLIGHTER_HPP

#include <array>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "rflamp/laurent.hpp"

namespace rflamp {

/// Element (p(t), k) of L = Z/p wr Z: lamp configuration as a Laurent
/// polynomial plus the shift of the head. Identity is (0, 0).
struct LampElement {
    LaurentPoly lamp;
    std::int64_t shift = 0;

    static LampElement identity(Prime p) { return {LaurentPoly::zero(p), 0}; }
    /// s_0 = (1, 0)
    static LampElement s0(Prime p) { return {LaurentPoly::one(p), 0}; }
    /// t = (0, 1)
    static LampElement t(Prime p) { return {LaurentPoly::zero(p), 1}; }

    const Prime& prime() const noexcept { return lamp.prime(); }
    bool is_identity() const noexcept { return lamp.is_zero() && shift == 0; }

    friend bool operator==(const LampElement& a, const LampElement& b) {
        return a.lamp == b.lamp && a.shift == b.shift;
    }
};

/// group law (a, n1)(b, n2) = (a + t^{n1} b, n1 + n2)
LampElement compose(const LampElement& x, const LampElement& y);
/// (f, k)^{-1} = (-t^{-k} f, -k)
LampElement invert(const LampElement& x);

/// 2x2 matrix over F_p[t, 1/t]; for images of L the lower row is (0, 1)
/// and the upper-left entry is a power of t.
struct LampMatrix {
    std::array<LaurentPoly, 4> e;  // row-major: [0] [1] / [2] [3]

    friend LampMatrix operator*(const LampMatrix& a, const LampMatrix& b);
    friend bool operator==(const LampMatrix& a, const LampMatrix& b) { return a.e == b.e; }
};

LampMatrix to_matrix(const LampElement& x);

/// Exact distance to the identity in the Cayley graph over
/// {s0, s0^{-1}, t, t^{-1}}: toggle cost sum_i min(a_i, p - a_i) plus the
/// cheaper of the two sweep orders over the lamp support.
std::int64_t word_length_exact(const LampElement& x);

/// Closed-form upper bound max{2q + |k| + (p+1)a, (p+3)a + |k|} evaluated
/// with q = max(0, -valuation) and f = t^q p(t), a = deg f. When f is a
/// constant the expression misses the mandatory toggle, so its cost is
/// added; `guarded` marks that flagged family (it contains the raw
/// formula's degenerate (c, 0) case, where the expression evaluates to 0).
struct WordLengthBound {
    std::int64_t value = 0;
    std::int64_t formula = 0;  // ungarded expression
    bool guarded = false;
};

WordLengthBound word_length_bound(const LampElement& x);

struct BallEntry {
    LampElement element;
    int distance;
    std::string witness;  // letters: a = s0, A = s0^{-1}, t, T = t^{-1}
};

/// Metric ball from breadth-first search; entries in discovery order
/// starting at the identity, one geodesic witness per element.
class BallIndex {
public:
    int radius() const noexcept { return radius_; }
    std::size_t size() const noexcept { return entries_.size(); }
    const std::vector<BallEntry>& entries() const noexcept { return entries_; }
    const BallEntry* find(const LampElement& x) const;

    /// number of elements at distance <= n
    std::size_t count_within(int n) const;

private:
    int radius_ = 0;
    std::vector<BallEntry> entries_;
    std::unordered_map<std::string, std::size_t> index_;

    friend BallIndex ball_enumerate(Prime p, int radius, std::size_t max_elements);
    friend std::string ball_key(const LampElement& x);
};

std::string ball_key(const LampElement& x);

/// BFS over the 4-letter alphabet; throws cap_exceeded_error when the ball
/// outgrows max_elements.
BallIndex ball_enumerate(Prime p, int radius, std::size_t max_elements = 4'000'000);

/// Reproducible element generator for property tests: lamp support within
/// [-8, 8], shift within [-8, 8].
class RandomElements {
public:
    RandomElements(Prime p, std::uint64_t seed) : p_(p), state_(seed ^ 0x9e3779b97f4a7c15ULL) {}
    LampElement next();

private:
    Prime p_;
    std::uint64_t state_;
    std::uint64_t bits();
};

}  // namespace rflamp

#endif
