#pragma once

#include <cstdint>

namespace shadowcalc::fastops {

// Fixed-width mirror of the expansion operators, used by the bulk
// verification kernels. Independent of the arbitrary-precision path: the
// binomials are computed in unsigned 128-bit intermediates with an early
// exit cap, so no step can overflow within the stated domain.
//
// Domain: n <= 2^48 and k <= kMaxDim. Within it every operator value is
// bounded by (k+2)*(n+1) < 2^63. Calls outside the domain return false /
// are rejected, and callers fall back to the exact path.

inline constexpr unsigned kMaxDim = 16;
inline constexpr std::uint64_t kMaxValue = 1ull << 48;

struct Rep {
    unsigned dim = 0;
    unsigned len = 0;
    std::uint64_t uppers[kMaxDim + 1];  // descending; lower index of uppers[j] is dim+1-j
};

bool in_domain(std::uint64_t n, unsigned k);

// min(C(a,b), cap+1), exact while <= cap.
std::uint64_t binomial_capped(std::uint64_t a, std::uint64_t b, std::uint64_t cap);

// Greedy expansion; false iff (n, dim) is outside the domain.
bool expand(std::uint64_t n, unsigned dim, Rep& out);

std::uint64_t evaluate(const Rep& rep);
std::uint64_t lower_shadow_of(const Rep& rep);
std::uint64_t upper_shadow_of(const Rep& rep);
std::uint64_t shift_up_of(const Rep& rep);
unsigned error_fn_of(const Rep& rep);

// Convenience wrappers; each asserts the domain.
std::uint64_t lower_shadow(std::uint64_t n, unsigned k);
std::uint64_t upper_shadow(std::uint64_t n, unsigned k);
std::uint64_t shift_up(std::uint64_t n, unsigned k);
unsigned error_fn(std::uint64_t n, unsigned k);

}  // namespace shadowcalc::fastops
