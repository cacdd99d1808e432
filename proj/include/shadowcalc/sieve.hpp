#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "shadowcalc/complex.hpp"
#include "shadowcalc/seq.hpp"

namespace shadowcalc {

// Per-integer square-free flags and distinct-prime-factor counts for
// 2..limit.  omega(1) = 0 and is_squarefree(1) = true by convention.
class SieveTable {
  public:
    SieveTable(std::uint64_t limit, std::vector<std::uint8_t> omega, std::vector<bool> squarefree)
        : limit_(limit), omega_(std::move(omega)), squarefree_(std::move(squarefree)) {}

    std::uint64_t limit() const { return limit_; }
    unsigned omega(std::uint64_t m) const { return omega_[m]; }
    bool is_squarefree(std::uint64_t m) const { return squarefree_[m]; }

  private:
    std::uint64_t limit_;
    std::vector<std::uint8_t> omega_;  // index 0..limit
    std::vector<bool> squarefree_;
};

// Allocation ceiling for sieve construction, in bytes: the value of the
// SHADOWCALC_MEM_LIMIT environment variable when set, else 4 GiB.
std::uint64_t sieve_mem_budget();

// Serial reference: linear smallest-prime-factor sieve.
// Throws std::invalid_argument when limit is 0 or would exceed the budget.
SieveTable build_sieve(std::uint64_t limit);

// Segmented kernel, parallel across segments when OpenMP is enabled;
// produces a table identical to build_sieve.
SieveTable build_sieve_segmented(std::uint64_t limit, std::uint64_t segment_size = std::uint64_t(1) << 20);

// Count of square-free m <= n with exactly k distinct prime factors
// (k = 0 counts only m = 1).  Throws when n > t.limit.
std::uint64_t sigma(const SieveTable& t, unsigned k, std::uint64_t n);
// Same restricted to odd m.
std::uint64_t sigma_odd(const SieveTable& t, unsigned k, std::uint64_t n);

// f-vector of the complex whose faces are the prime-support sets of
// square-free 2..n: entry k-1 is sigma_k(n).  Requires 2 <= n <= t.limit.
IntSeq bjorner_f_vector(const SieveTable& t, std::uint64_t n);

// The same complex made explicit: vertex i = the i-th prime <= n.
// Requires n >= 2 and at most 64 primes <= n (i.e. n <= 311).
SimplicialComplex bjorner_complex(std::uint64_t n);

// Both count inequalities at one n, for every k >= 1 with sigma_{k+1}(n) > 0:
//   shadow_ok:   lower_shadow(sigma_{k+1}^odd(n), k) <= sigma_k^odd(n/2)
//   cycle_ok:    sigma_{k+1}^odd(n) <= upper_shadow(sigma_{k+1}(n), k)
struct InequalityVerdict {
    unsigned k = 0;
    bool shadow_ok = false;
    bool cycle_ok = false;
    std::uint64_t shadow_lhs = 0, shadow_rhs = 0;
    std::uint64_t cycle_lhs = 0, cycle_rhs = 0;
};

struct InequalityReport {
    std::uint64_t n = 0;
    std::vector<InequalityVerdict> per_k;
    bool all_ok() const {
        for (const auto& v : per_k)
            if (!v.shadow_ok || !v.cycle_ok) return false;
        return true;
    }
};

InequalityReport verify_inequalities(const SieveTable& t, std::uint64_t n);

// Every n in [2, limit] and every applicable k at once.
struct BulkInequalityResult {
    std::uint64_t limit = 0;
    std::uint64_t checks = 0;  // (n, k) pairs evaluated
    std::vector<std::pair<std::uint64_t, unsigned>> failures;  // offending (n, k)
    bool all_ok() const { return failures.empty(); }
};

// Serial reference: one forward pass with incremental sigma counters.
BulkInequalityResult verify_inequalities_up_to(const SieveTable& t, std::uint64_t limit);
// Chunked kernel, parallel across chunks when OpenMP is enabled; failure
// list is aggregated in deterministic chunk order.
BulkInequalityResult verify_inequalities_up_to_parallel(const SieveTable& t, std::uint64_t limit,
                                                        std::uint64_t chunk_size = std::uint64_t(1) << 16);

}  // namespace shadowcalc
