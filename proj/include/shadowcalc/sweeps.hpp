#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace shadowcalc {

// Outcome of one bulk verification pass.  `failures` holds a few rendered
// offending inputs (empty means the property held at every checked point);
// the list is deterministic regardless of thread count.
struct SweepResult {
    std::string name;
    std::uint64_t checked = 0;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

// Every sweep exists twice: *_exact walks the arbitrary-precision reference
// implementation serially; *_fast runs the word-sized kernel, parallelized
// with OpenMP when available.  Both check the same property over the same
// index set and are compared by the benchmark tool.

// evaluate(expand(n, k)) == n over n <= max_n, k <= max_k.
SweepResult sweep_roundtrip_exact(std::uint64_t max_n, unsigned max_k);
SweepResult sweep_roundtrip_fast(std::uint64_t max_n, unsigned max_k);

// The two defining identities of the shift and error operators:
//   n + lower_shadow(n, k) == shift_up(n, k)
//   error_fn(n, k) == n - upper_shadow(n, k) - lower_shadow(upper_shadow(n, k), k)
SweepResult sweep_identities_exact(std::uint64_t max_n, unsigned max_k);
SweepResult sweep_identities_fast(std::uint64_t max_n, unsigned max_k);

// Order relations on all pairs n < m <= max_n, k <= max_k:
//   shift_up(n,k) <= m implies n <= upper_shadow(m,k), with equality forced
//   by shift_up(n,k) == m; lower_shadow monotone; shift_up injective.
SweepResult sweep_monotone_exact(std::uint64_t max_n, unsigned max_k);
SweepResult sweep_monotone_fast(std::uint64_t max_n, unsigned max_k);

// Exchange equivalences over all n, m <= max_nm, k <= max_k, and every
// slack value eps in [0, error_fn(n + m, k)]: both sides of each of the
// three equivalence pairs must agree.
SweepResult sweep_exchange_exact(std::uint64_t max_nm, unsigned max_k);
SweepResult sweep_exchange_fast(std::uint64_t max_nm, unsigned max_k);

// Cross-implementation agreement: the word-sized kernel and the
// arbitrary-precision path must produce identical expansions and operator
// values over n <= max_n, k <= max_k.
SweepResult sweep_agreement(std::uint64_t max_n, unsigned max_k);

// The three compatibility tests (lower-shadow form, cycle-bound form,
// slack-relaxed form) must return one shared verdict on every sampled
// (f, beta) pair and every sampled valid slack sequence.  The corpus mixes
// uniform random pairs with constructed compatible ones; fully reproducible
// from `seed`.
SweepResult sweep_compat_equivalence(std::uint64_t samples, std::uint64_t seed);

}  // namespace shadowcalc
