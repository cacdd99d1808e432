#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "shadowcalc/seq.hpp"

namespace shadowcalc {

// Exhaustive audit of every complex on 1..max_vertices labeled vertices.
// Three layers:
//   soundness   — every realized (f-vector, rational Betti) pair passes the
//                 compatibility test, satisfies the alternating-sum identity,
//                 and has cycle-space dimensions f_k - chi_{k-1} bounded by
//                 upper_shadow(f_k, k);
//   completeness — every compatible (f, beta) with f dominated by the full
//                 simplex on max_vertices vertices is realized by some
//                 enumerated complex;
//   tightness   — for every realized f-vector, the componentwise maximum of
//                 its realized Betti sequences equals psi(f) and is itself
//                 realized, and the closed forms
//                 phi(psi(f) + delta_plus(f)) = f - delta(f) and
//                 phi(psi(f)) <= f hold.
struct EnumerationAudit {
    unsigned max_vertices = 0;
    std::uint64_t complexes = 0;
    std::vector<std::uint64_t> per_vertices;  // [j] = complexes on exactly j+1 vertices
    std::uint64_t pairs = 0;                  // distinct realized (f, beta) pairs
    std::uint64_t fvectors = 0;               // distinct realized f-vectors
    std::uint64_t compatible_pairs = 0;       // compatible pairs in the dominated box
    std::uint64_t soundness_bad = 0;          // per-complex invariant failures
    std::uint64_t completeness_bad = 0;       // compatible but never realized
    std::uint64_t tightness_bad = 0;          // extremal-map failures per f-vector
    std::uint64_t violations_total = 0;
    std::vector<std::string> violations;      // rendered, capped
    bool ok() const { return violations_total == 0; }
};

EnumerationAudit audit_enumeration(unsigned max_vertices);

// Scan over the distinct f-vectors realized on 1..max_vertices vertices for
// the borderline family: nonzero slack delta(f) together with the equality
// phi(psi(f)) + delta(f) + delta_plus(f) == f.
struct FStarHit {
    IntSeq f, delta, delta_plus, phi_psi;
};

struct FStarReport {
    unsigned max_vertices = 0;
    std::uint64_t fvectors = 0;  // distinct f-vectors scanned
    std::vector<FStarHit> hits;
};

FStarReport scan_f_star(unsigned max_vertices);

}  // namespace shadowcalc
