#pragma once

#include "shadowcalc/int.hpp"
#include "shadowcalc/seq.hpp"

namespace shadowcalc {

// Partial Euler characteristic chi_k(f, beta) = sum_{j >= k+1} (-1)^{j-k-1} (f_j - beta_j),
// for k >= -1. May be negative on arbitrary sequences. Satisfies
// f_k - chi(k-1) = chi(k) + beta_k for all k >= 0.
Int chi(const IntSeq& f, const IntSeq& beta, long long k);

// Kruskal-Katona: f is the face-count vector of some simplicial complex
// iff lower_shadow(f_k, k) <= f_{k-1} for every k >= 1.
bool is_f_vector(const IntSeq& f);

// Per-index diagnostic for a failed compatibility test.
struct CompatFailure {
    long long k = 0;      // first violated index (k = -1 means the chi(-1) = 1 test)
    std::string detail;   // both sides of the violated condition
};

// The three equivalent characterizations of pairs (f, beta) that occur as
// the face-count vector and reduced Betti sequence of a simplicial complex.
// All are total predicates: a required-nonnegative quantity going negative
// makes the test false rather than an error.
//
//   is_compatible          chi(-1) = 1 and lower_shadow(chi_k + beta_k, k) <= chi_{k-1}
//   is_compatible_upper    chi(-1) = 1 and 0 <= f_k - chi_{k-1} <= upper_shadow(f_k, k)
//   is_compatible_relaxed  chi(-1) = 1 and lower_shadow(chi_k + beta_k, k) <= chi_{k-1} - eps_k
//                          for any 0 <= eps <= delta_seq(f) (componentwise)
//
// On failure, *why (when non-null) receives the first violated index and a
// rendering of both sides.
bool is_compatible(const IntSeq& f, const IntSeq& beta, CompatFailure* why = nullptr);
bool is_compatible_upper(const IntSeq& f, const IntSeq& beta, CompatFailure* why = nullptr);
// Throws std::invalid_argument when eps exceeds delta_seq(f) componentwise.
bool is_compatible_relaxed(const IntSeq& f, const IntSeq& beta, const IntSeq& eps,
                           CompatFailure* why = nullptr);

}  // namespace shadowcalc
