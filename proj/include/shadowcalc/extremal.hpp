#pragma once

#include "shadowcalc/int.hpp"
#include "shadowcalc/seq.hpp"

namespace shadowcalc {

// Error sequences attached to an f-vector:
//   delta_seq(f)_0 = 0, delta_seq(f)_k = error_fn(f_k, k) for k >= 1
//   delta_plus(f)_k = error_fn(f_{k+1}, k+1)
IntSeq delta_seq(const IntSeq& f);
IntSeq delta_plus(const IntSeq& f);

// psi(f): the componentwise-largest Betti sequence attainable by a complex
// with face-count vector f.  Closed form
//   psi_i = upper_shadow(f_i, i) + upper_shadow(f_{i+1}, i+1) - f_{i+1}.
// Throws std::invalid_argument unless is_f_vector(f) and f != 0.
IntSeq psi(const IntSeq& f);

// phi(beta): the componentwise-smallest face-count vector attainable by a
// complex with Betti sequence beta.  Built top-down: with K the largest
// index where beta is nonzero, chi_k = 0 for k >= K,
// chi_{k-1} = lower_shadow(chi_k + beta_k, k), then f_k = chi_k + beta_k +
// chi_{k-1} and f_0 = chi_0 + beta_0 + 1.  Total on natural sequences.
IntSeq phi(const IntSeq& beta);

// True iff beta is the maximal Betti sequence for f (beta == psi(f)).
// Evaluates two independent characterizations —
//   lower_shadow(chi_k + beta_k, k) + error_fn(f_k, k) == chi_{k-1}
//   f_k - chi_{k-1} == upper_shadow(f_k, k)
// (both together with chi(-1) == 1) — and throws std::logic_error if they
// ever disagree with each other or with beta == psi(f).
// Precondition: is_f_vector(f) and f != 0 (throws std::invalid_argument).
bool is_maximal_pair(const IntSeq& f, const IntSeq& beta);

// True iff f is the minimal f-vector for beta (f == phi(beta)).
// Evaluates two independent characterizations —
//   lower_shadow(chi_k + beta_k, k) == chi_{k-1}
//   f_k - chi_{k-1} == upper_shadow(f_k, k) for all k >= 1 and delta_seq(f) == 0
// — and throws std::logic_error on internal disagreement.
// Precondition: is_compatible(f, beta) (throws std::invalid_argument).
bool is_minimal_pair(const IntSeq& f, const IntSeq& beta);

}  // namespace shadowcalc
