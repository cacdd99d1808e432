#pragma once

#include "shadowcalc/int.hpp"
#include "shadowcalc/macaulay.hpp"

namespace shadowcalc {

// The four numeric shadow operators, all defined through the expansion of
// n at dim k (top binomial lower index k+1) and all 0 at n = 0:
//
//   lower_shadow  sum C(a_t, t-1)     face-count bound one dimension down
//   upper_shadow  sum C(a_t - 1, t)   cycle-space bound (degenerate terms
//                                     a_t = t contribute 0)
//   shift_up      sum C(a_t + 1, t)   satisfies n + lower_shadow(n) = shift_up(n)
//   error_fn      #{t : a_t = t}      number of degenerate terms, at most k+1

Int lower_shadow(const Int& n, unsigned k);
Int upper_shadow(const Int& n, unsigned k);
Int shift_up(const Int& n, unsigned k);
Int error_fn(const Int& n, unsigned k);

// Both sides of the three exchange equivalences tying lower_shadow,
// upper_shadow and error_fn together:
//
//   (a) lower_shadow(n,k) <= m - eps      <=>  n <= upper_shadow(n+m, k)
//   (b) n == upper_shadow(n+m, k)         <=>  lower_shadow(n,k) + error_fn(n+m,k) == m
//   (c) lower_shadow(n,k) == m            <=>  n == upper_shadow(n+m, k)
//                                              and error_fn(n+m,k) == 0
//
// The two booleans of each pair are equal whenever the implementation is
// correct; the report returns both so a violation can be displayed rather
// than silently asserted.
struct ExchangeReport {
    struct Sides {
        bool lhs = false;
        bool rhs = false;
        bool agree() const { return lhs == rhs; }
    };
    Sides a, b, c;
    // operator values behind the verdicts, for diagnostics
    Int shadow_of_n;   // lower_shadow(n, k)
    Int upper_of_sum;  // upper_shadow(n + m, k)
    Int error_of_sum;  // error_fn(n + m, k)

    bool all_agree() const { return a.agree() && b.agree() && c.agree(); }
};

// Throws std::invalid_argument unless 0 <= eps <= error_fn(n+m, k).
ExchangeReport exchange_report(const Int& n, const Int& m, unsigned k, const Int& eps);

}  // namespace shadowcalc
