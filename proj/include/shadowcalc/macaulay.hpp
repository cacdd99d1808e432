#pragma once

#include <compare>
#include <cstddef>
#include <vector>

#include "shadowcalc/int.hpp"

namespace shadowcalc {

// The unique strictly-decreasing binomial expansion of a natural number.
//
// For operator dimension k ("dim"), a positive n has a unique expansion
//
//   n = C(a_{k+1}, k+1) + C(a_k, k) + ... + C(a_i, i)
//
// with a_{k+1} > a_k > ... > a_i >= i >= 1. The lower indices run
// consecutively from dim+1 down to some i, so only the upper indices are
// stored: uppers[j] is the coefficient whose lower index is dim+1-j.
// Zero is the empty expansion at every dim.
struct MacaulayRep {
    unsigned dim = 0;
    std::vector<Int> uppers;

    unsigned lower_index(std::size_t j) const {
        return dim + 1 - static_cast<unsigned>(j);
    }
    std::size_t term_count() const { return uppers.size(); }
    bool is_zero() const { return uppers.empty(); }

    bool operator==(const MacaulayRep&) const = default;
};

// Exact binomial coefficient; 0 whenever a < b. Both arguments are
// nonnegative.
Int binomial(const Int& a, const Int& b);

// Greedy expansion of n at the given dim: for t = dim+1 downward,
// a_t = max{a : C(a,t) <= remainder}, stopping when the remainder is 0.
MacaulayRep expand(const Int& n, unsigned dim);

// Sum of C(uppers[j], dim+1-j). Throws std::invalid_argument if the term
// list violates strict decrease, a_t >= t, or has more than dim+1 terms.
Int evaluate(const MacaulayRep& rep);

// Symbolic comparison of two expansions at the same dim, without
// evaluating them: equal iff the term lists are identical; otherwise the
// highest differing coefficient decides, and a list that is a strict
// prefix of the other is smaller. Throws std::invalid_argument when the
// dims differ.
std::strong_ordering compare(const MacaulayRep& x, const MacaulayRep& y);

}  // namespace shadowcalc
