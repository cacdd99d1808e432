#pragma once

// Independent slow-path re-implementations used only by the tests.  Each one
// favors the most transparent algorithm available (Pascal's rule, brute
// enumeration of set families, plain rational elimination, trial division)
// so that agreement with the library is evidence rather than a tautology.

#include <cstdint>
#include <map>
#include <vector>

#include "shadowcalc/int.hpp"

namespace oracles {

using shadowcalc::Int;

// C(a, b) by Pascal's rule with memoization.
Int pascal_binomial(unsigned a, unsigned b);

// Every Macaulay expansion at dimension `dim` with value <= max_value, found
// by exhaustively walking the tree of strictly decreasing upper-index lists.
// Returns value -> upper-index list and throws std::logic_error if two
// distinct lists ever produce the same value, so a full map of size
// max_value + 1 certifies both existence and uniqueness on the range.
std::map<Int, std::vector<unsigned>> enumerate_expansions(unsigned dim, unsigned max_value);

// Shadow sizes of colexicographic initial segments: entry n is the number of
// distinct k-element sets obtained by deleting one element from one of the
// first n (k+1)-element subsets of {0, ..., universe-1} in colex order.
// Entries run n = 0 .. max_n; requires C(universe, k+1) >= max_n.
std::vector<std::uint64_t> colex_shadow_sizes(std::uint64_t max_n, unsigned k, unsigned universe);

// Matrix rank by textbook Gaussian elimination on exact rationals.
std::size_t rank_by_rational_elimination(const std::vector<std::vector<Int>>& m);

// Matrix rank over F_p by elimination on residues (p prime).
std::size_t rank_by_prime_elimination(const std::vector<std::vector<int>>& m, unsigned p);

// Trial-division factorization summary of n >= 1.
struct FactorInfo {
    unsigned omega = 0;  // distinct prime factors
    bool squarefree = true;
};
FactorInfo trial_factor(std::uint64_t n);

}  // namespace oracles
