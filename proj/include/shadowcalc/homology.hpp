#pragma once

#include <string>
#include <vector>

#include "shadowcalc/complex.hpp"
#include "shadowcalc/int.hpp"
#include "shadowcalc/seq.hpp"

namespace shadowcalc {

// Coefficient field for homology ranks: the rationals (p = 0) or the prime
// field F_p.
struct FieldTag {
    unsigned p = 0;
    bool is_rational() const { return p == 0; }
    std::string str() const { return is_rational() ? "Q" : "F" + std::to_string(p); }
    bool operator==(const FieldTag&) const = default;
};

inline constexpr FieldTag kRationals{0};
inline constexpr FieldTag kF2{2};

// Reduced Betti numbers and cycle-space dimensions of one complex over one
// field.  Invariants: betti.at(i) <= cycle_dims[i], and the alternating sum
// of (f_i - betti_i) over i >= 0 equals 1 for nonempty complexes.
struct BettiProfile {
    IntSeq betti;                 // reduced Betti numbers
    std::vector<Int> cycle_dims;  // dim ker boundary_k for k = 0..dim
    FieldTag field;
};

// Signed matrix of the reduced boundary map taking k-chains to (k-1)-chains:
// columns are the cardinality-(k+1) faces, rows the cardinality-k faces, in
// (cardinality, lex) order; column F holds sign (-1)^j at row F minus its
// j-th smallest vertex.  k = 0 gives the all-ones row of the augmentation
// onto the empty face.
std::vector<std::vector<int>> boundary_matrix(const SimplicialComplex& c, unsigned k);

// Exact rank over the rationals (fraction-free integer elimination).
std::size_t rank_rational(std::vector<std::vector<Int>> m);
// Exact rank over F_p (modular elimination); p must be prime.
std::size_t rank_prime(const std::vector<std::vector<int>>& m, unsigned p);

// Reduced homology of a nonempty complex: betti_i = dim ker boundary_i -
// rank boundary_{i+1}, with the empty face as the degree -1 chain group.
// Throws std::invalid_argument on an empty complex or a non-prime p.
BettiProfile reduced_betti(const SimplicialComplex& c, FieldTag field = kRationals);

// dim ker boundary_k of the reduced chain complex; 0 when no k-faces exist.
Int cycle_space_dim(const SimplicialComplex& c, unsigned k, FieldTag field = kRationals);

}  // namespace shadowcalc
