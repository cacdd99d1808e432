#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "shadowcalc/complex.hpp"
#include "shadowcalc/seq.hpp"

namespace shadowcalc {

// Hard cap for exhaustive enumeration; 7 vertices is out of desk range.
inline constexpr unsigned kMaxEnumVertices = 6;

using ComplexVisitor = std::function<void(const SimplicialComplex&)>;

// Visits every simplicial complex that uses exactly the labeled vertex set
// [0, vertex_count) — i.e. every downward-closed family containing all the
// singletons — each exactly once, in a deterministic order (depth-first
// over candidate faces sorted by (cardinality, lex)).
// Throws std::invalid_argument when vertex_count is 0 or > kMaxEnumVertices.
void enumerate_complexes(unsigned vertex_count, const ComplexVisitor& visit);

// Union over exact vertex counts 1..max_vertices, ascending.
void enumerate_up_to(unsigned max_vertices, const ComplexVisitor& visit);

// Number of complexes on exactly vertex_count labeled vertices.
std::uint64_t count_complexes(unsigned vertex_count);

// First enumerated complex (on exactly f_0 vertices) whose f-vector is f and
// whose rational Betti sequence is beta; nullopt when none exists within the
// bound or when f_0 exceeds max_vertices.
std::optional<SimplicialComplex> realize(const IntSeq& f, const IntSeq& beta, unsigned max_vertices);

}  // namespace shadowcalc
