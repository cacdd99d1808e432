#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "shadowcalc/seq.hpp"

namespace shadowcalc {

// A face is a bitmask over vertex ids [0, vertex_count), bit v = vertex v.
// Vertex counts are capped at 64 so every face fits one word.
using Face = std::uint64_t;

inline unsigned face_card(Face f) { return static_cast<unsigned>(__builtin_popcountll(f)); }

// Order by the smallest vertex in the symmetric difference: the face
// containing it comes first.  On faces of equal cardinality (the only way
// it is used here) this is lexicographic order of the ascending vertex
// lists; across cardinalities it would put a face after its supersets.
inline bool face_lex_less(Face a, Face b) {
    const Face diff = a ^ b;
    return diff != 0 && (a & (diff & -diff)) != 0;
}

// (cardinality, lex) — the storage and boundary-matrix column order.
inline bool face_order_less(Face a, Face b) {
    const unsigned ca = face_card(a), cb = face_card(b);
    if (ca != cb) return ca < cb;
    return face_lex_less(a, b);
}

std::vector<unsigned> face_vertices(Face f);
std::string face_str(Face f);  // "0 1 2"

// Finite simplicial complex on labeled vertices [0, vertex_count).
// The face list excludes the empty face, is downward closed, and is kept
// sorted by (cardinality, lex).  An empty face list is allowed (the void
// family) but most operations require at least one vertex face.
class SimplicialComplex {
  public:
    SimplicialComplex() = default;
    // Takes the complete face list; validates vertex range and downward
    // closure (throws std::invalid_argument on violation).
    SimplicialComplex(unsigned vertex_count, std::vector<Face> faces);

    unsigned vertex_count() const { return vertex_count_; }
    const std::vector<Face>& faces() const { return faces_; }
    bool empty() const { return faces_.empty(); }
    // Dimension = largest face cardinality - 1; -1 when there are no faces.
    int dim() const { return static_cast<int>(max_card_) - 1; }

    // Faces of one cardinality, contiguous in the sorted face list.
    std::span<const Face> faces_of_card(unsigned card) const;
    std::size_t count_of_card(unsigned card) const { return faces_of_card(card).size(); }
    bool contains(Face f) const;

  private:
    unsigned vertex_count_ = 0;
    unsigned max_card_ = 0;
    std::vector<Face> faces_;
    std::vector<std::size_t> card_offset_;  // [t] = first index of cardinality t, t = 1..max_card_+1
};

// Downward closure of explicit facets given as vertex-id lists.
// Facet cardinalities are capped (the closure is materialized in full).
SimplicialComplex from_facets(unsigned vertex_count, const std::vector<std::vector<unsigned>>& facets);

// Same, facets already in mask form.
SimplicialComplex closure_of_masks(unsigned vertex_count, const std::vector<Face>& facet_masks);

// f_i = number of faces of cardinality i + 1.
IntSeq f_vector(const SimplicialComplex& c);

// Parses the CLI facet format "0 1 2; 2 3" into vertex-id lists.
std::vector<std::vector<unsigned>> parse_facets(std::string_view text);

}  // namespace shadowcalc
