#include "shadowcalc/enumerate.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "shadowcalc/homology.hpp"

namespace shadowcalc {

namespace {

// Candidate faces (cardinality >= 2; singletons are always present) in
// (cardinality, lex) order, plus for each candidate the bitmask of earlier
// candidates that must be chosen first: its one-vertex-removed subsets.
struct CandidateTable {
    unsigned n;
    std::vector<Face> face_of;            // candidate index -> vertex mask
    std::vector<std::uint64_t> requires_; // candidate index -> mask over candidate indices

    explicit CandidateTable(unsigned vertex_count) : n(vertex_count) {
        const Face full = (Face(1) << n) - 1;
        for (Face m = 1; m <= full; ++m)
            if (face_card(m) >= 2) face_of.push_back(m);
        std::sort(face_of.begin(), face_of.end(), face_order_less);
        std::vector<std::size_t> index_of(std::size_t(1) << n, 0);
        for (std::size_t i = 0; i < face_of.size(); ++i) index_of[face_of[i]] = i;
        requires_.assign(face_of.size(), 0);
        for (std::size_t i = 0; i < face_of.size(); ++i) {
            for (Face rest = face_of[i]; rest;) {
                const Face low = rest & -rest;
                rest ^= low;
                const Face sub = face_of[i] ^ low;
                if (face_card(sub) >= 2) requires_[i] |= std::uint64_t(1) << index_of[sub];
            }
        }
    }
};

struct Enumerator {
    const CandidateTable& table;
    const ComplexVisitor& visit;
    std::vector<Face> faces;  // singletons + chosen candidates, maintained in order

    void emit() const { visit(SimplicialComplex(table.n, faces)); }

    // Chosen candidates all have index < start; extend with any candidate
    // >= start whose smaller subsets are already in.  Candidates are added
    // in increasing index order, so each downward-closed family is reached
    // on exactly one path.
    void rec(std::size_t start, std::uint64_t chosen) {
        emit();
        for (std::size_t i = start; i < table.face_of.size(); ++i) {
            if ((chosen & table.requires_[i]) == table.requires_[i]) {
                faces.push_back(table.face_of[i]);
                rec(i + 1, chosen | (std::uint64_t(1) << i));
                faces.pop_back();
            }
        }
    }
};

}  // namespace

void enumerate_complexes(unsigned vertex_count, const ComplexVisitor& visit) {
    if (vertex_count == 0 || vertex_count > kMaxEnumVertices) {
        throw std::invalid_argument("enumerate_complexes: vertex count must be in [1, " + std::to_string(kMaxEnumVertices) + "]");
    }
    const CandidateTable table(vertex_count);
    Enumerator e{table, visit, {}};
    e.faces.reserve(vertex_count + table.face_of.size());
    for (unsigned v = 0; v < vertex_count; ++v) e.faces.push_back(Face(1) << v);
    e.rec(0, 0);
}

void enumerate_up_to(unsigned max_vertices, const ComplexVisitor& visit) {
    if (max_vertices > kMaxEnumVertices) {
        throw std::invalid_argument("enumerate_up_to: vertex count must be <= " + std::to_string(kMaxEnumVertices));
    }
    for (unsigned n = 1; n <= max_vertices; ++n) enumerate_complexes(n, visit);
}

std::uint64_t count_complexes(unsigned vertex_count) {
    std::uint64_t count = 0;
    enumerate_complexes(vertex_count, [&](const SimplicialComplex&) { ++count; });
    return count;
}

std::optional<SimplicialComplex> realize(const IntSeq& f, const IntSeq& beta, unsigned max_vertices) {
    if (max_vertices > kMaxEnumVertices) {
        throw std::invalid_argument("realize: vertex bound exceeds " + std::to_string(kMaxEnumVertices));
    }
    if (f.is_zero() || f.at(0) > max_vertices) return std::nullopt;
    const auto n = static_cast<unsigned>(to_u64(f.at(0)));
    std::optional<SimplicialComplex> hit;
    // The visitor has no early-exit channel; keep it cheap after a hit.
    enumerate_complexes(n, [&](const SimplicialComplex& c) {
        if (hit) return;
        if (f_vector(c) != f) return;
        if (reduced_betti(c, kRationals).betti != beta) return;
        hit = c;
    });
    return hit;
}

}  // namespace shadowcalc
