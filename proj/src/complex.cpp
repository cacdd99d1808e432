#include "shadowcalc/complex.hpp"

#include <algorithm>
#include <stdexcept>

namespace shadowcalc {

namespace {

// Facets above this cardinality would materialize > 2^20 subset faces.
constexpr unsigned kMaxFacetCard = 20;
constexpr std::size_t kMaxFaces = std::size_t(1) << 22;

}  // namespace

std::vector<unsigned> face_vertices(Face f) {
    std::vector<unsigned> out;
    out.reserve(face_card(f));
    while (f) {
        const Face low = f & -f;
        out.push_back(static_cast<unsigned>(__builtin_ctzll(low)));
        f ^= low;
    }
    return out;
}

std::string face_str(Face f) {
    std::string out;
    for (unsigned v : face_vertices(f)) {
        if (!out.empty()) out += ' ';
        out += std::to_string(v);
    }
    return out;
}

SimplicialComplex::SimplicialComplex(unsigned vertex_count, std::vector<Face> faces)
    : vertex_count_(vertex_count), faces_(std::move(faces)) {
    if (vertex_count_ > 64) throw std::invalid_argument("SimplicialComplex: vertex_count > 64");
    const Face range_mask = vertex_count_ == 64 ? ~Face(0) : (Face(1) << vertex_count_) - 1;
    std::sort(faces_.begin(), faces_.end(), face_order_less);
    faces_.erase(std::unique(faces_.begin(), faces_.end()), faces_.end());
    for (Face f : faces_) {
        if (f == 0) throw std::invalid_argument("SimplicialComplex: the empty face is implicit, not stored");
        if (f & ~range_mask) throw std::invalid_argument("SimplicialComplex: vertex id out of range");
    }
    max_card_ = faces_.empty() ? 0 : face_card(faces_.back());
    card_offset_.assign(max_card_ + 2, faces_.size());
    for (std::size_t i = faces_.size(); i-- > 0;) card_offset_[face_card(faces_[i])] = i;
    // offsets for cardinalities that do not occur point at the next block
    for (unsigned t = max_card_; t >= 1; --t) {
        if (card_offset_[t] > card_offset_[t + 1]) card_offset_[t] = card_offset_[t + 1];
    }
    // downward closure: removing one vertex from any face must stay inside
    for (Face f : faces_) {
        if (face_card(f) == 1) continue;
        for (Face rest = f; rest;) {
            const Face low = rest & -rest;
            rest ^= low;
            if (!contains(f ^ low)) {
                throw std::invalid_argument("SimplicialComplex: face list is not downward closed (missing " + face_str(f ^ low) + ")");
            }
        }
    }
}

std::span<const Face> SimplicialComplex::faces_of_card(unsigned card) const {
    if (card < 1 || card > max_card_) return {};
    return std::span<const Face>(faces_).subspan(card_offset_[card], card_offset_[card + 1] - card_offset_[card]);
}

bool SimplicialComplex::contains(Face f) const {
    return std::binary_search(faces_.begin(), faces_.end(), f, face_order_less);
}

SimplicialComplex closure_of_masks(unsigned vertex_count, const std::vector<Face>& facet_masks) {
    std::vector<Face> all;
    for (Face facet : facet_masks) {
        if (facet == 0) throw std::invalid_argument("from_facets: empty facet");
        if (face_card(facet) > kMaxFacetCard) {
            throw std::invalid_argument("from_facets: facet with more than " + std::to_string(kMaxFacetCard) + " vertices; closure would not fit in memory");
        }
        // iterate all nonempty submasks of facet
        for (Face sub = facet;; sub = (sub - 1) & facet) {
            if (sub != 0) all.push_back(sub);
            if (sub == 0) break;
        }
        if (all.size() > 4 * kMaxFaces) {  // coarse guard before dedup
            std::sort(all.begin(), all.end());
            all.erase(std::unique(all.begin(), all.end()), all.end());
            if (all.size() > kMaxFaces) throw std::invalid_argument("from_facets: complex too large");
        }
    }
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    if (all.size() > kMaxFaces) throw std::invalid_argument("from_facets: complex too large");
    return SimplicialComplex(vertex_count, std::move(all));
}

SimplicialComplex from_facets(unsigned vertex_count, const std::vector<std::vector<unsigned>>& facets) {
    std::vector<Face> masks;
    masks.reserve(facets.size());
    for (const auto& facet : facets) {
        if (facet.empty()) throw std::invalid_argument("from_facets: empty facet");
        Face m = 0;
        for (unsigned v : facet) {
            if (v >= vertex_count) {
                throw std::invalid_argument("from_facets: vertex id " + std::to_string(v) + " out of range [0, " + std::to_string(vertex_count) + ")");
            }
            m |= Face(1) << v;
        }
        masks.push_back(m);
    }
    return closure_of_masks(vertex_count, masks);
}

IntSeq f_vector(const SimplicialComplex& c) {
    std::vector<Int> counts(static_cast<std::size_t>(c.dim() + 1), Int(0));
    for (unsigned t = 1; t <= static_cast<unsigned>(c.dim() + 1); ++t) {
        counts[t - 1] = static_cast<std::uint64_t>(c.count_of_card(t));
    }
    return IntSeq(std::move(counts));
}

std::vector<std::vector<unsigned>> parse_facets(std::string_view text) {
    std::vector<std::vector<unsigned>> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t semi = text.find(';', pos);
        std::string_view part = text.substr(pos, semi == std::string_view::npos ? std::string_view::npos : semi - pos);
        std::vector<unsigned> facet;
        std::size_t i = 0;
        while (i < part.size()) {
            while (i < part.size() && part[i] == ' ') ++i;
            std::size_t j = i;
            while (j < part.size() && part[j] != ' ') ++j;
            if (j > i) {
                std::string_view tok = part.substr(i, j - i);
                if (tok.find_first_not_of("0123456789") != std::string_view::npos) {
                    throw std::invalid_argument("facets: bad token \"" + std::string(tok) + "\"");
                }
                unsigned long v = std::stoul(std::string(tok));
                if (v >= 64) throw std::invalid_argument("facets: vertex id " + std::string(tok) + " exceeds 63");
                facet.push_back(static_cast<unsigned>(v));
            }
            i = j;
        }
        if (!facet.empty()) out.push_back(std::move(facet));
        if (semi == std::string_view::npos) break;
        pos = semi + 1;
    }
    return out;
}

}  // namespace shadowcalc
