#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "oracles.hpp"
#include "shadowcalc/complex.hpp"
#include "shadowcalc/homology.hpp"

using namespace shadowcalc;

namespace {

std::uint64_t mix(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

// f converted to plain int entries, for the prime-field rank
std::vector<std::vector<int>> to_int_matrix(const std::vector<std::vector<Int>>& m) {
    std::vector<std::vector<int>> out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (const Int& v : m[i]) out[i].push_back(static_cast<int>(to_u64(v < 0 ? -v : v)) * (v < 0 ? -1 : 1));
    return out;
}

// the six-vertex closed surface with Euler characteristic 1
SimplicialComplex projective_plane() {
    return from_facets(6, {{0, 1, 3}, {0, 1, 4}, {0, 2, 3}, {0, 2, 5}, {0, 4, 5},
                           {1, 2, 4}, {1, 2, 5}, {1, 3, 5}, {2, 3, 4}, {3, 4, 5}});
}

}  // namespace

TEST_CASE("boundary matrix shapes and signs for the hollow triangle") {
    const auto c = from_facets(3, {{0, 1}, {0, 2}, {1, 2}});

    const auto aug = boundary_matrix(c, 0);
    REQUIRE(aug.size() == 1);
    REQUIRE(aug[0].size() == 3);
    CHECK(aug[0] == std::vector<int>{1, 1, 1});

    // columns follow edge order {0,1}, {0,2}, {1,2}; rows vertex order
    const auto d1 = boundary_matrix(c, 1);
    REQUIRE(d1.size() == 3);
    REQUIRE(d1[0].size() == 3);
    CHECK(d1[0] == std::vector<int>{-1, -1, 0});
    CHECK(d1[1] == std::vector<int>{1, 0, -1});
    CHECK(d1[2] == std::vector<int>{0, 1, 1});
}

TEST_CASE("boundary of a boundary vanishes") {
    const auto c = from_facets(5, {{0, 1, 2, 3}, {1, 2, 4}, {0, 4}});
    for (unsigned k = 1; k + 1 <= static_cast<unsigned>(c.dim()); ++k) {
        const auto a = boundary_matrix(c, k);
        const auto b = boundary_matrix(c, k + 1);
        REQUIRE(!a.empty());
        REQUIRE(!b.empty());
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b[0].size(); ++j) {
                int sum = 0;
                for (std::size_t t = 0; t < b.size(); ++t) sum += a[i][t] * b[t][j];
                CHECK(sum == 0);
            }
    }
}

TEST_CASE("exact rank on handpicked matrices") {
    CHECK(rank_rational({{Int(2), Int(0), Int(1)}, {Int(0), Int(3), Int(1)}, {Int(0), Int(0), Int(5)}}) == 3);
    CHECK(rank_rational({{Int(1), Int(2)}, {Int(2), Int(4)}}) == 1);
    CHECK(rank_rational({{Int(0), Int(0)}, {Int(0), Int(0)}}) == 0);
    CHECK(rank_rational({}) == 0);
    CHECK(rank_rational({{Int(0), Int(7)}, {Int(3), Int(0)}}) == 2);  // needs a row swap

    CHECK(rank_prime({{1, 1}, {1, 1}}, 2) == 1);
    CHECK(rank_prime({{2}}, 2) == 0);  // 2 vanishes mod 2
    CHECK(rank_prime({{2}}, 3) == 1);
    CHECK(rank_prime({{1, 2}, {3, 4}}, 2) == 1);  // det = -2 vanishes mod 2
    CHECK(rank_prime({{1, 2}, {3, 4}}, 3) == 2);
    CHECK_THROWS_AS(reduced_betti(from_facets(1, {{0}}), FieldTag{4}), std::invalid_argument);
    CHECK_THROWS_AS(reduced_betti(from_facets(1, {{0}}), FieldTag{1}), std::invalid_argument);
}

TEST_CASE("ranks agree with plain elimination on sampled matrices") {
    for (unsigned trial = 0; trial < 150; ++trial) {
        const std::size_t rows = 1 + mix(trial * 3 + 0) % 6;
        const std::size_t cols = 1 + mix(trial * 3 + 1) % 6;
        std::vector<std::vector<Int>> m(rows, std::vector<Int>(cols));
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                m[i][j] = static_cast<long long>(mix(trial * 1000 + i * 37 + j) % 9) - 4;
        CHECK(rank_rational(m) == oracles::rank_by_rational_elimination(m));
        const auto mi = to_int_matrix(m);
        CHECK(rank_prime(mi, 2) == oracles::rank_by_prime_elimination(mi, 2));
        CHECK(rank_prime(mi, 3) == oracles::rank_by_prime_elimination(mi, 3));
        CHECK(rank_prime(mi, 5) == oracles::rank_by_prime_elimination(mi, 5));
    }
}

TEST_CASE("reduced homology of worked complexes") {
    CHECK(reduced_betti(from_facets(1, {{0}})).betti.is_zero());
    CHECK(reduced_betti(from_facets(5, {{0}, {1}, {2}, {3}, {4}})).betti == parse_seq("4"));
    CHECK(reduced_betti(from_facets(3, {{0, 1}, {0, 2}, {1, 2}})).betti == parse_seq("0,1"));
    CHECK(reduced_betti(from_facets(3, {{0, 1, 2}})).betti.is_zero());
    CHECK(reduced_betti(from_facets(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}})).betti == parse_seq("0,0,1"));
    CHECK(reduced_betti(from_facets(4, {{0, 1}, {2, 3}})).betti == parse_seq("1"));
    CHECK(reduced_betti(from_facets(4, {{0, 1, 2, 3}})).betti.is_zero());

    // two hollow triangles sharing a vertex: one component, two loops
    CHECK(reduced_betti(from_facets(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}})).betti == parse_seq("0,2"));

    CHECK_THROWS_AS(reduced_betti(SimplicialComplex(2, {})), std::invalid_argument);
}

TEST_CASE("betti profile carries cycle dimensions and the field") {
    const auto prof = reduced_betti(from_facets(3, {{0, 1}, {0, 2}, {1, 2}}), kRationals);
    CHECK(prof.field == kRationals);
    REQUIRE(prof.cycle_dims.size() == 2);
    CHECK(prof.cycle_dims[0] == 2);  // 3 vertices - rank of the all-ones row
    CHECK(prof.cycle_dims[1] == 1);  // one independent 1-cycle
    CHECK(cycle_space_dim(from_facets(3, {{0, 1}, {0, 2}, {1, 2}}), 1) == 1);
    CHECK(cycle_space_dim(from_facets(3, {{0, 1}, {0, 2}, {1, 2}}), 5) == 0);
}

TEST_CASE("torsion shows up as a field-dependent Betti sequence") {
    const auto rp2 = projective_plane();
    // sanity: 10 triangles on 6 vertices covering every edge exactly twice
    // make a closed surface, and Euler characteristic 6 - 15 + 10 = 1 pins
    // its homeomorphism type
    CHECK(f_vector(rp2) == parse_seq("6,15,10"));
    for (Face e : rp2.faces_of_card(2)) {
        unsigned uses = 0;
        for (Face t : rp2.faces_of_card(3))
            if ((t & e) == e) ++uses;
        CHECK(uses == 2);
    }
    CHECK(reduced_betti(rp2, kRationals).betti.is_zero());
    CHECK(reduced_betti(rp2, kF2).betti == parse_seq("0,1,1"));
    CHECK(reduced_betti(rp2, FieldTag{3}).betti.is_zero());
    CHECK(reduced_betti(rp2, FieldTag{7919}).betti.is_zero());
}

TEST_CASE("field tags render for output") {
    CHECK(kRationals.str() == "Q");
    CHECK(kF2.str() == "F2");
    CHECK(FieldTag{5}.str() == "F5");
}
