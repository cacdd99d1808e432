#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>

#include "shadowcalc/fast_ops.hpp"
#include "shadowcalc/int.hpp"
#include "shadowcalc/macaulay.hpp"
#include "shadowcalc/shadow.hpp"

using namespace shadowcalc;

namespace {

// deterministic 64-bit scrambler for sampled large inputs
std::uint64_t mix(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

void check_against_exact(std::uint64_t n, unsigned k) {
    fastops::Rep rep;
    REQUIRE(fastops::expand(n, k, rep));
    const auto exact = expand(Int(n), k);
    REQUIRE(rep.len == exact.uppers.size());
    for (unsigned j = 0; j < rep.len; ++j) CHECK(Int(rep.uppers[j]) == exact.uppers[j]);
    CHECK(fastops::evaluate(rep) == n);
    CHECK(Int(fastops::lower_shadow_of(rep)) == lower_shadow(Int(n), k));
    CHECK(Int(fastops::upper_shadow_of(rep)) == upper_shadow(Int(n), k));
    CHECK(Int(fastops::shift_up_of(rep)) == shift_up(Int(n), k));
    CHECK(Int(fastops::error_fn_of(rep)) == error_fn(Int(n), k));
}

}  // namespace

TEST_CASE("domain boundaries") {
    CHECK(fastops::in_domain(0, 0));
    CHECK(fastops::in_domain(fastops::kMaxValue, fastops::kMaxDim));
    CHECK_FALSE(fastops::in_domain(fastops::kMaxValue + 1, 0));
    CHECK_FALSE(fastops::in_domain(0, fastops::kMaxDim + 1));
    fastops::Rep rep;
    CHECK_FALSE(fastops::expand(fastops::kMaxValue + 1, 0, rep));
    CHECK_FALSE(fastops::expand(0, fastops::kMaxDim + 1, rep));
}

TEST_CASE("capped binomial is exact below the cap and clamps above it") {
    CHECK(fastops::binomial_capped(52, 5, std::uint64_t(1) << 62) == 2598960);
    CHECK(fastops::binomial_capped(5, 9, 100) == 0);
    CHECK(fastops::binomial_capped(40, 20, 1000) == 1001);  // clamped to cap + 1
    CHECK(fastops::binomial_capped(7, 0, 10) == 1);
    // C(120, 60) overflows 128 bits split into naive products; the capped
    // form must still exit cleanly at the cap
    CHECK(fastops::binomial_capped(120, 60, 1000000) == 1000001);
}

TEST_CASE("kernel agrees with the exact path on a dense range") {
    for (unsigned k = 0; k <= 8; ++k)
        for (std::uint64_t n = 0; n <= 3000; ++n) check_against_exact(n, k);
}

TEST_CASE("kernel agrees with the exact path on sampled large inputs") {
    for (unsigned k = 0; k <= fastops::kMaxDim; ++k)
        for (unsigned i = 0; i < 200; ++i) {
            const std::uint64_t n = mix(k * 1000003ull + i) % (fastops::kMaxValue + 1);
            check_against_exact(n, k);
        }
}

TEST_CASE("asserting wrappers match the member forms") {
    for (unsigned k = 0; k <= 6; ++k)
        for (std::uint64_t n : {0ull, 1ull, 5ull, 100ull, 65536ull, (1ull << 48) - 1}) {
            fastops::Rep rep;
            REQUIRE(fastops::expand(n, k, rep));
            CHECK(fastops::lower_shadow(n, k) == fastops::lower_shadow_of(rep));
            CHECK(fastops::upper_shadow(n, k) == fastops::upper_shadow_of(rep));
            CHECK(fastops::shift_up(n, k) == fastops::shift_up_of(rep));
            CHECK(fastops::error_fn(n, k) == fastops::error_fn_of(rep));
        }
}
