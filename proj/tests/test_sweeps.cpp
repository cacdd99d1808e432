#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "shadowcalc/sweeps.hpp"

using namespace shadowcalc;

namespace {
void expect_clean(const SweepResult& r, std::uint64_t min_checked) {
    INFO(r.name << ": " << (r.failures.empty() ? std::string("clean") : r.failures.front()));
    CHECK(r.ok());
    CHECK(r.checked >= min_checked);
}
}  // namespace

TEST_CASE("roundtrip sweeps") {
    expect_clean(sweep_roundtrip_exact(2000, 6), 2001 * 7);
    expect_clean(sweep_roundtrip_fast(20000, 8), 20001 * 9);
}

TEST_CASE("identity sweeps") {
    expect_clean(sweep_identities_exact(2000, 6), 2001 * 7);
    expect_clean(sweep_identities_fast(20000, 8), 20001 * 9);
}

TEST_CASE("monotonicity sweeps") {
    expect_clean(sweep_monotone_exact(300, 4), 1);
    expect_clean(sweep_monotone_fast(1200, 6), 1);
}

TEST_CASE("exchange sweeps") {
    expect_clean(sweep_exchange_exact(100, 3), 1);
    expect_clean(sweep_exchange_fast(400, 4), 1);
}

TEST_CASE("kernel and exact path agree") {
    expect_clean(sweep_agreement(20000, 10), 20001 * 11);
}

TEST_CASE("compatibility forms agree on a mixed corpus") {
    expect_clean(sweep_compat_equivalence(4000, 42), 4000);
}

TEST_CASE("sweeps are reproducible") {
    const auto a = sweep_compat_equivalence(500, 7);
    const auto b = sweep_compat_equivalence(500, 7);
    CHECK(a.checked == b.checked);
    CHECK(a.failures == b.failures);
    const auto c = sweep_roundtrip_fast(5000, 5);
    const auto d = sweep_roundtrip_fast(5000, 5);
    CHECK(c.checked == d.checked);
    CHECK(c.name == d.name);
}
