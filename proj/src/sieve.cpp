#include "shadowcalc/sieve.hpp"

#include <array>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "shadowcalc/fast_ops.hpp"
#include "shadowcalc/int.hpp"
#include "shadowcalc/shadow.hpp"

namespace shadowcalc {

namespace {

// omega(m) <= 15 for any m that fits 64 bits (the product of the first 16
// primes already exceeds 2^64).
constexpr unsigned kMaxOmega = 15;
using Counts = std::array<std::uint64_t, kMaxOmega + 2>;

std::uint64_t shadow_lower_u64(std::uint64_t n, unsigned k) {
    fastops::Rep rep;
    if (fastops::expand(n, k, rep)) return fastops::lower_shadow_of(rep);
    return to_u64(lower_shadow(Int(n), k));
}

std::uint64_t shadow_upper_u64(std::uint64_t n, unsigned k) {
    fastops::Rep rep;
    if (fastops::expand(n, k, rep)) return fastops::upper_shadow_of(rep);
    return to_u64(upper_shadow(Int(n), k));
}

void require_range(const SieveTable& t, std::uint64_t n, const char* who) {
    if (n > t.limit()) {
        throw std::out_of_range(std::string(who) + ": n = " + std::to_string(n) + " exceeds table limit " + std::to_string(t.limit()));
    }
}

void check_budget(std::uint64_t limit, std::uint64_t bytes_per_entry) {
    if (limit == 0) throw std::invalid_argument("build_sieve: limit must be >= 1");
    const std::uint64_t budget = sieve_mem_budget();
    if (limit >= budget / bytes_per_entry) {
        throw std::invalid_argument("build_sieve: limit " + std::to_string(limit) + " exceeds the memory budget (SHADOWCALC_MEM_LIMIT = " + std::to_string(budget) + " bytes)");
    }
    if (limit > 0xFFFFFFFFull) {
        throw std::invalid_argument("build_sieve: limit above 2^32 is not supported");
    }
}

std::vector<std::uint32_t> primes_up_to(std::uint32_t bound) {
    std::vector<bool> composite(static_cast<std::size_t>(bound) + 1, false);
    std::vector<std::uint32_t> primes;
    for (std::uint32_t p = 2; p <= bound; ++p) {
        if (composite[p]) continue;
        primes.push_back(p);
        for (std::uint64_t q = std::uint64_t(p) * p; q <= bound; q += p) composite[q] = true;
    }
    return primes;
}

}  // namespace

std::uint64_t sieve_mem_budget() {
    // re-read on every call so the limit can be changed between builds
    if (const char* env = std::getenv("SHADOWCALC_MEM_LIMIT")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<std::uint64_t>(v);
    }
    return std::uint64_t(4) << 30;  // 4 GiB
}

SieveTable build_sieve(std::uint64_t limit) {
    check_budget(limit, 7);  // omega + squarefree bit + 4-byte spf + primes list
    std::vector<std::uint8_t> omega(limit + 1, 0);
    std::vector<bool> squarefree(limit + 1, true);
    if (limit >= 1) squarefree[0] = false;
    std::vector<std::uint32_t> spf(limit + 1, 0);
    std::vector<std::uint32_t> primes;
    for (std::uint64_t m = 2; m <= limit; ++m) {
        if (spf[m] == 0) {
            spf[m] = static_cast<std::uint32_t>(m);
            primes.push_back(static_cast<std::uint32_t>(m));
        }
        for (std::uint32_t p : primes) {
            if (p > spf[m] || p > limit / m) break;
            spf[p * m] = p;
        }
        // smallest prime p of m and the cofactor q = m / p drive the
        // recurrences: p | q repeats a factor, otherwise p is new.
        const std::uint64_t p = spf[m], q = m / p;
        if (q % p == 0) {
            omega[m] = omega[q];
            squarefree[m] = false;
        } else {
            omega[m] = omega[q] + 1;
            squarefree[m] = squarefree[q];
        }
    }
    return SieveTable(limit, std::move(omega), std::move(squarefree));
}

SieveTable build_sieve_segmented(std::uint64_t limit, std::uint64_t segment_size) {
    check_budget(limit, 3);  // omega + squarefree bit + segment residuals
    if (segment_size < 64) segment_size = 64;
    segment_size &= ~std::uint64_t(63);  // segment boundaries stay byte-aligned in the bit vector
    std::vector<std::uint8_t> omega(limit + 1, 0);
    std::vector<bool> squarefree(limit + 1, true);
    squarefree[0] = false;
    std::uint32_t root = 1;
    while (std::uint64_t(root + 1) * (root + 1) <= limit) ++root;
    const auto primes = primes_up_to(root);
    const auto segments = static_cast<std::int64_t>(limit / segment_size + 1);
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t s = 0; s < segments; ++s) {
        const std::uint64_t lo = std::max<std::uint64_t>(2, static_cast<std::uint64_t>(s) * segment_size);
        const std::uint64_t hi = std::min(limit, (static_cast<std::uint64_t>(s) + 1) * segment_size - 1);
        if (lo > hi) continue;
        std::vector<std::uint64_t> residual(hi - lo + 1);
        for (std::uint64_t m = lo; m <= hi; ++m) residual[m - lo] = m;
        for (std::uint32_t p : primes) {
            if (std::uint64_t(p) * p > hi) break;
            for (std::uint64_t m = (lo + p - 1) / p * p; m <= hi; m += p) {
                std::uint64_t& r = residual[m - lo];
                unsigned e = 0;
                while (r % p == 0) {
                    r /= p;
                    ++e;
                }
                ++omega[m];
                if (e >= 2) squarefree[m] = false;
            }
        }
        for (std::uint64_t m = lo; m <= hi; ++m) {
            if (residual[m - lo] > 1) ++omega[m];  // one leftover prime > sqrt(limit)
        }
    }
    return SieveTable(limit, std::move(omega), std::move(squarefree));
}

std::uint64_t sigma(const SieveTable& t, unsigned k, std::uint64_t n) {
    require_range(t, n, "sigma");
    if (k == 0) return n >= 1 ? 1 : 0;
    std::uint64_t count = 0;
    for (std::uint64_t m = 2; m <= n; ++m) count += t.is_squarefree(m) && t.omega(m) == k;
    return count;
}

std::uint64_t sigma_odd(const SieveTable& t, unsigned k, std::uint64_t n) {
    require_range(t, n, "sigma_odd");
    if (k == 0) return n >= 1 ? 1 : 0;
    std::uint64_t count = 0;
    for (std::uint64_t m = 3; m <= n; m += 2) count += t.is_squarefree(m) && t.omega(m) == k;
    return count;
}

IntSeq bjorner_f_vector(const SieveTable& t, std::uint64_t n) {
    require_range(t, n, "bjorner_f_vector");
    if (n < 2) throw std::invalid_argument("bjorner_f_vector: n must be >= 2");
    Counts counts{};
    for (std::uint64_t m = 2; m <= n; ++m)
        if (t.is_squarefree(m)) ++counts[t.omega(m)];
    std::vector<Int> f;
    for (unsigned k = 1; k <= kMaxOmega && counts[k] > 0; ++k) f.emplace_back(counts[k]);
    return IntSeq(std::move(f));
}

SimplicialComplex bjorner_complex(std::uint64_t n) {
    if (n < 2) throw std::invalid_argument("bjorner_complex: n must be >= 2");
    if (n > 311) throw std::invalid_argument("bjorner_complex: more than 64 primes <= n");
    std::vector<std::uint32_t> primes;
    for (std::uint32_t p = 2; p <= n; ++p) {
        bool prime = true;
        for (std::uint32_t d = 2; d * d <= p; ++d)
            if (p % d == 0) prime = false;
        if (prime) primes.push_back(p);
    }
    std::vector<Face> faces;
    for (std::uint64_t m = 2; m <= n; ++m) {
        Face mask = 0;
        std::uint64_t r = m;
        bool squarefree = true;
        for (std::size_t i = 0; i < primes.size() && r > 1; ++i) {
            if (r % primes[i]) continue;
            r /= primes[i];
            if (r % primes[i] == 0) squarefree = false;
            mask |= Face(1) << i;
        }
        if (squarefree && r == 1) faces.push_back(mask);
    }
    return SimplicialComplex(static_cast<unsigned>(primes.size()), std::move(faces));
}

InequalityReport verify_inequalities(const SieveTable& t, std::uint64_t n) {
    require_range(t, n, "verify_inequalities");
    Counts all{}, odd{}, half_odd{};
    for (std::uint64_t m = 2; m <= n; ++m) {
        if (!t.is_squarefree(m)) continue;
        const unsigned w = t.omega(m);
        ++all[w];
        if (m & 1) {
            ++odd[w];
            if (m <= n / 2) ++half_odd[w];
        }
    }
    InequalityReport report;
    report.n = n;
    for (unsigned k = 1; k <= kMaxOmega && all[k + 1] > 0; ++k) {
        InequalityVerdict v;
        v.k = k;
        v.shadow_lhs = shadow_lower_u64(odd[k + 1], k);
        v.shadow_rhs = half_odd[k];
        v.shadow_ok = v.shadow_lhs <= v.shadow_rhs;
        v.cycle_lhs = odd[k + 1];
        v.cycle_rhs = shadow_upper_u64(all[k + 1], k);
        v.cycle_ok = v.cycle_lhs <= v.cycle_rhs;
        report.per_k.push_back(v);
    }
    return report;
}

namespace {

// One verification step shared by the serial and chunked walkers: n has
// already been folded into the counters.
template <typename OnFailure>
void check_at(std::uint64_t n, const Counts& all, const Counts& odd, const Counts& half_odd,
              const Counts& lhs_shadow, const Counts& rhs_cycle, std::uint64_t& checks,
              const OnFailure& on_failure) {
    for (unsigned k = 1; k <= kMaxOmega && all[k + 1] > 0; ++k) {
        ++checks;
        const bool shadow_ok = lhs_shadow[k] <= half_odd[k];
        const bool cycle_ok = odd[k + 1] <= rhs_cycle[k];
        if (!shadow_ok || !cycle_ok) on_failure(n, k);
    }
}

// Folds m into the running sigma counters; returns omega(m) when m matters.
inline void fold(const SieveTable& t, std::uint64_t m, Counts& all, Counts& odd,
                 Counts& lhs_shadow, Counts& rhs_cycle) {
    if (m < 2 || !t.is_squarefree(m)) return;
    const unsigned w = t.omega(m);
    ++all[w];
    if (w >= 2) rhs_cycle[w - 1] = shadow_upper_u64(all[w], w - 1);
    if (m & 1) {
        ++odd[w];
        if (w >= 2) lhs_shadow[w - 1] = shadow_lower_u64(odd[w], w - 1);
    }
}

inline void fold_half(const SieveTable& t, std::uint64_t m, Counts& half_odd) {
    if (m >= 2 && (m & 1) && t.is_squarefree(m)) ++half_odd[t.omega(m)];
}

}  // namespace

BulkInequalityResult verify_inequalities_up_to(const SieveTable& t, std::uint64_t limit) {
    require_range(t, limit, "verify_inequalities_up_to");
    BulkInequalityResult result;
    result.limit = limit;
    Counts all{}, odd{}, half_odd{}, lhs_shadow{}, rhs_cycle{};
    for (std::uint64_t n = 2; n <= limit; ++n) {
        if ((n & 1) == 0) fold_half(t, n / 2, half_odd);
        fold(t, n, all, odd, lhs_shadow, rhs_cycle);
        check_at(n, all, odd, half_odd, lhs_shadow, rhs_cycle, result.checks,
                 [&](std::uint64_t bad_n, unsigned bad_k) { result.failures.emplace_back(bad_n, bad_k); });
    }
    return result;
}

BulkInequalityResult verify_inequalities_up_to_parallel(const SieveTable& t, std::uint64_t limit,
                                                        std::uint64_t chunk_size) {
    require_range(t, limit, "verify_inequalities_up_to_parallel");
    if (chunk_size < 2) chunk_size = 2;
    const auto chunks = static_cast<std::int64_t>(limit / chunk_size + 1);
    // pass 1: per-chunk sigma contributions (counts over each chunk's m range)
    std::vector<Counts> part_all(chunks, Counts{}), part_odd(chunks, Counts{});
#pragma omp parallel for schedule(static)
    for (std::int64_t c = 0; c < chunks; ++c) {
        const std::uint64_t lo = std::max<std::uint64_t>(2, static_cast<std::uint64_t>(c) * chunk_size);
        const std::uint64_t hi = std::min(limit, (static_cast<std::uint64_t>(c) + 1) * chunk_size - 1);
        for (std::uint64_t m = lo; m <= hi; ++m) {
            if (!t.is_squarefree(m)) continue;
            const unsigned w = t.omega(m);
            ++part_all[c][w];
            if (m & 1) ++part_odd[c][w];
        }
    }
    // serial prefix: counts over [2, c * chunk_size)
    std::vector<Counts> pre_all(chunks + 1, Counts{}), pre_odd(chunks + 1, Counts{});
    for (std::int64_t c = 0; c < chunks; ++c) {
        for (unsigned w = 0; w <= kMaxOmega + 1; ++w) {
            pre_all[c + 1][w] = pre_all[c][w] + part_all[c][w];
            pre_odd[c + 1][w] = pre_odd[c][w] + part_odd[c][w];
        }
    }
    // pass 2: each chunk replays its own n range from the prefix state
    std::vector<std::vector<std::pair<std::uint64_t, unsigned>>> fails(chunks);
    std::uint64_t checks_total = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : checks_total)
    for (std::int64_t c = 0; c < chunks; ++c) {
        const std::uint64_t lo = std::max<std::uint64_t>(2, static_cast<std::uint64_t>(c) * chunk_size);
        const std::uint64_t hi = std::min(limit, (static_cast<std::uint64_t>(c) + 1) * chunk_size - 1);
        if (lo > hi) continue;
        Counts all = pre_all[c], odd = pre_odd[c], half_odd{}, lhs_shadow{}, rhs_cycle{};
        // half-cursor state at position (lo - 1) / 2: prefix of the chunk
        // containing it plus a short replay of that chunk's front
        const std::uint64_t h0 = (lo - 1) / 2;
        const std::int64_t hc = static_cast<std::int64_t>(h0 / chunk_size);
        half_odd = pre_odd[hc];
        for (std::uint64_t m = std::max<std::uint64_t>(2, static_cast<std::uint64_t>(hc) * chunk_size); m <= h0; ++m) fold_half(t, m, half_odd);
        // seed the cached shadow values from the prefix counters
        for (unsigned k = 1; k <= kMaxOmega; ++k) {
            lhs_shadow[k] = shadow_lower_u64(odd[k + 1], k);
            rhs_cycle[k] = shadow_upper_u64(all[k + 1], k);
        }
        std::uint64_t checks = 0;
        for (std::uint64_t n = lo; n <= hi; ++n) {
            if ((n & 1) == 0) fold_half(t, n / 2, half_odd);
            fold(t, n, all, odd, lhs_shadow, rhs_cycle);
            check_at(n, all, odd, half_odd, lhs_shadow, rhs_cycle, checks,
                     [&](std::uint64_t bad_n, unsigned bad_k) { fails[c].emplace_back(bad_n, bad_k); });
        }
        checks_total += checks;
    }
    BulkInequalityResult result;
    result.limit = limit;
    result.checks = checks_total;
    for (auto& f : fails) result.failures.insert(result.failures.end(), f.begin(), f.end());
    return result;
}

}  // namespace shadowcalc
