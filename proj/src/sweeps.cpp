#include "shadowcalc/sweeps.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "shadowcalc/compat.hpp"
#include "shadowcalc/extremal.hpp"
#include "shadowcalc/fast_ops.hpp"
#include "shadowcalc/int.hpp"
#include "shadowcalc/macaulay.hpp"
#include "shadowcalc/seq.hpp"
#include "shadowcalc/shadow.hpp"

namespace shadowcalc {

namespace {

constexpr std::size_t kFailCapPerBlock = 4;
constexpr std::size_t kFailCapTotal = 16;
constexpr std::uint64_t kBlock = 1 << 14;

// Deterministic failure aggregation for parallel sweeps: each block keeps
// its first few failure strings; merging in block order gives the same
// list for any thread count.
struct BlockLog {
    std::vector<std::vector<std::string>> blocks;
    explicit BlockLog(std::size_t n) : blocks(n) {}
    void note(std::size_t block, std::string msg) {
        if (blocks[block].size() < kFailCapPerBlock) blocks[block].push_back(std::move(msg));
    }
    std::vector<std::string> merged() const {
        std::vector<std::string> out;
        for (const auto& b : blocks) {
            for (const auto& s : b) {
                if (out.size() >= kFailCapTotal) return out;
                out.push_back(s);
            }
        }
        return out;
    }
};

void require_fast_domain(std::uint64_t max_n, unsigned max_k, const char* who) {
    if (max_n >= fastops::kMaxValue || max_k > fastops::kMaxDim) {
        throw std::invalid_argument(std::string(who) + ": range exceeds the word-sized kernel domain");
    }
}

std::string nk(std::uint64_t n, unsigned k) {
    return "n=" + std::to_string(n) + " k=" + std::to_string(k);
}

std::string nmk(std::uint64_t n, std::uint64_t m, unsigned k) {
    return "n=" + std::to_string(n) + " m=" + std::to_string(m) + " k=" + std::to_string(k);
}

std::uint64_t splitmix(std::uint64_t& s) {
    s += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// operator-value tables indexed [k][v], v <= max_v
template <typename T, typename Fill>
std::vector<std::vector<T>> make_table(std::uint64_t max_v, unsigned max_k, const Fill& fill) {
    std::vector<std::vector<T>> t(max_k + 1, std::vector<T>(max_v + 1));
    for (unsigned k = 0; k <= max_k; ++k) {
        auto& row = t[k];
#pragma omp parallel for schedule(static)
        for (std::int64_t v = 0; v <= static_cast<std::int64_t>(max_v); ++v) {
            row[static_cast<std::size_t>(v)] = fill(static_cast<std::uint64_t>(v), k);
        }
    }
    return t;
}

}  // namespace

SweepResult sweep_roundtrip_exact(std::uint64_t max_n, unsigned max_k) {
    SweepResult r;
    r.name = "roundtrip/exact";
    BlockLog log(1);
    for (std::uint64_t n = 0; n <= max_n; ++n) {
        const Int ni = n;
        for (unsigned k = 0; k <= max_k; ++k) {
            ++r.checked;
            if (evaluate(expand(ni, k)) != ni) log.note(0, nk(n, k));
        }
    }
    r.failures = log.merged();
    return r;
}

SweepResult sweep_roundtrip_fast(std::uint64_t max_n, unsigned max_k) {
    require_fast_domain(max_n, max_k, "sweep_roundtrip_fast");
    SweepResult r;
    r.name = "roundtrip/fast";
    const std::size_t nblocks = static_cast<std::size_t>(max_n / kBlock) + 1;
    BlockLog log(nblocks);
    std::uint64_t checked = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : checked)
    for (std::int64_t b = 0; b < static_cast<std::int64_t>(nblocks); ++b) {
        const std::uint64_t lo = static_cast<std::uint64_t>(b) * kBlock;
        const std::uint64_t hi = std::min(max_n, lo + kBlock - 1);
        for (std::uint64_t n = lo; n <= hi; ++n) {
            for (unsigned k = 0; k <= max_k; ++k) {
                ++checked;
                fastops::Rep rep;
                if (!fastops::expand(n, k, rep) || fastops::evaluate(rep) != n) {
                    log.note(static_cast<std::size_t>(b), nk(n, k));
                }
            }
        }
    }
    r.checked = checked;
    r.failures = log.merged();
    return r;
}

SweepResult sweep_identities_exact(std::uint64_t max_n, unsigned max_k) {
    SweepResult r;
    r.name = "identities/exact";
    BlockLog log(1);
    for (std::uint64_t n = 0; n <= max_n; ++n) {
        const Int ni = n;
        for (unsigned k = 0; k <= max_k; ++k) {
            ++r.checked;
            const Int up = upper_shadow(ni, k);
            const bool shift_ok = ni + lower_shadow(ni, k) == shift_up(ni, k);
            const bool err_ok = error_fn(ni, k) == ni - up - lower_shadow(up, k);
            if (!shift_ok || !err_ok) log.note(0, nk(n, k));
        }
    }
    r.failures = log.merged();
    return r;
}

SweepResult sweep_identities_fast(std::uint64_t max_n, unsigned max_k) {
    require_fast_domain(max_n, max_k, "sweep_identities_fast");
    SweepResult r;
    r.name = "identities/fast";
    const std::size_t nblocks = static_cast<std::size_t>(max_n / kBlock) + 1;
    BlockLog log(nblocks);
    std::uint64_t checked = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : checked)
    for (std::int64_t b = 0; b < static_cast<std::int64_t>(nblocks); ++b) {
        const std::uint64_t lo = static_cast<std::uint64_t>(b) * kBlock;
        const std::uint64_t hi = std::min(max_n, lo + kBlock - 1);
        fastops::Rep rep;
        for (std::uint64_t n = lo; n <= hi; ++n) {
            for (unsigned k = 0; k <= max_k; ++k) {
                ++checked;
                if (!fastops::expand(n, k, rep)) {
                    log.note(static_cast<std::size_t>(b), nk(n, k));
                    continue;
                }
                const std::uint64_t low = fastops::lower_shadow_of(rep);
                const std::uint64_t up = fastops::upper_shadow_of(rep);
                const bool shift_ok = n + low == fastops::shift_up_of(rep);
                const bool err_ok =
                    static_cast<std::int64_t>(fastops::error_fn_of(rep)) ==
                    static_cast<std::int64_t>(n) - static_cast<std::int64_t>(up) - static_cast<std::int64_t>(fastops::lower_shadow(up, k));
                if (!shift_ok || !err_ok) log.note(static_cast<std::size_t>(b), nk(n, k));
            }
        }
    }
    r.checked = checked;
    r.failures = log.merged();
    return r;
}

namespace {

// Pair relations shared by the exact and fast monotonicity sweeps, driven
// by precomputed tables low = lower_shadow, up = upper_shadow, du = shift_up.
template <typename T>
SweepResult run_monotone(std::string name, std::uint64_t max_n, unsigned max_k,
                         const std::vector<std::vector<T>>& low,
                         const std::vector<std::vector<T>>& up,
                         const std::vector<std::vector<T>>& du) {
    SweepResult r;
    r.name = std::move(name);
    const std::size_t nblocks = static_cast<std::size_t>(max_n / kBlock) + 1;
    BlockLog log(nblocks);
    std::uint64_t checked = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : checked)
    for (std::int64_t b = 0; b < static_cast<std::int64_t>(nblocks); ++b) {
        const std::uint64_t lo = std::max<std::uint64_t>(1, static_cast<std::uint64_t>(b) * kBlock);
        const std::uint64_t hi = std::min(max_n, (static_cast<std::uint64_t>(b) + 1) * kBlock - 1);
        for (std::uint64_t m = lo; m <= hi; ++m) {
            for (std::uint64_t n = 0; n < m; ++n) {
                for (unsigned k = 0; k <= max_k; ++k) {
                    ++checked;
                    // lower_shadow monotone; shift_up injective; shift_up
                    // vs upper_shadow adjoint-style implications
                    bool ok = low[k][n] <= low[k][m] && du[k][n] != du[k][m];
                    if (du[k][n] <= static_cast<T>(m)) ok = ok && static_cast<T>(n) <= up[k][m];
                    if (du[k][n] == static_cast<T>(m)) ok = ok && static_cast<T>(n) == up[k][m];
                    if (!ok) log.note(static_cast<std::size_t>(b), nmk(n, m, k));
                }
            }
        }
    }
    r.checked = checked;
    r.failures = log.merged();
    return r;
}

}  // namespace

SweepResult sweep_monotone_exact(std::uint64_t max_n, unsigned max_k) {
    const auto low = make_table<Int>(max_n, max_k, [](std::uint64_t v, unsigned k) { return lower_shadow(Int(v), k); });
    const auto up = make_table<Int>(max_n, max_k, [](std::uint64_t v, unsigned k) { return upper_shadow(Int(v), k); });
    const auto du = make_table<Int>(max_n, max_k, [](std::uint64_t v, unsigned k) { return shift_up(Int(v), k); });
    return run_monotone<Int>("monotone/exact", max_n, max_k, low, up, du);
}

SweepResult sweep_monotone_fast(std::uint64_t max_n, unsigned max_k) {
    require_fast_domain(max_n, max_k, "sweep_monotone_fast");
    const auto low = make_table<std::uint64_t>(max_n, max_k, [](std::uint64_t v, unsigned k) { return fastops::lower_shadow(v, k); });
    const auto up = make_table<std::uint64_t>(max_n, max_k, [](std::uint64_t v, unsigned k) { return fastops::upper_shadow(v, k); });
    const auto du = make_table<std::uint64_t>(max_n, max_k, [](std::uint64_t v, unsigned k) { return fastops::shift_up(v, k); });
    return run_monotone<std::uint64_t>("monotone/fast", max_n, max_k, low, up, du);
}

namespace {

// The three exchange equivalences on tables over [0, 2*max_nm]:
//   (a) low(n) <= m - eps        <=>  n <= up(n+m)      for every valid eps
//   (b) n == up(n+m)             <=>  low(n) + del(n+m) == m
//   (c) low(n) == m              <=>  n == up(n+m) and del(n+m) == 0
template <typename T>
SweepResult run_exchange(std::string name, std::uint64_t max_nm, unsigned max_k,
                         const std::vector<std::vector<T>>& low,
                         const std::vector<std::vector<T>>& up,
                         const std::vector<std::vector<unsigned>>& del) {
    SweepResult r;
    r.name = std::move(name);
    const std::size_t nblocks = static_cast<std::size_t>(max_nm / kBlock) + 1;
    BlockLog log(nblocks);
    std::uint64_t checked = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : checked)
    for (std::int64_t b = 0; b < static_cast<std::int64_t>(nblocks); ++b) {
        const std::uint64_t lo = static_cast<std::uint64_t>(b) * kBlock;
        const std::uint64_t hi = std::min(max_nm, (static_cast<std::uint64_t>(b) + 1) * kBlock - 1);
        for (std::uint64_t n = lo; n <= hi; ++n) {
            for (std::uint64_t m = 0; m <= max_nm; ++m) {
                for (unsigned k = 0; k <= max_k; ++k) {
                    const T& low_n = low[k][n];
                    const T& up_sum = up[k][n + m];
                    const unsigned d = del[k][n + m];
                    const bool rhs_a = static_cast<T>(n) <= up_sum;
                    const bool lhs_b = static_cast<T>(n) == up_sum;
                    const bool rhs_b = low_n + d == static_cast<T>(m);
                    const bool lhs_c = low_n == static_cast<T>(m);
                    const bool rhs_c = lhs_b && d == 0;
                    for (unsigned eps = 0; eps <= d; ++eps) {
                        ++checked;
                        // m - eps may be negative; compare in T after moving eps across
                        const bool lhs_a = low_n + eps <= static_cast<T>(m);
                        bool ok = lhs_a == rhs_a;
                        if (eps == 0) ok = ok && lhs_b == rhs_b && lhs_c == rhs_c;
                        if (!ok) {
                            log.note(static_cast<std::size_t>(b), nmk(n, m, k) + " eps=" + std::to_string(eps));
                        }
                    }
                }
            }
        }
    }
    r.checked = checked;
    r.failures = log.merged();
    return r;
}

}  // namespace

SweepResult sweep_exchange_exact(std::uint64_t max_nm, unsigned max_k) {
    const std::uint64_t top = 2 * max_nm;
    const auto low = make_table<Int>(top, max_k, [](std::uint64_t v, unsigned k) { return lower_shadow(Int(v), k); });
    const auto up = make_table<Int>(top, max_k, [](std::uint64_t v, unsigned k) { return upper_shadow(Int(v), k); });
    const auto del = make_table<unsigned>(top, max_k, [](std::uint64_t v, unsigned k) { return static_cast<unsigned>(error_fn(Int(v), k)); });
    return run_exchange<Int>("exchange/exact", max_nm, max_k, low, up, del);
}

SweepResult sweep_exchange_fast(std::uint64_t max_nm, unsigned max_k) {
    require_fast_domain(2 * max_nm, max_k, "sweep_exchange_fast");
    const std::uint64_t top = 2 * max_nm;
    const auto low = make_table<std::uint64_t>(top, max_k, [](std::uint64_t v, unsigned k) { return fastops::lower_shadow(v, k); });
    const auto up = make_table<std::uint64_t>(top, max_k, [](std::uint64_t v, unsigned k) { return fastops::upper_shadow(v, k); });
    const auto del = make_table<unsigned>(top, max_k, [](std::uint64_t v, unsigned k) { return fastops::error_fn(v, k); });
    return run_exchange<std::uint64_t>("exchange/fast", max_nm, max_k, low, up, del);
}

SweepResult sweep_agreement(std::uint64_t max_n, unsigned max_k) {
    require_fast_domain(max_n, max_k, "sweep_agreement");
    SweepResult r;
    r.name = "agreement/fast-vs-exact";
    const std::size_t nblocks = static_cast<std::size_t>(max_n / kBlock) + 1;
    BlockLog log(nblocks);
    std::uint64_t checked = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : checked)
    for (std::int64_t b = 0; b < static_cast<std::int64_t>(nblocks); ++b) {
        const std::uint64_t lo = static_cast<std::uint64_t>(b) * kBlock;
        const std::uint64_t hi = std::min(max_n, lo + kBlock - 1);
        fastops::Rep rep;
        for (std::uint64_t n = lo; n <= hi; ++n) {
            const Int ni = n;
            for (unsigned k = 0; k <= max_k; ++k) {
                ++checked;
                const MacaulayRep exact = expand(ni, k);
                bool ok = fastops::expand(n, k, rep) && rep.len == exact.term_count();
                for (std::size_t j = 0; ok && j < rep.len; ++j) ok = Int(rep.uppers[j]) == exact.uppers[j];
                ok = ok && Int(fastops::lower_shadow_of(rep)) == lower_shadow(ni, k) &&
                     Int(fastops::upper_shadow_of(rep)) == upper_shadow(ni, k) &&
                     Int(fastops::shift_up_of(rep)) == shift_up(ni, k) &&
                     Int(fastops::error_fn_of(rep)) == error_fn(ni, k);
                if (!ok) log.note(static_cast<std::size_t>(b), nk(n, k));
            }
        }
    }
    r.checked = checked;
    r.failures = log.merged();
    return r;
}

namespace {

IntSeq random_seq(std::uint64_t& s, unsigned max_len, std::uint64_t max_entry) {
    const unsigned len = static_cast<unsigned>(splitmix(s) % (max_len + 1));
    std::vector<Int> v(len);
    for (auto& e : v) e = splitmix(s) % (max_entry + 1);
    return IntSeq(std::move(v));
}

IntSeq random_eps(std::uint64_t& s, const IntSeq& bound) {
    std::vector<Int> v(bound.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        const std::uint64_t cap = to_u64(bound.at(i));
        v[i] = cap == 0 ? 0 : splitmix(s) % (cap + 1);
    }
    return IntSeq(std::move(v));
}

}  // namespace

SweepResult sweep_compat_equivalence(std::uint64_t samples, std::uint64_t seed) {
    SweepResult r;
    r.name = "compat-equivalence";
    const std::size_t nblocks = static_cast<std::size_t>(samples / kBlock) + 1;
    BlockLog log(nblocks);
    std::uint64_t checked = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : checked)
    for (std::int64_t b = 0; b < static_cast<std::int64_t>(nblocks); ++b) {
        const std::uint64_t lo = static_cast<std::uint64_t>(b) * kBlock;
        const std::uint64_t hi = std::min(samples - 1, lo + kBlock - 1);
        for (std::uint64_t i = lo; i <= hi && i < samples; ++i) {
            std::uint64_t s = seed ^ (i * 0xA24BAED4963EE407ull + 1);
            IntSeq f = random_seq(s, 6, 50);
            IntSeq beta = random_seq(s, 6, 50);
            switch (i % 4) {
                case 0:  // uniform random pair
                    break;
                case 1:  // constructed minimal pair: exactly compatible
                    f = phi(beta);
                    break;
                case 2:  // maximal Betti sequence when f qualifies
                    if (!f.is_zero() && is_f_vector(f)) beta = psi(f);
                    break;
                default:  // minimal f-vector bumped upward: near-miss region
                    f = phi(beta).plus(random_seq(s, 4, 2));
                    break;
            }
            ++checked;
            const bool v_lower = is_compatible(f, beta);
            const bool v_upper = is_compatible_upper(f, beta);
            const IntSeq dseq = delta_seq(f);
            const bool v_eps0 = is_compatible_relaxed(f, beta, IntSeq::zero());
            const bool v_full = is_compatible_relaxed(f, beta, dseq);
            const bool v_rand = is_compatible_relaxed(f, beta, random_eps(s, dseq));
            if (v_upper != v_lower || v_eps0 != v_lower || v_full != v_lower || v_rand != v_lower) {
                log.note(static_cast<std::size_t>(b),
                         "f=" + f.str() + " beta=" + beta.str() + " verdicts " + std::to_string(v_lower) + std::to_string(v_upper) + std::to_string(v_eps0) + std::to_string(v_full) + std::to_string(v_rand));
            }
        }
    }
    r.checked = checked;
    r.failures = log.merged();
    return r;
}

}  // namespace shadowcalc
