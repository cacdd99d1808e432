#include "shadowcalc/fast_ops.hpp"

#include <cassert>

namespace shadowcalc::fastops {

bool in_domain(std::uint64_t n, unsigned k) {
    return n <= kMaxValue && k <= kMaxDim;
}

std::uint64_t binomial_capped(std::uint64_t a, std::uint64_t b, std::uint64_t cap) {
    if (a < b) return 0;
    std::uint64_t s = (b < a - b) ? b : a - b;
    // Prefix i equals C(a-s+i, i); prefixes are nondecreasing for s = min(b, a-b).
    unsigned __int128 r = 1;
    for (std::uint64_t i = 1; i <= s; ++i) {
        r = r * (a - s + i) / i;
        if (r > cap) return cap + 1;
    }
    return static_cast<std::uint64_t>(r);
}

namespace {

// Largest a >= t with C(a,t) <= rem, rem >= 1.
std::uint64_t max_upper_index(std::uint64_t rem, unsigned t) {
    if (t == 1) return rem;
    std::uint64_t lo = 0, hi = 1;
    while (binomial_capped(t + hi, t, rem) <= rem) {
        lo = hi;
        hi <<= 1;
    }
    while (hi - lo > 1) {
        std::uint64_t mid = lo + (hi - lo) / 2;
        if (binomial_capped(t + mid, t, rem) <= rem)
            lo = mid;
        else
            hi = mid;
    }
    return t + lo;
}

constexpr std::uint64_t kNoCap = ~0ull - 1;

}  // namespace

bool expand(std::uint64_t n, unsigned dim, Rep& out) {
    if (!in_domain(n, dim)) return false;
    out.dim = dim;
    out.len = 0;
    std::uint64_t rem = n;
    for (unsigned t = dim + 1; t >= 1 && rem > 0; --t) {
        std::uint64_t a = max_upper_index(rem, t);
        rem -= binomial_capped(a, t, kNoCap);
        out.uppers[out.len++] = a;
    }
    return true;
}

std::uint64_t evaluate(const Rep& rep) {
    std::uint64_t total = 0;
    for (unsigned j = 0; j < rep.len; ++j)
        total += binomial_capped(rep.uppers[j], rep.dim + 1 - j, kNoCap);
    return total;
}

std::uint64_t lower_shadow_of(const Rep& rep) {
    std::uint64_t total = 0;
    for (unsigned j = 0; j < rep.len; ++j)
        total += binomial_capped(rep.uppers[j], rep.dim - j, kNoCap);
    return total;
}

std::uint64_t upper_shadow_of(const Rep& rep) {
    std::uint64_t total = 0;
    for (unsigned j = 0; j < rep.len; ++j)
        total += binomial_capped(rep.uppers[j] - 1, rep.dim + 1 - j, kNoCap);
    return total;
}

std::uint64_t shift_up_of(const Rep& rep) {
    std::uint64_t total = 0;
    for (unsigned j = 0; j < rep.len; ++j)
        total += binomial_capped(rep.uppers[j] + 1, rep.dim + 1 - j, kNoCap);
    return total;
}

unsigned error_fn_of(const Rep& rep) {
    unsigned count = 0;
    for (unsigned j = 0; j < rep.len; ++j)
        if (rep.uppers[j] == rep.dim + 1 - j) ++count;
    return count;
}

std::uint64_t lower_shadow(std::uint64_t n, unsigned k) {
    Rep rep;
    bool ok = expand(n, k, rep);
    assert(ok);
    (void)ok;
    return lower_shadow_of(rep);
}

std::uint64_t upper_shadow(std::uint64_t n, unsigned k) {
    Rep rep;
    bool ok = expand(n, k, rep);
    assert(ok);
    (void)ok;
    return upper_shadow_of(rep);
}

std::uint64_t shift_up(std::uint64_t n, unsigned k) {
    Rep rep;
    bool ok = expand(n, k, rep);
    assert(ok);
    (void)ok;
    return shift_up_of(rep);
}

unsigned error_fn(std::uint64_t n, unsigned k) {
    Rep rep;
    bool ok = expand(n, k, rep);
    assert(ok);
    (void)ok;
    return error_fn_of(rep);
}

}  // namespace shadowcalc::fastops
