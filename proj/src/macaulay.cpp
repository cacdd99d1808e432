#include "shadowcalc/macaulay.hpp"

#include <stdexcept>
#include <utility>

namespace shadowcalc {

namespace {

// C(a,b) computed with min(b, a-b) exact multiply/divide steps. Every
// prefix of the product is itself a binomial coefficient, and with
// s = min(b, a-b) the prefixes are nondecreasing, so the capped variant
// may stop early as soon as the prefix exceeds the cap.
Int binomial_uncapped(const Int& a, const Int& b) {
    if (a < b) return 0;
    Int s = (b < a - b) ? b : a - b;
    Int r = 1;
    for (Int i = 1; i <= s; ++i) {
        r *= a - s + i;
        r /= i;
    }
    return r;
}

// min(C(a,b), cap + 1); never builds values materially above cap.
Int binomial_capped(const Int& a, const Int& b, const Int& cap) {
    if (a < b) return 0;
    Int s = (b < a - b) ? b : a - b;
    Int r = 1;
    for (Int i = 1; i <= s; ++i) {
        r *= a - s + i;
        r /= i;
        if (r > cap) return cap + 1;
    }
    return r;
}

// Largest a >= t with C(a,t) <= rem, for rem >= 1. Doubling on the
// offset a - t, then bisection.
Int max_upper_index(const Int& rem, unsigned t) {
    if (t == 1) return rem;
    Int t_int(t);
    Int lo = 0;  // offsets d with C(t+d,t) <= rem; d = 0 gives 1 <= rem
    Int hi = 1;
    while (binomial_capped(t_int + hi, t_int, rem) <= rem) {
        lo = hi;
        hi <<= 1;
    }
    while (hi - lo > 1) {
        Int mid = (lo + hi) >> 1;
        if (binomial_capped(t_int + mid, t_int, rem) <= rem)
            lo = mid;
        else
            hi = mid;
    }
    return t_int + lo;
}

}  // namespace

Int binomial(const Int& a, const Int& b) {
    if (a < 0 || b < 0) throw std::invalid_argument("binomial: negative argument");
    return binomial_uncapped(a, b);
}

MacaulayRep expand(const Int& n, unsigned dim) {
    if (n < 0) throw std::invalid_argument("expand: negative argument");
    if (dim >= (1u << 30)) throw std::invalid_argument("expand: dim too large");
    MacaulayRep rep;
    rep.dim = dim;
    Int rem = n;
    for (unsigned t = dim + 1; t >= 1 && rem > 0; --t) {
        Int a = max_upper_index(rem, t);
        rem -= binomial_uncapped(a, Int(t));
        rep.uppers.push_back(std::move(a));
    }
    return rep;
}

Int evaluate(const MacaulayRep& rep) {
    if (rep.uppers.size() > static_cast<std::size_t>(rep.dim) + 1)
        throw std::invalid_argument("evaluate: more than dim+1 terms");
    Int total = 0;
    for (std::size_t j = 0; j < rep.uppers.size(); ++j) {
        unsigned t = rep.lower_index(j);
        const Int& a = rep.uppers[j];
        if (a < t)
            throw std::invalid_argument("evaluate: upper index below lower index");
        if (j > 0 && !(rep.uppers[j - 1] > a))
            throw std::invalid_argument("evaluate: upper indices not strictly decreasing");
        total += binomial_uncapped(a, Int(t));
    }
    return total;
}

std::strong_ordering compare(const MacaulayRep& x, const MacaulayRep& y) {
    if (x.dim != y.dim)
        throw std::invalid_argument("compare: dimension mismatch");
    std::size_t shared = std::min(x.uppers.size(), y.uppers.size());
    for (std::size_t j = 0; j < shared; ++j) {
        if (x.uppers[j] != y.uppers[j])
            return x.uppers[j] < y.uppers[j] ? std::strong_ordering::less
                                             : std::strong_ordering::greater;
    }
    // Shared coefficients equal: the strict prefix (which stops at a higher
    // lower index) represents the smaller number.
    if (x.uppers.size() == y.uppers.size()) return std::strong_ordering::equal;
    return x.uppers.size() < y.uppers.size() ? std::strong_ordering::less
                                             : std::strong_ordering::greater;
}

}  // namespace shadowcalc
