#include "oracles.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <set>
#include <stdexcept>
#include <utility>

namespace oracles {

Int pascal_binomial(unsigned a, unsigned b) {
    static std::map<std::uint64_t, Int> memo;
    if (b > a) return 0;
    if (b == 0 || b == a) return 1;
    const std::uint64_t key = (static_cast<std::uint64_t>(a) << 32) | b;
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    Int v = pascal_binomial(a - 1, b - 1) + pascal_binomial(a - 1, b);
    memo.emplace(key, v);
    return v;
}

namespace {

// Depth-first walk over upper-index lists (a_{t}, a_{t-1}, ...) with
// strictly decreasing entries, a >= its lower index, and running value
// capped by max_value.  Every node of the tree is a valid expansion.
void walk_expansions(unsigned t, unsigned prev_upper, const Int& acc, unsigned max_value,
                     std::vector<unsigned>& uppers, std::map<Int, std::vector<unsigned>>& out) {
    if (!out.emplace(acc, uppers).second)
        throw std::logic_error("two expansions share the value " + acc.str());
    if (t == 0) return;
    for (unsigned a = t; a < prev_upper; ++a) {
        Int next = acc + pascal_binomial(a, t);
        if (next > max_value) break;  // pascal_binomial(a, t) grows with a
        uppers.push_back(a);
        walk_expansions(t - 1, a, next, max_value, uppers, out);
        uppers.pop_back();
    }
}

}  // namespace

std::map<Int, std::vector<unsigned>> enumerate_expansions(unsigned dim, unsigned max_value) {
    std::map<Int, std::vector<unsigned>> out;
    std::vector<unsigned> uppers;
    // the top index is bounded by C(a, 1) <= max_value in the worst case
    walk_expansions(dim + 1, max_value + dim + 2, Int(0), max_value, uppers, out);
    return out;
}

std::vector<std::uint64_t> colex_shadow_sizes(std::uint64_t max_n, unsigned k, unsigned universe) {
    if (universe >= 26) throw std::invalid_argument("universe too large for brute enumeration");
    std::vector<std::uint64_t> sizes;
    sizes.reserve(max_n + 1);
    sizes.push_back(0);
    std::set<std::uint64_t> shadow;
    // numeric order of bitmasks restricted to one popcount class is exactly
    // colex order on the sets they encode
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << universe) && sizes.size() <= max_n;
         ++mask) {
        if (static_cast<unsigned>(__builtin_popcountll(mask)) != k + 1) continue;
        for (unsigned v = 0; v < universe; ++v)
            if (mask >> v & 1) shadow.insert(mask & ~(std::uint64_t(1) << v));
        sizes.push_back(shadow.size());
    }
    if (sizes.size() <= max_n)
        throw std::invalid_argument("universe too small for the requested family size");
    return sizes;
}

std::size_t rank_by_rational_elimination(const std::vector<std::vector<Int>>& m) {
    using Rat = boost::multiprecision::cpp_rational;
    if (m.empty() || m[0].empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::vector<std::vector<Rat>> a(rows, std::vector<Rat>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) a[i][j] = Rat(m[i][j]);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && a[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[rank], a[pivot]);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            if (a[i][col] == 0) continue;
            Rat factor = a[i][col] / a[rank][col];
            for (std::size_t j = col; j < cols; ++j) a[i][j] -= factor * a[rank][j];
        }
        ++rank;
    }
    return rank;
}

std::size_t rank_by_prime_elimination(const std::vector<std::vector<int>>& m, unsigned p) {
    if (m.empty() || m[0].empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    const auto q = static_cast<long long>(p);
    std::vector<std::vector<long long>> a(rows, std::vector<long long>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) a[i][j] = ((m[i][j] % q) + q) % q;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && a[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[rank], a[pivot]);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            while (a[i][col] != 0) {  // repeated subtraction; p is tiny here
                for (std::size_t j = col; j < cols; ++j) a[i][j] = (a[i][j] - a[rank][j] + q) % q;
            }
        }
        ++rank;
    }
    return rank;
}

FactorInfo trial_factor(std::uint64_t n) {
    FactorInfo info;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        ++info.omega;
        n /= p;
        if (n % p == 0) {
            info.squarefree = false;
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) ++info.omega;
    return info;
}

}  // namespace oracles
