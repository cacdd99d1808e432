#include "shadowcalc/homology.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace shadowcalc {

namespace {

bool is_prime(unsigned p) {
    if (p < 2) return false;
    for (unsigned d = 2; d <= p / d; ++d)
        if (p % d == 0) return false;
    return true;
}

void require_field(FieldTag field) {
    if (!field.is_rational() && !is_prime(field.p)) {
        throw std::invalid_argument("homology: field must be the rationals or a prime field");
    }
}

std::int64_t mod_pow(std::int64_t b, std::int64_t e, std::int64_t p) {
    std::int64_t r = 1;
    b %= p;
    for (; e; e >>= 1, b = b * b % p)
        if (e & 1) r = r * b % p;
    return r;
}

// rank of the boundary map out of k-chains; 0 when there are none
std::size_t boundary_rank(const SimplicialComplex& c, unsigned k, FieldTag field) {
    if (c.count_of_card(k + 1) == 0) return 0;
    if (k == 0) return 1;  // augmentation row is all ones
    const auto m = boundary_matrix(c, k);
    if (field.is_rational()) {
        std::vector<std::vector<Int>> mi(m.size());
        for (std::size_t i = 0; i < m.size(); ++i) mi[i].assign(m[i].begin(), m[i].end());
        return rank_rational(std::move(mi));
    }
    return rank_prime(m, field.p);
}

}  // namespace

std::vector<std::vector<int>> boundary_matrix(const SimplicialComplex& c, unsigned k) {
    const auto cols = c.faces_of_card(k + 1);
    if (k == 0) {
        return {std::vector<int>(cols.size(), 1)};
    }
    const auto rows = c.faces_of_card(k);
    std::vector<std::vector<int>> m(rows.size(), std::vector<int>(cols.size(), 0));
    for (std::size_t j = 0; j < cols.size(); ++j) {
        Face rest = cols[j];
        int sign = 1;
        while (rest) {
            const Face low = rest & -rest;
            rest ^= low;
            const Face sub = cols[j] ^ low;
            const auto it = std::lower_bound(rows.begin(), rows.end(), sub, face_lex_less);
            m[static_cast<std::size_t>(it - rows.begin())][j] = sign;
            sign = -sign;
        }
    }
    return m;
}

std::size_t rank_rational(std::vector<std::vector<Int>> m) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    // Fraction-free elimination: every update is a 2x2 determinant divided
    // by the previous pivot; the division is exact (Sylvester identity), so
    // entries stay integral with no rational bookkeeping.
    Int prev = 1;
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t p = r;
        while (p < rows && m[p][col] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j) {
                m[i][j] = (m[r][col] * m[i][j] - m[i][col] * m[r][j]) / prev;
            }
            m[i][col] = 0;
        }
        prev = m[r][col];
        ++r;
    }
    return r;
}

std::size_t rank_prime(const std::vector<std::vector<int>>& m, unsigned p) {
    if (!is_prime(p)) throw std::invalid_argument("rank_prime: modulus is not prime");
    const std::int64_t mod = p;
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    std::vector<std::vector<std::int64_t>> a(rows, std::vector<std::int64_t>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) a[i][j] = ((m[i][j] % mod) + mod) % mod;
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t piv = r;
        while (piv < rows && a[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[r]);
        const std::int64_t inv = mod_pow(a[r][col], mod - 2, mod);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (a[i][col] == 0) continue;
            const std::int64_t factor = a[i][col] * inv % mod;
            for (std::size_t j = col; j < cols; ++j) {
                a[i][j] = (a[i][j] - factor * a[r][j]) % mod;
                if (a[i][j] < 0) a[i][j] += mod;
            }
        }
        ++r;
    }
    return r;
}

BettiProfile reduced_betti(const SimplicialComplex& c, FieldTag field) {
    require_field(field);
    if (c.empty()) throw std::invalid_argument("reduced_betti: empty complex");
    const int dim = c.dim();
    std::vector<std::size_t> rank(static_cast<std::size_t>(dim) + 2, 0);
    for (int k = 0; k <= dim; ++k) rank[static_cast<std::size_t>(k)] = boundary_rank(c, static_cast<unsigned>(k), field);
    BettiProfile out;
    out.field = field;
    out.cycle_dims.resize(static_cast<std::size_t>(dim) + 1);
    std::vector<Int> betti(static_cast<std::size_t>(dim) + 1);
    for (int k = 0; k <= dim; ++k) {
        const auto uk = static_cast<std::size_t>(k);
        const Int fk = static_cast<std::uint64_t>(c.count_of_card(static_cast<unsigned>(k) + 1));
        out.cycle_dims[uk] = fk - static_cast<std::uint64_t>(rank[uk]);
        betti[uk] = out.cycle_dims[uk] - static_cast<std::uint64_t>(rank[uk + 1]);
        if (betti[uk] < 0) throw std::logic_error("reduced_betti: negative Betti number (rank bug)");
    }
    out.betti = IntSeq(std::move(betti));
    return out;
}

Int cycle_space_dim(const SimplicialComplex& c, unsigned k, FieldTag field) {
    require_field(field);
    const Int fk = static_cast<std::uint64_t>(c.count_of_card(k + 1));
    if (fk == 0) return 0;
    return fk - static_cast<std::uint64_t>(boundary_rank(c, k, field));
}

}  // namespace shadowcalc
