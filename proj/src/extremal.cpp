#include "shadowcalc/extremal.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "shadowcalc/compat.hpp"
#include "shadowcalc/shadow.hpp"

namespace shadowcalc {

IntSeq delta_seq(const IntSeq& f) {
    std::vector<Int> out;
    out.reserve(f.size());
    for (std::size_t k = 0; k < f.size(); ++k) {
        out.push_back(k == 0 ? Int(0) : error_fn(f.at(k), static_cast<unsigned>(k)));
    }
    return IntSeq(std::move(out));
}

IntSeq delta_plus(const IntSeq& f) {
    std::vector<Int> out;
    for (std::size_t k = 1; k < f.size(); ++k) {
        out.push_back(error_fn(f.at(k), static_cast<unsigned>(k)));
    }
    return IntSeq(std::move(out));
}

IntSeq psi(const IntSeq& f) {
    if (f.size() == 0) throw std::invalid_argument("psi: zero sequence has no maximal Betti sequence");
    if (!is_f_vector(f)) throw std::invalid_argument("psi: not an f-vector (lower-shadow condition fails)");
    std::vector<Int> out(f.size(), Int(0));
    for (std::size_t i = 0; i < f.size(); ++i) {
        Int v = upper_shadow(f.at(i), static_cast<unsigned>(i));
        if (i + 1 < f.size()) {
            v += upper_shadow(f.at(i + 1), static_cast<unsigned>(i) + 1) - f.at(i + 1);
        }
        if (v < 0) throw std::logic_error("psi: negative entry from an alleged f-vector");
        out[i] = v;
    }
    return IntSeq(std::move(out));
}

IntSeq phi(const IntSeq& beta) {
    if (beta.size() == 0) return IntSeq({Int(1)});  // single point
    const std::size_t K = beta.size() - 1;          // largest index with beta_k > 0
    std::vector<Int> f(K + 1, Int(0));
    Int chi_k = 0;  // chi_K = 0
    for (std::size_t k = K; k >= 1; --k) {
        const Int chi_km1 = lower_shadow(chi_k + beta.at(k), static_cast<unsigned>(k));
        f[k] = chi_k + beta.at(k) + chi_km1;
        chi_k = chi_km1;
    }
    f[0] = chi_k + beta.at(0) + 1;
    return IntSeq(std::move(f));
}

namespace {

// Shared scaffolding for the two extremal-pair tests: each condition is
// checked for k = 1..L on top of the chi recursion chi_{k-1} = (f_k -
// beta_k) - chi_k evaluated from the top down; results must agree.
struct ChiView {
    std::vector<Int> chis;  // chis[k+1] = chi_k for k = -1..L
    std::size_t L;
    ChiView(const IntSeq& f, const IntSeq& beta) {
        L = std::max(f.size(), beta.size());
        chis.assign(L + 2, Int(0));
        for (std::size_t j = L + 1; j-- > 0;) chis[j] = (f.at(j) - beta.at(j)) - chis[j + 1];
    }
    const Int& chi(std::size_t k_plus_1) const { return chis[k_plus_1]; }  // pass k+1
};

}  // namespace

bool is_maximal_pair(const IntSeq& f, const IntSeq& beta) {
    if (f.size() == 0 || !is_f_vector(f)) {
        throw std::invalid_argument("is_maximal_pair: f must be a nonzero f-vector");
    }
    const ChiView view(f, beta);
    bool via_lower = (view.chi(0) == 1);
    bool via_upper = (view.chi(0) == 1);
    for (std::size_t k = 1; k <= view.L && (via_lower || via_upper); ++k) {
        const Int arg = view.chi(k + 1) + beta.at(k);  // chi_k + beta_k
        if (arg < 0) {
            via_lower = false;
        } else if (via_lower) {
            via_lower = lower_shadow(arg, static_cast<unsigned>(k)) + error_fn(f.at(k), static_cast<unsigned>(k)) == view.chi(k);
        }
        if (via_upper) {
            via_upper = f.at(k) - view.chi(k) == upper_shadow(f.at(k), static_cast<unsigned>(k));
        }
    }
    if (via_lower != via_upper) {
        throw std::logic_error("is_maximal_pair: the two characterizations disagree on f=" + f.str() + " beta=" + beta.str());
    }
    const bool direct = (beta == psi(f));
    if (direct != via_lower) {
        throw std::logic_error("is_maximal_pair: characterization disagrees with beta == psi(f) on f=" + f.str() + " beta=" + beta.str());
    }
    return direct;
}

bool is_minimal_pair(const IntSeq& f, const IntSeq& beta) {
    if (!is_compatible(f, beta)) {
        throw std::invalid_argument("is_minimal_pair: (f, beta) is not a compatible pair");
    }
    const ChiView view(f, beta);
    bool via_lower = true;
    bool via_upper = delta_seq(f).is_zero();
    for (std::size_t k = 1; k <= view.L && (via_lower || via_upper); ++k) {
        const Int arg = view.chi(k + 1) + beta.at(k);  // chi_k + beta_k; >= 0 for compatible pairs
        if (via_lower) {
            via_lower = arg >= 0 && lower_shadow(arg, static_cast<unsigned>(k)) == view.chi(k);
        }
        if (via_upper) {
            via_upper = f.at(k) - view.chi(k) == upper_shadow(f.at(k), static_cast<unsigned>(k));
        }
    }
    if (via_lower != via_upper) {
        throw std::logic_error("is_minimal_pair: the two characterizations disagree on f=" + f.str() + " beta=" + beta.str());
    }
    const bool direct = (f == phi(beta));
    if (direct != via_lower) {
        throw std::logic_error("is_minimal_pair: characterization disagrees with f == phi(beta) on f=" + f.str() + " beta=" + beta.str());
    }
    return direct;
}

}  // namespace shadowcalc
