#include "shadowcalc/compat.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "shadowcalc/shadow.hpp"

namespace shadowcalc {

namespace {

// Highest index that can carry a nonzero entry in either sequence.
std::size_t joint_length(const IntSeq& f, const IntSeq& beta) {
    return std::max(f.size(), beta.size());
}

// chi values for k = -1 .. L, computed in one backward pass via
// chi_k = (f_{k+1} - beta_{k+1}) - chi_{k+1}.  Slot [k+1] holds chi_k.
std::vector<Int> chi_table(const IntSeq& f, const IntSeq& beta, std::size_t L) {
    std::vector<Int> table(L + 2, Int(0));
    for (std::size_t j = L + 1; j-- > 0;) {
        table[j] = (f.at(j) - beta.at(j)) - table[j + 1];
    }
    return table;
}

std::vector<Int> chi_table(const IntSeq& f, const IntSeq& beta) {
    return chi_table(f, beta, joint_length(f, beta));
}

void report(CompatFailure* why, long long k, std::string detail) {
    if (why) {
        why->k = k;
        why->detail = std::move(detail);
    }
}

bool check_euler(const std::vector<Int>& chis, CompatFailure* why) {
    if (chis[0] != 1) {
        report(why, -1, "chi(-1) = " + chis[0].str() + ", expected 1");
        return false;
    }
    return true;
}

}  // namespace

Int chi(const IntSeq& f, const IntSeq& beta, long long k) {
    if (k < -1) throw std::invalid_argument("chi: k must be >= -1");
    const auto L = static_cast<long long>(joint_length(f, beta));
    Int acc = 0;
    for (long long j = L - 1; j > k; --j) acc = (f.at(static_cast<std::size_t>(j)) - beta.at(static_cast<std::size_t>(j))) - acc;
    return acc;
}

bool is_f_vector(const IntSeq& f) {
    for (std::size_t k = 1; k < f.size(); ++k) {
        if (lower_shadow(f.at(k), static_cast<unsigned>(k)) > f.at(k - 1)) return false;
    }
    return true;
}

bool is_compatible(const IntSeq& f, const IntSeq& beta, CompatFailure* why) {
    const auto chis = chi_table(f, beta);
    if (!check_euler(chis, why)) return false;
    const std::size_t L = joint_length(f, beta);
    for (std::size_t k = 1; k <= L; ++k) {
        const Int arg = chis[k + 1] + beta.at(k);  // chi_k + beta_k
        if (arg < 0) {
            report(why, static_cast<long long>(k), "chi_" + std::to_string(k) + " + beta_" + std::to_string(k) + " = " + arg.str() + " < 0");
            return false;
        }
        const Int lhs = lower_shadow(arg, static_cast<unsigned>(k));
        if (lhs > chis[k]) {
            report(why, static_cast<long long>(k),
                   "lower_shadow(" + arg.str() + ", " + std::to_string(k) + ") = " + lhs.str() + " > chi_" + std::to_string(k - 1) + " = " + chis[k].str());
            return false;
        }
    }
    return true;
}

bool is_compatible_upper(const IntSeq& f, const IntSeq& beta, CompatFailure* why) {
    const auto chis = chi_table(f, beta);
    if (!check_euler(chis, why)) return false;
    const std::size_t L = joint_length(f, beta);
    for (std::size_t k = 1; k <= L; ++k) {
        const Int diff = f.at(k) - chis[k];  // f_k - chi_{k-1}
        if (diff < 0) {
            report(why, static_cast<long long>(k), "f_" + std::to_string(k) + " - chi_" + std::to_string(k - 1) + " = " + diff.str() + " < 0");
            return false;
        }
        const Int bound = upper_shadow(f.at(k), static_cast<unsigned>(k));
        if (diff > bound) {
            report(why, static_cast<long long>(k),
                   "f_" + std::to_string(k) + " - chi_" + std::to_string(k - 1) + " = " + diff.str() + " > upper_shadow(" + f.at(k).str() + ", " + std::to_string(k) + ") = " + bound.str());
            return false;
        }
    }
    return true;
}

bool is_compatible_relaxed(const IntSeq& f, const IntSeq& beta, const IntSeq& eps,
                           CompatFailure* why) {
    for (std::size_t k = 0; k < eps.size(); ++k) {
        const Int cap = (k == 0) ? Int(0) : error_fn(f.at(k), static_cast<unsigned>(k));
        if (eps.at(k) > cap) {
            throw std::invalid_argument("is_compatible_relaxed: eps_" + std::to_string(k) + " = " + eps.at(k).str() + " exceeds error_fn(f_" + std::to_string(k) + ", " + std::to_string(k) + ") = " + cap.str());
        }
    }
    const std::size_t L = std::max(joint_length(f, beta), eps.size());
    const auto chis = chi_table(f, beta, L);
    if (!check_euler(chis, why)) return false;
    for (std::size_t k = 1; k <= L; ++k) {
        const Int arg = chis[k + 1] + beta.at(k);  // chi_k + beta_k
        if (arg < 0) {
            report(why, static_cast<long long>(k), "chi_" + std::to_string(k) + " + beta_" + std::to_string(k) + " = " + arg.str() + " < 0");
            return false;
        }
        const Int lhs = lower_shadow(arg, static_cast<unsigned>(k));
        const Int rhs = chis[k] - eps.at(k);
        if (lhs > rhs) {
            report(why, static_cast<long long>(k),
                   "lower_shadow(" + arg.str() + ", " + std::to_string(k) + ") = " + lhs.str() + " > chi_" + std::to_string(k - 1) + " - eps_" + std::to_string(k) + " = " + rhs.str());
            return false;
        }
    }
    return true;
}

}  // namespace shadowcalc
