#include "shadowcalc/shadow.hpp"

#include <stdexcept>

namespace shadowcalc {

Int lower_shadow(const Int& n, unsigned k) {
    MacaulayRep rep = expand(n, k);
    Int total = 0;
    for (std::size_t j = 0; j < rep.uppers.size(); ++j)
        total += binomial(rep.uppers[j], Int(rep.lower_index(j)) - 1);
    return total;
}

Int upper_shadow(const Int& n, unsigned k) {
    MacaulayRep rep = expand(n, k);
    Int total = 0;
    for (std::size_t j = 0; j < rep.uppers.size(); ++j)
        total += binomial(rep.uppers[j] - 1, Int(rep.lower_index(j)));
    return total;
}

Int shift_up(const Int& n, unsigned k) {
    MacaulayRep rep = expand(n, k);
    Int total = 0;
    for (std::size_t j = 0; j < rep.uppers.size(); ++j)
        total += binomial(rep.uppers[j] + 1, Int(rep.lower_index(j)));
    return total;
}

Int error_fn(const Int& n, unsigned k) {
    MacaulayRep rep = expand(n, k);
    Int count = 0;
    for (std::size_t j = 0; j < rep.uppers.size(); ++j)
        if (rep.uppers[j] == rep.lower_index(j)) ++count;
    return count;
}

ExchangeReport exchange_report(const Int& n, const Int& m, unsigned k, const Int& eps) {
    if (n < 0 || m < 0) throw std::invalid_argument("exchange_report: negative argument");
    ExchangeReport rep;
    rep.shadow_of_n = lower_shadow(n, k);
    rep.upper_of_sum = upper_shadow(n + m, k);
    rep.error_of_sum = error_fn(n + m, k);
    if (eps < 0 || eps > rep.error_of_sum)
        throw std::invalid_argument("exchange_report: eps outside [0, error_fn(n+m,k)]");

    rep.a.lhs = rep.shadow_of_n <= m - eps;
    rep.a.rhs = n <= rep.upper_of_sum;

    rep.b.lhs = n == rep.upper_of_sum;
    rep.b.rhs = rep.shadow_of_n + rep.error_of_sum == m;

    rep.c.lhs = rep.shadow_of_n == m;
    rep.c.rhs = n == rep.upper_of_sum && rep.error_of_sum == 0;
    return rep;
}

}  // namespace shadowcalc
