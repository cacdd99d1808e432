#include "shadowcalc/verify.hpp"

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "shadowcalc/compat.hpp"
#include "shadowcalc/enumerate.hpp"
#include "shadowcalc/extremal.hpp"
#include "shadowcalc/homology.hpp"
#include "shadowcalc/macaulay.hpp"
#include "shadowcalc/shadow.hpp"

namespace shadowcalc {

namespace {

constexpr std::size_t kMaxRenderedViolations = 20;

void note(EnumerationAudit& audit, std::uint64_t& category, std::string msg) {
    ++category;
    ++audit.violations_total;
    if (audit.violations.size() < kMaxRenderedViolations) {
        audit.violations.push_back(std::move(msg));
    }
}

// Componentwise maximum, used to accumulate the largest realized Betti
// sequence per f-vector.
IntSeq seq_max(const IntSeq& a, const IntSeq& b) {
    const std::size_t n = std::max(a.size(), b.size());
    std::vector<Int> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = std::max(a.at(i), b.at(i));
    return IntSeq(std::move(out));
}

// Visits every sequence 0 <= s <= bound (componentwise), in odometer order.
template <typename Fn>
void for_each_dominated(const IntSeq& bound, Fn&& fn) {
    std::vector<Int> current(bound.size(), Int(0));
    for (;;) {
        fn(IntSeq(current));
        std::size_t i = 0;
        while (i < current.size() && current[i] == bound.at(i)) {
            current[i] = 0;
            ++i;
        }
        if (i == current.size()) return;
        ++current[i];
    }
}

std::string pair_key(const IntSeq& f, const IntSeq& beta) {
    return f.str() + "|" + beta.str();
}

}  // namespace

EnumerationAudit audit_enumeration(unsigned max_vertices) {
    EnumerationAudit audit;
    audit.max_vertices = max_vertices;
    audit.per_vertices.assign(max_vertices, 0);

    std::set<std::string> realized;
    struct PerF {
        IntSeq f;
        IntSeq max_beta;            // componentwise max over realized Betti sequences
        bool psi_realized = false;  // whether psi(f) itself occurred
    };
    std::map<std::string, PerF> per_f;

    enumerate_up_to(max_vertices, [&](const SimplicialComplex& c) {
        ++audit.complexes;
        ++audit.per_vertices[c.vertex_count() - 1];

        const IntSeq f = f_vector(c);
        const BettiProfile profile = reduced_betti(c, kRationals);
        const IntSeq& beta = profile.betti;

        CompatFailure why;
        if (!is_compatible(f, beta, &why)) {
            note(audit, audit.soundness_bad, "realized pair (" + f.str() + " ; " + beta.str() +
                            ") rejected by the compatibility test at k=" +
                            std::to_string(why.k) + ": " + why.detail);
        }
        if (chi(f, beta, -1) != 1) {
            note(audit, audit.soundness_bad, "realized pair (" + f.str() + " ; " + beta.str() +
                            ") has chi(-1) = " + chi(f, beta, -1).str() + ", expected 1");
        }
        for (int k = 0; k <= c.dim(); ++k) {
            const Int expected = f.at(static_cast<std::size_t>(k)) - chi(f, beta, k - 1);
            const Int& cycles = profile.cycle_dims[static_cast<std::size_t>(k)];
            if (cycles != expected) {
                note(audit, audit.soundness_bad, "complex with f=" + f.str() + ": cycle dimension " + cycles.str() +
                                " at k=" + std::to_string(k) + ", expected f_k - chi_{k-1} = " +
                                expected.str());
            }
            const Int bound = upper_shadow(f.at(static_cast<std::size_t>(k)),
                                           static_cast<unsigned>(k));
            if (cycles > bound) {
                note(audit, audit.soundness_bad, "complex with f=" + f.str() + ": cycle dimension " + cycles.str() +
                                " at k=" + std::to_string(k) +
                                " exceeds upper_shadow(f_k, k) = " + bound.str());
            }
        }

        realized.insert(pair_key(f, beta));
        auto [it, fresh] = per_f.try_emplace(f.str());
        PerF& entry = it->second;
        if (fresh) {
            entry.f = f;
            entry.max_beta = beta;
        } else {
            entry.max_beta = seq_max(entry.max_beta, beta);
        }
        if (beta == psi(f)) entry.psi_realized = true;
    });

    audit.pairs = realized.size();
    audit.fvectors = per_f.size();

    // Tightness per realized f-vector.
    for (const auto& [key, entry] : per_f) {
        const IntSeq& f = entry.f;
        const IntSeq top = psi(f);
        if (entry.max_beta != top) {
            note(audit, audit.tightness_bad, "f=" + f.str() + ": componentwise max of realized Betti sequences is " +
                            entry.max_beta.str() + ", psi(f) = " + top.str());
        }
        if (!entry.psi_realized) {
            note(audit, audit.tightness_bad, "f=" + f.str() + ": psi(f) = " + top.str() + " is never realized");
        }
        if (phi(top.plus(delta_plus(f))) != f.minus(delta_seq(f))) {
            note(audit, audit.tightness_bad, "f=" + f.str() + ": phi(psi(f) + delta_plus(f)) = " +
                            phi(top.plus(delta_plus(f))).str() + ", expected f - delta(f) = " +
                            f.minus(delta_seq(f)).str());
        }
        if (!phi(top).leq(f)) {
            note(audit, audit.tightness_bad, "f=" + f.str() + ": phi(psi(f)) = " + phi(top).str() +
                            " is not componentwise <= f");
        }
    }

    // Completeness: every compatible pair dominated by the full simplex on
    // max_vertices vertices must have been realized.
    std::vector<Int> simplex(max_vertices);
    for (unsigned j = 0; j < max_vertices; ++j) {
        simplex[j] = binomial(Int(max_vertices), Int(j + 1));
    }
    const IntSeq box(std::move(simplex));
    for_each_dominated(box, [&](const IntSeq& f) {
        for_each_dominated(f, [&](const IntSeq& beta) {
            if (!is_compatible(f, beta)) return;
            ++audit.compatible_pairs;
            if (!realized.contains(pair_key(f, beta))) {
                note(audit, audit.completeness_bad, "compatible pair (" + f.str() + " ; " + beta.str() +
                                ") is not realized by any complex on <= " +
                                std::to_string(max_vertices) + " vertices");
            }
        });
    });

    return audit;
}

FStarReport scan_f_star(unsigned max_vertices) {
    FStarReport report;
    report.max_vertices = max_vertices;

    std::map<std::string, IntSeq> fvectors;
    enumerate_up_to(max_vertices, [&](const SimplicialComplex& c) {
        IntSeq f = f_vector(c);
        std::string key = f.str();
        fvectors.emplace(std::move(key), std::move(f));
    });
    report.fvectors = fvectors.size();

    for (const auto& [key, f] : fvectors) {
        const IntSeq slack = delta_seq(f);
        if (slack.is_zero()) continue;
        const IntSeq plus = delta_plus(f);
        const IntSeq lower = phi(psi(f));
        if (lower.plus(slack).plus(plus) == f) {
            report.hits.push_back({f, slack, plus, lower});
        }
    }
    return report;
}

}  // namespace shadowcalc
