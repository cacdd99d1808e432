// Command-line front end: expansions, shadow operators, exchange reports,
// compatibility predicates, extremal maps, homology of explicit complexes,
// exhaustive small-complex verification, and the square-free sieve.
//
// Exit codes: 0 success / predicate true / all checks verified,
//             1 predicate false / verification failure / broken invariant,
//             2 usage error (bad flags, malformed numbers, invalid input).

#include <cctype>
#include <cstdint>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "shadowcalc/compat.hpp"
#include "shadowcalc/complex.hpp"
#include "shadowcalc/enumerate.hpp"
#include "shadowcalc/extremal.hpp"
#include "shadowcalc/homology.hpp"
#include "shadowcalc/macaulay.hpp"
#include "shadowcalc/seq.hpp"
#include "shadowcalc/shadow.hpp"
#include "shadowcalc/sieve.hpp"
#include "shadowcalc/verify.hpp"

namespace {

using nlohmann::ordered_json;
using namespace shadowcalc;

// Largest integer emitted as a JSON number; bigger values become decimal
// strings so consumers limited to doubles never lose precision.
const Int kJsonNumberMax = (Int(1) << 53);

Int parse_int(const std::string& text, const char* what) {
    if (text.empty()) throw std::invalid_argument(std::string(what) + ": empty number");
    for (char c : text) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            throw std::invalid_argument(std::string(what) + ": bad number \"" + text + "\"");
        }
    }
    return Int(text);
}

ordered_json json_int(const Int& v) {
    if (v >= 0 && v <= kJsonNumberMax) return ordered_json(static_cast<std::uint64_t>(v));
    if (v < 0 && -v <= kJsonNumberMax) {
        return ordered_json(-static_cast<std::int64_t>(static_cast<std::uint64_t>(-v)));
    }
    return ordered_json(v.str());
}

ordered_json json_seq(const IntSeq& s) {
    ordered_json arr = ordered_json::array();
    for (std::size_t i = 0; i < s.size(); ++i) arr.push_back(json_int(s.at(i)));
    return arr;
}

void emit(const ordered_json& j) { std::cout << j.dump() << '\n'; }

std::string render_terms(const MacaulayRep& rep) {
    if (rep.is_zero()) return "0";
    std::string out;
    for (std::size_t j = 0; j < rep.term_count(); ++j) {
        if (j) out += " + ";
        out += "C(" + rep.uppers[j].str() + "," + std::to_string(rep.lower_index(j)) + ")";
    }
    return out;
}

// ---------------------------------------------------------------- commands

int run_expand(const std::string& n_text, unsigned dim, bool as_json) {
    const Int n = parse_int(n_text, "n");
    const MacaulayRep rep = expand(n, dim);
    if (as_json) {
        ordered_json terms = ordered_json::array();
        for (std::size_t j = 0; j < rep.term_count(); ++j) {
            terms.push_back({{"upper", json_int(rep.uppers[j])}, {"lower", rep.lower_index(j)}});
        }
        emit({{"n", json_int(n)}, {"dim", dim}, {"terms", terms}});
    } else {
        std::cout << n.str() << " = " << render_terms(rep) << '\n';
    }
    return 0;
}

int run_op(const std::string& kind, const std::string& n_text, unsigned k, bool as_json) {
    const Int n = parse_int(n_text, "n");
    Int value;
    if (kind == "lower") value = lower_shadow(n, k);
    else if (kind == "upper") value = upper_shadow(n, k);
    else if (kind == "shift") value = shift_up(n, k);
    else value = error_fn(n, k);
    if (as_json) {
        emit({{"kind", kind}, {"n", json_int(n)}, {"k", k}, {"value", json_int(value)}});
    } else {
        std::cout << value.str() << '\n';
    }
    return 0;
}

ordered_json json_sides(const ExchangeReport::Sides& s) {
    return {{"lhs", s.lhs}, {"rhs", s.rhs}, {"agree", s.agree()}};
}

int run_exchange(const std::string& n_text, const std::string& m_text, unsigned k,
                 const std::string& eps_text, bool as_json) {
    const Int n = parse_int(n_text, "n");
    const Int m = parse_int(m_text, "m");
    const Int eps = parse_int(eps_text, "eps");
    const ExchangeReport rep = exchange_report(n, m, k, eps);
    if (as_json) {
        emit({{"n", json_int(n)},
              {"m", json_int(m)},
              {"k", k},
              {"eps", json_int(eps)},
              {"shadow_of_n", json_int(rep.shadow_of_n)},
              {"upper_of_sum", json_int(rep.upper_of_sum)},
              {"error_of_sum", json_int(rep.error_of_sum)},
              {"a", json_sides(rep.a)},
              {"b", json_sides(rep.b)},
              {"c", json_sides(rep.c)},
              {"all_agree", rep.all_agree()}});
    } else {
        auto line = [](const char* name, const ExchangeReport::Sides& s) {
            std::cout << name << ": lhs=" << (s.lhs ? "true" : "false")
                      << " rhs=" << (s.rhs ? "true" : "false")
                      << (s.agree() ? " (agree)" : " (DISAGREE)") << '\n';
        };
        std::cout << "lower_shadow(n, k)   = " << rep.shadow_of_n.str() << '\n'
                  << "upper_shadow(n+m, k) = " << rep.upper_of_sum.str() << '\n'
                  << "error_fn(n+m, k)     = " << rep.error_of_sum.str() << '\n';
        line("a", rep.a);
        line("b", rep.b);
        line("c", rep.c);
        std::cout << "all_agree: " << (rep.all_agree() ? "true" : "false") << '\n';
    }
    return rep.all_agree() ? 0 : 1;
}

int run_compat(const std::string& f_text, const std::string& beta_text, const std::string& mode,
               bool eps_given, const std::string& eps_text, bool as_json) {
    const IntSeq f = parse_seq(f_text);
    const IntSeq beta = parse_seq(beta_text);
    if (eps_given && mode != "relaxed") {
        throw std::invalid_argument("--eps is only meaningful with --mode relaxed");
    }
    CompatFailure why;
    bool ok = false;
    if (mode == "bk") {
        ok = is_compatible(f, beta, &why);
    } else if (mode == "upper") {
        ok = is_compatible_upper(f, beta, &why);
    } else {
        const IntSeq eps = eps_given ? parse_seq(eps_text) : IntSeq::zero();
        ok = is_compatible_relaxed(f, beta, eps, &why);
    }
    if (as_json) {
        ordered_json j{{"f", json_seq(f)}, {"beta", json_seq(beta)}, {"mode", mode},
                       {"compatible", ok}};
        if (!ok) {
            j["k"] = why.k;
            j["detail"] = why.detail;
        }
        emit(j);
    } else {
        std::cout << (ok ? "true" : "false") << '\n';
        if (!ok) std::cout << "first violation at k=" << why.k << ": " << why.detail << '\n';
    }
    return ok ? 0 : 1;
}

int run_fvec(const std::string& f_text, bool as_json) {
    const IntSeq f = parse_seq(f_text);
    const bool ok = is_f_vector(f);
    long long bad_k = 0;
    std::string detail;
    if (!ok) {
        for (std::size_t k = 1; k < f.size(); ++k) {
            const Int need = lower_shadow(f.at(k), static_cast<unsigned>(k));
            if (need > f.at(k - 1)) {
                bad_k = static_cast<long long>(k);
                detail = "lower_shadow(f_" + std::to_string(k) + ", " + std::to_string(k) +
                         ") = " + need.str() + " > f_" + std::to_string(k - 1) + " = " +
                         f.at(k - 1).str();
                break;
            }
        }
        if (detail.empty()) throw std::logic_error("is_f_vector verdict has no witness");
    }
    if (as_json) {
        ordered_json j{{"f", json_seq(f)}, {"is_f_vector", ok}};
        if (!ok) {
            j["k"] = bad_k;
            j["detail"] = detail;
        }
        emit(j);
    } else {
        std::cout << (ok ? "true" : "false") << '\n';
        if (!ok) std::cout << "first violation at k=" << bad_k << ": " << detail << '\n';
    }
    return ok ? 0 : 1;
}

int run_psi(const std::string& f_text, bool as_json) {
    const IntSeq f = parse_seq(f_text);
    const IntSeq top = psi(f);
    if (as_json) {
        emit({{"f", json_seq(f)}, {"psi", json_seq(top)}});
    } else {
        std::cout << top.str() << '\n';
    }
    return 0;
}

int run_phi(const std::string& beta_text, bool as_json) {
    const IntSeq beta = parse_seq(beta_text);
    const IntSeq bottom = phi(beta);
    if (as_json) {
        emit({{"beta", json_seq(beta)}, {"phi", json_seq(bottom)}});
    } else {
        std::cout << bottom.str() << '\n';
    }
    return 0;
}

int run_maximal(const std::string& f_text, const std::string& beta_text, bool as_json) {
    const IntSeq f = parse_seq(f_text);
    const IntSeq beta = parse_seq(beta_text);
    const bool ok = is_maximal_pair(f, beta);
    if (as_json) {
        emit({{"f", json_seq(f)}, {"beta", json_seq(beta)}, {"maximal", ok},
              {"psi", json_seq(psi(f))}});
    } else {
        std::cout << (ok ? "true" : "false") << '\n';
        if (!ok) std::cout << "psi(f) = " << psi(f).str() << '\n';
    }
    return ok ? 0 : 1;
}

int run_minimal(const std::string& f_text, const std::string& beta_text, bool as_json) {
    const IntSeq f = parse_seq(f_text);
    const IntSeq beta = parse_seq(beta_text);
    const bool ok = is_minimal_pair(f, beta);
    if (as_json) {
        emit({{"f", json_seq(f)}, {"beta", json_seq(beta)}, {"minimal", ok},
              {"phi", json_seq(phi(beta))}});
    } else {
        std::cout << (ok ? "true" : "false") << '\n';
        if (!ok) std::cout << "phi(beta) = " << phi(beta).str() << '\n';
    }
    return ok ? 0 : 1;
}

int run_betti(unsigned vertices, const std::string& facets_text, const std::string& field_text,
              bool as_json) {
    const FieldTag field = (field_text == "2") ? kF2 : kRationals;
    const SimplicialComplex c = from_facets(vertices, parse_facets(facets_text));
    const BettiProfile profile = reduced_betti(c, field);
    const IntSeq f = f_vector(c);
    if (as_json) {
        ordered_json cycles = ordered_json::array();
        for (const Int& d : profile.cycle_dims) cycles.push_back(json_int(d));
        emit({{"f", json_seq(f)},
              {"betti", json_seq(profile.betti)},
              {"cycle_dims", cycles},
              {"field", profile.field.str()}});
    } else {
        std::cout << "f: " << f.str() << '\n'
                  << "betti: " << profile.betti.str() << '\n';
        std::cout << "cycle_dims:";
        for (const Int& d : profile.cycle_dims) std::cout << ' ' << d.str();
        std::cout << '\n' << "field: " << profile.field.str() << '\n';
    }
    return 0;
}

int run_enumerate(unsigned max_vertices, bool verify, bool as_json) {
    if (!verify) {
        std::vector<std::uint64_t> per(max_vertices);
        std::uint64_t total = 0;
        for (unsigned j = 1; j <= max_vertices; ++j) {
            per[j - 1] = count_complexes(j);
            total += per[j - 1];
        }
        if (as_json) {
            emit({{"max_vertices", max_vertices}, {"per_vertices", per}, {"complexes", total}});
        } else {
            for (unsigned j = 1; j <= max_vertices; ++j) {
                std::cout << "vertices " << j << ": " << per[j - 1] << '\n';
            }
            std::cout << "total: " << total << '\n';
        }
        return 0;
    }

    const EnumerationAudit audit = audit_enumeration(max_vertices);
    if (as_json) {
        emit({{"max_vertices", audit.max_vertices},
              {"per_vertices", audit.per_vertices},
              {"complexes", audit.complexes},
              {"pairs", audit.pairs},
              {"fvectors", audit.fvectors},
              {"compatible_pairs", audit.compatible_pairs},
              {"violations_total", audit.violations_total},
              {"violations", audit.violations},
              {"ok", audit.ok()}});
    } else {
        std::cout << "complexes: " << audit.complexes << '\n'
                  << "realized (f, beta) pairs: " << audit.pairs << '\n'
                  << "distinct f-vectors: " << audit.fvectors << '\n'
                  << "compatible pairs in the dominated box: " << audit.compatible_pairs << '\n';
        for (const std::string& v : audit.violations) std::cout << "violation: " << v << '\n';
        if (audit.violations_total > audit.violations.size()) {
            std::cout << "(" << audit.violations_total - audit.violations.size()
                      << " further violations suppressed)\n";
        }
        std::cout << (audit.ok() ? "ok" : "FAILED") << '\n';
    }
    return audit.ok() ? 0 : 1;
}

int run_sieve(std::uint64_t limit, bool verify, std::uint64_t stride, bool as_json) {
    const SieveTable table = build_sieve_segmented(limit);

    if (!verify) {
        std::vector<std::uint64_t> sig, sig_odd;
        for (unsigned k = 1;; ++k) {
            const std::uint64_t s = sigma(table, k, limit);
            if (s == 0) break;
            sig.push_back(s);
            sig_odd.push_back(sigma_odd(table, k, limit));
        }
        if (as_json) {
            ordered_json rows = ordered_json::array();
            for (std::size_t i = 0; i < sig.size(); ++i) {
                rows.push_back({{"k", i + 1}, {"sigma", sig[i]}, {"sigma_odd", sig_odd[i]}});
            }
            emit({{"limit", limit}, {"counts", rows}});
        } else {
            std::cout << "limit: " << limit << '\n';
            for (std::size_t i = 0; i < sig.size(); ++i) {
                std::cout << "k=" << i + 1 << ": sigma=" << sig[i]
                          << " sigma_odd=" << sig_odd[i] << '\n';
            }
        }
        return 0;
    }

    if (stride == 0) {
        const BulkInequalityResult bulk = verify_inequalities_up_to_parallel(table, limit);
        if (as_json) {
            ordered_json fails = ordered_json::array();
            for (const auto& [n, k] : bulk.failures) fails.push_back({{"n", n}, {"k", k}});
            emit({{"limit", bulk.limit}, {"checks", bulk.checks}, {"failures", fails},
                  {"all_ok", bulk.all_ok()}});
        } else {
            std::cout << "checked " << bulk.checks << " (n, k) pairs up to " << bulk.limit << '\n';
            for (const auto& [n, k] : bulk.failures) {
                std::cout << "FAILED at n=" << n << " k=" << k << '\n';
            }
            std::cout << (bulk.all_ok() ? "all ok" : "FAILED") << '\n';
        }
        return bulk.all_ok() ? 0 : 1;
    }

    bool all_ok = true;
    ordered_json rows = ordered_json::array();
    for (std::uint64_t n = 2; n <= limit; n += stride) {
        const InequalityReport rep = verify_inequalities(table, n);
        for (const InequalityVerdict& v : rep.per_k) {
            all_ok = all_ok && v.shadow_ok && v.cycle_ok;
            if (as_json) {
                rows.push_back({{"n", n},
                                {"k", v.k},
                                {"sigma", sigma(table, v.k + 1, n)},
                                {"sigma_odd", sigma_odd(table, v.k + 1, n)},
                                {"bjorner_ok", v.shadow_ok},
                                {"corollary_ok", v.cycle_ok}});
            } else {
                std::cout << "n=" << n << " k=" << v.k << ": shadow " << v.shadow_lhs
                          << " <= " << v.shadow_rhs << (v.shadow_ok ? " ok" : " FAILED")
                          << "; cycle " << v.cycle_lhs << " <= " << v.cycle_rhs
                          << (v.cycle_ok ? " ok" : " FAILED") << '\n';
            }
        }
    }
    if (as_json) emit(rows);
    else std::cout << (all_ok ? "all ok" : "FAILED") << '\n';
    return all_ok ? 0 : 1;
}

int run_scan_f_star(unsigned max_vertices, bool as_json) {
    const FStarReport report = scan_f_star(max_vertices);
    if (as_json) {
        ordered_json hits = ordered_json::array();
        for (const FStarHit& h : report.hits) {
            hits.push_back({{"f", json_seq(h.f)},
                            {"delta", json_seq(h.delta)},
                            {"delta_plus", json_seq(h.delta_plus)},
                            {"phi_psi", json_seq(h.phi_psi)}});
        }
        emit({{"max_vertices", report.max_vertices}, {"fvectors", report.fvectors},
              {"hits", hits}});
    } else {
        std::cout << "scanned " << report.fvectors << " distinct f-vectors on <= "
                  << report.max_vertices << " vertices\n"
                  << "equality cases with nonzero slack: " << report.hits.size() << '\n';
        for (const FStarHit& h : report.hits) {
            std::cout << "f=" << h.f.str() << " delta=" << h.delta.str()
                      << " delta_plus=" << h.delta_plus.str()
                      << " phi(psi(f))=" << h.phi_psi.str() << '\n';
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"shadow calculus of face-count vectors and Betti sequences"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable single-line JSON output");

    auto* expand_cmd = app.add_subcommand("expand", "binomial expansion of n at dimension dim");
    std::string expand_n;
    unsigned expand_dim = 0;
    expand_cmd->add_option("--n", expand_n, "nonnegative integer")->required();
    expand_cmd->add_option("--dim", expand_dim, "expansion dimension")->required();

    auto* op_cmd = app.add_subcommand("op", "apply one shadow operator");
    std::string op_kind, op_n;
    unsigned op_k = 0;
    op_cmd->add_option("--kind", op_kind, "lower | upper | shift | delta")
        ->required()
        ->check(CLI::IsMember({"lower", "upper", "shift", "delta"}));
    op_cmd->add_option("--n", op_n, "nonnegative integer")->required();
    op_cmd->add_option("--k", op_k, "operator dimension")->required();

    auto* ex_cmd = app.add_subcommand("exchange", "both sides of the three exchange equivalences");
    std::string ex_n, ex_m, ex_eps = "0";
    unsigned ex_k = 0;
    ex_cmd->add_option("--n", ex_n)->required();
    ex_cmd->add_option("--m", ex_m)->required();
    ex_cmd->add_option("--k", ex_k)->required();
    ex_cmd->add_option("--eps", ex_eps, "slack, 0 <= eps <= error_fn(n+m, k) (default 0)");

    auto* compat_cmd = app.add_subcommand("compat", "compatibility test for an (f, beta) pair");
    std::string compat_f, compat_beta, compat_mode = "bk", compat_eps;
    compat_cmd->add_option("--f", compat_f, "face-count vector \"a,b,c\"")->required();
    compat_cmd->add_option("--beta", compat_beta, "Betti sequence \"a,b,c\"")->required();
    compat_cmd->add_option("--mode", compat_mode, "bk | upper | relaxed (default bk)")
        ->check(CLI::IsMember({"bk", "upper", "relaxed"}));
    auto* compat_eps_opt =
        compat_cmd->add_option("--eps", compat_eps, "slack sequence for --mode relaxed");

    auto* fvec_cmd = app.add_subcommand("fvec", "is f the face-count vector of some complex");
    std::string fvec_f;
    fvec_cmd->add_option("--f", fvec_f)->required();

    auto* psi_cmd = app.add_subcommand("psi", "largest Betti sequence attainable for f");
    std::string psi_f;
    psi_cmd->add_option("--f", psi_f)->required();

    auto* phi_cmd = app.add_subcommand("phi", "smallest face-count vector attaining beta");
    std::string phi_beta;
    phi_cmd->add_option("--beta", phi_beta)->required();

    auto* max_cmd = app.add_subcommand("maximal", "is beta the maximal Betti sequence for f");
    std::string max_f, max_beta;
    max_cmd->add_option("--f", max_f)->required();
    max_cmd->add_option("--beta", max_beta)->required();

    auto* min_cmd = app.add_subcommand("minimal", "is f the minimal face-count vector for beta");
    std::string min_f, min_beta;
    min_cmd->add_option("--f", min_f)->required();
    min_cmd->add_option("--beta", min_beta)->required();

    auto* betti_cmd = app.add_subcommand("betti", "reduced Betti numbers of an explicit complex");
    unsigned betti_vertices = 0;
    std::string betti_facets, betti_field = "q";
    betti_cmd->add_option("--vertices", betti_vertices, "number of labeled vertices")->required();
    betti_cmd->add_option("--facets", betti_facets, "facet list \"0 1 2; 2 3\"")->required();
    betti_cmd->add_option("--field", betti_field, "q (rationals, default) | 2 (F2)")
        ->check(CLI::IsMember({"q", "2"}));

    auto* enum_cmd = app.add_subcommand("enumerate", "exhaustive small-complex enumeration");
    unsigned enum_max = 0;
    bool enum_verify = false;
    enum_cmd->add_option("--max-vertices", enum_max, "enumerate on 1..N vertices")->required();
    enum_cmd->add_flag("--verify", enum_verify,
                       "audit soundness, completeness and tightness of the enumeration");

    auto* sieve_cmd = app.add_subcommand("sieve", "square-free sieve and count inequalities");
    std::uint64_t sieve_limit = 0, sieve_stride = 0;
    bool sieve_verify = false;
    sieve_cmd->add_option("--limit", sieve_limit, "sieve bound")->required();
    sieve_cmd->add_flag("--verify", sieve_verify, "check both inequalities");
    sieve_cmd->add_option("--stride", sieve_stride, "sample every stride-th n instead of all")
        ->needs("--verify");

    auto* scan_cmd = app.add_subcommand(
        "scan-f-star", "f-vectors with nonzero slack where phi(psi(f)) + delta + delta_plus == f");
    unsigned scan_max = 0;
    scan_cmd->add_option("--max-vertices", scan_max)->required();

    for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (expand_cmd->parsed()) return run_expand(expand_n, expand_dim, as_json);
        if (op_cmd->parsed()) return run_op(op_kind, op_n, op_k, as_json);
        if (ex_cmd->parsed()) return run_exchange(ex_n, ex_m, ex_k, ex_eps, as_json);
        if (compat_cmd->parsed()) {
            return run_compat(compat_f, compat_beta, compat_mode, compat_eps_opt->count() > 0,
                              compat_eps, as_json);
        }
        if (fvec_cmd->parsed()) return run_fvec(fvec_f, as_json);
        if (psi_cmd->parsed()) return run_psi(psi_f, as_json);
        if (phi_cmd->parsed()) return run_phi(phi_beta, as_json);
        if (max_cmd->parsed()) return run_maximal(max_f, max_beta, as_json);
        if (min_cmd->parsed()) return run_minimal(min_f, min_beta, as_json);
        if (betti_cmd->parsed()) return run_betti(betti_vertices, betti_facets, betti_field, as_json);
        if (enum_cmd->parsed()) return run_enumerate(enum_max, enum_verify, as_json);
        if (sieve_cmd->parsed()) return run_sieve(sieve_limit, sieve_verify, sieve_stride, as_json);
        if (scan_cmd->parsed()) return run_scan_f_star(scan_max, as_json);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "invariant violation: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
