/**
 * @file oracle.hpp
 * @brief Independent certification of computed bases.
 *
 * The strong-basis certificate is the pairwise test: every input reduces to
 * zero, and for every unordered pair of basis elements both the S-polynomial
 * and the G-polynomial reduce to zero, using only signature-free strong
 * reduction. Over a PID the pairwise term-syzygies generate, so this test is
 * complete. A separate textbook Buchberger implementation provides a cross
 * check over the rationals.
 */
#ifndef SGB_ORACLE_HPP
#define SGB_ORACLE_HPP

#include <algorithm>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "sgb/engine.hpp"

namespace sgb {

struct VerificationFailure {
    std::string check;
    std::string witness;
};

struct VerificationReport {
    bool passed = true;
    std::vector<VerificationFailure> failures;

    void fail(std::string check, std::string witness) {
        passed = false;
        failures.push_back({std::move(check), std::move(witness)});
    }

    std::string to_string() const {
        if (passed) return "ok\n";
        std::ostringstream os;
        for (const auto& f : failures)
            os << "failed\t" << f.check << "\t" << f.witness << "\n";
        return os.str();
    }
};

namespace detail {

/// Polynomial part of the G-polynomial, free of any label machinery.
template <class R>
Polynomial<R> gpol_poly(const MonomialOrder& ord, const Polynomial<R>& f,
                        const Polynomial<R>& g) {
    XGcd<typename R::Elem> bez = R::xgcd(f.lc(), g.lc());
    Monomial L = mono_lcm(f.lm(), g.lm());
    Monomial qf = *mono_divides(f.lm(), L);
    Monomial qg = *mono_divides(g.lm(), L);
    if (R::is_zero(bez.u)) return g.scaled(bez.v, qg);
    if (R::is_zero(bez.v)) return f.scaled(bez.u, qf);
    Polynomial<R> left = f.scaled(bez.u, qf);
    return Polynomial<R>::axpy(left, R::neg(bez.v), qg, g, ord);
}

}  // namespace detail

/// Certify that G is a strong Groebner basis containing the input ideal's
/// reduction structure: (a) inputs reduce to zero, (b) optional membership
/// certificates evaluate correctly, (c) all pairwise S- and G-polynomials
/// reduce to zero.
template <class R>
VerificationReport verify_strong_gb(
    const MonomialOrder& ord, const std::vector<Polynomial<R>>& G,
    const std::vector<Polynomial<R>>& inputs,
    const std::vector<Cofactor<R>>* certificates = nullptr,
    const std::vector<std::string>* var_names = nullptr) {
    if (G.empty()) throw std::domain_error("verify_strong_gb: empty basis");
    for (const auto& g : G)
        if (g.is_zero()) throw std::domain_error("verify_strong_gb: zero element in basis");

    std::vector<std::string> vars;
    if (var_names) {
        vars = *var_names;
    } else {
        for (std::size_t i = 0; i < ord.nvars; ++i) vars.push_back("x" + std::to_string(i + 1));
    }
    VerificationReport report;

    for (std::size_t i = 0; i < inputs.size(); ++i) {
        Polynomial<R> rem = strong_reduce<R>(ord, inputs[i], G);
        if (!rem.is_zero())
            report.fail("input_reduces_to_zero",
                        "input " + std::to_string(i + 1) + " leaves " +
                            poly_to_string<R>(rem, vars));
    }

    if (certificates) {
        if (certificates->size() != G.size())
            throw std::domain_error("verify_strong_gb: certificate count mismatch");
        for (std::size_t i = 0; i < G.size(); ++i) {
            Polynomial<R> value = (*certificates)[i].evaluate(inputs, ord);
            if (value != G[i])
                report.fail("membership_certificate",
                            "element " + std::to_string(i + 1) +
                                " certificate evaluates to " +
                                poly_to_string<R>(value, vars));
        }
    }

    for (std::size_t i = 0; i < G.size(); ++i) {
        for (std::size_t j = i + 1; j < G.size(); ++j) {
            Polynomial<R> sp = spol<R>(ord, G[i], G[j]);
            Polynomial<R> rem = strong_reduce<R>(ord, sp, G);
            if (!rem.is_zero())
                report.fail("spol_reduces_to_zero",
                            "pair (" + std::to_string(i + 1) + "," +
                                std::to_string(j + 1) + ") leaves " +
                                poly_to_string<R>(rem, vars));
            Polynomial<R> gp = detail::gpol_poly<R>(ord, G[i], G[j]);
            rem = strong_reduce<R>(ord, gp, G);
            if (!rem.is_zero())
                report.fail("gpol_reduces_to_zero",
                            "pair (" + std::to_string(i + 1) + "," +
                                std::to_string(j + 1) + ") leaves " +
                                poly_to_string<R>(rem, vars));
        }
    }
    return report;
}

/// Replay a checked-mode trace: weak-basis label monotonicity, label/cofactor
/// agreement per label kind, and the three reduction-step side conditions
/// with strict signature inequality.
template <class R>
VerificationReport verify_trace(const MonomialOrder& ord, const Trace<R>& trace,
                                const std::vector<Polynomial<R>>& inputs) {
    VerificationReport report;
    std::vector<std::string> vars;
    for (std::size_t i = 0; i < ord.nvars; ++i) vars.push_back("x" + std::to_string(i + 1));

    std::optional<ModuleTerm<R>> prev_gw_label;
    std::size_t gw_count = 0;
    for (const auto& ev : trace) {
        switch (ev.kind) {
            case TraceKind::Boundary:
                prev_gw_label.reset();  // relabelling replaces history
                break;
            case TraceKind::GwAdd: {
                if (!ev.element) throw std::domain_error("verify_trace: malformed event");
                ++gw_count;
                if (prev_gw_label &&
                    sig_compare<R>(ord, *prev_gw_label, ev.element->label) ==
                        SigCmp::Greater)
                    report.fail("label_monotonicity",
                                "element " + std::to_string(gw_count) + " with label " +
                                    sig_to_string<R>(ev.element->label, vars));
                prev_gw_label = ev.element->label;
                [[fallthrough]];
            }
            case TraceKind::GsAdd: {
                if (!ev.element) throw std::domain_error("verify_trace: malformed event");
                const LabelledPoly<R>& lp = *ev.element;
                if (!lp.cofactor)
                    throw std::domain_error("verify_trace: trace lacks cofactors");
                Polynomial<R> value = lp.cofactor->evaluate(inputs, ord);
                if (value != lp.poly)
                    report.fail("certificate_evaluation",
                                "label " + sig_to_string<R>(lp.label, vars));
                auto lead = lp.cofactor->leading(ord);
                if (lp.kind == LabelKind::Exact) {
                    if (!lead || !sig_equal_exact(*lead, lp.label))
                        report.fail("exact_label_matches_cofactor",
                                    sig_to_string<R>(lp.label, vars));
                } else if (lead &&
                           sig_compare<R>(ord, *lead, lp.label) == SigCmp::Greater) {
                    report.fail("upper_bound_label_dominates",
                                sig_to_string<R>(lp.label, vars));
                }
                break;
            }
            case TraceKind::Step: {
                if (!ev.reducee_lt || !ev.reducee_sig || !ev.reducer_lt ||
                    !ev.reducer_label || !ev.step_coeff || !ev.step_mono)
                    throw std::domain_error("verify_trace: malformed step");
                // (1)+(2): c*mu*LT(h) = LT(f).
                Term<R> scaled{R::mul(*ev.step_coeff, ev.reducer_lt->coeff),
                               mono_mul(*ev.step_mono, ev.reducer_lt->mono)};
                if (!(scaled.coeff == ev.reducee_lt->coeff &&
                      scaled.mono == ev.reducee_lt->mono))
                    report.fail("step_term_identity",
                                "c=" + R::to_string(*ev.step_coeff));
                // (3), regular: mu*sigma(h) strictly below s(f).
                ModuleTerm<R> ssig =
                    sig_scale<R>(R::one(), *ev.step_mono, *ev.reducer_label);
                if (sig_compare<R>(ord, ssig, *ev.reducee_sig) != SigCmp::Less)
                    report.fail("step_regularity",
                                "reducer label " +
                                    sig_to_string<R>(*ev.reducer_label, vars) +
                                    " against " +
                                    sig_to_string<R>(*ev.reducee_sig, vars));
                break;
            }
            default:
                break;
        }
    }
    return report;
}

// --- textbook Buchberger over a field ---------------------------------------

namespace detail {

/// Full normal form (top and tail) against G; coefficients form a field.
template <class R>
Polynomial<R> field_normal_form(const MonomialOrder& ord, Polynomial<R> f,
                                const std::vector<Polynomial<R>>& G) {
    std::vector<Term<R>> remainder;
    while (!f.is_zero()) {
        bool reduced = false;
        for (const auto& g : G) {
            if (g.is_zero()) continue;
            auto mu = mono_divides(g.lm(), f.lm());
            if (!mu) continue;
            auto c = R::divexact(g.lc(), f.lc());
            f = Polynomial<R>::axpy(f, *c, *mu, g, ord);
            reduced = true;
            break;
        }
        if (!reduced) {
            remainder.push_back(f.leading());
            f = Polynomial<R>::sub(
                f, Polynomial<R>::term(f.lc(), f.lm()), ord);
        }
    }
    return Polynomial<R>::from_terms(std::move(remainder), ord);
}

}  // namespace detail

/// Reduced Groebner basis by the classical pair algorithm with the coprime
/// and chain criteria. Only valid over a field.
template <class R>
std::vector<Polynomial<R>> buchberger_field_oracle(const MonomialOrder& ord,
                                                   const std::vector<Polynomial<R>>& inputs) {
    if (!R::is_field)
        throw std::domain_error("buchberger_field_oracle: coefficients must form a field");
    std::vector<Polynomial<R>> G;
    for (const auto& f : inputs) {
        if (f.is_zero()) continue;
        G.push_back(f.scaled(*R::divexact(f.lc(), R::one()), Monomial::one(ord.nvars)));
    }
    if (G.empty()) return G;

    std::set<std::pair<std::size_t, std::size_t>> pending, handled;
    auto push_pairs = [&](std::size_t r) {
        for (std::size_t i = 0; i < r; ++i) pending.insert({i, r});
    };
    for (std::size_t r = 1; r < G.size(); ++r) push_pairs(r);

    while (!pending.empty()) {
        // Normal selection: smallest lcm degree first.
        auto best = pending.begin();
        std::uint64_t best_deg = mono_lcm(G[best->first].lm(), G[best->second].lm()).degree();
        for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
            std::uint64_t d = mono_lcm(G[it->first].lm(), G[it->second].lm()).degree();
            if (d < best_deg) {
                best = it;
                best_deg = d;
            }
        }
        auto [i, j] = *best;
        pending.erase(best);
        handled.insert({i, j});

        Monomial lij = mono_lcm(G[i].lm(), G[j].lm());
        if (mono_gcd(G[i].lm(), G[j].lm()).is_one()) continue;  // coprime criterion
        bool chained = false;  // classical chain criterion over handled pairs
        for (std::size_t k = 0; k < G.size() && !chained; ++k) {
            if (k == i || k == j) continue;
            if (!mono_divides(G[k].lm(), lij)) continue;
            auto key = [](std::size_t a, std::size_t b) {
                return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
            };
            if (handled.count(key(i, k)) && handled.count(key(j, k))) chained = true;
        }
        if (chained) continue;

        Polynomial<R> sp = spol<R>(ord, G[i], G[j]);
        Polynomial<R> rem = detail::field_normal_form<R>(ord, std::move(sp), G);
        if (rem.is_zero()) continue;
        rem = rem.scaled(*R::divexact(rem.lc(), R::one()), Monomial::one(ord.nvars));
        G.push_back(std::move(rem));
        push_pairs(G.size() - 1);
    }

    // Reduce: drop redundant leading monomials, then tail-reduce and scale monic.
    std::vector<Polynomial<R>> reduced;
    for (std::size_t i = 0; i < G.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < G.size() && !redundant; ++j) {
            if (i == j) continue;
            if (!mono_divides(G[j].lm(), G[i].lm())) continue;
            if (G[j].lm() == G[i].lm() && j > i) continue;  // keep the first
            redundant = true;
        }
        if (!redundant) reduced.push_back(G[i]);
    }
    for (std::size_t i = 0; i < reduced.size(); ++i) {
        std::vector<Polynomial<R>> others;
        for (std::size_t j = 0; j < reduced.size(); ++j)
            if (j != i) others.push_back(reduced[j]);
        reduced[i] = detail::field_normal_form<R>(ord, reduced[i], others);
        reduced[i] = reduced[i].scaled(*R::divexact(reduced[i].lc(), R::one()),
                                       Monomial::one(ord.nvars));
    }
    std::sort(reduced.begin(), reduced.end(),
              [&](const Polynomial<R>& a, const Polynomial<R>& b) {
                  return ord.compare(a.lm(), b.lm()) == Cmp::Greater;
              });
    return reduced;
}

/// Leading-monomial ideal equality over a field: mutual divisibility of the
/// leading-monomial sets.
template <class R>
bool same_lm_ideal(const MonomialOrder& ord, const std::vector<Polynomial<R>>& A,
                   const std::vector<Polynomial<R>>& B) {
    auto covered = [&](const std::vector<Polynomial<R>>& xs,
                       const std::vector<Polynomial<R>>& ys) {
        for (const auto& x : xs) {
            if (x.is_zero()) continue;
            bool found = false;
            for (const auto& y : ys) {
                if (y.is_zero()) continue;
                if (mono_divides(y.lm(), x.lm())) {
                    found = true;
                    break;
                }
            }
            if (!found) return false;
        }
        return true;
    };
    (void)ord;
    return covered(A, B) && covered(B, A);
}

}  // namespace sgb

#endif
