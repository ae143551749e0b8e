/**
 * @file engine.hpp
 * @brief The signature-ordered pair loop computing strong Groebner bases
 *        over an effective PID.
 *
 * The engine maintains a weak basis G_w of exactly-labelled polynomials and
 * a strong basis G_s closed under G-polynomials. Pairs are processed by
 * ascending signature; reductions are regular (reducer labels strictly below
 * the reducee's signature), which keeps every G_w label exact. Strictly
 * singular pairs are filtered at construction, so the run never encounters a
 * signature drop. Elimination criteria:
 *   - coprime and chain at pair creation and queue maintenance,
 *   - singular, syzygy and F5 when a pair is popped,
 *   - 1-singular after regular reduction.
 */
#ifndef SGB_ENGINE_HPP
#define SGB_ENGINE_HPP

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sgb/reduce.hpp"
#include "sgb/trace.hpp"

namespace sgb {

/// Counters matching the benchmark report columns.
struct Statistics {
    std::uint64_t pairs = 0;          // pairs considered (eliminated or popped)
    std::uint64_t spols = 0;          // S-polynomials actually reduced
    std::uint64_t elim_coprime = 0;
    std::uint64_t elim_chain = 0;
    std::uint64_t elim_f5 = 0;
    std::uint64_t elim_singular = 0;
    std::uint64_t elim_1singular = 0;
    std::uint64_t red_to_zero = 0;
};

struct TimeoutError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunOptions {
    MonomialOrder order;
    bool coprime = true;
    bool chain = true;
    bool f5 = true;
    bool singular = true;
    bool syzygy = true;
    bool one_singular = true;
    bool checked = false;      // carry and verify cofactor certificates
    bool interreduce = false;  // interreduce and relabel at outer boundaries
    bool trace = false;        // collect the structured event log
    bool gpol_prune = false;   // aggressive G-polynomial pruning
    std::uint64_t reduction_ceiling = kDefaultReductionCeiling;
    std::optional<std::chrono::steady_clock::time_point> deadline;
};

/// Queue order: ascending pair signature, then smallest signature
/// coefficient in absolute value within a similarity class, then (i,j) for
/// determinism.
template <class R>
struct PairQueueLess {
    MonomialOrder ord;
    bool operator()(const SPair<R>& a, const SPair<R>& b) const {
        switch (sig_compare<R>(ord, *a.sig, *b.sig)) {
            case SigCmp::Less: return true;
            case SigCmp::Greater: return false;
            case SigCmp::Similar: break;
        }
        int c = R::abs_cmp(a.sig->coeff, b.sig->coeff);
        if (c != 0) return c < 0;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    }
};

template <class R>
struct BasisState {
    using LtKey = std::pair<std::vector<std::uint32_t>, typename R::Elem>;

    MonomialOrder ord;
    RunOptions opts;
    std::vector<Polynomial<R>> inputs;  // nonzero, deduplicated
    std::vector<LabelledPoly<R>> g_w;
    std::vector<LabelledPoly<R>> g_s;
    std::set<LtKey> g_s_lt;  // leading terms of g_s, for duplicate skipping
    std::set<SPair<R>, PairQueueLess<R>> queue;
    Statistics stats;
    std::vector<ModuleTerm<R>> syzygy_sigs;
    // f5_snapshots[k] = |G_s| when outer iteration k finished (index 0 unused).
    std::vector<std::size_t> f5_snapshots;
    std::set<ModuleTerm<R>, ModuleTermKeyLess<R>> processed_sigs;
    Trace<R> trace;
    bool relabelled = false;  // an interreduction boundary has fired

    BasisState(MonomialOrder o, RunOptions op, std::vector<Polynomial<R>> in)
        : ord(o),
          opts(std::move(op)),
          inputs(std::move(in)),
          queue(PairQueueLess<R>{o}),
          f5_snapshots(inputs.size() + 1, 0) {}

    static LtKey lt_key(const Term<R>& t) {
        return {t.mono.exponents(), t.coeff};
    }

    void push_strong(LabelledPoly<R> lp) {
        g_s_lt.insert(lt_key(lp.poly.leading()));
        g_s.push_back(std::move(lp));
    }

    void record(TraceEvent<R> ev) {
        if (opts.trace) trace.push_back(std::move(ev));
    }
};

template <class R>
struct RunResult {
    std::vector<LabelledPoly<R>> basis;  // final strong basis G_s
    Statistics stats;
    Trace<R> trace;
    std::vector<std::string> warnings;
};

// --- criteria -------------------------------------------------------------

/// Exact signature match against already handled signatures.
template <class R>
bool singular_criterion(const BasisState<R>& st, const ModuleTerm<R>& sig) {
    return st.processed_sigs.count(sig) != 0;
}

/// Term divisibility by a recorded zero-reduction signature.
template <class R>
bool syzygy_criterion(const BasisState<R>& st, const ModuleTerm<R>& sig) {
    for (const auto& z : st.syzygy_sigs)
        if (sig_term_divides<R>(z, sig)) return true;
    return false;
}

/// The signature term is top-reducible by the strong basis of the ideal of
/// the earlier generators: it labels a syzygy and the pair can be dropped.
template <class R>
bool f5_criterion(const BasisState<R>& st, const ModuleTerm<R>& sig) {
    std::size_t k = sig.index;
    if (k < 2) return false;
    std::size_t limit = st.f5_snapshots.at(k - 1);
    for (std::size_t idx = 0; idx < limit; ++idx) {
        const Polynomial<R>& h = st.g_s[idx].poly;
        if (!mono_divides_p(h.lm(), sig.mono)) continue;
        if (R::divexact(h.lc(), sig.coeff)) return true;
    }
    return false;
}

/// Singular top-reducibility in one step: some strong-basis element h with
/// c*mu*LT(h) = LT(g) and mu*label(h) similar to the signature of g. The
/// reducer universe is the same as for regular reduction, so an element that
/// fails this test differs from every eligible reduction path.
template <class R>
bool one_singular_criterion(const BasisState<R>& st, const Polynomial<R>& g,
                            const ModuleTerm<R>& sig) {
    const auto& universe = std::getenv("SGB_1SING_GW") ? st.g_w : st.g_s;
    for (const auto& h : universe) {
        if (!mono_divides_p(h.poly.lm(), g.lm())) continue;
        if (!R::divexact(h.poly.lc(), g.lc())) continue;
        Monomial mu = *mono_divides(h.poly.lm(), g.lm());
        if (sig_compare_scaled<R>(st.ord, mu, h.label, sig) == SigCmp::Similar)
            return true;
    }
    return false;
}

// --- update ---------------------------------------------------------------

namespace detail {

/// Aggressive G-polynomial pruning: some existing element term-divides the
/// forced leading term with a label no worse than the would-be G-label.
template <class R>
bool gpol_prunable(const MonomialOrder& ord, const std::vector<LabelledPoly<R>>& basis,
                   const Term<R>& forced, const ModuleTerm<R>& would_be_label) {
    for (const auto& h : basis) {
        if (!R::divexact(h.poly.lc(), forced.coeff)) continue;
        auto mu = mono_divides(h.poly.lm(), forced.mono);
        if (!mu) continue;
        ModuleTerm<R> scaled = sig_scale<R>(R::one(), *mu, h.label);
        if (sig_compare<R>(ord, scaled, would_be_label) != SigCmp::Greater) return true;
    }
    return false;
}

}  // namespace detail

/// Grow the bases with a regular-reduced element, complete G_s with
/// G-polynomials, create new admissible pairs and maintain the queue with the
/// chain criterion.
template <class R>
void update(BasisState<R>& st, Polynomial<R> f, ModuleTerm<R> sig,
            std::optional<Cofactor<R>> cofactor, LabelKind kind = LabelKind::Exact) {
    StepObserver<R> observer;
    if (st.opts.trace) {
        observer = [&st, &sig](const Term<R>& reducee, const LabelledPoly<R>& reducer,
                               const ReductionStep<R>& step) {
            TraceEvent<R> ev;
            ev.kind = TraceKind::Step;
            ev.reducee_lt = reducee;
            ev.reducee_sig = sig;
            ev.reducer_lt = reducer.poly.leading();
            ev.reducer_label = reducer.label;
            ev.step_coeff = step.coeff;
            ev.step_mono = step.mono;
            st.record(std::move(ev));
        };
    }
    Polynomial<R> g =
        regular_reduce<R>(st.ord, std::move(f), sig, st.g_s,
                          cofactor ? &*cofactor : nullptr, observer,
                          st.opts.reduction_ceiling);

    if (g.is_zero()) {
        if (std::getenv("SGB_PROGRESS")) {
            std::size_t limit =
                sig.index >= 2 ? st.f5_snapshots.at(sig.index - 1) : 0;
            bool mono_div = false, term_div = false;
            for (std::size_t idx = 0; idx < limit; ++idx) {
                const Polynomial<R>& h = st.g_s[idx].poly;
                if (!mono_divides_p(h.lm(), sig.mono)) continue;
                mono_div = true;
                if (R::divexact(h.lc(), sig.coeff)) term_div = true;
            }
            std::fprintf(stderr, "red0 sig=%s idx=%zu monodeg=%llu monoDiv=%d termDiv=%d\n",
                         R::to_string(sig.coeff).c_str(), sig.index,
                         (unsigned long long)sig.mono.degree(), (int)mono_div,
                         (int)term_div);
        }
        st.stats.red_to_zero += 1;
        // Only exact labels certify a syzygy signature usable for later
        // eliminations; upper bounds (possible after a relabel boundary) are
        // not recorded.
        if (kind == LabelKind::Exact) st.syzygy_sigs.push_back(sig);
        if (cofactor) {
            auto lead = cofactor->leading(st.ord);
            if (kind == LabelKind::Exact) {
                if (!lead || !sig_equal_exact(*lead, sig))
                    throw std::logic_error(
                        "zero reduction: cofactor lead differs from signature");
            } else if (lead && sig_compare<R>(st.ord, *lead, sig) == SigCmp::Greater) {
                throw std::logic_error("zero reduction: cofactor lead above bound");
            }
            if (!cofactor->evaluate(st.inputs, st.ord).is_zero())
                throw std::logic_error("zero reduction: cofactor does not evaluate to zero");
        }
        TraceEvent<R> ev;
        ev.kind = TraceKind::ZeroReduction;
        ev.sig = sig;
        st.record(std::move(ev));
        return;
    }

    if (st.opts.one_singular && one_singular_criterion(st, g, sig)) {
        st.stats.elim_1singular += 1;
        TraceEvent<R> ev;
        ev.kind = TraceKind::PairEliminated;
        ev.reason = "1-singular";
        ev.sig = sig;
        st.record(std::move(ev));
        return;
    }

    const std::size_t r = st.g_w.size() + 1;
    LabelledPoly<R> gr{std::move(g), std::move(sig), kind, std::move(cofactor)};
    if (st.opts.checked) verify_label(gr, st.inputs, st.ord);
    if (kind == LabelKind::Exact) st.processed_sigs.insert(gr.label);

    const std::size_t pre_existing = st.g_s.size();
    st.g_w.push_back(gr);
    st.push_strong(std::move(gr));
    {
        TraceEvent<R> ev;
        ev.kind = TraceKind::GwAdd;
        ev.element = st.g_w.back();
        st.record(std::move(ev));
        TraceEvent<R> ev2;
        ev2.kind = TraceKind::GsAdd;
        ev2.element = st.g_s.back();
        st.record(std::move(ev2));
    }

    // Complete the strong basis: G-polynomials of every pre-existing element
    // with the new one. A candidate whose forced leading term duplicates an
    // existing leading term exactly is skipped.
    for (std::size_t idx = 0; idx < pre_existing; ++idx) {
        Term<R> forced = gpol_leading_term<R>(st.g_s[idx].poly, st.g_s[pre_existing].poly);
        if (st.g_s_lt.count(BasisState<R>::lt_key(forced))) continue;
        LabelledPoly<R> gp = gpol<R>(st.ord, st.g_s[idx], st.g_s[pre_existing]);
        if (st.opts.gpol_prune &&
            detail::gpol_prunable<R>(st.ord, st.g_s, forced, gp.label))
            continue;
        if (st.opts.checked) verify_label(gp, st.inputs, st.ord);
        st.push_strong(std::move(gp));
        TraceEvent<R> ev;
        ev.kind = TraceKind::GsAdd;
        ev.element = st.g_s.back();
        st.record(std::move(ev));
    }

    // New pairs (i, r). Strictly singular pairs are signature drops and are
    // never considered; coprime and chain filter the rest.
    for (std::size_t i = 1; i < r; ++i) {
        SPair<R> sp = classify_spair<R>(st.ord, st.g_w[i - 1], st.g_w[r - 1], i, r);
        if (sp.cls == PairClass::StrictlySingular) continue;
        if (st.opts.coprime &&
            coprime_criterion<R>(st.g_w[i - 1].poly, st.g_w[r - 1].poly)) {
            st.stats.pairs += 1;
            st.stats.elim_coprime += 1;
            TraceEvent<R> ev;
            ev.kind = TraceKind::PairEliminated;
            ev.i = i;
            ev.j = r;
            ev.reason = "coprime";
            ev.sig = sp.sig;
            st.record(std::move(ev));
            continue;
        }
        bool chained = false;
        if (st.opts.chain) {
            for (std::size_t k = 1; k < r && !chained; ++k) {
                if (k == i) continue;
                if (!chain_criterion<R>(st.ord, sp, st.g_w[k - 1])) continue;
                // Equal-lcm tie guard: within a clique of new pairs sharing
                // the lcm monomial, only a lower partner index eliminates.
                Monomial mkr =
                    mono_lcm(st.g_w[k - 1].poly.lm(), st.g_w[r - 1].poly.lm());
                if (mkr == sp.lcm_mono && k >= i) continue;
                chained = true;
            }
        }
        if (chained) {
            st.stats.pairs += 1;
            st.stats.elim_chain += 1;
            TraceEvent<R> ev;
            ev.kind = TraceKind::PairEliminated;
            ev.i = i;
            ev.j = r;
            ev.reason = "chain";
            ev.sig = sp.sig;
            st.record(std::move(ev));
            continue;
        }
        TraceEvent<R> ev;
        ev.kind = TraceKind::PairQueued;
        ev.i = i;
        ev.j = r;
        ev.sig = sp.sig;
        st.record(std::move(ev));
        st.queue.insert(std::move(sp));
    }

    // Queue maintenance: drop queued pairs now rewritable through g_r.
    if (st.opts.chain) {
        for (auto it = st.queue.begin(); it != st.queue.end();) {
            if (it->i != r && it->j != r &&
                chain_criterion<R>(st.ord, *it, st.g_w[r - 1])) {
                st.stats.pairs += 1;
                st.stats.elim_chain += 1;
                TraceEvent<R> ev;
                ev.kind = TraceKind::PairEliminated;
                ev.i = it->i;
                ev.j = it->j;
                ev.reason = "chain";
                ev.sig = it->sig;
                st.record(std::move(ev));
                it = st.queue.erase(it);
            } else {
                ++it;
            }
        }
    }
}

// --- interreduction boundary ------------------------------------------------

/// Signature-free interreduction of the strong basis at an outer-loop
/// boundary; both bases are replaced by the result and every element is
/// relabelled with the upper bound e_{next_index}.
template <class R>
void interreduce_pass(BasisState<R>& st, std::size_t next_index) {
    if (!st.queue.empty())
        throw std::logic_error("interreduce_pass: pair queue is not empty");
    if (st.g_s.empty()) return;
    const std::size_t nvars = st.ord.nvars;

    std::vector<LabelledPoly<R>> cur = std::move(st.g_s);
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < cur.size();) {
            std::vector<Polynomial<R>> others;
            others.reserve(cur.size() - 1);
            for (std::size_t j = 0; j < cur.size(); ++j)
                if (j != i) others.push_back(cur[j].poly);
            Cofactor<R>* cof = cur[i].cofactor ? &*cur[i].cofactor : nullptr;
            std::function<void(const ReductionStep<R>&)> fold;
            std::vector<std::size_t> omap;
            if (cof) {
                for (std::size_t j = 0; j < cur.size(); ++j)
                    if (j != i) omap.push_back(j);
                fold = [&](const ReductionStep<R>& step) {
                    const auto& hc = cur[omap[step.reducer]].cofactor;
                    if (hc) cof->axpy(step.coeff, step.mono, *hc, st.ord);
                };
            }
            Polynomial<R> red = strong_reduce<R>(st.ord, cur[i].poly, others,
                                                 st.opts.reduction_ceiling, fold);
            if (red.is_zero()) {
                cur.erase(cur.begin() + static_cast<std::ptrdiff_t>(i));
                changed = true;
            } else {
                if (red != cur[i].poly) changed = true;
                cur[i].poly = std::move(red);
                ++i;
            }
        }
    }

    ModuleTerm<R> bound{R::one(), Monomial::one(nvars), next_index};
    for (auto& lp : cur) {
        lp.label = bound;
        lp.kind = LabelKind::UpperBound;
        if (st.opts.checked) verify_label(lp, st.inputs, st.ord);
    }
    st.g_w = cur;
    st.g_s = std::move(cur);
    st.g_s_lt.clear();
    for (const auto& lp : st.g_s) st.g_s_lt.insert(BasisState<R>::lt_key(lp.poly.leading()));
    for (std::size_t k = 1; k < next_index && k < st.f5_snapshots.size(); ++k)
        st.f5_snapshots[k] = st.g_s.size();
    st.relabelled = true;
    TraceEvent<R> ev;
    ev.kind = TraceKind::Boundary;
    ev.boundary_index = next_index;
    st.record(std::move(ev));
}

// --- main loop --------------------------------------------------------------

/// The S-polynomial of a popped pair, oriented so that the pair signature is
/// the exact leading module term of its representation, with the matching
/// cofactor in checked mode.
template <class R>
std::pair<Polynomial<R>, std::optional<Cofactor<R>>> spol_for_pair(
    const BasisState<R>& st, const SPair<R>& sp) {
    const LabelledPoly<R>& gi = st.g_w[sp.i - 1];
    const LabelledPoly<R>& gj = st.g_w[sp.j - 1];
    auto [si, sj] = pair_scales<R>(gi.poly, gj.poly, sp.lcm_mono, sp.lcm_coeff);

    // Structural cancellation: both scaled leading terms equal T(i,j).
    Term<R> left{R::mul(si.coeff, gi.poly.lc()), mono_mul(si.mono, gi.poly.lm())};
    Term<R> right{R::mul(sj.coeff, gj.poly.lc()), mono_mul(sj.mono, gj.poly.lm())};
    if (!(left.coeff == right.coeff && left.mono == right.mono))
        throw std::logic_error("spol: scaled leading terms do not cancel");

    Polynomial<R> f = gi.poly.scaled(si.coeff, si.mono);
    f = Polynomial<R>::axpy(f, sj.coeff, sj.mono, gj.poly, st.ord);
    std::optional<Cofactor<R>> cof;
    if (st.opts.checked && gi.cofactor && gj.cofactor) {
        cof = gi.cofactor->scaled(si.coeff, si.mono);
        cof->axpy(sj.coeff, sj.mono, *gj.cofactor, st.ord);
    }
    if (sp.sig_from_j) {
        f = f.negated();
        if (cof) cof = cof->negated();
    }
    return {std::move(f), std::move(cof)};
}

template <class R>
void check_deadline(const BasisState<R>& st) {
    if (st.opts.deadline && std::chrono::steady_clock::now() > *st.opts.deadline)
        throw TimeoutError("computation exceeded its deadline");
}

/// Run the full algorithm on nonzero generators. Zero and duplicate inputs
/// are dropped with a warning. Returns the final strong basis, the counters
/// and, when enabled, the event trace.
template <class R>
RunResult<R> run(const std::vector<Polynomial<R>>& raw_inputs, const RunOptions& opts) {
    RunResult<R> result;
    std::vector<Polynomial<R>> inputs;
    for (std::size_t idx = 0; idx < raw_inputs.size(); ++idx) {
        if (raw_inputs[idx].is_zero()) {
            result.warnings.push_back("dropped zero input at position " +
                                      std::to_string(idx + 1));
            continue;
        }
        bool dup = false;
        for (const auto& p : inputs) dup = dup || p == raw_inputs[idx];
        if (dup) {
            result.warnings.push_back("dropped duplicate input at position " +
                                      std::to_string(idx + 1));
            continue;
        }
        inputs.push_back(raw_inputs[idx]);
    }
    if (inputs.empty()) return result;

    const std::size_t m = inputs.size();
    const std::size_t nvars = opts.order.nvars;
    BasisState<R> st(opts.order, opts, inputs);

    for (std::size_t i = 1; i <= m; ++i) {
        if (st.opts.interreduce && i >= 2) interreduce_pass(st, i);
        ModuleTerm<R> sig{R::one(), Monomial::one(nvars), i};
        std::optional<Cofactor<R>> cof;
        if (st.opts.checked) cof = Cofactor<R>::unit(m, nvars, i);
        update(st, inputs[i - 1], sig, std::move(cof), LabelKind::Exact);

        while (!st.queue.empty()) {
            check_deadline(st);
            if (const char* dbg = std::getenv("SGB_PROGRESS");
                dbg && st.stats.pairs % 500 == 0) {
                std::fprintf(stderr, "pairs=%llu spols=%llu |Gw|=%zu |Gs|=%zu |Q|=%zu",
                             (unsigned long long)st.stats.pairs,
                             (unsigned long long)st.stats.spols, st.g_w.size(),
                             st.g_s.size(), st.queue.size());
                const auto& last = st.g_w.back();
                std::fprintf(stderr, " lastLT=%s*[deg %llu] lastsig=%s*e_%zu[deg %llu]\n",
                             R::to_string(last.poly.lc()).c_str(),
                             (unsigned long long)last.poly.lm().degree(),
                             R::to_string(last.label.coeff).c_str(), last.label.index,
                             (unsigned long long)last.label.mono.degree());
            }
            SPair<R> sp = *st.queue.begin();
            st.queue.erase(st.queue.begin());
            st.stats.pairs += 1;
            {
                TraceEvent<R> ev;
                ev.kind = TraceKind::PairPopped;
                ev.i = sp.i;
                ev.j = sp.j;
                ev.sig = sp.sig;
                st.record(std::move(ev));
            }
            const ModuleTerm<R>& sig_ij = *sp.sig;
            const char* crit = nullptr;
            if (st.opts.singular && singular_criterion(st, sig_ij)) {
                st.stats.elim_singular += 1;
                crit = "singular";
            } else if (st.opts.syzygy && syzygy_criterion(st, sig_ij)) {
                crit = "syzygy";
            } else if (st.opts.f5 && f5_criterion(st, sig_ij)) {
                st.stats.elim_f5 += 1;
                crit = "f5";
            }
            if (crit) {
                TraceEvent<R> ev;
                ev.kind = TraceKind::PairEliminated;
                ev.i = sp.i;
                ev.j = sp.j;
                ev.reason = crit;
                ev.sig = sp.sig;
                st.record(std::move(ev));
                continue;
            }
            st.stats.spols += 1;
            if (std::getenv("SGB_PROGRESS") && sp.cls == PairClass::SingularAdmissible)
                std::fprintf(stderr, "singular-admissible spol (%zu,%zu)\n", sp.i, sp.j);
            LabelKind kind = (st.g_w[sp.i - 1].kind == LabelKind::Exact &&
                              st.g_w[sp.j - 1].kind == LabelKind::Exact)
                                 ? LabelKind::Exact
                                 : LabelKind::UpperBound;
            if (kind == LabelKind::Exact) st.processed_sigs.insert(sig_ij);
            auto [f, cof_sp] = spol_for_pair(st, sp);
            update(st, std::move(f), sig_ij, std::move(cof_sp), kind);
        }
        st.f5_snapshots[i] = st.g_s.size();
    }

    result.basis = std::move(st.g_s);
    result.stats = st.stats;
    result.trace = std::move(st.trace);
    return result;
}

}  // namespace sgb

#endif
