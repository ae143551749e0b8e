/**
 * @file reduce.hpp
 * @brief Strong and regular signature-aware top reduction.
 *
 * A reduction step subtracts c*mu*h where c*mu*LT(h) equals the current
 * leading term exactly: both the coefficient and the monomial of the reducer
 * must divide. In regular mode the reducer's monomial-scaled label must be
 * strictly below the reducee's signature; in general mode similar labels are
 * also eligible. Reduction is top-only; tails are never touched during a run.
 */
#ifndef SGB_REDUCE_HPP
#define SGB_REDUCE_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "sgb/pairs.hpp"

namespace sgb {

enum class ReduceMode { Regular, General };

template <class R>
struct ReductionStep {
    std::size_t reducer = 0;  // index into the reducer sequence, 0-based
    typename R::Elem coeff;   // c with c*mu*LT(h) = LT(f)
    Monomial mono;            // mu
};

/// Thrown when a reduction exceeds the configured step ceiling; indicates a
/// broken order implementation rather than a data error.
struct ReductionLimitError : std::logic_error {
    using std::logic_error::logic_error;
};

inline constexpr std::uint64_t kDefaultReductionCeiling = 10'000'000;

/// Pick a reducer for term t among basis with label-eligibility against sig.
/// Candidates need C(h) | coeff(t) and M(h) | mono(t); the winner minimizes
/// (monomial-scaled label under POT, |c|, insertion index).
template <class R>
std::optional<ReductionStep<R>> find_reducer(const MonomialOrder& ord, const Term<R>& t,
                                             const ModuleTerm<R>& sig,
                                             const std::vector<LabelledPoly<R>>& basis,
                                             ReduceMode mode) {
    std::optional<ReductionStep<R>> best;
    std::optional<ModuleTerm<R>> best_sig;
    for (std::size_t k = 0; k < basis.size(); ++k) {
        const LabelledPoly<R>& h = basis[k];
        if (!mono_divides_p(h.poly.lm(), t.mono)) continue;
        auto c = R::divexact(h.poly.lc(), t.coeff);
        if (!c) continue;
        Monomial mu = *mono_divides(h.poly.lm(), t.mono);
        SigCmp rel = sig_compare_scaled<R>(ord, mu, h.label, sig);
        if (rel == SigCmp::Greater) continue;
        if (mode == ReduceMode::Regular && rel == SigCmp::Similar) continue;
        if (best) {
            SigCmp vs = sig_compare_scaled<R>(ord, mu, h.label, *best_sig);
            if (vs == SigCmp::Greater) continue;
            if (vs == SigCmp::Similar && R::abs_cmp(*c, best->coeff) >= 0) continue;
        }
        best_sig = sig_scale<R>(R::one(), mu, h.label);
        best = ReductionStep<R>{k, std::move(*c), std::move(mu)};
    }
    return best;
}

/// Observer invoked once per reduction step, before it is applied.
template <class R>
using StepObserver =
    std::function<void(const Term<R>& reducee, const LabelledPoly<R>& reducer,
                       const ReductionStep<R>& step)>;

/// Iterated regular top reduction of f against the basis. The result keeps
/// the signature of f. When a cofactor accompanies f, reducer cofactors are
/// folded in so the certificate stays exact.
template <class R>
Polynomial<R> regular_reduce(const MonomialOrder& ord, Polynomial<R> f,
                             const ModuleTerm<R>& sig,
                             const std::vector<LabelledPoly<R>>& basis,
                             Cofactor<R>* cofactor = nullptr,
                             const StepObserver<R>& observer = nullptr,
                             std::uint64_t ceiling = kDefaultReductionCeiling) {
    std::uint64_t steps = 0;
    while (!f.is_zero()) {
        auto step = find_reducer<R>(ord, f.leading(), sig, basis, ReduceMode::Regular);
        if (!step) break;
        if (++steps > ceiling)
            throw ReductionLimitError("regular_reduce: step ceiling exceeded");
        const LabelledPoly<R>& h = basis[step->reducer];
        if (observer) observer(f.leading(), h, *step);
        f = Polynomial<R>::axpy(f, step->coeff, step->mono, h.poly, ord);
        if (cofactor && h.cofactor)
            cofactor->axpy(step->coeff, step->mono, *h.cofactor, ord);
    }
    return f;
}

/// Signature-free strong top reduction against plain polynomials: fixed point
/// of steps f <- f - c*mu*g with c*mu*LT(g) = LT(f). Reducer choice minimizes
/// (|c|, index). The observer, when given, sees each step before it applies.
template <class R>
Polynomial<R> strong_reduce(
    const MonomialOrder& ord, Polynomial<R> f, const std::vector<Polynomial<R>>& basis,
    std::uint64_t ceiling = kDefaultReductionCeiling,
    const std::function<void(const ReductionStep<R>&)>& observer = nullptr) {
    std::uint64_t steps = 0;
    while (!f.is_zero()) {
        const Term<R>& lt = f.leading();
        std::optional<ReductionStep<R>> best;
        for (std::size_t k = 0; k < basis.size(); ++k) {
            if (basis[k].is_zero()) continue;
            auto c = R::divexact(basis[k].lc(), lt.coeff);
            if (!c) continue;
            auto mu = mono_divides(basis[k].lm(), lt.mono);
            if (!mu) continue;
            if (best && R::abs_cmp(*c, best->coeff) >= 0) continue;
            best = ReductionStep<R>{k, std::move(*c), std::move(*mu)};
        }
        if (!best) break;
        if (++steps > ceiling)
            throw ReductionLimitError("strong_reduce: step ceiling exceeded");
        if (observer) observer(*best);
        f = Polynomial<R>::axpy(f, best->coeff, best->mono, basis[best->reducer], ord);
    }
    return f;
}

}  // namespace sgb

#endif
