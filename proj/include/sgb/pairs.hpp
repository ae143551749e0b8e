/**
 * @file pairs.hpp
 * @brief Critical pairs: classification, S-polynomials, G-polynomials, and
 *        the coprime and chain elimination tests.
 *
 * For basis elements g_i, g_j write T(i) = LT(g_i) = C(i)M(i) and
 * T(i,j) = lcm(T(i), T(j)) = C(i,j)M(i,j). The pair is regular when the two
 * term-scaled signatures differ as module monomials, strictly singular when
 * they coincide exactly (coefficient included), and singular-admissible in
 * between. Strictly singular pairs carry no signature and are never
 * processed.
 */
#ifndef SGB_PAIRS_HPP
#define SGB_PAIRS_HPP

#include <optional>
#include <stdexcept>
#include <utility>

#include "sgb/sig.hpp"

namespace sgb {

enum class PairClass { Regular, SingularAdmissible, StrictlySingular };

template <class R>
struct SPair {
    std::size_t i = 0, j = 0;  // basis indices, 1-based, i < j
    PairClass cls = PairClass::Regular;
    std::optional<ModuleTerm<R>> sig;  // absent iff strictly singular
    Monomial lcm_mono;                 // M(i,j)
    typename R::Elem lcm_coeff;        // C(i,j)
    // For regular pairs: the signature came from the j side, in which case
    // the S-polynomial is negated before processing so that S(i,j) is the
    // exact leading module term of its representation.
    bool sig_from_j = false;
};

/// The term scale factor T(i,j)/T(i) applied to g_i's data, split into
/// coefficient and monomial parts.
template <class R>
struct TermScale {
    typename R::Elem coeff;  // C(i,j)/C(i)
    Monomial mono;           // M(i,j)/M(i)
};

template <class R>
std::pair<TermScale<R>, TermScale<R>> pair_scales(const Polynomial<R>& gi,
                                                  const Polynomial<R>& gj,
                                                  const Monomial& lcm_mono,
                                                  const typename R::Elem& lcm_coeff) {
    auto ci = R::divexact(gi.lc(), lcm_coeff);
    auto cj = R::divexact(gj.lc(), lcm_coeff);
    auto mi = mono_divides(gi.lm(), lcm_mono);
    auto mj = mono_divides(gj.lm(), lcm_mono);
    if (!ci || !cj || !mi || !mj)
        throw std::logic_error("pair_scales: lcm does not divide exactly");
    return {TermScale<R>{*ci, *mi}, TermScale<R>{*cj, *mj}};
}

template <class R>
SPair<R> classify_spair(const MonomialOrder& ord, const LabelledPoly<R>& gi,
                        const LabelledPoly<R>& gj, std::size_t i, std::size_t j) {
    SPair<R> sp;
    sp.i = i;
    sp.j = j;
    sp.lcm_mono = mono_lcm(gi.poly.lm(), gj.poly.lm());
    sp.lcm_coeff = R::lcm(gi.poly.lc(), gj.poly.lc());
    auto [si, sj] = pair_scales(gi.poly, gj.poly, sp.lcm_mono, sp.lcm_coeff);
    ModuleTerm<R> a = sig_scale<R>(si.coeff, si.mono, gi.label);
    ModuleTerm<R> b = sig_scale<R>(sj.coeff, sj.mono, gj.label);
    switch (sig_compare<R>(ord, a, b)) {
        case SigCmp::Less:
            sp.cls = PairClass::Regular;
            sp.sig = std::move(b);
            sp.sig_from_j = true;
            break;
        case SigCmp::Greater:
            sp.cls = PairClass::Regular;
            sp.sig = std::move(a);
            break;
        case SigCmp::Similar:
            if (sig_equal_exact(a, b)) {
                sp.cls = PairClass::StrictlySingular;
            } else {
                // Leading module term of the subtracted cofactors: the shared
                // monomial and index with the difference of the coefficients.
                sp.cls = PairClass::SingularAdmissible;
                sp.sig = ModuleTerm<R>{R::sub(a.coeff, b.coeff), a.mono, a.index};
            }
            break;
    }
    return sp;
}

/// (T(i,j)/T(i)) g_i - (T(i,j)/T(j)) g_j. The scaled leading terms cancel by
/// construction, so any leading term of the result is strictly below M(i,j).
template <class R>
Polynomial<R> spol(const MonomialOrder& ord, const Polynomial<R>& gi,
                   const Polynomial<R>& gj) {
    Monomial lm = mono_lcm(gi.lm(), gj.lm());
    typename R::Elem lc = R::lcm(gi.lc(), gj.lc());
    auto [si, sj] = pair_scales(gi, gj, lm, lc);
    Polynomial<R> left = gi.scaled(si.coeff, si.mono);
    return Polynomial<R>::axpy(left, sj.coeff, sj.mono, gj, ord);
}

/// Bezout combination u*(L/mu)*f + v*(L/nu)*g with LT(f) = a*mu, LT(g) = b*nu,
/// (d,u,v) = xgcd(a,b), L = lcm(mu,nu). Its leading term is d*L exactly. The
/// label is the monomial-scaled maximum of the two labels, an upper bound on
/// the signature; ties keep the first argument's label.
template <class R>
LabelledPoly<R> gpol(const MonomialOrder& ord, const LabelledPoly<R>& f,
                     const LabelledPoly<R>& g) {
    const auto a = f.poly.lc();
    const auto b = g.poly.lc();
    const Monomial& mu = f.poly.lm();
    const Monomial& nu = g.poly.lm();
    Monomial L = mono_lcm(mu, nu);
    XGcd<typename R::Elem> bez = R::xgcd(a, b);
    Monomial qf = *mono_divides(mu, L);
    Monomial qg = *mono_divides(nu, L);

    LabelledPoly<R> out;
    if (R::is_zero(bez.u)) {
        out.poly = g.poly.scaled(bez.v, qg);
    } else if (R::is_zero(bez.v)) {
        out.poly = f.poly.scaled(bez.u, qf);
    } else {
        Polynomial<R> left = f.poly.scaled(bez.u, qf);
        out.poly = Polynomial<R>::axpy(left, R::neg(bez.v), qg, g.poly, ord);
    }
    out.kind = LabelKind::UpperBound;
    ModuleTerm<R> sf = sig_scale<R>(R::one(), qf, f.label);
    ModuleTerm<R> sg = sig_scale<R>(R::one(), qg, g.label);
    out.label = sig_compare<R>(ord, sf, sg) == SigCmp::Less ? sg : sf;
    if (f.cofactor && g.cofactor) {
        if (R::is_zero(bez.u)) {
            out.cofactor = g.cofactor->scaled(bez.v, qg);
        } else if (R::is_zero(bez.v)) {
            out.cofactor = f.cofactor->scaled(bez.u, qf);
        } else {
            Cofactor<R> cof = f.cofactor->scaled(bez.u, qf);
            cof.axpy(R::neg(bez.v), qg, *g.cofactor, ord);
            out.cofactor = std::move(cof);
        }
    }
    return out;
}

/// The forced leading term d*lcm(mu,nu) of the G-polynomial of f and g,
/// computable without building the polynomial.
template <class R>
Term<R> gpol_leading_term(const Polynomial<R>& f, const Polynomial<R>& g) {
    return {R::gcd(f.lc(), g.lc()), mono_lcm(f.lm(), g.lm())};
}

/// True when the pair may be skipped: leading monomials and leading
/// coefficients are both coprime, i.e. T(i,j) = T(i)*T(j) up to sign.
template <class R>
bool coprime_criterion(const Polynomial<R>& gi, const Polynomial<R>& gj) {
    if (!mono_gcd(gi.lm(), gj.lm()).is_one()) return false;
    return R::is_one(R::gcd(gi.lc(), gj.lc()));
}

/// Chain(i,j;k): T(k) divides T(i,j) and S(i,j) is greater-or-similar to the
/// term-scaled signature of g_k.
template <class R>
bool chain_criterion(const MonomialOrder& ord, const SPair<R>& sp,
                     const LabelledPoly<R>& gk) {
    if (!sp.sig) throw std::domain_error("chain_criterion: strictly singular pair");
    if (!mono_divides_p(gk.poly.lm(), sp.lcm_mono)) return false;
    if (!R::divexact(gk.poly.lc(), sp.lcm_coeff)) return false;
    Monomial mq = *mono_divides(gk.poly.lm(), sp.lcm_mono);
    return sig_compare_scaled<R>(ord, mq, gk.label, *sp.sig) != SigCmp::Greater;
}

}  // namespace sgb

#endif
