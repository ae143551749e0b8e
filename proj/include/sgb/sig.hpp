/**
 * @file sig.hpp
 * @brief Module terms of the free module over the polynomial ring, the
 *        position-over-term order, and labelled polynomials.
 *
 * A signature is a term k*x^a*e_i of the free module with basis e_1..e_m.
 * Ordering is position-over-term: the generator index decides first, then
 * the monomial; coefficients are never compared. Two module terms with equal
 * index and monomial are "similar" regardless of their coefficients.
 */
#ifndef SGB_SIG_HPP
#define SGB_SIG_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sgb/poly.hpp"

namespace sgb {

enum class SigCmp { Less, Greater, Similar };

template <class R>
struct ModuleTerm {
    typename R::Elem coeff;  // nonzero
    Monomial mono;
    std::size_t index = 1;  // generator index, 1-based

    friend bool operator==(const ModuleTerm& a, const ModuleTerm& b) {
        return a.index == b.index && a.mono == b.mono && a.coeff == b.coeff;
    }
};

/// POT comparison, coefficients disregarded. Equal index and monomial yield
/// Similar even when the coefficients differ.
template <class R>
SigCmp sig_compare(const MonomialOrder& ord, const ModuleTerm<R>& s,
                   const ModuleTerm<R>& t) {
    if (s.index != t.index) return s.index < t.index ? SigCmp::Less : SigCmp::Greater;
    switch (ord.compare(s.mono, t.mono)) {
        case Cmp::Less: return SigCmp::Less;
        case Cmp::Greater: return SigCmp::Greater;
        case Cmp::Equal: return SigCmp::Similar;
    }
    throw std::logic_error("unreachable");
}

template <class R>
bool sig_less(const MonomialOrder& ord, const ModuleTerm<R>& s, const ModuleTerm<R>& t) {
    return sig_compare(ord, s, t) == SigCmp::Less;
}

/// "At most": strictly below or similar.
template <class R>
bool sig_leq(const MonomialOrder& ord, const ModuleTerm<R>& s, const ModuleTerm<R>& t) {
    return sig_compare(ord, s, t) != SigCmp::Greater;
}

/// Exact equality including the coefficient.
template <class R>
bool sig_equal_exact(const ModuleTerm<R>& s, const ModuleTerm<R>& t) {
    return s == t;
}

/// (c, mu) * s, c != 0.
template <class R>
ModuleTerm<R> sig_scale(const typename R::Elem& c, const Monomial& mu,
                        const ModuleTerm<R>& s) {
    if (R::is_zero(c)) throw std::domain_error("sig_scale: zero coefficient");
    return {R::mul(c, s.coeff), mono_mul(mu, s.mono), s.index};
}

/// Compare mu*s against t under POT without materializing the product.
template <class R>
SigCmp sig_compare_scaled(const MonomialOrder& ord, const Monomial& mu,
                          const ModuleTerm<R>& s, const ModuleTerm<R>& t) {
    if (s.index != t.index) return s.index < t.index ? SigCmp::Less : SigCmp::Greater;
    switch (compare_product(ord, mu, s.mono, t.mono)) {
        case Cmp::Less: return SigCmp::Less;
        case Cmp::Greater: return SigCmp::Greater;
        case Cmp::Equal: return SigCmp::Similar;
    }
    throw std::logic_error("unreachable");
}

/// Term divisibility: equal index, monomial divides, coefficient divides.
template <class R>
bool sig_term_divides(const ModuleTerm<R>& s, const ModuleTerm<R>& t) {
    if (s.index != t.index) return false;
    if (!mono_divides(s.mono, t.mono)) return false;
    return R::divexact(s.coeff, t.coeff).has_value();
}

template <class R>
std::string sig_to_string(const ModuleTerm<R>& s, const std::vector<std::string>& vars) {
    return R::to_string(s.coeff) + "*" + mono_to_string(s.mono, vars) + "*e_" +
           std::to_string(s.index);
}

/// Strict total order for use as a set/map key (not the POT order).
template <class R>
struct ModuleTermKeyLess {
    bool operator()(const ModuleTerm<R>& a, const ModuleTerm<R>& b) const {
        if (a.index != b.index) return a.index < b.index;
        if (a.mono.exponents() != b.mono.exponents())
            return a.mono.exponents() < b.mono.exponents();
        return a.coeff < b.coeff;
    }
};

/// An element of the free module, as a coefficient vector over the inputs.
/// Carried only in checked mode; certifies labels by direct evaluation.
template <class R>
class Cofactor {
   public:
    Cofactor() = default;
    Cofactor(std::size_t m, std::size_t nvars) : comps_(m, Polynomial<R>()), nvars_(nvars) {}

    static Cofactor unit(std::size_t m, std::size_t nvars, std::size_t index) {
        Cofactor c(m, nvars);
        c.comps_.at(index - 1) =
            Polynomial<R>::term(R::one(), Monomial::one(nvars));
        return c;
    }

    std::size_t generators() const { return comps_.size(); }
    const Polynomial<R>& component(std::size_t index) const { return comps_.at(index - 1); }

    bool is_zero() const {
        for (const auto& p : comps_)
            if (!p.is_zero()) return false;
        return true;
    }

    /// this <- this - c*mu*other.
    void axpy(const typename R::Elem& c, const Monomial& mu, const Cofactor& other,
              const MonomialOrder& ord) {
        for (std::size_t i = 0; i < comps_.size(); ++i)
            comps_[i] = Polynomial<R>::axpy(comps_[i], c, mu, other.comps_[i], ord);
    }

    Cofactor scaled(const typename R::Elem& c, const Monomial& mu) const {
        Cofactor out(comps_.size(), nvars_);
        for (std::size_t i = 0; i < comps_.size(); ++i)
            if (!comps_[i].is_zero()) out.comps_[i] = comps_[i].scaled(c, mu);
        return out;
    }

    Cofactor negated() const {
        Cofactor out(comps_.size(), nvars_);
        for (std::size_t i = 0; i < comps_.size(); ++i)
            out.comps_[i] = comps_[i].negated();
        return out;
    }

    Polynomial<R> evaluate(const std::vector<Polynomial<R>>& inputs,
                           const MonomialOrder& ord) const {
        if (inputs.size() != comps_.size())
            throw std::domain_error("cofactor: generator count mismatch");
        Polynomial<R> acc;
        for (std::size_t i = 0; i < comps_.size(); ++i)
            acc = Polynomial<R>::add(acc, Polynomial<R>::mul(comps_[i], inputs[i], ord), ord);
        return acc;
    }

    /// Leading module term under POT: highest nonzero component, its LT.
    std::optional<ModuleTerm<R>> leading(const MonomialOrder&) const {
        for (std::size_t i = comps_.size(); i-- > 0;) {
            if (!comps_[i].is_zero()) {
                const auto& t = comps_[i].leading();
                return ModuleTerm<R>{t.coeff, t.mono, i + 1};
            }
        }
        return std::nullopt;
    }

   private:
    std::vector<Polynomial<R>> comps_;
    std::size_t nvars_ = 0;
};

/// Exact labels are true signatures; upper-bound labels dominate the true
/// signature under the coefficient-disregarding order.
enum class LabelKind { Exact, UpperBound };

template <class R>
struct LabelledPoly {
    Polynomial<R> poly;  // nonzero
    ModuleTerm<R> label;
    LabelKind kind = LabelKind::Exact;
    std::optional<Cofactor<R>> cofactor;  // present in checked mode only
};

/// Checked-mode certificate: the cofactor evaluates to the polynomial and its
/// leading module term matches the label per the label kind. Throws on
/// violation; silently passes when no cofactor is carried.
template <class R>
void verify_label(const LabelledPoly<R>& lp, const std::vector<Polynomial<R>>& inputs,
                  const MonomialOrder& ord) {
    if (!lp.cofactor) return;
    Polynomial<R> value = lp.cofactor->evaluate(inputs, ord);
    if (value != lp.poly)
        throw std::logic_error("label certificate: cofactor does not evaluate to the polynomial");
    auto lead = lp.cofactor->leading(ord);
    if (!lead)
        throw std::logic_error("label certificate: zero cofactor on labelled polynomial");
    if (lp.kind == LabelKind::Exact) {
        if (!sig_equal_exact(*lead, lp.label))
            throw std::logic_error("label certificate: exact label differs from cofactor lead");
    } else {
        if (sig_compare<R>(ord, *lead, lp.label) == SigCmp::Greater)
            throw std::logic_error("label certificate: upper-bound label below cofactor lead");
    }
}

}  // namespace sgb

#endif
