/**
 * @file poly.hpp
 * @brief Sparse multivariate polynomials as strictly descending term lists.
 */
#ifndef SGB_POLY_HPP
#define SGB_POLY_HPP

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sgb/monomial.hpp"
#include "sgb/ring.hpp"

namespace sgb {

template <class R>
struct Term {
    typename R::Elem coeff;  // nonzero
    Monomial mono;

    friend bool operator==(const Term& a, const Term& b) {
        return a.coeff == b.coeff && a.mono == b.mono;
    }
};

/// Invariant: terms are sorted strictly descending under the active order,
/// with no zero coefficients. The zero polynomial is the empty list.
template <class R>
class Polynomial {
   public:
    using Elem = typename R::Elem;

    Polynomial() = default;

    /// Build from arbitrary terms: sorts, merges duplicates, drops zeros.
    static Polynomial from_terms(std::vector<Term<R>> ts, const MonomialOrder& ord) {
        std::sort(ts.begin(), ts.end(), [&](const Term<R>& a, const Term<R>& b) {
            return ord.compare(a.mono, b.mono) == Cmp::Greater;
        });
        Polynomial p;
        for (auto& t : ts) {
            if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
                p.terms_.back().coeff = R::add(p.terms_.back().coeff, t.coeff);
                if (R::is_zero(p.terms_.back().coeff)) p.terms_.pop_back();
            } else if (!R::is_zero(t.coeff)) {
                p.terms_.push_back(std::move(t));
            }
        }
        return p;
    }

    static Polynomial term(Elem c, Monomial m) {
        Polynomial p;
        if (!R::is_zero(c)) p.terms_.push_back({std::move(c), std::move(m)});
        return p;
    }

    static Polynomial constant(Elem c, std::size_t nvars) {
        return term(std::move(c), Monomial::one(nvars));
    }

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const std::vector<Term<R>>& terms() const { return terms_; }

    const Term<R>& leading() const {
        if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
        return terms_.front();
    }
    const Monomial& lm() const { return leading().mono; }
    const Elem& lc() const { return leading().coeff; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) {
        return !(a == b);
    }

    /// f - c*mu*g in a single merge pass. Requires c != 0; both inputs share
    /// the order that keeps their term lists sorted.
    static Polynomial axpy(const Polynomial& f, const Elem& c, const Monomial& mu,
                           const Polynomial& g, const MonomialOrder& ord) {
        if (R::is_zero(c)) throw std::domain_error("axpy: zero multiplier");
        Polynomial out;
        out.terms_.reserve(f.terms_.size() + g.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < f.terms_.size() && j < g.terms_.size()) {
            Monomial gm = mono_mul(mu, g.terms_[j].mono);
            Cmp c3 = ord.compare(f.terms_[i].mono, gm);
            if (c3 == Cmp::Greater) {
                out.terms_.push_back(f.terms_[i++]);
            } else if (c3 == Cmp::Less) {
                out.terms_.push_back({R::neg(R::mul(c, g.terms_[j].coeff)), std::move(gm)});
                ++j;
            } else {
                Elem nc = R::sub(f.terms_[i].coeff, R::mul(c, g.terms_[j].coeff));
                if (!R::is_zero(nc)) out.terms_.push_back({std::move(nc), std::move(gm)});
                ++i;
                ++j;
            }
        }
        for (; i < f.terms_.size(); ++i) out.terms_.push_back(f.terms_[i]);
        for (; j < g.terms_.size(); ++j)
            out.terms_.push_back({R::neg(R::mul(c, g.terms_[j].coeff)),
                                  mono_mul(mu, g.terms_[j].mono)});
        return out;
    }

    /// c*mu*f, c != 0. Order is preserved by multiplication compatibility.
    Polynomial scaled(const Elem& c, const Monomial& mu) const {
        if (R::is_zero(c)) throw std::domain_error("scaled: zero multiplier");
        Polynomial out;
        out.terms_.reserve(terms_.size());
        for (const auto& t : terms_)
            out.terms_.push_back({R::mul(c, t.coeff), mono_mul(mu, t.mono)});
        return out;
    }

    Polynomial negated() const {
        Polynomial out;
        out.terms_.reserve(terms_.size());
        for (const auto& t : terms_) out.terms_.push_back({R::neg(t.coeff), t.mono});
        return out;
    }

    static Polynomial add(const Polynomial& f, const Polynomial& g,
                          const MonomialOrder& ord) {
        if (g.is_zero()) return f;
        std::size_t n = g.terms_.front().mono.nvars();
        return axpy(f, R::neg(R::one()), Monomial::one(n), g, ord);
    }

    static Polynomial sub(const Polynomial& f, const Polynomial& g,
                          const MonomialOrder& ord) {
        if (g.is_zero()) return f;
        std::size_t n = g.terms_.front().mono.nvars();
        return axpy(f, R::one(), Monomial::one(n), g, ord);
    }

    static Polynomial mul(const Polynomial& f, const Polynomial& g,
                          const MonomialOrder& ord) {
        Polynomial acc;
        for (const auto& t : f.terms_)
            acc = axpy(acc, R::neg(t.coeff), t.mono, g, ord);
        return acc;
    }

   private:
    std::vector<Term<R>> terms_;
};

template <class R>
std::string poly_to_string(const Polynomial<R>& p, const std::vector<std::string>& vars) {
    if (p.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& t : p.terms()) {
        std::string cs = R::to_string(t.coeff);
        bool negative = !cs.empty() && cs[0] == '-';
        std::string mag = negative ? cs.substr(1) : cs;
        if (first) {
            if (negative) s += "-";
            first = false;
        } else {
            s += negative ? " - " : " + ";
        }
        if (t.mono.is_one()) {
            s += mag;
        } else if (mag == "1") {
            s += mono_to_string(t.mono, vars);
        } else {
            s += mag + "*" + mono_to_string(t.mono, vars);
        }
    }
    return s;
}

}  // namespace sgb

#endif
