// Shared helpers for the test suites: seeded random polynomials and the
// criteria-toggle configurations exercised across systems.
#ifndef SGB_TEST_SUPPORT_HPP
#define SGB_TEST_SUPPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "sgb/engine.hpp"
#include "sgb/instances.hpp"

namespace sgb_test {

using sgb::Monomial;
using sgb::MonomialOrder;
using sgb::OrderKind;

inline Monomial random_monomial(sgb::SplitMix64& rng, std::size_t nvars,
                                std::uint32_t max_deg) {
    std::vector<std::uint32_t> e(nvars, 0);
    for (std::size_t i = 0; i < nvars; ++i)
        e[i] = static_cast<std::uint32_t>(rng.next() % (max_deg + 1));
    return Monomial(std::move(e));
}

template <class R>
sgb::Polynomial<R> random_poly(sgb::SplitMix64& rng, const MonomialOrder& ord,
                               std::size_t max_terms, std::uint32_t max_deg,
                               std::int64_t max_abs_coeff) {
    std::vector<sgb::Term<R>> terms;
    std::size_t n = rng.next() % (max_terms + 1);
    for (std::size_t t = 0; t < n; ++t) {
        std::int64_t c = rng.uniform_signed(max_abs_coeff);
        if (c == 0) continue;
        terms.push_back({typename R::Elem(static_cast<long>(c)),
                         random_monomial(rng, ord.nvars, max_deg)});
    }
    return sgb::Polynomial<R>::from_terms(std::move(terms), ord);
}

/// The eight criteria configurations sampled by the acceptance suite:
/// everything on, everything off, and each criterion disabled on its own.
inline std::vector<sgb::RunOptions> criteria_configurations(const MonomialOrder& ord) {
    std::vector<sgb::RunOptions> configs;
    sgb::RunOptions base;
    base.order = ord;
    configs.push_back(base);  // all on
    {
        sgb::RunOptions off = base;
        off.coprime = off.chain = off.f5 = off.singular = off.syzygy =
            off.one_singular = false;
        configs.push_back(off);
    }
    for (int k = 0; k < 6; ++k) {
        sgb::RunOptions c = base;
        if (k == 0) c.coprime = false;
        if (k == 1) c.chain = false;
        if (k == 2) c.f5 = false;
        if (k == 3) c.singular = false;
        if (k == 4) c.syzygy = false;
        if (k == 5) c.one_singular = false;
        configs.push_back(c);
    }
    return configs;
}

}  // namespace sgb_test

#endif
