#include "sgb/instances.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <stdexcept>

namespace sgb {

std::int64_t SplitMix64::uniform_signed(std::int64_t s) {
    const std::uint64_t range = 2 * static_cast<std::uint64_t>(s) + 1;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % range;
    std::uint64_t v = next();
    while (v >= limit) v = next();
    return static_cast<std::int64_t>(v % range) - s;
}

SystemFile katsura(int n) {
    if (n < 1) throw std::domain_error("katsura: n must be at least 1");
    SystemFile sys;
    const std::size_t nv = static_cast<std::size_t>(n) + 1;
    for (std::size_t i = 0; i < nv; ++i) sys.vars.push_back("u" + std::to_string(i));
    sys.order = OrderKind::DegRevLex;
    sys.ring = "ZZ";
    MonomialOrder ord = sys.monomial_order();

    using P = Polynomial<IntegerRing>;
    auto var_mono = [&](int i) { return Monomial::var(nv, static_cast<std::size_t>(i)); };

    {
        std::vector<Term<IntegerRing>> terms;
        terms.push_back({mpz_class(1), var_mono(0)});
        for (int i = 1; i <= n; ++i) terms.push_back({mpz_class(2), var_mono(i)});
        terms.push_back({mpz_class(-1), Monomial::one(nv)});
        sys.polys.push_back(P::from_terms(std::move(terms), ord));
    }
    for (int k = 0; k < n; ++k) {
        std::vector<Term<IntegerRing>> terms;
        for (int i = -n; i <= n; ++i) {
            int j = k - i;
            if (j < -n || j > n) continue;
            Monomial m = mono_mul(var_mono(std::abs(i)), var_mono(std::abs(j)));
            terms.push_back({mpz_class(1), std::move(m)});
        }
        terms.push_back({mpz_class(-1), var_mono(k)});
        sys.polys.push_back(P::from_terms(std::move(terms), ord));
    }
    return sys;
}

namespace {

/// All exponent vectors of total degree <= d, descending by degree, then by
/// descending lexicographic comparison of the vectors within each degree.
void enumerate_monomials(std::size_t nvars, int d, std::vector<Monomial>& out) {
    for (int deg = d; deg >= 0; --deg) {
        std::vector<std::uint32_t> e(nvars, 0);
        // Generate vectors of exact total degree `deg` in descending lex order.
        std::vector<std::vector<std::uint32_t>> acc;
        std::vector<std::uint32_t> cur(nvars, 0);
        std::function<void(std::size_t, int)> rec = [&](std::size_t pos, int rest) {
            if (pos + 1 == nvars) {
                cur[pos] = static_cast<std::uint32_t>(rest);
                acc.push_back(cur);
                return;
            }
            for (int take = rest; take >= 0; --take) {
                cur[pos] = static_cast<std::uint32_t>(take);
                rec(pos + 1, rest - take);
            }
        };
        rec(0, deg);
        for (auto& v : acc) out.emplace_back(std::move(v));
    }
}

}  // namespace

SystemFile generic(int n, int d, int s, std::uint64_t seed) {
    if (n < 1 || d < 1 || s < 1)
        throw std::domain_error("generic: n, d, s must all be at least 1");
    SystemFile sys;
    const std::size_t nv = static_cast<std::size_t>(n);
    for (std::size_t i = 0; i < nv; ++i) sys.vars.push_back("x" + std::to_string(i + 1));
    sys.order = OrderKind::DegRevLex;
    sys.ring = "ZZ";
    MonomialOrder ord = sys.monomial_order();

    std::vector<Monomial> monos;
    enumerate_monomials(nv, d, monos);

    SplitMix64 rng(seed);
    for (int p = 0; p < n; ++p) {
        std::vector<Term<IntegerRing>> terms;
        for (const auto& m : monos) {
            std::int64_t c = rng.uniform_signed(s);
            if (c != 0) terms.push_back({mpz_class(static_cast<long>(c)), m});
        }
        sys.polys.push_back(Polynomial<IntegerRing>::from_terms(std::move(terms), ord));
    }
    return sys;
}

}  // namespace sgb
