#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sgb/reduce.hpp"
#include "test_support.hpp"

using namespace sgb;
using Z = IntegerRing;
using P = Polynomial<Z>;
using MT = ModuleTerm<Z>;

namespace {

const MonomialOrder drl2{OrderKind::DegRevLex, 2};

Monomial mono2(std::uint32_t a, std::uint32_t b) {
    return Monomial(std::vector<std::uint32_t>{a, b});
}

LabelledPoly<Z> labelled(P p, MT sig) {
    return LabelledPoly<Z>{std::move(p), std::move(sig), LabelKind::Exact, std::nullopt};
}

}  // namespace

TEST_CASE("find_reducer honors divisibility and the signature strictness") {
    std::vector<LabelledPoly<Z>> basis;
    basis.push_back(labelled(P::term(2, mono2(1, 0)), MT{1, mono2(0, 0), 1}));

    Term<Z> t{6, mono2(1, 1)};
    MT sig{1, mono2(2, 1), 2};
    auto step = find_reducer<Z>(drl2, t, sig, basis, ReduceMode::Regular);
    REQUIRE(step.has_value());
    CHECK(step->reducer == 0);
    CHECK(step->coeff == mpz_class(3));
    CHECK(step->mono == mono2(0, 1));

    // Boundary: scaled label similar to the signature is eligible only in
    // general mode.
    MT tight{1, mono2(0, 1), 1};
    CHECK(!find_reducer<Z>(drl2, t, tight, basis, ReduceMode::Regular).has_value());
    CHECK(find_reducer<Z>(drl2, t, tight, basis, ReduceMode::General).has_value());

    // Coefficient divisibility is required.
    Term<Z> t3{3, mono2(1, 0)};
    CHECK(!find_reducer<Z>(drl2, t3, sig, basis, ReduceMode::Regular).has_value());
    CHECK(!find_reducer<Z>(drl2, t3, sig, basis, ReduceMode::General).has_value());
}

TEST_CASE("find_reducer selection: lowest scaled label, then |c|, then index") {
    std::vector<LabelledPoly<Z>> basis;
    basis.push_back(labelled(P::term(3, mono2(1, 0)), MT{1, mono2(0, 0), 2}));
    basis.push_back(labelled(P::term(2, mono2(1, 0)), MT{1, mono2(0, 0), 1}));
    Term<Z> t{6, mono2(1, 1)};
    MT sig{1, mono2(2, 2), 3};
    // Both divide; index-1 entry has the lower label e_1.
    auto step = find_reducer<Z>(drl2, t, sig, basis, ReduceMode::Regular);
    REQUIRE(step.has_value());
    CHECK(step->reducer == 1);

    // Equal labels: smaller |c| wins. 6/3 = 2 beats 6/2 = 3.
    basis[1].label = MT{1, mono2(0, 0), 2};
    step = find_reducer<Z>(drl2, t, sig, basis, ReduceMode::Regular);
    REQUIRE(step.has_value());
    CHECK(step->reducer == 0);
}

TEST_CASE("regular_reduce examples") {
    std::vector<LabelledPoly<Z>> basis;
    basis.push_back(labelled(P::term(2, mono2(1, 0)), MT{1, mono2(0, 0), 1}));

    MT sig{1, mono2(2, 1), 2};
    CHECK(regular_reduce<Z>(drl2, P::term(6, mono2(1, 1)), sig, basis).is_zero());

    P f = P::from_terms({{6, mono2(1, 1)}, {1, mono2(0, 2)}}, drl2);
    CHECK(regular_reduce<Z>(drl2, f, sig, basis) == P::term(1, mono2(0, 2)));

    CHECK(regular_reduce<Z>(drl2, P(), sig, basis).is_zero());
}

TEST_CASE("regular_reduce keeps the certificate exact") {
    const MonomialOrder ord = drl2;
    std::vector<P> inputs{P::term(2, mono2(1, 0)), P::term(6, mono2(1, 1))};
    std::vector<LabelledPoly<Z>> basis;
    basis.push_back(LabelledPoly<Z>{inputs[0], MT{1, mono2(0, 0), 1}, LabelKind::Exact,
                                    Cofactor<Z>::unit(2, 2, 1)});
    Cofactor<Z> cof = Cofactor<Z>::unit(2, 2, 2);
    MT sig{1, mono2(0, 0), 2};
    P out = regular_reduce<Z>(ord, inputs[1], sig, basis, &cof);
    CHECK(out.is_zero());
    CHECK(cof.evaluate(inputs, ord).is_zero());
    auto lead = cof.leading(ord);
    REQUIRE(lead.has_value());
    CHECK(sig_equal_exact(*lead, sig));
}

TEST_CASE("strong_reduce requires exact coefficient divisibility") {
    std::vector<P> basis{P::term(2, mono2(1, 0))};
    CHECK(strong_reduce<Z>(drl2, P::term(6, mono2(1, 1)), basis).is_zero());

    // 2 does not divide the trailing 1: only the lead goes.
    P f = P::from_terms({{2, mono2(1, 0)}, {1, mono2(0, 0)}}, drl2);
    CHECK(strong_reduce<Z>(drl2, f, basis) == P::constant(1, 2));

    // Neither 2 nor 3 divides 7, and no smaller combination is attempted:
    // single-reducer strong reduction leaves 7x untouched.
    std::vector<P> basis2{P::term(2, mono2(1, 0)), P::term(3, mono2(1, 0))};
    CHECK(strong_reduce<Z>(drl2, P::term(7, mono2(1, 0)), basis2) ==
          P::term(7, mono2(1, 0)));

    // With the gcd element present the same term vanishes.
    std::vector<P> basis3{P::term(2, mono2(1, 0)), P::term(3, mono2(1, 0)),
                          P::term(1, mono2(1, 0))};
    CHECK(strong_reduce<Z>(drl2, P::term(7, mono2(1, 0)), basis3).is_zero());
}

TEST_CASE("reduction strictly decreases the leading monomial") {
    sgb::SplitMix64 rng(4242);
    const MonomialOrder ord{OrderKind::DegRevLex, 3};
    for (int it = 0; it < 200; ++it) {
        std::vector<P> basis;
        for (int k = 0; k < 3; ++k) {
            P p = sgb_test::random_poly<Z>(rng, ord, 4, 3, 8);
            if (!p.is_zero()) basis.push_back(p);
        }
        if (basis.empty()) continue;
        P f = sgb_test::random_poly<Z>(rng, ord, 6, 4, 20);
        std::optional<Monomial> prev;
        // Replay the strong reduction step by step and watch the lead drop.
        std::uint64_t guard = 0;
        while (!f.is_zero()) {
            if (prev) CHECK(ord.compare(f.lm(), *prev) == Cmp::Less);
            prev = f.lm();
            P next = f;
            bool stepped = false;
            for (std::size_t k = 0; k < basis.size() && !stepped; ++k) {
                auto c = Z::divexact(basis[k].lc(), f.lc());
                if (!c) continue;
                auto mu = mono_divides(basis[k].lm(), f.lm());
                if (!mu) continue;
                next = P::axpy(f, *c, *mu, basis[k], ord);
                stepped = true;
            }
            if (!stepped) break;
            f = next;
            REQUIRE(++guard < 10000);
        }
    }
}

TEST_CASE("step ceiling trips as a hard error") {
    std::vector<LabelledPoly<Z>> basis;
    basis.push_back(labelled(P::from_terms({{1, mono2(1, 0)}, {-1, mono2(0, 0)}}, drl2),
                             MT{1, mono2(0, 0), 1}));
    P f = P::term(1, mono2(5, 0));  // x^5 against x - 1 needs five steps
    MT sig{1, mono2(0, 0), 2};
    CHECK_THROWS_AS(
        regular_reduce<Z>(drl2, f, sig, basis, nullptr, nullptr, 1),
        ReductionLimitError);
}
