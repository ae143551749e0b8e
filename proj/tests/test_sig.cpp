#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sgb/sig.hpp"
#include "test_support.hpp"

using namespace sgb;
using Z = IntegerRing;
using MT = ModuleTerm<Z>;

namespace {

const MonomialOrder drl2{OrderKind::DegRevLex, 2};

Monomial mono2(std::uint32_t a, std::uint32_t b) {
    return Monomial(std::vector<std::uint32_t>{a, b});
}

}  // namespace

TEST_CASE("POT order: index first, monomial second, coefficients ignored") {
    MT a{1, mono2(5, 0), 1};  // x^5 e_1
    MT b{1, mono2(0, 0), 2};  // e_2
    CHECK(sig_compare<Z>(drl2, a, b) == SigCmp::Less);

    MT c{3, mono2(1, 0), 2};
    MT d{5, mono2(1, 0), 2};
    CHECK(sig_compare<Z>(drl2, c, d) == SigCmp::Similar);

    MT e{2, mono2(2, 0), 1};
    MT f{7, mono2(1, 0), 1};
    CHECK(sig_compare<Z>(drl2, e, f) == SigCmp::Greater);
}

TEST_CASE("exact equality includes the coefficient") {
    MT a{3, mono2(1, 0), 2};
    CHECK(sig_equal_exact(a, MT{3, mono2(1, 0), 2}));
    CHECK(!sig_equal_exact(a, MT{5, mono2(1, 0), 2}));
    CHECK(!sig_equal_exact(a, MT{3, mono2(1, 0), 1}));
}

TEST_CASE("scaling multiplies coefficient and monomial") {
    MT s{1, mono2(1, 0), 1};
    MT r = sig_scale<Z>(3, mono2(0, 1), s);
    CHECK(r == MT{3, mono2(1, 1), 1});
    CHECK(sig_scale<Z>(1, mono2(0, 0), s) == s);
    MT t{5, mono2(0, 1), 3};
    CHECK(sig_scale<Z>(-2, mono2(2, 0), t) == MT{-10, mono2(2, 1), 3});
    CHECK_THROWS_AS(sig_scale<Z>(0, mono2(0, 0), s), std::domain_error);
}

TEST_CASE("term divisibility needs index, monomial and coefficient") {
    CHECK(sig_term_divides<Z>(MT{2, mono2(1, 0), 1}, MT{6, mono2(2, 1), 1}));
    CHECK(!sig_term_divides<Z>(MT{4, mono2(1, 0), 1}, MT{6, mono2(2, 0), 1}));
    CHECK(!sig_term_divides<Z>(MT{2, mono2(1, 0), 1}, MT{6, mono2(2, 0), 2}));
}

TEST_CASE("sig_compare is a strict weak order compatible with scaling") {
    sgb::SplitMix64 rng(99);
    const MonomialOrder ord{OrderKind::DegRevLex, 3};
    auto random_sig = [&]() {
        std::int64_t c = 0;
        while (c == 0) c = rng.uniform_signed(9);
        return ModuleTerm<Z>{mpz_class(static_cast<long>(c)),
                             sgb_test::random_monomial(rng, 3, 3),
                             1 + static_cast<std::size_t>(rng.next() % 3)};
    };
    for (int it = 0; it < 500; ++it) {
        MT a = random_sig(), b = random_sig(), c = random_sig();
        SigCmp ab = sig_compare<Z>(ord, a, b);
        SigCmp ba = sig_compare<Z>(ord, b, a);
        // Antisymmetry between Less and Greater, Similar is symmetric.
        if (ab == SigCmp::Less) CHECK(ba == SigCmp::Greater);
        if (ab == SigCmp::Similar) CHECK(ba == SigCmp::Similar);
        // Transitivity of Less.
        if (ab == SigCmp::Less && sig_compare<Z>(ord, b, c) == SigCmp::Less)
            CHECK(sig_compare<Z>(ord, a, c) == SigCmp::Less);
        // Similarity classes = equal (index, monomial).
        if (ab == SigCmp::Similar) {
            CHECK(a.index == b.index);
            CHECK(a.mono == b.mono);
        }
        // Multiplication compatibility.
        std::int64_t k = 0;
        while (k == 0) k = rng.uniform_signed(5);
        Monomial mu = sgb_test::random_monomial(rng, 3, 2);
        CHECK(sig_compare<Z>(ord, sig_scale<Z>(mpz_class(static_cast<long>(k)), mu, a),
                             sig_scale<Z>(mpz_class(static_cast<long>(k)), mu, b)) == ab);
        // Exact equality implies similar, never the converse as a rule.
        if (sig_equal_exact(a, b)) CHECK(ab == SigCmp::Similar);
    }
}

TEST_CASE("cofactor evaluation and leading module term") {
    const MonomialOrder ord{OrderKind::DegRevLex, 2};
    using P = Polynomial<Z>;
    std::vector<P> inputs{P::term(2, mono2(1, 0)), P::term(3, mono2(0, 1))};

    auto c = Cofactor<Z>::unit(2, 2, 1);
    CHECK(c.evaluate(inputs, ord) == inputs[0]);
    auto lead = c.leading(ord);
    REQUIRE(lead.has_value());
    CHECK(*lead == MT{1, mono2(0, 0), 1});

    // c - (-1)*y*e_2 adds y*e_2: evaluates to 2x + 3y^2... on index 2.
    auto e2 = Cofactor<Z>::unit(2, 2, 2);
    c.axpy(-1, mono2(0, 1), e2, ord);
    CHECK(*c.leading(ord) == MT{1, mono2(0, 1), 2});
    P expect = P::from_terms({{2, mono2(1, 0)}, {3, mono2(0, 2)}}, ord);
    CHECK(c.evaluate(inputs, ord) == expect);
}

TEST_CASE("verify_label certifies exact and upper-bound labels") {
    const MonomialOrder ord{OrderKind::DegRevLex, 2};
    using P = Polynomial<Z>;
    std::vector<P> inputs{P::term(2, mono2(1, 0)), P::term(3, mono2(0, 1))};

    LabelledPoly<Z> lp;
    lp.poly = inputs[0];
    lp.label = MT{1, mono2(0, 0), 1};
    lp.kind = LabelKind::Exact;
    lp.cofactor = Cofactor<Z>::unit(2, 2, 1);
    CHECK_NOTHROW(verify_label(lp, inputs, ord));

    lp.label = MT{2, mono2(0, 0), 1};
    CHECK_THROWS_AS(verify_label(lp, inputs, ord), std::logic_error);

    lp.kind = LabelKind::UpperBound;
    lp.label = MT{5, mono2(3, 3), 2};  // dominates e_1
    CHECK_NOTHROW(verify_label(lp, inputs, ord));
    lp.label = MT{1, mono2(0, 0), 1};  // similar to the true lead: still a bound
    CHECK_NOTHROW(verify_label(lp, inputs, ord));
    lp.poly = inputs[1];  // evaluation mismatch
    CHECK_THROWS_AS(verify_label(lp, inputs, ord), std::logic_error);
}
