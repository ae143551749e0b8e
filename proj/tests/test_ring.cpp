#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sgb/ring.hpp"

using sgb::IntegerRing;
using sgb::RationalField;
using Z = IntegerRing::Elem;
using Q = RationalField::Elem;

TEST_CASE("integer arithmetic is exact") {
    CHECK(IntegerRing::add(Z(2), Z(3)) == Z(5));
    CHECK(IntegerRing::mul(Z(-4), Z(6)) == Z(-24));
    CHECK(IntegerRing::is_zero(IntegerRing::sub(Z(7), Z(7))));
    CHECK(IntegerRing::is_one(Z(1)));
    CHECK(!IntegerRing::is_one(Z(-1)));
    // No overflow: values well beyond 64 bits.
    Z big("123456789012345678901234567890");
    CHECK(IntegerRing::mul(big, big) == Z("15241578753238836750495351562536198787501905199875019052100"));
}

TEST_CASE("xgcd satisfies the Bezout identity with canonical gcd") {
    auto r = IntegerRing::xgcd(Z(4), Z(6));
    CHECK(r.d == Z(2));
    CHECK(Z(4) * r.u + Z(6) * r.v == r.d);

    auto r2 = IntegerRing::xgcd(Z(0), Z(5));
    CHECK(r2.d == Z(5));
    CHECK(r2.u == Z(0));
    CHECK(r2.v == Z(1));

    auto r3 = IntegerRing::xgcd(Z(2), Z(3));
    CHECK(r3.d == Z(1));
    CHECK(Z(2) * r3.u + Z(3) * r3.v == Z(1));

    CHECK_THROWS_AS(IntegerRing::xgcd(Z(0), Z(0)), std::domain_error);
}

TEST_CASE("xgcd gcd divides both and is divided by every common divisor") {
    for (long a = -20; a <= 20; ++a) {
        for (long b = -20; b <= 20; ++b) {
            if (a == 0 && b == 0) continue;
            auto r = IntegerRing::xgcd(Z(a), Z(b));
            CHECK(Z(a) * r.u + Z(b) * r.v == r.d);
            CHECK(r.d > 0);
            if (a != 0) CHECK(IntegerRing::divexact(r.d, Z(a)).has_value());
            if (b != 0) CHECK(IntegerRing::divexact(r.d, Z(b)).has_value());
            for (long c = 1; c <= std::max(std::abs(a), std::abs(b)); ++c) {
                bool divides_both = (a % c == 0) && (b % c == 0);
                if (divides_both) CHECK(r.d % c == 0);
            }
        }
    }
}

TEST_CASE("divexact returns the exact quotient or nothing") {
    CHECK(*IntegerRing::divexact(Z(3), Z(12)) == Z(4));
    CHECK(!IntegerRing::divexact(Z(4), Z(6)).has_value());
    CHECK(*IntegerRing::divexact(Z(-2), Z(6)) == Z(-3));
    CHECK_THROWS_AS(IntegerRing::divexact(Z(0), Z(5)), std::domain_error);

    // Round trip: divexact(a, a*q) = q.
    for (long a = -15; a <= 15; ++a) {
        if (a == 0) continue;
        for (long q = -15; q <= 15; ++q) {
            auto got = IntegerRing::divexact(Z(a), Z(a) * Z(q));
            REQUIRE(got.has_value());
            CHECK(*got == Z(q));
        }
    }
}

TEST_CASE("lcm is canonical and consistent with the gcd") {
    CHECK(IntegerRing::lcm(Z(2), Z(3)) == Z(6));
    CHECK(IntegerRing::lcm(Z(4), Z(6)) == Z(12));
    CHECK(IntegerRing::lcm(Z(5), Z(5)) == Z(5));
    CHECK_THROWS_AS(IntegerRing::lcm(Z(0), Z(3)), std::domain_error);

    for (long a = -12; a <= 12; ++a) {
        for (long b = -12; b <= 12; ++b) {
            if (a == 0 || b == 0) continue;
            Z l = IntegerRing::lcm(Z(a), Z(b));
            Z d = IntegerRing::xgcd(Z(a), Z(b)).d;
            CHECK(l * d == abs(Z(a) * Z(b)));
            CHECK(l > 0);
        }
    }
}

TEST_CASE("rational field degenerates the PID operations") {
    Q a(3, 4), b(-5, 7);
    CHECK(RationalField::gcd(a, b) == Q(1));
    auto r = RationalField::xgcd(a, b);
    CHECK(r.d == Q(1));
    CHECK(a * r.u + b * r.v == Q(1));
    auto q = RationalField::divexact(a, b);
    REQUIRE(q.has_value());
    CHECK(*q * a == b);
    CHECK(RationalField::lcm(a, b) == Q(1));
    CHECK_THROWS_AS(RationalField::divexact(Q(0), b), std::domain_error);
    CHECK_THROWS_AS(RationalField::xgcd(Q(0), Q(0)), std::domain_error);

    // Canonical representation: reduced with positive denominator.
    Q c(2, -4);
    c.canonicalize();
    CHECK(c == Q(-1, 2));
    CHECK(c.get_den() == 2);
}

TEST_CASE("absolute-value comparison") {
    CHECK(IntegerRing::abs_cmp(Z(-5), Z(3)) > 0);
    CHECK(IntegerRing::abs_cmp(Z(2), Z(-2)) == 0);
    CHECK(IntegerRing::abs_cmp(Z(1), Z(-4)) < 0);
    CHECK(RationalField::abs_cmp(Q(-1, 2), Q(1, 3)) > 0);
}
