/**
 * @file ring.hpp
 * @brief Coefficient domains: exact arithmetic, gcd/Bezout and exact division.
 *
 * The basis engine is generic over an effective coefficient ring. A domain
 * type provides exact arithmetic, an extended gcd with Bezout cofactors, a
 * divisibility test with exact quotient, and lcm in canonical-associate form.
 * IntegerRing (arbitrary-precision integers) is the reference instance;
 * RationalField is the degenerate instance where gcds are trivial and every
 * nonzero element divides every other.
 */
#ifndef SGB_RING_HPP
#define SGB_RING_HPP

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace sgb {

template <class E>
struct XGcd {
    E d;  // gcd, canonical associate (positive over the integers)
    E u;  // Bezout cofactors: a*u + b*v = d
    E v;
};

/// Arbitrary-precision integers. Canonical form is sign-magnitude; gcd and
/// lcm outputs are positive, fixing the unit ambiguity of associate classes.
struct IntegerRing {
    using Elem = mpz_class;
    static constexpr bool is_field = false;
    static const char* name() { return "ZZ"; }

    static Elem zero() { return Elem(0); }
    static Elem one() { return Elem(1); }
    static bool is_zero(const Elem& a) { return sgn(a) == 0; }
    static bool is_one(const Elem& a) { return a == 1; }

    static Elem add(const Elem& a, const Elem& b) { return a + b; }
    static Elem sub(const Elem& a, const Elem& b) { return a - b; }
    static Elem mul(const Elem& a, const Elem& b) { return a * b; }
    static Elem neg(const Elem& a) { return -a; }

    /// Extended Euclid. d = gcd(a,b) > 0 and a*u + b*v = d. The (u,v) pair is
    /// the deterministic output of mpz_gcdext; only the Bezout identity is
    /// part of the contract, not the specific cofactor values.
    static XGcd<Elem> xgcd(const Elem& a, const Elem& b) {
        if (is_zero(a) && is_zero(b))
            throw std::domain_error("xgcd(0, 0) is undefined");
        XGcd<Elem> r;
        mpz_gcdext(r.d.get_mpz_t(), r.u.get_mpz_t(), r.v.get_mpz_t(),
                   a.get_mpz_t(), b.get_mpz_t());
        return r;
    }

    static Elem gcd(const Elem& a, const Elem& b) {
        if (is_zero(a) && is_zero(b))
            throw std::domain_error("gcd(0, 0) is undefined");
        Elem g;
        mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return g;
    }

    /// Quotient q with q*divisor = dividend, or nullopt when the division is
    /// not exact. The divisor must be nonzero.
    static std::optional<Elem> divexact(const Elem& divisor, const Elem& dividend) {
        if (is_zero(divisor))
            throw std::domain_error("divexact: divisor is zero");
        if (!mpz_divisible_p(dividend.get_mpz_t(), divisor.get_mpz_t()))
            return std::nullopt;
        Elem q;
        mpz_divexact(q.get_mpz_t(), dividend.get_mpz_t(), divisor.get_mpz_t());
        return q;
    }

    /// lcm in canonical-associate form: |a*b| / gcd(a,b), positive.
    static Elem lcm(const Elem& a, const Elem& b) {
        if (is_zero(a) || is_zero(b))
            throw std::domain_error("lcm: zero argument");
        Elem l;
        mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return l;
    }

    /// Three-way comparison of absolute values; used by selection tie-breaks.
    static int abs_cmp(const Elem& a, const Elem& b) {
        return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t());
    }

    static std::string to_string(const Elem& a) { return a.get_str(); }
};

/// Rationals in lowest terms with positive denominator. Every nonzero element
/// is a unit, so gcds are identically 1 and exact division always succeeds.
struct RationalField {
    using Elem = mpq_class;
    static constexpr bool is_field = true;
    static const char* name() { return "QQ"; }

    static Elem zero() { return Elem(0); }
    static Elem one() { return Elem(1); }
    static bool is_zero(const Elem& a) { return sgn(a) == 0; }
    static bool is_one(const Elem& a) { return a == 1; }

    static Elem add(const Elem& a, const Elem& b) { return a + b; }
    static Elem sub(const Elem& a, const Elem& b) { return a - b; }
    static Elem mul(const Elem& a, const Elem& b) { return a * b; }
    static Elem neg(const Elem& a) { return -a; }

    static XGcd<Elem> xgcd(const Elem& a, const Elem& b) {
        if (is_zero(a) && is_zero(b))
            throw std::domain_error("xgcd(0, 0) is undefined");
        if (!is_zero(a)) return {one(), 1 / a, zero()};
        return {one(), zero(), 1 / b};
    }

    static Elem gcd(const Elem& a, const Elem& b) {
        if (is_zero(a) && is_zero(b))
            throw std::domain_error("gcd(0, 0) is undefined");
        return one();
    }

    static std::optional<Elem> divexact(const Elem& divisor, const Elem& dividend) {
        if (is_zero(divisor))
            throw std::domain_error("divexact: divisor is zero");
        return Elem(dividend / divisor);
    }

    static Elem lcm(const Elem& a, const Elem& b) {
        if (is_zero(a) || is_zero(b))
            throw std::domain_error("lcm: zero argument");
        return one();
    }

    static int abs_cmp(const Elem& a, const Elem& b) {
        Elem x = abs(a), y = abs(b);
        return cmp(x, y);
    }

    static std::string to_string(const Elem& a) { return a.get_str(); }
};

}  // namespace sgb

#endif
