/**
 * @file instances.hpp
 * @brief Benchmark instance families.
 */
#ifndef SGB_INSTANCES_HPP
#define SGB_INSTANCES_HPP

#include <cstdint>

#include "sgb/io.hpp"

namespace sgb {

/// Deterministic 64-bit generator (splitmix64). The sequence is part of the
/// external contract of `generic`: identical seeds must produce identical
/// systems on every platform.
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
    /// Uniform draw from [-s, s] by rejection sampling, bias-free.
    std::int64_t uniform_signed(std::int64_t s);
};

/// Katsura system with n+1 variables u0..un over the integers:
/// u0 + 2*sum(u1..un) - 1, and for k = 0..n-1 the convolution equation
/// sum over i of u|i| * u|k-i| - uk with indices clipped to [-n, n].
SystemFile katsura(int n);

/// n dense polynomials of degree d in n variables; every monomial of degree
/// at most d receives a coefficient drawn uniformly from [-s, s] (zero draws
/// drop the monomial). Monomials are enumerated by descending total degree
/// and descending lexicographic exponent vector within a degree; coefficient
/// draws follow that order, polynomial by polynomial.
SystemFile generic(int n, int d, int s, std::uint64_t seed);

}  // namespace sgb

#endif
