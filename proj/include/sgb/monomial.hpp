/**
 * @file monomial.hpp
 * @brief Exponent vectors and global monomial orders (lex, degrevlex).
 */
#ifndef SGB_MONOMIAL_HPP
#define SGB_MONOMIAL_HPP

#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sgb {

enum class Cmp { Less = -1, Equal = 0, Greater = 1 };

/// A monomial is a fixed-length vector of non-negative exponents. The length
/// equals the ambient variable count and is uniform across a computation.
class Monomial {
   public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
    explicit Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {}

    static Monomial one(std::size_t nvars) { return Monomial(nvars); }
    static Monomial var(std::size_t nvars, std::size_t i, std::uint32_t e = 1) {
        Monomial m(nvars);
        m.exps_.at(i) = e;
        return m;
    }

    std::size_t nvars() const { return exps_.size(); }
    std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
    const std::vector<std::uint32_t>& exponents() const { return exps_; }

    std::uint64_t degree() const {
        return std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
    }

    bool is_one() const {
        for (auto e : exps_)
            if (e != 0) return false;
        return true;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.exps_ == b.exps_;
    }
    friend bool operator!=(const Monomial& a, const Monomial& b) {
        return !(a == b);
    }

   private:
    std::vector<std::uint32_t> exps_;
};

enum class OrderKind { Lex, DegRevLex };

/// A global monomial order on a fixed variable count: total, compatible with
/// multiplication, and with 1 as the minimum element.
struct MonomialOrder {
    OrderKind kind = OrderKind::DegRevLex;
    std::size_t nvars = 0;

    Cmp compare(const Monomial& a, const Monomial& b) const {
        if (a.nvars() != nvars || b.nvars() != nvars)
            throw std::domain_error("mono_compare: variable count mismatch");
        switch (kind) {
            case OrderKind::Lex: {
                for (std::size_t i = 0; i < nvars; ++i) {
                    if (a[i] != b[i]) return a[i] > b[i] ? Cmp::Greater : Cmp::Less;
                }
                return Cmp::Equal;
            }
            case OrderKind::DegRevLex: {
                std::uint64_t da = a.degree(), db = b.degree();
                if (da != db) return da > db ? Cmp::Greater : Cmp::Less;
                // Same degree: the last variable where they differ decides,
                // the smaller exponent there being the larger monomial.
                for (std::size_t i = nvars; i-- > 0;) {
                    if (a[i] != b[i]) return a[i] < b[i] ? Cmp::Greater : Cmp::Less;
                }
                return Cmp::Equal;
            }
        }
        throw std::logic_error("unreachable order kind");
    }

    bool less(const Monomial& a, const Monomial& b) const {
        return compare(a, b) == Cmp::Less;
    }
};

inline void check_lengths(const Monomial& a, const Monomial& b) {
    if (a.nvars() != b.nvars())
        throw std::domain_error("monomial: variable count mismatch");
}

/// Componentwise max.
inline Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    check_lengths(a, b);
    std::vector<std::uint32_t> e(a.nvars());
    for (std::size_t i = 0; i < a.nvars(); ++i) e[i] = std::max(a[i], b[i]);
    return Monomial(std::move(e));
}

/// Componentwise min.
inline Monomial mono_gcd(const Monomial& a, const Monomial& b) {
    check_lengths(a, b);
    std::vector<std::uint32_t> e(a.nvars());
    for (std::size_t i = 0; i < a.nvars(); ++i) e[i] = std::min(a[i], b[i]);
    return Monomial(std::move(e));
}

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
    check_lengths(a, b);
    std::vector<std::uint32_t> e(a.nvars());
    for (std::size_t i = 0; i < a.nvars(); ++i) e[i] = a[i] + b[i];
    return Monomial(std::move(e));
}

/// Quotient b/a when a divides b, otherwise nullopt.
inline std::optional<Monomial> mono_divides(const Monomial& a, const Monomial& b) {
    check_lengths(a, b);
    std::vector<std::uint32_t> e(a.nvars());
    for (std::size_t i = 0; i < a.nvars(); ++i) {
        if (a[i] > b[i]) return std::nullopt;
        e[i] = b[i] - a[i];
    }
    return Monomial(std::move(e));
}

/// Divisibility test without building the quotient.
inline bool mono_divides_p(const Monomial& a, const Monomial& b) {
    check_lengths(a, b);
    for (std::size_t i = 0; i < a.nvars(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

/// Compare a*b against c without materializing the product.
inline Cmp compare_product(const MonomialOrder& ord, const Monomial& a,
                           const Monomial& b, const Monomial& c) {
    switch (ord.kind) {
        case OrderKind::Lex: {
            for (std::size_t i = 0; i < ord.nvars; ++i) {
                std::uint64_t s = static_cast<std::uint64_t>(a[i]) + b[i];
                if (s != c[i]) return s > c[i] ? Cmp::Greater : Cmp::Less;
            }
            return Cmp::Equal;
        }
        case OrderKind::DegRevLex: {
            std::uint64_t ds = a.degree() + b.degree(), dc = c.degree();
            if (ds != dc) return ds > dc ? Cmp::Greater : Cmp::Less;
            for (std::size_t i = ord.nvars; i-- > 0;) {
                std::uint64_t s = static_cast<std::uint64_t>(a[i]) + b[i];
                if (s != c[i]) return s < c[i] ? Cmp::Greater : Cmp::Less;
            }
            return Cmp::Equal;
        }
    }
    throw std::logic_error("unreachable order kind");
}

inline std::string mono_to_string(const Monomial& m,
                                  const std::vector<std::string>& vars) {
    if (m.is_one()) return "1";
    std::string s;
    for (std::size_t i = 0; i < m.nvars(); ++i) {
        if (m[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += vars.at(i);
        if (m[i] > 1) s += "^" + std::to_string(m[i]);
    }
    return s;
}

}  // namespace sgb

#endif
