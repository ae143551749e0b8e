/**
 * @file io.hpp
 * @brief Text format for polynomial systems and conversions between
 *        coefficient domains.
 *
 * Format, one polynomial per line after a three-line header:
 *
 *     vars: x,y
 *     order: degrevlex
 *     ring: ZZ
 *     2*x^2*y - 3*y + 1
 *     x + y
 *
 * Coefficients are decimal integers with an optional leading '-'. A '*'
 * between factors is optional where the tokenization stays unambiguous;
 * multi-character variable names require it.
 */
#ifndef SGB_IO_HPP
#define SGB_IO_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "sgb/poly.hpp"

namespace sgb {

struct ParseError : std::runtime_error {
    std::size_t line = 0, column = 0;
    ParseError(std::size_t l, std::size_t c, const std::string& msg)
        : std::runtime_error("line " + std::to_string(l) + ", column " +
                             std::to_string(c) + ": " + msg),
          line(l),
          column(c) {}
};

struct SystemFile {
    std::vector<std::string> vars;
    OrderKind order = OrderKind::DegRevLex;
    std::string ring = "ZZ";  // "ZZ" or "QQ"
    std::vector<Polynomial<IntegerRing>> polys;

    MonomialOrder monomial_order() const { return {order, vars.size()}; }
};

SystemFile parse_system(const std::string& text);
std::string print_system(const SystemFile& sys);

std::string order_name(OrderKind k);
OrderKind order_from_name(const std::string& name);  // throws std::domain_error

/// Interpret the stored integer-coefficient system over a coefficient domain.
template <class R>
std::vector<Polynomial<R>> system_polys(const SystemFile& sys) {
    std::vector<Polynomial<R>> out;
    MonomialOrder ord = sys.monomial_order();
    for (const auto& p : sys.polys) {
        std::vector<Term<R>> terms;
        for (const auto& t : p.terms())
            terms.push_back({typename R::Elem(t.coeff), t.mono});
        out.push_back(Polynomial<R>::from_terms(std::move(terms), ord));
    }
    return out;
}

}  // namespace sgb

#endif
