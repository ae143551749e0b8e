#include "sgb/io.hpp"

#include <cctype>
#include <sstream>

namespace sgb {

std::string order_name(OrderKind k) {
    return k == OrderKind::Lex ? "lex" : "degrevlex";
}

OrderKind order_from_name(const std::string& name) {
    if (name == "lex") return OrderKind::Lex;
    if (name == "degrevlex") return OrderKind::DegRevLex;
    throw std::domain_error("unsupported order name: " + name);
}

namespace {

struct Token {
    enum Kind { Int, Name, Star, Caret, Plus, Minus, End } kind;
    std::string text;
    std::size_t column;
};

std::vector<Token> lex_line(const std::string& s, std::size_t line_no) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        std::size_t col = i + 1;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            out.push_back({Token::Int, s.substr(i, j - i), col});
            i = j;
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) ||
                                    s[j] == '_'))
                ++j;
            out.push_back({Token::Name, s.substr(i, j - i), col});
            i = j;
        } else if (c == '*') {
            out.push_back({Token::Star, "*", col});
            ++i;
        } else if (c == '^') {
            out.push_back({Token::Caret, "^", col});
            ++i;
        } else if (c == '+') {
            out.push_back({Token::Plus, "+", col});
            ++i;
        } else if (c == '-') {
            out.push_back({Token::Minus, "-", col});
            ++i;
        } else {
            throw ParseError(line_no, col, std::string("unexpected character '") + c + "'");
        }
    }
    out.push_back({Token::End, "", s.size() + 1});
    return out;
}

Polynomial<IntegerRing> parse_poly_line(const std::string& s, std::size_t line_no,
                                         const std::vector<std::string>& vars,
                                         const MonomialOrder& ord) {
    std::vector<Token> toks = lex_line(s, line_no);
    std::size_t pos = 0;
    auto peek = [&]() -> const Token& { return toks[pos]; };
    auto advance = [&]() -> const Token& { return toks[pos++]; };

    auto var_index = [&](const Token& t) -> std::size_t {
        for (std::size_t v = 0; v < vars.size(); ++v)
            if (vars[v] == t.text) return v;
        throw ParseError(line_no, t.column, "undeclared variable '" + t.text + "'");
    };

    std::vector<Term<IntegerRing>> terms;
    bool first = true;
    while (peek().kind != Token::End) {
        // Sign prefix: required between terms, optional leading '-'.
        int sign = 1;
        if (peek().kind == Token::Plus || peek().kind == Token::Minus) {
            if (advance().kind == Token::Minus) sign = -1;
        } else if (!first) {
            throw ParseError(line_no, peek().column, "expected '+' or '-' between terms");
        }
        first = false;

        mpz_class coeff = 1;
        Monomial mono = Monomial::one(vars.size());
        bool saw_factor = false;
        if (peek().kind == Token::Int) {
            coeff = mpz_class(advance().text);
            saw_factor = true;
        }
        while (true) {
            if (peek().kind == Token::Star) {
                advance();
                if (peek().kind != Token::Name)
                    throw ParseError(line_no, peek().column, "expected variable after '*'");
            }
            if (peek().kind != Token::Name) break;
            const Token& name = advance();
            std::size_t v = var_index(name);
            std::uint32_t exp = 1;
            if (peek().kind == Token::Caret) {
                advance();
                if (peek().kind != Token::Int)
                    throw ParseError(line_no, peek().column, "expected exponent after '^'");
                exp = static_cast<std::uint32_t>(std::stoul(advance().text));
            }
            mono = mono_mul(mono, Monomial::var(vars.size(), v, exp));
            saw_factor = true;
        }
        if (!saw_factor)
            throw ParseError(line_no, peek().column, "expected a term");
        if (sign < 0) coeff = -coeff;
        if (coeff != 0) terms.push_back({std::move(coeff), std::move(mono)});
    }
    if (first) throw ParseError(line_no, 1, "empty polynomial");
    return Polynomial<IntegerRing>::from_terms(std::move(terms), ord);
}

std::string expect_header(const std::string& line, const std::string& key,
                          std::size_t line_no) {
    std::size_t colon = line.find(':');
    if (colon == std::string::npos)
        throw ParseError(line_no, 1, "expected '" + key + ":' header");
    std::string k = line.substr(0, colon);
    // Trim surrounding whitespace.
    auto trim = [](std::string s) {
        std::size_t b = s.find_first_not_of(" \t");
        std::size_t e = s.find_last_not_of(" \t");
        return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    if (trim(k) != key)
        throw ParseError(line_no, 1, "expected '" + key + ":' header, found '" + k + "'");
    return trim(line.substr(colon + 1));
}

}  // namespace

SystemFile parse_system(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    SystemFile sys;

    auto next_nonempty = [&]() -> bool {
        while (std::getline(in, line)) {
            ++line_no;
            std::size_t b = line.find_first_not_of(" \t\r");
            if (b == std::string::npos) continue;
            if (line.back() == '\r') line.pop_back();
            return true;
        }
        return false;
    };

    if (!next_nonempty()) throw ParseError(1, 1, "missing 'vars:' header");
    std::string vars_value = expect_header(line, "vars", line_no);
    {
        std::istringstream vs(vars_value);
        std::string name;
        while (std::getline(vs, name, ',')) {
            std::size_t b = name.find_first_not_of(" \t");
            std::size_t e = name.find_last_not_of(" \t");
            if (b == std::string::npos)
                throw ParseError(line_no, 1, "empty variable name");
            name = name.substr(b, e - b + 1);
            for (const auto& existing : sys.vars)
                if (existing == name)
                    throw ParseError(line_no, 1, "duplicate variable '" + name + "'");
            sys.vars.push_back(name);
        }
        if (sys.vars.empty()) throw ParseError(line_no, 1, "no variables declared");
    }

    if (!next_nonempty()) throw ParseError(line_no, 1, "missing 'order:' header");
    try {
        sys.order = order_from_name(expect_header(line, "order", line_no));
    } catch (const std::domain_error& e) {
        throw ParseError(line_no, 1, e.what());
    }

    if (!next_nonempty()) throw ParseError(line_no, 1, "missing 'ring:' header");
    sys.ring = expect_header(line, "ring", line_no);
    if (sys.ring != "ZZ" && sys.ring != "QQ")
        throw ParseError(line_no, 1, "unsupported ring '" + sys.ring + "'");

    MonomialOrder ord = sys.monomial_order();
    while (next_nonempty())
        sys.polys.push_back(parse_poly_line(line, line_no, sys.vars, ord));
    if (sys.polys.empty()) throw ParseError(line_no + 1, 1, "no polynomials");
    return sys;
}

std::string print_system(const SystemFile& sys) {
    std::ostringstream os;
    os << "vars: ";
    for (std::size_t i = 0; i < sys.vars.size(); ++i) {
        if (i) os << ",";
        os << sys.vars[i];
    }
    os << "\norder: " << order_name(sys.order) << "\nring: " << sys.ring << "\n";
    for (const auto& p : sys.polys)
        os << poly_to_string<IntegerRing>(p, sys.vars) << "\n";
    return os.str();
}

}  // namespace sgb
