#include "shx/expression.hpp"

#include <cctype>
#include <cstdlib>

namespace shx {

namespace {

struct Parser {
    const std::string& text;
    std::size_t pos = 0;
    Scale scale;
    int max_degree;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    [[noreturn]] void fail(const std::string& what) {
        throw ParseError("expression: " + what + " at offset " + std::to_string(pos));
    }

    HFunction parse_expr() {
        HFunction acc = parse_term();
        for (;;) {
            if (eat('+')) {
                acc = acc + parse_term();
            } else if (eat('-')) {
                acc = acc - parse_term();
            } else {
                return acc;
            }
        }
    }

    HFunction parse_term() {
        HFunction acc = parse_unary();
        while (eat('*')) acc = acc * parse_unary();
        return acc;
    }

    HFunction parse_unary() {
        if (eat('-')) return -1.0 * parse_unary();
        return parse_power();
    }

    HFunction parse_power() {
        HFunction base = parse_atom();
        while (eat('^')) {
            skip_ws();
            std::size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (pos == start) fail("expected a nonnegative integer exponent");
            const int n = std::atoi(text.substr(start, pos - start).c_str());
            HFunction acc = HFunction::constant(Hypercomplex::unity(scale));
            for (int k = 0; k < n; ++k) acc = acc * base;
            base = acc;
        }
        return base;
    }

    int parse_int() {
        skip_ws();
        std::size_t start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("expected an integer");
        return std::atoi(text.substr(start, pos - start).c_str());
    }

    HFunction parse_atom() {
        skip_ws();
        if (pos >= text.size()) fail("unexpected end of input");
        const char c = text[pos];
        if (c == '(') {
            ++pos;
            HFunction inner = parse_expr();
            if (!eat(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            char* end = nullptr;
            const double v = std::strtod(text.c_str() + pos, &end);
            pos = static_cast<std::size_t>(end - text.c_str());
            return HFunction::constant(Hypercomplex(scale, v, 0, 0, 0));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos;
            while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                                         text[pos] == '_'))
                ++pos;
            const std::string name = text.substr(start, pos - start);
            if (name == "one") return HFunction::constant(Hypercomplex::unity(scale));
            if (name == "i") return HFunction::constant(basis_unit(scale, BasisUnit::I));
            if (name == "j") return HFunction::constant(basis_unit(scale, BasisUnit::J));
            if (name == "k") return HFunction::constant(basis_unit(scale, BasisUnit::K));
            if (name.size() == 2 && name[0] == 'x' && name[1] >= '1' && name[1] <= '4')
                return HFunction::coordinate(scale, name[1] - '0');
            if (name.size() == 4 && name.rfind("eta", 0) == 0 && name[3] >= '2' && name[3] <= '4')
                return HFunction::eta(scale, name[3] - '0');
            if (name.size() == 5 && name.rfind("zeta", 0) == 0 && name[4] >= '2' && name[4] <= '4')
                return HFunction::zeta(scale, name[4] - '0');
            if (name == "etapow") {
                if (!eat('(')) fail("expected '(' after etapow");
                const int n1 = parse_int();
                if (!eat(',')) fail("expected ','");
                const int n2 = parse_int();
                if (!eat(',')) fail("expected ','");
                const int n3 = parse_int();
                if (!eat(')')) fail("expected ')'");
                return HFunction::eta_power(scale, {n1, n2, n3}, max_degree);
            }
            fail("unknown identifier \"" + name + "\"");
        }
        fail(std::string("unexpected character '") + c + "'");
    }
};

}  // namespace

HFunction parse_expression(const std::string& text, Scale scale, int max_degree) {
    Parser p{text, 0, scale, max_degree};
    HFunction f = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return f;
}

bool is_builtin_name(const std::string& name) {
    if (name.rfind("eta^", 0) == 0) return true;
    return name == "eta2" || name == "eta3" || name == "eta4" || name == "zeta2" ||
           name == "zeta3" || name == "zeta4";
}

HFunction parse_builtin(const std::string& name, Scale scale, int max_degree) {
    if (name.rfind("eta^", 0) == 0) {
        std::string idx = name.substr(4);
        if (!idx.empty() && idx.front() == '(' && idx.back() == ')')
            idx = idx.substr(1, idx.size() - 2);
        int n[3] = {0, 0, 0};
        std::size_t start = 0;
        for (int k = 0; k < 3; ++k) {
            const std::size_t comma = idx.find(',', start);
            const std::string part =
                idx.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
            if (part.empty() || (k < 2) != (comma != std::string::npos))
                throw ParseError("builtin: eta^ wants three comma-separated integers, got \"" +
                                 name + "\"");
            for (char c : part)
                if (!std::isdigit(static_cast<unsigned char>(c)))
                    throw ParseError("builtin: bad multi-index in \"" + name + "\"");
            n[k] = std::atoi(part.c_str());
            start = comma + 1;
        }
        return HFunction::eta_power(scale, {n[0], n[1], n[2]}, max_degree);
    }
    if (name.size() == 4 && name.rfind("eta", 0) == 0 && name[3] >= '2' && name[3] <= '4')
        return HFunction::eta(scale, name[3] - '0');
    if (name.size() == 5 && name.rfind("zeta", 0) == 0 && name[4] >= '2' && name[4] <= '4')
        return HFunction::zeta(scale, name[4] - '0');
    throw ParseError("unknown builtin \"" + name + "\"");
}

}  // namespace shx
