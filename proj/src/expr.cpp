#include "chowring/expr.hpp"

#include <cctype>

namespace chowring {

namespace {

struct Parser {
    const std::string& src;
    const Presentation& pres;
    std::size_t pos = 0;

    void skip_ws()
    {
        while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos])))
            ++pos;
    }

    bool eof()
    {
        skip_ws();
        return pos >= src.size();
    }

    char peek()
    {
        skip_ws();
        return pos < src.size() ? src[pos] : '\0';
    }

    bool accept(char c)
    {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }

    Int parse_uint()
    {
        skip_ws();
        std::size_t start = pos;
        while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos])))
            ++pos;
        if (pos == start)
            throw ParseError("expected an integer", start);
        return Int(src.substr(start, pos - start));
    }

    Expr parse_expr()
    {
        Expr node;
        bool negate_first = accept('-');
        node = parse_term();
        if (negate_first) {
            Expr neg;
            neg.kind = Expr::Kind::Neg;
            neg.children.push_back(std::move(node));
            node = std::move(neg);
        }
        for (;;) {
            char c = peek();
            if (c != '+' && c != '-')
                break;
            ++pos;
            Expr rhs = parse_term();
            Expr parent;
            parent.kind = c == '+' ? Expr::Kind::Add : Expr::Kind::Sub;
            parent.children.push_back(std::move(node));
            parent.children.push_back(std::move(rhs));
            node = std::move(parent);
        }
        return node;
    }

    Expr parse_term()
    {
        Expr node = parse_factor();
        while (accept('*')) {
            Expr rhs = parse_factor();
            Expr parent;
            parent.kind = Expr::Kind::Mul;
            parent.children.push_back(std::move(node));
            parent.children.push_back(std::move(rhs));
            node = std::move(parent);
        }
        return node;
    }

    Expr parse_factor()
    {
        Expr node = parse_atom();
        if (accept('^')) {
            Int e = parse_uint();
            if (e > 1000000)
                throw ParseError("exponent too large", pos);
            Expr parent;
            parent.kind = Expr::Kind::Pow;
            parent.exponent = static_cast<int>(e);
            parent.children.push_back(std::move(node));
            node = std::move(parent);
        }
        return node;
    }

    Expr parse_atom()
    {
        char c = peek();
        std::size_t at = pos;
        if (c == '(') {
            ++pos;
            Expr inner = parse_expr();
            if (!accept(')'))
                throw ParseError("expected ')'", pos);
            return inner;
        }
        if (c == 'c') {
            ++pos;
            Int idx = parse_uint();
            std::string name = "c" + idx.str();
            if (pres.var_of_generator(name) < 0)
                throw GeneratorError("unknown generator " + name + " for this presentation");
            Expr node;
            node.kind = Expr::Kind::Gen;
            node.gen = std::move(name);
            return node;
        }
        if (c == 'y') {
            ++pos;
            if (pres.var_of_generator("y") < 0)
                throw GeneratorError("this presentation has no generator y");
            Expr node;
            node.kind = Expr::Kind::Gen;
            node.gen = "y";
            return node;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Expr node;
            node.kind = Expr::Kind::Integer;
            node.value = parse_uint();
            return node;
        }
        throw ParseError("expected a generator, integer, or '('", at);
    }
};

} // namespace

Expr parse_expression(const std::string& src, const Presentation& pres)
{
    Parser parser{src, pres};
    if (parser.eof())
        throw ParseError("empty expression", 0);
    Expr root = parser.parse_expr();
    if (!parser.eof())
        throw ParseError("unexpected trailing input", parser.pos);
    return root;
}

Polynomial evaluate(const Expr& expr, const Presentation& pres)
{
    switch (expr.kind) {
    case Expr::Kind::Integer:
        return Polynomial::constant(pres.ring(), expr.value);
    case Expr::Kind::Gen:
        return Polynomial::variable(pres.ring(), pres.var_of_generator(expr.gen));
    case Expr::Kind::Neg:
        return -evaluate(expr.children[0], pres);
    case Expr::Kind::Add:
        return evaluate(expr.children[0], pres) + evaluate(expr.children[1], pres);
    case Expr::Kind::Sub:
        return evaluate(expr.children[0], pres) - evaluate(expr.children[1], pres);
    case Expr::Kind::Mul:
        return evaluate(expr.children[0], pres) * evaluate(expr.children[1], pres);
    case Expr::Kind::Pow:
        return poly_pow(evaluate(expr.children[0], pres), expr.exponent);
    }
    throw Error("corrupt expression tree");
}

} // namespace chowring
