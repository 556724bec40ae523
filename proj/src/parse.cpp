#include "brst/parse.hpp"

#include "brst/errors.hpp"

#include <cctype>

namespace brst {

namespace {

class Parser {
public:
    Parser(std::string_view src, const ContextPtr& ctx) : src_(src), ctx_(ctx)
    {
        if (ctx_ && ctx_->has("I"))
            throw ContextError("'I' is reserved for the imaginary unit and cannot name a variable");
    }

    Poly run()
    {
        skip_ws();
        if (pos_ == src_.size())
            throw ParseError("empty expression", pos_);
        Poly p = expr();
        skip_ws();
        if (pos_ != src_.size())
            unexpected();
        return p;
    }

private:
    void skip_ws()
    {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])))
            ++pos_;
    }

    char peek()
    {
        skip_ws();
        return pos_ < src_.size() ? src_[pos_] : '\0';
    }

    bool starts_atom(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '('; }

    [[noreturn]] void unexpected()
    {
        if (pos_ >= src_.size())
            throw ParseError("unexpected end of input", pos_);
        if (starts_atom(src_[pos_]))
            throw ParseError("implicit multiplication is not allowed, use '*'", pos_);
        throw ParseError(std::string("unexpected character '") + src_[pos_] + "'", pos_);
    }

    Poly expr()
    {
        Poly acc = term();
        for (;;) {
            char c = peek();
            if (c != '+' && c != '-')
                return acc;
            ++pos_;
            Poly rhs = term();
            if (c == '+')
                acc += rhs;
            else
                acc -= rhs;
        }
    }

    Poly term()
    {
        Poly acc = unary();
        for (;;) {
            char c = peek();
            if (c != '*' && c != '/') {
                if (pos_ < src_.size() && starts_atom(c))
                    unexpected();
                return acc;
            }
            ++pos_;
            std::size_t at = pos_;
            Poly rhs = unary();
            if (c == '*') {
                acc = acc * rhs;
                continue;
            }
            if (rhs.degree() > 0)
                throw ParseError("division by a non-constant expression", at);
            if (rhs.is_zero())
                throw ParseError("division by zero", at);
            acc *= Scalar(1) / rhs.constant_term();
        }
    }

    Poly unary()
    {
        char c = peek();
        if (c == '-') {
            ++pos_;
            return -unary();
        }
        if (c == '+') {
            ++pos_;
            return unary();
        }
        return power();
    }

    Poly power()
    {
        Poly base = atom();
        if (peek() != '^')
            return base;
        ++pos_;
        skip_ws();
        std::size_t at = pos_;
        if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
            throw ParseError("exponent must be a nonnegative integer literal", at);
        unsigned long e = 0;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
            e = e * 10 + static_cast<unsigned long>(src_[pos_] - '0');
            if (e > 255)
                throw ParseError("exponent too large", at);
            ++pos_;
        }
        return pow(base, static_cast<unsigned>(e));
    }

    Poly atom()
    {
        char c = peek();
        std::size_t at = pos_;
        if (c == '(') {
            ++pos_;
            Poly inner = expr();
            if (peek() != ')')
                throw ParseError("expected ')'", pos_);
            ++pos_;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
                digits += src_[pos_++];
            if (pos_ < src_.size() && (std::isalpha(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
                throw ParseError("implicit multiplication is not allowed, use '*'", pos_);
            if (pos_ < src_.size() && src_[pos_] == '.')
                throw ParseError("decimal literals are not supported, use a fraction", pos_);
            return Poly::constant(ctx_, Scalar(Rational(mpz_class(digits))));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
                name += src_[pos_++];
            if (name == "I")
                return Poly::constant(ctx_, Scalar::i());
            if (!ctx_ || !ctx_->has(name))
                throw ParseError("unknown identifier '" + name + "'", at);
            return Poly::variable(ctx_, ctx_->index(name));
        }
        unexpected();
    }

    std::string_view src_;
    const ContextPtr& ctx_;
    std::size_t pos_ = 0;
};

} // namespace

Poly parse_polynomial(std::string_view src, const ContextPtr& ctx)
{
    return Parser(src, ctx).run();
}

} // namespace brst
