#include "pvi/parse.hpp"

#include "pvi/error.hpp"
#include "pvi/symbols.hpp"

#include <algorithm>
#include <cctype>

namespace pvi {

namespace {

constexpr unsigned long kMaxExponent = 4096;

class Parser {
public:
    Parser(std::string_view text, const std::vector<std::string> &universe)
        : text_(text), universe_(universe) {}

    RationalFunction run()
    {
        skip();
        if (pos_ == text_.size()) throw ParseError("empty expression", pos_);
        RationalFunction out = expr();
        skip();
        if (pos_ != text_.size()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
        return out;
    }

private:
    std::string_view text_;
    const std::vector<std::string> &universe_;
    std::size_t pos_ = 0;

    void skip()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool peek(char ch)
    {
        skip();
        return pos_ < text_.size() && text_[pos_] == ch;
    }

    bool peek_digit()
    {
        skip();
        return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
    }

    Integer integer()
    {
        skip();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) throw ParseError("expected integer", start);
        return Integer(std::string(text_.substr(start, pos_ - start)));
    }

    RationalFunction expr()
    {
        bool negate = false;
        if (peek('+') || peek('-')) {
            negate = text_[pos_] == '-';
            ++pos_;
        }
        RationalFunction acc = term();
        if (negate) acc = -acc;
        for (;;) {
            if (peek('+')) {
                ++pos_;
                acc += term();
            } else if (peek('-')) {
                ++pos_;
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    RationalFunction term()
    {
        RationalFunction acc = factor(true);
        for (;;) {
            if (peek('*')) {
                ++pos_;
                acc *= factor(true);
            } else if (peek('/')) {
                const std::size_t at = pos_;
                ++pos_;
                // A rational literal right after '/' would silently change
                // associativity (x/2/3), so read a plain factor here.
                RationalFunction rhs = factor(false);
                if (rhs.is_zero()) throw ParseError("division by zero", at);
                acc /= rhs;
            } else {
                return acc;
            }
        }
    }

    RationalFunction factor(bool allow_fraction_literal)
    {
        RationalFunction base = atom(allow_fraction_literal);
        if (peek('^')) {
            ++pos_;
            skip();
            if (!peek_digit()) throw ParseError("expected nonnegative integer exponent", pos_);
            const std::size_t at = pos_;
            const Integer e = integer();
            if (e > kMaxExponent) throw ParseError("exponent too large", at);
            if (base.is_zero() && e == 0) return RationalFunction(1);
            base = base.pow(static_cast<int>(e.get_ui()));
        }
        return base;
    }

    RationalFunction atom(bool allow_fraction_literal)
    {
        skip();
        if (pos_ == text_.size()) throw ParseError("unexpected end of input", pos_);
        const char ch = text_[pos_];
        if (ch == '(') {
            ++pos_;
            RationalFunction inner = expr();
            if (!peek(')')) throw ParseError("expected ')'", pos_);
            ++pos_;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            const Integer num = integer();
            if (allow_fraction_literal && peek('/')) {
                const std::size_t save = pos_;
                ++pos_;
                if (peek_digit()) {
                    const std::size_t at = pos_;
                    const Integer den = integer();
                    if (den == 0) throw ParseError("zero denominator", at);
                    Rational q(num, den);
                    q.canonicalize();
                    return RationalFunction(q);
                }
                pos_ = save;
            }
            return RationalFunction(Rational(num));
        }
        if (std::isalpha(static_cast<unsigned char>(ch))) {
            const std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                ++pos_;
            }
            std::string name(text_.substr(start, pos_ - start));
            if (!universe_.empty() && std::find(universe_.begin(), universe_.end(), name) == universe_.end()) {
                throw ParseError("unknown symbol '" + name + "'", start);
            }
            return RationalFunction::variable(name);
        }
        throw ParseError(std::string("unexpected '") + ch + "'", pos_);
    }
};

bool needs_parens_as_divisor(const Polynomial &d)
{
    if (d.term_count() > 1) return true;
    if (d.is_constant()) return false;
    if (d.coefficient(0) != 1) return true;
    auto e = d.exponents(0);
    return std::count_if(e.begin(), e.end(), [](auto x) { return x != 0; }) > 1;
}

} // namespace

RationalFunction parse(std::string_view text, const std::vector<std::string> &universe)
{
    return Parser(text, universe).run();
}

std::string to_string(const RationalFunction &f)
{
    auto [n, d] = integral_parts(f);
    if (d == Polynomial(1)) return to_string(n);
    std::string out = n.term_count() > 1 ? "(" + to_string(n) + ")" : to_string(n);
    out += '/';
    out += needs_parens_as_divisor(d) ? "(" + to_string(d) + ")" : to_string(d);
    return out;
}

} // namespace pvi
