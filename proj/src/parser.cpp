#include "liegauge/parser.hpp"

#include <cctype>

#include "liegauge/errors.hpp"

namespace liegauge {

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : s_(text) {}

    FieldElem parse() {
        FieldElem e = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("trailing input");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("expression parse error at position " + std::to_string(pos_) +
                         ": " + what);
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    FieldElem expr() {
        FieldElem acc = eat('-') ? -term() : term();
        for (;;) {
            if (eat('+'))
                acc += term();
            else if (eat('-'))
                acc -= term();
            else
                return acc;
        }
    }

    FieldElem term() {
        FieldElem acc = factor();
        for (;;) {
            if (eat('*')) {
                acc *= factor();
            } else if (eat('/')) {
                FieldElem d = factor();
                if (d.is_zero()) throw DegenerateInput("division by zero in expression");
                acc /= d;
            } else {
                return acc;
            }
        }
    }

    FieldElem factor() {
        FieldElem base = atom();
        if (eat('^')) {
            long k = integer();
            if (k < 0) fail("negative exponent");
            base = base.pow(static_cast<int>(k));
        }
        return base;
    }

    FieldElem atom() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            FieldElem e = expr();
            if (!eat(')')) fail("expected ')'");
            return e;
        }
        if (c == '-') {
            ++pos_;
            return -atom();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return FieldElem(Scalar(integer()));
        if (c == 'z') {
            ++pos_;
            return FieldElem::z();
        }
        if (c == 't') {
            ++pos_;
            if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
                fail("expected index after 't'");
            long idx = integer();
            int order = 0;
            while (pos_ < s_.size() && s_[pos_] == '\'') {
                ++order;
                ++pos_;
            }
            return FieldElem::t(static_cast<int>(idx), order);
        }
        fail("unexpected character");
    }

    long integer() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer");
        return std::stol(std::string(s_.substr(start, pos_ - start)));
    }

    std::string_view s_;
    size_t pos_ = 0;
};

} // namespace

FieldElem parse_expr(std::string_view text) { return Parser(text).parse(); }

Scalar parse_scalar(std::string_view text) {
    FieldElem e = parse_expr(text);
    if (!e.is_constant()) throw ParseError("expected a rational constant");
    return e.constant_value();
}

} // namespace liegauge
