#include "qlbkit/expression.hpp"

#include "qlbkit/errors.hpp"

#include <algorithm>
#include <cctype>

namespace qlbkit {

namespace {

class Parser {
public:
    Parser(std::string_view text, const std::vector<std::string>& vars) : vars_(vars) {
        // normalise the unicode minus sign to ASCII
        std::string s(text);
        const std::string minus = "\xE2\x88\x92";
        for (size_t p = s.find(minus); p != std::string::npos; p = s.find(minus, p + 1)) s.replace(p, minus.size(), "-");
        text_ = s;
    }

    Scalar parse() {
        Scalar v = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected character");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw InputError("cannot parse coefficient '" + text_ + "' at position " + std::to_string(pos_) + ": " + msg);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Scalar expr() {
        Scalar v = term();
        for (;;) {
            if (accept('+'))
                v = v + term();
            else if (accept('-'))
                v = v - term();
            else
                return v;
        }
    }

    Scalar term() {
        Scalar v = unary();
        for (;;) {
            if (accept('*')) {
                v = v * unary();
            } else if (accept('/')) {
                Scalar d = unary();
                if (d.is_zero()) fail("division by zero");
                v = v / d;
            } else {
                return v;
            }
        }
    }

    Scalar unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    Scalar power() {
        Scalar base = atom();
        if (!accept('^')) return base;
        bool neg = false;
        if (accept('-')) neg = true;
        else accept('+');
        skip_ws();
        size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("exponent must be an integer");
        unsigned long e = std::stoul(text_.substr(start, pos_ - start));
        if (e > 4096) fail("exponent too large");
        Scalar r(1);
        for (unsigned long i = 0; i < e; ++i) r = r * base;
        if (neg) {
            if (r.is_zero()) fail("zero raised to a negative power");
            r = Scalar(1) / r;
        }
        return r;
    }

    Scalar atom() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Scalar v = expr();
            if (!accept(')')) fail("expected ')'");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (pos_ < text_.size() && (text_[pos_] == '.' || text_[pos_] == 'e' || text_[pos_] == 'E'))
                fail("decimal literals are not allowed; write exact fractions");
            return Scalar(Rational(mpz_class(text_.substr(start, pos_ - start))));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            std::string name = text_.substr(start, pos_ - start);
            if (std::find(vars_.begin(), vars_.end(), name) == vars_.end()) {
                pos_ = start;
                fail("undeclared variable '" + name + "'");
            }
            return Scalar::variable(name);
        }
        fail("unexpected character");
    }

    std::string text_;
    const std::vector<std::string>& vars_;
    size_t pos_ = 0;
};

}  // namespace

Scalar parse_scalar(std::string_view text, const std::vector<std::string>& variables) {
    return Parser(text, variables).parse();
}

}  // namespace qlbkit
