#include <cctype>

#include "zetadiv/algebra.hpp"

namespace zetadiv::algebra {

namespace {

// Recursive-descent parser over the expression grammar:
//   expr   := ["-"] term (("+"|"-") term)*
//   term   := factor ("*" factor)*
//   factor := atom ("^" uint)?
//   atom   := int | var | "(" expr ")"
//   var    := "x" uint
class Parser {
public:
    Parser(const std::string& text, std::uint32_t n, VarStyle style)
        : text_(text), n_(n), style_(style) {}

    IntMultiPoly run() {
        IntMultiPoly r = expr();
        skip_ws();
        if (pos_ != text_.size())
            throw ParseError(pos_, "unexpected trailing input");
        return r;
    }

private:
    std::uint32_t slots() const { return style_ == VarStyle::affine ? n_ : n_ + 1; }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool peek(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    bool accept(char c) {
        if (peek(c)) { ++pos_; return true; }
        return false;
    }

    mpz_class parse_uint() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ == start) throw ParseError(pos_, "expected an integer");
        return mpz_class(text_.substr(start, pos_ - start));
    }

    IntMultiPoly constant(const mpz_class& c) {
        IntMultiPoly r(slots());
        r.add_term(ExponentVec(slots(), 0), c);
        return r;
    }

    IntMultiPoly variable() {
        std::size_t start = pos_;
        ++pos_;   // consume 'x'
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            throw ParseError(pos_, "expected a variable index after 'x'");
        mpz_class idx = parse_uint();
        std::string name = text_.substr(start, pos_ - start);
        if (!idx.fits_uint_p())
            throw UnknownVariableError(start, name);
        std::uint32_t i = static_cast<std::uint32_t>(idx.get_ui());
        std::uint32_t slot;
        if (style_ == VarStyle::affine) {
            if (i < 1 || i > n_) throw UnknownVariableError(start, name);
            slot = i - 1;
        } else {
            if (i > n_) throw UnknownVariableError(start, name);
            slot = i;
        }
        IntMultiPoly r(slots());
        ExponentVec e(slots(), 0);
        e[slot] = 1;
        r.add_term(e, 1);
        return r;
    }

    IntMultiPoly atom() {
        skip_ws();
        if (pos_ >= text_.size()) throw ParseError(pos_, "unexpected end of input");
        char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) return constant(parse_uint());
        if (c == 'x') return variable();
        if (c == '(') {
            ++pos_;
            IntMultiPoly inner = expr();
            if (!accept(')')) throw ParseError(pos_, "expected ')'");
            return inner;
        }
        throw ParseError(pos_, std::string("unexpected character '") + c + "'");
    }

    IntMultiPoly factor() {
        IntMultiPoly base = atom();
        if (accept('^')) {
            mpz_class e = parse_uint();
            if (!e.fits_uint_p() || e.get_ui() > 4096)
                throw ParseError(pos_, "exponent too large");
            return pow_poly(base, static_cast<std::uint32_t>(e.get_ui()));
        }
        return base;
    }

    IntMultiPoly term() {
        IntMultiPoly acc = factor();
        while (accept('*')) acc = mul_poly(acc, factor());
        return acc;
    }

    IntMultiPoly expr() {
        skip_ws();
        bool negate = false;
        if (accept('-')) negate = true;
        else accept('+');
        IntMultiPoly acc = term();
        if (negate) acc = -acc;
        while (true) {
            if (accept('+')) acc = acc + term();
            else if (accept('-')) acc = acc + (-term());
            else break;
        }
        return acc;
    }

    IntMultiPoly mul_poly(const IntMultiPoly& a, const IntMultiPoly& b) {
        IntMultiPoly r(slots());
        for (const auto& [ea, ca] : a.terms())
            for (const auto& [eb, cb] : b.terms()) {
                ExponentVec e(slots());
                for (std::uint32_t i = 0; i < slots(); ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }

    IntMultiPoly pow_poly(const IntMultiPoly& a, std::uint32_t k) {
        IntMultiPoly r = constant(1);
        for (std::uint32_t i = 0; i < k; ++i) r = mul_poly(r, a);
        return r;
    }

    const std::string& text_;
    std::uint32_t n_;
    VarStyle style_;
    std::size_t pos_ = 0;
};

} // namespace

IntMultiPoly parse_poly(const std::string& text, std::uint32_t n, VarStyle style) {
    return Parser(text, n, style).run();
}

std::string print_poly(const IntMultiPoly& f, VarStyle style) {
    return f.to_string(style == VarStyle::projective);
}

} // namespace zetadiv::algebra
