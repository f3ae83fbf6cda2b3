#include "k3fm/parser.hpp"

#include <array>
#include <cctype>
#include <optional>
#include <string>
#include <vector>

#include "k3fm/errors.hpp"

namespace k3fm {

namespace {

// Slots of a parsed linear combination.
enum Slot { kOne, kC, kF, kSigma, kSigmaBar, kEta, kSigmaInv, kSigmaInvC, kSigmaInvF, kSlotCount };

struct Token {
    enum Kind { Number, Ident, SigmaInv, Plus, Minus, Star, Slash, Caret, LParen, RParen, End } kind;
    std::string text;
    int line;
    int column;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        while (true) {
            skip_space();
            const int line = line_, col = col_;
            if (pos_ >= src_.size()) {
                out.push_back({Token::End, "", line, col});
                return out;
            }
            const char c = src_[pos_];
            if (std::isdigit(static_cast<unsigned char>(c))) {
                std::string num;
                while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) num += advance();
                out.push_back({Token::Number, num, line, col});
            } else if (std::isalpha(static_cast<unsigned char>(c))) {
                std::string id;
                while (pos_ < src_.size() && std::isalnum(static_cast<unsigned char>(src_[pos_]))) id += advance();
                if (id == "sigma" && src_.substr(pos_, 3) == "^-1") {
                    for (int k = 0; k < 3; ++k) advance();
                    out.push_back({Token::SigmaInv, "sigma^-1", line, col});
                } else {
                    out.push_back({Token::Ident, id, line, col});
                }
            } else {
                Token::Kind kind;
                switch (c) {
                case '+': kind = Token::Plus; break;
                case '-': kind = Token::Minus; break;
                case '*': kind = Token::Star; break;
                case '/': kind = Token::Slash; break;
                case '^': kind = Token::Caret; break;
                case '(': kind = Token::LParen; break;
                case ')': kind = Token::RParen; break;
                default: throw SyntaxError(std::string("unexpected character '") + c + "'", line, col);
                }
                advance();
                out.push_back({kind, std::string(1, c), line, col});
            }
        }
    }

private:
    char advance() {
        const char c = src_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }
    void skip_space() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) advance();
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

// scalar + sum of scalar * basis.
struct Value {
    Scalar scalar;
    std::array<Scalar, kSlotCount> slots{};

    bool is_scalar() const {
        for (const auto& s : slots)
            if (!s.is_zero()) return false;
        return true;
    }
    bool has_basis = false;
};

Value operator+(Value a, const Value& b) {
    a.scalar += b.scalar;
    for (int k = 0; k < kSlotCount; ++k) a.slots[k] += b.slots[k];
    a.has_basis = a.has_basis || b.has_basis;
    return a;
}

Value scale(const Scalar& s, Value v) {
    v.scalar = s * v.scalar;
    for (auto& x : v.slots) x = s * x;
    return v;
}

class Parser {
public:
    explicit Parser(std::string_view src) : tokens_(Lexer(src).run()) {}

    Value parse_all() {
        Value v = expr();
        if (peek().kind != Token::End) fail("unexpected '" + peek().text + "'");
        return v;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    const Token& take() { return tokens_[pos_++]; }
    [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(what, peek().line, peek().column); }
    bool accept(Token::Kind k) {
        if (peek().kind != k) return false;
        ++pos_;
        return true;
    }

    Value expr() {
        Value v = term();
        while (true) {
            if (accept(Token::Plus)) {
                v = v + term();
            } else if (accept(Token::Minus)) {
                v = v + scale(Scalar(-1), term());
            } else {
                return v;
            }
        }
    }

    Value term() {
        Value v = factor();
        while (true) {
            if (peek().kind == Token::Star) {
                const Token op = take();
                Value rhs = factor();
                if (v.has_basis && rhs.has_basis) {
                    throw SyntaxError("product of two basis classes", op.line, op.column);
                }
                v = v.has_basis ? scale(rhs.scalar, v) : scale(v.scalar, rhs);
            } else if (peek().kind == Token::Slash) {
                const Token op = take();
                Value rhs = factor();
                if (rhs.has_basis) throw SyntaxError("division by a class", op.line, op.column);
                try {
                    v = scale(Scalar(1) / rhs.scalar, v);
                } catch (const NonUnitDivisor&) {
                    throw SyntaxError("divisor '" + rhs.scalar.to_string() + "' is not a unit", op.line, op.column);
                }
            } else {
                return v;
            }
        }
    }

    Value factor() {
        if (accept(Token::Minus)) return scale(Scalar(-1), factor());
        return power();
    }

    Value power() {
        Value base = primary();
        if (peek().kind != Token::Caret) return base;
        const Token op = take();
        if (base.has_basis) throw SyntaxError("power of a class", op.line, op.column);
        const bool negative = accept(Token::Minus);
        if (peek().kind != Token::Number) fail("expected integer exponent");
        int e = 0;
        try {
            e = std::stoi(take().text);
        } catch (const std::out_of_range&) {
            throw SyntaxError("exponent out of range", op.line, op.column);
        }
        try {
            Value out;
            out.scalar = base.scalar.pow(negative ? -e : e);
            return out;
        } catch (const NonUnitDivisor&) {
            throw SyntaxError("negative power of a non-unit", op.line, op.column);
        }
    }

    Value primary() {
        const Token tok = peek();
        switch (tok.kind) {
        case Token::Number: {
            take();
            Value v;
            v.scalar = Scalar(Rational(mpz_class(tok.text)));
            return v;
        }
        case Token::LParen: {
            take();
            Value v = expr();
            if (!accept(Token::RParen)) fail("expected ')'");
            return v;
        }
        case Token::SigmaInv: {
            take();
            Slot slot = kSigmaInv;
            // sigma^-1*C and sigma^-1*F are single basis symbols.
            if (peek().kind == Token::Star && tokens_[pos_ + 1].kind == Token::Ident &&
                (tokens_[pos_ + 1].text == "C" || tokens_[pos_ + 1].text == "F")) {
                take();
                slot = take().text == "C" ? kSigmaInvC : kSigmaInvF;
            }
            return basis(slot);
        }
        case Token::Ident: return identifier(take());
        default: fail(tok.kind == Token::End ? std::string("unexpected end of input") : "unexpected '" + tok.text + "'");
        }
    }

    static Value basis(Slot s) {
        Value v;
        v.slots[s] = 1;
        v.has_basis = true;
        return v;
    }

    static Value identifier(const Token& tok) {
        Value v;
        const std::string& id = tok.text;
        if (id == "i") v.scalar = Scalar::i();
        else if (id == "t") v.scalar = Scalar::t();
        else if (id == "zeta") v.scalar = Scalar::zeta();
        else if (id == "zetabar") v.scalar = Scalar::zetabar();
        else if (id == "one") return basis(kOne);
        else if (id == "C") return basis(kC);
        else if (id == "F") return basis(kF);
        else if (id == "sigma") return basis(kSigma);
        else if (id == "sigmabar") return basis(kSigmaBar);
        else if (id == "eta") return basis(kEta);
        else {
            throw UnknownSymbol("unknown symbol '" + id + "' at " + std::to_string(tok.line) + ":" +
                                std::to_string(tok.column));
        }
        return v;
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

} // namespace

Scalar parse_scalar(std::string_view src) {
    const Value v = Parser(src).parse_all();
    if (v.has_basis) throw SyntaxError("expected a scalar, found a class", 1, 1);
    return v.scalar;
}

GaussRational parse_constant(std::string_view src) {
    const Scalar s = parse_scalar(src);
    if (!s.is_constant()) throw SyntaxError("expected a constant, found '" + s.to_string() + "'", 1, 1);
    return s.constant_term();
}

ParsedClass parse_class_expr(std::string_view src, ClassContext ctx) {
    const Value v = Parser(src).parse_all();
    const auto& s = v.slots;
    const bool harmonic_only = !s[kSigmaInv].is_zero() || !s[kSigmaInvC].is_zero() || !s[kSigmaInvF].is_zero();
    const bool cohomology_only = !v.scalar.is_zero() || !s[kOne].is_zero() || !s[kC].is_zero() ||
                                 !s[kF].is_zero() || !s[kSigma].is_zero() || !s[kEta].is_zero();
    if (ctx == ClassContext::Auto) ctx = harmonic_only ? ClassContext::Harmonic : ClassContext::Cohomology;

    if (ctx == ClassContext::Harmonic) {
        if (cohomology_only) {
            throw SyntaxError("expression mixes harmonic classes with cohomology classes or bare scalars", 1, 1);
        }
        return HTClass{s[kSigmaInv], s[kSigmaInvC], s[kSigmaInvF], s[kSigmaBar]};
    }
    if (harmonic_only) throw SyntaxError("sigma^-1 is not a cohomology class", 1, 1);
    return CohClass{s[kOne] + v.scalar, s[kC], s[kF], s[kSigma], s[kSigmaBar], s[kEta]};
}

} // namespace k3fm
