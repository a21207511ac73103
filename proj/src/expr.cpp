#include "tetra/expr.hpp"

#include <cctype>

namespace tetra {

namespace {

struct Token {
    enum class Type { Number, Ident, LBracket, RBracket, LParen, RParen, Comma, Plus, Minus, Star, Caret, End };
    Type type;
    std::string text;
    size_t position;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        while (pos_ < text_.size()) {
            const char ch = text_[pos_];
            if (std::isspace(static_cast<unsigned char>(ch))) {
                ++pos_;
                continue;
            }
            if (std::isdigit(static_cast<unsigned char>(ch))) {
                out.push_back(number());
                continue;
            }
            if (std::isalpha(static_cast<unsigned char>(ch))) {
                out.push_back(ident());
                continue;
            }
            out.push_back(punct());
        }
        out.push_back({Token::Type::End, "", text_.size()});
        return out;
    }

private:
    Token number() {
        const size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        // a '/' directly between digits is part of the rational literal
        if (pos_ + 1 < text_.size() && text_[pos_] == '/' &&
            std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
            ++pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
        }
        return {Token::Type::Number, text_.substr(start, pos_ - start), start};
    }

    Token ident() {
        const size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        while (pos_ < text_.size() && text_[pos_] == '\'')
            ++pos_;  // primed symbols: t', t'', c', c''
        return {Token::Type::Ident, text_.substr(start, pos_ - start), start};
    }

    Token punct() {
        const size_t at = pos_;
        const char ch = text_[pos_++];
        switch (ch) {
            case '[': return {Token::Type::LBracket, "[", at};
            case ']': return {Token::Type::RBracket, "]", at};
            case '(': return {Token::Type::LParen, "(", at};
            case ')': return {Token::Type::RParen, ")", at};
            case ',': return {Token::Type::Comma, ",", at};
            case '+': return {Token::Type::Plus, "+", at};
            case '-': return {Token::Type::Minus, "-", at};
            case '*': return {Token::Type::Star, "*", at};
            case '^': return {Token::Type::Caret, "^", at};
        }
        throw ParseError(at, "a token", std::string("'") + ch + "'");
    }

    const std::string& text_;
    size_t pos_ = 0;
};

ExprPtr make_node(ExprNode n) {
    return std::make_shared<const ExprNode>(std::move(n));
}

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

    ExprPtr run() {
        ExprPtr e = expr();
        expect(Token::Type::End, "end of input");
        return e;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    const Token& advance() { return tokens_[pos_++]; }

    bool accept(Token::Type t) {
        if (peek().type == t) {
            ++pos_;
            return true;
        }
        return false;
    }

    const Token& expect(Token::Type t, const std::string& what) {
        if (peek().type != t)
            throw ParseError(peek().position, what,
                             peek().text.empty() ? "end of input" : "'" + peek().text + "'");
        return advance();
    }

    ExprPtr expr() {
        ExprNode sum;
        sum.kind = ExprNode::Kind::Sum;
        sum.children.push_back(term());
        sum.signs.push_back(1);
        while (peek().type == Token::Type::Plus || peek().type == Token::Type::Minus) {
            const int sign = advance().type == Token::Type::Plus ? 1 : -1;
            sum.children.push_back(term());
            sum.signs.push_back(sign);
        }
        if (sum.children.size() == 1 && sum.signs[0] == 1)
            return sum.children[0];
        return make_node(std::move(sum));
    }

    ExprPtr term() {
        ExprNode prod;
        prod.kind = ExprNode::Kind::Product;
        prod.children.push_back(factor());
        while (accept(Token::Type::Star))
            prod.children.push_back(factor());
        if (prod.children.size() == 1)
            return prod.children[0];
        return make_node(std::move(prod));
    }

    ExprPtr factor() {
        ExprPtr b = base();
        while (accept(Token::Type::Caret)) {
            ExprNode pw;
            pw.kind = ExprNode::Kind::Pow;
            pw.exponent = signed_int();
            pw.children.push_back(std::move(b));
            b = make_node(std::move(pw));
        }
        return b;
    }

    int signed_int() {
        int sign = 1;
        if (accept(Token::Type::Minus))
            sign = -1;
        const Token& t = expect(Token::Type::Number, "an integer exponent");
        if (t.text.find('/') != std::string::npos)
            throw ParseError(t.position, "an integer exponent", "'" + t.text + "'");
        return sign * std::stoi(t.text);
    }

    int index_digit() {
        const Token& t = expect(Token::Type::Number, "an index in {0,1,2,3}");
        if (t.text.size() != 1 || t.text[0] < '0' || t.text[0] > '3')
            throw ParseError(t.position, "an index in {0,1,2,3}", "'" + t.text + "'");
        return t.text[0] - '0';
    }

    ExprPtr base() {
        const Token& t = peek();
        switch (t.type) {
            case Token::Type::Number: {
                advance();
                ExprNode n;
                n.kind = ExprNode::Kind::Rational;
                n.rational = Scalar::from_string(t.text);
                return make_node(std::move(n));
            }
            case Token::Type::Minus: {
                advance();
                ExprNode n;
                n.kind = ExprNode::Kind::Neg;
                n.children.push_back(factor());
                return make_node(std::move(n));
            }
            case Token::Type::LParen: {
                advance();
                ExprPtr inner = expr();
                expect(Token::Type::RParen, "')'");
                return inner;
            }
            case Token::Type::LBracket: {
                advance();
                ExprNode n;
                n.kind = ExprNode::Kind::Bracket;
                n.children.push_back(expr());
                expect(Token::Type::Comma, "','");
                n.children.push_back(expr());
                expect(Token::Type::RBracket, "']'");
                return make_node(std::move(n));
            }
            case Token::Type::Ident: {
                advance();
                if (t.text == "T" && peek().type == Token::Type::LParen) {
                    advance();
                    ExprNode n;
                    n.kind = ExprNode::Kind::Tensor;
                    n.children.push_back(expr());
                    expect(Token::Type::Comma, "','");
                    n.children.push_back(expr());
                    expect(Token::Type::RParen, "')'");
                    return make_node(std::move(n));
                }
                if (peek().type == Token::Type::LBracket &&
                    (t.text == "x" || t.text == "Xh" || t.text == "Ch")) {
                    advance();
                    ExprNode n;
                    n.kind = ExprNode::Kind::GenRef;
                    n.gen_domain = t.text;
                    n.gen_i = index_digit();
                    expect(Token::Type::Comma, "','");
                    n.gen_j = index_digit();
                    expect(Token::Type::RBracket, "']'");
                    return make_node(std::move(n));
                }
                ExprNode n;
                n.kind = ExprNode::Kind::Symbol;
                n.symbol = t.text;
                return make_node(std::move(n));
            }
            default:
                throw ParseError(t.position, "a factor",
                                 t.text.empty() ? "end of input" : "'" + t.text + "'");
        }
    }

    std::vector<Token> tokens_;
    size_t pos_ = 0;
};

const char* kind_name(const Value& v) {
    switch (v.index()) {
        case 0: return "scalar";
        case 1: return "A-element";
        case 2: return "sl2 element";
        case 3: return "Lie element";
    }
    return "?";
}

LHatElem to_lie(const Value& v) {
    if (const auto* l = std::get_if<LHatElem>(&v))
        return *l;
    if (const auto* s = std::get_if<Sl2Vec>(&v))
        return LHatElem::from_loop(tensor(*s, AElem(1)));
    throw EvalError(std::string("expected a Lie element, got ") + kind_name(v));
}

AElem to_a(const Value& v) {
    if (const auto* a = std::get_if<AElem>(&v))
        return *a;
    if (const auto* s = std::get_if<Scalar>(&v))
        return AElem(*s);
    throw EvalError(std::string("expected an A-element, got ") + kind_name(v));
}

Value add(const Value& a, const Value& b, int sign) {
    const Scalar sgn(sign);
    if (a.index() == 0 && b.index() == 0)
        return std::get<Scalar>(a) + sgn * std::get<Scalar>(b);
    if ((a.index() == 0 || a.index() == 1) && (b.index() == 0 || b.index() == 1))
        return to_a(a) + sgn * to_a(b);
    if (a.index() == 2 && b.index() == 2) {
        const auto& u = std::get<Sl2Vec>(a);
        const auto& v = std::get<Sl2Vec>(b);
        return sign > 0 ? u + v : u - v;
    }
    if (a.index() >= 2 && b.index() >= 2)
        return to_lie(a) + sgn * to_lie(b);
    throw EvalError(std::string("cannot add ") + kind_name(a) + " and " + kind_name(b));
}

Value multiply(const Value& a, const Value& b) {
    if (a.index() == 0) {
        const Scalar& s = std::get<Scalar>(a);
        if (b.index() == 0) return s * std::get<Scalar>(b);
        if (b.index() == 1) return s * std::get<AElem>(b);
        if (b.index() == 2) return s * std::get<Sl2Vec>(b);
        return s * std::get<LHatElem>(b);
    }
    if (b.index() == 0)
        return multiply(b, a);
    if (a.index() == 1 && b.index() == 1)
        return std::get<AElem>(a) * std::get<AElem>(b);
    throw EvalError(std::string("cannot multiply ") + kind_name(a) + " and " + kind_name(b) +
                    "; use T(,) to form tensors");
}

Value negate(const Value& v) {
    switch (v.index()) {
        case 0: return -std::get<Scalar>(v);
        case 1: return -std::get<AElem>(v);
        case 2: return -std::get<Sl2Vec>(v);
        default: return -std::get<LHatElem>(v);
    }
}

}  // namespace

ExprPtr parse(const std::string& text) {
    return Parser(Lexer(text).run()).run();
}

Value eval_expr(const ExprNode& node, const EvalOptions& opts) {
    const bool lhat = opts.model == BracketModel::Full;
    switch (node.kind) {
        case ExprNode::Kind::Rational:
            return node.rational;
        case ExprNode::Kind::Symbol: {
            const std::string& s = node.symbol;
            if (s == "t") return AElem::t();
            if (s == "tp" || s == "t'") return AElem::t_prime();
            if (s == "tpp" || s == "t''") return AElem::t_second();
            if (s == "X") return Sl2Vec::X();
            if (s == "Y") return Sl2Vec::Y();
            if (s == "Z") return Sl2Vec::Z();
            if (s == "e") return from_canonical({Scalar(1), Scalar(0), Scalar(0)});
            if (s == "f") return from_canonical({Scalar(0), Scalar(1), Scalar(0)});
            if (s == "h") return from_canonical({Scalar(0), Scalar(0), Scalar(1)});
            if (s == "c" || s == "cp" || s == "c'" || s == "cpp" || s == "c''") {
                if (!lhat)
                    throw EvalError("central symbol '" + s + "' is not available in model l");
                if (s == "c") return LHatElem::from_central(CentralVec::c_unit());
                if (s == "cp" || s == "c'") return LHatElem::from_central(CentralVec::cp_unit());
                return LHatElem::from_central(CentralVec::cpp_unit());
            }
            throw EvalError("unknown symbol '" + s + "'");
        }
        case ExprNode::Kind::GenRef: {
            if (node.gen_domain == "x") {
                if (opts.images == ImageSel::SigmaHat && lhat)
                    return sigma_hat(GenSym{xgen(node.gen_i, node.gen_j)});
                return LHatElem::from_loop(sigma(GenSym{xgen(node.gen_i, node.gen_j)}));
            }
            if (!lhat)
                throw EvalError("generator '" + node.gen_domain + "' requires model lhat");
            if (node.gen_domain == "Xh")
                return sigma_hat(GenSym{xgen(node.gen_i, node.gen_j)});
            return sigma_hat(GenSym{CGen{partition_of_pair(node.gen_i, node.gen_j)}});
        }
        case ExprNode::Kind::Pow: {
            const Value base = eval_expr(*node.children[0], opts);
            if (const auto* s = std::get_if<Scalar>(&base)) {
                Scalar r(1);
                const Scalar b = node.exponent < 0 ? s->reciprocal() : *s;
                for (int i = 0; i < std::abs(node.exponent); ++i)
                    r *= b;
                return r;
            }
            if (const auto* a = std::get_if<AElem>(&base)) {
                try {
                    return a->pow(node.exponent);
                } catch (const std::domain_error& e) {
                    throw EvalError(e.what());
                }
            }
            throw EvalError(std::string("cannot raise a ") + kind_name(base) + " to a power");
        }
        case ExprNode::Kind::Product: {
            Value acc = eval_expr(*node.children[0], opts);
            for (size_t i = 1; i < node.children.size(); ++i)
                acc = multiply(acc, eval_expr(*node.children[i], opts));
            return acc;
        }
        case ExprNode::Kind::Sum: {
            Value acc = eval_expr(*node.children[0], opts);
            if (node.signs[0] < 0)
                acc = negate(acc);
            for (size_t i = 1; i < node.children.size(); ++i)
                acc = add(acc, eval_expr(*node.children[i], opts), node.signs[i]);
            return acc;
        }
        case ExprNode::Kind::Neg:
            return negate(eval_expr(*node.children[0], opts));
        case ExprNode::Kind::Bracket: {
            const LHatElem a = to_lie(eval_expr(*node.children[0], opts));
            const LHatElem b = to_lie(eval_expr(*node.children[1], opts));
            if (lhat)
                return lhat_bracket(a, b);
            return LHatElem::from_loop(l_bracket(a.loop, b.loop));
        }
        case ExprNode::Kind::Tensor: {
            const Value left = eval_expr(*node.children[0], opts);
            const auto* s = std::get_if<Sl2Vec>(&left);
            if (!s)
                throw EvalError(std::string("T(,) needs an sl2 first argument, got ") +
                                kind_name(left));
            const AElem a = to_a(eval_expr(*node.children[1], opts));
            return LHatElem::from_loop(tensor(*s, a));
        }
    }
    throw std::logic_error("eval_expr: bad node kind");
}

std::string render(const Value& v) {
    switch (v.index()) {
        case 0: return std::get<Scalar>(v).str();
        case 1: return std::get<AElem>(v).str();
        case 2: return std::get<Sl2Vec>(v).str();
        default: return std::get<LHatElem>(v).str();
    }
}

}  // namespace tetra
