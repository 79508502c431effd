#include "ringgb/parser.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "ringgb/error.hpp"

namespace ringgb {

namespace {

struct Token {
    enum class Kind { Int, Ident, Sym, End };
    Kind kind = Kind::End;
    std::string text;
    int column = 0;
};

class Lexer {
public:
    Lexer(const std::string& src, int line) : src_(src), line_(line) { advance(); }

    const Token& peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        advance();
        return t;
    }
    int line() const { return line_; }

    [[noreturn]] void fail(const std::string& what) const {
        raise(Errc::SyntaxError, what, line_, tok_.kind == Token::Kind::End ? col_ : tok_.column);
    }

private:
    void advance() {
        while (pos_ < src_.size() && (src_[pos_] == ' ' || src_[pos_] == '\t')) ++pos_;
        col_ = static_cast<int>(pos_) + 1;
        if (pos_ >= src_.size() || src_[pos_] == '#') {
            tok_ = Token{Token::Kind::End, "", col_};
            return;
        }
        char c = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
            tok_ = Token{Token::Kind::Int, src_.substr(start, pos_ - start), col_};
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos_;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
                ++pos_;
            tok_ = Token{Token::Kind::Ident, src_.substr(start, pos_ - start), col_};
            return;
        }
        static const std::string syms = "+-*^()/,[]";
        if (syms.find(c) != std::string::npos) {
            ++pos_;
            tok_ = Token{Token::Kind::Sym, std::string(1, c), col_};
            return;
        }
        raise(Errc::SyntaxError, std::string("unexpected character '") + c + "'", line_, col_);
    }

    const std::string& src_;
    int line_;
    size_t pos_ = 0;
    int col_ = 1;
    Token tok_;
};

bool is_sym(const Token& t, char c) {
    return t.kind == Token::Kind::Sym && t.text.size() == 1 && t.text[0] == c;
}

struct EvalContext {
    RingDescriptor scalar; // ring itself, or base field of a tower
    RingDescriptor ring;   // declared ring
    int nx = 0;
    int ntheta = 0;
    std::vector<std::string> joint_names;

    int joint_vars() const { return nx + ntheta; }
};

EvalContext make_context(const RingDescriptor& ring, const std::vector<std::string>& vars) {
    EvalContext ctx;
    ctx.ring = ring;
    ctx.nx = static_cast<int>(vars.size());
    ctx.joint_names = vars;
    if (ring.kind == RingDescriptor::Kind::PolyOverField) {
        ctx.scalar = ring.base_ring();
        ctx.ntheta = ring.theta_count();
        ctx.joint_names.insert(ctx.joint_names.end(), ring.theta_vars.begin(),
                               ring.theta_vars.end());
    } else {
        ctx.scalar = ring;
    }
    return ctx;
}

class PolyParser {
public:
    PolyParser(Lexer& lex, const EvalContext& ctx) : lex_(lex), ctx_(ctx) {}

    Polynomial parse() {
        Polynomial p = expr();
        if (lex_.peek().kind != Token::Kind::End) lex_.fail("trailing input after polynomial");
        return p;
    }

private:
    Polynomial expr() {
        bool neg = false;
        if (is_sym(lex_.peek(), '+') || is_sym(lex_.peek(), '-')) neg = lex_.take().text == "-";
        Polynomial acc = term();
        if (neg) acc = -acc;
        while (is_sym(lex_.peek(), '+') || is_sym(lex_.peek(), '-')) {
            bool minus = lex_.take().text == "-";
            Polynomial t = term();
            acc = minus ? acc - t : acc + t;
        }
        return acc;
    }

    Polynomial term() {
        Polynomial acc = factor();
        while (is_sym(lex_.peek(), '*')) {
            lex_.take();
            acc = acc * factor();
        }
        return acc;
    }

    Polynomial factor() {
        Polynomial base = primary();
        if (is_sym(lex_.peek(), '^')) {
            lex_.take();
            if (lex_.peek().kind != Token::Kind::Int) lex_.fail("expected exponent");
            Token e = lex_.take();
            long exp = std::stol(e.text);
            if (exp > 4096) raise(Errc::SyntaxError, "exponent too large", lex_.line(), e.column);
            Polynomial acc = constant_poly(ctx_.scalar, ctx_.joint_vars(), re_one(ctx_.scalar));
            for (long i = 0; i < exp; ++i) acc = acc * base;
            return acc;
        }
        return base;
    }

    Polynomial primary() {
        const Token& t = lex_.peek();
        if (t.kind == Token::Kind::Int) {
            Token num = lex_.take();
            Int a(num.text);
            if (is_sym(lex_.peek(), '/')) {
                lex_.take();
                if (lex_.peek().kind != Token::Kind::Int) lex_.fail("expected denominator");
                Token den = lex_.take();
                Int b(den.text);
                return constant_poly(ctx_.scalar, ctx_.joint_vars(), ratio(a, b, den.column));
            }
            return constant_poly(ctx_.scalar, ctx_.joint_vars(), re_from_int(ctx_.scalar, a));
        }
        if (t.kind == Token::Kind::Ident) {
            Token id = lex_.take();
            auto it = std::find(ctx_.joint_names.begin(), ctx_.joint_names.end(), id.text);
            if (it == ctx_.joint_names.end())
                raise(Errc::UnknownVariable, "unknown variable '" + id.text + "'", lex_.line(),
                      id.column);
            int idx = static_cast<int>(it - ctx_.joint_names.begin());
            Monomial m = Monomial::one(ctx_.joint_vars());
            m[idx] = 1;
            return mono_poly(ctx_.scalar, m, re_one(ctx_.scalar));
        }
        if (is_sym(t, '(')) {
            lex_.take();
            Polynomial inner = expr();
            if (!is_sym(lex_.peek(), ')')) lex_.fail("expected ')'");
            lex_.take();
            return inner;
        }
        lex_.fail("expected a coefficient, variable, or '('");
    }

    RingElement ratio(const Int& a, const Int& b, int col) {
        if (b == 0) raise(Errc::SyntaxError, "zero denominator", lex_.line(), col);
        switch (ctx_.scalar.kind) {
        case RingDescriptor::Kind::Rationals:
            return RingElement(Rat(a) / Rat(b));
        case RingDescriptor::Kind::PrimeField: {
            Int bm = int_mod_prime(b, ctx_.scalar.prime);
            if (bm == 0)
                raise(Errc::CoefficientOutOfRing, "denominator vanishes modulo the field prime",
                      lex_.line(), col);
            return RingElement(
                RingElement::Fp{int_mod_prime(a * int_inv_mod(bm, ctx_.scalar.prime), ctx_.scalar.prime)});
        }
        case RingDescriptor::Kind::Integers: {
            if (a % b != 0)
                raise(Errc::CoefficientOutOfRing, "rational coefficient over Z", lex_.line(), col);
            return RingElement(Int(a / b));
        }
        default:
            raise(Errc::Internal, "scalar ring expected");
        }
    }

    Lexer& lex_;
    const EvalContext& ctx_;
};

Polynomial finish(const Polynomial& joint, const EvalContext& ctx) {
    if (ctx.ring.kind == RingDescriptor::Kind::PolyOverField)
        return joint_to_split(joint, ctx.ring, ctx.nx);
    return joint;
}

std::string strip(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::string strip_comment(const std::string& s) {
    size_t h = s.find('#');
    return h == std::string::npos ? s : s.substr(0, h);
}

MonomialOrder::Kind parse_order_kind(Lexer& lex) {
    if (lex.peek().kind != Token::Kind::Ident) lex.fail("expected order name");
    Token t = lex.take();
    if (t.text == "lex") return MonomialOrder::Kind::Lex;
    if (t.text == "grevlex") return MonomialOrder::Kind::GrevLex;
    raise(Errc::SyntaxError, "unknown order '" + t.text + "' (expected lex or grevlex)",
          lex.line(), t.column);
}

std::vector<std::string> parse_name_list(Lexer& lex) {
    std::vector<std::string> names;
    while (lex.peek().kind != Token::Kind::End) {
        if (lex.peek().kind != Token::Kind::Ident) lex.fail("expected a variable name");
        Token id = lex.take();
        if (id.text == "ring" || id.text == "vars" || id.text == "order")
            raise(Errc::SyntaxError, "'" + id.text + "' is reserved", lex.line(), id.column);
        if (std::find(names.begin(), names.end(), id.text) != names.end())
            raise(Errc::SyntaxError, "duplicate variable '" + id.text + "'", lex.line(), id.column);
        names.push_back(id.text);
        if (is_sym(lex.peek(), ',')) lex.take();
    }
    if (names.empty()) lex.fail("expected at least one variable name");
    return names;
}

RingDescriptor parse_ring_spec(Lexer& lex) {
    if (lex.peek().kind != Token::Kind::Ident) lex.fail("expected ring name");
    Token head = lex.take();

    bool prime_base = false;
    Int p = 0;
    if (head.text == "GF") {
        if (!is_sym(lex.peek(), '(')) lex.fail("expected '(' after GF");
        lex.take();
        if (lex.peek().kind != Token::Kind::Int) lex.fail("expected prime");
        p = Int(lex.take().text);
        if (!is_sym(lex.peek(), ')')) lex.fail("expected ')'");
        lex.take();
        prime_base = true;
    } else if (head.text != "Z" && head.text != "Q") {
        raise(Errc::UnsupportedRing, "unknown ring '" + head.text + "'", lex.line(), head.column);
    }

    if (!is_sym(lex.peek(), '[')) {
        if (head.text == "Z") return RingDescriptor::integers();
        if (head.text == "Q") return RingDescriptor::rationals();
        return RingDescriptor::prime_field(p);
    }

    if (head.text == "Z")
        raise(Errc::UnsupportedRing, "polynomial coefficients over Z are not supported",
              lex.line(), head.column);
    lex.take();
    std::vector<std::string> thetas;
    while (!is_sym(lex.peek(), ']')) {
        if (lex.peek().kind != Token::Kind::Ident) lex.fail("expected a coefficient variable name");
        thetas.push_back(lex.take().text);
        if (is_sym(lex.peek(), ',')) lex.take();
    }
    lex.take(); // ']'
    if (thetas.empty()) lex.fail("expected at least one coefficient variable");

    MonomialOrder theta_order = MonomialOrder::lex();
    if (lex.peek().kind == Token::Kind::Ident && lex.peek().text == "order") {
        lex.take();
        theta_order.kind = parse_order_kind(lex);
        if (theta_order.kind == MonomialOrder::Kind::GrevLex) theta_order = MonomialOrder::grevlex();
    }

    return prime_base ? RingDescriptor::poly_over_prime_field(p, thetas, theta_order)
                      : RingDescriptor::poly_over_rationals(thetas, theta_order);
}

} // namespace

Polynomial parse_polynomial(const std::string& text, const RingDescriptor& ring,
                            const std::vector<std::string>& vars, int line) {
    EvalContext ctx = make_context(ring, vars);
    Lexer lex(text, line);
    PolyParser pp(lex, ctx);
    return finish(pp.parse(), ctx);
}

ProblemFile parse_problem_file(const std::string& text) {
    ProblemFile pf;
    bool have_ring = false, have_vars = false, have_order = false;
    enum class Section { Polynomials, OrderIdeal, LatticeVectors, Probe };
    Section section = Section::Polynomials;

    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = strip(strip_comment(raw));
        if (line.empty()) continue;

        if (line[0] == '[') {
            std::string name = strip(line.substr(1, line.find(']') == std::string::npos
                                                        ? std::string::npos
                                                        : line.find(']') - 1));
            if (line.back() != ']')
                raise(Errc::SyntaxError, "expected ']'", lineno, static_cast<int>(line.size()));
            if (name == "order_ideal") {
                section = Section::OrderIdeal;
                pf.has_order_ideal = true;
            } else if (name == "lattice_vectors") {
                section = Section::LatticeVectors;
                pf.has_lattice_vectors = true;
            } else if (name == "probe") {
                section = Section::Probe;
            } else {
                raise(Errc::SyntaxError, "unknown section [" + name + "]", lineno, 1);
            }
            continue;
        }

        Lexer lex(line, lineno);
        if (lex.peek().kind == Token::Kind::Ident && section == Section::Polynomials) {
            const std::string& word = lex.peek().text;
            if (word == "ring") {
                lex.take();
                pf.ring = parse_ring_spec(lex);
                if (lex.peek().kind != Token::Kind::End) lex.fail("trailing input after ring");
                have_ring = true;
                continue;
            }
            if (word == "vars") {
                lex.take();
                pf.vars = parse_name_list(lex);
                have_vars = true;
                continue;
            }
            if (word == "order" && !have_order) {
                lex.take();
                MonomialOrder::Kind k = parse_order_kind(lex);
                pf.order = k == MonomialOrder::Kind::Lex ? MonomialOrder::lex()
                                                         : MonomialOrder::grevlex();
                if (lex.peek().kind != Token::Kind::End) lex.fail("trailing input after order");
                have_order = true;
                continue;
            }
        }

        if (!have_ring) raise(Errc::SyntaxError, "ring must be declared first", lineno, 1);
        if (!have_vars) raise(Errc::SyntaxError, "vars must be declared before polynomials", lineno, 1);
        if (pf.ring.kind == RingDescriptor::Kind::PolyOverField) {
            for (const auto& v : pf.vars)
                if (std::find(pf.ring.theta_vars.begin(), pf.ring.theta_vars.end(), v) !=
                    pf.ring.theta_vars.end())
                    raise(Errc::SyntaxError, "variable '" + v + "' collides with a coefficient variable",
                          lineno, 1);
        }

        switch (section) {
        case Section::Polynomials:
            pf.polynomials.push_back(parse_polynomial(line, pf.ring, pf.vars, lineno));
            break;
        case Section::Probe:
            pf.probes.push_back(parse_polynomial(line, pf.ring, pf.vars, lineno));
            break;
        case Section::OrderIdeal: {
            Polynomial p = parse_polynomial(line, pf.ring, pf.vars, lineno);
            if (p.term_count() != 1 || !re_is_one(pf.ring, p.terms().begin()->second))
                raise(Errc::SyntaxError, "order ideal entries must be plain monomials", lineno, 1);
            pf.order_ideal.push_back(p.terms().begin()->first);
            break;
        }
        case Section::LatticeVectors: {
            std::vector<Int> v;
            Lexer vl(line, lineno);
            bool neg = false;
            while (vl.peek().kind != Token::Kind::End) {
                if (is_sym(vl.peek(), '-')) {
                    vl.take();
                    neg = true;
                    continue;
                }
                if (vl.peek().kind != Token::Kind::Int) vl.fail("expected an integer entry");
                Int z(vl.take().text);
                v.push_back(neg ? Int(-z) : z);
                neg = false;
                if (is_sym(vl.peek(), ',')) vl.take();
            }
            if (v.size() != pf.vars.size())
                raise(Errc::SyntaxError, "lattice vector length must match the variable count",
                      lineno, 1);
            pf.lattice_vectors.push_back(std::move(v));
            break;
        }
        }
    }

    if (!have_ring) raise(Errc::SyntaxError, "missing ring declaration", lineno ? lineno : 1, 1);
    if (!have_vars) raise(Errc::SyntaxError, "missing vars declaration", lineno ? lineno : 1, 1);
    return pf;
}

} // namespace ringgb
