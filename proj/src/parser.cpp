#include "nsym/parser.hpp"

#include "nsym/calculus.hpp"
#include "nsym/elliptic.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>

namespace nsym {

// ---- lexer ------------------------------------------------------------

Parser::Parser(std::string text) : text_(std::move(text)) {
    space_ = std::make_shared<Space>();
    lex();
}

void Parser::lex() {
    std::size_t i = 0;
    int line = 1, col = 1;
    auto mkspan = [&](std::size_t b, std::size_t e, int l, int c) {
        return SourceSpan{b, e, l, c};
    };
    while (i < text_.size()) {
        char ch = text_[i];
        if (ch == '\n') {
            ++line;
            col = 1;
            ++i;
            continue;
        }
        if (std::isspace((unsigned char)ch)) {
            ++i;
            ++col;
            continue;
        }
        if (ch == '#') {  // comment to end of line
            while (i < text_.size() && text_[i] != '\n') ++i;
            continue;
        }
        std::size_t b = i;
        int bl = line, bc = col;
        if (std::isalpha((unsigned char)ch) || ch == '_') {
            while (i < text_.size() &&
                   (std::isalnum((unsigned char)text_[i]) || text_[i] == '_'))
                ++i, ++col;
            toks_.push_back({Token::T::Ident, text_.substr(b, i - b),
                             mkspan(b, i, bl, bc)});
            continue;
        }
        if (std::isdigit((unsigned char)ch)) {
            bool flt = false;
            while (i < text_.size() && std::isdigit((unsigned char)text_[i]))
                ++i, ++col;
            if (i < text_.size() && text_[i] == '.') {
                flt = true;
                ++i, ++col;
                while (i < text_.size() && std::isdigit((unsigned char)text_[i]))
                    ++i, ++col;
            }
            if (i < text_.size() && (text_[i] == 'e' || text_[i] == 'E')) {
                std::size_t save = i;
                int savec = col;
                ++i, ++col;
                if (i < text_.size() && (text_[i] == '+' || text_[i] == '-'))
                    ++i, ++col;
                if (i < text_.size() && std::isdigit((unsigned char)text_[i])) {
                    flt = true;
                    while (i < text_.size() &&
                           std::isdigit((unsigned char)text_[i]))
                        ++i, ++col;
                } else {
                    i = save;
                    col = savec;
                }
            }
            toks_.push_back({flt ? Token::T::Float : Token::T::Int,
                             text_.substr(b, i - b), mkspan(b, i, bl, bc)});
            continue;
        }
        if (ch == '-' && i + 1 < text_.size() && text_[i + 1] == '>') {
            toks_.push_back({Token::T::Punct, "->", mkspan(b, i + 2, bl, bc)});
            i += 2;
            col += 2;
            continue;
        }
        static const std::string punct = "+-*/^()[]{},;:=@<>";
        if (punct.find(ch) != std::string::npos) {
            toks_.push_back(
                {Token::T::Punct, std::string(1, ch), mkspan(b, i + 1, bl, bc)});
            ++i;
            ++col;
            continue;
        }
        throw ParseError(std::string("unexpected character '") + ch + "'",
                         mkspan(b, i + 1, bl, bc));
    }
    toks_.push_back({Token::T::End, "", mkspan(i, i, line, col)});
}

const Parser::Token& Parser::peek(int ahead) const {
    std::size_t k = pos_ + ahead;
    if (k >= toks_.size()) k = toks_.size() - 1;
    return toks_[k];
}

Parser::Token Parser::next() {
    Token t = peek();
    if (t.t != Token::T::End) ++pos_;
    return t;
}

bool Parser::accept(const std::string& p) {
    if (peek().t != Token::T::End && peek().s == p) {
        ++pos_;
        return true;
    }
    return false;
}

Parser::Token Parser::expect(const std::string& p, const char* what) {
    if (peek().s == p) return next();
    throw ParseError(std::string("expected '") + p + "' in " + what,
                     peek().span);
}

Parser::Token Parser::expect_ident(const char* what) {
    if (peek().t == Token::T::Ident) return next();
    throw ParseError(std::string("expected identifier in ") + what,
                     peek().span);
}

// ---- raw expression grammar ------------------------------------------------

RawNode Parser::r_expr() {
    RawNode lhs = r_term();
    while (peek().s == "+" || peek().s == "-") {
        char op = next().s[0];
        RawNode rhs = r_term();
        RawNode n{RawNode::Tag::Binary, lhs.span};
        n.op = op;
        n.span.end = rhs.span.end;
        n.kids = {std::move(lhs), std::move(rhs)};
        lhs = std::move(n);
    }
    return lhs;
}

RawNode Parser::r_term() {
    RawNode lhs = r_factor();
    while (peek().s == "*" || peek().s == "/") {
        char op = next().s[0];
        RawNode rhs = r_factor();
        RawNode n{RawNode::Tag::Binary, lhs.span};
        n.op = op;
        n.span.end = rhs.span.end;
        n.kids = {std::move(lhs), std::move(rhs)};
        lhs = std::move(n);
    }
    return lhs;
}

RawNode Parser::r_factor() {
    if (peek().s == "-") {
        SourceSpan sp = next().span;
        RawNode inner = r_factor();
        RawNode n{RawNode::Tag::Unary, sp};
        n.op = '-';
        n.span.end = inner.span.end;
        n.kids.push_back(std::move(inner));
        return n;
    }
    if (peek().s == "+") next();
    return r_postfix();
}

RawNode Parser::r_postfix() {
    RawNode base = r_primary();
    for (;;) {
        if (peek().s == "^") {
            next();
            bool neg = false;
            Token t = peek();
            if (t.s == "(") {
                next();
                if (accept("-")) neg = true;
                t = peek();
                if (t.t != Token::T::Int)
                    throw ParseError("expected integer exponent", t.span);
                next();
                expect(")", "exponent");
            } else if (t.s == "-") {
                next();
                neg = true;
                t = peek();
                if (t.t != Token::T::Int)
                    throw ParseError("expected integer exponent", t.span);
                next();
            } else {
                if (t.t != Token::T::Int)
                    throw ParseError("expected integer exponent", t.span);
                next();
            }
            RawNode n{RawNode::Tag::Binary, base.span};
            n.op = '^';
            n.expo = std::strtol(t.s.c_str(), nullptr, 10) * (neg ? -1 : 1);
            n.span.end = t.span.end;
            n.kids.push_back(std::move(base));
            base = std::move(n);
            continue;
        }
        if (peek().s == "@") {
            next();
            if (peek().s == "shift") {
                next();
                expect("(", "shift suffix");
                RawNode n{RawNode::Tag::Shift, base.span};
                n.kids.push_back(std::move(base));
                for (;;) {
                    Token axis = expect_ident("shift entry");
                    std::string sign = "+";
                    if (peek().s == "+" || peek().s == "-") sign = next().s;
                    RawNode off = r_term();
                    n.names.push_back(axis.s);
                    n.names.push_back(sign);
                    n.kids.push_back(std::move(off));
                    if (!accept(",")) break;
                }
                Token close = expect(")", "shift suffix");
                n.span.end = close.span.end;
                base = std::move(n);
                continue;
            }
            expect("(", "reflection suffix");
            RawNode n{RawNode::Tag::Reflect, base.span};
            n.kids.push_back(std::move(base));
            for (;;) {
                std::string sign = "+";
                if (accept("-")) sign = "-";
                Token axis = expect_ident("reflection suffix");
                n.names.push_back(sign + axis.s);
                if (!accept(",")) break;
            }
            Token close = expect(")", "reflection suffix");
            n.span.end = close.span.end;
            base = std::move(n);
            continue;
        }
        break;
    }
    return base;
}

RawNode Parser::r_primary() {
    Token t = peek();
    if (t.s == "(") {
        next();
        RawNode inner = r_expr();
        expect(")", "parenthesized expression");
        return inner;
    }
    if (t.t == Token::T::Int || t.t == Token::T::Float) {
        next();
        RawNode n{RawNode::Tag::Number, t.span};
        n.text = t.s;
        return n;
    }
    if (t.t == Token::T::Ident) {
        next();
        if (t.s == "D" && peek().s == "[") {
            next();
            RawNode n{RawNode::Tag::Jet, t.span};
            Token dep = expect_ident("derivative bracket");
            n.text = dep.s;
            while (accept(",")) {
                Token axis = expect_ident("derivative bracket");
                n.names.push_back(axis.s);
            }
            Token close = expect("]", "derivative bracket");
            n.span.end = close.span.end;
            if (n.names.empty())
                throw ParseError("derivative bracket needs at least one axis",
                                 n.span);
            return n;
        }
        if (peek().s == "(") {
            next();
            RawNode n{RawNode::Tag::Call, t.span};
            n.text = t.s;
            if (peek().s != ")") {
                n.kids.push_back(r_expr());
                while (accept(",")) n.kids.push_back(r_expr());
            }
            Token close = expect(")", "function call");
            n.span.end = close.span.end;
            return n;
        }
        RawNode n{RawNode::Tag::Ident, t.span};
        n.text = t.s;
        return n;
    }
    throw ParseError("expected expression", t.span);
}

// ---- raw evaluation (independent of canonical lowering) --------------------

std::string raw_print_key(const RawNode& n) {
    switch (n.tag) {
        case RawNode::Tag::Ident: return n.text;
        case RawNode::Tag::Jet: {
            std::string s = "D[" + n.text;
            for (const auto& a : n.names) s += "," + a;
            return s + "]";
        }
        case RawNode::Tag::Reflect: {
            std::string s = raw_print_key(n.kids[0]) + "@(";
            for (std::size_t i = 0; i < n.names.size(); ++i) {
                if (i) s += ",";
                s += n.names[i][0] == '-' ? n.names[i] : n.names[i].substr(1);
            }
            return s + ")";
        }
        case RawNode::Tag::Shift: return raw_print_key(n.kids[0]) + "@shift";
        case RawNode::Tag::Call:
            if (n.text == "conj") return "conj(" + raw_print_key(n.kids[0]) + ")";
            return n.text;
        default: return "?";
    }
}

std::complex<double> raw_eval(const RawNode& n, const RawEvalEnv& env) {
    using C = std::complex<double>;
    switch (n.tag) {
        case RawNode::Tag::Number: return C(std::strtod(n.text.c_str(), nullptr), 0);
        case RawNode::Tag::Ident: {
            if (n.text == "i") return C(0, 1);
            if (n.text == "pi") return C(M_PI, 0);
            auto it = env.values.find(n.text);
            if (it == env.values.end())
                throw EvalRawMissing(n.text);
            return it->second;
        }
        case RawNode::Tag::Unary: return -raw_eval(n.kids[0], env);
        case RawNode::Tag::Binary: {
            if (n.op == '^') {
                C b = raw_eval(n.kids[0], env);
                return std::pow(b, (double)n.expo);
            }
            C a = raw_eval(n.kids[0], env);
            C b = raw_eval(n.kids[1], env);
            switch (n.op) {
                case '+': return a + b;
                case '-': return a - b;
                case '*': return a * b;
                case '/': return a / b;
            }
            return {};
        }
        case RawNode::Tag::Call: {
            if (n.text == "conj") return std::conj(raw_eval(n.kids[0], env));
            C u = raw_eval(n.kids[0], env);
            if (n.text == "exp") return std::exp(u);
            if (n.text == "log") return std::log(u);
            if (n.text == "sqrt") return std::sqrt(u);
            if (n.text == "cbrt") return C(std::cbrt(u.real()), 0);
            if (n.text == "sin") return std::sin(u);
            if (n.text == "cos") return std::cos(u);
            if (n.text == "sech") return 1.0 / std::cosh(u);
            if (n.text == "abs") return C(std::abs(u), 0);
            if (n.text == "sn") {
                C m = raw_eval(n.kids[1], env);
                return C(jacobi_ext(u.real(), m.real()).sn, 0);
            }
            throw EvalRawMissing(n.text);
        }
        case RawNode::Tag::Jet:
        case RawNode::Tag::Reflect:
        case RawNode::Tag::Shift: {
            // keyed by printed form, e.g. "q", "D[q,x]", "q@(-x,t)"
            std::string key = raw_print_key(n);
            auto it = env.values.find(key);
            if (it == env.values.end()) throw EvalRawMissing(key);
            return it->second;
        }
    }
    return {};
}

// ---- lowering ---------------------------------------------------------------

namespace {

const std::map<std::string, Fn> kFnNames = {
    {"exp", Fn::Exp}, {"log", Fn::Log}, {"sqrt", Fn::Sqrt},
    {"cbrt", Fn::Cbrt}, {"sin", Fn::Sin}, {"cos", Fn::Cos},
    {"abs", Fn::Abs}, {"sn", Fn::Sn},
};

}  // namespace

JetAtom Parser::lower_jet_atom(const RawNode& n, const char* what) {
    Expr e = lower(n);
    if (e.kind() != Kind::Jet)
        throw ParseError(std::string("expected a jet coordinate in ") + what,
                         n.span);
    return e.node().jet;
}

Expr Parser::lower(const RawNode& n) {
    switch (n.tag) {
        case RawNode::Tag::Number: {
            if (n.text.find('.') != std::string::npos ||
                n.text.find('e') != std::string::npos ||
                n.text.find('E') != std::string::npos)
                throw ParseError("decimal literal in an exact expression",
                                 n.span);
            return make_num(GQ(Rat(n.text)));
        }
        case RawNode::Tag::Ident: {
            if (n.text == "i") return make_i();
            if (n.text == "pi") return make_pi();
            int v = space_->var_index(n.text);
            if (v >= 0) return make_var(v);
            int d = space_->dep_index(n.text);
            if (d >= 0) {
                JetAtom j;
                j.dep = d;
                return make_jet(std::move(j));
            }
            return make_param(space_->add_param(n.text));
        }
        case RawNode::Tag::Unary: return -lower(n.kids[0]);
        case RawNode::Tag::Binary: {
            if (n.op == '^') return make_pow(lower(n.kids[0]), n.expo);
            Expr a = lower(n.kids[0]);
            Expr b = lower(n.kids[1]);
            switch (n.op) {
                case '+': return a + b;
                case '-': return a - b;
                case '*': return a * b;
                case '/':
                    if (b.is_zero())
                        throw ParseError("division by zero", n.span);
                    return make_mul({a, make_pow(b, -1)});
            }
            return zero();
        }
        case RawNode::Tag::Call: {
            if (n.text == "conj") {
                if (n.kids.size() != 1)
                    throw ParseError("conj takes one argument", n.span);
                return conjugate(lower(n.kids[0]), *space_);
            }
            if (n.text == "sech") {
                if (n.kids.size() != 1)
                    throw ParseError("sech takes one argument", n.span);
                Expr u = lower(n.kids[0]);
                Expr den = make_fun(Fn::Exp, {u}) + make_fun(Fn::Exp, {-u});
                return make_mul({make_int(2), make_pow(den, -1)});
            }
            auto it = kFnNames.find(n.text);
            if (it == kFnNames.end())
                throw ParseError("unknown function '" + n.text + "'", n.span);
            std::size_t want = it->second == Fn::Sn ? 2 : 1;
            if (n.kids.size() != want)
                throw ParseError("wrong arity for '" + n.text + "'", n.span);
            std::vector<Expr> args;
            for (const auto& k : n.kids) args.push_back(lower(k));
            return make_fun(it->second, std::move(args));
        }
        case RawNode::Tag::Jet: {
            int d = space_->dep_index(n.text);
            if (d < 0)
                throw ParseError("unknown dependent variable '" + n.text + "'",
                                 n.span);
            JetAtom j;
            j.dep = d;
            for (const auto& axis : n.names) {
                int a = space_->var_index(axis);
                if (a < 0)
                    throw ParseError("unknown variable '" + axis + "'", n.span);
                if (j.J[a] == 255)
                    throw ParseError("derivative order overflow", n.span);
                j.J[a]++;
            }
            return make_jet(std::move(j));
        }
        case RawNode::Tag::Reflect: {
            Expr inner = lower(n.kids[0]);
            if (inner.kind() != Kind::Jet || inner.node().jet.reflect ||
                !inner.node().jet.composed.is_null())
                throw ParseError(
                    "reflection suffix applies to a dependent coordinate",
                    n.span);
            if ((int)n.names.size() != space_->axes())
                throw ParseError("reflection suffix must list every variable",
                                 n.span);
            JetAtom j = inner.node().jet;
            bool cj = j.conj;
            for (int a = 0; a < space_->axes(); ++a) {
                const std::string& entry = n.names[a];
                std::string want = space_->vars[a];
                if (entry == "-" + want)
                    j.reflect |= (1u << a);
                else if (entry != "+" + want)
                    throw ParseError("reflection suffix out of order", n.span);
            }
            j.conj = cj;
            return make_jet(std::move(j));
        }
        case RawNode::Tag::Shift: {
            Expr inner = lower(n.kids[0]);
            if (inner.kind() != Kind::Jet ||
                !inner.node().jet.composed.is_null())
                throw ParseError(
                    "shift suffix applies to a dependent coordinate", n.span);
            JetAtom j = inner.node().jet;
            j.shifts.assign(space_->axes(), PiLin{});
            for (std::size_t k = 0; k + 1 < n.names.size(); k += 2) {
                int a = space_->var_index(n.names[k]);
                if (a < 0)
                    throw ParseError("unknown variable '" + n.names[k] + "'",
                                     n.span);
                Expr off = lower(n.kids[1 + k / 2]);
                if (n.names[k + 1] == "-") off = -off;
                PiLin s;
                bool ok = true;
                if (off.is_num()) {
                    s.a = off.num();
                } else if (off.kind() == Kind::Sym &&
                           off.node().sym.type == SymType::Pi) {
                    s.b = GQ(1);
                } else if (off.kind() == Kind::Mul) {
                    auto [c, core] = split_coeff(off);
                    if (core.kind() == Kind::Sym &&
                        core.node().sym.type == SymType::Pi)
                        s.b = c;
                    else
                        ok = false;
                } else if (off.kind() == Kind::Add) {
                    for (const auto& t : sum_terms(off)) {
                        auto [c, core] = split_coeff(t);
                        if (core.is_one())
                            s.a = s.a + c;
                        else if (core.kind() == Kind::Sym &&
                                 core.node().sym.type == SymType::Pi)
                            s.b = s.b + c;
                        else
                            ok = false;
                    }
                } else {
                    ok = false;
                }
                if (!ok)
                    throw ParseError(
                        "shift must be an exact constant plus a multiple of pi",
                        n.span);
                j.shifts[a] = s;
            }
            bool all_zero = true;
            for (const auto& s : j.shifts) all_zero &= s.is_zero();
            if (all_zero) j.shifts.clear();
            return make_jet(std::move(j));
        }
    }
    return zero();
}

// ---- file items --------------------------------------------------------------

void Parser::parse_decls() {
    for (;;) {
        if (peek().s == "vars") {
            next();
            do {
                Token t = expect_ident("vars declaration");
                if ((int)space_->vars.size() >= kMaxAxes)
                    throw ParseError("too many independent variables", t.span);
                space_->vars.push_back(t.s);
            } while (accept(","));
            expect(";", "vars declaration");
            continue;
        }
        if (peek().s == "deps") {
            next();
            do {
                Token t = expect_ident("deps declaration");
                bool cplx = false;
                if (accept(":")) {
                    Token k = expect_ident("deps declaration");
                    if (k.s == "complex")
                        cplx = true;
                    else if (k.s != "real")
                        throw ParseError("expected 'complex' or 'real'", k.span);
                }
                space_->add_dep(t.s, cplx);
            } while (accept(","));
            expect(";", "deps declaration");
            continue;
        }
        if (peek().s == "params") {
            next();
            do {
                Token t = expect_ident("params declaration");
                bool real = true;
                if (accept(":")) {
                    Token k = expect_ident("params declaration");
                    if (k.s == "complex")
                        real = false;
                    else if (k.s != "real")
                        throw ParseError("expected 'complex' or 'real'", k.span);
                }
                space_->params.push_back({t.s, real});
            } while (accept(","));
            expect(";", "params declaration");
            continue;
        }
        break;
    }
}

double Parser::numeric_value() {
    bool neg = accept("-");
    Token t = next();
    if (t.t != Token::T::Int && t.t != Token::T::Float)
        throw ParseError("expected a numeric value", t.span);
    double v = std::strtod(t.s.c_str(), nullptr);
    if (t.t == Token::T::Int && peek().s == "/") {
        next();
        Token d = next();
        if (d.t != Token::T::Int)
            throw ParseError("expected a denominator", d.span);
        v /= std::strtod(d.s.c_str(), nullptr);
    }
    return neg ? -v : v;
}

ParsedGenerator Parser::parse_gen_block() {
    ParsedGenerator g;
    if (peek().t == Token::T::Ident && peek(1).s == "{") g.name = next().s;
    expect("{", "generator block");
    g.xi.assign(space_->axes(), zero());
    g.phi.assign(space_->deps.size(), zero());
    while (!accept("}")) {
        Token key = expect_ident("generator block");
        expect(":", "generator component");
        RawNode raw = r_expr();
        Expr e = lower(raw);
        expect(";", "generator component");
        bool ok = false;
        if (key.s.rfind("xi_", 0) == 0) {
            int a = space_->var_index(key.s.substr(3));
            if (a >= 0) {
                g.xi[a] = e;
                ok = true;
            }
        } else if (key.s.rfind("phi_", 0) == 0) {
            int d = space_->dep_index(key.s.substr(4));
            if (d >= 0) {
                g.phi[d] = e;
                ok = true;
            }
        }
        if (!ok)
            throw ParseError("unknown generator component '" + key.s + "'",
                             key.span);
    }
    return g;
}

void Parser::parse_item(ParsedFile& out) {
    Token t = peek();
    if (t.s == "eq") {
        next();
        Token name = expect_ident("equation");
        expect(":", "equation");
        RawNode raw = r_expr();
        Expr lhs = lower(raw);
        expect("=", "equation");
        RawNode rraw = r_expr();
        Expr rhs = lower(rraw);
        expect(";", "equation");
        out.equations.push_back({name.s, lhs - rhs, raw.span});
        return;
    }
    if (t.s == "expect") {
        next();
        Token name = expect_ident("expected form");
        expect(":", "expected form");
        RawNode raw = r_expr();
        Expr lhs = lower(raw);
        expect("=", "expected form");
        Expr rhs = lower(r_expr());
        expect(";", "expected form");
        out.expects.push_back({name.s, lhs - rhs, raw.span});
        return;
    }
    if (t.s == "solve") {
        next();
        RawNode raw = r_postfix();
        JetAtom j = lower_jet_atom(raw, "solve directive");
        Token from = expect_ident("solve directive");
        if (from.s != "from")
            throw ParseError("expected 'from'", from.span);
        Token eq = expect_ident("solve directive");
        expect(";", "solve directive");
        out.solves.push_back({std::move(j), eq.s, raw.span});
        return;
    }
    if (t.s == "gen") {
        next();
        out.generators.push_back(parse_gen_block());
        return;
    }
    if (t.s == "solution") {
        next();
        Token dep = expect_ident("solution");
        int d = space_->dep_index(dep.s);
        if (d < 0)
            throw ParseError("unknown dependent variable '" + dep.s + "'",
                             dep.span);
        expect("=", "solution");
        Expr e = lower(r_expr());
        expect(";", "solution");
        out.solution = {d, e};
        return;
    }
    if (t.s == "param") {
        next();
        Token name = expect_ident("param assignment");
        expect("=", "param assignment");
        double v = numeric_value();
        expect(";", "param assignment");
        out.param_values[space_->add_param(name.s)] = v;
        return;
    }
    if (t.s == "domain") {
        next();
        Token var = expect_ident("domain");
        int a = space_->var_index(var.s);
        if (a < 0)
            throw ParseError("unknown variable '" + var.s + "'", var.span);
        Token in = expect_ident("domain");
        if (in.s != "in") throw ParseError("expected 'in'", in.span);
        expect("[", "domain");
        double lo = numeric_value();
        expect(",", "domain");
        double hi = numeric_value();
        expect("]", "domain");
        expect(";", "domain");
        out.domain = {a, lo, hi};
        return;
    }
    if (t.s == "tolerance") {
        next();
        out.tolerance = numeric_value();
        expect(";", "tolerance");
        return;
    }
    if (t.s == "quadrature") {
        next();
        expect(";", "quadrature marker");
        out.quadrature = true;
        return;
    }
    throw ParseError("unexpected item '" + t.s + "'", t.span);
}

ParsedFile Parser::parse_file() {
    ParsedFile out;
    parse_decls();
    out.space = space_;
    while (peek().t != Token::T::End) parse_item(out);
    return out;
}

Expr Parser::parse_expression(const std::string& text, SpacePtr space) {
    Parser p(text);
    p.space_ = std::move(space);
    RawNode raw = p.r_expr();
    if (p.peek().t != Token::T::End)
        throw ParseError("trailing input after expression", p.peek().span);
    return p.lower(raw);
}

RawNode Parser::parse_raw(const std::string& text) {
    Parser p(text);
    RawNode raw = p.r_expr();
    if (p.peek().t != Token::T::End)
        throw ParseError("trailing input after expression", p.peek().span);
    return raw;
}

}  // namespace nsym
