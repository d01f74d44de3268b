#include "nsym/printer.hpp"

namespace nsym {

namespace {

std::string print_rec(const Expr& e, const Space& sp, int parens);

// parens levels: 0 bare, 1 inside sum context, 2 inside product, 3 power base

Expr term_negated(const GQ& c, const Expr& core) {
    if (core.is_one()) return make_num(-c);
    if ((-c).is_one()) return core;
    return make_mul({make_num(-c), core});
}

std::string coeff_str(const GQ& c) {
    if (c.is_real()) return rat_to_string(c.re);
    if (sgn(c.re) == 0) {
        if (c.im == 1) return "i";
        if (c.im == -1) return "-i";
        return rat_to_string(c.im) + "*i";
    }
    return "(" + gq_to_string(c) + ")";
}

std::string jet_str(const JetAtom& j, const Space& sp) {
    std::string body;
    const std::string& dep = sp.deps.at(j.dep).name;
    if (!j.composed.is_null()) {
        body = "Dc[" + dep + ";" + std::to_string(int(j.J[0])) + "](" +
               print_rec(j.composed, sp, 0) + ")";
    } else if (j.order() == 0) {
        body = dep;
    } else {
        body = "D[" + dep;
        for (int a = 0; a < sp.axes(); ++a)
            for (int k = 0; k < j.J[a]; ++k) body += "," + sp.vars[a];
        body += "]";
    }
    if (j.reflect) {
        body += "@(";
        for (int a = 0; a < sp.axes(); ++a) {
            if (a) body += ",";
            if (j.reflect & (1u << a)) body += "-";
            body += sp.vars[a];
        }
        body += ")";
    }
    if (j.has_shift()) {
        body += "@shift(";
        bool first = true;
        for (int a = 0; a < (int)j.shifts.size(); ++a) {
            if (j.shifts[a].is_zero()) continue;
            if (!first) body += ",";
            first = false;
            std::string s = print_pilin(j.shifts[a]);
            body += sp.vars[a] + (s[0] == '-' ? s : "+" + s);
        }
        body += ")";
    }
    if (j.conj) body = "conj(" + body + ")";
    return body;
}

std::string sym_str(const SymAtom& s, const Space& sp) {
    switch (s.type) {
        case SymType::Var: return sp.vars.at(s.id);
        case SymType::Pi: return "pi";
        case SymType::Param: {
            const std::string& n = sp.params.at(s.id).name;
            return s.conj ? "conj(" + n + ")" : n;
        }
    }
    return "?";
}

std::string print_rec(const Expr& e, const Space& sp, int parens) {
    const ExprNode& n = e.node();
    switch (n.kind) {
        case Kind::Num: {
            std::string s = gq_to_string(n.num);
            bool needs = (parens >= 2 && (!n.num.is_real() || sgn(n.num.re) < 0)) ||
                         (parens == 1 && !n.num.is_real() && sgn(n.num.re) != 0);
            return needs ? "(" + s + ")" : s;
        }
        case Kind::Sym: return sym_str(n.sym, sp);
        case Kind::Jet: return jet_str(n.jet, sp);
        case Kind::Fun: {
            std::string s = fn_name(n.fn);
            s += "(";
            for (std::size_t i = 0; i < n.args.size(); ++i) {
                if (i) s += ",";
                s += print_rec(n.args[i], sp, 0);
            }
            return s + ")";
        }
        case Kind::Pow: {
            std::string b = print_rec(n.base, sp, 3);
            if (n.base.kind() == Kind::Add) b = "(" + b + ")";
            std::string ex = std::to_string(n.expo);
            if (n.expo < 0) ex = "(" + ex + ")";
            return b + "^" + ex;
        }
        case Kind::Mul: {
            auto [c, core] = split_coeff(e);
            std::string s;
            if (c == GQ(-1))
                s = "-";
            else if (!c.is_one())
                s = coeff_str(c) + "*";
            const auto factors = mul_factors(core);
            for (std::size_t i = 0; i < factors.size(); ++i) {
                if (i) s += "*";
                std::string f = print_rec(factors[i], sp, 2);
                if (factors[i].kind() == Kind::Add) f = "(" + f + ")";
                s += f;
            }
            if (parens >= 2 || (parens == 1 && s[0] == '-')) s = "(" + s + ")";
            return s;
        }
        case Kind::Add: {
            std::string s;
            bool first = true;
            for (const auto& t : n.kids) {
                auto [c, core] = split_coeff(t);
                if (!first && c.is_real() && sgn(c.re) < 0) {
                    s += " - " + print_rec(term_negated(c, core), sp, 1);
                } else {
                    if (!first) s += " + ";
                    s += print_rec(t, sp, 1);
                }
                first = false;
            }
            if (parens >= 1) s = "(" + s + ")";
            return s;
        }
    }
    return "?";
}

}  // namespace

std::string print_pilin(const PiLin& s) {
    std::string out;
    if (!s.a.is_zero()) out = gq_to_string(s.a);
    if (!s.b.is_zero()) {
        std::string bp;
        if (s.b.is_one())
            bp = "pi";
        else if ((-s.b).is_one())
            bp = "-pi";
        else
            bp = gq_to_string(s.b) + "*pi";
        if (!out.empty() && bp[0] != '-') out += "+";
        out += bp;
    }
    if (out.empty()) out = "0";
    return out;
}

std::string print_expr(const Expr& e, const Space& sp) {
    return print_rec(e, sp, 0);
}

}  // namespace nsym
