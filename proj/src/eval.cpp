#include "nsym/eval.hpp"

#include "nsym/elliptic.hpp"

#include <cmath>

namespace nsym {

namespace {

double to_double(const Rat& q) { return mpq_get_d(q.get_mpq_t()); }

Cplx to_cplx(const GQ& v) { return {to_double(v.re), to_double(v.im)}; }

Cplx eval_fn(Fn f, Cplx u, const std::vector<Cplx>& args) {
    switch (f) {
        case Fn::Exp: return std::exp(u);
        case Fn::Log: return std::log(u);
        case Fn::Sqrt: return std::sqrt(u);
        case Fn::Cbrt: {
            if (std::fabs(u.imag()) > 1e-12 * (1 + std::fabs(u.real())))
                throw EvalError("cbrt of a non-real value");
            return {std::cbrt(u.real()), 0.0};
        }
        case Fn::Sin: return std::sin(u);
        case Fn::Cos: return std::cos(u);
        case Fn::Abs: return {std::abs(u), 0.0};
        case Fn::Sn:
        case Fn::Cn:
        case Fn::Dn: {
            Cplx mc = args.at(1);
            if (std::fabs(u.imag()) > 1e-10 * (1 + std::fabs(u.real())) ||
                std::fabs(mc.imag()) > 1e-12)
                throw EvalError("elliptic function of a non-real value");
            JacobiTriple t = jacobi_ext(u.real(), mc.real());
            return {f == Fn::Sn ? t.sn : f == Fn::Cn ? t.cn : t.dn, 0.0};
        }
    }
    return {};
}

}  // namespace

void EvalContext::set_jet(const JetAtom& j, Cplx v) {
    JetAtom key = j;
    key.conj = false;
    jets[make_jet(std::move(key))] = v;
}

Cplx eval(const Expr& e, const EvalContext& ctx) {
    const ExprNode& n = e.node();
    switch (n.kind) {
        case Kind::Num: return to_cplx(n.num);
        case Kind::Sym: {
            if (n.sym.type == SymType::Pi) return {M_PI, 0.0};
            if (n.sym.type == SymType::Var) {
                auto it = ctx.vars.find(n.sym.id);
                if (it == ctx.vars.end())
                    throw EvalError("unbound variable " +
                                    (ctx.space ? ctx.space->vars.at(n.sym.id)
                                               : std::to_string(n.sym.id)));
                return it->second;
            }
            auto it = ctx.params.find(n.sym.id);
            if (it == ctx.params.end())
                throw EvalError("unbound parameter " +
                                (ctx.space ? ctx.space->params.at(n.sym.id).name
                                           : std::to_string(n.sym.id)));
            return n.sym.conj ? std::conj(it->second) : it->second;
        }
        case Kind::Jet: {
            JetAtom key = n.jet;
            bool cj = key.conj;
            key.conj = false;
            auto it = ctx.jets.find(make_jet(key));
            if (it == ctx.jets.end())
                throw EvalError("unbound jet coordinate " +
                                (ctx.space ? ctx.space->deps.at(n.jet.dep).name
                                           : std::to_string(n.jet.dep)));
            return cj ? std::conj(it->second) : it->second;
        }
        case Kind::Fun: {
            std::vector<Cplx> args;
            args.reserve(n.args.size());
            for (const auto& a : n.args) args.push_back(eval(a, ctx));
            return eval_fn(n.fn, args[0], args);
        }
        case Kind::Pow: {
            Cplx b = eval(n.base, ctx);
            int64_t e2 = n.expo;
            if (e2 < 0) {
                if (std::abs(b) == 0.0) throw EvalError("division by zero");
                b = 1.0 / b;
                e2 = -e2;
            }
            Cplx acc{1.0, 0.0};
            while (e2) {
                if (e2 & 1) acc *= b;
                b *= b;
                e2 >>= 1;
            }
            return acc;
        }
        case Kind::Mul: {
            Cplx acc{1.0, 0.0};
            for (const auto& k : n.kids) acc *= eval(k, ctx);
            return acc;
        }
        case Kind::Add: {
            Cplx acc{0.0, 0.0};
            for (const auto& k : n.kids) acc += eval(k, ctx);
            return acc;
        }
    }
    return {};
}

double max_term_magnitude(const Expr& e, const EvalContext& ctx) {
    double m = 0.0;
    for (const auto& t : sum_terms(e)) m = std::max(m, std::abs(eval(t, ctx)));
    return m;
}

}  // namespace nsym
