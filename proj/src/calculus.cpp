#include "nsym/calculus.hpp"

#include <set>

namespace nsym {

namespace {

Expr fn_derivative(Fn f, const Expr& u, const std::vector<Expr>& args) {
    switch (f) {
        case Fn::Exp: return make_fun(Fn::Exp, {u});
        case Fn::Log: return make_pow(u, -1);
        case Fn::Sqrt:
            return make_mul({make_rat(1, 2), make_pow(make_fun(Fn::Sqrt, {u}), -1)});
        case Fn::Cbrt:
            return make_mul({make_rat(1, 3), make_pow(make_fun(Fn::Cbrt, {u}), -2)});
        case Fn::Sin: return make_fun(Fn::Cos, {u});
        case Fn::Cos: return -make_fun(Fn::Sin, {u});
        case Fn::Sn:
            return make_mul({make_fun(Fn::Cn, {u, args[1]}), make_fun(Fn::Dn, {u, args[1]})});
        case Fn::Cn:
            return -make_mul({make_fun(Fn::Sn, {u, args[1]}), make_fun(Fn::Dn, {u, args[1]})});
        case Fn::Dn:
            return -make_mul({args[1], make_fun(Fn::Sn, {u, args[1]}),
                              make_fun(Fn::Cn, {u, args[1]})});
        case Fn::Abs:
            throw StructuralError("abs is not differentiable; resolve the chart first");
    }
    return zero();
}

}  // namespace

Expr total_derivative(const Expr& e, int axis) {
    const ExprNode& n = e.node();
    switch (n.kind) {
        case Kind::Num: return zero();
        case Kind::Sym:
            if (n.sym.type == SymType::Var && n.sym.id == axis) return one();
            return zero();
        case Kind::Jet: {
            JetAtom j = n.jet;
            if (!j.composed.is_null()) {
                Expr da = total_derivative(j.composed, axis);
                if (da.is_zero()) return zero();
                j.J[0]++;
                return make_mul({make_jet(std::move(j)), da});
            }
            bool neg = j.reflect & (1u << axis);
            j.J[axis]++;
            Expr out = make_jet(std::move(j));
            return neg ? -out : out;
        }
        case Kind::Fun: {
            if (n.args.size() > 1) {
                for (std::size_t i = 1; i < n.args.size(); ++i)
                    if (!total_derivative(n.args[i], axis).is_zero())
                        throw StructuralError(
                            "derivative through a non-constant modulus");
            }
            Expr du = total_derivative(n.args[0], axis);
            if (du.is_zero()) return zero();
            return make_mul({fn_derivative(n.fn, n.args[0], n.args), du});
        }
        case Kind::Pow: {
            Expr db = total_derivative(n.base, axis);
            if (db.is_zero()) return zero();
            return make_mul({make_int(long(n.expo)), make_pow(n.base, n.expo - 1), db});
        }
        case Kind::Mul: {
            std::vector<Expr> terms;
            for (std::size_t i = 0; i < n.kids.size(); ++i) {
                Expr dk = total_derivative(n.kids[i], axis);
                if (dk.is_zero()) continue;
                std::vector<Expr> fs;
                fs.reserve(n.kids.size());
                for (std::size_t jx = 0; jx < n.kids.size(); ++jx)
                    fs.push_back(jx == i ? dk : n.kids[jx]);
                terms.push_back(make_mul(std::span<const Expr>(fs)));
            }
            return make_add(std::span<const Expr>(terms));
        }
        case Kind::Add: {
            std::vector<Expr> terms;
            terms.reserve(n.kids.size());
            for (const auto& k : n.kids) terms.push_back(total_derivative(k, axis));
            return make_add(std::span<const Expr>(terms));
        }
    }
    return zero();
}

Expr reflect(const Expr& e, uint8_t axes_mask) {
    if (axes_mask == 0) return e;
    const ExprNode& n = e.node();
    switch (n.kind) {
        case Kind::Num: return e;
        case Kind::Sym:
            if (n.sym.type == SymType::Var && (axes_mask & (1u << n.sym.id)))
                return -e;
            return e;
        case Kind::Jet: {
            JetAtom j = n.jet;
            if (!j.composed.is_null()) {
                j.composed = reflect(j.composed, axes_mask);
                return make_jet(std::move(j));
            }
            for (int a = 0; a < kMaxAxes; ++a)
                if ((axes_mask & (1u << a)) && a < (int)j.shifts.size() &&
                    !j.shifts[a].is_zero())
                    throw StructuralError("reflection across a shifted axis");
            j.reflect ^= axes_mask;
            return make_jet(std::move(j));
        }
        case Kind::Fun: {
            std::vector<Expr> args;
            args.reserve(n.args.size());
            for (const auto& a : n.args) args.push_back(reflect(a, axes_mask));
            return make_fun(n.fn, std::move(args));
        }
        case Kind::Pow: return make_pow(reflect(n.base, axes_mask), n.expo);
        case Kind::Mul: {
            std::vector<Expr> fs;
            fs.reserve(n.kids.size());
            for (const auto& k : n.kids) fs.push_back(reflect(k, axes_mask));
            return make_mul(std::span<const Expr>(fs));
        }
        case Kind::Add: {
            std::vector<Expr> ts;
            ts.reserve(n.kids.size());
            for (const auto& k : n.kids) ts.push_back(reflect(k, axes_mask));
            return make_add(std::span<const Expr>(ts));
        }
    }
    return e;
}

Expr conjugate(const Expr& e, const Space& sp) {
    const ExprNode& n = e.node();
    switch (n.kind) {
        case Kind::Num: return make_num(n.num.conj());
        case Kind::Sym: {
            if (n.sym.type == SymType::Param && !sp.params.at(n.sym.id).real) {
                SymAtom s = n.sym;
                s.conj = !s.conj;
                ExprNode m{Kind::Sym};
                m.sym = s;
                m.hash = hash_combine(2, s.hash());
                return Expr(std::make_shared<const ExprNode>(std::move(m)));
            }
            return e;  // real parameters, pi, real base variables
        }
        case Kind::Jet: {
            JetAtom j = n.jet;
            if (sp.deps.at(j.dep).complex_valued) j.conj = !j.conj;
            for (auto& s : j.shifts) s = s.conj();
            if (!j.composed.is_null()) j.composed = conjugate(j.composed, sp);
            return make_jet(std::move(j));
        }
        case Kind::Fun: {
            std::vector<Expr> args;
            args.reserve(n.args.size());
            for (const auto& a : n.args) args.push_back(conjugate(a, sp));
            return make_fun(n.fn, std::move(args));
        }
        case Kind::Pow: return make_pow(conjugate(n.base, sp), n.expo);
        case Kind::Mul: {
            std::vector<Expr> fs;
            fs.reserve(n.kids.size());
            for (const auto& k : n.kids) fs.push_back(conjugate(k, sp));
            return make_mul(std::span<const Expr>(fs));
        }
        case Kind::Add: {
            std::vector<Expr> ts;
            ts.reserve(n.kids.size());
            for (const auto& k : n.kids) ts.push_back(conjugate(k, sp));
            return make_add(std::span<const Expr>(ts));
        }
    }
    return e;
}

namespace {

// plain-coordinate fallback for substitution into reflected/conjugated jets
Expr lookup_jet(const JetAtom& j, const SubstMap& m, bool& found) {
    Expr key = make_jet(j);
    auto it = m.exact.find(key);
    if (it != m.exact.end()) {
        found = true;
        return it->second;
    }
    if (j.reflect || j.conj) {
        JetAtom plain = j;
        plain.reflect = 0;
        plain.conj = false;
        auto pit = m.exact.find(make_jet(plain));
        if (pit != m.exact.end()) {
            found = true;
            Expr v = reflect(pit->second, j.reflect);
            if (j.conj) {
                if (!m.space)
                    throw StructuralError("conjugated binding requires a space");
                v = conjugate(v, *m.space);
            }
            return v;
        }
    }
    found = false;
    return Expr();
}

Expr subst_rec(const Expr& e, const SubstMap& m) {
    const ExprNode& n = e.node();
    switch (n.kind) {
        case Kind::Num: return e;
        case Kind::Sym: {
            auto it = m.exact.find(e);
            return it != m.exact.end() ? it->second : e;
        }
        case Kind::Jet: {
            bool found = false;
            Expr v = lookup_jet(n.jet, m, found);
            if (found) return v;
            if (!n.jet.composed.is_null()) {
                JetAtom j = n.jet;
                j.composed = subst_rec(j.composed, m);
                return make_jet(std::move(j));
            }
            return e;
        }
        case Kind::Fun: {
            std::vector<Expr> args;
            args.reserve(n.args.size());
            for (const auto& a : n.args) args.push_back(subst_rec(a, m));
            return make_fun(n.fn, std::move(args));
        }
        case Kind::Pow: return make_pow(subst_rec(n.base, m), n.expo);
        case Kind::Mul: {
            std::vector<Expr> fs;
            fs.reserve(n.kids.size());
            for (const auto& k : n.kids) fs.push_back(subst_rec(k, m));
            return make_mul(std::span<const Expr>(fs));
        }
        case Kind::Add: {
            std::vector<Expr> ts;
            ts.reserve(n.kids.size());
            for (const auto& k : n.kids) ts.push_back(subst_rec(k, m));
            return make_add(std::span<const Expr>(ts));
        }
    }
    return e;
}

void check_acyclic(const SubstMap& m) {
    // dependency edge k -> k2 when the value bound to k mentions key k2;
    // identity bindings are inert
    std::vector<Expr> keys;
    for (const auto& [k, v] : m.exact)
        if (k != v) keys.push_back(k);
    auto mentions = [&](const Expr& value, const Expr& key) {
        bool hit = false;
        visit_atoms(value, [&](const Expr& a) {
            if (hit) return;
            if (a == key) {
                hit = true;
                return;
            }
            if (a.kind() == Kind::Jet && key.kind() == Kind::Jet) {
                JetAtom plain = a.node().jet;
                if (plain.reflect || plain.conj) {
                    plain.reflect = 0;
                    plain.conj = false;
                    if (make_jet(plain) == key) hit = true;
                }
            }
        });
        return hit;
    };
    std::size_t nk = keys.size();
    std::vector<std::vector<std::size_t>> adj(nk);
    for (std::size_t i = 0; i < nk; ++i) {
        const Expr& v = m.exact.at(keys[i]);
        for (std::size_t j2 = 0; j2 < nk; ++j2)
            if (mentions(v, keys[j2])) adj[i].push_back(j2);
    }
    std::vector<int> state(nk, 0);
    std::function<void(std::size_t)> dfs = [&](std::size_t u) {
        state[u] = 1;
        for (auto w : adj[u]) {
            if (state[w] == 1) throw StructuralError("cyclic substitution");
            if (state[w] == 0) dfs(w);
        }
        state[u] = 2;
    };
    for (std::size_t i = 0; i < nk; ++i)
        if (state[i] == 0) dfs(i);
}

}  // namespace

Expr substitute(const Expr& e, const SubstMap& m) {
    check_acyclic(m);
    return subst_rec(e, m);
}

Expr substitute_function(const Expr& e, int dep, const Expr& F, const Space& sp) {
    struct Key {
        std::array<uint8_t, kMaxAxes> J;
        uint8_t reflect;
        bool conj;
        bool operator<(const Key& o) const {
            if (J != o.J) return J < o.J;
            if (reflect != o.reflect) return reflect < o.reflect;
            return conj < o.conj;
        }
    };
    std::map<Key, Expr> memo;

    std::function<Expr(const Key&)> image = [&](const Key& k) -> Expr {
        auto it = memo.find(k);
        if (it != memo.end()) return it->second;
        Expr val;
        int axis = -1;
        for (int a = kMaxAxes - 1; a >= 0; --a)
            if (k.J[a] > 0) {
                axis = a;
                break;
            }
        if (axis < 0) {
            val = reflect(F, k.reflect);
            if (k.conj) val = conjugate(val, sp);
        } else {
            Key prev = k;
            prev.J[axis]--;
            val = total_derivative(image(prev), axis);
        }
        memo.emplace(k, val);
        return val;
    };

    std::function<Expr(const Expr&)> rec = [&](const Expr& x) -> Expr {
        const ExprNode& n = x.node();
        switch (n.kind) {
            case Kind::Num:
            case Kind::Sym: return x;
            case Kind::Jet: {
                if (n.jet.dep != dep) {
                    if (!n.jet.composed.is_null()) {
                        JetAtom j = n.jet;
                        j.composed = rec(j.composed);
                        return make_jet(std::move(j));
                    }
                    return x;
                }
                if (!n.jet.composed.is_null())
                    throw StructuralError(
                        "functional substitution into a composed jet");
                if (n.jet.has_shift())
                    throw StructuralError(
                        "functional substitution into a shifted jet");
                return image(Key{n.jet.J, n.jet.reflect, n.jet.conj});
            }
            case Kind::Fun: {
                std::vector<Expr> args;
                args.reserve(n.args.size());
                for (const auto& a : n.args) args.push_back(rec(a));
                return make_fun(n.fn, std::move(args));
            }
            case Kind::Pow: return make_pow(rec(n.base), n.expo);
            case Kind::Mul: {
                std::vector<Expr> fs;
                fs.reserve(n.kids.size());
                for (const auto& kk : n.kids) fs.push_back(rec(kk));
                return make_mul(std::span<const Expr>(fs));
            }
            case Kind::Add: {
                std::vector<Expr> ts;
                ts.reserve(n.kids.size());
                for (const auto& kk : n.kids) ts.push_back(rec(kk));
                return make_add(std::span<const Expr>(ts));
            }
        }
        return x;
    };
    return rec(e);
}

Expr partial(const Expr& e, const Expr& atom) {
    const ExprNode& n = e.node();
    switch (n.kind) {
        case Kind::Num: return zero();
        case Kind::Sym:
        case Kind::Jet: return e == atom ? one() : zero();
        case Kind::Fun: {
            Expr du = partial(n.args[0], atom);
            for (std::size_t i = 1; i < n.args.size(); ++i)
                if (!partial(n.args[i], atom).is_zero())
                    throw StructuralError("partial through a modulus argument");
            if (du.is_zero()) return zero();
            return make_mul({fn_derivative(n.fn, n.args[0], n.args), du});
        }
        case Kind::Pow: {
            Expr db = partial(n.base, atom);
            if (db.is_zero()) return zero();
            return make_mul({make_int(long(n.expo)), make_pow(n.base, n.expo - 1), db});
        }
        case Kind::Mul: {
            std::vector<Expr> terms;
            for (std::size_t i = 0; i < n.kids.size(); ++i) {
                Expr dk = partial(n.kids[i], atom);
                if (dk.is_zero()) continue;
                std::vector<Expr> fs;
                for (std::size_t jx = 0; jx < n.kids.size(); ++jx)
                    fs.push_back(jx == i ? dk : n.kids[jx]);
                terms.push_back(make_mul(std::span<const Expr>(fs)));
            }
            return make_add(std::span<const Expr>(terms));
        }
        case Kind::Add: {
            std::vector<Expr> terms;
            terms.reserve(n.kids.size());
            for (const auto& k : n.kids) terms.push_back(partial(k, atom));
            return make_add(std::span<const Expr>(terms));
        }
    }
    return zero();
}

std::vector<Expr> atoms_where(const Expr& e,
                              const std::function<bool(const ExprNode&)>& pred) {
    std::set<Expr, ExprLess> found;
    visit_atoms(e, [&](const Expr& a) {
        if (pred(a.node())) found.insert(a);
    });
    return {found.begin(), found.end()};
}

std::map<Expr, Expr, ExprLess> collect_terms(
    const Expr& e, const std::function<bool(const Expr&)>& select_factor) {
    std::map<Expr, std::vector<Expr>, ExprLess> groups;
    for (const auto& term : sum_terms(e)) {
        std::vector<Expr> sel, rest;
        for (const auto& f : mul_factors(term)) {
            const Expr& basis =
                f.kind() == Kind::Pow ? f.node().base : f;
            (select_factor(basis) ? sel : rest).push_back(f);
        }
        Expr mono = sel.empty() ? one() : make_mul(std::span<const Expr>(sel));
        Expr coeff = rest.empty() ? one() : make_mul(std::span<const Expr>(rest));
        groups[mono].push_back(coeff);
    }
    std::map<Expr, Expr, ExprLess> out;
    for (auto& [mono, coeffs] : groups)
        out.emplace(mono, make_add(std::span<const Expr>(coeffs)));
    return out;
}

}  // namespace nsym
