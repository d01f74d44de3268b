#pragma once

#include "nsym/calculus.hpp"
#include "nsym/eval.hpp"
#include "nsym/expr.hpp"
#include "nsym/space.hpp"

#include <random>

namespace nsym::testing {

inline SpacePtr nls_space() {
    auto sp = std::make_shared<Space>();
    sp->vars = {"x", "t"};
    sp->add_dep("q", true);
    return sp;
}

inline SpacePtr mkdv_space() {
    auto sp = std::make_shared<Space>();
    sp->vars = {"x", "t"};
    sp->add_dep("u", false);
    return sp;
}

inline JetAtom jet_of(int dep, std::initializer_list<int> J, uint8_t mask = 0,
                      bool conj = false) {
    JetAtom j;
    j.dep = dep;
    int k = 0;
    for (int v : J) j.J[k++] = (uint8_t)v;
    j.reflect = mask;
    j.conj = conj;
    return j;
}

inline Cplx rand_cplx(std::mt19937_64& rng, double scale = 1.0) {
    std::uniform_real_distribution<double> d(-scale, scale);
    return {d(rng), d(rng)};
}

/// Binds every atom of e to a fresh random value (real parameters get real
/// values so conjugation identities stay sound).
inline void assign_random(const Expr& e, EvalContext& ctx,
                          std::mt19937_64& rng, double scale = 1.0) {
    visit_atoms(e, [&](const Expr& a) {
        const ExprNode& n = a.node();
        if (n.kind == Kind::Sym) {
            if (n.sym.type == SymType::Var) {
                if (!ctx.vars.count(n.sym.id))
                    ctx.set_var(n.sym.id, rand_cplx(rng, scale));
            } else if (n.sym.type == SymType::Param) {
                if (!ctx.params.count(n.sym.id)) {
                    bool real = ctx.space &&
                                ctx.space->params.at(n.sym.id).real;
                    Cplx v = rand_cplx(rng, scale);
                    ctx.set_param(n.sym.id, real ? Cplx(v.real(), 0) : v);
                }
            }
        } else if (n.kind == Kind::Jet) {
            JetAtom key = n.jet;
            key.conj = false;
            Expr kexpr = make_jet(key);
            if (!ctx.jets.count(kexpr)) ctx.jets[kexpr] = rand_cplx(rng, scale);
        }
    });
}

/// Random expressions over the given atoms, built from ring operations.
class ExprGen {
public:
    ExprGen(std::vector<Expr> atoms, uint64_t seed)
        : atoms_(std::move(atoms)), rng_(seed) {}

    Expr gen(int depth = 3) {
        if (depth <= 0) return leaf();
        switch (rng_() % 6) {
            case 0:
            case 1: return gen(depth - 1) + gen(depth - 1);
            case 2:
            case 3: return gen(depth - 1) * gen(depth - 1);
            case 4: return make_pow(gen(depth - 1), 1 + int(rng_() % 2));
            default: return leaf();
        }
    }

    std::mt19937_64& rng() { return rng_; }

private:
    Expr leaf() {
        switch (rng_() % 4) {
            case 0: {
                long n = long(rng_() % 7) - 3;
                long d = 1 + long(rng_() % 3);
                return make_num(GQ(rat(n, d)));
            }
            case 1: return make_i();
            default: return atoms_[rng_() % atoms_.size()];
        }
    }

    std::vector<Expr> atoms_;
    std::mt19937_64 rng_;
};

}  // namespace nsym::testing
