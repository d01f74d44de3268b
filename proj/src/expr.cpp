#include "nsym/expr.hpp"

#include <algorithm>
#include <cassert>
#include <map>

namespace nsym {

namespace {

NodePtr new_node(ExprNode n) { return std::make_shared<const ExprNode>(std::move(n)); }

std::size_t hash_kids(std::size_t seed, const std::vector<Expr>& kids) {
    for (const auto& k : kids) seed = hash_combine(seed, k.hash());
    return seed;
}

const Expr& zero_ref() {
    static const Expr z = make_num(GQ(0));
    return z;
}
const Expr& one_ref() {
    static const Expr o = make_num(GQ(1));
    return o;
}

bool is_add(const Expr& e) { return e.kind() == Kind::Add; }

}  // namespace

Expr zero() { return zero_ref(); }
Expr one() { return one_ref(); }

Kind Expr::kind() const { return node_->kind; }
bool Expr::is_zero() const { return kind() == Kind::Num && node_->num.is_zero(); }
bool Expr::is_one() const { return kind() == Kind::Num && node_->num.is_one(); }
const GQ& Expr::num() const { return node_->num; }
std::size_t Expr::hash() const { return node_->hash; }

const char* fn_name(Fn f) {
    switch (f) {
        case Fn::Exp: return "exp";
        case Fn::Log: return "log";
        case Fn::Sqrt: return "sqrt";
        case Fn::Cbrt: return "cbrt";
        case Fn::Sin: return "sin";
        case Fn::Cos: return "cos";
        case Fn::Abs: return "abs";
        case Fn::Sn: return "sn";
        case Fn::Cn: return "cn";
        case Fn::Dn: return "dn";
    }
    return "?";
}

// ---- atoms ------------------------------------------------------------

int SymAtom::cmp(const SymAtom& o) const {
    if (type != o.type) return type < o.type ? -1 : 1;
    if (id != o.id) return id < o.id ? -1 : 1;
    if (conj != o.conj) return conj < o.conj ? -1 : 1;
    return 0;
}

std::size_t SymAtom::hash() const {
    return hash_combine(0x51ULL + (std::size_t)type, hash_combine(id, conj));
}

int JetAtom::cmp(const JetAtom& o) const {
    bool ca = !composed.is_null(), cb = !o.composed.is_null();
    if (ca != cb) return ca < cb ? -1 : 1;
    if (dep != o.dep) return dep < o.dep ? -1 : 1;
    if (order() != o.order()) return order() < o.order() ? -1 : 1;
    for (int i = 0; i < kMaxAxes; ++i)
        if (J[i] != o.J[i]) return J[i] < o.J[i] ? -1 : 1;
    if (reflect != o.reflect) return reflect < o.reflect ? -1 : 1;
    if (conj != o.conj) return conj < o.conj ? -1 : 1;
    if (shifts.size() != o.shifts.size())
        return shifts.size() < o.shifts.size() ? -1 : 1;
    for (std::size_t i = 0; i < shifts.size(); ++i)
        if (int c = shifts[i].cmp(o.shifts[i])) return c;
    if (ca) return composed.cmp(o.composed);
    return 0;
}

std::size_t JetAtom::hash() const {
    std::size_t h = hash_combine(0x7e7ULL, dep);
    for (int i = 0; i < kMaxAxes; ++i) h = hash_combine(h, J[i]);
    h = hash_combine(h, hash_combine(reflect, conj));
    for (const auto& s : shifts) h = hash_combine(h, s.hash());
    if (!composed.is_null()) h = hash_combine(h, composed.hash());
    return h;
}

// ---- ordering ----------------------------------------------------------

int Expr::cmp(const Expr& o) const {
    if (node_ == o.node_) return 0;
    const ExprNode& a = *node_;
    const ExprNode& b = *o.node_;
    if (a.kind != b.kind) return a.kind < b.kind ? -1 : 1;
    switch (a.kind) {
        case Kind::Num: return a.num.cmp(b.num);
        case Kind::Sym: return a.sym.cmp(b.sym);
        case Kind::Jet: return a.jet.cmp(b.jet);
        case Kind::Fun: {
            if (a.fn != b.fn) return a.fn < b.fn ? -1 : 1;
            if (a.args.size() != b.args.size())
                return a.args.size() < b.args.size() ? -1 : 1;
            for (std::size_t i = 0; i < a.args.size(); ++i)
                if (int c = a.args[i].cmp(b.args[i])) return c;
            return 0;
        }
        case Kind::Pow: {
            if (int c = a.base.cmp(b.base)) return c;
            if (a.expo != b.expo) return a.expo < b.expo ? -1 : 1;
            return 0;
        }
        case Kind::Mul:
        case Kind::Add: {
            std::size_t n = std::min(a.kids.size(), b.kids.size());
            for (std::size_t i = 0; i < n; ++i)
                if (int c = a.kids[i].cmp(b.kids[i])) return c;
            if (a.kids.size() != b.kids.size())
                return a.kids.size() < b.kids.size() ? -1 : 1;
            return 0;
        }
    }
    return 0;
}

// ---- leaf constructors --------------------------------------------------

Expr make_num(GQ v) {
    ExprNode n{Kind::Num};
    n.hash = hash_combine(1, v.hash());
    n.num = std::move(v);
    return Expr(new_node(std::move(n)));
}

Expr make_int(long v) { return make_num(GQ(v)); }
Expr make_rat(long num, long den) { return make_num(GQ(rat(num, den))); }
Expr make_i() { return make_num(GQ::make_i()); }

Expr make_pi() {
    ExprNode n{Kind::Sym};
    n.sym = SymAtom{SymType::Pi, 0, false};
    n.hash = hash_combine(2, n.sym.hash());
    return Expr(new_node(std::move(n)));
}

Expr make_var(int axis) {
    ExprNode n{Kind::Sym};
    n.sym = SymAtom{SymType::Var, axis, false};
    n.hash = hash_combine(2, n.sym.hash());
    return Expr(new_node(std::move(n)));
}

Expr make_param(int id, bool conj) {
    ExprNode n{Kind::Sym};
    n.sym = SymAtom{SymType::Param, id, conj};
    n.hash = hash_combine(2, n.sym.hash());
    return Expr(new_node(std::move(n)));
}

Expr make_jet(JetAtom j) {
    ExprNode n{Kind::Jet};
    n.hash = hash_combine(3, j.hash());
    n.jet = std::move(j);
    return Expr(new_node(std::move(n)));
}

// ---- function applications ----------------------------------------------

namespace {

// exact square root of a nonnegative rational, if it is one
bool rat_sqrt(const Rat& q, Rat& out) {
    if (sgn(q) < 0) return false;
    if (!mpz_perfect_square_p(q.get_num().get_mpz_t()) ||
        !mpz_perfect_square_p(q.get_den().get_mpz_t()))
        return false;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), q.get_num().get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), q.get_den().get_mpz_t());
    out = Rat(rn, rd);
    return true;
}

bool rat_cbrt(const Rat& q, Rat& out) {
    mpz_class rn, rd;
    if (!mpz_root(rn.get_mpz_t(), q.get_num().get_mpz_t(), 3)) return false;
    if (!mpz_root(rd.get_mpz_t(), q.get_den().get_mpz_t(), 3)) return false;
    if (Rat(rn * rn * rn, rd * rd * rd) != q) return false;
    out = Rat(rn, rd);
    out.canonicalize();
    return true;
}

// leading coefficient under the canonical term order (last term of a sum)
GQ lead_coeff(const Expr& e) {
    if (e.kind() == Kind::Add) return split_coeff(e.node().kids.back()).first;
    return split_coeff(e).first;
}

bool lead_is_negative_real(const Expr& e) {
    GQ l = lead_coeff(e);
    return l.is_real() && sgn(l.re) < 0;
}

Expr raw_fun(Fn f, std::vector<Expr> args) {
    ExprNode n{Kind::Fun};
    n.fn = f;
    std::size_t h = hash_combine(4, (std::size_t)f);
    for (const auto& a : args) h = hash_combine(h, a.hash());
    n.hash = h;
    n.args = std::move(args);
    return Expr(new_node(std::move(n)));
}

}  // namespace

Expr make_fun(Fn f, std::vector<Expr> args) {
    const Expr& a0 = args.at(0);
    switch (f) {
        case Fn::Exp:
            if (a0.is_zero()) return one();
            break;
        case Fn::Log:
            if (a0.is_one()) return zero();
            break;
        case Fn::Sqrt: {
            if (a0.is_num() && a0.num().is_real()) {
                Rat r;
                const Rat& v = a0.num().re;
                if (sgn(v) >= 0 && rat_sqrt(v, r)) return make_num(GQ(r));
                if (sgn(v) < 0 && rat_sqrt(Rat(-v), r))
                    return make_num(GQ(Rat(0), r));
            }
            break;
        }
        case Fn::Cbrt: {
            if (a0.is_num() && a0.num().is_real()) {
                Rat r;
                if (rat_cbrt(a0.num().re, r)) return make_num(GQ(r));
            }
            // odd function: normalize the sign of the argument
            if (!a0.is_num() && lead_is_negative_real(a0))
                return -make_fun(Fn::Cbrt, {-a0});
            break;
        }
        case Fn::Sin:
            if (a0.is_zero()) return zero();
            break;
        case Fn::Cos:
            if (a0.is_zero()) return one();
            break;
        case Fn::Abs: {
            if (a0.is_num()) {
                const GQ& v = a0.num();
                Rat r;
                if (rat_sqrt(Rat(v.re * v.re + v.im * v.im), r))
                    return make_num(GQ(r));
            }
            if (a0.kind() == Kind::Fun && a0.node().fn == Fn::Abs) return a0;
            // |c*X| = |c|*|X| for real rational c; even: normalize lead sign
            auto [c, core] = split_coeff(a0);
            if (c.is_real() && !core.is_one() && c != GQ(1)) {
                Rat m = sgn(c.re) < 0 ? Rat(-c.re) : c.re;
                return make_mul({make_num(GQ(m)), raw_fun(Fn::Abs, {core})});
            }
            if (!a0.is_num() && lead_is_negative_real(a0))
                return make_fun(Fn::Abs, {-a0});
            break;
        }
        case Fn::Sn:
            if (a0.is_zero()) return zero();
            break;
        case Fn::Cn:
        case Fn::Dn:
            if (a0.is_zero()) return one();
            break;
    }
    return raw_fun(f, std::move(args));
}

// ---- term decomposition --------------------------------------------------

std::pair<GQ, Expr> split_coeff(const Expr& term) {
    if (term.is_num()) return {term.num(), one()};
    if (term.kind() == Kind::Mul) {
        const auto& kids = term.node().kids;
        if (kids.front().is_num()) {
            if (kids.size() == 2) return {kids.front().num(), kids[1]};
            ExprNode n{Kind::Mul};
            n.kids.assign(kids.begin() + 1, kids.end());
            n.hash = hash_kids(6, n.kids);
            return {kids.front().num(), Expr(new_node(std::move(n)))};
        }
    }
    return {GQ(1), term};
}

std::vector<Expr> sum_terms(const Expr& e) {
    if (is_add(e)) return e.node().kids;
    return {e};
}

std::vector<Expr> mul_factors(const Expr& e) {
    if (e.kind() == Kind::Mul) return e.node().kids;
    return {e};
}

namespace {

Expr term_from(const GQ& c, const Expr& core) {
    if (c.is_zero()) return zero();
    if (core.is_one()) return make_num(c);
    if (c.is_one()) return core;
    ExprNode n{Kind::Mul};
    n.kids.push_back(make_num(c));
    if (core.kind() == Kind::Mul)
        for (const auto& k : core.node().kids) n.kids.push_back(k);
    else
        n.kids.push_back(core);
    n.hash = hash_kids(6, n.kids);
    return Expr(new_node(std::move(n)));
}

}  // namespace

// ---- sums ----------------------------------------------------------------

Expr make_add(std::span<const Expr> terms) {
    std::map<Expr, GQ, ExprLess> acc;  // core -> coefficient
    GQ constant(0);
    std::vector<Expr> hold;
    for (const auto& t : terms) {
        if (is_add(t))
            for (const auto& k : t.node().kids) hold.push_back(k);
        else
            hold.push_back(t);
    }
    for (const auto& t : hold) {
        auto [c, core] = split_coeff(t);
        if (core.is_one()) {
            constant = constant + c;
            continue;
        }
        auto it = acc.find(core);
        if (it == acc.end())
            acc.emplace(core, c);
        else {
            it->second = it->second + c;
            if (it->second.is_zero()) acc.erase(it);
        }
    }
    std::vector<Expr> out;
    out.reserve(acc.size() + 1);
    if (!constant.is_zero()) out.push_back(make_num(constant));
    for (const auto& [core, c] : acc) out.push_back(term_from(c, core));
    if (out.empty()) return zero();
    if (out.size() == 1) return out.front();
    ExprNode n{Kind::Add};
    n.kids = std::move(out);
    n.hash = hash_kids(7, n.kids);
    return Expr(new_node(std::move(n)));
}

// ---- products --------------------------------------------------------------

namespace {

// Accumulates a power-product; expands positive integer powers of sums.
class MulBuilder {
public:
    void feed(const Expr& f, int64_t e = 1) {
        switch (f.kind()) {
            case Kind::Num:
                if (f.num().is_zero() && e > 0) {
                    zero_ = true;
                    return;
                }
                coeff_ = coeff_ * f.num().pow(e);
                return;
            case Kind::Mul:
                for (const auto& k : f.node().kids) feed(k, e);
                return;
            case Kind::Pow:
                feed(f.node().base, e * f.node().expo);
                return;
            case Kind::Fun:
                if (f.node().fn == Fn::Exp) {
                    exp_args_.push_back(
                        e == 1 ? f.node().args[0]
                               : term_scaled(f.node().args[0], e));
                    return;
                }
                break;
            default: break;
        }
        add_base(f, e);
    }

    Expr finish() {
        if (zero_) return zero();
        normalize_roots();
        if (!exp_args_.empty()) {
            Expr arg = make_add(std::span<const Expr>(exp_args_));
            Expr ex = make_fun(Fn::Exp, {arg});
            if (!ex.is_one()) {
                if (ex.kind() == Kind::Num)
                    coeff_ = coeff_ * ex.num();
                else
                    add_base_direct(ex, 1);
            }
            exp_args_.clear();
        }
        if (coeff_.is_zero()) return zero();

        std::vector<Expr> factors;
        std::vector<std::pair<Expr, int64_t>> expand;
        for (const auto& [b, e] : pmap_) {
            if (e == 0) continue;
            if (is_add(b) && e > 0) {
                expand.emplace_back(b, e);
                continue;
            }
            factors.push_back(e == 1 ? b : pow_node(b, e));
        }
        Expr mono = assemble(coeff_, factors);
        if (expand.empty()) return mono;

        std::vector<Expr> cur{mono};
        for (const auto& [sum, k] : expand) {
            for (int64_t i = 0; i < k; ++i) {
                std::vector<Expr> next;
                next.reserve(cur.size() * sum.node().kids.size());
                for (const auto& t : sum.node().kids)
                    for (const auto& c : cur) next.push_back(make_mul({t, c}));
                cur = sum_terms(make_add(std::span<const Expr>(next)));
            }
        }
        return make_add(std::span<const Expr>(cur));
    }

private:
    static Expr term_scaled(const Expr& e, int64_t k) {
        return make_mul({make_num(GQ(long(k))), e});
    }

    static Expr pow_node(const Expr& b, int64_t e) {
        ExprNode n{Kind::Pow};
        n.base = b;
        n.expo = e;
        n.hash = hash_combine(hash_combine(5, b.hash()), (std::size_t)e);
        return Expr(new_node(std::move(n)));
    }

    static Expr assemble(const GQ& c, std::vector<Expr>& factors) {
        if (factors.empty()) return make_num(c);
        std::sort(factors.begin(), factors.end(),
                  [](const Expr& a, const Expr& b) { return a.cmp(b) < 0; });
        if (c.is_one() && factors.size() == 1) return factors.front();
        ExprNode n{Kind::Mul};
        if (!c.is_one()) n.kids.push_back(make_num(c));
        for (auto& f : factors) n.kids.push_back(std::move(f));
        if (n.kids.size() == 1) return n.kids.front();
        n.hash = hash_kids(6, n.kids);
        return Expr(new_node(std::move(n)));
    }

    void add_base(const Expr& b, int64_t e) {
        if (b.is_num()) {
            coeff_ = coeff_ * b.num().pow(e);
            return;
        }
        if (is_add(b)) {
            // factor out the leading coefficient so powers of proportional
            // sums collect on a shared normalized base
            GQ l = lead_coeff(b);
            if (!l.is_one()) {
                coeff_ = coeff_ * l.pow(e);
                add_base_direct(div_const(b, l), e);
                return;
            }
        }
        add_base_direct(b, e);
    }

    void add_base_direct(const Expr& b, int64_t e) {
        auto it = pmap_.find(b);
        if (it == pmap_.end())
            pmap_.emplace(b, e);
        else {
            it->second += e;
            if (it->second == 0) pmap_.erase(it);
        }
    }

    // sqrt(u)^e -> u^(e/2)*sqrt(u)^(e mod 2), cbrt likewise mod 3
    void normalize_roots() {
        bool changed = true;
        while (changed) {
            changed = false;
            for (auto it = pmap_.begin(); it != pmap_.end(); ++it) {
                const Expr& b = it->first;
                if (b.kind() != Kind::Fun) continue;
                int idx = b.node().fn == Fn::Sqrt ? 2
                          : b.node().fn == Fn::Cbrt ? 3
                                                    : 0;
                if (!idx) continue;
                int64_t e = it->second;
                int64_t q = e >= 0 ? e / idx : -((-e + idx - 1) / idx);
                int64_t r = e - q * idx;  // r in [0, idx)
                if (q == 0) continue;
                Expr inner = b.node().args[0];
                it->second = r;
                if (r == 0) pmap_.erase(it);
                feed(inner, q);
                changed = true;
                break;
            }
        }
    }

    GQ coeff_ = GQ(1);
    bool zero_ = false;
    std::map<Expr, int64_t, ExprLess> pmap_;
    std::vector<Expr> exp_args_;
};

}  // namespace

Expr make_mul(std::span<const Expr> factors) {
    MulBuilder mb;
    for (const auto& f : factors) mb.feed(f);
    return mb.finish();
}

Expr make_pow(const Expr& base, int64_t e) {
    if (e == 0) return one();
    if (e == 1) return base;
    MulBuilder mb;
    mb.feed(base, e);
    return mb.finish();
}

Expr div_const(const Expr& e, const GQ& c) {
    if (c.is_zero()) throw StructuralError("division by zero constant");
    if (c.is_one()) return e;
    GQ ic = c.inv();
    if (is_add(e)) {
        std::vector<Expr> out;
        out.reserve(e.node().kids.size());
        for (const auto& t : e.node().kids) {
            auto [tc, core] = split_coeff(t);
            out.push_back(term_from(tc * ic, core));
        }
        ExprNode n{Kind::Add};
        n.kids = std::move(out);
        n.hash = hash_kids(7, n.kids);
        return Expr(new_node(std::move(n)));
    }
    auto [tc, core] = split_coeff(e);
    return term_from(tc * ic, core);
}

// ---- operators -------------------------------------------------------------

Expr Expr::operator+(const Expr& o) const { return make_add({*this, o}); }
Expr Expr::operator-(const Expr& o) const {
    return make_add({*this, make_mul({make_int(-1), o})});
}
Expr Expr::operator*(const Expr& o) const { return make_mul({*this, o}); }
Expr Expr::operator-() const { return make_mul({make_int(-1), *this}); }

// ---- canonicalize -----------------------------------------------------------

Expr canonicalize(const Expr& e) {
    const ExprNode& n = e.node();
    switch (n.kind) {
        case Kind::Num:
        case Kind::Sym: return e;
        case Kind::Jet: {
            if (n.jet.composed.is_null()) return e;
            JetAtom j = n.jet;
            j.composed = canonicalize(j.composed);
            return make_jet(std::move(j));
        }
        case Kind::Fun: {
            std::vector<Expr> args;
            args.reserve(n.args.size());
            for (const auto& a : n.args) args.push_back(canonicalize(a));
            return make_fun(n.fn, std::move(args));
        }
        case Kind::Pow: return make_pow(canonicalize(n.base), n.expo);
        case Kind::Mul: {
            std::vector<Expr> fs;
            fs.reserve(n.kids.size());
            for (const auto& k : n.kids) fs.push_back(canonicalize(k));
            return make_mul(std::span<const Expr>(fs));
        }
        case Kind::Add: {
            std::vector<Expr> ts;
            ts.reserve(n.kids.size());
            for (const auto& k : n.kids) ts.push_back(canonicalize(k));
            return make_add(std::span<const Expr>(ts));
        }
    }
    return e;
}

// ---- queries ---------------------------------------------------------------

void visit_atoms(const Expr& e, const std::function<void(const Expr&)>& f) {
    const ExprNode& n = e.node();
    switch (n.kind) {
        case Kind::Num: return;
        case Kind::Sym:
        case Kind::Jet: f(e); return;
        case Kind::Fun:
            for (const auto& a : n.args) visit_atoms(a, f);
            return;
        case Kind::Pow: visit_atoms(n.base, f); return;
        case Kind::Mul:
        case Kind::Add:
            for (const auto& k : n.kids) visit_atoms(k, f);
            return;
    }
}

namespace {

bool search(const Expr& e, const std::function<bool(const ExprNode&)>& pred) {
    const ExprNode& n = e.node();
    if (pred(n)) return true;
    switch (n.kind) {
        case Kind::Fun:
            for (const auto& a : n.args)
                if (search(a, pred)) return true;
            return false;
        case Kind::Pow: return search(n.base, pred);
        case Kind::Mul:
        case Kind::Add:
            for (const auto& k : n.kids)
                if (search(k, pred)) return true;
            return false;
        case Kind::Jet:
            if (!n.jet.composed.is_null()) return search(n.jet.composed, pred);
            return false;
        default: return false;
    }
}

}  // namespace

bool contains_sym(const Expr& e, const SymAtom& s) {
    return search(e, [&](const ExprNode& n) {
        return n.kind == Kind::Sym && n.sym.cmp(s) == 0;
    });
}

bool contains_var(const Expr& e, int axis) {
    return search(e, [&](const ExprNode& n) {
        return n.kind == Kind::Sym && n.sym.type == SymType::Var &&
               n.sym.id == axis;
    });
}

bool contains_any_var(const Expr& e) {
    return search(e, [](const ExprNode& n) {
        return n.kind == Kind::Sym && n.sym.type == SymType::Var;
    });
}

bool contains_param(const Expr& e, int id) {
    return search(e, [&](const ExprNode& n) {
        return n.kind == Kind::Sym && n.sym.type == SymType::Param &&
               n.sym.id == id;
    });
}

// ---- string helpers ---------------------------------------------------------

std::string rat_to_string(const Rat& q) {
    std::string s = q.get_num().get_str();
    if (q.get_den() != 1) s += "/" + q.get_den().get_str();
    return s;
}

std::string gq_to_string(const GQ& v) {
    if (v.is_real()) return rat_to_string(v.re);
    std::string s;
    if (sgn(v.re) != 0) s = rat_to_string(v.re);
    std::string im = rat_to_string(v.im);
    if (im == "1")
        im = "i";
    else if (im == "-1")
        im = "-i";
    else
        im += "*i";
    if (s.empty()) return im;
    if (im[0] != '-') s += "+";
    return s + im;
}

}  // namespace nsym
