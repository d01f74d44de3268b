#pragma once

#include "nsym/rational.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace nsym {

// Expressions are immutable shared trees kept in a canonical normal form:
// sums are flattened and sorted with collected coefficients, products are
// flattened power-products over distinct bases, positive integer powers of
// sums are expanded, and constants are exact Gaussian rationals. Expressions
// that agree as functions under the supported rewrite rules are structurally
// identical, so equality is structural equality.

struct StructuralError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Kind : uint8_t { Num, Sym, Jet, Fun, Pow, Mul, Add };

struct ExprNode;
using NodePtr = std::shared_ptr<const ExprNode>;

class Expr {
public:
    Expr() = default;
    explicit Expr(NodePtr n) : node_(std::move(n)) {}

    bool is_null() const { return node_ == nullptr; }
    const ExprNode& node() const { return *node_; }
    const NodePtr& ptr() const { return node_; }

    Kind kind() const;
    bool is_num() const { return kind() == Kind::Num; }
    bool is_zero() const;
    bool is_one() const;
    const GQ& num() const;

    std::size_t hash() const;
    int cmp(const Expr& o) const;
    bool operator==(const Expr& o) const { return cmp(o) == 0; }
    bool operator!=(const Expr& o) const { return cmp(o) != 0; }

    Expr operator+(const Expr& o) const;
    Expr operator-(const Expr& o) const;
    Expr operator*(const Expr& o) const;
    Expr operator-() const;

private:
    NodePtr node_;
};

struct ExprLess {
    bool operator()(const Expr& a, const Expr& b) const { return a.cmp(b) < 0; }
};

enum class SymType : uint8_t { Var, Param, Pi };

struct SymAtom {
    SymType type = SymType::Var;
    int32_t id = 0;     // axis index for Var, registry index for Param
    bool conj = false;  // complex parameters only

    int cmp(const SymAtom& o) const;
    std::size_t hash() const;
};

constexpr int kMaxAxes = 4;

/// a + b*pi with exact Gaussian-rational a, b; used for jet argument shifts.
struct PiLin {
    GQ a, b;
    bool is_zero() const { return a.is_zero() && b.is_zero(); }
    PiLin operator+(const PiLin& o) const { return {a + o.a, b + o.b}; }
    PiLin conj() const { return {a.conj(), b.conj()}; }
    int cmp(const PiLin& o) const {
        int c = a.cmp(o.a);
        return c ? c : b.cmp(o.b);
    }
    std::size_t hash() const { return hash_combine(a.hash(), b.hash()); }
};

// Derivative coordinate of a dependent variable. Two flavors share the node:
//  - grid jet: derivative multi-index J over the declared axes, with a
//    reflection mask (value taken at the mirrored point), a conjugation flag
//    and optional exact argument shifts (differential-difference forms);
//  - composed jet: `composed` non-null, the dependent variable is univariate
//    in that argument expression and J[0] carries the derivative order.
struct JetAtom {
    int32_t dep = 0;
    std::array<uint8_t, kMaxAxes> J{0, 0, 0, 0};
    uint8_t reflect = 0;
    bool conj = false;
    std::vector<PiLin> shifts;  // empty, or one entry per axis
    Expr composed;

    int order() const { return int(J[0]) + J[1] + J[2] + J[3]; }
    bool has_shift() const {
        for (const auto& s : shifts)
            if (!s.is_zero()) return true;
        return false;
    }

    int cmp(const JetAtom& o) const;
    std::size_t hash() const;
};

enum class Fn : uint8_t { Exp, Log, Sqrt, Cbrt, Sin, Cos, Abs, Sn, Cn, Dn };

const char* fn_name(Fn f);

struct ExprNode {
    Kind kind;
    std::size_t hash = 0;

    GQ num;                  // Num
    SymAtom sym;             // Sym
    JetAtom jet;             // Jet
    Fn fn = Fn::Exp;         // Fun
    std::vector<Expr> args;  // Fun arguments
    Expr base;               // Pow
    int64_t expo = 0;        // Pow
    std::vector<Expr> kids;  // Mul factors / Add terms, sorted
};

// ---- canonical constructors ---------------------------------------------

Expr make_num(GQ v);
Expr make_int(long v);
Expr make_rat(long num, long den);
Expr make_i();
Expr make_pi();
Expr make_var(int axis);
Expr make_param(int id, bool conj = false);
Expr make_jet(JetAtom j);
Expr make_fun(Fn f, std::vector<Expr> args);
Expr make_pow(const Expr& base, int64_t e);
Expr make_add(std::span<const Expr> terms);
Expr make_mul(std::span<const Expr> factors);

inline Expr make_add(std::initializer_list<Expr> ts) {
    return make_add(std::span<const Expr>(ts.begin(), ts.size()));
}
inline Expr make_mul(std::initializer_list<Expr> fs) {
    return make_mul(std::span<const Expr>(fs.begin(), fs.size()));
}

Expr zero();
Expr one();

/// Rebuilds the canonical form bottom-up; identity on canonical input.
Expr canonicalize(const Expr& e);

/// Splits a canonical term into (coefficient, coefficient-free core).
/// The core of a pure constant is one().
std::pair<GQ, Expr> split_coeff(const Expr& term);

/// Flat view of a canonical expression as a list of summands.
std::vector<Expr> sum_terms(const Expr& e);
/// Flat view of a canonical term as a list of factors.
std::vector<Expr> mul_factors(const Expr& e);

Expr div_const(const Expr& e, const GQ& c);

// ---- structural queries ---------------------------------------------------

bool contains_sym(const Expr& e, const SymAtom& s);
bool contains_var(const Expr& e, int axis);
bool contains_any_var(const Expr& e);
bool contains_param(const Expr& e, int id);

/// Visits every Sym and Jet leaf, once per occurrence.
void visit_atoms(const Expr& e, const std::function<void(const Expr&)>& f);

}  // namespace nsym
