#pragma once

#include "nsym/calculus.hpp"
#include "nsym/expr.hpp"
#include "nsym/parser.hpp"
#include "nsym/space.hpp"

#include <optional>

namespace nsym {

struct EquationSystem {
    struct Eq {
        std::string name;
        Expr lhs;
    };
    struct Lead {
        JetAtom jet;  // plain coordinate solved for
        Expr rhs;
        std::string eq_name;
    };

    SpacePtr space;
    std::vector<Eq> eqs;
    std::vector<Lead> leads;

    int max_order() const;
    bool has_conj() const;
    /// Reflection masks generated by the masks present in the equations,
    /// the identity included.
    std::vector<uint8_t> reflection_group() const;
};

/// Validates the solve directives: the declared jet must appear linearly
/// with a constant coefficient.
EquationSystem build_system(const ParsedFile& f);

struct Generator {
    SpacePtr space;
    std::string name;
    std::vector<Expr> xi;   // per axis
    std::vector<Expr> phi;  // per dependent

    Generator scaled(const GQ& c) const;
    Generator plus(const Generator& o) const;
    bool is_zero() const;
};

/// Point-symmetry validation: components may reference base variables and
/// order-0 unreflected jets only.
Generator make_generator(SpacePtr sp, const ParsedGenerator& pg);

std::string print_generator(const Generator& g);

/// Prolonged coefficients phi_J per dependent, computed by the recursion
/// phi_{J+1_i} = D_i phi_J - (D_i xi^j) u_{J+1_j}.
class Prolongation {
public:
    Prolongation(const Generator& g, int order);

    /// Plain coefficient phi^dep_J.
    Expr coeff(int dep, const std::array<uint8_t, kMaxAxes>& J) const;

    /// Coefficient attached to the reflected/conjugated jet family:
    /// conj^c(Ref^mask(phi^dep_J)).
    Expr coeff_family(int dep, const std::array<uint8_t, kMaxAxes>& J,
                      uint8_t mask, bool conj) const;

    int order() const { return order_; }

private:
    const Generator g_;
    int order_;
    std::map<std::pair<int, std::array<uint8_t, kMaxAxes>>, Expr> table_;
};

/// One residual per equation: the prolonged field applied to the left-hand
/// side over the reflected jet space.
std::vector<Expr> apply_linearized_condition(const EquationSystem& sys,
                                             const Generator& g);

/// Same residuals computed through the evolutionary form
/// xi^i D_i F + sum_J (D_J Q) dF/du_J.
std::vector<Expr> evolutionary_residuals(const EquationSystem& sys,
                                         const Generator& g);

/// Substitutes the solved leading derivatives, their conjugates and their
/// reflected copies until none remain.
Expr reduce_on_solutions(Expr residual, const EquationSystem& sys);

struct Verdict {
    bool is_symmetry;
    std::vector<Expr> residuals;  // reduced canonical forms
};
Verdict verify_symmetry(const EquationSystem& sys, const Generator& g);

/// Characteristics Q^alpha = phi^alpha - xi^i u_{1_i}; leading derivatives
/// substituted when a system is supplied.
std::vector<Expr> to_evolutionary(const Generator& g,
                                  const EquationSystem* sys = nullptr);

Generator lie_bracket(const Generator& g1, const Generator& g2);

struct DeterminingSystem {
    std::vector<int> unknowns;  // parameter ids in the ansatz space
    struct LinEq {
        // (unknown index into `unknowns`, conjugated) -> coefficient
        std::vector<std::tuple<int, bool, GQ>> parts;
    };
    std::vector<LinEq> eqs;
    bool conj_coupled = false;
    bool inconsistent = false;  // a constant term survived
};

DeterminingSystem extract_determining(const EquationSystem& sys,
                                      const Generator& ansatz,
                                      const std::vector<int>& unknown_ids);

struct Classification {
    std::vector<Generator> basis;
    int dimension = 0;
    bool real_split = false;  // dimension counted over the reals
};

/// Generic polynomial ansatz of the given degree (xi/tau polynomial in the
/// base variables, phi additionally linear in the dependent variables),
/// solved exactly; returns a deterministic basis.
Classification classify_ansatz(const EquationSystem& sys, int degree,
                               bool real_fields = false);

/// Splits complex dependent variables q = u - i v into real pairs and each
/// equation into real and imaginary parts.
EquationSystem realify(const EquationSystem& sys);

}  // namespace nsym
