#pragma once

#include "nsym/expr.hpp"
#include "nsym/space.hpp"

#include <map>

namespace nsym {

/// Total derivative with respect to the given axis. A jet carrying a
/// reflection on that axis picks up the chain-rule sign; a composed jet
/// chain-rules through its argument (arguments are real on the charts in
/// use, so conjugation commutes with differentiation).
Expr total_derivative(const Expr& e, int axis);

/// Evaluation at the mirrored point for the given axes: base variables are
/// negated, jet reflection masks toggle, composed-jet arguments reflect.
Expr reflect(const Expr& e, uint8_t axes_mask);

/// Complex conjugation: constants conjugate, conjugation flags toggle on
/// jets and complex parameters, real symbols are fixed, elementary functions
/// commute with conjugation on their real-chart domains.
Expr conjugate(const Expr& e, const Space& sp);

/// Simultaneous substitution followed by canonicalization. Keys are atom
/// expressions (Sym or grid Jet). A reflected/conjugated jet with no exact
/// binding falls back to the binding of its plain coordinate, with the
/// reflection/conjugation applied to the bound expression.
struct SubstMap {
    std::map<Expr, Expr, ExprLess> exact;
    const Space* space = nullptr;  // required for derived conjugations

    void bind(const Expr& atom, const Expr& value) { exact[atom] = value; }
};

Expr substitute(const Expr& e, const SubstMap& m);

/// Replaces every grid jet of the dependent variable by the corresponding
/// total derivative of F (reflected/conjugated first when the jet is).
Expr substitute_function(const Expr& e, int dep, const Expr& F,
                         const Space& sp);

/// Partial derivative treating every other atom as independent.
Expr partial(const Expr& e, const Expr& atom);

/// All distinct atoms satisfying pred, in canonical order.
std::vector<Expr> atoms_where(const Expr& e,
                              const std::function<bool(const ExprNode&)>& pred);

/// Writes e as a sum over monomials in the selected atoms:
/// e = sum_k coeff_k * monomial_k with every selected atom in the monomial
/// part. Returns map monomial -> coefficient (monomial one() for the free
/// part).
std::map<Expr, Expr, ExprLess> collect_terms(
    const Expr& e, const std::function<bool(const Expr&)>& select_factor);

}  // namespace nsym
