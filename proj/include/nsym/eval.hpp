#pragma once

#include "nsym/expr.hpp"
#include "nsym/space.hpp"

#include <complex>
#include <map>

namespace nsym {

struct EvalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Cplx = std::complex<double>;

/// Numeric assignment. Jet values are keyed by the jet with its
/// conjugation flag cleared: callers provide values at reflected/shifted
/// points, conjugation is applied by the evaluator.
struct EvalContext {
    const Space* space = nullptr;
    std::map<int, Cplx> vars;
    std::map<int, Cplx> params;
    std::map<Expr, Cplx, ExprLess> jets;

    void set_var(int axis, Cplx v) { vars[axis] = v; }
    void set_param(int id, Cplx v) { params[id] = v; }
    void set_jet(const JetAtom& j, Cplx v);
};

Cplx eval(const Expr& e, const EvalContext& ctx);

/// Magnitude of the largest additive term; residual normalization uses
/// |residual| / (1 + max term magnitude).
double max_term_magnitude(const Expr& e, const EvalContext& ctx);

}  // namespace nsym
