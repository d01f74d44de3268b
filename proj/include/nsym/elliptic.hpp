#pragma once

#include <stdexcept>

namespace nsym {

struct EllipticDomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct JacobiTriple {
    double sn, cn, dn;
};

/// Jacobi elliptic functions of real argument with parameter convention
/// m = k^2. Computed by the descending Landen (AGM) scale iterated to
/// machine precision with backward amplitude recursion.
/// Requires 0 <= m <= 1.
JacobiTriple jacobi(double u, double m);

double jacobi_sn(double u, double m);

/// Extension to negative parameter via the standard transformation
///   sn(u|m) = sn(us|mu) / (s dn(us|mu)),  mu = -m/(1-m), s = sqrt(1-m);
/// still requires m <= 1.
JacobiTriple jacobi_ext(double u, double m);

}  // namespace nsym
