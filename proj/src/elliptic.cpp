#include "nsym/elliptic.hpp"

#include <cmath>
#include <vector>

namespace nsym {

JacobiTriple jacobi(double u, double m) {
    if (!(m >= 0.0 && m <= 1.0))
        throw EllipticDomainError("elliptic parameter m outside [0,1]");
    if (m == 0.0) return {std::sin(u), std::cos(u), 1.0};
    if (m == 1.0) {
        double t = std::tanh(u);
        return {t, 1.0 / std::cosh(u), 1.0 / std::cosh(u)};
    }
    // descending Landen scale
    std::vector<double> a{1.0}, c{std::sqrt(m)};
    double b = std::sqrt(1.0 - m);
    int n = 0;
    while (std::fabs(c.back()) > 1e-15 && n < 64) {
        double an = (a.back() + b) / 2.0;
        double cn = (a.back() - b) / 2.0;
        b = std::sqrt(a.back() * b);
        a.push_back(an);
        c.push_back(cn);
        ++n;
    }
    double phi = std::ldexp(1.0, n) * a[n] * u;
    double phi_prev = phi;
    for (int k = n; k >= 1; --k) {
        phi_prev = phi;
        phi = (phi + std::asin(std::clamp(c[k] / a[k] * std::sin(phi), -1.0, 1.0))) / 2.0;
    }
    double sn = std::sin(phi);
    double cn = std::cos(phi);
    double dn = cn / std::cos(phi_prev - phi);
    if (n == 0) dn = std::sqrt(1.0 - m * sn * sn);
    return {sn, cn, dn};
}

double jacobi_sn(double u, double m) { return jacobi(u, m).sn; }

JacobiTriple jacobi_ext(double u, double m) {
    if (m >= 0.0) return jacobi(u, m);
    double mu = -m / (1.0 - m);
    double s = std::sqrt(1.0 - m);
    JacobiTriple t = jacobi(u * s, mu);
    return {t.sn / (s * t.dn), t.cn / t.dn, 1.0 / t.dn};
}

}  // namespace nsym
