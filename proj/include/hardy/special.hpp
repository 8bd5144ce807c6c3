#pragma once

#include <complex>

namespace hardy {

using cplx = std::complex<double>;

// Γ(s) for complex s by the Lanczos approximation (g = 7, 9 terms), with
// reflection for Re(s) < 1/2. DomainError at s = 0, -1, -2, ...
cplx gamma_complex(cplx s);

// Whittaker W_{κ,μ}(x), x > 0, from
//   W = x^{μ+1/2} e^{-x/2} / Γ(μ-κ+1/2) ∫_0^∞ e^{-xt} t^{μ-κ-1/2} (1+t)^{μ+κ-1/2} dt,
// integrated with an exp-sinh rule refined until successive step halvings
// agree. Requires Re(μ - κ + 1/2) > 0.
cplx whittaker_W(double kappa, cplx mu, double x);

}  // namespace hardy
