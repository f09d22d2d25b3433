#pragma once

namespace vandal {

/// Largest r accepted by the localizer; keeps (4r+2)! finite in double precision.
inline constexpr int kMaxLocalizerOrder = 20;

/// n! as a double, exact for n <= 22. Throws InvalidInput for n < 0 or n > 170.
double factorial(int n);

/// Gamma(n + 1/2) = (2n)! sqrt(pi) / (4^n n!), evaluated as sqrt(pi) * prod_{k=1}^{n} (k - 1/2).
double gamma_half_integer(int n);

/// Riemann zeta at an integer s >= 3 by backward direct summation; the number of
/// terms K is the smallest with tail bound K^{1-s}/(s-1) < 1e-15. Memoized.
double riemann_zeta(int s);

}  // namespace vandal
