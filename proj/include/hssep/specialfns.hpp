#pragma once
// Incomplete/regularized beta functions, separability-function ansatze,
// and the complex log-gamma used by the ratio-density machinery.

#include <complex>

namespace hssep {

struct BetaParams {
    double a;
    double b;
};

// Principal-branch log Gamma for complex argument (Lanczos approximation),
// accurate to ~1e-13 relative for Re(z) > 0.
std::complex<double> log_gamma(std::complex<double> z);

double log_beta(double a, double b);
double beta_complete(double a, double b);

// Unregularized incomplete beta B_x(a,b) = int_0^x w^(a-1) (1-w)^(b-1) dw,
// via the regularized continued fraction; ~1e-13 relative.
double incomplete_beta(double x, BetaParams p);

// Regularized I_x(a,b) = B_x(a,b) / B(a,b).
double regularized_beta(double x, BetaParams p);

// I_nu(1/2, 2) = (3 - nu) sqrt(nu) / 2, the central separability ansatz.
double regularized_beta_half_two(double nu);

// I_nu(1/2,2)^beta for beta in {1,2,4} (Dyson-index powers).
double dyson_ansatz(double nu, int beta);

enum class LegacyAnsatz { Real, Complex };

// Early fitted forms: (4 + 1/(5 sqrt 2)) B(1/2,sqrt 3)^8 B_nu(1/2,sqrt 3)
// and (1e8 / (2*2^(1/3) + 10^(3/4)/3^(2/3))) B(a,b)^14 B_nu(a,b) with
// a = 2 sqrt(6)/5, b = 3/sqrt(2). Comparison curves only.
double legacy_ansatz(double nu, LegacyAnsatz which);

} // namespace hssep
