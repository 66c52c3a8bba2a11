#pragma once
// Marginal jacobians J_beta(nu): the closed real form with its series
// seam, the normative 2-D quadrature route, gamma-ratio densities (the
// generalization powering every split), and the ansatz integrals.

#include "hssep/quadrature.hpp"
#include "hssep/types.hpp"

#include <vector>

namespace hssep {

// Closed-form real two-qubit marginal jacobian; switches to a Taylor
// series about nu = 1 for |nu - 1| <= 0.3 to defeat the (nu-1)^9
// cancellation.
double jac_real_closed(double nu);

struct JacobianSpec {
    int beta = 1;                            // 1 | 2 | 4
    SplitTag split = SplitTag::TwoQubit;     // only TwoQubit carries a 2-D quadrature route
};

// Normative quadrature definition: the Bloore weight (prod rho_ii)^(3 beta/2)
// integrated over (rho11, rho22) at fixed nu, times |d rho33 / d nu|.
double jac_quadrature(double nu, JacobianSpec spec, double rel_tol = 1e-9);

// Density of a product/quotient of independent Gamma(alpha_k) variables:
// X = prod g_k^{s_k} with s_k = +-1. Evaluated by inverting the
// characteristic function of log X on a fixed Gauss-Legendre grid.
class GammaRatioDensity {
  public:
    GammaRatioDensity(std::vector<double> alphas, std::vector<double> signs);

    double log_density(double x) const;            // density of log X at x
    double density(double r) const;                // density of X at r > 0
    double expectation(const Fn1D& s, double rel_tol = 1e-10) const; // E[s(X)]

    const std::vector<double>& alphas() const { return alphas_; }

  private:
    std::vector<double> alphas_, signs_;
    std::vector<double> nodes_, weights_;          // t-grid on [0, T]
    std::vector<std::complex<double>> phi_;        // characteristic function at nodes
};

// Dirichlet weight exponents of a scenario: e_i = (d_f / 2) * (number of
// active pairs touching index i); the associated normalization
// Z = prod Gamma(e_i + 1) / Gamma(sum e_i + n) gives V_tot = c * Z.
Eigen::VectorXd scenario_exponents(const ScenarioSpec& s);
double scenario_simplex_mass(const ScenarioSpec& s);

// Gamma-ratio density of a diagonal ratio prod rho_a rho_b / (rho_c rho_d)
// under the scenario's Dirichlet weight. `num` and `den` are 1-based
// diagonal indices (repetitions allowed).
GammaRatioDensity scenario_ratio_density(const ScenarioSpec& s, const std::vector<int>& num,
                                         const std::vector<int>& den);

// Marginal jacobian for any beta via the gamma-ratio density:
// J_beta(nu) = Z * p_log(log nu) / nu with alpha_i = 3 beta / 2 + 1.
double jac_cf(double nu, int beta);

// 2 * int_0^1 J_beta(nu) I_nu(1/2,2)^beta d nu.
double ansatz_integral(int beta);

// C_beta * int_0^infty J_beta with C_1 = 512 pi^2 / 27, C_2 = 32 pi^6 / 27.
double total_volume(int beta);

// Scenario-specific marginal jacobian for the real [(1,4),(2,3)] pair set
// (weight exponents 1/2 on every diagonal entry, normalized by
// Gamma(3/2)^4 / Gamma(6)).
double jac_scenario_1423(double nu);

} // namespace hssep
