#pragma once
// Assembly of density matrices from Bloore parameters, diagonal-ratio
// extraction, and canonical diagonals realizing prescribed ratios.

#include "hssep/types.hpp"

namespace hssep {

// rho_ij = z_ij sqrt(rho_ii rho_jj) for active pairs, zero elsewhere.
// Self-adjoint with trace 1 by construction; positivity is not checked.
// Throws std::invalid_argument on dimension mismatch, |z|^2 > 1, or
// active-pair mismatch between p and s.
DensityMatrix assemble_density(const BlooreParams& p, const ScenarioSpec& s);

// The split's diagonal-ratio variables. All diag entries must be > 0.
RatioVars ratio_variables(const Eigen::VectorXd& diag, const SystemSplit& s);

// One strictly positive simplex vector realizing the given ratios:
// the minimal-norm solution in log-simplex coordinates, which reproduces
// the symmetric two-qubit closed form rho11 = rho44 = sqrt(nu) * t,
// t = 1 / (2 (1 + sqrt(nu))) exactly and anchors all unconstrained
// directions symmetrically for the larger splits.
Eigen::VectorXd canonical_diag(const SystemSplit& s, const RatioVars& r);

struct Rho33Solution {
    double rho33;
    double rho44;
    double d_rho33_d_nu;
};

// Completes (rho11, rho22) to a simplex diagonal with prescribed nu,
// returning rho33, rho44 and the partial derivative of rho33 in nu
// (the change of variables behind the marginal jacobian).
Rho33Solution solve_rho33_for_nu(double rho11, double rho22, double nu);

} // namespace hssep
