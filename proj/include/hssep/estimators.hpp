#pragma once
// Monte Carlo estimation of separability functions, volumes and
// probabilities, minor-relaxation upper bounds, and exponent fits.

#include "hssep/jacobians.hpp"
#include "hssep/sampling.hpp"
#include "hssep/types.hpp"

#include <optional>
#include <vector>

namespace hssep {

// S(nu) estimates on a grid: estimate = box_measure * ppt / n_total and
// c_estimate = box_measure * feasible / n_total per point.
struct SepFunctionTable {
    Eigen::VectorXd grid;
    Eigen::VectorXd estimate;
    Eigen::VectorXd std_err;
    Eigen::VectorXd c_estimate;
    std::vector<long> n_total;
    std::vector<long> n_feasible;
    std::vector<long> n_ppt;
    double box_measure = 0.0;
};

struct ProbabilityEstimate {
    double p_hat = 0.0;
    double std_err = 0.0;
    long n = 0;
    std::optional<double> target;
};

// S(nu1, nu2) estimates over a product grid of the first two diagonal
// ratios (remaining ratios held at 1).
struct SepSurfaceTable {
    Eigen::VectorXd grid1;
    Eigen::VectorXd grid2;
    Eigen::MatrixXd estimate;
    Eigen::MatrixXd std_err;
    double box_measure = 0.0;
};

// Strictly positive simplex vector whose diagonal combo
// prod(rho_num) / prod(rho_den) equals `value`: the minimal-norm solution
// in log coordinates (indices 1-based).
Eigen::VectorXd combo_diag(int n, const std::vector<int>& num, const std::vector<int>& den,
                           double value);

// Reusable sampler for one scenario at a fixed diagonal: draws active-pair
// z components from [-1,1]^{d_f} boxes and tests feasibility (state PSD)
// and the partial-transpose condition.
class ScenarioSampler {
  public:
    explicit ScenarioSampler(const ScenarioSpec& s);

    void set_diag(const Eigen::VectorXd& diag);
    int udim() const { return udim_; } // uniforms consumed per draw

    struct Outcome {
        bool feasible;
        bool ppt;
    };
    Outcome sample(const double* u);
    Outcome sample(RngStream& rng);

  private:
    enum class Mode { Real, Complex, Quaternion };
    struct Pair {
        int i, j;   // 0-based
        int ti, tj; // partial-transpose image (0-based, ti < tj)
        bool t_conj;
        int df;
        double scale; // sqrt(rho_ii rho_jj), set by set_diag
    };

    ScenarioSpec spec_;
    Mode mode_;
    int n_, dim_, udim_;
    std::vector<Pair> pairs_;
    Eigen::VectorXd diag_;
    Eigen::MatrixXd mr_, ptr_;  // real path
    Eigen::MatrixXcd mc_, ptc_; // complex / embedded quaternionic path
};

// S(nu) over a grid for the scenario's diagonal combo prod(num)/prod(den);
// N z-draws per grid point. If qmc is non-null its stream replaces the
// pseudo-random uniforms.
SepFunctionTable estimate_sepfunc(const ScenarioSpec& s, const std::vector<int>& num,
                                  const std::vector<int>& den, const Eigen::VectorXd& grid,
                                  long n_per_point, RngStream& rng,
                                  LowDiscrepancyStream* qmc = nullptr);

// Surface version over (nu1, nu2) for the split's first two ratio
// definitions; other ratios held at 1.
SepSurfaceTable estimate_sepfunc_surface(const ScenarioSpec& s, const Eigen::VectorXd& grid1,
                                         const Eigen::VectorXd& grid2, long n_per_point,
                                         RngStream& rng);

// Monotone cubic interpolant of the table in sqrt(nu), with power-law
// tails fitted to the outermost grid points.
Fn1D table_interpolant(const SepFunctionTable& t);

struct VolumeTriple {
    double v_sep;
    double v_tot;
    double p;
    double p_err; // propagated from table std errors (0 for exact S)
};

// V_sep = mass * E[S(r)], V_tot = c * mass, P = V_sep / V_tot, where the
// expectation is over the scenario's diagonal-ratio density and mass is
// the weighted simplex measure.
VolumeTriple assemble_probability(const Fn1D& sfun, double c, const GammaRatioDensity& d,
                                  double mass, double rel_tol = 1e-9);
VolumeTriple assemble_probability(const SepFunctionTable& t, double c, const GammaRatioDensity& d,
                                  double mass);

// Fraction of flat-measure draws with positive partial transpose.
ProbabilityEstimate estimate_prob_direct(int n, NumberField field, const SystemSplit& split,
                                         long n_draws, RngStream& rng,
                                         std::optional<double> target = std::nullopt);

// Conversion between the plain z-box measure used by the estimators and
// the metric volume element of the flat (Hilbert-Schmidt) geometry:
// sqrt(2) per off-diagonal real coordinate and sqrt(n) for the diagonal
// simplex cross-section. The full-system S and c constants quoted for the
// minor-relaxation bounds are in metric normalization.
double hs_metric_factor(const ScenarioSpec& s);

enum class MinorRelaxation { Z14, Z23, Combined };

// Closed-form relaxed separability function (metric normalization).
double minor_relaxation_s(MinorRelaxation which, double nu);

struct RelaxationResult {
    SepFunctionTable table; // metric normalization, matching the closed form
    double bound;           // quadrature value of the implied probability bound
};

// Upper bounds on the full real two-qubit separability probability from
// 2x2 principal minors of the partial transpose.
RelaxationResult upper_bound_minor_relaxation(MinorRelaxation which, const Eigen::VectorXd& grid,
                                              long n_per_point, RngStream& rng);

struct ExponentFit {
    double x_star;
    double goodness; // residual sum of squares at the minimizer
};

// Least-squares fit of S(nu1, nu2)/S(1,1) ~ (nu1 nu2)^x over the grid.
ExponentFit fit_exponent(const SepSurfaceTable& t);

// Max over equal-product classes of the spread of estimates sharing
// eta = nu1 nu2, normalized by the std errors of the extreme cells.
double eta_coalescence_test(const SepSurfaceTable& t);

} // namespace hssep
