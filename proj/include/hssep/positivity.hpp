#pragma once
// Positive-semidefiniteness tests, partial transposition per split, and
// the diagonal-free two-qubit minor / PPT conditions.

#include "hssep/types.hpp"

namespace hssep {

struct PsdTolerance {
    double eps = 1e-10; // eigenvalue floor; boundary states count as PSD
};

enum class PsdMethod { Minors, Eigen };

struct PptVerdict {
    bool positive;
    double min_eigenvalue;
    PsdMethod method;
};

// Two-qubit z-vector ordering used throughout: (z12, z13, z14, z23, z24, z34).
using ZVec6 = Eigen::Matrix<double, 6, 1>;

// Diagonal-free necessary-and-sufficient positivity conditions for a real
// two-qubit Bloore matrix: determinant, leading 3x3 minor, and 2x2 minors.
bool minors_nonneg_2x2_real(const ZVec6& z);

// Symplectic embedding of a quaternionic self-adjoint matrix: each entry
// a + b j maps to [[a, b], [-conj(b), conj(a)]] after block reordering;
// the 2n x 2n complex result carries each eigenvalue of the input twice.
Eigen::MatrixXcd embed_quaternionic(const DensityMatrix& rho);

// Eigenvalue-route PSD test (embeds quaternionic input first).
PptVerdict is_psd(const DensityMatrix& rho, PsdTolerance tol = {});

// Fast boolean PSD test via LDLT on the (embedded) matrix shifted by eps.
// Used in Monte Carlo hot loops; agreement with is_psd is property-tested.
bool is_psd_fast(const Eigen::MatrixXcd& m, double eps = 1e-10);

// Transposes in place the blocks of the declared split layout.
DensityMatrix partial_transpose(const DensityMatrix& rho, const SystemSplit& s);

bool is_ppt(const DensityMatrix& rho, const SystemSplit& s, PsdTolerance tol = {});

// Degree-2-in-z12 polynomial form of the two-qubit real PPT condition;
// depends on the diagonal only through nu.
double ppt_polynomial_nu(const ZVec6& z, double nu);
bool ppt_condition_nu(const ZVec6& z, double nu);

// Determinant-condition polynomial (4x4 minor) and leading 3x3 minor in
// diagonal-free form; exposed for tests and the relaxed-minor estimators.
double det_polynomial_2x2_real(const ZVec6& z);
double minor3_polynomial_2x2_real(const ZVec6& z);

} // namespace hssep
