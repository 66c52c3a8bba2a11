#include "hssep/positivity.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>

namespace hssep {

double det_polynomial_2x2_real(const ZVec6& z) {
    const double z12 = z[0], z13 = z[1], z14 = z[2], z23 = z[3], z24 = z[4], z34 = z[5];
    return (z34 * z34 - 1.0) * z12 * z12 +
           2.0 * (z14 * (z24 - z23 * z34) + z13 * (z23 - z24 * z34)) * z12 -
           z23 * z23 - z24 * z24 - z34 * z34 + z14 * z14 * (z23 * z23 - 1.0) +
           z13 * z13 * (z24 * z24 - 1.0) + 2.0 * z23 * z24 * z34 +
           2.0 * z13 * z14 * (z34 - z23 * z24) + 1.0;
}

double minor3_polynomial_2x2_real(const ZVec6& z) {
    const double z12 = z[0], z13 = z[1], z23 = z[3];
    return -z12 * z12 + 2.0 * z13 * z23 * z12 - z13 * z13 - z23 * z23 + 1.0;
}

bool minors_nonneg_2x2_real(const ZVec6& z) {
    for (int k = 0; k < 6; ++k)
        if (1.0 - z[k] * z[k] < 0.0) return false;
    if (minor3_polynomial_2x2_real(z) < 0.0) return false;
    return det_polynomial_2x2_real(z) >= 0.0;
}

double ppt_polynomial_nu(const ZVec6& z, double nu) {
    const double z12 = z[0], z13 = z[1], z14 = z[2], z23 = z[3], z24 = z[4], z34 = z[5];
    const double rnu = std::sqrt(nu);
    return nu * (z34 * z34 - 1.0) * z12 * z12 +
           2.0 * rnu * (nu * z13 * z14 + z23 * z24 - rnu * (z14 * z23 + z13 * z24) * z34) * z12 -
           z23 * z23 - nu * z34 * z34 + nu +
           nu * ((z24 * z24 - 1.0) * z13 * z13 - 2.0 * z14 * z23 * z24 * z13 - z24 * z24 +
                 z14 * z14 * (z23 * z23 - nu)) +
           2.0 * rnu * (z13 * z23 + nu * z14 * z24) * z34;
}

bool ppt_condition_nu(const ZVec6& z, double nu) {
    return ppt_polynomial_nu(z, nu) >= 0.0;
}

Eigen::MatrixXcd embed_quaternionic(const DensityMatrix& rho) {
    const int n = rho.n();
    if (!rho.quaternionic) {
        Eigen::MatrixXcd e = Eigen::MatrixXcd::Zero(2 * n, 2 * n);
        e.topLeftCorner(n, n) = rho.a;
        e.bottomRightCorner(n, n) = rho.a.conjugate();
        return e;
    }
    Eigen::MatrixXcd e(2 * n, 2 * n);
    e.topLeftCorner(n, n) = rho.a;
    e.topRightCorner(n, n) = rho.b;
    e.bottomLeftCorner(n, n) = -rho.b.conjugate();
    e.bottomRightCorner(n, n) = rho.a.conjugate();
    return e;
}

PptVerdict is_psd(const DensityMatrix& rho, PsdTolerance tol) {
    const Eigen::MatrixXcd m = rho.quaternionic ? embed_quaternionic(rho) : rho.a;
    if ((m - m.adjoint()).cwiseAbs().maxCoeff() > 1e-9)
        throw std::invalid_argument("matrix is not self-adjoint");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m, Eigen::EigenvaluesOnly);
    double lo = es.eigenvalues().minCoeff();
    return {lo >= -tol.eps, lo, PsdMethod::Eigen};
}

bool is_psd_fast(const Eigen::MatrixXcd& m, double eps) {
    Eigen::MatrixXcd shifted = m;
    shifted.diagonal().array() += eps;
    Eigen::LDLT<Eigen::MatrixXcd> ldlt(shifted);
    return ldlt.info() == Eigen::Success && ldlt.isPositive();
}

DensityMatrix partial_transpose(const DensityMatrix& rho, const SystemSplit& s) {
    if (rho.n() != s.n) throw std::invalid_argument("dimension mismatch");
    const int b = s.block;
    const int nb = s.n / b;
    DensityMatrix out = rho;
    for (int I = 0; I < nb; ++I)
        for (int J = 0; J < nb; ++J) {
            out.a.block(I * b, J * b, b, b) = rho.a.block(I * b, J * b, b, b).transpose();
            if (rho.quaternionic)
                out.b.block(I * b, J * b, b, b) = rho.b.block(I * b, J * b, b, b).transpose();
        }
    return out;
}

bool is_ppt(const DensityMatrix& rho, const SystemSplit& s, PsdTolerance tol) {
    return is_psd(partial_transpose(rho, s), tol).positive;
}

} // namespace hssep
