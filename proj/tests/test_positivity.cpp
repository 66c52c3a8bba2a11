#include "hssep/positivity.hpp"
#include "hssep/sampling.hpp"

#include "doctest.h"

#include <cmath>

using namespace hssep;

namespace {

// Assemble the real two-qubit Bloore matrix at diagonal ratio nu (with
// rho11 = rho44 and rho22 = rho33, so nu = rho11 rho44 / (rho22 rho33)).
Eigen::MatrixXcd bloore_matrix(const ZVec6& z, double nu) {
    Eigen::Vector4d d;
    double a = std::sqrt(nu);
    d << a, 1.0, 1.0, a;
    d /= d.sum();
    Eigen::MatrixXd m(4, 4);
    int k = 0;
    for (int i = 0; i < 4; ++i) {
        m(i, i) = d[i];
        for (int j = i + 1; j < 4; ++j) {
            m(i, j) = m(j, i) = z[k++] * std::sqrt(d[i] * d[j]);
        }
    }
    return m.cast<std::complex<double>>();
}

} // namespace

TEST_CASE("diagonal-free minor conditions match the eigenvalue route") {
    RngStream rng(7, 0);
    for (int t = 0; t < 5000; ++t) {
        ZVec6 z;
        for (int k = 0; k < 6; ++k) z[k] = rng.symmetric();
        bool minors = minors_nonneg_2x2_real(z);
        bool eig = is_psd(DensityMatrix(bloore_matrix(z, 1.0))).positive;
        CHECK(minors == eig);
    }
}

TEST_CASE("PPT polynomial agrees with eigensolve of the partial transpose") {
    SystemSplit split = SystemSplit::parse("2x2");
    RngStream rng(11, 0);
    for (double nu : {0.25, 1.0, 3.0}) {
        for (int t = 0; t < 2000; ++t) {
            ZVec6 z;
            for (int k = 0; k < 6; ++k) z[k] = rng.symmetric();
            if (!minors_nonneg_2x2_real(z)) continue;
            DensityMatrix rho(bloore_matrix(z, nu));
            bool poly = ppt_condition_nu(z, nu);
            bool eig = is_ppt(rho, split);
            CHECK(poly == eig);
        }
    }
}

TEST_CASE("partial transpose is an involution and preserves the trace") {
    SystemSplit split = SystemSplit::parse("2x3");
    RngStream rng(13, 0);
    for (int t = 0; t < 200; ++t) {
        DensityMatrix rho = sample_hs_density(6, NumberField::complex(), rng);
        DensityMatrix pt = partial_transpose(rho, split);
        DensityMatrix back = partial_transpose(pt, split);
        CHECK((back.a - rho.a).norm() < 1e-14);
        CHECK(std::abs(pt.a.trace() - rho.a.trace()) < 1e-14);
    }
}

TEST_CASE("fast PSD test agrees with the eigenvalue test") {
    RngStream rng(17, 0);
    for (int t = 0; t < 2000; ++t) {
        // random symmetric matrix with eigenvalues straddling zero
        Eigen::MatrixXcd g(4, 4);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) g(i, j) = {rng.normal(), rng.normal()};
        Eigen::MatrixXcd h = g + g.adjoint();
        double shift = rng.uniform(-2.0, 6.0);
        Eigen::MatrixXcd m = h + shift * Eigen::MatrixXcd::Identity(4, 4);
        bool eig = is_psd(DensityMatrix(m)).positive;
        // skip numerically marginal cases at the PSD boundary
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m);
        if (std::abs(es.eigenvalues().minCoeff()) < 1e-8) continue;
        CHECK(is_psd_fast(m) == eig);
    }
}

TEST_CASE("quaternionic embedding doubles every eigenvalue") {
    // random quaternion-Hermitian matrix: a Hermitian, b complex antisymmetric
    RngStream rng(19, 0);
    Eigen::MatrixXcd g(4, 4), h(4, 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            g(i, j) = {rng.normal(), rng.normal()};
            h(i, j) = {rng.normal(), rng.normal()};
        }
    Eigen::MatrixXcd a = 0.5 * (g + g.adjoint());
    Eigen::MatrixXcd b = 0.5 * (h - h.transpose());
    DensityMatrix rho(a, b);
    REQUIRE(rho.quaternionic);
    Eigen::MatrixXcd e = embed_quaternionic(rho);
    REQUIRE(e.rows() == 8);
    CHECK((e - e.adjoint()).norm() < 1e-12);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(e);
    Eigen::VectorXd ev = es.eigenvalues();
    for (int i = 0; i < 8; i += 2) CHECK(ev[i] == doctest::Approx(ev[i + 1]).epsilon(1e-10));
    CHECK(ev.sum() == doctest::Approx(2.0 * a.trace().real()));
}
