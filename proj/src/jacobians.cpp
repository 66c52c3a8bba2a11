#include "hssep/jacobians.hpp"

#include "hssep/specialfns.hpp"
#include "hssep/statespace.hpp"

#include <cmath>
#include <stdexcept>

namespace hssep {

namespace {

// Taylor coefficients of the closed form about nu = 1 (exact rationals).
constexpr double kSeriesCoeff[14] = {
    1.0 / 396900.0,
    -1.0 / 396900.0,
    1.0 / 554400.0,
    -19.0 / 17463600.0,
    3929.0 / 7264857600.0,
    -131.0 / 807206400.0,
    -4973.0 / 58118860800.0,
    269.0 / 1117670400.0,
    -1168243.0 / 3512962252800.0,
    1726481.0 / 4516665753600.0,
    -1942779793.0 / 4805732361830400.0,
    109040671.0 / 266985131212800.0,
    -1815042809.0 / 4523042222899200.0,
    29778587023.0 / 76891717789286400.0,
};
// The closed form cancels like (nu-1)^9 and is noise-dominated near 1;
// with 14 terms the series truncation (~4e-7 * r^14) stays below the
// closed-form noise out to this radius.
constexpr double kSeriesRadius = 0.3;

} // namespace

double jac_real_closed(double nu) {
    if (!(nu > 0.0)) return 0.0;
    const double e = nu - 1.0;
    if (std::fabs(e) <= kSeriesRadius) {
        double acc = 0.0;
        for (int k = 13; k >= 0; --k) acc = acc * e + kSeriesCoeff[k];
        return acc;
    }
    const double p = nu * (nu + 2.0) * (nu * nu + 14.0 * nu + 8.0) + 1.0;
    const double q = 5.0 * std::pow(nu, 4) + 32.0 * std::pow(nu, 3) - 32.0 * nu - 5.0;
    const double pow9 = std::pow(e, 9);
    return std::pow(nu, 1.5) * (6.0 * p * std::log(nu) - 5.0 * q) / (3780.0 * pow9);
}

double jac_quadrature(double nu, JacobianSpec spec, double rel_tol) {
    if (spec.split != SplitTag::TwoQubit)
        throw std::invalid_argument("quadrature jacobian implemented for the 2x2 split only");
    const double w = 1.5 * spec.beta;
    QuadResult r = integrate_simplex2(
        [&](double r11, double r22) {
            if (r11 <= 0.0 || r22 <= 0.0 || r11 + r22 >= 1.0) return 0.0;
            Rho33Solution s = solve_rho33_for_nu(r11, r22, nu);
            if (s.rho33 <= 0.0 || s.rho44 <= 0.0) return 0.0;
            return std::pow(r11 * r22 * s.rho33 * s.rho44, w) * std::fabs(s.d_rho33_d_nu);
        },
        rel_tol);
    return r.value;
}

GammaRatioDensity::GammaRatioDensity(std::vector<double> alphas, std::vector<double> signs)
    : alphas_(std::move(alphas)), signs_(std::move(signs)) {
    if (alphas_.size() != signs_.size() || alphas_.empty())
        throw std::invalid_argument("alphas/signs size mismatch");
    double s_abs = 0.0;
    for (double s : signs_) s_abs += std::fabs(s);
    // |phi(t)| decays like exp(-(pi/2) sum|s_k| t); cut where the exponent is 80
    const double T = 160.0 / (M_PI * s_abs);
    const int m = 384;
    nodes_.resize(m);
    weights_.resize(m);
    phi_.resize(m);
    // Gauss-Legendre nodes on [0, T] by Newton iteration on Legendre polynomials
    for (int i = 0; i < m; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (m + 0.5));
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= m; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            double dp = m * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::fabs(dx) < 1e-15) break;
        }
        nodes_[i] = 0.5 * T * (1.0 - x);
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= m; ++k) {
            double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        double dp = m * (x * p1 - p0) / (x * x - 1.0);
        weights_[i] = T / ((1.0 - x * x) * dp * dp);
    }
    double lg0 = 0.0;
    for (double a : alphas_) lg0 += std::lgamma(a);
    for (int i = 0; i < m; ++i) {
        std::complex<double> acc = -lg0;
        for (size_t k = 0; k < alphas_.size(); ++k)
            acc += log_gamma(std::complex<double>(alphas_[k], signs_[k] * nodes_[i]));
        phi_[i] = std::exp(acc);
    }
}

double GammaRatioDensity::log_density(double x) const {
    double acc = 0.0;
    for (size_t i = 0; i < nodes_.size(); ++i) {
        const std::complex<double> e(std::cos(x * nodes_[i]), -std::sin(x * nodes_[i]));
        acc += weights_[i] * (phi_[i] * e).real();
    }
    return std::max(acc / M_PI, 0.0);
}

double GammaRatioDensity::density(double r) const {
    if (!(r > 0.0)) return 0.0;
    return log_density(std::log(r)) / r;
}

double GammaRatioDensity::expectation(const Fn1D& s, double rel_tol) const {
    Fn1D g = [&](double x) { return s(std::exp(x)) * log_density(x); };
    QuadResult lo = integrate_1d(g, -45.0, 0.0, rel_tol);
    QuadResult hi = integrate_1d(g, 0.0, 45.0, rel_tol);
    return lo.value + hi.value;
}

Eigen::VectorXd scenario_exponents(const ScenarioSpec& s) {
    Eigen::VectorXd e = Eigen::VectorXd::Zero(s.split.n);
    for (const auto& [pr, f] : s.active) {
        e[pr.first - 1] += 0.5 * f.df;
        e[pr.second - 1] += 0.5 * f.df;
    }
    return e;
}

double scenario_simplex_mass(const ScenarioSpec& s) {
    Eigen::VectorXd e = scenario_exponents(s);
    double acc = -std::lgamma(e.sum() + s.split.n);
    for (int i = 0; i < e.size(); ++i) acc += std::lgamma(e[i] + 1.0);
    return std::exp(acc);
}

GammaRatioDensity scenario_ratio_density(const ScenarioSpec& s, const std::vector<int>& num,
                                         const std::vector<int>& den) {
    Eigen::VectorXd e = scenario_exponents(s);
    std::vector<double> alphas, signs;
    for (int i : num) {
        alphas.push_back(e[i - 1] + 1.0);
        signs.push_back(1.0);
    }
    for (int i : den) {
        alphas.push_back(e[i - 1] + 1.0);
        signs.push_back(-1.0);
    }
    return GammaRatioDensity(std::move(alphas), std::move(signs));
}

namespace {

const GammaRatioDensity& full_density(int beta) {
    static const GammaRatioDensity d1(std::vector<double>(4, 2.5), {1, 1, -1, -1});
    static const GammaRatioDensity d2(std::vector<double>(4, 4.0), {1, 1, -1, -1});
    static const GammaRatioDensity d4(std::vector<double>(4, 7.0), {1, 1, -1, -1});
    switch (beta) {
        case 1: return d1;
        case 2: return d2;
        case 4: return d4;
    }
    throw std::invalid_argument("beta must be 1, 2 or 4");
}

double full_mass(int beta) {
    const double a = 1.5 * beta + 1.0;
    return std::exp(4.0 * std::lgamma(a) - std::lgamma(4.0 * a));
}

} // namespace

double jac_cf(double nu, int beta) {
    if (!(nu > 0.0)) return 0.0;
    return full_mass(beta) * full_density(beta).log_density(std::log(nu)) / nu;
}

double ansatz_integral(int beta) {
    const double z = full_mass(beta);
    const GammaRatioDensity& d = full_density(beta);
    // 2 int_0^1 J I^beta d nu, on the log axis
    QuadResult r = integrate_1d(
        [&](double x) { return d.log_density(x) * dyson_ansatz(std::exp(x), beta); }, -45.0, 0.0,
        1e-11);
    return 2.0 * z * r.value;
}

double total_volume(int beta) {
    double c;
    if (beta == 1) c = 512.0 * M_PI * M_PI / 27.0;
    else if (beta == 2) c = 32.0 * std::pow(M_PI, 6) / 27.0;
    else throw std::invalid_argument("total volume catalogued for beta = 1, 2 only");
    const GammaRatioDensity& d = full_density(beta);
    QuadResult r = integrate_1d([&](double x) { return d.log_density(x); }, -45.0, 0.0, 1e-11);
    return c * full_mass(beta) * 2.0 * r.value;
}

double jac_scenario_1423(double nu) {
    static const GammaRatioDensity d(std::vector<double>(4, 1.5), {1, 1, -1, -1});
    static const double z = std::exp(4.0 * std::lgamma(1.5) - std::lgamma(6.0));
    if (!(nu > 0.0)) return 0.0;
    return z * d.log_density(std::log(nu)) / nu;
}

} // namespace hssep
