#include "hssep/specialfns.hpp"

#include <cmath>
#include <stdexcept>

namespace hssep {

namespace {

// Lanczos coefficients (g = 7, 9 terms).
constexpr double kLanczosG = 7.0;
constexpr double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

} // namespace

std::complex<double> log_gamma(std::complex<double> z) {
    if (z.real() < 0.5) {
        // reflection: log Gamma(z) = log(pi / sin(pi z)) - log Gamma(1 - z)
        const double pi = M_PI;
        return std::log(pi) - std::log(std::sin(pi * z)) - log_gamma(1.0 - z);
    }
    z -= 1.0;
    std::complex<double> x = kLanczos[0];
    for (int i = 1; i < 9; ++i) x += kLanczos[i] / (z + static_cast<double>(i));
    std::complex<double> t = z + kLanczosG + 0.5;
    return 0.5 * std::log(2.0 * M_PI) + (z + 0.5) * std::log(t) - t + std::log(x);
}

double log_beta(double a, double b) {
    return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
}

double beta_complete(double a, double b) { return std::exp(log_beta(a, b)); }

namespace {

// Continued fraction for the regularized incomplete beta (modified Lentz).
double betacf(double a, double b, double x) {
    constexpr int kMaxIter = 500;
    constexpr double kEps = 1e-16, kFpMin = 1e-300;
    double qab = a + b, qap = a + 1.0, qam = a - 1.0;
    double c = 1.0, d = 1.0 - qab * x / qap;
    if (std::fabs(d) < kFpMin) d = kFpMin;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= kMaxIter; ++m) {
        int m2 = 2 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kFpMin) d = kFpMin;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kFpMin) c = kFpMin;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kFpMin) d = kFpMin;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kFpMin) c = kFpMin;
        d = 1.0 / d;
        double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) <= kEps) break;
    }
    return h;
}

} // namespace

double regularized_beta(double x, BetaParams p) {
    if (!(p.a > 0.0) || !(p.b > 0.0)) throw std::invalid_argument("beta parameters must be positive");
    if (x < 0.0 || x > 1.0) throw std::invalid_argument("x outside [0,1]");
    if (x == 0.0) return 0.0;
    if (x == 1.0) return 1.0;
    double front = std::exp(p.a * std::log(x) + p.b * std::log(1.0 - x) - log_beta(p.a, p.b));
    if (x < (p.a + 1.0) / (p.a + p.b + 2.0))
        return front * betacf(p.a, p.b, x) / p.a;
    return 1.0 - std::exp(p.b * std::log(1.0 - x) + p.a * std::log(x) - log_beta(p.b, p.a)) *
                     betacf(p.b, p.a, 1.0 - x) / p.b;
}

double incomplete_beta(double x, BetaParams p) {
    return regularized_beta(x, p) * beta_complete(p.a, p.b);
}

double regularized_beta_half_two(double nu) {
    if (nu < 0.0 || nu > 1.0) throw std::invalid_argument("nu outside [0,1]");
    return 0.5 * (3.0 - nu) * std::sqrt(nu);
}

double dyson_ansatz(double nu, int beta) {
    if (beta != 1 && beta != 2 && beta != 4) throw std::invalid_argument("beta must be 1, 2 or 4");
    return std::pow(regularized_beta_half_two(nu), beta);
}

double legacy_ansatz(double nu, LegacyAnsatz which) {
    if (nu < 0.0 || nu > 1.0) throw std::invalid_argument("nu outside [0,1]");
    if (which == LegacyAnsatz::Real) {
        const double b = beta_complete(0.5, std::sqrt(3.0));
        return (4.0 + 1.0 / (5.0 * std::sqrt(2.0))) * std::pow(b, 8) *
               incomplete_beta(nu, {0.5, std::sqrt(3.0)});
    }
    const double a = 2.0 * std::sqrt(6.0) / 5.0, bb = 3.0 / std::sqrt(2.0);
    const double b = beta_complete(a, bb);
    const double scale = 1e8 / (2.0 * std::cbrt(2.0) + std::pow(10.0, 0.75) / std::pow(3.0, 2.0 / 3.0));
    return scale * std::pow(b, 14) * incomplete_beta(nu, {a, bb});
}

} // namespace hssep
