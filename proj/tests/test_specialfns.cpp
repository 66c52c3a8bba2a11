#include "hssep/specialfns.hpp"

#include "doctest.h"

#include <cmath>

using namespace hssep;

TEST_CASE("complex log gamma reduces to lgamma on the real axis") {
    for (double x : {0.5, 1.0, 1.5, 2.5, 7.0, 12.25}) {
        CHECK(log_gamma({x, 0.0}).real() == doctest::Approx(std::lgamma(x)).epsilon(1e-12));
        CHECK(log_gamma({x, 0.0}).imag() == doctest::Approx(0.0));
    }
}

TEST_CASE("complex log gamma satisfies the recurrence") {
    std::complex<double> z{1.3, 2.7};
    std::complex<double> lhs = log_gamma(z + 1.0);
    std::complex<double> rhs = log_gamma(z) + std::log(z);
    CHECK(std::abs(lhs - rhs) < 1e-12);
}

TEST_CASE("gamma modulus decay used by the ratio densities") {
    // |Gamma(1/2 + it)|^2 = pi / cosh(pi t), so
    // |Gamma(5/2 + it)|^2 = (9/4 + t^2)(1/4 + t^2) pi / cosh(pi t)
    for (double t : {0.5, 1.0, 3.0, 8.0}) {
        double direct = 2.0 * log_gamma({2.5, t}).real();
        double expect = std::log((2.25 + t * t) * (0.25 + t * t) * M_PI) -
                        std::log(std::cosh(M_PI * t));
        CHECK(direct == doctest::Approx(expect).epsilon(1e-12));
    }
}

TEST_CASE("regularized incomplete beta basics") {
    BetaParams half_two{0.5, 2.0};
    CHECK(regularized_beta(0.0, half_two) == doctest::Approx(0.0));
    CHECK(regularized_beta(1.0, half_two) == doctest::Approx(1.0));
    // symmetry I_x(a,b) = 1 - I_{1-x}(b,a)
    BetaParams p{1.7, 3.2};
    BetaParams q{3.2, 1.7};
    for (double x : {0.1, 0.35, 0.8}) {
        CHECK(regularized_beta(x, p) ==
              doctest::Approx(1.0 - regularized_beta(1.0 - x, q)).epsilon(1e-12));
    }
    CHECK(beta_complete(0.5, 2.0) == doctest::Approx(4.0 / 3.0));
    CHECK(incomplete_beta(0.25, half_two) ==
          doctest::Approx(regularized_beta(0.25, half_two) * 4.0 / 3.0));
}

TEST_CASE("central ansatz has the announced closed form") {
    for (double nu : {0.05, 0.3, 0.77, 1.0}) {
        double closed = (3.0 - nu) * std::sqrt(nu) / 2.0;
        CHECK(regularized_beta_half_two(nu) == doctest::Approx(closed).epsilon(1e-13));
        CHECK(regularized_beta(nu, {0.5, 2.0}) == doctest::Approx(closed).epsilon(1e-12));
        CHECK(dyson_ansatz(nu, 2) == doctest::Approx(closed * closed).epsilon(1e-12));
        CHECK(dyson_ansatz(nu, 4) == doctest::Approx(std::pow(closed, 4)).epsilon(1e-12));
    }
    CHECK(regularized_beta_half_two(1.0) == doctest::Approx(1.0));
}

TEST_CASE("legacy fitted forms are monotone in nu") {
    double prev_r = -1.0, prev_c = -1.0;
    for (double nu = 0.05; nu <= 1.0; nu += 0.05) {
        double r = legacy_ansatz(nu, LegacyAnsatz::Real);
        double c = legacy_ansatz(nu, LegacyAnsatz::Complex);
        CHECK(r > prev_r);
        CHECK(c > prev_c);
        prev_r = r;
        prev_c = c;
    }
}
