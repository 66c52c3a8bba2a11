// Acceptance harness: one criterion per invocation (--criterion k), one
// final PASS/FAIL line per criterion, exit 0 on pass and 1 on fail.

#include "hssep/catalog.hpp"
#include "hssep/estimators.hpp"
#include "hssep/jacobians.hpp"
#include "hssep/positivity.hpp"
#include "hssep/sampling.hpp"
#include "hssep/specialfns.hpp"

#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <memory>
#include <string>
#include <vector>

using namespace hssep;

namespace {

bool g_ok = true;

void check(bool ok, const char* fmt, ...) {
    va_list args;
    va_start(args, fmt);
    std::printf("  [%s] ", ok ? " ok" : "BAD");
    std::vprintf(fmt, args);
    std::printf("\n");
    va_end(args);
    if (!ok) g_ok = false;
}

Eigen::VectorXd log_grid(double lo, double hi, int m) {
    Eigen::VectorXd g(m);
    for (int i = 0; i < m; ++i) g[i] = lo * std::pow(hi / lo, double(i) / (m - 1));
    return g;
}

// Log-spaced grid with a node pinned at nu = 1, where every catalogued
// separability function has its kink (keeps interpolation bias negligible).
Eigen::VectorXd kinked_grid(double lo, double hi, int m) {
    const int half = m / 2;
    Eigen::VectorXd g(m);
    for (int i = 0; i < half; ++i) g[i] = lo * std::pow(1.0 / lo, double(i) / (half - 1));
    for (int i = half; i < m; ++i) g[i] = std::pow(hi, double(i - half + 1) / (m - half));
    return g;
}

SepFunctionTable run_scenario(const ScenarioRecord& rec, const Eigen::VectorXd& grid,
                              long n_per_point, std::uint64_t seed, bool qmc) {
    ScenarioSpec spec = rec.spec();
    RngStream rng(seed, 0);
    if (!qmc) return estimate_sepfunc(spec, rec.ratio->num, rec.ratio->den, grid,
                                      n_per_point, rng);
    ScenarioSampler probe(spec);
    LowDiscrepancyStream lds(probe.udim());
    return estimate_sepfunc(spec, rec.ratio->num, rec.ratio->den, grid, n_per_point, rng,
                            &lds);
}

// ---- criterion 1: catalogued probabilities via Monte Carlo table assembly

void criterion1() {
    const char* ids[] = {
        // two-qubit, single pair
        "2x2:real:[(2,3)]", "2x2:complex:[(2,3)]", "2x2:quaternion:[(2,3)]",
        // two-qubit, two pairs
        "2x2:real:[(1,2),(2,3)]", "2x2:real:[(1,4),(2,3)]", "2x2:mixed:[c(1,2),r(2,3)]",
        "2x2:mixed:[c(1,4),r(2,3)]", "2x2:mixed:[c(2,3),r(2,4)]",
        "2x2:complex:[(1,2),(2,3)]",
        // two-qubit, three pairs
        "2x2:real:[(1,2),(2,3),(3,4)]", "2x2:mixed:[c(1,2),r(2,3),r(3,4)]",
        // qubit-qutrit
        "2x3:real:[(2,4)]", "2x3:complex:[(2,4)]", "2x3:real:[(1,2),(1,5)]",
        "2x3:real:[(1,3),(1,6)]", "2x3:real:[(1,4),(2,6)]", "2x3:real:[(1,5),(2,4)]",
        "2x3:mixed:[c(1,2),r(2,4)]", "2x3:complex:[(1,2),(2,4)]",
        // qutrit-qutrit
        "3x3:complex:[(2,4)]", "3x3:complex:[(6,8)]", "3x3:complex:[(2,9),(6,9)]",
        // 8x8 splits
        "4x2:complex:[(2,5)]", "4x2:complex:[(2,5),(4,7)]", "2x2x2:complex:[(1,8),(5,7)]"};

    const Eigen::VectorXd grid = kinked_grid(0.05, 20.0, 40);
    const long n_per_point = 1000000;
    std::uint64_t seed = 101;
    for (const char* id : ids) {
        const ScenarioRecord* rec = find_record(id);
        if (!rec || !rec->p || !rec->c || !rec->ratio) {
            check(false, "missing catalogue data for %s", id);
            continue;
        }
        SepFunctionTable t = run_scenario(*rec, grid, n_per_point, seed++, true);
        ScenarioSpec spec = rec->spec();
        GammaRatioDensity d = scenario_ratio_density(spec, rec->ratio->num, rec->ratio->den);
        VolumeTriple v =
            assemble_probability(t, rec->c->value, d, scenario_simplex_mass(spec));
        if (rec->ratio2 && rec->s_exact2) {
            GammaRatioDensity d2 =
                scenario_ratio_density(spec, rec->ratio2->num, rec->ratio2->den);
            double f2 = d2.expectation(rec->s_exact2) / std::sqrt(rec->c->value);
            v.p *= f2;
            v.p_err *= f2;
        }
        const double target = rec->p->value;
        const double z = (v.p - target) / std::max(v.p_err, 1e-15);
        const double rel = std::fabs(v.p / target - 1.0);
        const bool ok = std::fabs(z) <= 3.0 && rel <= 0.01;
        check(ok, "%-34s P_hat = %.6f vs %s = %.6f  (z = %+.2f, rel = %.4f)%s", id, v.p,
              rec->p->expr.c_str(), target, z, rel,
              rec->mc_consistent ? "" : "  [catalogued value fails independent cross-checks]");
    }
}

// ---- criterion 2: pointwise separability functions vs closed forms

void criterion2() {
    const char* ids[] = {
        "2x2:real:[(2,3)]",            // 2 sqrt(v)
        "2x2:complex:[(2,3)]",         // pi v
        "2x2:quaternion:[(2,3)]",      // pi^2 v^2 / 2
        "2x2:real:[(1,4),(2,3)]",      // self-dual peak
        "2x2:complex:[(1,4),(2,3)]",   // self-dual peak, complex
        "2x2:mixed:[c(1,4),r(2,3)]",   // sqrt(v) / 1/v branches
        "2x2:mixed:[c(2,3),r(2,4)]",   // mixed field rise
        "2x3:real:[(1,2),(2,6)]",      // arc-cosine form
        "2x3:real:[(1,2),(3,4)]",      // arcsine form, disjoint pairs
        "2x3:mixed:[c(2,3),r(2,4)]",   // (3 - v) sqrt(v) proportional
        "2x3:complex:[(1,3),(2,4)]",   // saturating complex form
        "2x3:real:[(1,2),(1,3),(3,4)]",// three-pair transcendental chain
        "3x3:complex:[(2,4)]",         // pi v on a 9x9 split
        "2x2x2:complex:[(1,4),(7,8)]", // tripartite, disjoint pairs
    };
    const Eigen::VectorXd grid = log_grid(0.1, 10.0, 12);
    const long n_per_point = 200000;
    std::uint64_t seed = 202;
    for (const char* id : ids) {
        const ScenarioRecord* rec = find_record(id);
        if (!rec || !rec->s_exact || !rec->ratio) {
            check(false, "missing closed form for %s", id);
            continue;
        }
        SepFunctionTable t = run_scenario(*rec, grid, n_per_point, seed++, true);
        double worst = 0.0;
        int worst_i = 0;
        for (int i = 0; i < grid.size(); ++i) {
            double exact = rec->s_exact(grid[i]);
            double z = (t.estimate[i] - exact) / std::max(t.std_err[i], 1e-12);
            if (std::fabs(z) > std::fabs(worst)) {
                worst = z;
                worst_i = i;
            }
        }
        check(std::fabs(worst) <= 3.0, "%-34s max |z| = %.2f at v = %.3f", id,
              std::fabs(worst), grid[worst_i]);
    }
}

// ---- criterion 3: quadrature identities

void criterion3() {
    const double pi = M_PI;
    auto rel_check = [&](const char* name, double got, double want, double tol) {
        double rel = std::fabs(got / want - 1.0);
        check(rel <= tol, "%-44s rel err = %.2e", name, rel);
    };
    rel_check("integral of the real marginal jacobian",
              total_volume(1) / (512 * pi * pi / 27), pi * pi / 1146880, 1e-6);
    rel_check("integral of the complex marginal jacobian",
              total_volume(2) / (32 * std::pow(pi, 6) / 27), 1.0 / 1009008000, 1e-6);
    rel_check("ansatz integral, beta = 1", ansatz_integral(1), 1.0 / 151200, 1e-6);
    rel_check("ansatz integral, beta = 2", ansatz_integral(2), 71.0 / 99891792000.0, 1e-6);
    rel_check("ansatz integral, beta = 4", ansatz_integral(4),
              5989.0 / 358347086242825680000.0, 1e-6);
    rel_check("total volume, beta = 1", total_volume(1), std::pow(pi, 4) / 60480, 1e-6);
    rel_check("total volume, beta = 2", total_volume(2), std::pow(pi, 6) / 851350500, 1e-6);
    for (double nu : {0.25, 0.5, 2.0, 4.0}) {
        char name[64];
        std::snprintf(name, sizeof(name), "jacobian quadrature at nu = %.2f", nu);
        rel_check(name, jac_quadrature(nu, {1}, 1e-10), jac_real_closed(nu), 1e-8);
    }
}

// ---- criterion 4: full-system conjectures via flat-measure sampling

void criterion4() {
    const long n = 10000000;
    std::uint64_t stream = 0;
    for (const auto& c : conjectures()) {
        SystemSplit split = SystemSplit::parse(c.system);
        NumberField f =
            c.field == FieldTag::Real ? NumberField::real() : NumberField::complex();
        RngStream rng(404, stream++);
        ProbabilityEstimate e =
            estimate_prob_direct(split.n, f, split, n, rng, c.probability.value);
        double z = (e.p_hat - c.probability.value) / e.std_err;
        // a stable deviation is evidence about the conjecture, not an
        // estimator failure; the criterion requires the estimate itself
        bool ok = std::isfinite(e.p_hat) && e.std_err > 0 && e.std_err < 2e-4;
        check(ok, "%-20s p_hat = %.6f +- %.6f vs %s = %.6f  (z = %+.2f) -> %s", c.name.c_str(),
              e.p_hat, e.std_err, c.probability.expr.c_str(), c.probability.value, z,
              std::fabs(z) <= 3.0 ? "CONSISTENT" : "DEVIATES (evidence against)");
    }
}

// ---- criterion 5: ansatz fits

void criterion5() {
    // (a) full complex two-qubit separability function vs I_v(1/2,2)^2
    ScenarioSpec full = ScenarioSpec::parse("2x2:complex:full");
    const int m = 17;
    Eigen::VectorXd grid(m);
    for (int i = 0; i < m; ++i) grid[i] = 0.05 + (1.0 - 0.05) * i / (m - 1);
    // The full two-qubit box has measure 2^12 and an acceptance fraction near
    // 8e-4, so a 2% sup-norm test needs common random numbers: evaluate every
    // grid point on the same low-discrepancy draws so that the normalized
    // ratio S_hat(nu)/S_hat(1) has strongly correlated numerator/denominator.
    std::vector<std::unique_ptr<ScenarioSampler>> samplers;
    for (int i = 0; i < m; ++i) {
        samplers.push_back(std::make_unique<ScenarioSampler>(full));
        samplers[i]->set_diag(combo_diag(4, {1, 4}, {2, 3}, grid[i]));
    }
    LowDiscrepancyStream lds(samplers[0]->udim());
    std::vector<long> hits(m, 0);
    const long n5 = 40000000;
    for (long k = 0; k < n5; ++k) {
        const std::vector<double>& u = lds.next();
        for (int i = 0; i < m; ++i) hits[i] += samplers[i]->sample(u.data()).ppt;
    }
    double s1 = static_cast<double>(hits[m - 1]); // grid ends at nu = 1
    double sup = 0.0;
    for (int i = 0; i < m; ++i) {
        double dev = std::fabs(hits[i] / s1 - dyson_ansatz(grid[i], 2));
        sup = std::max(sup, dev);
    }
    check(sup <= 0.02,
          "complex two-qubit S_hat/S_hat(1) vs I_v(1/2,2)^2: sup deviation %.4f on [0.05,1]",
          sup);

    // (b) real qubit-qutrit exponent fit
    ScenarioSpec qq = ScenarioSpec::parse("2x3:real:full");
    // Keep both ratios at or below 1: the power law (v1 v2)^x only describes
    // the small-ratio regime, and cells past 1 saturate toward the plateau.
    Eigen::VectorXd g(7);
    g << 0.3, 0.4, 0.55, 0.7, 0.85, 0.95, 1.0;
    RngStream rng2(506, 0);
    SepSurfaceTable surf = estimate_sepfunc_surface(qq, g, g, 1000000, rng2);
    ExponentFit fit = fit_exponent(surf);
    check(fit.x_star >= 0.45 && fit.x_star <= 0.55,
          "real qubit-qutrit S(v1,v2) ~ (v1 v2)^x fit: x* = %.4f (rss %.3e)", fit.x_star,
          fit.goodness);
}

// ---- criterion 6: minor-relaxation bounds

void criterion6() {
    const Eigen::VectorXd grid = log_grid(0.05, 20.0, 12);
    const long n = 400000;
    struct Case {
        MinorRelaxation which;
        const char* name;
        double bound;
    } cases[] = {{MinorRelaxation::Z23, "single-minor relaxation", 0.5 + 512.0 / (135.0 * M_PI * M_PI)},
                 {MinorRelaxation::Combined, "combined-minor relaxation",
                  1024.0 / (135.0 * M_PI * M_PI)}};
    std::uint64_t stream = 0;
    for (const Case& c : cases) {
        RngStream rng(606, stream++);
        RelaxationResult r = upper_bound_minor_relaxation(c.which, grid, n, rng);
        double worst = 0.0;
        for (int i = 0; i < grid.size(); ++i) {
            double exact = minor_relaxation_s(c.which, grid[i]);
            double z = (r.table.estimate[i] - exact) / std::max(r.table.std_err[i], 1e-12);
            worst = std::max(worst, std::fabs(z));
        }
        check(worst <= 3.0, "%s S_approx: max |z| = %.2f over %d grid points", c.name, worst,
              (int)grid.size());
        double rel = std::fabs(r.bound / c.bound - 1.0);
        check(rel <= 0.01, "%s upper bound: %.5f vs %.5f (rel %.2e)", c.name, r.bound,
              c.bound, rel);
    }
}

// ---- criterion 7: property suites

void criterion7() {
    // partial-transpose involution across all splits
    {
        RngStream rng(701, 0);
        bool ok = true;
        for (const char* dims : {"2x2", "2x3", "3x3", "4x2", "2x2x2"}) {
            SystemSplit split = SystemSplit::parse(dims);
            for (int t = 0; t < 200; ++t) {
                DensityMatrix rho = sample_hs_density(split.n, NumberField::complex(), rng);
                DensityMatrix back = partial_transpose(partial_transpose(rho, split), split);
                if ((back.a - rho.a).norm() > 1e-13) ok = false;
            }
        }
        check(ok, "partial transpose is an involution on every split");
    }

    // diagonal cancellation: feasibility and PPT verdicts at fixed z depend
    // on the diagonal only through the ratio variables
    {
        RngStream rng(702, 0);
        ScenarioSpec spec = ScenarioSpec::parse("2x2:complex:[(1,4),(2,3)]");
        ScenarioSampler sampler(spec);
        long violations = 0;
        for (int t = 0; t < 10000; ++t) {
            double nu = std::exp(rng.uniform(-2.0, 2.0));
            // two different diagonals with the same ratio
            double a = rng.uniform(0.2, 2.0), b = rng.uniform(0.2, 2.0);
            Eigen::VectorXd d1(4), d2(4);
            d1 << std::sqrt(nu) * a, 1.0, a * a, std::sqrt(nu) * a;
            d2 << std::sqrt(nu) * b, b * b, 1.0, std::sqrt(nu) * b;
            d1 /= d1.sum();
            d2 /= d2.sum();
            std::vector<double> u(sampler.udim());
            for (double& x : u) x = rng.uniform();
            sampler.set_diag(d1);
            auto o1 = sampler.sample(u.data());
            sampler.set_diag(d2);
            auto o2 = sampler.sample(u.data());
            if (o1.feasible != o2.feasible || o1.ppt != o2.ppt) ++violations;
        }
        check(violations == 0, "diagonal cancellation: %ld violations in 10000 trials",
              violations);
    }

    // duality S_A(v) = S_B(1/v), exact and Monte Carlo
    {
        bool exact_ok = true;
        int pairs = 0;
        for (const auto& r : all_records()) {
            if (!r.s_exact || r.dual_id.empty()) continue;
            const ScenarioRecord* d = find_record(r.dual_id);
            if (!d || !d->s_exact) continue;
            ++pairs;
            for (double v : {0.2, 0.9, 1.0, 3.7})
                if (std::fabs(r.s_exact(v) - d->s_exact(1.0 / v)) >
                    1e-12 * std::max(1.0, r.s_exact(v)))
                    exact_ok = false;
        }
        check(exact_ok && pairs >= 10, "catalogued duals satisfy S_A(v) = S_B(1/v) (%d pairs)",
              pairs);

        const ScenarioRecord* a = find_record("2x2:real:[(2,3)]");
        const ScenarioRecord* b = find_record("2x2:real:[(1,4)]");
        Eigen::VectorXd g(5);
        g << 0.25, 0.5, 1.0, 2.0, 4.0;
        Eigen::VectorXd ginv(5);
        for (int i = 0; i < 5; ++i) ginv[i] = 1.0 / g[4 - i];
        SepFunctionTable ta = run_scenario(*a, g, 200000, 703, false);
        SepFunctionTable tb = run_scenario(*b, ginv, 200000, 704, false);
        bool mc_ok = true;
        for (int i = 0; i < 5; ++i) {
            double err = std::hypot(ta.std_err[i], tb.std_err[4 - i]);
            if (std::fabs(ta.estimate[i] - tb.estimate[4 - i]) > 4 * err) mc_ok = false;
        }
        check(mc_ok, "Monte Carlo duality on the single-pair two-qubit pair");
    }

    // quaternionic eigenvalue pairing
    {
        RngStream rng(705, 0);
        bool ok = true;
        for (int t = 0; t < 200; ++t) {
            // random quaternion-Hermitian matrix via its Cayley-Dickson parts
            Eigen::MatrixXcd g(4, 4), h(4, 4);
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j) {
                    g(i, j) = {rng.normal(), rng.normal()};
                    h(i, j) = {rng.normal(), rng.normal()};
                }
            DensityMatrix rho(0.5 * (g + g.adjoint()), 0.5 * (h - h.transpose()));
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(embed_quaternionic(rho));
            Eigen::VectorXd ev = es.eigenvalues();
            for (int i = 0; i < ev.size(); i += 2)
                if (std::fabs(ev[i] - ev[i + 1]) > 1e-10) ok = false;
        }
        check(ok, "quaternionic embedding carries every eigenvalue twice");
    }

    // fixed-seed determinism
    {
        const ScenarioRecord* rec = find_record("2x2:complex:[(2,3)]");
        Eigen::VectorXd g(4);
        g << 0.3, 0.8, 1.5, 5.0;
        SepFunctionTable t1 = run_scenario(*rec, g, 100000, 706, false);
        SepFunctionTable t2 = run_scenario(*rec, g, 100000, 706, false);
        bool ok = true;
        for (int i = 0; i < 4; ++i) {
            if (t1.n_ppt[i] != t2.n_ppt[i] || t1.n_feasible[i] != t2.n_feasible[i]) ok = false;
        }
        RngStream r1(707, 3), r2(707, 3);
        for (int i = 0; i < 1000; ++i)
            if (r1.uniform() != r2.uniform()) ok = false;
        check(ok, "re-running with a fixed seed reproduces every count");
    }
}

} // namespace

int main(int argc, char** argv) {
    int criterion = 0;
    for (int i = 1; i + 1 < argc; ++i) {
        if (std::strcmp(argv[i], "--criterion") == 0) criterion = std::atoi(argv[i + 1]);
    }
    const char* titles[] = {"",
                            "catalogued probabilities reproduced by Monte Carlo assembly",
                            "separability functions match closed forms pointwise",
                            "quadrature integral identities",
                            "full-system conjecture sampling",
                            "ansatz-fit reproduction",
                            "minor-relaxation bounds",
                            "property suites"};
    if (criterion < 1 || criterion > 7) {
        std::fprintf(stderr, "usage: acceptance --criterion <1..7>\n");
        return 2;
    }
    switch (criterion) {
        case 1: criterion1(); break;
        case 2: criterion2(); break;
        case 3: criterion3(); break;
        case 4: criterion4(); break;
        case 5: criterion5(); break;
        case 6: criterion6(); break;
        case 7: criterion7(); break;
    }
    std::printf("criterion %d (%s): %s\n", criterion, titles[criterion],
                g_ok ? "PASS" : "FAIL");
    return g_ok ? 0 : 1;
}
