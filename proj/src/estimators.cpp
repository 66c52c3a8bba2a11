#include "hssep/estimators.hpp"

#include "hssep/positivity.hpp"
#include "hssep/statespace.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace hssep {

namespace {

bool ldlt_psd(const Eigen::MatrixXd& m, double eps = 1e-10) {
    Eigen::MatrixXd s = m;
    s.diagonal().array() += eps;
    Eigen::LDLT<Eigen::MatrixXd> f(s);
    return f.info() == Eigen::Success && f.isPositive();
}

bool ldlt_psd(const Eigen::MatrixXcd& m, double eps = 1e-10) {
    return is_psd_fast(m, eps);
}

} // namespace

Eigen::VectorXd combo_diag(int n, const std::vector<int>& num, const std::vector<int>& den,
                           double value) {
    if (!(value > 0.0)) throw std::invalid_argument("ratio value must be positive");
    Eigen::VectorXd a = Eigen::VectorXd::Zero(n);
    for (int i : num) a[i - 1] += 1.0;
    for (int i : den) a[i - 1] -= 1.0;
    const double nrm2 = a.squaredNorm();
    if (nrm2 == 0.0) throw std::invalid_argument("degenerate diagonal combo");
    Eigen::VectorXd x = a * (std::log(value) / nrm2);
    Eigen::VectorXd d = x.array().exp();
    return d / d.sum();
}

ScenarioSampler::ScenarioSampler(const ScenarioSpec& s) : spec_(s), n_(s.split.n) {
    bool any_q = false, all_r = true;
    udim_ = 0;
    for (const auto& [pr, f] : s.active) {
        any_q = any_q || f.tag == FieldTag::Quaternion;
        all_r = all_r && f.tag == FieldTag::Real;
        udim_ += f.df;
    }
    mode_ = any_q ? Mode::Quaternion : all_r ? Mode::Real : Mode::Complex;
    dim_ = mode_ == Mode::Quaternion ? 2 * n_ : n_;

    const int blk = s.split.block;
    for (const auto& [pr, f] : s.active) {
        Pair p{};
        p.i = pr.first - 1;
        p.j = pr.second - 1;
        p.df = f.df;
        const int a = p.i / blk, si = p.i % blk;
        const int b = p.j / blk, tj = p.j % blk;
        p.ti = a * blk + tj;
        p.tj = b * blk + si;
        p.t_conj = p.ti > p.tj;
        if (p.t_conj) std::swap(p.ti, p.tj);
        pairs_.push_back(p);
    }
    if (mode_ == Mode::Real) {
        mr_.setZero(n_, n_);
        ptr_.setZero(n_, n_);
    } else {
        mc_.setZero(dim_, dim_);
        ptc_.setZero(dim_, dim_);
    }
}

void ScenarioSampler::set_diag(const Eigen::VectorXd& diag) {
    if (diag.size() != n_) throw std::invalid_argument("diagonal size mismatch");
    diag_ = diag;
    for (auto& p : pairs_) p.scale = std::sqrt(diag[p.i] * diag[p.j]);
    if (mode_ == Mode::Real) {
        mr_.diagonal() = diag;
        ptr_.diagonal() = diag;
    } else {
        for (int i = 0; i < n_; ++i) {
            mc_(i, i) = ptc_(i, i) = diag[i];
            if (mode_ == Mode::Quaternion) mc_(n_ + i, n_ + i) = ptc_(n_ + i, n_ + i) = diag[i];
        }
    }
}

ScenarioSampler::Outcome ScenarioSampler::sample(const double* u) {
    using Cplx = std::complex<double>;
    int k = 0;
    // box pre-rejection: any |z| > 1 already violates the 2x2 minors
    for (const auto& p : pairs_) {
        double n2 = 0.0;
        for (int c = 0; c < p.df; ++c) {
            const double v = 2.0 * u[k + c] - 1.0;
            n2 += v * v;
        }
        if (n2 > 1.0) return {false, false};
        k += p.df;
    }
    k = 0;
    for (const auto& p : pairs_) {
        double z[4] = {0, 0, 0, 0};
        for (int c = 0; c < p.df; ++c) z[c] = 2.0 * u[k + c] - 1.0;
        k += p.df;
        if (mode_ == Mode::Real) {
            const double v = z[0] * p.scale;
            mr_(p.i, p.j) = mr_(p.j, p.i) = v;
            ptr_(p.ti, p.tj) = ptr_(p.tj, p.ti) = v;
        } else if (mode_ == Mode::Complex) {
            const Cplx v = Cplx(z[0], z[1]) * p.scale;
            mc_(p.i, p.j) = v;
            mc_(p.j, p.i) = std::conj(v);
            const Cplx tv = p.t_conj ? std::conj(v) : v;
            ptc_(p.ti, p.tj) = tv;
            ptc_(p.tj, p.ti) = std::conj(tv);
        } else {
            const Cplx a = Cplx(z[0], z[1]) * p.scale; // 1, i part
            const Cplx b = Cplx(z[2], z[3]) * p.scale; // j, k part
            // embedded layout [[A, B], [-conj(B), conj(A)]]
            auto put_a = [&](int r, int c, Cplx v) {
                mc_(r, c) = v;
                mc_(c, r) = std::conj(v);
                mc_(n_ + r, n_ + c) = std::conj(v);
                mc_(n_ + c, n_ + r) = v;
            };
            auto put_b = [&](int r, int c, Cplx v) {
                mc_(r, n_ + c) = v;
                mc_(c, n_ + r) = -v;
                mc_(n_ + r, c) = -std::conj(v);
                mc_(n_ + c, r) = std::conj(v);
            };
            put_a(p.i, p.j, a);
            put_b(p.i, p.j, b);
            auto put_a_t = [&](int r, int c, Cplx v) {
                ptc_(r, c) = v;
                ptc_(c, r) = std::conj(v);
                ptc_(n_ + r, n_ + c) = std::conj(v);
                ptc_(n_ + c, n_ + r) = v;
            };
            auto put_b_t = [&](int r, int c, Cplx v) {
                ptc_(r, n_ + c) = v;
                ptc_(c, n_ + r) = -v;
                ptc_(n_ + r, c) = -std::conj(v);
                ptc_(n_ + c, r) = std::conj(v);
            };
            put_a_t(p.ti, p.tj, p.t_conj ? std::conj(a) : a);
            put_b_t(p.ti, p.tj, p.t_conj ? -b : b); // antisymmetric block
        }
    }
    Outcome o{};
    if (mode_ == Mode::Real) {
        o.feasible = ldlt_psd(mr_);
        o.ppt = o.feasible && ldlt_psd(ptr_);
    } else {
        o.feasible = ldlt_psd(mc_);
        o.ppt = o.feasible && ldlt_psd(ptc_);
    }
    return o;
}

ScenarioSampler::Outcome ScenarioSampler::sample(RngStream& rng) {
    double u[24];
    for (int i = 0; i < udim_; ++i) u[i] = rng.uniform();
    return sample(u);
}

SepFunctionTable estimate_sepfunc(const ScenarioSpec& s, const std::vector<int>& num,
                                  const std::vector<int>& den, const Eigen::VectorXd& grid,
                                  long n_per_point, RngStream& rng, LowDiscrepancyStream* qmc) {
    SepFunctionTable t;
    const int m = static_cast<int>(grid.size());
    t.grid = grid;
    t.estimate.resize(m);
    t.std_err.resize(m);
    t.c_estimate.resize(m);
    t.n_total.assign(m, n_per_point);
    t.n_feasible.assign(m, 0);
    t.n_ppt.assign(m, 0);
    t.box_measure = box_measure(s);

    ScenarioSampler sampler(s);
    for (int g = 0; g < m; ++g) {
        sampler.set_diag(combo_diag(s.split.n, num, den, grid[g]));
        long feas = 0, ppt = 0;
        for (long i = 0; i < n_per_point; ++i) {
            ScenarioSampler::Outcome o =
                qmc ? sampler.sample(qmc->next().data()) : sampler.sample(rng);
            feas += o.feasible;
            ppt += o.ppt;
        }
        t.n_feasible[g] = feas;
        t.n_ppt[g] = ppt;
        const double p = static_cast<double>(ppt) / n_per_point;
        t.estimate[g] = t.box_measure * p;
        t.std_err[g] = t.box_measure * std::sqrt(p * (1.0 - p) / n_per_point);
        t.c_estimate[g] = t.box_measure * static_cast<double>(feas) / n_per_point;
    }
    return t;
}

SepSurfaceTable estimate_sepfunc_surface(const ScenarioSpec& s, const Eigen::VectorXd& grid1,
                                         const Eigen::VectorXd& grid2, long n_per_point,
                                         RngStream& rng) {
    SepSurfaceTable t;
    t.grid1 = grid1;
    t.grid2 = grid2;
    const int m1 = static_cast<int>(grid1.size()), m2 = static_cast<int>(grid2.size());
    t.estimate.resize(m1, m2);
    t.std_err.resize(m1, m2);
    t.box_measure = box_measure(s);

    ScenarioSampler sampler(s);
    RatioVars r{Eigen::VectorXd::Ones(s.split.ratio_count)};
    for (int a = 0; a < m1; ++a)
        for (int b = 0; b < m2; ++b) {
            r.values[0] = grid1[a];
            r.values[1] = grid2[b];
            sampler.set_diag(canonical_diag(s.split, r));
            long ppt = 0;
            for (long i = 0; i < n_per_point; ++i) ppt += sampler.sample(rng).ppt;
            const double p = static_cast<double>(ppt) / n_per_point;
            t.estimate(a, b) = t.box_measure * p;
            t.std_err(a, b) = t.box_measure * std::sqrt(p * (1.0 - p) / n_per_point);
        }
    return t;
}

Fn1D table_interpolant(const SepFunctionTable& t) {
    const int m = static_cast<int>(t.grid.size());
    if (m < 3) throw std::invalid_argument("table too small to interpolate");
    std::vector<double> x(m), y(m);
    for (int i = 0; i < m; ++i) {
        x[i] = std::sqrt(t.grid[i]);
        y[i] = std::max(t.estimate[i], 0.0);
    }
    // monotonicity-limited cubic slopes (two-sided weighted harmonic mean);
    // separability functions are non-smooth exactly at nu = 1, so if the
    // grid carries that node the slopes there are taken one-sided per side
    std::vector<double> dl(m, 0.0), dr(m, 0.0), h(m - 1), sl(m - 1);
    for (int i = 0; i + 1 < m; ++i) {
        h[i] = x[i + 1] - x[i];
        sl[i] = (y[i + 1] - y[i]) / h[i];
    }
    dr[0] = sl[0];
    dl[m - 1] = sl[m - 2];
    for (int i = 1; i + 1 < m; ++i) {
        if (std::fabs(x[i] - 1.0) < 1e-12) {
            dl[i] = sl[i - 1];
            dr[i] = sl[i];
        } else if (sl[i - 1] * sl[i] <= 0.0) {
            dl[i] = dr[i] = 0.0;
        } else {
            const double w1 = 2.0 * h[i] + h[i - 1], w2 = h[i] + 2.0 * h[i - 1];
            dl[i] = dr[i] = (w1 + w2) / (w1 / sl[i - 1] + w2 / sl[i]);
        }
    }
    // power-law tails fitted to the outermost points
    auto tail_exp = [&](int a, int b, double lo, double hi) {
        if (y[a] <= 0.0 || y[b] <= 0.0) return 0.0;
        double p = std::log(y[b] / y[a]) / std::log(t.grid[b] / t.grid[a]);
        return std::clamp(p, lo, hi);
    };
    const double p_lo = tail_exp(0, 1, 0.0, 10.0);
    const double p_hi = tail_exp(m - 2, m - 1, -10.0, 0.0);
    const double g_lo = t.grid[0], g_hi = t.grid[m - 1];
    const double y_lo = y[0], y_hi = y[m - 1];

    return [=](double nu) -> double {
        if (!(nu > 0.0)) return 0.0;
        if (nu <= g_lo) return y_lo * std::pow(nu / g_lo, p_lo);
        if (nu >= g_hi) return y_hi * std::pow(nu / g_hi, p_hi);
        const double tx = std::sqrt(nu);
        int lo = 0, hi = m - 1;
        while (hi - lo > 1) {
            const int mid = (lo + hi) / 2;
            (x[mid] <= tx ? lo : hi) = mid;
        }
        const double hh = x[lo + 1] - x[lo], s = (tx - x[lo]) / hh;
        const double h00 = (1 + 2 * s) * (1 - s) * (1 - s), h10 = s * (1 - s) * (1 - s);
        const double h01 = s * s * (3 - 2 * s), h11 = s * s * (s - 1);
        return std::max(0.0, h00 * y[lo] + hh * h10 * dr[lo] + h01 * y[lo + 1] +
                                 hh * h11 * dl[lo + 1]);
    };
}

VolumeTriple assemble_probability(const Fn1D& sfun, double c, const GammaRatioDensity& d,
                                  double mass, double rel_tol) {
    VolumeTriple v{};
    v.v_sep = mass * d.expectation(sfun, rel_tol);
    v.v_tot = c * mass;
    v.p = v.v_sep / v.v_tot;
    v.p_err = 0.0;
    return v;
}

VolumeTriple assemble_probability(const SepFunctionTable& t, double c, const GammaRatioDensity& d,
                                  double mass) {
    VolumeTriple v = assemble_probability(table_interpolant(t), c, d, mass, 1e-8);
    // fully-correlated propagation of the per-point errors (conservative)
    const int m = static_cast<int>(t.grid.size());
    std::vector<double> lg(m);
    for (int i = 0; i < m; ++i) lg[i] = std::log(t.grid[i]);
    Fn1D err = [&](double nu) -> double {
        const double x = std::log(nu);
        if (x <= lg.front()) return t.std_err[0];
        if (x >= lg.back()) return t.std_err[m - 1];
        int lo = 0, hi = m - 1;
        while (hi - lo > 1) {
            const int mid = (lo + hi) / 2;
            (lg[mid] <= x ? lo : hi) = mid;
        }
        const double s = (x - lg[lo]) / (lg[lo + 1] - lg[lo]);
        return (1.0 - s) * t.std_err[lo] + s * t.std_err[lo + 1];
    };
    v.p_err = d.expectation(err, 1e-6) / c;
    v.p = v.v_sep / v.v_tot;
    return v;
}

ProbabilityEstimate estimate_prob_direct(int n, NumberField field, const SystemSplit& split,
                                         long n_draws, RngStream& rng,
                                         std::optional<double> target) {
    long ppt = 0;
    for (long i = 0; i < n_draws; ++i) {
        DensityMatrix rho = sample_hs_density(n, field, rng);
        DensityMatrix pt = partial_transpose(rho, split);
        ppt += ldlt_psd(pt.a);
    }
    ProbabilityEstimate e;
    e.n = n_draws;
    e.p_hat = static_cast<double>(ppt) / n_draws;
    e.std_err = std::sqrt(e.p_hat * (1.0 - e.p_hat) / n_draws);
    e.target = target;
    return e;
}

double hs_metric_factor(const ScenarioSpec& s) {
    int dz = 0;
    for (const auto& [pr, f] : s.active) dz += f.df;
    return std::pow(2.0, 0.5 * dz) * std::sqrt(static_cast<double>(s.split.n));
}

double minor_relaxation_s(MinorRelaxation which, double nu) {
    const double c = 512.0 * M_PI * M_PI / 27.0;
    const double s14 =
        nu <= 1.0 ? c : 256.0 * M_PI * M_PI * (3.0 * nu - 1.0) / (27.0 * std::pow(nu, 1.5));
    const double s23 = nu >= 1.0 ? c : (256.0 / 27.0) * M_PI * M_PI * (3.0 - nu) * std::sqrt(nu);
    switch (which) {
        case MinorRelaxation::Z14: return s14;
        case MinorRelaxation::Z23: return s23;
        case MinorRelaxation::Combined: return s14 * s23 / c;
    }
    return 0.0;
}

RelaxationResult upper_bound_minor_relaxation(MinorRelaxation which, const Eigen::VectorXd& grid,
                                              long n_per_point, RngStream& rng) {
    RelaxationResult r;
    const int m = static_cast<int>(grid.size());
    SepFunctionTable& t = r.table;
    t.grid = grid;
    t.estimate.resize(m);
    t.std_err.resize(m);
    t.c_estimate.resize(m);
    t.n_total.assign(m, n_per_point);
    t.n_feasible.assign(m, 0);
    t.n_ppt.assign(m, 0);

    ScenarioSpec full = ScenarioSpec::make(
        SplitTag::TwoQubit, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}},
        NumberField::real());
    const double metric = hs_metric_factor(full);
    t.box_measure = metric;

    for (int g = 0; g < m; ++g) {
        const double nu = grid[g];
        double sum = 0.0, sum2 = 0.0;
        long kept = 0;
        for (long i = 0; i < n_per_point; ++i) {
            WeightedZ w = sample_z_cad(rng);
            if (!w.ok) {
                --i;
                continue;
            }
            bool pass = true;
            if (which != MinorRelaxation::Z23) pass = pass && 1.0 - nu * w.z[2] * w.z[2] >= 0.0;
            if (which != MinorRelaxation::Z14) pass = pass && nu - w.z[3] * w.z[3] >= 0.0;
            const double v = pass ? w.weight * w.measure : 0.0;
            sum += v;
            sum2 += v * v;
            kept += pass;
        }
        const double mean = sum / n_per_point;
        const double var = std::max(0.0, sum2 / n_per_point - mean * mean);
        t.estimate[g] = metric * mean;
        t.std_err[g] = metric * std::sqrt(var / n_per_point);
        t.n_feasible[g] = n_per_point;
        t.n_ppt[g] = kept;
    }

    // probability bound from the exact piecewise form
    const GammaRatioDensity d(std::vector<double>(4, 2.5), {1, 1, -1, -1});
    const double c = 512.0 * M_PI * M_PI / 27.0;
    double denom = which == MinorRelaxation::Combined ? c * c : c;
    double num = d.expectation(
        [&](double nu) {
            if (which == MinorRelaxation::Combined)
                return minor_relaxation_s(MinorRelaxation::Z14, nu) *
                       minor_relaxation_s(MinorRelaxation::Z23, nu);
            return minor_relaxation_s(which, nu);
        },
        1e-9);
    r.bound = num / denom;
    return r;
}

ExponentFit fit_exponent(const SepSurfaceTable& t) {
    const int m1 = static_cast<int>(t.grid1.size()), m2 = static_cast<int>(t.grid2.size());
    if (m1 == 0 || m2 == 0) throw std::invalid_argument("empty surface table");
    // normalize by the cell nearest (1, 1)
    int a1 = 0, b1 = 0;
    for (int i = 0; i < m1; ++i)
        if (std::fabs(std::log(t.grid1[i])) < std::fabs(std::log(t.grid1[a1]))) a1 = i;
    for (int j = 0; j < m2; ++j)
        if (std::fabs(std::log(t.grid2[j])) < std::fabs(std::log(t.grid2[b1]))) b1 = j;
    const double s11 = t.estimate(a1, b1);
    if (s11 <= 0.0) throw std::invalid_argument("degenerate surface table");

    auto rss = [&](double x) {
        double acc = 0.0;
        for (int i = 0; i < m1; ++i)
            for (int j = 0; j < m2; ++j) {
                const double eta = t.grid1[i] * t.grid2[j];
                const double r = t.estimate(i, j) / s11 - std::pow(eta, x);
                acc += r * r;
            }
        return acc;
    };
    double lo = -1.0, hi = 2.5;
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
    double f1 = rss(x1), f2 = rss(x2);
    for (int it = 0; it < 200; ++it) {
        if (f1 < f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - gr * (hi - lo);
            f1 = rss(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + gr * (hi - lo);
            f2 = rss(x2);
        }
    }
    const double xs = 0.5 * (lo + hi);
    return {xs, rss(xs)};
}

double eta_coalescence_test(const SepSurfaceTable& t) {
    std::map<long, std::vector<std::pair<double, double>>> classes;
    for (int i = 0; i < t.grid1.size(); ++i)
        for (int j = 0; j < t.grid2.size(); ++j) {
            const long key = std::lround(std::log(t.grid1[i] * t.grid2[j]) * 1e6);
            classes[key].push_back({t.estimate(i, j), t.std_err(i, j)});
        }
    double stat = 0.0;
    for (const auto& [key, cells] : classes) {
        if (cells.size() < 2) continue;
        auto lo = cells[0], hi = cells[0];
        for (const auto& c : cells) {
            if (c.first < lo.first) lo = c;
            if (c.first > hi.first) hi = c;
        }
        const double err = std::sqrt(lo.second * lo.second + hi.second * hi.second);
        if (err > 0.0) stat = std::max(stat, (hi.first - lo.first) / err);
    }
    return stat;
}

} // namespace hssep
