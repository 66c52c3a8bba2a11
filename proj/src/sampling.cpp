#include "hssep/sampling.hpp"

#include <cmath>
#include <stdexcept>

namespace hssep {

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream_id) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream_id),
                      static_cast<std::uint32_t>(stream_id >> 32), 0x9e3779b9u};
    eng_.seed(seq);
}

double RngStream::uniform() {
    return std::generate_canonical<double, 53>(eng_);
}

double RngStream::uniform(double a, double b) {
    return a + (b - a) * uniform();
}

double RngStream::normal() {
    return gauss_(eng_);
}

std::map<PairIdx, ZValue> sample_z_box(const ScenarioSpec& s, RngStream& rng) {
    std::map<PairIdx, ZValue> out;
    for (const auto& [pr, f] : s.active) {
        ZValue z;
        for (int k = 0; k < f.df; ++k) z.c[k] = rng.symmetric();
        out[pr] = z;
    }
    return out;
}

double box_measure(const ScenarioSpec& s) {
    double m = 1.0;
    for (const auto& [pr, f] : s.active) m *= std::pow(2.0, f.df);
    return m;
}

CadLimits cad_limits_z23(double z12, double z13) {
    CadLimits l{};
    const double r = std::sqrt(std::max(0.0, 1.0 - z12 * z12)) *
                     std::sqrt(std::max(0.0, 1.0 - z13 * z13));
    l.z23_lo = z12 * z13 - r;
    l.z23_hi = z12 * z13 + r;
    l.valid = l.z23_hi > l.z23_lo;
    return l;
}

CadLimits cad_limits_z24(double z12, double z14, CadLimits acc) {
    const double r = std::sqrt(std::max(0.0, 1.0 - z12 * z12)) *
                     std::sqrt(std::max(0.0, 1.0 - z14 * z14));
    acc.z24_lo = z12 * z14 - r;
    acc.z24_hi = z12 * z14 + r;
    acc.valid = acc.valid && acc.z24_hi > acc.z24_lo;
    return acc;
}

CadLimits cad_limits_z34(const ZVec6& z, CadLimits acc) {
    const double z12 = z[0], z13 = z[1], z14 = z[2], z23 = z[3], z24 = z[4];
    const double d = 1.0 - z12 * z12;
    if (d <= 0.0) {
        acc.valid = false;
        return acc;
    }
    // inside the z23/z24 intervals both quadratics are <= 0, so the product
    // under the root is >= 0 up to rounding
    const double q1 = -1.0 + z12 * z12 + z13 * z13 - 2.0 * z12 * z13 * z23 + z23 * z23;
    const double q2 = -1.0 + z12 * z12 + z14 * z14 - 2.0 * z12 * z14 * z24 + z24 * z24;
    const double s = std::sqrt(std::max(0.0, q1 * q2));
    const double center = z13 * z14 - z12 * z14 * z23 - z12 * z13 * z24 + z23 * z24;
    acc.z34_lo = (center - s) / d;
    acc.z34_hi = (center + s) / d;
    acc.valid = acc.valid && acc.z34_hi > acc.z34_lo;
    return acc;
}

WeightedZ sample_z_cad(RngStream& rng) {
    WeightedZ w{};
    w.z[0] = rng.symmetric();
    w.z[1] = rng.symmetric();
    w.z[2] = rng.symmetric();
    CadLimits l = cad_limits_z23(w.z[0], w.z[1]);
    l = cad_limits_z24(w.z[0], w.z[2], l);
    if (!l.valid) return w; // measure-zero boundary; caller resamples
    w.z[3] = rng.uniform(l.z23_lo, l.z23_hi);
    w.z[4] = rng.uniform(l.z24_lo, l.z24_hi);
    l = cad_limits_z34(w.z, l);
    if (!l.valid) return w;
    w.z[5] = rng.uniform(l.z34_lo, l.z34_hi);
    w.weight = (l.z23_hi - l.z23_lo) * (l.z24_hi - l.z24_lo) * (l.z34_hi - l.z34_lo);
    w.measure = 8.0; // uniform box of the three unconditioned coordinates
    w.ok = true;
    return w;
}

WeightedZ sample_spheroidal(RngStream& rng) {
    WeightedZ w{};
    const double g1 = rng.uniform();
    if (g1 <= 0.0) return w;
    const double g2 = rng.uniform(g1, 1.0 / g1);
    const double big_z34 = rng.uniform(-g1, g1);
    const double z12 = rng.symmetric();
    const double t1 = rng.uniform(0.0, 2.0 * M_PI);
    const double t2 = rng.uniform(0.0, 2.0 * M_PI);

    const double sp = std::sqrt(1.0 + z12);
    const double sm = std::sqrt(1.0 - z12);
    const double a12 = std::sqrt(g1 * g2 + 1.0) / std::sqrt(2.0);
    const double a34 = std::sqrt(g1 + g2) / (std::sqrt(2.0) * std::sqrt(g2));

    w.z[0] = z12;
    w.z[1] = (sm * std::cos(t1) + sp * std::sin(t1)) * a12;                  // z13
    w.z[3] = (sp * std::sin(t1) - sm * std::cos(t1)) * a12;                  // z23
    w.z[2] = (sm * std::cos(t2) + sp * std::sin(t2)) * a34;                  // z14
    w.z[4] = (sp * std::sin(t2) - sm * std::cos(t2)) * a34;                  // z24
    w.z[5] = big_z34 -
             std::cos(t1 - t2) * std::sqrt(g1 + g2) * std::sqrt(g1 * g2 + 1.0) / std::sqrt(g2);

    w.weight = (1.0 - z12 * z12) * g1 / (2.0 * g2);
    // local box measure: Z34 span x g2 span x z12 span x two angle spans
    w.measure = (2.0 * g1) * (1.0 / g1 - g1) * 2.0 * (2.0 * M_PI) * (2.0 * M_PI);
    w.ok = true;
    return w;
}

DensityMatrix sample_hs_density(int n, NumberField field, RngStream& rng) {
    using Cplx = std::complex<double>;
    if (field.tag == FieldTag::Real) {
        // n x (n+1) columns make the induced eigenvalue density flat
        Eigen::MatrixXd g(n, n + 1);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n + 1; ++j) g(i, j) = rng.normal();
        Eigen::MatrixXd w = g * g.transpose();
        w /= w.trace();
        return DensityMatrix(w.cast<Cplx>());
    }
    if (field.tag == FieldTag::Complex) {
        Eigen::MatrixXcd g(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) g(i, j) = Cplx(rng.normal(), rng.normal());
        Eigen::MatrixXcd w = g * g.adjoint();
        w /= w.trace().real();
        return DensityMatrix(std::move(w));
    }
    throw std::invalid_argument(
        "no square-Gaussian construction yields the flat measure over quaternionic states");
}

namespace {

int smallest_prime_at_least(int n) {
    if (n < 2) return 2;
    for (int p = n;; ++p) {
        bool prime = true;
        for (int q = 2; q * q <= p; ++q)
            if (p % q == 0) {
                prime = false;
                break;
            }
        if (prime) return p;
    }
}

} // namespace

LowDiscrepancyStream::LowDiscrepancyStream(int dim, std::uint64_t start_index)
    : dim_(dim), base_(smallest_prime_at_least(dim)), index_(start_index + 1), point_(dim) {
    if (dim < 1 || dim > 64) throw std::invalid_argument("dimension must lie in [1, 64]");
    digits_ = 1;
    double cap = base_;
    while (cap < 9.0e18) {
        cap *= base_;
        ++digits_;
    }
    // upper-triangular Pascal-matrix powers P^j mod b: entry (i,k) = C(k,i) j^{k-i}
    pascal_.assign(dim_, std::vector<int>(digits_ * digits_, 0));
    std::vector<std::vector<int>> binom(digits_, std::vector<int>(digits_, 0));
    for (int k = 0; k < digits_; ++k) {
        binom[k][0] = 1;
        for (int i = 1; i <= k; ++i)
            binom[k][i] = (binom[k - 1][i - 1] + (i <= k - 1 ? binom[k - 1][i] : 0)) % base_;
    }
    for (int j = 0; j < dim_; ++j) {
        std::vector<int> jpow(digits_, 1);
        for (int e = 1; e < digits_; ++e) jpow[e] = (jpow[e - 1] * (j % base_)) % base_;
        for (int i = 0; i < digits_; ++i)
            for (int k = i; k < digits_; ++k)
                pascal_[j][i * digits_ + k] = (binom[k][i] * jpow[k - i]) % base_;
    }
}

const std::vector<double>& LowDiscrepancyStream::next() {
    std::vector<int> d(digits_, 0);
    std::uint64_t m = index_++;
    for (int k = 0; k < digits_ && m != 0; ++k) {
        d[k] = static_cast<int>(m % base_);
        m /= base_;
    }
    const double inv_b = 1.0 / base_;
    for (int j = 0; j < dim_; ++j) {
        double x = 0.0, scale = inv_b;
        const int* row = pascal_[j].data();
        for (int i = 0; i < digits_; ++i) {
            int y = 0;
            for (int k = i; k < digits_; ++k) y += row[i * digits_ + k] * d[k];
            x += (y % base_) * scale;
            scale *= inv_b;
        }
        point_[j] = x;
    }
    return point_;
}

} // namespace hssep
