#pragma once
// Pseudo-random and low-discrepancy generation of z-vectors, feasible
// two-qubit points, spheroidal coordinates, and flat-measure density
// matrices.

#include "hssep/positivity.hpp"
#include "hssep/types.hpp"

#include <cstdint>
#include <map>
#include <random>
#include <vector>

namespace hssep {

// Deterministic stream keyed on (seed, stream_id); identical keys yield
// identical sequences regardless of how work is sharded.
class RngStream {
  public:
    RngStream(std::uint64_t seed, std::uint64_t stream_id);

    double uniform();                     // [0, 1)
    double uniform(double a, double b);   // [a, b)
    double symmetric() { return uniform(-1.0, 1.0); }
    double normal();

    std::mt19937_64& engine() { return eng_; }

  private:
    std::mt19937_64 eng_;
    std::normal_distribution<double> gauss_{0.0, 1.0};
};

// Draw each active pair's components uniformly from [-1,1]^{d_f}; the box
// measure is the product of the per-pair 2^{d_f} factors.
std::map<PairIdx, ZValue> sample_z_box(const ScenarioSpec& s, RngStream& rng);
double box_measure(const ScenarioSpec& s);

// Conditional bounds on z23, z24, z34 given the earlier coordinates; the
// intervals are nonempty whenever the earlier draws are interior.
struct CadLimits {
    double z23_lo, z23_hi;
    double z24_lo, z24_hi;
    double z34_lo, z34_hi;
    bool valid; // false on a boundary/degenerate configuration
};

CadLimits cad_limits_z23(double z12, double z13);
CadLimits cad_limits_z24(double z12, double z14, CadLimits acc);
CadLimits cad_limits_z34(const ZVec6& z, CadLimits acc);

struct WeightedZ {
    ZVec6 z;
    double weight;  // conditional-interval or jacobian importance weight
    double measure; // box measure of the unconditioned coordinates;
                    // volume estimates are mean(weight * measure)
    bool ok;
};

// Sequential sampler for the full real two-qubit z-body: z12, z13, z14
// uniform on [-1,1], then z23, z24, z34 uniform on their conditional
// intervals. The weight is the product of interval lengths.
WeightedZ sample_z_cad(RngStream& rng);

// Spheroidal-coordinate sampler for the same body. Draws uniformly from
// the box g1 in [0,1], g2 in [g1, 1/g1], Z34 in [-g1, g1], z12 in [-1,1],
// theta_i in [0, 2pi], maps to z-space, and returns the jacobian weight
// (1 - z12^2) g1 / (2 g2).
WeightedZ sample_spheroidal(RngStream& rng);

// Flat (Hilbert-Schmidt) measure on the set of n x n states over the given
// field, via rho = G G^dagger / tr(G G^dagger) with Gaussian G.
DensityMatrix sample_hs_density(int n, NumberField field, RngStream& rng);

// Digital (0,s)-sequence in base b = smallest prime >= dim; usable
// interchangeably with RngStream uniforms. Deterministic.
class LowDiscrepancyStream {
  public:
    explicit LowDiscrepancyStream(int dim, std::uint64_t start_index = 0);

    // Next point in [0,1)^dim.
    const std::vector<double>& next();

    int dim() const { return dim_; }
    int base() const { return base_; }

  private:
    int dim_;
    int base_;
    int digits_;
    std::uint64_t index_;
    std::vector<std::vector<int>> pascal_; // P^j mod b, row-major per dimension
    std::vector<double> point_;
};

} // namespace hssep
