#pragma once
// Core value types: number fields, system splits, Bloore parameters,
// scenario specifications and diagonal-ratio variables.

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hssep {

enum class FieldTag { Real, Complex, Quaternion };

// Number field of an off-diagonal entry. d_f is the real dimension per
// entry (1, 2, 4), which doubles as the Dyson index beta.
struct NumberField {
    FieldTag tag;
    int df;

    static NumberField real() { return {FieldTag::Real, 1}; }
    static NumberField complex() { return {FieldTag::Complex, 2}; }
    static NumberField quaternion() { return {FieldTag::Quaternion, 4}; }
    static NumberField from_beta(int beta);

    char prefix() const {
        return tag == FieldTag::Real ? 'r' : tag == FieldTag::Complex ? 'c' : 'q';
    }
    bool operator==(const NumberField& o) const { return tag == o.tag; }
};

enum class SplitTag { TwoQubit, QubitQutrit, QutritQutrit, FourTwo, TwoTwoTwo };

// A tensor-product split of an n x n matrix, fixing the block layout used
// for partial transposition and the set of diagonal-ratio variables.
struct SystemSplit {
    SplitTag tag;
    int n;           // total dimension
    int block;       // partial transpose transposes (n/block)^2 blocks of this size
    int ratio_count; // number of diagonal-ratio variables

    static SystemSplit make(SplitTag t);
    static SystemSplit parse(const std::string& dims); // "2x2", "2x3", "3x3", "4x2", "2x2x2"
    std::string dims() const;

    // Each ratio is rho_a * rho_b / (rho_c * rho_d); indices 1-based.
    struct RatioDef { int a, b, c, d; };
    const std::vector<RatioDef>& ratio_defs() const;
};

// Value of one off-diagonal Bloore parameter, stored as a 4-vector over
// (1, i, j, k); components beyond the field dimension are zero.
struct ZValue {
    Eigen::Vector4d c = Eigen::Vector4d::Zero();

    ZValue() = default;
    explicit ZValue(double re) { c[0] = re; }
    ZValue(double re, double im) { c[0] = re; c[1] = im; }
    ZValue(double w, double x, double y, double z) { c << w, x, y, z; }

    double norm2() const { return c.squaredNorm(); }
    std::complex<double> as_complex() const { return {c[0], c[1]}; }
};

using PairIdx = std::pair<int, int>; // 1-based, i < j

struct ScenarioSpec {
    SystemSplit split;
    std::vector<std::pair<PairIdx, NumberField>> active;

    int nullified() const {
        return split.n * (split.n - 1) / 2 - static_cast<int>(active.size());
    }
    bool homogeneous() const;
    std::string id() const;
    static ScenarioSpec parse(const std::string& id);

    static ScenarioSpec make(SplitTag t, std::vector<PairIdx> pairs, NumberField f);
};

// Bloore coordinates: diagonal simplex entries plus z values for the
// active pairs of a scenario.
struct BlooreParams {
    Eigen::VectorXd diag;
    std::map<PairIdx, ZValue> offdiag;
};

// Density matrix over real/complex/quaternion entries. Quaternion entries
// q = a + b j are carried as two complex matrices (Cayley-Dickson form);
// b is zero unless `quaternionic` is set.
struct DensityMatrix {
    Eigen::MatrixXcd a;
    Eigen::MatrixXcd b;
    bool quaternionic = false;

    int n() const { return static_cast<int>(a.rows()); }
    DensityMatrix() = default;
    explicit DensityMatrix(Eigen::MatrixXcd m) : a(std::move(m)), b(Eigen::MatrixXcd::Zero(a.rows(), a.cols())) {}
    DensityMatrix(Eigen::MatrixXcd ma, Eigen::MatrixXcd mb)
        : a(std::move(ma)), b(std::move(mb)), quaternionic(true) {}
};

// Diagonal-ratio variables of a split (length split.ratio_count).
struct RatioVars {
    Eigen::VectorXd values;

    double nu() const { return values[0]; }
    double eta() const { return values.prod(); } // product of all ratios
};

} // namespace hssep
