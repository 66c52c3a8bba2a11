#include "hssep/statespace.hpp"

#include <cmath>
#include <sstream>

namespace hssep {

NumberField NumberField::from_beta(int beta) {
    switch (beta) {
        case 1: return real();
        case 2: return complex();
        case 4: return quaternion();
    }
    throw std::invalid_argument("beta must be 1, 2 or 4");
}

SystemSplit SystemSplit::make(SplitTag t) {
    switch (t) {
        case SplitTag::TwoQubit:     return {t, 4, 2, 1};
        case SplitTag::QubitQutrit:  return {t, 6, 3, 2};
        case SplitTag::QutritQutrit: return {t, 9, 3, 4};
        case SplitTag::FourTwo:      return {t, 8, 4, 3};
        case SplitTag::TwoTwoTwo:    return {t, 8, 2, 3};
    }
    throw std::logic_error("bad split tag");
}

SystemSplit SystemSplit::parse(const std::string& dims) {
    if (dims == "2x2") return make(SplitTag::TwoQubit);
    if (dims == "2x3") return make(SplitTag::QubitQutrit);
    if (dims == "3x3") return make(SplitTag::QutritQutrit);
    if (dims == "4x2") return make(SplitTag::FourTwo);
    if (dims == "2x2x2") return make(SplitTag::TwoTwoTwo);
    throw std::invalid_argument("unknown system: " + dims);
}

std::string SystemSplit::dims() const {
    switch (tag) {
        case SplitTag::TwoQubit:     return "2x2";
        case SplitTag::QubitQutrit:  return "2x3";
        case SplitTag::QutritQutrit: return "3x3";
        case SplitTag::FourTwo:      return "4x2";
        case SplitTag::TwoTwoTwo:    return "2x2x2";
    }
    return "?";
}

const std::vector<SystemSplit::RatioDef>& SystemSplit::ratio_defs() const {
    static const std::vector<RatioDef> two_qubit = {{1, 4, 2, 3}};
    static const std::vector<RatioDef> qubit_qutrit = {{1, 5, 2, 4}, {2, 6, 3, 5}};
    static const std::vector<RatioDef> qutrit_qutrit = {
        {1, 5, 2, 4}, {2, 6, 3, 5}, {4, 8, 5, 7}, {5, 9, 6, 8}};
    static const std::vector<RatioDef> four_two = {{1, 6, 2, 5}, {2, 7, 3, 6}, {3, 8, 4, 7}};
    static const std::vector<RatioDef> two_two_two = {{1, 4, 2, 3}, {4, 5, 3, 6}, {5, 8, 6, 7}};
    switch (tag) {
        case SplitTag::TwoQubit:     return two_qubit;
        case SplitTag::QubitQutrit:  return qubit_qutrit;
        case SplitTag::QutritQutrit: return qutrit_qutrit;
        case SplitTag::FourTwo:      return four_two;
        case SplitTag::TwoTwoTwo:    return two_two_two;
    }
    throw std::logic_error("bad split tag");
}

bool ScenarioSpec::homogeneous() const {
    for (const auto& [pr, f] : active)
        if (!(f == active.front().second)) return false;
    return true;
}

std::string ScenarioSpec::id() const {
    std::ostringstream out;
    out << split.dims() << ':';
    if (active.empty()) {
        out << "real:[]";
        return out.str();
    }
    bool homo = homogeneous();
    if (homo) {
        FieldTag t = active.front().second.tag;
        out << (t == FieldTag::Real ? "real" : t == FieldTag::Complex ? "complex" : "quaternion");
    } else {
        out << "mixed";
    }
    if (homo && nullified() == 0) {
        out << ":full";
        return out.str();
    }
    out << ":[";
    for (size_t k = 0; k < active.size(); ++k) {
        if (k) out << ',';
        if (!homo) out << active[k].second.prefix();
        out << '(' << active[k].first.first << ',' << active[k].first.second << ')';
    }
    out << ']';
    return out.str();
}

ScenarioSpec ScenarioSpec::parse(const std::string& id) {
    auto c1 = id.find(':');
    auto c2 = id.find(':', c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
        throw std::invalid_argument("bad scenario id: " + id);
    ScenarioSpec s{SystemSplit::parse(id.substr(0, c1)), {}};
    std::string field = id.substr(c1 + 1, c2 - c1 - 1);
    std::string body = id.substr(c2 + 1);

    NumberField uniform = NumberField::real();
    bool mixed = field == "mixed";
    if (!mixed) {
        if (field == "real") uniform = NumberField::real();
        else if (field == "complex") uniform = NumberField::complex();
        else if (field == "quaternion") uniform = NumberField::quaternion();
        else throw std::invalid_argument("unknown field: " + field);
    }

    // "full" activates every off-diagonal pair over a uniform field
    if (body == "full") {
        if (mixed) throw std::invalid_argument("mixed scenarios need an explicit pair list");
        for (int i = 1; i <= s.split.n; ++i)
            for (int j = i + 1; j <= s.split.n; ++j) s.active.push_back({{i, j}, uniform});
        return s;
    }

    if (body.size() < 2 || body.front() != '[' || body.back() != ']')
        throw std::invalid_argument("bad scenario id: " + id);
    body = body.substr(1, body.size() - 2);

    size_t pos = 0;
    while (pos < body.size()) {
        NumberField f = uniform;
        if (mixed) {
            char p = body[pos++];
            if (p == 'r') f = NumberField::real();
            else if (p == 'c') f = NumberField::complex();
            else if (p == 'q') f = NumberField::quaternion();
            else throw std::invalid_argument("bad field prefix in: " + id);
        }
        if (body[pos] != '(') throw std::invalid_argument("bad pair in: " + id);
        auto close = body.find(')', pos);
        std::string pair = body.substr(pos + 1, close - pos - 1);
        auto comma = pair.find(',');
        int i = std::stoi(pair.substr(0, comma));
        int j = std::stoi(pair.substr(comma + 1));
        if (i < 1 || j <= i || j > s.split.n)
            throw std::invalid_argument("pair out of range in: " + id);
        s.active.push_back({{i, j}, f});
        pos = close + 1;
        if (pos < body.size() && body[pos] == ',') ++pos;
    }
    for (size_t a = 0; a < s.active.size(); ++a)
        for (size_t b = a + 1; b < s.active.size(); ++b)
            if (s.active[a].first == s.active[b].first)
                throw std::invalid_argument("duplicate pair in: " + id);
    return s;
}

ScenarioSpec ScenarioSpec::make(SplitTag t, std::vector<PairIdx> pairs, NumberField f) {
    ScenarioSpec s{SystemSplit::make(t), {}};
    for (auto& p : pairs) s.active.push_back({p, f});
    return s;
}

DensityMatrix assemble_density(const BlooreParams& p, const ScenarioSpec& s) {
    const int n = s.split.n;
    if (p.diag.size() != n) throw std::invalid_argument("diag dimension mismatch");
    if (p.offdiag.size() != s.active.size())
        throw std::invalid_argument("offdiag keys do not match scenario pairs");

    bool quat = false;
    for (const auto& [pr, f] : s.active)
        if (f.tag == FieldTag::Quaternion) quat = true;

    Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(n, n);
    Eigen::MatrixXcd b = Eigen::MatrixXcd::Zero(n, n);
    for (int i = 0; i < n; ++i) a(i, i) = p.diag[i];

    for (const auto& [pr, f] : s.active) {
        auto it = p.offdiag.find(pr);
        if (it == p.offdiag.end())
            throw std::invalid_argument("missing z for an active pair");
        const ZValue& z = it->second;
        if (z.norm2() > 1.0 + 1e-14) throw std::invalid_argument("|z|^2 > 1");
        const auto [i, j] = pr;
        double scale = std::sqrt(p.diag[i - 1] * p.diag[j - 1]);
        std::complex<double> za(z.c[0] * scale, z.c[1] * scale);
        std::complex<double> zb(z.c[2] * scale, z.c[3] * scale);
        a(i - 1, j - 1) = za;
        a(j - 1, i - 1) = std::conj(za);
        // quaternion conjugate of a + b j is conj(a) - b j
        b(i - 1, j - 1) = zb;
        b(j - 1, i - 1) = -zb;
    }
    if (quat) return DensityMatrix(std::move(a), std::move(b));
    return DensityMatrix(std::move(a));
}

RatioVars ratio_variables(const Eigen::VectorXd& diag, const SystemSplit& s) {
    if (diag.size() != s.n) throw std::invalid_argument("diag dimension mismatch");
    for (int i = 0; i < s.n; ++i)
        if (!(diag[i] > 0.0)) throw std::invalid_argument("diag entries must be positive");
    const auto& defs = s.ratio_defs();
    RatioVars r;
    r.values.resize(static_cast<Eigen::Index>(defs.size()));
    for (size_t k = 0; k < defs.size(); ++k) {
        const auto& d = defs[k];
        r.values[static_cast<Eigen::Index>(k)] =
            diag[d.a - 1] * diag[d.b - 1] / (diag[d.c - 1] * diag[d.d - 1]);
    }
    return r;
}

Eigen::VectorXd canonical_diag(const SystemSplit& s, const RatioVars& r) {
    const auto& defs = s.ratio_defs();
    if (r.values.size() != static_cast<Eigen::Index>(defs.size()))
        throw std::invalid_argument("ratio count mismatch");
    for (Eigen::Index k = 0; k < r.values.size(); ++k)
        if (!(r.values[k] > 0.0)) throw std::invalid_argument("ratios must be positive");

    // Solve A x = log r for x = log(diag) with minimal norm, then normalize
    // onto the simplex. Rows of A encode log(ratio) = x_a + x_b - x_c - x_d.
    const int n = s.n;
    const int m = static_cast<int>(defs.size());
    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(m, n);
    Eigen::VectorXd rhs(m);
    for (int k = 0; k < m; ++k) {
        const auto& d = defs[k];
        A(k, d.a - 1) += 1.0;
        A(k, d.b - 1) += 1.0;
        A(k, d.c - 1) -= 1.0;
        A(k, d.d - 1) -= 1.0;
        rhs[k] = std::log(r.values[k]);
    }
    Eigen::VectorXd x = A.transpose() * (A * A.transpose()).ldlt().solve(rhs);
    Eigen::VectorXd diag = (x.array() - x.maxCoeff()).exp();
    diag /= diag.sum();
    return diag;
}

Rho33Solution solve_rho33_for_nu(double rho11, double rho22, double nu) {
    if (!(rho11 > 0.0) || !(rho22 > 0.0) || !(rho11 + rho22 < 1.0) || !(nu > 0.0))
        throw std::invalid_argument("arguments outside the open simplex");
    const double rest = 1.0 - rho11 - rho22;
    const double den = rho11 + nu * rho22;
    Rho33Solution sol;
    sol.rho33 = rho11 * rest / den;
    sol.rho44 = rest - sol.rho33;
    sol.d_rho33_d_nu = -rho11 * rho22 * rest / (den * den);
    return sol;
}

} // namespace hssep
