#include "hssep/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

namespace hssep {

namespace {

// 15-point Kronrod nodes/weights on [-1,1] with the embedded 7-point Gauss rule.
constexpr double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
constexpr double kWg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};

struct Interval {
    double a, b, value, error;
    bool operator<(const Interval& o) const { return error < o.error; }
};

Interval gk15(const Fn1D& f, double a, double b) {
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    double fc = f(c);
    double res_k = kWgk[7] * fc;
    double res_g = kWg[3] * fc;
    for (int j = 0; j < 7; ++j) {
        double x = h * kXgk[j];
        double fsum = f(c - x) + f(c + x);
        res_k += kWgk[j] * fsum;
        if (j % 2 == 1) res_g += kWg[j / 2] * fsum;
    }
    return {a, b, res_k * h, std::fabs((res_k - res_g) * h)};
}

} // namespace

QuadResult integrate_1d(const Fn1D& f, double a, double b, double rel_tol, int max_intervals) {
    QuadResult out;
    if (!(a < b)) return out;
    std::priority_queue<Interval> heap;
    Interval whole = gk15(f, a, b);
    out.evaluations = 15;
    double total = whole.value, toterr = whole.error;
    heap.push(whole);
    auto tol = [&] { return std::max(rel_tol * std::fabs(total), 1e-15); };
    int used = 1;
    while (toterr > tol() && used < max_intervals) {
        Interval top = heap.top();
        heap.pop();
        double mid = 0.5 * (top.a + top.b);
        if (mid <= top.a || mid >= top.b) { heap.push(top); break; } // hit machine resolution
        Interval left = gk15(f, top.a, mid), right = gk15(f, mid, top.b);
        out.evaluations += 30;
        total += left.value + right.value - top.value;
        toterr += left.error + right.error - top.error;
        heap.push(left);
        heap.push(right);
        ++used;
    }
    out.value = total;
    out.est_error = toterr;
    out.converged = toterr <= tol();
    return out;
}

QuadResult integrate_2d(const Fn2D& f, double ax, double bx, double ay, double by, double rel_tol) {
    QuadResult out;
    long evals = 0;
    Fn1D outer = [&](double x) {
        QuadResult inner = integrate_1d([&](double y) { return f(x, y); }, ay, by, rel_tol * 0.1);
        evals += inner.evaluations;
        return inner.value;
    };
    QuadResult r = integrate_1d(outer, ax, bx, rel_tol);
    r.evaluations = evals;
    return r;
}

QuadResult integrate_simplex2(const Fn2D& f, double rel_tol) {
    // map (u,v) in [0,1]^2 to x = u, y = v (1 - u); jacobian (1 - u)
    return integrate_2d([&](double u, double v) { return f(u, v * (1.0 - u)) * (1.0 - u); },
                        0.0, 1.0, 0.0, 1.0, rel_tol);
}

} // namespace hssep
