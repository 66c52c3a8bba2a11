#pragma once
// Adaptive 1-D / 2-D integration (nested Gauss-Kronrod with bisection).

#include <functional>

namespace hssep {

struct QuadResult {
    double value = 0.0;
    double est_error = 0.0;
    long evaluations = 0;
    bool converged = true;
};

using Fn1D = std::function<double(double)>;
using Fn2D = std::function<double(double, double)>;

// Adaptive 15-point Kronrod / 7-point Gauss over [a, b]. Endpoint
// singularities of type x^p, p > -1 are handled by bisection refinement;
// callers with known sqrt-type endpoints may pre-substitute x = t^2.
QuadResult integrate_1d(const Fn1D& f, double a, double b, double rel_tol = 1e-10,
                        int max_intervals = 4000);

// Iterated adaptive quadrature over the rectangle [ax,bx] x [ay,by];
// the inner integral is resolved a factor tighter than the outer request.
QuadResult integrate_2d(const Fn2D& f, double ax, double bx, double ay, double by,
                        double rel_tol = 1e-9);

// Integral over the open triangle x > 0, y > 0, x + y < 1.
QuadResult integrate_simplex2(const Fn2D& f, double rel_tol = 1e-9);

} // namespace hssep
