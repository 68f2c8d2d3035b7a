#pragma once

#include <functional>
#include <limits>
#include <memory>
#include <vector>

namespace beltflow {

/// Initial density profile on (an extension of) one arc, bundled with its
/// antiderivative so interface balances can be evaluated without repeated
/// quadrature. Profiles are zero outside their support interval.
class Profile {
public:
    Profile(); // identically zero

    double operator()(double x) const { return value_(x); }

    /// Integral over [a, b] (sign-aware), additive over adjacent intervals.
    double integral(double a, double b) const;

    double support_lo() const { return lo_; }
    double support_hi() const { return hi_; }

    /// Supremum of the profile over its support (exact for the built-in
    /// shapes, dense-scan estimate for wrapped callables).
    double max_value() const { return max_value_; }

    static Profile zero();
    static Profile constant(double value, double lo, double hi);

    /// amplitude * exp(-sharpness * (x - center)^2) restricted to [lo, hi].
    static Profile gaussian(double amplitude, double center, double sharpness,
                            double lo, double hi);

    /// Two constant states split at x = 0: `left` below, `right` above,
    /// restricted to [lo, hi]. Convenience for Riemann-type data.
    static Profile step(double left, double right, double lo, double hi);

    /// Piecewise-linear interpolation through (x, y) samples; zero outside
    /// [x.front(), x.back()]. x must be strictly increasing, y >= 0.
    static Profile sampled(const std::vector<double>& x,
                           const std::vector<double>& y);

    /// Wraps an arbitrary nonnegative callable; the antiderivative falls
    /// back to adaptive Simpson quadrature (absolute tolerance 1e-10).
    static Profile from_function(std::function<double(double)> fn,
                                 double lo, double hi);

private:
    std::function<double(double)> value_;
    std::function<double(double)> antiderivative_; // F with integral = F(b)-F(a)
    double lo_ = 0.0, hi_ = 0.0;
    double max_value_ = 0.0;
};

/// Adaptive Simpson quadrature to absolute tolerance `tol`.
double adaptive_simpson(const std::function<double(double)>& f,
                        double a, double b, double tol = 1e-10);

} // namespace beltflow
