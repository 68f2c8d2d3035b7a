#include "beltflow/profile.hpp"

#include "beltflow/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace beltflow {

namespace {

double simpson(const std::function<double(double)>& f, double a, double m, double b,
               double fa, double fm, double fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double simpson_rec(const std::function<double(double)>& f, double a, double m, double b,
                   double fa, double fm, double fb, double whole, double tol, int depth) {
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    double flm = f(lm), frm = f(rm);
    double left = simpson(f, a, lm, m, fa, flm, fm);
    double right = simpson(f, m, rm, b, fm, frm, fb);
    if (depth <= 0 || std::abs(left + right - whole) <= 15.0 * tol)
        return left + right + (left + right - whole) / 15.0;
    return simpson_rec(f, a, lm, m, fa, flm, fm, left, 0.5 * tol, depth - 1)
         + simpson_rec(f, m, rm, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

} // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol) {
    if (a == b) return 0.0;
    if (a > b) return -adaptive_simpson(f, b, a, tol);
    double m = 0.5 * (a + b);
    double fa = f(a), fm = f(m), fb = f(b);
    double whole = simpson(f, a, m, b, fa, fm, fb);
    return simpson_rec(f, a, m, b, fa, fm, fb, whole, tol, 48);
}

Profile::Profile()
    : value_([](double) { return 0.0; }),
      antiderivative_([](double) { return 0.0; }) {}

double Profile::integral(double a, double b) const {
    return antiderivative_(b) - antiderivative_(a);
}

Profile Profile::zero() { return Profile(); }

Profile Profile::constant(double value, double lo, double hi) {
    if (!(lo <= hi)) throw ConfigError("profile support must satisfy lo <= hi");
    if (!(value >= 0.0)) throw ConfigError("profile values must be nonnegative");
    Profile p;
    p.lo_ = lo;
    p.hi_ = hi;
    p.max_value_ = value;
    p.value_ = [=](double x) { return (x >= lo && x <= hi) ? value : 0.0; };
    p.antiderivative_ = [=](double x) { return value * (std::clamp(x, lo, hi) - lo); };
    return p;
}

Profile Profile::gaussian(double amplitude, double center, double sharpness,
                          double lo, double hi) {
    if (!(lo <= hi)) throw ConfigError("profile support must satisfy lo <= hi");
    if (!(amplitude >= 0.0) || !(sharpness > 0.0))
        throw ConfigError("gaussian profile needs amplitude >= 0 and sharpness > 0");
    Profile p;
    p.lo_ = lo;
    p.hi_ = hi;
    double nearest = std::clamp(center, lo, hi);
    p.max_value_ = amplitude * std::exp(-sharpness * (nearest - center) * (nearest - center));
    p.value_ = [=](double x) {
        if (x < lo || x > hi) return 0.0;
        return amplitude * std::exp(-sharpness * (x - center) * (x - center));
    };
    // antiderivative of amp*exp(-k u^2) is amp*sqrt(pi/k)/2 * erf(sqrt(k) u)
    double coeff = amplitude * 0.5 * std::sqrt(std::numbers::pi / sharpness);
    double root_k = std::sqrt(sharpness);
    p.antiderivative_ = [=](double x) {
        double xc = std::clamp(x, lo, hi);
        return coeff * std::erf(root_k * (xc - center));
    };
    return p;
}

Profile Profile::step(double left, double right, double lo, double hi) {
    if (!(lo <= hi)) throw ConfigError("profile support must satisfy lo <= hi");
    if (!(left >= 0.0 && right >= 0.0)) throw ConfigError("profile values must be nonnegative");
    Profile p;
    p.lo_ = lo;
    p.hi_ = hi;
    p.max_value_ = std::max(left, right);
    p.value_ = [=](double x) {
        if (x < lo || x > hi) return 0.0;
        return x < 0.0 ? left : right;
    };
    p.antiderivative_ = [=](double x) {
        double xc = std::clamp(x, lo, hi);
        double below = std::min(xc, 0.0) - std::min(lo, 0.0); // measure of [lo, xc] left of 0
        double above = std::max(xc, 0.0) - std::max(lo, 0.0);
        return left * std::max(below, 0.0) + right * std::max(above, 0.0);
    };
    return p;
}

Profile Profile::sampled(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2)
        throw ConfigError("sampled profile needs matching x/y arrays with at least 2 points");
    for (std::size_t i = 0; i + 1 < x.size(); ++i)
        if (!(x[i] < x[i + 1])) throw ConfigError("sampled profile x values must be strictly increasing");
    for (double v : y)
        if (!(v >= 0.0)) throw ConfigError("sampled profile values must be nonnegative");

    auto xs = std::make_shared<std::vector<double>>(x);
    auto ys = std::make_shared<std::vector<double>>(y);
    auto cum = std::make_shared<std::vector<double>>(x.size(), 0.0);
    for (std::size_t i = 1; i < x.size(); ++i)
        (*cum)[i] = (*cum)[i - 1] + 0.5 * (y[i] + y[i - 1]) * (x[i] - x[i - 1]);

    Profile p;
    p.lo_ = x.front();
    p.hi_ = x.back();
    p.max_value_ = *std::max_element(y.begin(), y.end());
    p.value_ = [xs, ys](double q) {
        if (q < xs->front() || q > xs->back()) return 0.0;
        auto it = std::upper_bound(xs->begin(), xs->end(), q);
        std::size_t i = std::min<std::size_t>(std::max<std::ptrdiff_t>(it - xs->begin() - 1, 0), xs->size() - 2);
        double t = (q - (*xs)[i]) / ((*xs)[i + 1] - (*xs)[i]);
        return (*ys)[i] + t * ((*ys)[i + 1] - (*ys)[i]);
    };
    p.antiderivative_ = [xs, ys, cum](double q) {
        double qc = std::clamp(q, xs->front(), xs->back());
        auto it = std::upper_bound(xs->begin(), xs->end(), qc);
        std::size_t i = std::min<std::size_t>(std::max<std::ptrdiff_t>(it - xs->begin() - 1, 0), xs->size() - 2);
        double dx = (*xs)[i + 1] - (*xs)[i];
        double t = qc - (*xs)[i];
        double slope = ((*ys)[i + 1] - (*ys)[i]) / dx;
        return (*cum)[i] + (*ys)[i] * t + 0.5 * slope * t * t;
    };
    return p;
}

Profile Profile::from_function(std::function<double(double)> fn, double lo, double hi) {
    if (!(lo <= hi)) throw ConfigError("profile support must satisfy lo <= hi");
    Profile p;
    p.lo_ = lo;
    p.hi_ = hi;
    auto clamped = [fn, lo, hi](double x) {
        if (x < lo || x > hi) return 0.0;
        return fn(x);
    };
    p.value_ = clamped;
    double m = 0.0;
    const int scan = 2000;
    for (int i = 0; i <= scan; ++i)
        m = std::max(m, clamped(lo + (hi - lo) * i / scan));
    p.max_value_ = m;
    p.antiderivative_ = [clamped, lo, hi](double x) {
        double xc = std::clamp(x, lo, hi);
        return adaptive_simpson(clamped, lo, xc, 1e-10);
    };
    return p;
}

} // namespace beltflow
