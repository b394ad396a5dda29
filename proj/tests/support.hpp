#ifndef EGTL_TESTS_SUPPORT_HPP
#define EGTL_TESTS_SUPPORT_HPP

// Test-only oracles, independent of the library's computation paths.

#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

namespace oracle {

// adaptive Simpson on [a, b]
inline double simpson_rec(const std::function<double(double)>& f, double a, double b, double fa,
                          double fm, double fb, double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::fabs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    return simpson_rec(f, a, m, fa, flm, fm, left, tol / 2, depth - 1) +
           simpson_rec(f, m, b, fm, frm, fb, right, tol / 2, depth - 1);
}

inline double integrate(const std::function<double(double)>& f, double a, double b,
                        double tol = 1e-10, int depth = 48) {
    const double m = 0.5 * (a + b);
    const double fa = f(a), fm = f(m), fb = f(b);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return simpson_rec(f, a, b, fa, fm, fb, whole, tol, depth);
}

// five-point central difference, error O(h^4)
inline double derivative(const std::function<double(double)>& f, double x, double h) {
    return (f(x - 2 * h) - 8 * f(x - h) + 8 * f(x + h) - f(x + 2 * h)) / (12 * h);
}

// brute-force tail sum of sum_{j>=k} p^j / j (the a_norm definition)
inline double a_norm_series(double p, int k, double tol = 1e-15) {
    double pj = std::pow(p, k);
    double s = 0.0;
    for (long j = k; j < 100000000L; ++j) {
        const double t = pj / j;
        s += t;
        if (t < tol * s) break;
        pj *= p;
    }
    return s;
}

// FNV-1a 64-bit, used to pin bundled-data digests
inline std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

}  // namespace oracle

#endif
