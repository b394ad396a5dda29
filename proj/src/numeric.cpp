#include "egtl/numeric.hpp"

#include <cmath>
#include <numbers>

namespace egtl::num {

double find_root(const std::function<double(double)>& f, double lo, double hi,
                 RootOptions opts) {
    double a = lo, b = hi;
    double fa = f(a), fb = f(b);
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if ((fa > 0.0) == (fb > 0.0))
        throw std::runtime_error("find_root: endpoints do not bracket a root");

    // side: -1 if the low endpoint was kept last, +1 for the high one (Illinois)
    int side = 0;
    for (int it = 0; it < opts.max_iter; ++it) {
        const double width = b - a;
        double x;
        if (width > opts.bisect_until) {
            x = a + 0.5 * width;
        } else {
            x = (fb * a - fa * b) / (fb - fa);
            if (!(x > a && x < b)) x = a + 0.5 * width;
        }
        if (x == a || x == b) break;  // bracket no longer divisible in doubles
        const double fx = f(x);
        if (fx == 0.0) return x;
        if ((fx > 0.0) == (fa > 0.0)) {
            a = x;
            fa = fx;
            if (side == -1) fb *= 0.5;
            side = -1;
        } else {
            b = x;
            fb = fx;
            if (side == +1) fa *= 0.5;
            side = +1;
        }
        if (b - a < opts.xtol * (1.0 + std::fabs(x))) break;
    }
    return a + 0.5 * (b - a);
}

double find_root_expand(const std::function<double(double)>& f, double lo, double hi,
                        double lo_limit, double hi_limit, RootOptions opts,
                        int max_expand) {
    double fa = f(lo), fb = f(hi);
    int n = 0;
    while ((fa > 0.0) == (fb > 0.0)) {
        if (++n > max_expand)
            throw std::runtime_error("find_root_expand: no sign change found");
        bool grew = false;
        if (lo > lo_limit) {
            lo = std::max(lo_limit, lo * 0.25);
            fa = f(lo);
            grew = true;
        }
        if ((fa > 0.0) == (fb > 0.0) && hi < hi_limit) {
            hi = std::min(hi_limit, hi * 4.0);
            fb = f(hi);
            grew = true;
        }
        if (!grew && (fa > 0.0) == (fb > 0.0))
            throw std::runtime_error("find_root_expand: no sign change within limits");
    }
    return find_root(f, lo, hi, opts);
}

std::pair<std::vector<double>, std::vector<double>>
gauss_legendre(int n, double a, double b) {
    std::vector<double> x(n), w(n);
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        // Chebyshev-like initial guess, then Newton on P_n
        double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p1 = 1.0, p2 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1.0);
            }
            pp = n * (z * p1 - p2) / (z * z - 1.0);
            const double dz = p1 / pp;
            z -= dz;
            if (std::fabs(dz) < 1e-15) break;
        }
        const double xm = 0.5 * (b + a);
        const double xl = 0.5 * (b - a);
        x[i] = xm - xl * z;
        x[n - 1 - i] = xm + xl * z;
        w[i] = 2.0 * xl / ((1.0 - z * z) * pp * pp);
        w[n - 1 - i] = w[i];
    }
    return {std::move(x), std::move(w)};
}

double digamma(double x) {
    double r = 0.0;
    while (x < 6.0) {
        r -= 1.0 / x;
        x += 1.0;
    }
    const double f = 1.0 / (x * x);
    // asymptotic expansion, |error| < 1e-16 for x >= 6
    const double series =
        f * (1.0 / 12 - f * (1.0 / 120 - f * (1.0 / 252 - f * (1.0 / 240 - f * (1.0 / 132)))));
    return r + std::log(x) - 0.5 / x - series;
}

double trigamma(double x) {
    double r = 0.0;
    while (x < 6.0) {
        r += 1.0 / (x * x);
        x += 1.0;
    }
    const double f = 1.0 / (x * x);
    const double series =
        1.0 + 0.5 / x + f * (1.0 / 6 - f * (1.0 / 30 - f * (1.0 / 42 - f / 30)));
    return r + series / x;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

}  // namespace egtl::num
