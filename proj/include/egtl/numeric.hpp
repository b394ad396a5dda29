#ifndef EGTL_NUMERIC_HPP
#define EGTL_NUMERIC_HPP

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace egtl::num {

/// Options for the bracketed root solver.
struct RootOptions {
    double xtol = 1e-15;         // stop when bracket width falls below xtol*(1+|x|)
    double bisect_until = 1e-6;  // pure bisection while bracket wider than this
    int max_iter = 200;
};

/// Bracketed root solve: plain bisection until the bracket is narrow, then
/// Illinois-damped secant steps, each guarded to stay inside the bracket.
/// Requires f(lo) and f(hi) of opposite sign (or zero at an endpoint).
double find_root(const std::function<double(double)>& f, double lo, double hi,
                 RootOptions opts = {});

/// Expands [lo, hi] geometrically until f changes sign, then solves.
/// Throws std::runtime_error if no sign change is found within `max_expand` doublings.
double find_root_expand(const std::function<double(double)>& f, double lo, double hi,
                        double lo_limit, double hi_limit, RootOptions opts = {},
                        int max_expand = 200);

/// Gauss-Legendre nodes and weights on [a, b].
std::pair<std::vector<double>, std::vector<double>>
gauss_legendre(int n, double a, double b);

double digamma(double x);
double trigamma(double x);

/// SplitMix64 step; used to derive independent seeds from (base, cell, rep) tuples.
std::uint64_t splitmix64(std::uint64_t x);

/// Combine two seed tokens into a new one.
inline std::uint64_t seed_mix(std::uint64_t a, std::uint64_t b) {
    return splitmix64(splitmix64(a) ^ (b + 0x9E3779B97F4A7C15ULL));
}

/// Map a raw 64-bit word to a double in [0, 1) using the top 53 bits.
inline double to_unit_interval(std::uint64_t v) {
    return static_cast<double>(v >> 11) * 0x1.0p-53;
}

}  // namespace egtl::num

#endif
