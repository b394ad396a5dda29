#ifndef EGTL_DISTRIBUTION_HPP
#define EGTL_DISTRIBUTION_HPP

#include <cstdint>
#include <vector>

#include "egtl/params.hpp"

namespace egtl {

/// Normalizer A(p, k) of the logarithmic series truncated below k:
/// A(p, k) = sum_{j>=k} p^j / j = -ln(1-p) - sum_{j<k} p^j / j.
/// Strictly positive on 0 < p < 1, k >= 1.
double a_norm(double p, int k);

/// Density of the k-th order statistic lifetime at x >= 0.
/// Finite positive at x = 0 for k = 1 (the modal value), exactly 0 for k >= 2.
double pdf(const EgtlParams& params, double x);

/// Natural log of pdf; -inf when the density is zero (x = 0 with k >= 2).
double log_pdf(const EgtlParams& params, double x);

/// Distribution function via the y-transform: G(x) = A(p*y, k) / A(p, k)
/// with y = (1 - e^{-theta x}) / (1 - p e^{-theta x}).
double cdf(const EgtlParams& params, double x);

/// Survival 1 - cdf, computed through a cancellation-free route in the tail.
double survival(const EgtlParams& params, double x);

/// Failure rate pdf / survival.
double hazard(const EgtlParams& params, double x);

/// r-th raw moment E(X^r) via the double series, r >= 1.
double raw_moment(const EgtlParams& params, int r, const SeriesControl& ctl = {});

/// Moment generating function E(e^{tX}) for t < theta; exactly 1 at t = 0.
double mgf(const EgtlParams& params, double t, const SeriesControl& ctl = {});

/// Quantile: the x >= 0 with cdf(x) = u, for u in [0, 1).
/// Closed form for k = 1; bracketed root solve in the y-transform otherwise.
double quantile(const EgtlParams& params, double u);

/// n independent draws by inversion of a seeded uniform stream.
/// The same seed always reproduces the same sequence.
std::vector<double> sample(const EgtlParams& params, std::size_t n, std::uint64_t seed);

namespace detail {

/// S(q, k) = A(q, k) / q^k, the normalizer with its leading power divided
/// out. Series summation below q = 0.25 (the closed form cancels
/// catastrophically for small q when k >= 2), closed form above. Finite and
/// positive for all q in [0, 1), including q so small that q^k underflows.
double a_norm_scaled(double q, int k);

/// A(q, k) for q in [0, 1); underflows with q^k for extreme q.
double a_norm_any(double q, int k);

/// The general root-solve path of the quantile, also used for k = 1 in tests.
double quantile_root_solve(const EgtlParams& params, double u);

}  // namespace detail

}  // namespace egtl

#endif
