#ifndef EGTL_GOF_HPP
#define EGTL_GOF_HPP

#include <functional>
#include <string>
#include <vector>

#include "egtl/dataset.hpp"
#include "egtl/estimation.hpp"

namespace egtl {

/// One row of the model-comparison table.
struct GofReport {
    std::string model;      // "egtl" with k set, or "gamma" / "weibull"
    int k = 0;              // order index for egtl rows, 0 for the baselines
    double param1 = 0.0;    // p (egtl) or rate lambda (baselines)
    double param2 = 0.0;    // theta (egtl) or shape beta (baselines)
    double ks_stat = 0.0;
    double p_value = 0.0;
    std::size_t n = 0;
    double log_lik = 0.0;
    bool fit_ok = true;
    std::vector<std::string> flags;
    // statistic convention carried with the row so corrected variants can be
    // added without a format change
    std::string ks_method = "two_sided_sup";
};

/// Exact sup-distance between the empirical step function and `cdf`:
/// D = max_i max(i/n - F(x_(i)), F(x_(i)) - (i-1)/n).
double ks_statistic(const Dataset& data, const std::function<double(double)>& cdf);

/// One-sided variant comparing F only against the post-jump levels i/n:
/// max_i |F(x_(i)) - i/n|. Underestimates the sup by up to 1/n; kept because
/// published tables are sometimes computed this way.
double ks_statistic_postjump(const Dataset& data, const std::function<double(double)>& cdf);

/// Asymptotic Kolmogorov tail probability 2 sum_m (-1)^{m-1} e^{-2 m^2 n d^2},
/// truncated at relative 1e-12 and clamped to [0, 1].
double ks_p_value(double d, std::size_t n);

struct GammaFit {
    double lambda;  // rate
    double beta;    // shape
};
struct WeibullFit {
    double lambda;  // rate (cdf = 1 - exp(-(lambda x)^beta))
    double beta;    // shape
};

/// Gamma MLE: Newton on the profiled digamma equation for the shape.
GammaFit fit_gamma(const Dataset& data);

/// Weibull MLE: safeguarded solve of the profiled shape equation.
WeibullFit fit_weibull(const Dataset& data);

double gamma_cdf(double x, double lambda, double beta);
double weibull_cdf(double x, double lambda, double beta);

/// Fits egtl for k = 1..k_max plus the gamma and Weibull baselines; one row
/// per model in that order. Per-row failures are recorded, not thrown.
std::vector<GofReport> model_selection_table(const Dataset& data, int k_max);

}  // namespace egtl

#endif
