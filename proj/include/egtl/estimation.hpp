#ifndef EGTL_ESTIMATION_HPP
#define EGTL_ESTIMATION_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "egtl/dataset.hpp"
#include "egtl/distribution.hpp"
#include "egtl/params.hpp"

namespace egtl {

enum class FitMethod { mle_direct, em, moments, bayes };

std::string to_string(FitMethod m);
std::optional<FitMethod> fit_method_from_string(const std::string& s);

struct TracePoint {
    double p;
    double theta;
    double objective;
};

/// Outcome of one fitting run. `flags` carries diagnostics such as
/// "boundary_drift", "non_convergence", "multiple_roots",
/// "degenerate_posterior", "singular_information", "inner_solve_failure".
struct FitResult {
    EgtlParams params;
    double log_lik;
    FitMethod method;
    std::optional<std::pair<double, double>> std_errors;  // (se_p, se_theta)
    int iterations = 0;
    bool converged = false;
    std::vector<std::string> flags;
    std::vector<TracePoint> trace;
    /// Distinct local optima seen across multistart runs, objective = log_lik.
    std::vector<TracePoint> local_optima;

    bool has_flag(const std::string& f) const;
};

/// Uniform prior on p, Gamma(a, b) prior on theta (b is a rate), posterior
/// means by tensor-product Gauss-Legendre quadrature.
struct BayesConfig {
    double a = 1.0;
    double b = 1.0;
    int grid_p = 64;
    int grid_theta = 64;
    double theta_max = 0.0;  // <= 0 selects the automatic cutoff
};

/// Observed information at a point: negative Hessian of the log-likelihood,
/// entries from central differences of the analytic score. The off-diagonal
/// is kept unsymmetrized (ipt vs itp) so consumers can check consistency;
/// standard errors use the symmetrized matrix.
struct FisherInfo {
    double ipp, ipt, itp, itt;
    bool positive_definite = false;
    std::optional<std::pair<double, double>> std_errors;
};

double log_likelihood(const Dataset& data, const EgtlParams& params);

/// Gradient (d/dp, d/dtheta) of the log-likelihood.
std::pair<double, double> score(const Dataset& data, const EgtlParams& params);

FisherInfo fisher_information(const Dataset& data, const EgtlParams& params);

/// Direct maximum likelihood via quasi-Newton ascent in (logit p, log theta).
/// Without `init`, runs a small multistart and returns the best run, with the
/// distinct optima recorded in `local_optima`.
FitResult fit_mle(const Dataset& data, int k,
                  std::optional<std::pair<double, double>> init = std::nullopt);

/// EM iteration: explicit E-step weights, implicit M-step updates solved by
/// damped fixed-point iteration with a bracketed root-solve fallback.
FitResult fit_em(const Dataset& data, int k,
                 std::optional<std::pair<double, double>> init = std::nullopt);

/// Method of moments: eliminates theta between the first two moment
/// equations and root-solves the remaining equation in p.
FitResult fit_moments(const Dataset& data, int k, const SeriesControl& ctl = {});

/// Posterior means under uniform x gamma priors.
FitResult fit_bayes(const Dataset& data, int k, const BayesConfig& cfg = {});

namespace detail {

/// Default optimizer start: p0 = 0.5, theta0 = k / mean(x).
std::pair<double, double> default_init(const Dataset& data, int k);

}  // namespace detail

}  // namespace egtl

#endif
