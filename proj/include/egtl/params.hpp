#ifndef EGTL_PARAMS_HPP
#define EGTL_PARAMS_HPP

#include <stdexcept>
#include <string>

namespace egtl {

/// Raised when an iterative computation (series, optimizer, solver) exhausts
/// its budget before reaching the requested tolerance.
struct NonConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised when input data violate a fitting precondition (zeros with k >= 2,
/// constant samples, malformed files).
struct DataQualityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised when an estimating equation has no root in the admissible range.
struct NoRootError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Parameter triple (p, theta, k) selecting one member of the family.
///
/// p is the shape parameter in (0, 1), theta > 0 the rate, and k >= 1 the
/// order-statistic index. Construction validates; instances are immutable.
class EgtlParams {
  public:
    EgtlParams(double p, double theta, int k);

    double p() const { return p_; }
    double theta() const { return theta_; }
    int k() const { return k_; }

  private:
    double p_;
    double theta_;
    int k_;
};

/// Truncation rule for the infinite series behind the moments and the mgf.
///
/// The outer series is cut once the running term stays below
/// rel_tol * |partial sum| for three consecutive terms (the inner sums
/// alternate, so a single small term is not trusted). Exceeding max_terms
/// raises NonConvergenceError.
struct SeriesControl {
    double rel_tol = 1e-12;
    long max_terms = 1000000;
};

}  // namespace egtl

#endif
