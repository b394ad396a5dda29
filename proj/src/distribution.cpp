#include "egtl/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "egtl/numeric.hpp"

namespace egtl {

namespace detail {

double a_norm_scaled(double q, int k) {
    if (q == 0.0) return 1.0 / k;
    if (q < 0.25) {
        // S(q,k) = sum_{j>=k} q^{j-k}/j; no cancellation, no underflow
        double qpow = 1.0, acc = 0.0;
        for (int j = k; j < k + 200; ++j) {
            const double term = qpow / j;
            acc += term;
            if (term < 1e-17 * acc) break;
            qpow *= q;
        }
        return acc;
    }
    double s = -std::log1p(-q);
    double qpow = 1.0;
    for (int j = 1; j < k; ++j) {
        qpow *= q;
        s -= qpow / j;
    }
    for (int j = 0; j < k; ++j) s /= q;
    return s;
}

double a_norm_any(double q, int k) {
    double qk = 1.0;
    for (int j = 0; j < k; ++j) qk *= q;
    return qk * a_norm_scaled(q, k);
}

double quantile_root_solve(const EgtlParams& params, double u) {
    const double p = params.p();
    const int k = params.k();
    // A(p y, k) = u A(p, k) with the common p^k factor divided out
    const double target = u * a_norm_scaled(p, k);
    const double y_hi = 1.0 - 1e-15;
    auto f = [&](double y) {
        double yk = 1.0;
        for (int j = 0; j < k; ++j) yk *= y;
        return yk * a_norm_scaled(p * y, k) - target;
    };
    if (f(y_hi) <= 0.0) {
        // u indistinguishable from 1 at this bracket; map the endpoint
        return (std::log1p(-p * y_hi) - std::log1p(-y_hi)) / params.theta();
    }
    num::RootOptions opts;
    opts.bisect_until = 1e-6;
    opts.xtol = 1e-15;
    const double y = num::find_root(f, 0.0, y_hi, opts);
    return (std::log1p(-p * y) - std::log1p(-y)) / params.theta();
}

}  // namespace detail

double a_norm(double p, int k) {
    if (!(p > 0.0) || !(p < 1.0))
        throw std::domain_error("a_norm: p must lie in (0, 1)");
    if (k < 1) throw std::domain_error("a_norm: k must be >= 1");
    return detail::a_norm_any(p, k);
}

static void check_support(double x, const char* who) {
    if (!(x >= 0.0)) throw std::domain_error(std::string(who) + ": x must be >= 0");
}

double pdf(const EgtlParams& params, double x) {
    check_support(x, "pdf");
    const double p = params.p(), th = params.theta();
    const int k = params.k();
    // the p^k of the textbook form cancels against A(p,k) = p^k S(p,k)
    const double e = std::exp(-th * x);
    const double one_minus_e = -std::expm1(-th * x);
    double num = th * e;
    for (int i = 0; i < k - 1; ++i) num *= one_minus_e;
    double den = detail::a_norm_scaled(p, k);
    const double base = 1.0 - p * e;
    for (int i = 0; i < k; ++i) den *= base;
    return num / den;
}

double log_pdf(const EgtlParams& params, double x) {
    check_support(x, "log_pdf");
    const double p = params.p(), th = params.theta();
    const int k = params.k();
    if (k >= 2 && x == 0.0) return -std::numeric_limits<double>::infinity();
    const double e = std::exp(-th * x);
    double lp = std::log(th) - th * x - std::log(detail::a_norm_scaled(p, k)) -
                k * std::log1p(-p * e);
    if (k >= 2) lp += (k - 1) * std::log(-std::expm1(-th * x));
    return lp;
}

double cdf(const EgtlParams& params, double x) {
    check_support(x, "cdf");
    const double p = params.p(), th = params.theta();
    const int k = params.k();
    const double e = std::exp(-th * x);
    const double y = -std::expm1(-th * x) / (1.0 - p * e);
    // A(p y, k)/A(p, k) = y^k S(p y, k)/S(p, k)
    double yk = 1.0;
    for (int i = 0; i < k; ++i) yk *= y;
    const double g = yk * detail::a_norm_scaled(p * y, k) / detail::a_norm_scaled(p, k);
    return std::min(g, 1.0);
}

double survival(const EgtlParams& params, double x) {
    check_support(x, "survival");
    if (x == 0.0) return 1.0;
    const double p = params.p(), th = params.theta();
    const int k = params.k();
    const double e = std::exp(-th * x);
    const double base = 1.0 - p * e;
    const double y = -std::expm1(-th * x) / base;
    // 1 - y computed from x directly; exact where y is close to 1
    const double one_minus_y = (1.0 - p) * e / base;

    // A(p,k) - A(py,k) = sum_{j>=k} p^j (1 - y^j) / j, every term positive.
    // Direct summation below p = 0.25; above, fold the j < k part into the
    // log term: the identity 1 - p*y = (1-p)/(1-p e^{-theta x}) turns
    // ln((1-p*y)/(1-p)) into -ln(1-p e^{-theta x}).
    double s;
    if (p < 0.25) {
        // sum_{j>=k} p^{j-k} (1-y^j)/j over S(p,k); positive terms throughout
        double ppow = 1.0, ypow = 1.0, ysum = 1.0;
        for (int m = 1; m < k; ++m) {
            ypow *= y;
            ysum += ypow;
        }
        double acc = 0.0;
        for (int j = k; j < k + 400; ++j) {
            const double term = ppow * one_minus_y * ysum / j;
            acc += term;
            if (term < 1e-17 * acc) break;
            ppow *= p;
            ypow *= y;
            ysum += ypow;
        }
        s = acc / detail::a_norm_scaled(p, k);
    } else {
        double sum = 0.0, ppow = 1.0, ypow = 1.0, ysum = 1.0;
        for (int j = 1; j < k; ++j) {
            ppow *= p;
            sum += ppow * one_minus_y * ysum / j;
            ypow *= y;
            ysum += ypow;
        }
        const double diff = -std::log1p(-p * e) - sum;
        s = diff / detail::a_norm_any(p, k);
    }
    return std::clamp(s, 0.0, 1.0);
}

double hazard(const EgtlParams& params, double x) {
    check_support(x, "hazard");
    return pdf(params, x) / survival(params, x);
}

namespace {

// C(k-1, j) for j = 0..k-1, exact in double for the k this family meets
std::vector<double> binomial_row(int k) {
    std::vector<double> row(static_cast<std::size_t>(k));
    row[0] = 1.0;
    for (int j = 1; j < k; ++j) row[j] = row[j - 1] * (k - j) / j;
    return row;
}

void validate(const SeriesControl& ctl) {
    if (!(ctl.rel_tol > 0.0) || !(ctl.rel_tol < 1e-6))
        throw std::invalid_argument("SeriesControl: rel_tol must lie in (0, 1e-6)");
    if (ctl.max_terms < 64)
        throw std::invalid_argument("SeriesControl: max_terms must be >= 64");
}

// Outer series over i shared by the moments and the mgf. `inner(i)` must
// supply the alternating j-sum; truncation follows SeriesControl.
template <typename Inner>
double outer_series(double p, int k, const SeriesControl& ctl, Inner&& inner) {
    validate(ctl);
    double sum = 0.0, cbin = 1.0, ppow = 1.0;
    int small_run = 0;
    for (long i = 0; i < ctl.max_terms; ++i) {
        if (i > 0) {
            cbin *= static_cast<double>(k - 1 + i) / i;
            ppow *= p;
        }
        const double term = cbin * ppow * inner(i);
        sum += term;
        if (std::fabs(term) <= ctl.rel_tol * std::fabs(sum)) {
            if (++small_run >= 3 && i >= 8) return sum;
        } else {
            small_run = 0;
        }
    }
    throw NonConvergenceError("series: max_terms reached before tolerance (p close to 1?)");
}

}  // namespace

double raw_moment(const EgtlParams& params, int r, const SeriesControl& ctl) {
    if (r < 1) throw std::domain_error("raw_moment: r must be >= 1");
    const double p = params.p(), th = params.theta();
    const int k = params.k();
    const auto brow = binomial_row(k);
    // pair consecutive j terms so the alternating inner sum cancels pairwise
    auto inner = [&](long i) {
        double s = 0.0;
        for (int j = 0; j < k; j += 2) {
            const double t1 = brow[j] / std::pow(static_cast<double>(i + j + 1), r + 1);
            const double t2 =
                (j + 1 < k) ? brow[j + 1] / std::pow(static_cast<double>(i + j + 2), r + 1) : 0.0;
            s += t1 - t2;
        }
        return s;
    };
    const double series = outer_series(p, k, ctl, inner);
    double scale = std::tgamma(r + 1.0) / detail::a_norm_scaled(p, k);  // p^k/A(p,k) = 1/S
    for (int i = 0; i < r; ++i) scale /= th;
    return scale * series;
}

double mgf(const EgtlParams& params, double t, const SeriesControl& ctl) {
    const double p = params.p(), th = params.theta();
    const int k = params.k();
    if (!(t < th)) throw std::domain_error("mgf: requires t < theta");
    if (t == 0.0) return 1.0;
    const double ratio = t / th;
    const auto brow = binomial_row(k);
    auto inner = [&](long i) {
        double s = 0.0;
        for (int j = 0; j < k; j += 2) {
            const double t1 = brow[j] / (i + j + 1 - ratio);
            const double t2 = (j + 1 < k) ? brow[j + 1] / (i + j + 2 - ratio) : 0.0;
            s += t1 - t2;
        }
        return s;
    };
    const double series = outer_series(p, k, ctl, inner);
    return series / detail::a_norm_scaled(p, k);
}

double quantile(const EgtlParams& params, double u) {
    if (!(u >= 0.0) || !(u < 1.0))
        throw std::domain_error("quantile: u must lie in [0, 1)");
    if (u == 0.0) return 0.0;
    if (params.k() == 1) {
        // X = -(1/theta) ln((1 - (1-p)^{1-u}) / p)
        const double num = -std::expm1((1.0 - u) * std::log1p(-params.p()));
        return -(std::log(num) - std::log(params.p())) / params.theta();
    }
    return detail::quantile_root_solve(params, u);
}

std::vector<double> sample(const EgtlParams& params, std::size_t n, std::uint64_t seed) {
    std::mt19937_64 eng(seed);
    std::vector<double> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double u = num::to_unit_interval(eng());
        out.push_back(quantile(params, u));
    }
    return out;
}

}  // namespace egtl
