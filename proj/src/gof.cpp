#include "egtl/gof.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "egtl/numeric.hpp"

namespace egtl {

double ks_statistic(const Dataset& data, const std::function<double(double)>& cdf) {
    const auto& x = data.values();
    const double n = static_cast<double>(x.size());
    double d = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double f = cdf(x[i]);
        d = std::max(d, (i + 1) / n - f);
        d = std::max(d, f - i / n);
    }
    return d;
}

double ks_statistic_postjump(const Dataset& data, const std::function<double(double)>& cdf) {
    const auto& x = data.values();
    const double n = static_cast<double>(x.size());
    double d = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i)
        d = std::max(d, std::fabs(cdf(x[i]) - (i + 1) / n));
    return d;
}

double ks_p_value(double d, std::size_t n) {
    if (!(d > 0.0)) return 1.0;
    const double t = static_cast<double>(n) * d * d;
    if (t < 1e-8) return 1.0;
    double sum = 0.0;
    double sign = 1.0;
    for (long m = 1; m <= 100000; ++m) {
        const double term = sign * std::exp(-2.0 * m * m * t);
        sum += term;
        if (std::fabs(term) < 1e-12 * std::fabs(sum)) break;
        sign = -sign;
    }
    return std::clamp(2.0 * sum, 0.0, 1.0);
}

namespace {

void require_strictly_positive(const Dataset& data, const char* who) {
    if (data.min() <= 0.0)
        throw DataQualityError(std::string(who) + ": requires strictly positive data");
}

// regularized lower incomplete gamma P(a, x); series for x < a+1, continued
// fraction otherwise
double gammap(double a, double x) {
    if (x <= 0.0) return 0.0;
    const double gln = std::lgamma(a);
    if (x < a + 1.0) {
        double ap = a, sum = 1.0 / a, del = sum;
        for (int i = 0; i < 500; ++i) {
            ap += 1.0;
            del *= x / ap;
            sum += del;
            if (std::fabs(del) < std::fabs(sum) * 1e-16) break;
        }
        return sum * std::exp(-x + a * std::log(x) - gln);
    }
    double b = x + 1.0 - a, c = 1e300, dd = 1.0 / b, h = dd;
    for (int i = 1; i <= 500; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        dd = an * dd + b;
        if (std::fabs(dd) < 1e-300) dd = 1e-300;
        c = b + an / c;
        if (std::fabs(c) < 1e-300) c = 1e-300;
        dd = 1.0 / dd;
        const double del = dd * c;
        h *= del;
        if (std::fabs(del - 1.0) < 1e-16) break;
    }
    return 1.0 - std::exp(-x + a * std::log(x) - gln) * h;
}

}  // namespace

double gamma_cdf(double x, double lambda, double beta) {
    if (x <= 0.0) return 0.0;
    return gammap(beta, lambda * x);
}

double weibull_cdf(double x, double lambda, double beta) {
    if (x <= 0.0) return 0.0;
    return -std::expm1(-std::pow(lambda * x, beta));
}

GammaFit fit_gamma(const Dataset& data) {
    require_strictly_positive(data, "fit_gamma");
    const auto& x = data.values();
    const double xbar = data.mean();
    double mean_log = 0.0;
    for (double xi : x) mean_log += std::log(xi);
    mean_log /= static_cast<double>(x.size());
    const double s = std::log(xbar) - mean_log;

    // Johnson-Kotz style starting value, then Newton on ln(b) - psi(b) = s
    double b = (3.0 - s + std::sqrt((s - 3.0) * (s - 3.0) + 24.0 * s)) / (12.0 * s);
    bool ok = false;
    for (int it = 0; it < 200; ++it) {
        const double f = std::log(b) - num::digamma(b) - s;
        const double fp = 1.0 / b - num::trigamma(b);
        double bn = b - f / fp;
        if (!(bn > 0.0)) bn = b / 2;
        const double rel = std::fabs(bn - b) / b;
        b = bn;
        if (rel < 1e-13) {
            ok = true;
            break;
        }
    }
    if (!ok) throw NonConvergenceError("fit_gamma: shape equation did not converge");
    return {b / xbar, b};
}

WeibullFit fit_weibull(const Dataset& data) {
    require_strictly_positive(data, "fit_weibull");
    const auto& x = data.values();
    const double n = static_cast<double>(x.size());
    const double scale = data.max();
    std::vector<double> v(x.size()), lv(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        v[i] = x[i] / scale;
        lv[i] = std::log(v[i]);
    }
    const double mean_lv = std::accumulate(lv.begin(), lv.end(), 0.0) / n;

    auto g = [&](double beta) {
        double swl = 0.0, sw = 0.0;
        for (std::size_t i = 0; i < v.size(); ++i) {
            const double w = std::pow(v[i], beta);
            sw += w;
            swl += w * lv[i];
        }
        return swl / sw - 1.0 / beta - mean_lv;
    };
    double beta;
    try {
        beta = num::find_root_expand(g, 0.05, 20.0, 1e-3, 1e3);
    } catch (const std::runtime_error&) {
        throw NonConvergenceError("fit_weibull: shape equation did not converge");
    }
    double sw = 0.0;
    for (double vi : v) sw += std::pow(vi, beta);
    const double lambda_scaled = std::pow(n / sw, 1.0 / beta);
    return {lambda_scaled / scale, beta};
}

std::vector<GofReport> model_selection_table(const Dataset& data, int k_max) {
    if (k_max < 1) throw std::invalid_argument("model_selection_table: k_max must be >= 1");
    std::vector<GofReport> rows;
    rows.reserve(static_cast<std::size_t>(k_max) + 2);

    for (int k = 1; k <= k_max; ++k) {
        GofReport row;
        row.model = "egtl";
        row.k = k;
        row.n = data.size();
        try {
            const FitResult fr = fit_mle(data, k);
            row.param1 = fr.params.p();
            row.param2 = fr.params.theta();
            row.log_lik = fr.log_lik;
            row.flags = fr.flags;
            if (!fr.converged) row.flags.push_back("fit_not_converged");
            const EgtlParams params = fr.params;
            row.ks_stat = ks_statistic(data, [params](double x) { return cdf(params, x); });
            row.p_value = ks_p_value(row.ks_stat, data.size());
        } catch (const std::exception& e) {
            row.fit_ok = false;
            row.flags.push_back(std::string("fit_failed: ") + e.what());
            row.ks_stat = std::numeric_limits<double>::quiet_NaN();
            row.p_value = std::numeric_limits<double>::quiet_NaN();
            row.log_lik = std::numeric_limits<double>::quiet_NaN();
        }
        rows.push_back(std::move(row));
    }

    {
        GofReport row;
        row.model = "gamma";
        row.n = data.size();
        try {
            const GammaFit gf = fit_gamma(data);
            row.param1 = gf.lambda;
            row.param2 = gf.beta;
            row.ks_stat =
                ks_statistic(data, [gf](double x) { return gamma_cdf(x, gf.lambda, gf.beta); });
            row.p_value = ks_p_value(row.ks_stat, data.size());
            double ll = 0.0;
            for (double xi : data.values())
                ll += gf.beta * std::log(gf.lambda) + (gf.beta - 1.0) * std::log(xi) -
                      gf.lambda * xi - std::lgamma(gf.beta);
            row.log_lik = ll;
        } catch (const std::exception& e) {
            row.fit_ok = false;
            row.flags.push_back(std::string("fit_failed: ") + e.what());
        }
        rows.push_back(std::move(row));
    }
    {
        GofReport row;
        row.model = "weibull";
        row.n = data.size();
        try {
            const WeibullFit wf = fit_weibull(data);
            row.param1 = wf.lambda;
            row.param2 = wf.beta;
            row.ks_stat =
                ks_statistic(data, [wf](double x) { return weibull_cdf(x, wf.lambda, wf.beta); });
            row.p_value = ks_p_value(row.ks_stat, data.size());
            double ll = 0.0;
            for (double xi : data.values())
                ll += std::log(wf.beta) + wf.beta * std::log(wf.lambda) +
                      (wf.beta - 1.0) * std::log(xi) - std::pow(wf.lambda * xi, wf.beta);
            row.log_lik = ll;
        } catch (const std::exception& e) {
            row.fit_ok = false;
            row.flags.push_back(std::string("fit_failed: ") + e.what());
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace egtl
