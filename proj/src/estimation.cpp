#include "egtl/estimation.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "egtl/numeric.hpp"

namespace egtl {

namespace {

constexpr double kBoundaryLo = 1e-10;
constexpr double kBoundaryHi = 1.0 - 1e-10;
constexpr double kGradTol = 1e-8;
constexpr double kStepTol = 1e-10;
constexpr int kMaxIter = 500;

double loglik_raw(const std::vector<double>& x, double p, double th, int k) {
    // the n k ln(p) term cancels against -n ln A(p,k) = -n k ln(p) - n ln S,
    // which keeps the value finite for p arbitrarily close to 0
    const std::size_t n = x.size();
    double s_x = 0.0, s_l1 = 0.0, s_l2 = 0.0;
    for (double xi : x) {
        s_x += xi;
        const double e = std::exp(-th * xi);
        if (k >= 2) {
            const double om = -std::expm1(-th * xi);
            if (om == 0.0) return -std::numeric_limits<double>::infinity();
            s_l1 += std::log(om);
        }
        s_l2 += std::log1p(-p * e);
    }
    return n * std::log(th) - th * s_x + (k - 1) * s_l1 -
           n * std::log(detail::a_norm_scaled(p, k)) - k * s_l2;
}

// d lnL / dp and d lnL / dtheta. The A'(p,k)/A(p,k) term uses
// A'(p,k) = p^{k-1}/(1-p); the data sums are written with expm1 so the
// x -> 0 and theta*x -> large regimes stay accurate.
std::pair<double, double> score_raw(const std::vector<double>& x, double p, double th, int k) {
    const double n = static_cast<double>(x.size());
    // A'(p,k)/A(p,k) = p^{k-1}/((1-p) p^k S(p,k)) = 1/(p (1-p) S(p,k))
    const double a_ratio = 1.0 / (p * (1.0 - p) * detail::a_norm_scaled(p, k));

    double sum_inv = 0.0;   // sum 1/(e^{th x} - p)
    double sum_x1 = 0.0;    // sum x/(e^{th x} - 1)
    double sum_xp = 0.0;    // sum x/(e^{th x} - p)
    double sum_x = 0.0;
    for (double xi : x) {
        sum_x += xi;
        const double em1 = std::expm1(th * xi);  // e^{th x} - 1, may be +inf
        const double ep = em1 + (1.0 - p);       // e^{th x} - p
        sum_inv += 1.0 / ep;
        if (k >= 2) sum_x1 += (em1 > 0.0) ? xi / em1 : 0.0;
        sum_xp += (std::isinf(ep)) ? 0.0 : xi / ep;
    }
    const double dp = n * k / p - n * a_ratio + k * sum_inv;
    const double dth = n / th - sum_x + (k - 1) * sum_x1 - k * p * sum_xp;
    return {dp, dth};
}

void require_positive_for_k(const Dataset& data, int k) {
    if (k < 2) return;
    const auto zeros = data.zero_indices();
    if (zeros.empty()) return;
    std::ostringstream msg;
    msg << "zero lifetimes give zero density for k >= 2; offending sorted indices:";
    for (auto i : zeros) msg << ' ' << i;
    throw DataQualityError(msg.str());
}

void require_nondegenerate(const Dataset& data) {
    if (data.min() == data.max())
        throw DataQualityError("sample is constant; no information about the shape");
}

double logistic(double z) { return 1.0 / (1.0 + std::exp(-z)); }
double logit(double q) { return std::log(q / (1.0 - q)); }

struct AscentRun {
    double p = 0.5, theta = 1.0, ll = -std::numeric_limits<double>::infinity();
    int iterations = 0;
    bool grad_converged = false;
    bool boundary = false;
    std::vector<TracePoint> trace;
};

// Quasi-Newton (BFGS) ascent of the log-likelihood over (logit p, log theta),
// gradient from the analytic score via the chain rule, backtracking line
// search, and a finite-difference Newton polish if BFGS stalls above the
// gradient tolerance.
AscentRun maximize_loglik(const std::vector<double>& x, int k, double p0, double th0) {
    AscentRun run;
    double lp = logit(std::clamp(p0, 1e-6, 1.0 - 1e-6));
    double lt = std::log(th0);

    auto p_of = [](double lpv) { return std::clamp(logistic(lpv), 1e-300, 1.0 - 1e-16); };
    auto value = [&](double lpv, double ltv) { return loglik_raw(x, p_of(lpv), std::exp(ltv), k); };
    auto grad = [&](double lpv, double ltv) {
        const double p = p_of(lpv), th = std::exp(ltv);
        auto [dp, dth] = score_raw(x, p, th, k);
        return std::array<double, 2>{p * (1.0 - p) * dp, th * dth};
    };

    double ll = value(lp, lt);
    auto g = grad(lp, lt);
    // inverse-Hessian approximation of the negated objective
    double h00 = 1.0, h01 = 0.0, h11 = 1.0;
    double gnorm = std::max(std::fabs(g[0]), std::fabs(g[1]));

    int it = 0;
    for (; it < kMaxIter; ++it) {
        run.trace.push_back({p_of(lp), std::exp(lt), ll});
        if (gnorm < kGradTol) {
            run.grad_converged = true;
            break;
        }
        const double pcur = p_of(lp);
        if (pcur < kBoundaryLo || pcur > kBoundaryHi) {
            run.boundary = true;
            break;
        }
        double d0 = h00 * g[0] + h01 * g[1];
        double d1 = h01 * g[0] + h11 * g[1];
        double slope = d0 * g[0] + d1 * g[1];
        if (!(slope > 0.0)) {  // reset to steepest ascent
            h00 = h11 = 1.0;
            h01 = 0.0;
            d0 = g[0];
            d1 = g[1];
            slope = g[0] * g[0] + g[1] * g[1];
        }
        double t = 1.0;
        double ll_new = value(lp + t * d0, lt + t * d1);
        while (!(std::isfinite(ll_new) && ll_new >= ll + 1e-4 * t * slope) && t > 1e-14) {
            t *= 0.5;
            ll_new = value(lp + t * d0, lt + t * d1);
        }
        if (t <= 1e-14) break;  // no uphill progress along d
        const double s0 = t * d0, s1 = t * d1;
        lp += s0;
        lt += s1;
        ll = ll_new;
        auto g_new = grad(lp, lt);
        // BFGS update for the negated objective: y = g_old - g_new
        const double y0 = g[0] - g_new[0], y1 = g[1] - g_new[1];
        const double sy = s0 * y0 + s1 * y1;
        if (sy > 1e-12 * std::hypot(s0, s1) * std::hypot(y0, y1)) {
            const double hy0 = h00 * y0 + h01 * y1;
            const double hy1 = h01 * y0 + h11 * y1;
            const double yhy = y0 * hy0 + y1 * hy1;
            const double c1 = (sy + yhy) / (sy * sy);
            h00 += c1 * s0 * s0 - (hy0 * s0 + s0 * hy0) / sy;
            h01 += c1 * s0 * s1 - (hy0 * s1 + s0 * hy1) / sy;
            h11 += c1 * s1 * s1 - (hy1 * s1 + s1 * hy1) / sy;
        }
        g = g_new;
        gnorm = std::max(std::fabs(g[0]), std::fabs(g[1]));
        if (std::max(std::fabs(s0), std::fabs(s1)) < kStepTol) {
            run.grad_converged = gnorm < kGradTol;
            ++it;
            break;
        }
    }

    // Newton polish on the transformed coordinates when BFGS stalls close to
    // an interior optimum
    if (!run.boundary && !run.grad_converged && gnorm < 1e-4) {
        for (int polish = 0; polish < 10 && gnorm >= kGradTol; ++polish) {
            const double hp = 1e-6 * (1.0 + std::fabs(lp));
            const double ht = 1e-6 * (1.0 + std::fabs(lt));
            auto gpp = grad(lp + hp, lt), gpm = grad(lp - hp, lt);
            auto gtp = grad(lp, lt + ht), gtm = grad(lp, lt - ht);
            const double a00 = (gpp[0] - gpm[0]) / (2 * hp);
            const double a01 = 0.5 * ((gpp[1] - gpm[1]) / (2 * hp) + (gtp[0] - gtm[0]) / (2 * ht));
            const double a11 = (gtp[1] - gtm[1]) / (2 * ht);
            const double det = a00 * a11 - a01 * a01;
            if (!(std::fabs(det) > 1e-300)) break;
            const double n0 = -(a11 * g[0] - a01 * g[1]) / det;
            const double n1 = -(-a01 * g[0] + a00 * g[1]) / det;
            const double ll_try = value(lp + n0, lt + n1);
            if (!(ll_try >= ll - 1e-9)) break;
            lp += n0;
            lt += n1;
            ll = ll_try;
            g = grad(lp, lt);
            gnorm = std::max(std::fabs(g[0]), std::fabs(g[1]));
        }
        run.grad_converged = gnorm < kGradTol;
    }

    run.p = p_of(lp);
    run.theta = std::exp(lt);
    run.ll = ll;
    run.iterations = it;
    return run;
}

FitResult blank_result(int k, FitMethod method) {
    return {EgtlParams(0.5, 1.0, k), 0.0, method, std::nullopt, 0, false, {}, {}, {}};
}

EgtlParams clamp_params(double p, double th, int k, std::vector<std::string>& flags) {
    double pc = p;
    if (p < kBoundaryLo || p > kBoundaryHi) {
        flags.push_back("boundary_drift");
        pc = std::clamp(p, kBoundaryLo, kBoundaryHi);
    }
    return EgtlParams(pc, th, k);
}

void attach_std_errors(const Dataset& data, FitResult& fr) {
    const auto info = fisher_information(data, fr.params);
    if (info.positive_definite)
        fr.std_errors = info.std_errors;
    else
        fr.flags.push_back("singular_information");
}

}  // namespace

std::string to_string(FitMethod m) {
    switch (m) {
        case FitMethod::mle_direct: return "mle_direct";
        case FitMethod::em: return "em";
        case FitMethod::moments: return "moments";
        case FitMethod::bayes: return "bayes";
    }
    return "unknown";
}

std::optional<FitMethod> fit_method_from_string(const std::string& s) {
    if (s == "mle" || s == "mle_direct") return FitMethod::mle_direct;
    if (s == "em") return FitMethod::em;
    if (s == "moments") return FitMethod::moments;
    if (s == "bayes") return FitMethod::bayes;
    return std::nullopt;
}

bool FitResult::has_flag(const std::string& f) const {
    return std::find(flags.begin(), flags.end(), f) != flags.end();
}

double log_likelihood(const Dataset& data, const EgtlParams& params) {
    return loglik_raw(data.values(), params.p(), params.theta(), params.k());
}

std::pair<double, double> score(const Dataset& data, const EgtlParams& params) {
    require_positive_for_k(data, params.k());
    return score_raw(data.values(), params.p(), params.theta(), params.k());
}

FisherInfo fisher_information(const Dataset& data, const EgtlParams& params) {
    const double p = params.p(), th = params.theta();
    const int k = params.k();
    const auto& x = data.values();
    const double cbrt_eps = 6.06e-6;
    const double hp = std::min({cbrt_eps * std::max(p, 1e-4), p / 2, (1.0 - p) / 2});
    const double ht = cbrt_eps * th;

    const auto sp = score_raw(x, p + hp, th, k);
    const auto sm = score_raw(x, p - hp, th, k);
    const auto tp = score_raw(x, p, th + ht, k);
    const auto tm = score_raw(x, p, th - ht, k);

    FisherInfo info;
    info.ipp = -(sp.first - sm.first) / (2 * hp);
    info.ipt = -(tp.first - tm.first) / (2 * ht);
    info.itp = -(sp.second - sm.second) / (2 * hp);
    info.itt = -(tp.second - tm.second) / (2 * ht);

    const double b = 0.5 * (info.ipt + info.itp);
    const double det = info.ipp * info.itt - b * b;
    info.positive_definite = info.ipp > 0.0 && det > 0.0;
    if (info.positive_definite)
        info.std_errors = {std::sqrt(info.itt / det), std::sqrt(info.ipp / det)};
    return info;
}

namespace detail {

std::pair<double, double> default_init(const Dataset& data, int k) {
    return {0.5, k / data.mean()};
}

}  // namespace detail

FitResult fit_mle(const Dataset& data, int k, std::optional<std::pair<double, double>> init) {
    require_positive_for_k(data, k);
    require_nondegenerate(data);
    const auto [p0, th0] = detail::default_init(data, k);

    std::vector<std::pair<double, double>> starts;
    if (init) {
        starts.push_back(*init);
    } else {
        starts = {{p0, th0}, {0.2, th0}, {0.8, th0}, {0.35, 2.0 * th0}, {0.65, 0.5 * th0}};
    }

    std::vector<AscentRun> runs;
    runs.reserve(starts.size());
    for (const auto& [ps, ts] : starts)
        runs.push_back(maximize_loglik(data.values(), k, ps, ts));

    const auto best = std::max_element(runs.begin(), runs.end(),
                                       [](const AscentRun& a, const AscentRun& b) {
                                           return a.ll < b.ll;
                                       });

    FitResult fr = blank_result(k, FitMethod::mle_direct);
    fr.params = clamp_params(best->p, best->theta, k, fr.flags);
    fr.log_lik = loglik_raw(data.values(), fr.params.p(), fr.params.theta(), k);
    fr.iterations = best->iterations;
    fr.converged = best->grad_converged && !best->boundary;
    if (!best->grad_converged && !best->boundary && best->iterations >= kMaxIter)
        fr.flags.push_back("non_convergence");
    fr.trace = best->trace;

    // distinct optima across starts, best first
    for (const auto& r : runs) {
        const bool seen = std::any_of(fr.local_optima.begin(), fr.local_optima.end(),
                                      [&](const TracePoint& t) {
                                          return std::fabs(t.p - r.p) < 1e-4 &&
                                                 std::fabs(t.theta - r.theta) <
                                                     1e-4 * std::max(1.0, t.theta);
                                      });
        if (!seen) fr.local_optima.push_back({r.p, r.theta, r.ll});
    }
    std::sort(fr.local_optima.begin(), fr.local_optima.end(),
              [](const TracePoint& a, const TracePoint& b) { return a.objective > b.objective; });

    if (fr.converged) attach_std_errors(data, fr);
    return fr;
}

FitResult fit_em(const Dataset& data, int k, std::optional<std::pair<double, double>> init) {
    require_positive_for_k(data, k);
    require_nondegenerate(data);
    const auto& x = data.values();
    const double n = static_cast<double>(x.size());
    auto [p, th] = init ? *init : detail::default_init(data, k);

    FitResult fr = blank_result(k, FitMethod::em);
    double ll = loglik_raw(x, p, th, k);
    fr.trace.push_back({p, th, ll});

    constexpr int kMaxOuter = 5000;
    int it = 0;
    for (; it < kMaxOuter; ++it) {
        // E-step: w_i = k / (1 - p e^{-theta x_i})
        double sum_wx = 0.0, sum_w = 0.0;
        for (double xi : x) {
            const double w = k / (1.0 - p * std::exp(-th * xi));
            sum_w += w;
            sum_wx += w * xi;
        }

        // M-step in theta: theta solves
        //   n/theta - sum w x + (k-1) sum x/(1 - e^{-theta x}) = 0,
        // strictly decreasing in theta. Damped fixed point first, bracketed
        // root solve if that stalls.
        double th_new;
        if (k == 1) {
            th_new = n / sum_wx;
        } else {
            auto denom = [&](double t) {
                double s = 0.0;
                for (double xi : x) s += xi / -std::expm1(-t * xi);
                return sum_wx - (k - 1) * s;
            };
            bool fixed_point_ok = false;
            double t = th;
            for (int fp = 0; fp < 100; ++fp) {
                const double den = denom(t);
                if (!(den > 0.0)) break;
                const double tn = 0.5 * t + 0.5 * (n / den);
                if (!(tn > 0.0) || !std::isfinite(tn)) break;
                if (std::fabs(tn - t) < 1e-15 * t) {
                    t = tn;
                    fixed_point_ok = true;
                    break;
                }
                t = tn;
            }
            if (fixed_point_ok) {
                th_new = t;
            } else {
                auto g = [&](double tv) {
                    double s = 0.0;
                    for (double xi : x) s += xi / -std::expm1(-tv * xi);
                    return n / tv - sum_wx + (k - 1) * s;
                };
                try {
                    th_new = num::find_root_expand(g, th / 64, th * 64, 1e-280, 1e280);
                } catch (const std::runtime_error&) {
                    fr.flags.push_back("inner_solve_failure");
                    break;
                }
            }
        }

        // M-step in p: root of W (1-q) A(q,k) - n q^k on (0, 1), with the
        // common q^k factor divided out
        auto phi = [&](double q) {
            return sum_w * (1.0 - q) * egtl::detail::a_norm_scaled(q, k) - n;
        };
        double p_new;
        const double qlo = 1e-13, qhi = 1.0 - 1e-13;
        if (phi(qhi) >= 0.0) {
            p_new = qhi;
        } else {
            num::RootOptions opts;
            opts.xtol = 1e-17;
            p_new = num::find_root(phi, qlo, qhi, opts);
        }

        const double ll_new = loglik_raw(x, p_new, th_new, k);
        // ascent property, with slack at the float resolution of ll itself
        if (ll_new < ll - 1e-10 * std::max(1.0, std::fabs(ll))) {
            fr.flags.push_back("inner_solve_failure");
            break;
        }
        const double step = std::max(std::fabs(p_new - p), std::fabs(th_new - th) / th);
        p = p_new;
        th = th_new;
        ll = ll_new;
        fr.trace.push_back({p, th, ll});
        if (step < 1e-9) {
            fr.converged = true;
            ++it;
            break;
        }
    }

    fr.params = clamp_params(p, th, k, fr.flags);
    fr.log_lik = loglik_raw(x, fr.params.p(), fr.params.theta(), k);
    fr.iterations = it;
    if (!fr.converged && it >= kMaxOuter) fr.flags.push_back("non_convergence");
    if (fr.converged) attach_std_errors(data, fr);
    return fr;
}

namespace {

// sum_i sum_j C(k-1+i,i) C(k-1,j) p^i (-1)^j (i+j+1)^{-(r+1)}; shared by the
// moment equations below. Uses raw_moment's machinery through the public op.
double moment_series(double p, int k, int r, const SeriesControl& ctl) {
    // E(X^r) = r!/theta^r / S(p,k) * sum; recover the sum with theta = 1
    const EgtlParams params(p, 1.0, k);
    const double m = raw_moment(params, r, ctl);
    return m * egtl::detail::a_norm_scaled(p, k) / std::tgamma(r + 1.0);
}

}  // namespace

FitResult fit_moments(const Dataset& data, int k, const SeriesControl& ctl) {
    const double xbar = data.mean();
    const double m2 = data.second_moment();
    if (!(m2 - xbar * xbar > 0.0))
        throw NoRootError("fit_moments: sample variance is zero; the moment equation has no root");

    // G(p) = m2 - 2 xbar^2 A(p,k) S_2(p) / (p^k S_1(p)^2), the second-moment
    // equation with theta eliminated; a sign change of G locates the
    // moment-matching p. A/p^k is the scaled normalizer.
    auto G = [&](double p) {
        const double s1 = moment_series(p, k, 1, ctl);
        const double s2 = moment_series(p, k, 2, ctl);
        return m2 -
               2.0 * xbar * xbar * egtl::detail::a_norm_scaled(p, k) * s2 / (s1 * s1);
    };

    constexpr int kScan = 256;
    const double lo = 1e-6, hi = 1.0 - 1e-6;
    std::vector<double> grid(kScan + 1), val(kScan + 1);
    for (int i = 0; i <= kScan; ++i) {
        grid[i] = lo + (hi - lo) * i / kScan;
        try {
            val[i] = G(grid[i]);
        } catch (const NonConvergenceError&) {
            val[i] = std::numeric_limits<double>::quiet_NaN();  // skip p too close to 1
        }
    }
    std::vector<double> roots;
    for (int i = 0; i < kScan; ++i) {
        if (std::isnan(val[i]) || std::isnan(val[i + 1])) continue;
        if ((val[i] > 0.0) == (val[i + 1] > 0.0)) continue;
        num::RootOptions opts;
        opts.xtol = 1e-14;
        roots.push_back(num::find_root(G, grid[i], grid[i + 1], opts));
    }
    if (roots.empty())
        throw NoRootError("fit_moments: the sample moment ratio is outside the attainable range");

    FitResult fr = blank_result(k, FitMethod::moments);
    double phat = roots.front();
    if (roots.size() > 1) {
        fr.flags.push_back("multiple_roots");
        phat = *std::min_element(roots.begin(), roots.end(), [](double a, double b) {
            return std::fabs(a - 0.5) < std::fabs(b - 0.5);
        });
    }
    const double s1 = moment_series(phat, k, 1, ctl);
    const double that = s1 / (xbar * egtl::detail::a_norm_scaled(phat, k));

    fr.params = clamp_params(phat, that, k, fr.flags);
    fr.log_lik = loglik_raw(data.values(), fr.params.p(), fr.params.theta(), k);
    fr.converged = true;
    fr.iterations = 1;
    return fr;
}

FitResult fit_bayes(const Dataset& data, int k, const BayesConfig& cfg) {
    require_positive_for_k(data, k);
    require_nondegenerate(data);
    if (!(cfg.a > 0.0) || !(cfg.b > 0.0))
        throw std::invalid_argument("fit_bayes: prior hyperparameters must be positive");
    if (cfg.grid_p < 32 || cfg.grid_theta < 32)
        throw std::invalid_argument("fit_bayes: quadrature grids must have >= 32 nodes");

    const auto& x = data.values();
    const double xbar = data.mean();
    const double theta_max =
        cfg.theta_max > 0.0 ? cfg.theta_max : std::max(20.0 * k / xbar, 10.0 / xbar);

    auto log_post = [&](double p, double th) {
        return loglik_raw(x, p, th, k) + (cfg.a - 1.0) * std::log(th) - cfg.b * th;
    };

    // localize the posterior on a fixed coarse midpoint grid, then place the
    // Gauss-Legendre nodes on the cells holding all mass above e^-35 of the
    // peak; without this the nodes mostly sample regions of negligible mass
    constexpr int kScan = 160;
    double best = -std::numeric_limits<double>::infinity();
    std::vector<double> col_max(kScan, -std::numeric_limits<double>::infinity());
    std::vector<double> row_max(kScan, -std::numeric_limits<double>::infinity());
    for (int i = 0; i < kScan; ++i) {
        const double p = (i + 0.5) / kScan;
        for (int j = 0; j < kScan; ++j) {
            const double th = theta_max * (j + 0.5) / kScan;
            const double lw = log_post(p, th);
            col_max[i] = std::max(col_max[i], lw);
            row_max[j] = std::max(row_max[j], lw);
            best = std::max(best, lw);
        }
    }
    const double cut = best - 35.0;
    int ilo = kScan - 1, ihi = 0, jlo = kScan - 1, jhi = 0;
    for (int i = 0; i < kScan; ++i)
        if (col_max[i] >= cut) {
            ilo = std::min(ilo, i);
            ihi = std::max(ihi, i);
        }
    for (int j = 0; j < kScan; ++j)
        if (row_max[j] >= cut) {
            jlo = std::min(jlo, j);
            jhi = std::max(jhi, j);
        }
    const double p_lo = std::max(0.0, static_cast<double>(ilo - 1) / kScan);
    const double p_hi = std::min(1.0, static_cast<double>(ihi + 2) / kScan);
    const double t_lo = theta_max * std::max(0, jlo - 1) / kScan;
    const double t_hi = theta_max * std::min(kScan, jhi + 2) / kScan;

    const auto [pg, pw] = num::gauss_legendre(cfg.grid_p, p_lo, p_hi);
    const auto [tg, tw] = num::gauss_legendre(cfg.grid_theta, t_lo, t_hi);

    // log posterior weight on each grid cell; normalizer cancels in the ratio
    std::vector<double> logw(static_cast<std::size_t>(cfg.grid_p) * cfg.grid_theta);
    double m = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < cfg.grid_p; ++i) {
        for (int j = 0; j < cfg.grid_theta; ++j) {
            const double lw = log_post(pg[i], tg[j]) + std::log(pw[i]) + std::log(tw[j]);
            logw[i * cfg.grid_theta + j] = lw;
            m = std::max(m, lw);
        }
    }
    double z = 0.0, sp = 0.0, st = 0.0, wmax = 0.0;
    for (int i = 0; i < cfg.grid_p; ++i) {
        for (int j = 0; j < cfg.grid_theta; ++j) {
            const double w = std::exp(logw[i * cfg.grid_theta + j] - m);
            z += w;
            sp += w * pg[i];
            st += w * tg[j];
            wmax = std::max(wmax, w);
        }
    }
    const double phat = sp / z, that = st / z;

    FitResult fr = blank_result(k, FitMethod::bayes);
    fr.params = clamp_params(phat, that, k, fr.flags);
    fr.log_lik = loglik_raw(x, fr.params.p(), fr.params.theta(), k);
    fr.converged = true;
    fr.iterations = 1;
    if (wmax / z > 0.999) {
        fr.flags.push_back("degenerate_posterior");
        fr.converged = false;
    }
    // posterior standard deviations as the uncertainty report
    double vp = 0.0, vt = 0.0;
    for (int i = 0; i < cfg.grid_p; ++i) {
        for (int j = 0; j < cfg.grid_theta; ++j) {
            const double w = std::exp(logw[i * cfg.grid_theta + j] - m);
            vp += w * (pg[i] - phat) * (pg[i] - phat);
            vt += w * (tg[j] - that) * (tg[j] - that);
        }
    }
    fr.std_errors = {std::sqrt(vp / z), std::sqrt(vt / z)};
    return fr;
}

}  // namespace egtl
