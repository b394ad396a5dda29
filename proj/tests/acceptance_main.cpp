// Acceptance suite: runs every release criterion at its stated tolerance and
// prints one PASS/FAIL line per criterion. Exit code is the failure count.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "egtl/distribution.hpp"
#include "egtl/estimation.hpp"
#include "egtl/gof.hpp"
#include "egtl/io.hpp"
#include "egtl/simulation.hpp"
#include "support.hpp"

using egtl::Dataset;
using egtl::EgtlParams;

namespace {

int g_failures = 0;

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

void report(int criterion, bool pass, const std::string& what, double secs) {
    std::printf("[%s] criterion %d: %s (%.1f s)\n", pass ? "PASS" : "FAIL", criterion,
                what.c_str(), secs);
    if (!pass) ++g_failures;
}

std::function<double(double)> egtl_cdf_fn(double p, double th, int k) {
    const EgtlParams params(p, th, k);
    return [params](double x) { return egtl::cdf(params, x); };
}

// ---- criterion 1: published K-S values at the published parameter points ----
void criterion1(const Dataset& barlow, const Dataset& ques) {
    Timer t;
    struct Row {
        const Dataset* data;
        double p, th;
        int k;
        double ref;
    };
    const Row rows[] = {
        {&barlow, 0.0232, 7.32e-4, 2, 0.0639},
        {&barlow, 0.4209, 8.84e-4, 4, 0.0723},
        {&ques, 0.2127, 7.66e-3, 3, 0.0879},
        {&ques, 0.1031, 9.10e-3, 4, 0.0786},
    };
    bool pass = true;
    std::string detail;
    for (const auto& r : rows) {
        const auto F = egtl_cdf_fn(r.p, r.th, r.k);
        // the published table's statistic compares F against the post-jump
        // empirical levels i/n only; the two-sided sup is printed alongside
        const double d_table = egtl::ks_statistic_postjump(*r.data, F);
        const double d_sup = egtl::ks_statistic(*r.data, F);
        const bool ok = std::fabs(d_table - r.ref) <= 0.005;
        pass = pass && ok;
        char buf[160];
        std::snprintf(buf, sizeof buf, "\n    k=%d n=%zu: table-convention %.4f vs ref %.4f%s"
                      " (two-sided sup %.4f)",
                      r.k, r.data->size(), d_table, r.ref, ok ? "" : " MISMATCH", d_sup);
        detail += buf;
    }
    report(1, pass, "published K-S values at published parameters" + detail, t.seconds());
}

// ---- criterion 2: own gamma and Weibull fits reproduce the published K-S ----
void criterion2(const Dataset& barlow, const Dataset& ques) {
    Timer t;
    bool pass = true;
    std::string detail;
    auto check = [&](const Dataset& data, bool weib, double ref) {
        double d;
        if (weib) {
            const auto f = egtl::fit_weibull(data);
            d = egtl::ks_statistic(
                data, [f](double x) { return egtl::weibull_cdf(x, f.lambda, f.beta); });
        } else {
            const auto f = egtl::fit_gamma(data);
            d = egtl::ks_statistic(
                data, [f](double x) { return egtl::gamma_cdf(x, f.lambda, f.beta); });
        }
        const bool ok = std::fabs(d - ref) <= 0.005;
        pass = pass && ok;
        char buf[120];
        std::snprintf(buf, sizeof buf, "\n    %s %s: %.4f vs ref %.4f%s", data.label().c_str(),
                      weib ? "weibull" : "gamma", d, ref, ok ? "" : " MISMATCH");
        detail += buf;
    };
    check(barlow, false, 0.0680);
    check(barlow, true, 0.0490);
    check(ques, false, 0.0950);
    check(ques, true, 0.0760);
    report(2, pass, "gamma/Weibull baseline K-S reproduction" + detail, t.seconds());
}

// ---- criterion 3: significance pattern of the fitted table ----
void criterion3(const Dataset& barlow, const Dataset& ques) {
    Timer t;
    bool pass = true;
    std::string detail;
    for (const Dataset* data : {&barlow, &ques}) {
        const auto rows = egtl::model_selection_table(*data, 4);
        for (int k = 1; k <= 4; ++k) {
            const double pv = rows[k - 1].p_value;
            const bool ok = (k == 1) ? (pv < 0.001) : (pv > 0.05);
            pass = pass && ok;
            char buf[120];
            std::snprintf(buf, sizeof buf, "\n    %s k=%d: p-value %.4f (need %s)%s",
                          data->label().c_str(), k, pv, k == 1 ? "< 0.001" : "> 0.05",
                          ok ? "" : " VIOLATED");
            detail += buf;
        }
    }
    report(3, pass, "fitted-table significance pattern" + detail, t.seconds());
}

// ---- criterion 4: own MLE dominates the published parameter points ----
void criterion4(const Dataset& barlow, const Dataset& ques) {
    Timer t;
    struct Row {
        const Dataset* data;
        int k;
        double p, th;
    };
    const Row rows[] = {
        {&barlow, 2, 0.0232, 7.32e-4}, {&barlow, 3, 0.8811, 4.38e-4},
        {&barlow, 4, 0.4209, 8.84e-4}, {&ques, 2, 0.0248, 6.65e-3},
        {&ques, 3, 0.2127, 7.66e-3},   {&ques, 4, 0.1031, 9.10e-3},
    };
    bool pass = true;
    std::string detail;
    for (const auto& r : rows) {
        const auto fr = egtl::fit_mle(*r.data, r.k);
        const double bench = egtl::log_likelihood(*r.data, EgtlParams(r.p, r.th, r.k));
        const bool ok = fr.log_lik >= bench - 1e-6;
        pass = pass && ok;
        char buf[140];
        std::snprintf(buf, sizeof buf, "\n    %s k=%d: log-lik %.4f vs published point %.4f%s",
                      r.data->label().c_str(), r.k, fr.log_lik, bench, ok ? "" : " BELOW");
        detail += buf;
    }
    report(4, pass, "MLE log-likelihood dominates published points" + detail, t.seconds());
}

// ---- criterion 5: directional Monte Carlo trends ----
void criterion5() {
    Timer t;
    egtl::SimDesign design;
    design.sample_sizes = {20, 100};
    design.k_values = {1, 2, 3};
    design.param_settings = {{0.5, 0.5}, {0.7, 1.5}, {0.3, 2.0}};
    design.replications = 200;
    design.methods = {egtl::FitMethod::mle_direct, egtl::FitMethod::moments};
    design.base_seed = 0x45475446u;
    const auto report_ = egtl::run_study(design);

    auto find = [&](std::size_t n, int k, double p, egtl::FitMethod m) -> const egtl::CellRecord& {
        for (const auto& r : report_.records)
            if (r.key.n == n && r.key.k == k && r.key.p == p && r.key.method == m) return r;
        throw std::logic_error("cell not found");
    };

    int mle_shrink = 0, mom_shrink = 0, mom_worse = 0, cells = 0;
    int cell_either = 0, cell_both = 0, ncells = 0;
    for (int k : design.k_values)
        for (const auto& [p, th] : design.param_settings) {
            const auto& m20 = find(20, k, p, egtl::FitMethod::mle_direct);
            const auto& m100 = find(100, k, p, egtl::FitMethod::mle_direct);
            const auto& g20 = find(20, k, p, egtl::FitMethod::moments);
            const auto& g100 = find(100, k, p, egtl::FitMethod::moments);
            mle_shrink += (m100.mse_p < m20.mse_p) + (m100.mse_theta < m20.mse_theta);
            mom_shrink += (g100.mse_p < g20.mse_p) + (g100.mse_theta < g20.mse_theta);
            const std::pair<const egtl::CellRecord*, const egtl::CellRecord*> pairs[] = {
                {&m20, &g20}, {&m100, &g100}};
            for (const auto& [mle_cell, mom_cell] : pairs) {
                const bool wp = mom_cell->mse_p >= mle_cell->mse_p;
                const bool wt = mom_cell->mse_theta >= mle_cell->mse_theta;
                mom_worse += wp + wt;
                cells += 2;
                cell_either += wp || wt;
                cell_both += wp && wt;
                ++ncells;
            }
        }
    const bool pass = mle_shrink >= 16 && mom_shrink >= 16 && 2 * mom_worse > cells;
    char buf[320];
    std::snprintf(buf, sizeof buf,
                  "Monte Carlo trends: mse(n=100)<mse(n=20) in %d/18 (mle) and %d/18 (moments); "
                  "mse(moments)>=mse(mle) in %d/%d per-parameter comparisons "
                  "(per cell: either %d/%d, both %d/%d)",
                  mle_shrink, mom_shrink, mom_worse, cells, cell_either, ncells, cell_both,
                  ncells);
    report(5, pass, buf, t.seconds());
}

// ---- criterion 6: distribution-core invariant sweep ----
void criterion6() {
    Timer t;
    bool pass = true;
    std::string detail;
    auto fail = [&](const char* what, double p, double th, int k, double err) {
        pass = false;
        char buf[140];
        std::snprintf(buf, sizeof buf, "\n    %s violated at (%.1f, %.1f, %d), err %.3g", what, p,
                      th, k, err);
        detail += buf;
    };

    for (double p : {0.1, 0.5, 0.9})
        for (double th : {0.5, 1.0, 2.0})
            for (int k : {1, 2, 3}) {
                const EgtlParams params(p, th, k);

                const double hi = egtl::quantile(params, 1.0 - 1e-10);
                const double mass = oracle::integrate(
                    [&](double x) { return egtl::pdf(params, x); }, 0.0, hi, 1e-10);
                if (std::fabs(mass - 1.0) > 1e-7) fail("normalization", p, th, k, mass - 1.0);

                for (int i = 1; i <= 50; ++i) {
                    const double x = egtl::quantile(params, i / 51.0);
                    const double fd = oracle::derivative(
                        [&](double v) { return egtl::cdf(params, v); }, x, 1e-5 / th);
                    const double err =
                        std::fabs(egtl::pdf(params, x) - fd) / std::max(1.0, std::fabs(fd));
                    if (err > 1e-6) fail("pdf = d(cdf)/dx", p, th, k, err);
                }

                for (double u : {1e-4, 0.05, 0.3, 0.5, 0.8, 0.99, 0.99999}) {
                    const double x = egtl::quantile(params, u);
                    const double err = std::fabs(egtl::cdf(params, x) - u);
                    if (err > 1e-9) fail("quantile round trip", p, th, k, err);
                }

                for (int r : {1, 2}) {
                    const double top = egtl::quantile(params, 1.0 - 1e-12);
                    const double quad = oracle::integrate(
                        [&](double x) { return std::pow(x, r) * egtl::pdf(params, x); }, 0.0,
                        top, 1e-12);
                    const double err =
                        std::fabs(egtl::raw_moment(params, r) - quad) / std::fabs(quad);
                    if (err > 1e-6) fail("moment vs quadrature", p, th, k, err);
                }

                // closed-form survival/hazard agreement for k <= 3
                const double e = std::exp(-th * (1.0 / th));
                const double y = (1.0 - e) / (1.0 - p * e);
                double s_ref;
                if (k == 1)
                    s_ref = std::log(1.0 - p * e) / std::log(1.0 - p);
                else if (k == 2)
                    s_ref = (std::log(1.0 - p * e) - p * (y - 1.0)) / (std::log(1.0 - p) + p);
                else
                    s_ref = (std::log(1.0 - p * e) + p + p * p / 2 - p * y - p * p / 2 * y * y) /
                            (std::log(1.0 - p) + p + p * p / 2);
                const double s_err =
                    std::fabs(egtl::survival(params, 1.0 / th) - s_ref) / s_ref;
                if (s_err > 1e-10) fail("closed-form survival", p, th, k, s_err);
                const double h_ref = egtl::pdf(params, 1.0 / th) / s_ref;
                const double h_err =
                    std::fabs(egtl::hazard(params, 1.0 / th) - h_ref) / h_ref;
                if (h_err > 1e-10) fail("closed-form hazard", p, th, k, h_err);

                // hazard limits
                if (k == 1) {
                    const double h_inf = egtl::hazard(params, 50.0 / th);
                    if (std::fabs(h_inf - th) > 1e-3 * th) fail("hazard limit", p, th, k, h_inf);
                    const double el_pdf0 = th * p / (-(1.0 - p) * std::log1p(-p));
                    if (std::fabs(egtl::pdf(params, 0.0) - el_pdf0) > 1e-12 * el_pdf0)
                        fail("first-order reduction", p, th, k, egtl::pdf(params, 0.0) - el_pdf0);
                } else if (egtl::hazard(params, 0.0) != 0.0) {
                    fail("hazard at origin", p, th, k, egtl::hazard(params, 0.0));
                }
            }
    report(6, pass, "distribution-core invariant sweep on the 27-point grid" + detail,
           t.seconds());
}

// ---- criterion 7: estimator cross-validation on synthetic data ----
void criterion7() {
    Timer t;
    bool pass = true;
    std::string detail;
    const std::pair<double, double> settings[] = {{0.5, 0.5}, {0.7, 1.5}, {0.3, 2.0}};
    int checked = 0;
    for (int rep = 0; rep < 20; ++rep) {
        const auto [p, th] = settings[rep % 3];
        const int k = 1 + rep % 3;
        const Dataset ds(egtl::sample(EgtlParams(p, th, k), 1000, 7000 + rep), "sim");

        const auto mle = egtl::fit_mle(ds, k);
        const auto em = egtl::fit_em(ds, k);
        const double dp = std::fabs(mle.params.p() - em.params.p());
        const double dt = std::fabs(mle.params.theta() - em.params.theta());
        if (!(mle.converged && em.converged && dp < 1e-4 && dt < 1e-4)) {
            pass = false;
            char buf[160];
            std::snprintf(buf, sizeof buf,
                          "\n    rep %d (%.1f, %.1f, k=%d): em/mle gap (%.2g, %.2g) conv(%d,%d)",
                          rep, p, th, k, dp, dt, mle.converged, em.converged);
            detail += buf;
        }
        for (std::size_t i = 1; i < em.trace.size(); ++i)
            if (em.trace[i].objective <
                em.trace[i - 1].objective - 1e-10 * std::max(1.0, std::fabs(em.trace[i].objective))) {
                pass = false;
                detail += "\n    EM log-likelihood decreased (rep " + std::to_string(rep) + ")";
                break;
            }
        ++checked;
    }

    // score vs finite differences, 50 random interior points
    const Dataset ds(egtl::sample(EgtlParams(0.6, 1.0, 2), 600, 12345), "sim");
    std::mt19937 roll(5150);
    std::uniform_real_distribution<double> up(0.1, 0.9), uth(0.4, 2.5);
    for (int i = 0; i < 50; ++i) {
        const EgtlParams params(up(roll), uth(roll), 1 + i % 3);
        const auto [sp, st] = egtl::score(ds, params);
        const double hp = 1e-6 * params.p(), ht = 1e-6 * params.theta();
        const double fd_p =
            (egtl::log_likelihood(ds, EgtlParams(params.p() + hp, params.theta(), params.k())) -
             egtl::log_likelihood(ds, EgtlParams(params.p() - hp, params.theta(), params.k()))) /
            (2 * hp);
        const double fd_t =
            (egtl::log_likelihood(ds, EgtlParams(params.p(), params.theta() + ht, params.k())) -
             egtl::log_likelihood(ds, EgtlParams(params.p(), params.theta() - ht, params.k()))) /
            (2 * ht);
        if (std::fabs(sp - fd_p) > 1e-5 * std::max(1.0, std::fabs(fd_p)) ||
            std::fabs(st - fd_t) > 1e-5 * std::max(1.0, std::fabs(fd_t))) {
            pass = false;
            detail += "\n    score/finite-difference mismatch";
            break;
        }
    }

    // method-of-moments round trip through exact population moments
    for (auto [p, th, k] : {std::tuple{0.3, 2.0, 3}, {0.7, 1.5, 2}}) {
        const EgtlParams truth(p, th, k);
        const double mu = egtl::raw_moment(truth, 1);
        const double m2 = egtl::raw_moment(truth, 2);
        const double delta = std::sqrt(m2 - mu * mu);
        const auto fr = egtl::fit_moments(Dataset({mu - delta, mu + delta}, "pop"), k);
        if (std::fabs(fr.params.p() - p) > 1e-6 ||
            std::fabs(fr.params.theta() - th) > 1e-6 * th) {
            pass = false;
            detail += "\n    moments round-trip failed";
        }
    }
    char head[120];
    std::snprintf(head, sizeof head,
                  "estimator cross-validation (%d synthetic datasets, n=1000)", checked);
    report(7, pass, head + detail, t.seconds());
}

// ---- criterion 8: sampler one-sample K-S at CI scale ----
void criterion8() {
    Timer t;
    const double grid_p[] = {0.3, 0.5, 0.7};
    const double grid_th[] = {0.5, 1.0, 2.0};
    bool pass = true;
    int passed = 0, total = 0;
    std::string detail;
    for (int run = 0; run < 10; ++run) {
        const int set = run % 9;
        const EgtlParams params(grid_p[set % 3], grid_th[set / 3], 1 + set % 3);
        const Dataset ds(egtl::sample(params, 100000, 0xACC0 + run), "draws");
        const double d =
            egtl::ks_statistic(ds, [&](double x) { return egtl::cdf(params, x); });
        const double pv = egtl::ks_p_value(d, ds.size());
        ++total;
        if (pv > 0.01) {
            ++passed;
        } else {
            pass = false;
            char buf[120];
            std::snprintf(buf, sizeof buf, "\n    run %d (p=%.1f th=%.1f k=%d): p-value %.4f",
                          run, params.p(), params.theta(), params.k(), pv);
            detail += buf;
        }
    }
    char head[120];
    std::snprintf(head, sizeof head, "sampler K-S self-test, %d/%d runs at the 1%% level", passed,
                  total);
    report(8, pass, head + detail, t.seconds());
}

}  // namespace

int main() {
    const Dataset barlow = egtl::io::load_dataset("barlow1975");
    const Dataset ques = egtl::io::load_dataset("quesenberry1982");

    criterion1(barlow, ques);
    criterion2(barlow, ques);
    criterion3(barlow, ques);
    criterion4(barlow, ques);
    criterion5();
    criterion6();
    criterion7();
    criterion8();

    if (g_failures == 0)
        std::printf("acceptance: all criteria passed\n");
    else
        std::printf("acceptance: %d criterion(s) failed\n", g_failures);
    return g_failures;
}
