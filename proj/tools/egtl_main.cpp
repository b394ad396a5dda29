#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "egtl/distribution.hpp"
#include "egtl/estimation.hpp"
#include "egtl/gof.hpp"
#include "egtl/io.hpp"
#include "egtl/simulation.hpp"

namespace {

// exit codes: 0 ok, 2 usage, 3 I/O, 4 numeric non-convergence, 5 data quality
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;
constexpr int kExitNumeric = 4;
constexpr int kExitData = 5;

struct GlobalOpts {
    std::string format = "table";
    std::uint64_t seed = 1;
    double rel_tol = 1e-12;
    long max_terms = 1000000;

    egtl::io::Format fmt() const {
        const auto f = egtl::io::format_from_string(format);
        if (!f) throw CLI::ValidationError("--format", "must be json, csv or table");
        return *f;
    }
    egtl::SeriesControl series() const { return {rel_tol, max_terms}; }
};

std::vector<std::pair<double, double>> parse_settings(const std::vector<std::string>& raw) {
    std::vector<std::pair<double, double>> out;
    for (const auto& s : raw) {
        const auto colon = s.find(':');
        if (colon == std::string::npos)
            throw CLI::ValidationError("--settings", "expected p:theta, got '" + s + "'");
        out.emplace_back(std::stod(s.substr(0, colon)), std::stod(s.substr(colon + 1)));
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"EGTL lifetime distribution toolkit: fitting, goodness of fit, simulation"};
    app.require_subcommand(1);
    app.fallthrough();  // accept global flags after the subcommand too

    GlobalOpts g;
    app.add_option("--format", g.format, "output format: json, csv or table")
        ->capture_default_str();
    app.add_option("--seed", g.seed, "seed token for anything random")->capture_default_str();
    app.add_option("--rel-tol", g.rel_tol, "series truncation tolerance")->capture_default_str();
    app.add_option("--max-terms", g.max_terms, "series term cap")->capture_default_str();

    // ---- fit ----
    auto* fit = app.add_subcommand("fit", "estimate (p, theta) from data for fixed k");
    std::string fit_data, fit_method = "mle";
    int fit_k = 1;
    double fit_p0 = -1.0, fit_th0 = -1.0;
    egtl::BayesConfig bayes_cfg;
    fit->add_option("--data", fit_data, "dataset file or bundled name")->required();
    fit->add_option("--k", fit_k, "order-statistic index")->capture_default_str();
    fit->add_option("--method", fit_method, "mle, em, moments or bayes")->capture_default_str();
    fit->add_option("--p0", fit_p0, "optional initial p");
    fit->add_option("--theta0", fit_th0, "optional initial theta");
    fit->add_option("--prior-a", bayes_cfg.a, "gamma prior shape (bayes)")->capture_default_str();
    fit->add_option("--prior-b", bayes_cfg.b, "gamma prior rate (bayes)")->capture_default_str();
    fit->add_option("--grid-p", bayes_cfg.grid_p, "quadrature nodes for p (bayes)")
        ->capture_default_str();
    fit->add_option("--grid-theta", bayes_cfg.grid_theta, "quadrature nodes for theta (bayes)")
        ->capture_default_str();
    fit->add_option("--theta-max", bayes_cfg.theta_max, "theta cutoff (bayes; 0 = auto)")
        ->capture_default_str();

    // ---- gof ----
    auto* gof = app.add_subcommand("gof", "K-S comparison table against gamma/Weibull");
    std::string gof_data;
    int gof_kmax = 4;
    gof->add_option("--data", gof_data, "dataset file or bundled name")->required();
    gof->add_option("--k-max", gof_kmax, "largest order index to fit")->capture_default_str();

    // ---- simulate ----
    auto* sim = app.add_subcommand("simulate", "Monte Carlo bias/variance/MSE study");
    egtl::SimDesign design;
    std::vector<std::string> sim_settings{"0.5:0.5", "0.7:1.5", "0.3:2"};
    std::vector<std::string> sim_methods{"mle", "moments", "bayes"};
    sim->add_option("--sizes", design.sample_sizes, "sample sizes")->delimiter(',');
    sim->add_option("--k-values", design.k_values, "order indices")->delimiter(',');
    sim->add_option("--settings", sim_settings, "true parameters as p:theta pairs")
        ->delimiter(',');
    sim->add_option("--reps", design.replications, "replications per cell")
        ->capture_default_str();
    sim->add_option("--methods", sim_methods, "estimators to compare")->delimiter(',');

    // ---- sample ----
    auto* smp = app.add_subcommand("sample", "draw seeded variates");
    double s_p = 0.5, s_th = 1.0;
    int s_k = 1;
    std::size_t s_n = 10;
    smp->add_option("--p", s_p, "shape p")->required();
    smp->add_option("--theta", s_th, "rate theta")->required();
    smp->add_option("--k", s_k, "order index")->capture_default_str();
    smp->add_option("--n", s_n, "number of draws")->capture_default_str();

    // ---- curve ----
    auto* crv = app.add_subcommand("curve", "pdf/cdf/survival/hazard on a grid");
    double c_p = 0.5, c_th = 1.0, c_xmax = 0.0;
    int c_k = 1, c_points = 200;
    crv->add_option("--p", c_p, "shape p")->required();
    crv->add_option("--theta", c_th, "rate theta")->required();
    crv->add_option("--k", c_k, "order index")->capture_default_str();
    crv->add_option("--points", c_points, "grid size")->capture_default_str();
    crv->add_option("--x-max", c_xmax, "grid end (0 = quantile(0.999))")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return kExitUsage;
    }

    try {
        const egtl::io::Format fmt = g.fmt();
        if (*fit) {
            const egtl::Dataset ds = egtl::io::load_dataset(fit_data);
            const auto method = egtl::fit_method_from_string(fit_method);
            if (!method) {
                std::cerr << "unknown method: " << fit_method << "\n";
                return kExitUsage;
            }
            std::optional<std::pair<double, double>> init;
            if (fit_p0 > 0.0 && fit_th0 > 0.0) init = {fit_p0, fit_th0};
            egtl::FitResult fr = [&] {
                switch (*method) {
                    case egtl::FitMethod::mle_direct: return egtl::fit_mle(ds, fit_k, init);
                    case egtl::FitMethod::em: return egtl::fit_em(ds, fit_k, init);
                    case egtl::FitMethod::moments:
                        return egtl::fit_moments(ds, fit_k, g.series());
                    case egtl::FitMethod::bayes: return egtl::fit_bayes(ds, fit_k, bayes_cfg);
                }
                throw std::logic_error("unreachable");
            }();
            std::cout << egtl::io::render_fit(fr, fmt);
            if (!fr.converged && !fr.has_flag("boundary_drift")) return kExitNumeric;
            return 0;
        }
        if (*gof) {
            const egtl::Dataset ds = egtl::io::load_dataset(gof_data);
            const auto rows = egtl::model_selection_table(ds, gof_kmax);
            std::cout << egtl::io::render_gof(rows, fmt, ds.label());
            return 0;
        }
        if (*sim) {
            design.param_settings = parse_settings(sim_settings);
            design.methods.clear();
            for (const auto& m : sim_methods) {
                const auto fm = egtl::fit_method_from_string(m);
                if (!fm) {
                    std::cerr << "unknown method: " << m << "\n";
                    return kExitUsage;
                }
                design.methods.push_back(*fm);
            }
            design.base_seed = g.seed;
            std::cout << egtl::io::render_simulation(egtl::run_study(design), fmt);
            return 0;
        }
        if (*smp) {
            const egtl::EgtlParams params(s_p, s_th, s_k);
            std::cout << egtl::io::render_samples(egtl::sample(params, s_n, g.seed), fmt);
            return 0;
        }
        if (*crv) {
            const egtl::EgtlParams params(c_p, c_th, c_k);
            std::cout << egtl::io::render_curve(egtl::io::curve_points(params, c_points, c_xmax),
                                                fmt);
            return 0;
        }
    } catch (const egtl::io::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const egtl::NonConvergenceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const egtl::NoRootError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    } catch (const egtl::DataQualityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
