#include "egtl/simulation.hpp"

#include <bit>
#include <cmath>
#include <limits>

#include "egtl/distribution.hpp"
#include "egtl/numeric.hpp"

namespace egtl {

namespace {

std::uint64_t cell_token(const CellKey& key) {
    std::uint64_t h = num::splitmix64(key.n);
    h = num::seed_mix(h, static_cast<std::uint64_t>(key.k));
    h = num::seed_mix(h, std::bit_cast<std::uint64_t>(key.p));
    h = num::seed_mix(h, std::bit_cast<std::uint64_t>(key.theta));
    h = num::seed_mix(h, static_cast<std::uint64_t>(key.method));
    return h;
}

}  // namespace

CellRecord run_cell(const CellKey& key, int replications, std::uint64_t base_seed) {
    const EgtlParams truth(key.p, key.theta, key.k);
    const std::uint64_t cell_seed = num::seed_mix(base_seed, cell_token(key));

    CellRecord rec;
    rec.key = key;
    std::vector<double> est_p, est_t;
    est_p.reserve(replications);
    est_t.reserve(replications);

    for (int r = 0; r < replications; ++r) {
        const std::uint64_t seed = num::seed_mix(cell_seed, static_cast<std::uint64_t>(r) + 1);
        const Dataset ds(sample(truth, key.n, seed), "sim");
        try {
            FitResult fr = [&] {
                switch (key.method) {
                    case FitMethod::mle_direct: return fit_mle(ds, key.k);
                    case FitMethod::em: return fit_em(ds, key.k);
                    case FitMethod::moments: return fit_moments(ds, key.k);
                    case FitMethod::bayes: return fit_bayes(ds, key.k);
                }
                throw std::logic_error("run_cell: unknown method");
            }();
            if (!fr.converged) {
                ++rec.failures;
                continue;
            }
            est_p.push_back(fr.params.p());
            est_t.push_back(fr.params.theta());
        } catch (const std::exception&) {
            ++rec.failures;
        }
    }

    rec.used = static_cast<int>(est_p.size());
    if (rec.used == 0) {
        rec.flagged = true;
        rec.bias_p = rec.bias_theta = rec.var_p = rec.var_theta = rec.mse_p = rec.mse_theta =
            std::numeric_limits<double>::quiet_NaN();
        return rec;
    }
    double mean_p = 0.0, mean_t = 0.0;
    for (int i = 0; i < rec.used; ++i) {
        mean_p += est_p[i];
        mean_t += est_t[i];
    }
    mean_p /= rec.used;
    mean_t /= rec.used;
    rec.bias_p = mean_p - key.p;
    rec.bias_theta = mean_t - key.theta;
    for (int i = 0; i < rec.used; ++i) {
        rec.var_p += (est_p[i] - mean_p) * (est_p[i] - mean_p);
        rec.var_theta += (est_t[i] - mean_t) * (est_t[i] - mean_t);
        rec.mse_p += (est_p[i] - key.p) * (est_p[i] - key.p);
        rec.mse_theta += (est_t[i] - key.theta) * (est_t[i] - key.theta);
    }
    rec.var_p /= rec.used;
    rec.var_theta /= rec.used;
    rec.mse_p /= rec.used;
    rec.mse_theta /= rec.used;
    rec.flagged = rec.failures > replications / 10;
    return rec;
}

SimulationReport run_study(const SimDesign& design) {
    if (design.replications < 1)
        throw std::invalid_argument("run_study: replications must be >= 1");
    SimulationReport report;
    report.design = design;
    for (std::size_t n : design.sample_sizes)
        for (int k : design.k_values)
            for (const auto& [p, theta] : design.param_settings)
                for (FitMethod m : design.methods)
                    report.records.push_back(
                        run_cell({n, k, p, theta, m}, design.replications, design.base_seed));
    return report;
}

}  // namespace egtl
