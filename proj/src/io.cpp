#include "egtl/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "egtl/bundled_data.hpp"
#include "egtl/distribution.hpp"
#include <json.hpp>

namespace egtl::io {

using nlohmann::ordered_json;

std::optional<Format> format_from_string(const std::string& s) {
    if (s == "json") return Format::json;
    if (s == "csv") return Format::csv;
    if (s == "table") return Format::table;
    return std::nullopt;
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

namespace {

// numbers enter JSON pre-rounded to 12 significant digits so the JSON and
// CSV renderings carry identical values
double round12(double v) {
    if (!std::isfinite(v)) return v;
    return std::stod(format_double(v));
}

ordered_json json_number(double v) {
    if (std::isnan(v)) return nullptr;
    return round12(v);
}

}  // namespace

Dataset parse_dataset(const std::string& text, const std::string& label) {
    std::vector<double> values;
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        for (char& c : line)
            if (c == ',' || c == ';' || c == '\t' || c == '\r') c = ' ';
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) {
            std::size_t used = 0;
            double v = 0.0;
            try {
                v = std::stod(tok, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != tok.size())
                throw DataQualityError("parse error at line " + std::to_string(line_no) +
                                       ": bad token '" + tok + "'");
            if (v < 0.0)
                throw DataQualityError("negative value " + tok + " at line " +
                                       std::to_string(line_no));
            values.push_back(v);
        }
    }
    if (values.empty()) throw DataQualityError("no values found in '" + label + "' (empty input)");
    return Dataset(std::move(values), label);
}

Dataset load_dataset(const std::string& path_or_name) {
    if (data::is_bundled(path_or_name))
        return parse_dataset(data::bundled_text(path_or_name), path_or_name);
    std::ifstream f(path_or_name, std::ios::binary);
    if (!f) throw IoError("cannot open dataset file: " + path_or_name);
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse_dataset(ss.str(), path_or_name);
}

std::string render_fit(const FitResult& fr, Format fmt) {
    switch (fmt) {
        case Format::json: {
            ordered_json j;
            j["p"] = json_number(fr.params.p());
            j["theta"] = json_number(fr.params.theta());
            j["k"] = fr.params.k();
            j["log_lik"] = json_number(fr.log_lik);
            j["se_p"] = fr.std_errors ? json_number(fr.std_errors->first) : ordered_json(nullptr);
            j["se_theta"] =
                fr.std_errors ? json_number(fr.std_errors->second) : ordered_json(nullptr);
            j["converged"] = fr.converged;
            j["method"] = to_string(fr.method);
            j["iterations"] = fr.iterations;
            j["flags"] = fr.flags;
            if (fr.local_optima.size() > 1) {
                ordered_json opts = ordered_json::array();
                for (const auto& t : fr.local_optima)
                    opts.push_back({{"p", json_number(t.p)},
                                    {"theta", json_number(t.theta)},
                                    {"log_lik", json_number(t.objective)}});
                j["local_optima"] = opts;
            }
            return j.dump(2) + "\n";
        }
        case Format::csv: {
            std::ostringstream os;
            os << "p,theta,k,log_lik,se_p,se_theta,converged,method,iterations,flags\n";
            os << format_double(fr.params.p()) << ',' << format_double(fr.params.theta()) << ','
               << fr.params.k() << ',' << format_double(fr.log_lik) << ','
               << (fr.std_errors ? format_double(fr.std_errors->first) : "") << ','
               << (fr.std_errors ? format_double(fr.std_errors->second) : "") << ','
               << (fr.converged ? "true" : "false") << ',' << to_string(fr.method) << ','
               << fr.iterations << ',';
            for (std::size_t i = 0; i < fr.flags.size(); ++i)
                os << (i ? ";" : "") << fr.flags[i];
            os << '\n';
            return os.str();
        }
        case Format::table: {
            std::ostringstream os;
            os << "method      " << to_string(fr.method) << "\n"
               << "k           " << fr.params.k() << "\n"
               << "p           " << format_double(fr.params.p()) << "\n"
               << "theta       " << format_double(fr.params.theta()) << "\n"
               << "log_lik     " << format_double(fr.log_lik) << "\n";
            if (fr.std_errors)
                os << "se_p        " << format_double(fr.std_errors->first) << "\n"
                   << "se_theta    " << format_double(fr.std_errors->second) << "\n";
            os << "iterations  " << fr.iterations << "\n"
               << "converged   " << (fr.converged ? "true" : "false") << "\n";
            if (!fr.flags.empty()) {
                os << "flags       ";
                for (std::size_t i = 0; i < fr.flags.size(); ++i)
                    os << (i ? ", " : "") << fr.flags[i];
                os << "\n";
            }
            if (fr.local_optima.size() > 1) {
                os << "local optima (p, theta, log_lik):\n";
                for (const auto& t : fr.local_optima)
                    os << "  " << format_double(t.p) << "  " << format_double(t.theta) << "  "
                       << format_double(t.objective) << "\n";
            }
            return os.str();
        }
    }
    return {};
}

namespace {

std::string model_label(const GofReport& r) {
    if (r.model == "egtl") return "egtl(k=" + std::to_string(r.k) + ")";
    return r.model;
}

}  // namespace

std::string render_gof(const std::vector<GofReport>& rows, Format fmt, const std::string& label) {
    switch (fmt) {
        case Format::json: {
            ordered_json arr = ordered_json::array();
            for (const auto& r : rows) {
                ordered_json j;
                j["model"] = r.model;
                if (r.model == "egtl") j["k"] = r.k;
                j["param1"] = json_number(r.param1);
                j["param2"] = json_number(r.param2);
                j["ks_stat"] = json_number(r.ks_stat);
                j["p_value"] = json_number(r.p_value);
                j["n"] = r.n;
                j["log_lik"] = json_number(r.log_lik);
                j["fit_ok"] = r.fit_ok;
                j["flags"] = r.flags;
                j["ks_method"] = r.ks_method;
                arr.push_back(j);
            }
            ordered_json top;
            top["dataset"] = label;
            top["models"] = arr;
            return top.dump(2) + "\n";
        }
        case Format::csv: {
            std::ostringstream os;
            os << "model,k,param1,param2,ks_stat,p_value,n,log_lik,fit_ok,flags\n";
            for (const auto& r : rows) {
                os << r.model << ',' << (r.model == "egtl" ? std::to_string(r.k) : "") << ','
                   << format_double(r.param1) << ',' << format_double(r.param2) << ','
                   << format_double(r.ks_stat) << ',' << format_double(r.p_value) << ',' << r.n
                   << ',' << format_double(r.log_lik) << ',' << (r.fit_ok ? "true" : "false")
                   << ',';
                for (std::size_t i = 0; i < r.flags.size(); ++i)
                    os << (i ? ";" : "") << r.flags[i];
                os << '\n';
            }
            return os.str();
        }
        case Format::table: {
            std::ostringstream os;
            os << "dataset: " << label << "  (K-S: two-sided sup; p-value: asymptotic)\n";
            os << std::left << std::setw(14) << "model" << std::right << std::setw(14) << "param1"
               << std::setw(14) << "param2" << std::setw(10) << "K-S" << std::setw(10) << "p-value"
               << "  notes\n";
            for (const auto& r : rows) {
                std::ostringstream p1, p2;
                p1 << std::setprecision(4) << r.param1;
                p2 << std::setprecision(4) << r.param2;
                os << std::left << std::setw(14) << model_label(r) << std::right << std::setw(14)
                   << p1.str() << std::setw(14) << p2.str() << std::setw(10) << std::fixed
                   << std::setprecision(4) << r.ks_stat << std::setw(10) << r.p_value;
                os.unsetf(std::ios::fixed);
                os << "  ";
                if (!r.fit_ok) os << "FIT FAILED ";
                for (std::size_t i = 0; i < r.flags.size(); ++i) os << (i ? "," : "") << r.flags[i];
                os << "\n";
            }
            return os.str();
        }
    }
    return {};
}

std::string render_simulation(const SimulationReport& report, Format fmt) {
    switch (fmt) {
        case Format::json: {
            ordered_json arr = ordered_json::array();
            for (const auto& r : report.records) {
                ordered_json j;
                j["n"] = r.key.n;
                j["k"] = r.key.k;
                j["p"] = json_number(r.key.p);
                j["theta"] = json_number(r.key.theta);
                j["method"] = to_string(r.key.method);
                j["bias_p"] = json_number(r.bias_p);
                j["bias_theta"] = json_number(r.bias_theta);
                j["var_p"] = json_number(r.var_p);
                j["var_theta"] = json_number(r.var_theta);
                j["mse_p"] = json_number(r.mse_p);
                j["mse_theta"] = json_number(r.mse_theta);
                j["failures"] = r.failures;
                j["used"] = r.used;
                j["flagged"] = r.flagged;
                arr.push_back(j);
            }
            ordered_json top;
            top["replications"] = report.design.replications;
            top["base_seed"] = report.design.base_seed;
            top["cells"] = arr;
            return top.dump(2) + "\n";
        }
        case Format::csv: {
            std::ostringstream os;
            os << "n,k,p,theta,method,bias_p,bias_theta,var_p,var_theta,mse_p,mse_theta,"
                  "failures,used,flagged\n";
            for (const auto& r : report.records) {
                os << r.key.n << ',' << r.key.k << ',' << format_double(r.key.p) << ','
                   << format_double(r.key.theta) << ',' << to_string(r.key.method) << ','
                   << format_double(r.bias_p) << ',' << format_double(r.bias_theta) << ','
                   << format_double(r.var_p) << ',' << format_double(r.var_theta) << ','
                   << format_double(r.mse_p) << ',' << format_double(r.mse_theta) << ','
                   << r.failures << ',' << r.used << ',' << (r.flagged ? "true" : "false") << '\n';
            }
            return os.str();
        }
        case Format::table: {
            // method-as-column-group layout: one line per (n, k, setting)
            std::ostringstream os;
            std::vector<FitMethod> methods = report.design.methods;
            os << std::left << std::setw(6) << "n" << std::setw(4) << "k" << std::setw(13)
               << "(p,theta)";
            for (FitMethod m : methods)
                os << "| " << std::left << std::setw(44) << (to_string(m) +
                    "  var(p) var(th) mse(p) mse(th) fail");
            os << "\n";
            for (std::size_t i = 0; i < report.records.size();) {
                const auto& first = report.records[i];
                std::ostringstream setting;
                setting << "(" << first.key.p << ";" << first.key.theta << ")";
                os << std::left << std::setw(6) << first.key.n << std::setw(4) << first.key.k
                   << std::setw(13) << setting.str();
                for (std::size_t j = 0; j < methods.size() && i < report.records.size();
                     ++j, ++i) {
                    const auto& r = report.records[i];
                    std::ostringstream cell;
                    cell << std::fixed << std::setprecision(4) << r.var_p << ' ' << r.var_theta
                         << ' ' << r.mse_p << ' ' << r.mse_theta << ' ' << r.failures
                         << (r.flagged ? "!" : "");
                    os << "| " << std::left << std::setw(44) << cell.str();
                }
                os << "\n";
            }
            return os.str();
        }
    }
    return {};
}

std::vector<CurvePoint> curve_points(const EgtlParams& params, int points, double x_max) {
    if (points < 1) throw std::invalid_argument("curve: points must be >= 1");
    if (x_max <= 0.0) x_max = quantile(params, 0.999);
    std::vector<CurvePoint> pts;
    pts.reserve(points);
    for (int i = 0; i < points; ++i) {
        const double x = points == 1 ? 0.0 : x_max * i / (points - 1);
        pts.push_back({x, pdf(params, x), cdf(params, x), survival(params, x),
                       hazard(params, x)});
    }
    return pts;
}

std::string render_curve(const std::vector<CurvePoint>& pts, Format fmt) {
    switch (fmt) {
        case Format::json: {
            ordered_json arr = ordered_json::array();
            for (const auto& p : pts)
                arr.push_back({{"x", json_number(p.x)},
                               {"pdf", json_number(p.pdf)},
                               {"cdf", json_number(p.cdf)},
                               {"survival", json_number(p.survival)},
                               {"hazard", json_number(p.hazard)}});
            return arr.dump(2) + "\n";
        }
        case Format::csv:
        case Format::table: {
            std::ostringstream os;
            const char sep = fmt == Format::csv ? ',' : ' ';
            os << "x" << sep << "pdf" << sep << "cdf" << sep << "survival" << sep << "hazard\n";
            for (const auto& p : pts)
                os << format_double(p.x) << sep << format_double(p.pdf) << sep
                   << format_double(p.cdf) << sep << format_double(p.survival) << sep
                   << format_double(p.hazard) << '\n';
            return os.str();
        }
    }
    return {};
}

std::string render_samples(const std::vector<double>& draws, Format fmt) {
    switch (fmt) {
        case Format::json: {
            ordered_json arr = ordered_json::array();
            for (double d : draws) arr.push_back(round12(d));
            return arr.dump() + "\n";
        }
        case Format::csv:
        case Format::table: {
            std::ostringstream os;
            if (fmt == Format::csv) os << "value\n";
            for (double d : draws) os << format_double(d) << '\n';
            return os.str();
        }
    }
    return {};
}

std::string dataset_to_csv(const Dataset& data) {
    std::ostringstream os;
    os << "value\n";
    for (double v : data.values()) os << format_double(v) << '\n';
    return os.str();
}

}  // namespace egtl::io
