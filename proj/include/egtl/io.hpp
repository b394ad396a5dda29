#ifndef EGTL_IO_HPP
#define EGTL_IO_HPP

#include <optional>
#include <string>
#include <vector>

#include "egtl/dataset.hpp"
#include "egtl/estimation.hpp"
#include "egtl/gof.hpp"
#include "egtl/simulation.hpp"

namespace egtl::io {

enum class Format { json, csv, table };

std::optional<Format> format_from_string(const std::string& s);

/// Raised on unreadable paths (distinct from DataQualityError so the CLI can
/// map I/O and data problems to different exit codes).
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Loads a bundled dataset by name ("barlow1975", "quesenberry1982") or a
/// text file of comma/whitespace-separated nonnegative reals. Lines starting
/// with '#' (or trailing '#' fragments) are comments. Parse failures report
/// the 1-based line number.
Dataset load_dataset(const std::string& path_or_name);

/// Parses dataset text directly (same grammar as load_dataset files).
Dataset parse_dataset(const std::string& text, const std::string& label);

/// Decimal rendering with 12 significant digits, round-half-even.
std::string format_double(double v);

std::string render_fit(const FitResult& fr, Format fmt);
std::string render_gof(const std::vector<GofReport>& rows, Format fmt, const std::string& label);
std::string render_simulation(const SimulationReport& report, Format fmt);

struct CurvePoint {
    double x, pdf, cdf, survival, hazard;
};
std::vector<CurvePoint> curve_points(const EgtlParams& params, int points, double x_max);
std::string render_curve(const std::vector<CurvePoint>& pts, Format fmt);

std::string render_samples(const std::vector<double>& draws, Format fmt);

/// Dataset serialized in the CSV output format (one value per line after the
/// header); reloads to an identical Dataset.
std::string dataset_to_csv(const Dataset& data);

}  // namespace egtl::io

#endif
