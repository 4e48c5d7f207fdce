#pragma once

#include <filesystem>
#include <string>

#include "ptlattice/dynamics.hpp"
#include "ptlattice/phase.hpp"
#include "ptlattice/spectrum.hpp"

namespace ptlattice {

/// Write content to path atomically (temp file in the same directory, then
/// rename). Throws std::runtime_error with the path on I/O failure.
void atomic_write(const std::filesystem::path& path, const std::string& content);

/// Shortest round-trip decimal representation, identical across runs.
std::string format_double(double v);

std::string spectrum_csv(const LatticeSpec& spec, const Bandwidth& bandwidth,
                         const SpectrumReport& report);

std::string phase_curve_csv(const PhaseCurve& curve);

std::string scaling_csv(const ScalingFit& fit);

std::string staircase_csv(const Staircase& staircase);

std::string trace_csv(const IntensityTrace& trace);

enum class HeatmapRows { Sites, Time };

struct HeatmapOptions {
    HeatmapRows rows = HeatmapRows::Sites;
    bool log_scale = false;
    // Clamp range for the color map; NaN means use the trace's own extrema.
    // A shared explicit range makes two traces directly comparable.
    double clamp_min = std::numeric_limits<double>::quiet_NaN();
    double clamp_max = std::numeric_limits<double>::quiet_NaN();
};

/// Binary 8-bit PGM; byte-identical output for identical inputs. Throws
/// std::invalid_argument on an empty trace.
std::string heatmap_pgm(const IntensityTrace& trace, const HeatmapOptions& options);

}  // namespace ptlattice
