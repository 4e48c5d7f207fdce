#include "ptlattice/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <system_error>

namespace ptlattice {

void atomic_write(const std::filesystem::path& path, const std::string& content) {
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open for writing: " + tmp.string());
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!out) throw std::runtime_error("write failed: " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) throw std::runtime_error("rename failed: " + path.string() + ": " + ec.message());
}

std::string format_double(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string spectrum_csv(const LatticeSpec& spec, const Bandwidth& bandwidth,
                         const SpectrumReport& report) {
    std::ostringstream out;
    out << "# N=" << spec.n_sites << ",alpha=" << format_double(spec.alpha)
        << ",m0=" << spec.m0 << ",gamma=" << format_double(spec.gamma)
        << ",delta=" << format_double(bandwidth.delta) << '\n';
    out << "index,re,im,is_complex\n";
    for (std::size_t i = 0; i < report.eigenvalues.size(); ++i) {
        const Complex& e = report.eigenvalues[i];
        const int is_complex = std::abs(e.imag()) > report.tol_imag ? 1 : 0;
        out << (i + 1) << ',' << format_double(e.real()) << ','
            << format_double(e.imag()) << ',' << is_complex << '\n';
    }
    return out.str();
}

std::string phase_curve_csv(const PhaseCurve& curve) {
    std::ostringstream out;
    out << "mu,m0,gamma_pt,gamma_pt_over_delta,bracket_width\n";
    for (const PhasePoint& p : curve.points)
        out << format_double(p.mu) << ',' << p.m0 << ',' << format_double(p.gamma_pt)
            << ',' << format_double(p.gamma_pt_scaled) << ','
            << format_double(p.bracket_width) << '\n';
    return out.str();
}

std::string scaling_csv(const ScalingFit& fit) {
    std::ostringstream out;
    out << "n,gamma_pt_over_delta,fit_exponent,fit_asymptote,fit_residual\n";
    for (const ScalingPoint& p : fit.points)
        out << p.n_sites << ',' << format_double(p.gamma_pt_scaled) << ','
            << format_double(fit.exponent) << ',' << format_double(fit.asymptote)
            << ',' << format_double(fit.residual) << '\n';
    return out.str();
}

std::string staircase_csv(const Staircase& staircase) {
    std::ostringstream out;
    out << "gamma_over_delta,n_complex\n";
    for (const StaircasePoint& p : staircase.points)
        out << format_double(p.gamma_over_delta) << ',' << p.n_complex << '\n';
    return out.str();
}

std::string trace_csv(const IntensityTrace& trace) {
    std::ostringstream out;
    out << "t_over_T_alpha";
    for (Eigen::Index k = 0; k < trace.grid.cols(); ++k) out << ",site_" << (k + 1);
    out << ",total\n";
    for (std::size_t i = 0; i < trace.times.size(); ++i) {
        out << format_double(trace.times[i] / trace.t_alpha_unit);
        for (Eigen::Index k = 0; k < trace.grid.cols(); ++k)
            out << ',' << format_double(trace.grid(static_cast<Eigen::Index>(i), k));
        out << ',' << format_double(trace.total[i]) << '\n';
    }
    return out.str();
}

std::string heatmap_pgm(const IntensityTrace& trace, const HeatmapOptions& options) {
    if (trace.times.empty() || trace.grid.size() == 0)
        throw std::invalid_argument("heatmap_pgm: empty trace");

    Eigen::MatrixXd values = trace.grid;
    if (options.log_scale) {
        // Floor at 1e-12 of the global peak so empty sites map to black.
        const double floor = 1e-12 * std::max(values.maxCoeff(), 1e-300);
        values = values.cwiseMax(floor).array().log10();
    }

    double lo = std::isnan(options.clamp_min) ? values.minCoeff() : options.clamp_min;
    double hi = std::isnan(options.clamp_max) ? values.maxCoeff() : options.clamp_max;
    if (options.log_scale) {
        if (!std::isnan(options.clamp_min)) lo = std::log10(std::max(options.clamp_min, 1e-300));
        if (!std::isnan(options.clamp_max)) hi = std::log10(std::max(options.clamp_max, 1e-300));
    }
    if (hi <= lo) hi = lo + 1.0;

    // Sites-as-rows mirrors the static-evolution figures; time-as-rows the
    // ramp figures.
    const bool sites_rows = options.rows == HeatmapRows::Sites;
    const Eigen::Index height = sites_rows ? values.cols() : values.rows();
    const Eigen::Index width = sites_rows ? values.rows() : values.cols();

    std::string pgm = "P5\n" + std::to_string(width) + " " + std::to_string(height) + "\n255\n";
    pgm.reserve(pgm.size() + static_cast<std::size_t>(width) * height);
    for (Eigen::Index r = 0; r < height; ++r) {
        for (Eigen::Index c = 0; c < width; ++c) {
            const double v = sites_rows ? values(c, r) : values(r, c);
            const double scaled = std::clamp((v - lo) / (hi - lo), 0.0, 1.0);
            pgm.push_back(static_cast<char>(static_cast<unsigned char>(
                std::lround(scaled * 255.0))));
        }
    }
    return pgm;
}

}  // namespace ptlattice
