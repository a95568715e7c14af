// sweep.hpp — parameter sweeps, figure presets, deterministic CSV emission

#pragma once

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "rabivar/exact.hpp"
#include "rabivar/model.hpp"
#include "rabivar/variational.hpp"

namespace rabivar {

enum class SolveMethod { variational, fixed_point, grwa, exact };
enum class SweepAxis { g, Omega, epsilon };
enum class SweepOutput { energy, mean_photon, sz_correlation, sigma_x, lambda };

inline const char* method_name(SolveMethod m) {
    switch (m) {
        case SolveMethod::variational: return "variational";
        case SolveMethod::fixed_point: return "fixed-point";
        case SolveMethod::grwa: return "grwa";
        case SolveMethod::exact: return "exact";
    }
    return "?";
}

inline const char* axis_name(SweepAxis a) {
    switch (a) {
        case SweepAxis::g: return "g";
        case SweepAxis::Omega: return "Omega";
        case SweepAxis::epsilon: return "epsilon";
    }
    return "?";
}

inline const char* output_name(SweepOutput o) {
    switch (o) {
        case SweepOutput::energy: return "energy";
        case SweepOutput::mean_photon: return "mean_photon";
        case SweepOutput::sz_correlation: return "sz_correlation";
        case SweepOutput::sigma_x: return "sigma_x";
        case SweepOutput::lambda: return "lambda";
    }
    return "?";
}

inline std::optional<SolveMethod> parse_method(const std::string& s) {
    if (s == "variational") return SolveMethod::variational;
    if (s == "fixed-point") return SolveMethod::fixed_point;
    if (s == "grwa") return SolveMethod::grwa;
    if (s == "exact") return SolveMethod::exact;
    return std::nullopt;
}

inline std::optional<SweepAxis> parse_axis(const std::string& s) {
    if (s == "g") return SweepAxis::g;
    if (s == "Omega") return SweepAxis::Omega;
    if (s == "epsilon") return SweepAxis::epsilon;
    return std::nullopt;
}

inline std::optional<SweepOutput> parse_output(const std::string& s) {
    if (s == "energy") return SweepOutput::energy;
    if (s == "mean_photon") return SweepOutput::mean_photon;
    if (s == "sz_correlation") return SweepOutput::sz_correlation;
    if (s == "sigma_x") return SweepOutput::sigma_x;
    if (s == "lambda") return SweepOutput::lambda;
    return std::nullopt;
}

struct SweepRange {
    double start = 0.0;
    double stop = 1.0;
    int points = 201;  // linear spacing
};

struct SweepSpec {
    SweepAxis axis = SweepAxis::g;
    SweepRange range;
    ModelParams fixed;  // the axis field is overwritten per row
    std::vector<SolveMethod> methods{SolveMethod::variational, SolveMethod::grwa,
                                     SolveMethod::exact};
    std::vector<SweepOutput> outputs{SweepOutput::energy};
    SolveOptions solve_options;
    TruncationPolicy truncation;
    std::vector<std::string> comments;  // extra provenance lines for the CSV header

    void validate() const {
        if (!(range.start < range.stop)) {
            throw std::invalid_argument("SweepSpec: range start must be < stop");
        }
        if (!std::isfinite(range.start) || !std::isfinite(range.stop)) {
            throw std::invalid_argument("SweepSpec: range must be finite");
        }
        if (range.points < 2) throw std::invalid_argument("SweepSpec: points must be >= 2");
        if (methods.empty()) throw std::invalid_argument("SweepSpec: methods must be non-empty");
        if (outputs.empty()) throw std::invalid_argument("SweepSpec: outputs must be non-empty");
        fixed.validate();
        truncation.validate();
    }
};

struct SweepRow {
    double axis_value = 0.0;
    std::vector<double> cells;  // aligned with SweepTable::columns
    std::string regime;         // "I" / "II" / "III"
};

struct SweepTable {
    std::vector<std::string> columns;  // "method.output" names, axis and regime excluded
    std::vector<SweepRow> rows;
};

inline ModelParams with_axis_value(const ModelParams& fixed, SweepAxis axis, double value) {
    ModelParams p = fixed;
    switch (axis) {
        case SweepAxis::g: p.g = value; break;
        case SweepAxis::Omega: p.Omega = value; break;
        case SweepAxis::epsilon: p.epsilon = value; break;
    }
    p.validate();
    return p;
}

namespace detail {

// Column list: methods x outputs, minus the undefined exact.lambda cell
// (exact diagonalization has no displacement parameter).
inline bool column_defined(SolveMethod m, SweepOutput o) {
    return !(m == SolveMethod::exact && o == SweepOutput::lambda);
}

inline SweepRow evaluate_row(const SweepSpec& spec, double axis_value) {
    const ModelParams p = with_axis_value(spec.fixed, spec.axis, axis_value);
    SweepRow row;
    row.axis_value = axis_value;
    row.regime = regime_label(classify_regime(p).case_label);
    for (const SolveMethod m : spec.methods) {
        std::optional<VariationalSolution> vs;
        std::optional<ExactSolution> es;
        if (m == SolveMethod::exact) {
            es = ground_state(p, spec.truncation);
        } else if (m == SolveMethod::variational) {
            vs = solve_numeric(p, spec.solve_options);
        } else if (m == SolveMethod::fixed_point) {
            vs = solve_fixed_point(p);
        } else {
            vs = solve_grwa(p);
        }
        for (const SweepOutput o : spec.outputs) {
            if (!column_defined(m, o)) continue;
            const double energy = es ? es->energy : vs->energy;
            const Observables& obs = es ? es->observables : vs->observables;
            switch (o) {
                case SweepOutput::energy: row.cells.push_back(energy); break;
                case SweepOutput::mean_photon: row.cells.push_back(obs.mean_photon); break;
                case SweepOutput::sz_correlation: row.cells.push_back(obs.sz_correlation); break;
                case SweepOutput::sigma_x: row.cells.push_back(obs.sigma_x); break;
                case SweepOutput::lambda: row.cells.push_back(vs->lambda); break;
            }
        }
    }
    return row;
}

inline int sweep_thread_count(int rows) {
    int t = static_cast<int>(std::thread::hardware_concurrency());
    if (t < 1) t = 1;
    if (const char* env = std::getenv("RABI_VAR_THREADS")) {
        char* end = nullptr;
        const long cap = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && cap >= 1) t = std::min<long>(t, cap);
    }
    return std::clamp(t, 1, std::max(rows, 1));
}

}  // namespace detail

// Evaluate the whole grid. Rows may be computed concurrently (capped by
// RABI_VAR_THREADS) but the table is always in axis order, so results do not
// depend on the thread count. A failing solve aborts the sweep with the row
// index and axis value attached.
inline SweepTable run_sweep(const SweepSpec& spec) {
    spec.validate();
    SweepTable table;
    for (const SolveMethod m : spec.methods) {
        for (const SweepOutput o : spec.outputs) {
            if (detail::column_defined(m, o)) {
                table.columns.push_back(std::string(method_name(m)) + "." + output_name(o));
            }
        }
    }

    const int rows = spec.range.points;
    table.rows.resize(rows);
    std::vector<std::string> failures(rows);

    const int nthreads = detail::sweep_thread_count(rows);
    const auto worker = [&](int first) {
        for (int i = first; i < rows; i += nthreads) {
            const double t = static_cast<double>(i) / (rows - 1);
            const double x = std::lerp(spec.range.start, spec.range.stop, t);
            try {
                table.rows[i] = detail::evaluate_row(spec, x);
            } catch (const std::exception& e) {
                failures[i] = e.what();
            }
        }
    };
    if (nthreads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(nthreads);
        for (int k = 0; k < nthreads; ++k) pool.emplace_back(worker, k);
        for (auto& th : pool) th.join();
    }

    for (int i = 0; i < rows; ++i) {
        if (!failures[i].empty()) {
            std::ostringstream msg;
            msg << "sweep row " << i << " (" << axis_name(spec.axis) << "="
                << std::lerp(spec.range.start, spec.range.stop,
                             static_cast<double>(i) / (rows - 1))
                << "): " << failures[i];
            throw std::runtime_error(msg.str());
        }
    }
    return table;
}

namespace detail {

inline std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

// Shortest representation that still round-trips; used in comment lines.
inline std::string format_compact(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.15g", v);
    if (std::strtod(buf, nullptr) == v) return buf;
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace detail

// CSV: '#' comment header with provenance, then one header row naming columns
// as method.output, then the data. '.' decimal separator, comma delimiter,
// Unix newlines, 17 significant digits. Byte-identical for identical specs.
inline void write_csv(const SweepSpec& spec, const SweepTable& table, std::ostream& os) {
    os << "# rabivar sweep\n";
    for (const std::string& line : spec.comments) os << "# " << line << "\n";
    os << "# axis: " << axis_name(spec.axis) << " start: " << detail::format_compact(spec.range.start)
       << " stop: " << detail::format_compact(spec.range.stop) << " points: " << spec.range.points
       << " spacing: linear\n";
    os << "# fixed:";
    if (spec.axis != SweepAxis::g) os << " g=" << detail::format_compact(spec.fixed.g);
    if (spec.axis != SweepAxis::Omega) os << " Omega=" << detail::format_compact(spec.fixed.Omega);
    if (spec.axis != SweepAxis::epsilon)
        os << " epsilon=" << detail::format_compact(spec.fixed.epsilon);
    os << " omega=" << detail::format_compact(spec.fixed.omega) << "\n";

    os << axis_name(spec.axis);
    for (const std::string& c : table.columns) os << "," << c;
    os << ",regime\n";
    for (const SweepRow& row : table.rows) {
        os << detail::format_double(row.axis_value);
        for (const double v : row.cells) os << "," << detail::format_double(v);
        os << "," << row.regime << "\n";
    }
}

inline void write_csv_file(const SweepSpec& spec, const SweepTable& table,
                           const std::string& path) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("write_csv_file: cannot open '" + path + "' for writing");
    write_csv(spec, table, os);
    os.flush();
    if (!os) throw std::runtime_error("write_csv_file: write failed for '" + path + "'");
}

// ------------------------------ figure presets ------------------------------

struct FigurePreset {
    const char* id;
    SweepAxis axis;
    double Omega;    // fixed value (ignored when axis == Omega)
    double epsilon;  // fixed value (ignored when axis == epsilon)
    double g;        // fixed value (ignored when axis == g)
    SweepOutput output;
    const char* caption;  // fixed parameters, as printed in the figure caption
};

// All presets use omega = 1 and the three-curve comparison
// variational / grwa / exact. Default axis windows: g in [0, 1],
// Omega in [0.1, 6], epsilon in [0, 3].
inline const std::vector<FigurePreset>& figure_presets() {
    static const std::vector<FigurePreset> presets = {
        {"fig1a", SweepAxis::g, 0.5, 0.1, 0.0, SweepOutput::energy, "epsilon=0.1, Omega=0.5"},
        {"fig1b", SweepAxis::g, 5.0, 0.1, 0.0, SweepOutput::energy, "epsilon=0.1, Omega=5"},
        {"fig1c", SweepAxis::Omega, 0.0, 0.5, 0.5, SweepOutput::energy, "epsilon=0.5, g=0.5"},
        {"fig1d", SweepAxis::epsilon, 5.0, 0.0, 0.2, SweepOutput::energy, "g=0.2, Omega=5"},
        {"fig2a", SweepAxis::g, 5.0, 0.1, 0.0, SweepOutput::mean_photon, "epsilon=0.1, Omega=5"},
        {"fig2b", SweepAxis::g, 5.0, 0.1, 0.0, SweepOutput::sz_correlation, "epsilon=0.1, Omega=5"},
        {"fig2c", SweepAxis::Omega, 0.0, 0.1, 0.1, SweepOutput::mean_photon, "epsilon=0.1, g=0.1"},
        {"fig2d", SweepAxis::Omega, 0.0, 0.1, 0.1, SweepOutput::sz_correlation, "epsilon=0.1, g=0.1"},
        {"fig2e", SweepAxis::epsilon, 0.1, 0.0, 0.2, SweepOutput::mean_photon, "g=0.2, Omega=0.1"},
        {"fig2f", SweepAxis::epsilon, 0.1, 0.0, 0.2, SweepOutput::sz_correlation, "g=0.2, Omega=0.1"},
        {"fig3a", SweepAxis::g, 0.5, 0.1, 0.0, SweepOutput::sigma_x, "epsilon=0.1, Omega=0.5"},
        {"fig3b", SweepAxis::g, 5.0, 0.1, 0.0, SweepOutput::sigma_x, "epsilon=0.1, Omega=5"},
        {"fig3c", SweepAxis::Omega, 0.0, 0.1, 0.2, SweepOutput::sigma_x, "epsilon=0.1, g=0.2"},
        {"fig3d", SweepAxis::epsilon, 0.1, 0.0, 0.5, SweepOutput::sigma_x, "g=0.5, Omega=0.1"},
        {"fig4a", SweepAxis::g, 1.0, 0.1, 0.0, SweepOutput::energy, "epsilon=0.1, Omega=1"},
        {"fig4b", SweepAxis::g, 2.0, 2.0, 0.0, SweepOutput::energy, "epsilon=2, Omega=2"},
    };
    return presets;
}

inline SweepRange default_axis_range(SweepAxis axis) {
    switch (axis) {
        case SweepAxis::g: return {0.0, 1.0, 201};
        case SweepAxis::Omega: return {0.1, 6.0, 201};
        case SweepAxis::epsilon: return {0.0, 3.0, 201};
    }
    return {0.0, 1.0, 201};
}

// Sweep spec reproducing one figure panel. Throws std::invalid_argument for
// an unknown id.
inline SweepSpec figure_spec(const std::string& id) {
    for (const FigurePreset& f : figure_presets()) {
        if (id == f.id) {
            SweepSpec spec;
            spec.axis = f.axis;
            spec.range = default_axis_range(f.axis);
            spec.fixed = ModelParams(1.0, f.Omega, f.epsilon, f.g);
            spec.methods = {SolveMethod::variational, SolveMethod::grwa, SolveMethod::exact};
            spec.outputs = {f.output};
            spec.comments = {std::string("figure: ") + f.id, std::string("caption: ") + f.caption,
                             "omega: 1 (assumed; captions quote only Omega, epsilon, g)"};
            return spec;
        }
    }
    throw std::invalid_argument("figure_spec: unknown figure id '" + id + "'");
}

}  // namespace rabivar
