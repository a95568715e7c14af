#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <sstream>
#include <string>

#include "rabivar/sweep.hpp"

using namespace rabivar;
using Catch::Matchers::ContainsSubstring;
using Catch::Matchers::WithinAbs;

namespace {

std::string csv_string(const SweepSpec& spec) {
    std::ostringstream os;
    write_csv(spec, run_sweep(spec), os);
    return os.str();
}

}  // namespace

TEST_CASE("two-point grwa lambda sweep", "[sweep]") {
    SweepSpec spec;
    spec.axis = SweepAxis::g;
    spec.range = {0.0, 1.0, 2};
    spec.fixed = ModelParams(1.0, 0.5, 0.1, 0.0);
    spec.methods = {SolveMethod::grwa};
    spec.outputs = {SweepOutput::lambda};
    const SweepTable t = run_sweep(spec);
    REQUIRE(t.columns.size() == 1);
    CHECK(t.columns[0] == "grwa.lambda");
    REQUIRE(t.rows.size() == 2);
    CHECK(t.rows[0].cells[0] == 0.0);
    CHECK(t.rows[1].cells[0] == 1.0);
}

TEST_CASE("identical specs write byte-identical CSV", "[sweep]") {
    SweepSpec spec = figure_spec("fig1a");
    spec.range.points = 9;
    const std::string a = csv_string(spec);
    const std::string b = csv_string(spec);
    CHECK(a == b);
    CHECK_FALSE(a.empty());
}

TEST_CASE("thread count does not change the table", "[sweep]") {
    SweepSpec spec = figure_spec("fig3a");
    spec.range.points = 7;
    setenv("RABI_VAR_THREADS", "1", 1);
    const std::string serial = csv_string(spec);
    setenv("RABI_VAR_THREADS", "3", 1);
    const std::string parallel = csv_string(spec);
    unsetenv("RABI_VAR_THREADS");
    CHECK(serial == parallel);
}

TEST_CASE("exact energy decreases along a bias sweep", "[sweep]") {
    SweepSpec spec;
    spec.axis = SweepAxis::epsilon;
    spec.range = {0.0, 3.0, 11};
    spec.fixed = ModelParams(1.0, 0.5, 0.0, 0.3);
    spec.methods = {SolveMethod::exact};
    spec.outputs = {SweepOutput::energy};
    const SweepTable t = run_sweep(spec);
    for (std::size_t i = 1; i < t.rows.size(); ++i) {
        CHECK(t.rows[i].cells[0] < t.rows[i - 1].cells[0]);
    }
}

TEST_CASE("CSV format contract", "[sweep]") {
    SweepSpec spec = figure_spec("fig1a");
    spec.range.points = 5;
    const std::string csv = csv_string(spec);

    // provenance comments, including the exact caption parameters
    CHECK_THAT(csv, ContainsSubstring("# figure: fig1a"));
    CHECK_THAT(csv, ContainsSubstring("# caption: epsilon=0.1, Omega=0.5"));
    CHECK_THAT(csv, ContainsSubstring("# axis: g"));
    // header row: axis, method.output columns, regime
    CHECK_THAT(csv, ContainsSubstring(
                        "g,variational.energy,grwa.energy,exact.energy,regime\n"));
    // 17-significant-digit values: at g=0 every method gives -sqrt(0.26)/2
    CHECK_THAT(csv, ContainsSubstring("\n0,-0.25495097567963926,-0.25495097567963926,"));
    // no CRLF
    CHECK(csv.find('\r') == std::string::npos);
}

TEST_CASE("figure presets", "[sweep]") {
    CHECK_THROWS_AS(figure_spec("fig9z"), std::invalid_argument);
    CHECK(figure_presets().size() == 16);

    const SweepSpec f1c = figure_spec("fig1c");
    CHECK(f1c.axis == SweepAxis::Omega);
    CHECK(f1c.fixed.epsilon == 0.5);
    CHECK(f1c.fixed.g == 0.5);
    CHECK(f1c.fixed.omega == 1.0);
    CHECK(f1c.range.start == 0.1);
    CHECK(f1c.range.stop == 6.0);
    CHECK(f1c.outputs == std::vector<SweepOutput>{SweepOutput::energy});

    const SweepSpec f2f = figure_spec("fig2f");
    CHECK(f2f.axis == SweepAxis::epsilon);
    CHECK(f2f.fixed.Omega == 0.1);
    CHECK(f2f.fixed.g == 0.2);
    CHECK(f2f.outputs == std::vector<SweepOutput>{SweepOutput::sz_correlation});

    const SweepSpec f4b = figure_spec("fig4b");
    CHECK(f4b.axis == SweepAxis::g);
    CHECK(f4b.fixed.epsilon == 2.0);
    CHECK(f4b.fixed.Omega == 2.0);
}

TEST_CASE("fig1a endpoint: all methods coincide at g=0", "[sweep]") {
    SweepSpec spec = figure_spec("fig1a");
    spec.range.points = 5;
    const SweepTable t = run_sweep(spec);
    const SweepRow& row0 = t.rows[0];
    CHECK(row0.axis_value == 0.0);
    const double expected = -0.5 * std::sqrt(0.26);
    for (const double cell : row0.cells) {
        CHECK_THAT(cell, WithinAbs(expected, 1e-12));
    }
}

TEST_CASE("undefined exact.lambda column is skipped", "[sweep]") {
    SweepSpec spec;
    spec.axis = SweepAxis::g;
    spec.range = {0.0, 0.5, 3};
    spec.fixed = ModelParams(1.0, 0.5, 0.1, 0.0);
    spec.methods = {SolveMethod::variational, SolveMethod::exact};
    spec.outputs = {SweepOutput::energy, SweepOutput::lambda};
    const SweepTable t = run_sweep(spec);
    REQUIRE(t.columns.size() == 3);
    CHECK(t.columns[0] == "variational.energy");
    CHECK(t.columns[1] == "variational.lambda");
    CHECK(t.columns[2] == "exact.energy");
    for (const SweepRow& row : t.rows) CHECK(row.cells.size() == 3);
}

TEST_CASE("spec validation", "[sweep]") {
    SweepSpec spec;
    spec.range = {1.0, 0.0, 11};
    CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
    spec.range = {0.0, 1.0, 1};
    CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
    spec.range = {0.0, 1.0, 11};
    spec.methods.clear();
    CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
    spec = SweepSpec{};
    spec.outputs.clear();
    CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
}

TEST_CASE("failed solves abort with a row-indexed error", "[sweep]") {
    SweepSpec spec;
    spec.axis = SweepAxis::g;
    spec.range = {0.8, 1.0, 3};
    spec.fixed = ModelParams(1.0, 0.5, 0.1, 0.0);
    spec.methods = {SolveMethod::exact};
    spec.outputs = {SweepOutput::energy};
    spec.truncation.n_start = 4;
    spec.truncation.n_max = 4;
    spec.truncation.energy_tol = 1e-30;
    try {
        run_sweep(spec);
        FAIL("expected a row-indexed error");
    } catch (const std::runtime_error& e) {
        CHECK_THAT(e.what(), ContainsSubstring("sweep row 0"));
        CHECK_THAT(e.what(), ContainsSubstring("g=0.8"));
    }
}

TEST_CASE("regime column follows the classification", "[sweep]") {
    SweepSpec spec = figure_spec("fig4b");  // epsilon=2, Omega=2: crosses into Case III
    spec.range.points = 11;
    spec.methods = {SolveMethod::grwa};
    const SweepTable t = run_sweep(spec);
    CHECK(t.rows.front().regime == "II");   // g = 0
    CHECK(t.rows.back().regime == "III");   // g = 1 > 0.5*sqrt(2)
}
