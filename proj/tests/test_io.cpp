#include <cmath>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "test_util.hpp"
#include "tolfit/conditioning.hpp"
#include "tolfit/dataset.hpp"
#include "tolfit/maximize.hpp"
#include "tolfit/report.hpp"
#include "tolfit/svg.hpp"
#include "tolfit/variability.hpp"

using namespace tolfit;

namespace {

const std::filesystem::path kDataDir = TOLFIT_DATA_DIR;

bool same_system(const IntervalSystem& a, const IntervalSystem& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        if (!(a.b[i] == b.b[i])) return false;
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (!(a.A.at(i, j) == b.A.at(i, j))) return false;
    }
    return true;
}

std::size_t count_occurrences(const std::string& text,
                              const std::string& needle) {
    std::size_t count = 0;
    for (std::size_t pos = text.find(needle); pos != std::string::npos;
         pos = text.find(needle, pos + needle.size()))
        ++count;
    return count;
}

Report sample_report() {
    Report r;
    r.m = 3;
    r.n = 2;
    r.max_tol = 380.0 / 199.0;
    r.x_hat = {0.0, 410.0 / 199.0};
    r.converged = true;
    r.method = "exact";
    r.iterations = 4;
    r.boundedness = "all_columns_interval";
    r.min_cond = 103.82916972228054;
    r.cond_seed = 42;
    r.b_hat_norm = std::sqrt(124100.0);
    r.ive = 1.6398713890105876;
    r.abs_ive = r.ive;
    r.rve = 1.12;
    r.sqrt_factor_dim = 2;
    HullReport hull;
    hull.box = {Interval(-0.962, 3.0227), Interval(-0.932, 3.0127)};
    hull.rad_inf = 1.99235;
    hull.rad_2 = 2.8168;
    r.hull = hull;
    r.timing.fit_ms = 1.25;
    r.timing.total_ms = 40.0;
    return r;
}

}  // namespace

TEST_CASE("csv and json files describe the same dataset") {
    const IntervalSystem from_json = load_dataset(kDataDir / "sys16.json");
    const IntervalSystem from_csv = load_dataset(kDataDir / "sys16.csv");
    REQUIRE(from_json.rows() == 3);
    REQUIRE(from_json.cols() == 2);
    CHECK(same_system(from_json, from_csv));

    // The whole pipeline is deterministic, so both inputs must produce
    // bitwise identical numbers.
    const FitResult fa = maximize_tol_exact(from_json);
    const FitResult fb = maximize_tol_exact(from_csv);
    CHECK(fa.max_tol == fb.max_tol);
    CHECK(fa.x_hat == fb.x_hat);

    const CondResult ca = min_cond(from_json.A);
    const CondResult cb = min_cond(from_csv.A);
    CHECK(ca.min_cond == cb.min_cond);

    CHECK(variability(from_json, fa, ca).ive ==
          variability(from_csv, fb, cb).ive);
}

TEST_CASE("dataset serialization round-trips exactly") {
    auto rng = testutil::make_rng(81);
    for (int k = 0; k < 10; ++k) {
        const IntervalSystem sys =
            testutil::random_system(rng, 1 + k % 4, 1 + (k / 2) % 3);

        std::istringstream csv(dataset_to_csv(sys));
        CHECK(same_system(sys, parse_dataset_csv(csv)));

        CHECK(same_system(sys, parse_dataset_json(dataset_to_json(sys))));
    }
}

TEST_CASE("csv parse errors carry line numbers") {
    const auto fail_line = [](const std::string& text) {
        std::istringstream in(text);
        try {
            parse_dataset_csv(in);
        } catch (const ParseError& e) {
            return e.line();
        }
        return static_cast<std::size_t>(-1);
    };

    CHECK(fail_line("a1_lo,a1_hi,b_lo\n") == 1);                 // odd header
    CHECK(fail_line("a1_lo,a1_hi,c_lo,c_hi\n0,1,0,2\n") == 1);   // wrong names
    CHECK(fail_line("a1_lo,a1_hi,b_lo,b_hi\n1,2,3\n") == 2);     // short row
    CHECK(fail_line("a1_lo,a1_hi,b_lo,b_hi\n1,x,0,1\n") == 2);   // bad number
    CHECK(fail_line("a1_lo,a1_hi,b_lo,b_hi\n2,1,0,1\n") == 2);   // lo > hi
    CHECK(fail_line("") == 1);                                   // no header
    CHECK(fail_line("a1_lo,a1_hi,b_lo,b_hi\n") == 1);            // no rows

    // Blank lines are skipped but still counted.
    CHECK(fail_line("a1_lo,a1_hi,b_lo,b_hi\n\n1,x,0,1\n") == 3);

    // Header matching ignores case, and blank separators are fine.
    std::istringstream ok("A1_LO,A1_HI,B_LO,B_HI\n\n0,1,0,2\n\n");
    const IntervalSystem sys = parse_dataset_csv(ok);
    CHECK(sys.rows() == 1);
    CHECK(sys.A.at(0, 0) == Interval(0, 1));

    // The what() string names the line too.
    std::istringstream bad("a1_lo,a1_hi,b_lo,b_hi\n1,x,0,1\n");
    try {
        parse_dataset_csv(bad);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).rfind("line 2: ", 0) == 0);
    }
}

TEST_CASE("json parse errors") {
    const auto fail_line = [](const std::string& text) {
        try {
            parse_dataset_json(text);
        } catch (const ParseError& e) {
            return e.line();
        }
        return static_cast<std::size_t>(-1);
    };

    // Structural problems have no useful line, so it is 0.
    CHECK(fail_line("[1,2]") == 0);
    CHECK(fail_line("{\"A\": [[[0,1]]]}") == 0);
    CHECK(fail_line("{\"A\": [[[0,1]]], \"b\": [[0,1],[0,2]]}") == 0);
    CHECK(fail_line("{\"A\": [[[0,1]],[[0,1],[0,1]]], \"b\": [[0,1],[0,1]]}") ==
          0);
    CHECK(fail_line("{\"A\": [[[1,0]]], \"b\": [[0,1]]}") == 0);
    CHECK(fail_line("{\"A\": [[[0,1]]], \"b\": [[1,0]]}") == 0);

    // Syntax errors do get a line.
    CHECK(fail_line("{") == 1);
    CHECK(fail_line("{\n  \"A\": [[[0,1]]],\n  !\n}") == 3);
}

TEST_CASE("dataset loading dispatches on the extension") {
    CHECK(load_dataset(kDataDir / "sys18.json").cols() == 3);

    CHECK_THROWS_AS(load_dataset(kDataDir / "does-not-exist.json"), ParseError);

    const std::filesystem::path bad =
        std::filesystem::temp_directory_path() / "tolfit-io-test.txt";
    std::ofstream(bad) << "not a dataset\n";
    try {
        load_dataset(bad);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("unsupported dataset extension") !=
              std::string::npos);
    }
    std::filesystem::remove(bad);
}

TEST_CASE("synthetic diagonal family") {
    const IntervalSystem sys = diagonal_benchmark_system(3, 10.0, 2.5);
    REQUIRE(sys.rows() == 3);
    REQUIRE(sys.cols() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(sys.b[i] == Interval(1, 10));
        for (std::size_t j = 0; j < 3; ++j)
            CHECK(sys.A.at(i, j) ==
                  (i == j ? Interval::point(2.5) : Interval(0, 2)));
    }
    CHECK_THROWS_AS(diagonal_benchmark_system(0, 10.0, 2.0),
                    std::invalid_argument);
}

TEST_CASE("report json round-trips exactly") {
    const Report r = sample_report();
    const std::string text = report_to_json(r);
    const Report back = report_from_json(text);
    CHECK(same_results(r, back));
    CHECK(report_to_json(back) == text);

    // Timing is carried along but not part of equality.
    Report timed = back;
    timed.timing.fit_ms += 100.0;
    CHECK(same_results(r, timed));

    Report changed = back;
    changed.converged = false;
    CHECK_FALSE(same_results(r, changed));

    Report no_hull = r;
    no_hull.hull.reset();
    CHECK_FALSE(same_results(r, no_hull));
    const Report no_hull_back = report_from_json(report_to_json(no_hull));
    CHECK(!no_hull_back.hull.has_value());
    CHECK(same_results(no_hull, no_hull_back));
}

TEST_CASE("non-finite report values are encoded as strings") {
    Report r = sample_report();
    r.ive = std::numeric_limits<double>::infinity();
    r.abs_ive = r.ive;
    r.rve = -std::numeric_limits<double>::infinity();
    r.min_cond = std::numeric_limits<double>::quiet_NaN();

    const std::string text = report_to_json(r);
    CHECK(text.find("\"inf\"") != std::string::npos);
    CHECK(text.find("\"-inf\"") != std::string::npos);
    CHECK(text.find("\"nan\"") != std::string::npos);

    const Report back = report_from_json(text);
    CHECK(std::isinf(back.ive));
    CHECK(back.ive > 0.0);
    CHECK(back.rve < 0.0);
    CHECK(std::isnan(back.min_cond));
    CHECK(same_results(r, back));  // nan compares equal to itself here

    const std::string csv = report_to_csv(r);
    CHECK(csv.find("ive,inf\n") != std::string::npos);
    CHECK(csv.find("rve,-inf\n") != std::string::npos);
    CHECK(csv.find("min_cond,nan\n") != std::string::npos);
}

TEST_CASE("report csv lists every field") {
    const std::string csv = report_to_csv(sample_report());
    CHECK(csv.rfind("key,value\n", 0) == 0);
    for (const char* key :
         {"\nm,", "\nn,", "\nmax_tol,", "\nx_hat_0,", "\nx_hat_1,",
          "\nmethod,exact", "\nboundedness,all_columns_interval", "\nive,",
          "\nhull_0_lo,", "\nhull_1_hi,", "\nhull_rad_inf,", "\ntotal_ms,"})
        CHECK(csv.find(key) != std::string::npos);
}

TEST_CASE("plot rendering is deterministic") {
    Plot2dInput in;
    in.polygon = {{0, 0}, {2, 0}, {2, 1}, {0, 1}};
    in.x_hat = {{1.0, 0.5}};
    in.ive = 0.25;
    in.title = "demo";
    const std::string a = render_plot2d(in);
    const std::string b = render_plot2d(in);
    CHECK(a == b);
    CHECK(a.rfind("<svg ", 0) == 0);
    CHECK(a.find("</svg>\n") != std::string::npos);
    CHECK(a.find("<polygon") != std::string::npos);
    CHECK(a.find("<title>demo</title>") != std::string::npos);
    // One dashed rect around the estimate plus one in the legend.
    CHECK(count_occurrences(a, "stroke-dasharray") == 2);
}

TEST_CASE("plot without variability omits the estimate box") {
    Plot2dInput in;
    in.polygon = {{0, 0}, {2, 0}, {1, 2}};
    in.x_hat = {{1.0, 0.5}};
    in.ive = 0.0;
    const std::string svg = render_plot2d(in);
    // Only the legend sample remains dashed.
    CHECK(count_occurrences(svg, "stroke-dasharray") == 1);
    CHECK(svg.find("tolerable set") != std::string::npos);
}

TEST_CASE("empty and degenerate sets are annotated") {
    Plot2dInput empty;
    const std::string none = render_plot2d(empty);
    CHECK(none.find("tolerable solution set is empty") != std::string::npos);
    CHECK(none.find("<polygon") == std::string::npos);

    Plot2dInput segment;
    segment.polygon = {{0, -1}, {1, 0}};
    const std::string seg = render_plot2d(segment);
    CHECK(seg.find("(zero-area set)") != std::string::npos);
    CHECK(count_occurrences(seg, "<line") == 3);  // two axes plus the segment

    Plot2dInput point;
    point.polygon = {{0.5, 0.5}};
    const std::string pt = render_plot2d(point);
    CHECK(pt.find("(zero-area set)") != std::string::npos);
    CHECK(pt.find("<circle") != std::string::npos);
}
