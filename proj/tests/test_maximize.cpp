#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "test_util.hpp"
#include "tolfit/maximize.hpp"
#include "tolfit/tol.hpp"

using namespace tolfit;

namespace {

IntervalSystem segment_system(double eta = 0.0) {
    IntervalMatrix a(2, 2);
    a.at(0, 0) = Interval(-1, 1);
    a.at(0, 1) = Interval(-1, 1);
    a.at(1, 0) = Interval(1, 1);
    a.at(1, 1) = Interval(-1, -1);
    return IntervalSystem(std::move(a), {Interval(-1, 1), Interval(1, 1 + eta)});
}

IntervalSystem measured_system() {
    IntervalMatrix a(3, 2);
    a.at(0, 0) = Interval(98, 100);
    a.at(0, 1) = Interval(99, 101);
    a.at(1, 0) = Interval(97, 99);
    a.at(1, 1) = Interval(98, 100);
    a.at(2, 0) = Interval(96, 98);
    a.at(2, 1) = Interval(97, 99);
    return IntervalSystem(
        std::move(a),
        {Interval(190, 210), Interval(200, 220), Interval(190, 210)});
}

IntervalSystem wide_system() {
    IntervalMatrix a(2, 3);
    a.at(0, 0) = Interval(98, 100);
    a.at(0, 1) = Interval(97, 99);
    a.at(0, 2) = Interval(96, 98);
    a.at(1, 0) = Interval(99, 101);
    a.at(1, 1) = Interval(98, 100);
    a.at(1, 2) = Interval(97, 99);
    return IntervalSystem(std::move(a),
                          {Interval(190, 210), Interval(200, 220)});
}

IntervalSystem identity_system() {
    IntervalMatrix a(2, 2);
    a.at(0, 0) = Interval(1, 1);
    a.at(0, 1) = Interval(0, 0);
    a.at(1, 0) = Interval(0, 0);
    a.at(1, 1) = Interval(1, 1);
    return IntervalSystem(std::move(a), {Interval(-1, 1), Interval(-1, 1)});
}

}  // namespace

TEST_CASE("measured 3x2 system: both methods find the known maximum") {
    const IntervalSystem sys = measured_system();
    const double expected = 380.0 / 199.0;  // = 1.9095 to paper precision

    const FitResult exact = maximize_tol_exact(sys);
    CHECK(exact.method == FitMethod::exact_oracle);
    CHECK(exact.converged);
    CHECK_FALSE(exact.near_degenerate);
    CHECK(std::abs(exact.max_tol - expected) <= 1e-9);
    CHECK(std::abs(exact.x_hat[0] - 0.0) <= 1e-9);
    CHECK(std::abs(exact.x_hat[1] - 410.0 / 199.0) <= 1e-9);

    const FitResult ascent = maximize_tol(sys);
    CHECK(ascent.method == FitMethod::ascent);
    CHECK(ascent.converged);
    CHECK(std::abs(ascent.max_tol - expected) <= 1e-6);
    CHECK(std::abs(ascent.x_hat[0]) <= 1e-2);
    CHECK(std::abs(ascent.x_hat[1] - 2.0603) <= 1e-2);

    // The reported value is the functional at the reported point.
    CHECK(std::abs(tol(sys, ascent.x_hat).value - ascent.max_tol) <= 1e-12);
}

TEST_CASE("wide 2x3 system: ascent reproduces the reference estimate") {
    const IntervalSystem sys = wide_system();
    const FitResult fit = maximize_tol(sys);
    CHECK(std::abs(fit.max_tol - 3.9698) <= 1e-3);
    CHECK(std::abs(fit.x_hat[0] - 2.0603) <= 1e-2);
    CHECK(std::abs(fit.x_hat[1]) <= 1e-2);
    CHECK(std::abs(fit.x_hat[2]) <= 1e-2);

    const FitResult exact = maximize_tol_exact(sys);
    CHECK(std::abs(exact.max_tol - 790.0 / 199.0) <= 1e-9);
    CHECK(std::abs(fit.max_tol - exact.max_tol) <= 1e-6);
}

TEST_CASE("identity point system peaks at the origin") {
    const IntervalSystem sys = identity_system();
    const FitResult exact = maximize_tol_exact(sys);
    CHECK(exact.max_tol == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(exact.x_hat[0]) <= 1e-9);
    CHECK(std::abs(exact.x_hat[1]) <= 1e-9);

    const FitResult ascent = maximize_tol(sys);
    CHECK(std::abs(ascent.max_tol - 1.0) <= 1e-9);
}

TEST_CASE("segment system has zero maximum for every widening") {
    for (const double eta : {0.0, 0.1, 1.0}) {
        const IntervalSystem sys = segment_system(eta);
        const FitResult exact = maximize_tol_exact(sys);
        CHECK(exact.max_tol == 0.0);
        CHECK(tol(sys, exact.x_hat).value == 0.0);

        const FitResult ascent = maximize_tol(sys);
        CHECK(std::abs(ascent.max_tol) <= 1e-9);
    }
    // The whole optimum segment is flagged: several orthants attain the
    // maximum at well-separated points.
    CHECK(maximize_tol_exact(segment_system()).near_degenerate);
}

TEST_CASE("random 2x2 systems agree with a dense grid search") {
    auto rng = testutil::make_rng(41);
    for (int k = 0; k < 3; ++k) {
        // The hidden solution lives in [-2, 2]^2, and the slopes are bounded
        // by the coefficient magnitudes, so a 2e-3 grid over [-4, 4] pins the
        // maximum well within 1e-2.
        const IntervalSystem sys = testutil::random_nonempty_system(rng, 3, 2);
        const FitResult exact = maximize_tol_exact(sys);
        const double grid = testutil::grid_max_tol_2d(sys, -4.0, 4.0, 2e-3);
        CHECK(grid <= exact.max_tol + 1e-9);
        CHECK(exact.max_tol - grid <= 1e-2);
    }
}

TEST_CASE("ascent matches the exact oracle on random small systems") {
    auto rng = testutil::make_rng(42);
    for (int k = 0; k < 50; ++k) {
        const std::size_t n = 1 + k % 3;
        const std::size_t m = 1 + k % 5;
        const IntervalSystem sys = (k % 2 == 0)
                                       ? testutil::random_nonempty_system(rng, m, n)
                                       : testutil::random_system(rng, m, n);
        const FitResult exact = maximize_tol_exact(sys);
        const FitResult ascent = maximize_tol(sys);
        CHECK(std::abs(exact.max_tol - ascent.max_tol) <= 1e-6);
    }
}

TEST_CASE("contracting by the maximum drives the maximum to zero") {
    auto rng = testutil::make_rng(43);
    int done = 0;
    while (done < 10) {
        const IntervalSystem sys = testutil::random_nonempty_system(rng, 3, 2);
        const FitResult fit = maximize_tol_exact(sys);
        REQUIRE(fit.max_tol > 0.0);
        double min_rad = std::numeric_limits<double>::infinity();
        for (const Interval& bi : sys.b) min_rad = std::min(min_rad, rad(bi));
        if (fit.max_tol > min_rad) continue;  // contraction must stay valid

        const IntervalSystem squeezed = contract_rhs(sys, fit.max_tol);
        CHECK(std::abs(maximize_tol_exact(squeezed).max_tol) <= 1e-6);
        // The original argmax still attains the new (zero) maximum.
        CHECK(std::abs(tol(squeezed, fit.x_hat).value) <= 1e-9);
        ++done;
    }

    const IntervalSystem sys16 = measured_system();
    const FitResult fit16 = maximize_tol_exact(sys16);
    const IntervalSystem squeezed16 = contract_rhs(sys16, fit16.max_tol);
    CHECK(std::abs(maximize_tol_exact(squeezed16).max_tol) <= 1e-6);
}

TEST_CASE("shifting the right-hand side shifts the maximum") {
    auto rng = testutil::make_rng(44);
    for (int k = 0; k < 10; ++k) {
        const IntervalSystem sys = testutil::random_system(rng, 3, 2);
        const FitResult base = maximize_tol_exact(sys);
        for (const double c : {0.5, 2.0}) {
            const FitResult shifted = maximize_tol_exact(shift_rhs(sys, c));
            CHECK(std::abs(shifted.max_tol - base.max_tol - c) <= 1e-8);
        }
    }
    // Also holds for the iterative method.
    const IntervalSystem sys = measured_system();
    const double base = maximize_tol(sys).max_tol;
    const double shifted = maximize_tol(shift_rhs(sys, 1.0)).max_tol;
    CHECK(std::abs(shifted - base - 1.0) <= 1e-6);
}

TEST_CASE("best-so-far history is monotone") {
    SolverConfig cfg;
    cfg.record_history = true;
    const FitResult fit = maximize_tol(measured_system(), cfg);
    REQUIRE(!fit.best_history.empty());
    for (std::size_t i = 1; i < fit.best_history.size(); ++i)
        CHECK(fit.best_history[i] >= fit.best_history[i - 1]);
    CHECK(fit.best_history.back() == doctest::Approx(fit.max_tol));
}

TEST_CASE("iteration cap trips the converged flag") {
    SolverConfig cfg;
    cfg.max_iters = 5;
    const FitResult fit = maximize_tol(measured_system(), cfg);
    CHECK_FALSE(fit.converged);
    CHECK(fit.iterations <= 5 + 1);
}

TEST_CASE("explicit start points are honored and validated") {
    SolverConfig cfg;
    cfg.start = {1.0, 2.0};
    const FitResult fit = maximize_tol(measured_system(), cfg);
    CHECK(std::abs(fit.max_tol - 380.0 / 199.0) <= 1e-6);

    cfg.start = {1.0};
    CHECK_THROWS_AS(maximize_tol(measured_system(), cfg),
                    std::invalid_argument);
}

TEST_CASE("exact oracle dimension limit") {
    IntervalMatrix a(1, 13);
    for (std::size_t j = 0; j < 13; ++j) a.at(0, j) = Interval(0, 1);
    const IntervalSystem sys(std::move(a), {Interval(-1, 1)});
    CHECK_THROWS_AS(maximize_tol_exact(sys), std::invalid_argument);
}

TEST_CASE("membership of the estimate when the maximum is nonnegative") {
    auto rng = testutil::make_rng(45);
    for (int k = 0; k < 20; ++k) {
        const IntervalSystem sys = testutil::random_nonempty_system(rng, 4, 2);
        const FitResult fit = maximize_tol_exact(sys);
        REQUIRE(fit.max_tol >= 0.0);
        // Nonnegative maximum puts the estimate inside the tolerable set.
        CHECK(tol(sys, fit.x_hat).value >= -1e-12);
    }
}

TEST_CASE("zero is a supergradient at the maximum") {
    auto rng = testutil::make_rng(46);
    const IntervalSystem sys = measured_system();
    const FitResult fit = maximize_tol_exact(sys);
    for (int k = 0; k < 50; ++k) {
        std::vector<double> x = fit.x_hat;
        for (double& v : x) v += testutil::uniform(rng, -1e-4, 1e-4);
        CHECK(tol(sys, x).value <= fit.max_tol + 1e-12);
    }
}
