#include <doctest.h>

#include <cmath>
#include <random>

#include "qd/dynamics.hpp"

using namespace qd;

namespace {

const BellDiagonalState kWorkbench{1.0, -0.6, 0.6};
const PauliChannel kPhase{ChannelKind::PhaseFlip, 1.0};
constexpr double kTStar = 0.2554128118829953; // (1/2) ln(1/0.6)

SweepConfig workbench_config(std::vector<double> xs, int steps = 401,
                             Method method = Method::ClosedForm) {
    return {kWorkbench, kPhase, std::move(xs), 2.0, steps, method};
}

std::vector<std::pair<double, double>> series_of(const std::vector<TrajectoryPoint>& pts,
                                                 int which, int x_index = 0) {
    std::vector<std::pair<double, double>> s;
    for (const auto& p : pts) {
        double v = 0.0;
        switch (which) {
        case 0: v = p.classical; break;
        case 1: v = p.discord; break;
        default: v = p.sqd[x_index]; break;
        }
        s.emplace_back(p.gamma_t, v);
    }
    return s;
}

} // namespace

TEST_CASE("workbench sweep endpoints") {
    const auto pts = sweep(workbench_config({0.5}));
    REQUIRE(pts.size() == 401);
    const auto& first = pts.front();
    CHECK(first.gamma_t == 0.0);
    CHECK(first.mutual_info == doctest::Approx(1.2780719051126376).epsilon(1e-9));
    CHECK(first.classical == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(first.discord == doctest::Approx(0.2780719051126376).epsilon(1e-9));
    CHECK(first.sqd[0] == doctest::Approx(1.1180134430958068).epsilon(1e-9));

    // asymptotically c -> (0, 0, 0.6), where I = C and D = 0
    const auto& last = pts.back();
    CHECK(last.discord < 0.02);
    const auto far = sweep({kWorkbench, kPhase, {0.5}, 10.0, 2, Method::ClosedForm}).back();
    CHECK(far.classical == doctest::Approx(0.2780719051126376).epsilon(1e-6));
    CHECK(std::abs(far.discord) < 1e-6);
}

TEST_CASE("steps = 2 evaluates exactly the endpoints") {
    const auto pts = sweep(workbench_config({0.5}, 2));
    REQUIRE(pts.size() == 2);
    CHECK(pts[0].gamma_t == 0.0);
    CHECK(pts[1].gamma_t == 2.0);
}

TEST_CASE("sweep rejects bad configs") {
    CHECK_THROWS_AS(sweep(workbench_config({0.5}, 1)), ValidationError);
    CHECK_THROWS_AS(sweep({{1.0, 1.0, 1.0}, kPhase, {0.5}, 2.0, 10, Method::ClosedForm}),
                    ValidationError);
}

TEST_CASE("closed-form and numeric sweeps agree pointwise") {
    const auto closed = sweep(workbench_config({0.5}, 9));
    const auto numeric = sweep(workbench_config({0.5}, 9, Method::Numeric));
    for (size_t i = 0; i < closed.size(); ++i) {
        CHECK(std::abs(closed[i].mutual_info - numeric[i].mutual_info) < 1e-6);
        CHECK(std::abs(closed[i].classical - numeric[i].classical) < 1e-6);
        CHECK(std::abs(closed[i].discord - numeric[i].discord) < 1e-6);
        CHECK(std::abs(closed[i].sqd[0] - numeric[i].sqd[0]) < 1e-6);
    }
}

TEST_CASE("analytic transition time") {
    SUBCASE("workbench under phase flip") {
        const auto t = transition_time_analytic(kWorkbench, kPhase);
        REQUIRE(t.has_value());
        CHECK(*t == doctest::Approx(kTStar).epsilon(1e-12));
    }
    SUBCASE("preserved component already maximal") {
        CHECK_FALSE(transition_time_analytic({0.3, -0.1, 0.6}, kPhase).has_value());
        CHECK_FALSE(transition_time_analytic(kWorkbench, {ChannelKind::BitFlip, 1.0}).has_value());
    }
    SUBCASE("zero preserved component never crosses") {
        CHECK_FALSE(transition_time_analytic({1.0, 0.0, 0.0}, kPhase).has_value());
    }
}

TEST_CASE("kink detection on the workbench sweep") {
    const auto pts = sweep(workbench_config({0.5, 1.0, 2.0}));
    const double grid_step = 2.0 / 400.0;

    SUBCASE("classical correlation kink") {
        const auto reports = detect_kink(series_of(pts, 0), 0.5, "classical");
        const auto& top = reports.front();
        CHECK(top.flagged);
        CHECK(std::abs(top.gamma_t_star - kTStar) <= grid_step);
        CHECK(top.slope_jump == doctest::Approx(1.2).epsilon(0.05));
    }
    SUBCASE("sqd at x = 0.5 stays below the default threshold") {
        const auto reports = detect_kink(series_of(pts, 2, 0), 0.5, "sqd");
        CHECK_FALSE(reports.front().flagged);
        CHECK(reports.front().slope_jump == doctest::Approx(0.2277874621).epsilon(0.25));
        // a lower threshold flags the same kink
        const auto relaxed = detect_kink(series_of(pts, 2, 0), 0.1, "sqd");
        CHECK(relaxed.front().flagged);
    }
    SUBCASE("sqd kinks at x = 1 and x = 2 are flagged and co-located") {
        const auto c_top = detect_kink(series_of(pts, 0), 0.5, "c").front();
        for (int xi : {1, 2}) {
            const auto top = detect_kink(series_of(pts, 2, xi), 0.5, "sqd").front();
            CHECK(top.flagged);
            CHECK(std::abs(top.gamma_t_star - c_top.gamma_t_star) <= grid_step);
        }
    }
    SUBCASE("kink growth across x") {
        const double j0 = detect_kink(series_of(pts, 2, 0), 0.5, "a").front().slope_jump;
        const double j1 = detect_kink(series_of(pts, 2, 1), 0.5, "b").front().slope_jump;
        const double j2 = detect_kink(series_of(pts, 2, 2), 0.5, "c").front().slope_jump;
        CHECK(j0 < j1);
        CHECK(j1 < j2);
    }
    SUBCASE("transition time coincides with the detected classical kink") {
        const auto t = transition_time_analytic(kWorkbench, kPhase);
        const auto top = detect_kink(series_of(pts, 0), 0.5, "c").front();
        CHECK(std::abs(top.gamma_t_star - *t) <= grid_step);
    }
}

TEST_CASE("smooth exponential series has no flagged kinks") {
    std::vector<std::pair<double, double>> series;
    for (int i = 0; i <= 400; ++i) {
        const double t = i * 0.005;
        series.emplace_back(t, std::exp(-2.0 * t));
    }
    for (const auto& r : detect_kink(series, 0.5, "smooth")) CHECK_FALSE(r.flagged);
}

TEST_CASE("detect_kink rejects too-coarse grids") {
    std::vector<std::pair<double, double>> series = {{0, 1}, {1, 2}, {2, 3}, {3, 4}};
    CHECK_THROWS_AS(detect_kink(series, 0.5, "short"), ValidationError);
}

TEST_CASE("monotone decay of sqd and constancy of classical after the kink") {
    const auto pts = sweep(workbench_config({0.5, 1.0, 2.0}));
    for (size_t xi = 0; xi < 3; ++xi)
        for (size_t i = 1; i < pts.size(); ++i)
            CHECK(pts[i].sqd[xi] <= pts[i - 1].sqd[xi] + 1e-6);
    for (const auto& p : pts)
        if (p.gamma_t > kTStar + 1e-9)
            CHECK(p.classical == doctest::Approx(0.2780719051126376).epsilon(1e-9));
}

TEST_CASE("sqd never drops below the discord along the sweep") {
    const auto pts = sweep(workbench_config({0.5, 1.0, 2.0}));
    for (const auto& p : pts)
        for (double v : p.sqd) CHECK(v >= p.discord - 1e-9);
}
